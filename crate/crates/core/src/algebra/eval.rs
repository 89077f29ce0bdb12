use super::{Assignment, Elem, FiniteAlgebra};
use crate::term::{BinOp, Term, Var};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{0} is not assigned")]
    Unassigned(Var),
}

pub(super) fn evaluate(alg: &FiniteAlgebra, t: &Term, e: &Assignment) -> Result<Elem, EvalError> {
    Ok(match t {
        Term::Var(v) => e.get(*v).ok_or(EvalError::Unassigned(*v))?,
        Term::Zero => alg.zero(),
        Term::One => alg.one(),
        _ => {
            let (op, l, r) = t.as_binary().unwrap();
            let a = evaluate(alg, l, e)?;
            let b = evaluate(alg, r, e)?;
            alg.op(op, a, b)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Instr {
    Slot(usize),
    Zero,
    One,
    Op(BinOp),
}

/// A term flattened into postfix form over dense variable slots, for
/// repeated evaluation inside assignment scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    code: Vec<Instr>,
    vars: Vec<Var>,
    depth: usize,
}

impl Program {
    /// Slot `i` holds the value of the `i`-th smallest variable of `t`.
    pub fn compile(t: &Term) -> Program {
        let vars: Vec<Var> = t.variables().into_iter().collect();
        let mut code = Vec::new();
        let depth = emit(t, &vars, &mut code);
        Program { code, vars, depth }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// `values[i]` is the value of `self.vars()[i]`.
    pub fn run(&self, alg: &FiniteAlgebra, values: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        stack.reserve(self.depth);
        for ins in &self.code {
            match *ins {
                Instr::Slot(i) => stack.push(values[i]),
                Instr::Zero => stack.push(alg.zero()),
                Instr::One => stack.push(alg.one()),
                Instr::Op(op) => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(alg.op(op, a, b));
                }
            }
        }
        stack.pop().unwrap()
    }
}

fn emit(t: &Term, vars: &[Var], code: &mut Vec<Instr>) -> usize {
    match t {
        Term::Var(v) => {
            code.push(Instr::Slot(vars.binary_search(v).unwrap()));
            1
        }
        Term::Zero => {
            code.push(Instr::Zero);
            1
        }
        Term::One => {
            code.push(Instr::One);
            1
        }
        _ => {
            let (op, l, r) = t.as_binary().unwrap();
            let dl = emit(l, vars, code);
            let dr = emit(r, vars, code);
            code.push(Instr::Op(op));
            dl.max(dr + 1)
        }
    }
}
