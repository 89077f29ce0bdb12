use super::{DecisionError, ScanOptions};
use crate::algebra::{Assignment, Elem, FiniteAlgebra, Program};
use crate::term::Term;

/// Outcome of a SAT, SATPOS or TAUT query.
///
/// For SAT and SATPOS the witness is the first satisfying assignment; for
/// TAUT it is the first counterexample, present exactly when `holds` is
/// false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Assignment>,
}

/// Number of assignments of `vars` variables over `size` elements, or
/// `None` on overflow.
pub fn assignment_count(size: usize, vars: usize) -> Option<u64> {
    (size as u64).checked_pow(vars.try_into().ok()?)
}

pub(super) fn check_budget(size: usize, vars: usize, opts: &ScanOptions) -> Result<u64, DecisionError> {
    match assignment_count(size, vars) {
        Some(n) if n <= opts.budget => Ok(n),
        needed => Err(DecisionError::BudgetExceeded {
            needed,
            budget: opts.budget,
        }),
    }
}

/// First assignment, in lexicographic order with the smallest variable most
/// significant, at which `t` takes a value accepted by `hit`.
pub fn find_assignment(
    alg: &FiniteAlgebra,
    t: &Term,
    opts: &ScanOptions,
    hit: impl Fn(Elem) -> bool,
) -> Result<Option<Assignment>, DecisionError> {
    let prog = Program::compile(t);
    let k = prog.vars().len();
    check_budget(alg.size(), k, opts)?;
    let n = alg.size();
    let mut values = vec![0; k];
    let mut stack = Vec::new();
    loop {
        if hit(prog.run(alg, &values, &mut stack)) {
            let pairs = prog.vars().iter().copied().zip(values.iter().copied());
            return Ok(Some(Assignment::from_pairs(pairs)));
        }
        // odometer step, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            values[i] += 1;
            if values[i] < n {
                break;
            }
            values[i] = 0;
        }
    }
}

/// Some assignment sends `t` to `1`.
pub fn sat(alg: &FiniteAlgebra, t: &Term, opts: &ScanOptions) -> Result<Verdict, DecisionError> {
    let one = alg.one();
    let w = find_assignment(alg, t, opts, |v| v == one)?;
    Ok(Verdict {
        holds: w.is_some(),
        witness: w,
    })
}

/// Some assignment sends `t` to a value other than `0`.
pub fn satpos(alg: &FiniteAlgebra, t: &Term, opts: &ScanOptions) -> Result<Verdict, DecisionError> {
    let zero = alg.zero();
    let w = find_assignment(alg, t, opts, |v| v != zero)?;
    Ok(Verdict {
        holds: w.is_some(),
        witness: w,
    })
}

/// Every assignment sends `t` to `1`.
pub fn taut(alg: &FiniteAlgebra, t: &Term, opts: &ScanOptions) -> Result<Verdict, DecisionError> {
    let one = alg.one();
    let w = find_assignment(alg, t, opts, |v| v != one)?;
    Ok(Verdict {
        holds: w.is_none(),
        witness: w,
    })
}
