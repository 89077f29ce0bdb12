use super::hom::{hom_onto_bool, HomPartition};
use super::scan::sat;
use super::{DecisionError, ScanOptions};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::term::Term;
use crate::zoo::{KomoriChain, LexPair};

/// The three equivalent conditions for classical satisfiability of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// `(¬x → x) ∧ ¬(x³)` has no satisfying assignment.
    pub witness_term_unsat: bool,
    pub witness_term_solution: Option<Elem>,
    /// An element with `¬x = x`.
    pub fixed_point: Option<Elem>,
    /// `x, y` with `x², y² > 0` but `(x·y)² = 0`.
    pub closure_failure: Option<(Elem, Elem)>,
    pub hom: Option<HomPartition>,
}

impl ChainReport {
    pub fn condition2(&self) -> bool {
        self.witness_term_unsat
    }

    pub fn condition3(&self) -> bool {
        self.fixed_point.is_none() && self.closure_failure.is_none()
    }

    pub fn condition4(&self) -> bool {
        self.hom.is_some()
    }

    pub fn agree(&self) -> bool {
        self.condition2() == self.condition3() && self.condition3() == self.condition4()
    }
}

/// `(¬x1 → x1) ∧ ¬(x1³)`.
pub fn chain_witness_term() -> Term {
    let x = Term::var(1);
    Term::meet(
        Term::implies(Term::neg(x.clone()), x.clone()),
        Term::neg(Term::power(x, 3)),
    )
}

/// Computes each condition by its own method: a SAT scan, a direct element
/// search, and the homomorphism search.
pub fn chain_criterion(a: &FiniteAlgebra, opts: &ScanOptions) -> Result<ChainReport, DecisionError> {
    if !a.is_nontrivial() {
        return Err(DecisionError::Trivial);
    }
    if !a.is_chain() {
        return Err(DecisionError::NotAChain);
    }
    let v = sat(a, &chain_witness_term(), opts)?;
    let positive_square = |x: Elem| a.mult(x, x) != a.zero();
    let fixed_point = a.elements().find(|&x| a.neg(x) == x);
    let closure_failure = a
        .elements()
        .filter(|&x| positive_square(x))
        .flat_map(|x| a.elements().filter(|&y| positive_square(y)).map(move |y| (x, y)))
        .find(|&(x, y)| !positive_square(a.mult(x, y)));
    Ok(ChainReport {
        witness_term_unsat: !v.holds,
        witness_term_solution: v.witness.and_then(|w| w.get(1)),
        fixed_point,
        closure_failure,
        hom: hom_onto_bool(a),
    })
}

/// Condition (3) of the chain theorem for a Komori chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KomoriReport {
    pub fixed_point: Option<LexPair>,
    pub closure_failure: Option<(LexPair, LexPair)>,
}

impl KomoriReport {
    /// Whether the chain has classical satisfiability.
    pub fn classical(&self) -> bool {
        self.fixed_point.is_none() && self.closure_failure.is_none()
    }
}

/// Decides condition (3) for `K_{n+1}`.
///
/// `¬x = x` means `2x = (n,0)`, solvable exactly by `(n/2, 0)` when `n` is
/// even. Squares are positive exactly on elements with `2a > n`, or
/// `2a = n` and `b > 0`, so a closure failure, if any, already shows up
/// among small representatives of each first coordinate.
pub fn komori_chain_criterion(n: i64) -> Result<KomoriReport, DecisionError> {
    let k = KomoriChain::new(n).map_err(|e| DecisionError::Parameter(e.to_string()))?;
    let fixed_point = if n % 2 == 0 {
        let x = LexPair::new(n / 2, 0);
        debug_assert_eq!(k.neg(&x).unwrap(), x);
        Some(x)
    } else {
        None
    };
    let zero = k.zero();
    let positive: Vec<LexPair> = k
        .sample(3)
        .into_iter()
        .filter(|x| k.mult(x, x).unwrap() != zero)
        .collect();
    let mut closure_failure = None;
    'outer: for x in &positive {
        for y in &positive {
            let p = k.mult(x, y).unwrap();
            if k.mult(&p, &p).unwrap() == zero {
                closure_failure = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    Ok(KomoriReport {
        fixed_point,
        closure_failure,
    })
}
