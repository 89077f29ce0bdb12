use crate::algebra::{Elem, FiniteAlgebra};

/// Which of the standard identities an algebra satisfies.
///
/// Each flag comes with the first failing tuple, when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `x ∧ ¬x = 0`.
    pub wcon: bool,
    /// `¬¬x = x`.
    pub involutive: bool,
    /// `(x → y) ∨ (y → x) = 1`.
    pub semilinear: bool,
    pub chain: bool,
    pub nontrivial: bool,
    pub wcon_failure: Option<Elem>,
    pub involutive_failure: Option<Elem>,
    pub semilinear_failure: Option<(Elem, Elem)>,
}

pub fn classify(a: &FiniteAlgebra) -> Classification {
    let wcon_failure = a.elements().find(|&x| a.meet(x, a.neg(x)) != a.zero());
    let involutive_failure = a.elements().find(|&x| a.neg(a.neg(x)) != x);
    let semilinear_failure = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .find(|&(x, y)| a.join(a.implies(x, y), a.implies(y, x)) != a.one());
    Classification {
        wcon: wcon_failure.is_none(),
        involutive: involutive_failure.is_none(),
        semilinear: semilinear_failure.is_none(),
        chain: a.is_chain(),
        nontrivial: a.is_nontrivial(),
        wcon_failure,
        involutive_failure,
        semilinear_failure,
    }
}
