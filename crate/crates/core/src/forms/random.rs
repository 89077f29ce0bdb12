use super::{CvTerm, Literal};
use crate::term::Var;
use rand::Rng;

/// A random `(·, ∨)`-term over `x1..=x{max_vars}` with between 1 and
/// `max_literals` literal occurrences.
pub fn random_cv_term(rng: &mut impl Rng, max_vars: Var, max_literals: usize) -> CvTerm {
    assert!(max_vars >= 1 && max_literals >= 1);
    let n = rng.gen_range(1..=max_literals);
    grow(rng, max_vars, n)
}

fn grow(rng: &mut impl Rng, max_vars: Var, literals: usize) -> CvTerm {
    if literals == 1 {
        let var = rng.gen_range(1..=max_vars);
        return CvTerm::Lit(if rng.gen_bool(0.5) {
            Literal::neg(var)
        } else {
            Literal::pos(var)
        });
    }
    let left = rng.gen_range(1..literals);
    let a = Box::new(grow(rng, max_vars, left));
    let b = Box::new(grow(rng, max_vars, literals - left));
    if rng.gen_bool(0.5) {
        CvTerm::Mult(a, b)
    } else {
        CvTerm::Join(a, b)
    }
}
