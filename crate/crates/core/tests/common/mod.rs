#![allow(dead_code)]

use flewsat::algebra::{Assignment, FiniteAlgebra};
use flewsat::term::{Term, Var};
use proptest::prelude::*;

/// Random terms over `x1..=x{vars}` with the given recursion depth.
pub fn term(vars: Var, depth: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => (1..=vars).prop_map(Term::var),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        (0..4usize, inner.clone(), inner).prop_map(|(op, l, r)| {
            Term::binary(flewsat::term::BinOp::ALL[op], l, r)
        })
    })
}

/// Every assignment of `vars` over `a`, in scan order.
pub fn assignments(a: &FiniteAlgebra, vars: &[Var]) -> Vec<Assignment> {
    let n = a.size();
    (0..n.pow(vars.len() as u32))
        .map(|mut p| {
            let mut e = Assignment::new();
            for &v in vars.iter().rev() {
                e.insert(v, p % n);
                p /= n;
            }
            e
        })
        .collect()
}

/// Algebras small enough for per-test exhaustive sweeps.
pub fn small_catalog() -> Vec<flewsat::zoo::CatalogEntry> {
    flewsat::zoo::catalog(12)
}
