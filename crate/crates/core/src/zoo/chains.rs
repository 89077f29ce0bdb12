use super::ZooError;
use crate::algebra::{AlgebraTables, Elem, FiniteAlgebra};
use crate::term::BinOp;

/// Name of `i/(k-1)` in lowest terms: `0`, `1/3`, `1/2`, ..., `1`.
pub(crate) fn fraction_name(i: usize, k: usize) -> String {
    let den = k - 1;
    if i == 0 {
        return "0".into();
    }
    if i == den {
        return "1".into();
    }
    let g = gcd(i, den);
    format!("{}/{}", i / g, den / g)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn chain(k: usize, op: impl Fn(BinOp, Elem, Elem) -> Elem) -> Result<FiniteAlgebra, ZooError> {
    if k < 2 {
        return Err(ZooError::ChainTooShort(k));
    }
    let names = (0..k).map(|i| fraction_name(i, k)).collect();
    let tables = AlgebraTables::from_fn(names, 0, k - 1, op).expect("chain tables are well formed");
    Ok(tables
        .into_algebra()
        .expect("chain constructors produce FLew-algebras"))
}

/// The k-element Łukasiewicz chain on `{0, 1/(k-1), ..., 1}`; element `i`
/// stands for `i/(k-1)`.
pub fn lukasiewicz_chain(k: usize) -> Result<FiniteAlgebra, ZooError> {
    let top = k.saturating_sub(1);
    chain(k, |op, a, b| match op {
        // max(0, a + b - 1) and min(1, 1 - a + b), scaled by k-1
        BinOp::Mult => (a + b).saturating_sub(top),
        BinOp::Impl => (top + b).saturating_sub(a).min(top),
        BinOp::Meet => a.min(b),
        BinOp::Join => a.max(b),
    })
}

/// The k-element Gödel chain: `·` is `min`, `a → b` is `1` if `a <= b`
/// and `b` otherwise.
pub fn godel_chain(k: usize) -> Result<FiniteAlgebra, ZooError> {
    let top = k.saturating_sub(1);
    chain(k, |op, a, b| match op {
        BinOp::Mult | BinOp::Meet => a.min(b),
        BinOp::Impl => {
            if a <= b {
                top
            } else {
                b
            }
        }
        BinOp::Join => a.max(b),
    })
}

/// The two-element Boolean algebra with elements `0` and `1`.
pub fn bool2() -> FiniteAlgebra {
    lukasiewicz_chain(2).unwrap()
}

/// The one-element algebra, where `0 = 1`.
pub fn trivial() -> FiniteAlgebra {
    AlgebraTables::from_fn(vec!["0".into()], 0, 0, |_, _, _| 0)
        .unwrap()
        .into_algebra()
        .unwrap()
}
