use crate::algebra::{Elem, FiniteAlgebra};
use crate::term::BinOp;

/// Largest carrier the subset-enumerating search accepts.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// A homomorphism onto the two-element Boolean algebra, given by its two
/// fibres: `zero_block` maps to `0`, `one_block` to `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPartition {
    pub zero_block: Vec<Elem>,
    pub one_block: Vec<Elem>,
}

impl HomPartition {
    fn from_mask(a: &FiniteAlgebra, one: &[bool]) -> Self {
        let (one_block, zero_block) = a.elements().partition(|&x| one[x]);
        HomPartition {
            zero_block,
            one_block,
        }
    }

    /// Re-checks the two-valued map against every operation and pair.
    pub fn verify(&self, a: &FiniteAlgebra) -> bool {
        let mut one = vec![false; a.size()];
        let mut seen = vec![false; a.size()];
        for &x in &self.one_block {
            if x >= a.size() || seen[x] {
                return false;
            }
            one[x] = true;
            seen[x] = true;
        }
        for &x in &self.zero_block {
            if x >= a.size() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        seen.iter().all(|&s| s) && is_homomorphism(a, &one)
    }
}

fn bool_op(op: BinOp, x: bool, y: bool) -> bool {
    match op {
        BinOp::Mult | BinOp::Meet => x && y,
        BinOp::Join => x || y,
        BinOp::Impl => !x || y,
    }
}

/// Whether `x ↦ one[x]` preserves the constants and all four operations.
fn is_homomorphism(a: &FiniteAlgebra, one: &[bool]) -> bool {
    if !one[a.one()] || one[a.zero()] {
        return false;
    }
    BinOp::ALL.iter().all(|&op| {
        a.elements()
            .all(|x| a.elements().all(|y| one[a.op(op, x, y)] == bool_op(op, one[x], one[y])))
    })
}

/// Searches for a homomorphism onto `2`.
///
/// The preimage of `1` under such a map is a filter, and in a finite
/// algebra every filter is `↑e` for the product `e` of its members, which
/// is idempotent. So the candidates are `↑e` for nonzero idempotents `e`,
/// tried in index order; the first that verifies is returned.
pub fn hom_onto_bool(a: &FiniteAlgebra) -> Option<HomPartition> {
    if !a.is_nontrivial() {
        return None;
    }
    a.elements()
        .filter(|&e| e != a.zero() && a.mult(e, e) == e)
        .map(|e| a.elements().map(|x| a.leq(e, x)).collect::<Vec<bool>>())
        .find(|one| is_homomorphism(a, one))
        .map(|one| HomPartition::from_mask(a, &one))
}

/// Tries every subset as the preimage of `1`, in increasing bitmask order.
/// `None` when the carrier exceeds [`EXHAUSTIVE_LIMIT`].
pub fn hom_onto_bool_exhaustive(a: &FiniteAlgebra) -> Option<Option<HomPartition>> {
    let n = a.size();
    if n > EXHAUSTIVE_LIMIT {
        return None;
    }
    if !a.is_nontrivial() {
        return Some(None);
    }
    let mut one = vec![false; n];
    for mask in 0u32..(1 << n) {
        for (x, slot) in one.iter_mut().enumerate() {
            *slot = mask >> x & 1 == 1;
        }
        if is_homomorphism(a, &one) {
            return Some(Some(HomPartition::from_mask(a, &one)));
        }
    }
    Some(None)
}
