use crate::algebra::format::LatticeTables;
use crate::algebra::{AlgebraTables, Elem, FiniteAlgebra};
use crate::term::BinOp;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeytingError {
    #[error("tables must be square with {0} rows")]
    Shape(usize),
    #[error("not a lattice: {law} fails at {witness:?}")]
    NotALattice {
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("lattice has no {0}")]
    Unbounded(&'static str),
    #[error("lattice is not distributive: a /\\ (b \\/ c) differs from (a /\\ b) \\/ (a /\\ c) at {witness:?}")]
    NotDistributive { witness: [Elem; 3] },
}

fn lattice_law_failure(l: &LatticeTables) -> Option<(&'static str, Vec<Elem>)> {
    let n = l.names.len();
    let m = |a: Elem, b: Elem| l.meet[a][b];
    let j = |a: Elem, b: Elem| l.join[a][b];
    for a in 0..n {
        if m(a, a) != a || j(a, a) != a {
            return Some(("idempotence", vec![a]));
        }
        for b in 0..n {
            if m(a, b) != m(b, a) || j(a, b) != j(b, a) {
                return Some(("commutativity", vec![a, b]));
            }
            if m(a, j(a, b)) != a || j(a, m(a, b)) != a {
                return Some(("absorption", vec![a, b]));
            }
            for c in 0..n {
                if m(m(a, b), c) != m(a, m(b, c)) || j(j(a, b), c) != j(a, j(b, c)) {
                    return Some(("associativity", vec![a, b, c]));
                }
            }
        }
    }
    None
}

/// Expands a finite distributive lattice to a Heyting algebra: `·` is `∧`
/// and `x → y` is the largest `z` with `z ∧ x <= y`.
pub fn heyting_from_lattice(l: &LatticeTables) -> Result<FiniteAlgebra, HeytingError> {
    let n = l.names.len();
    for t in [&l.meet, &l.join] {
        if t.len() != n || t.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(HeytingError::Shape(n));
        }
    }
    if let Some((law, witness)) = lattice_law_failure(l) {
        return Err(HeytingError::NotALattice { law, witness });
    }
    let leq = |a: Elem, b: Elem| l.meet[a][b] == a;
    let bottom = (0..n)
        .find(|&a| (0..n).all(|b| leq(a, b)))
        .ok_or(HeytingError::Unbounded("least element"))?;
    let top = (0..n)
        .find(|&a| (0..n).all(|b| leq(b, a)))
        .ok_or(HeytingError::Unbounded("greatest element"))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = l.meet[a][l.join[b][c]];
                let rhs = l.join[l.meet[a][b]][l.meet[a][c]];
                if lhs != rhs {
                    return Err(HeytingError::NotDistributive { witness: [a, b, c] });
                }
            }
        }
    }
    let relative_pseudocomplement = |x: Elem, y: Elem| -> Elem {
        let z = (0..n)
            .filter(|&z| leq(l.meet[z][x], y))
            .fold(bottom, |acc, z| l.join[acc][z]);
        debug_assert!(leq(l.meet[z][x], y));
        z
    };
    let tables = AlgebraTables::from_fn(l.names.clone(), bottom, top, |op, a, b| match op {
        BinOp::Mult | BinOp::Meet => l.meet[a][b],
        BinOp::Join => l.join[a][b],
        BinOp::Impl => relative_pseudocomplement(a, b),
    })
    .map_err(|_| HeytingError::Shape(n))?;
    Ok(tables
        .into_algebra()
        .expect("distributive lattices expand to Heyting algebras"))
}

/// Every distributive lattice with at most `max_size` elements, one per
/// isomorphism class, in order of size.
///
/// Lattices are built as down-set lattices of finite posets, so
/// distributivity holds by construction. The element order within each
/// lattice puts the bottom first (name `0`) and the top last (name `1`).
pub fn distributive_lattices(max_size: usize) -> Vec<LatticeTables> {
    let mut found: Vec<LatticeTables> = Vec::new();
    if max_size == 0 {
        return found;
    }
    // A poset with p points has at least p + 1 down-sets.
    for points in 0..max_size {
        let pairs: Vec<(usize, usize)> = (0..points)
            .flat_map(|i| (i + 1..points).map(move |j| (i, j)))
            .collect();
        // Every poset has a linear extension, so relations i < j with
        // i < j as indices cover all posets up to isomorphism.
        for mask in 0u64..(1u64 << pairs.len()) {
            let below = |i: usize, j: usize| {
                pairs
                    .iter()
                    .position(|&p| p == (i, j))
                    .is_some_and(|k| mask >> k & 1 == 1)
            };
            let transitive = (0..points).all(|i| {
                (0..points).all(|j| (0..points).all(|k| !(below(i, j) && below(j, k)) || below(i, k)))
            });
            if !transitive {
                continue;
            }
            let downsets: Vec<u32> = (0u32..(1u32 << points))
                .filter(|&s| {
                    (0..points).all(|j| s >> j & 1 == 0 || (0..j).all(|i| !below(i, j) || s >> i & 1 == 1))
                })
                .collect();
            if downsets.len() > max_size {
                continue;
            }
            let lattice = downset_lattice(downsets);
            if !found.iter().any(|l| isomorphic(l, &lattice)) {
                found.push(lattice);
            }
        }
    }
    found.sort_by_key(|l| l.names.len());
    found
}

fn downset_lattice(mut sets: Vec<u32>) -> LatticeTables {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    let n = sets.len();
    let index = |s: u32| sets.iter().position(|&t| t == s).unwrap();
    let names = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("e{i}"),
        })
        .collect();
    let table = |f: &dyn Fn(u32, u32) -> u32| -> Vec<Vec<Elem>> {
        sets.iter()
            .map(|&a| sets.iter().map(|&b| index(f(a, b))).collect())
            .collect()
    };
    LatticeTables {
        names,
        meet: table(&|a, b| a & b),
        join: table(&|a, b| a | b),
    }
}

fn isomorphic(a: &LatticeTables, b: &LatticeTables) -> bool {
    let n = a.names.len();
    if n != b.names.len() {
        return false;
    }
    let mut perm: Vec<Elem> = (0..n).collect();
    fn search(a: &LatticeTables, b: &LatticeTables, perm: &mut Vec<Elem>, k: usize) -> bool {
        let n = perm.len();
        if k == n {
            return (0..n).all(|x| (0..n).all(|y| perm[a.meet[x][y]] == b.meet[perm[x]][perm[y]]));
        }
        for i in k..n {
            perm.swap(k, i);
            if search(a, b, perm, k + 1) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    search(a, b, &mut perm, 0)
}
