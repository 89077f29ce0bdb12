use super::{bool2, distributive_lattices, godel_chain, heyting_from_lattice, lukasiewicz_chain, trivial};
use crate::algebra::FiniteAlgebra;

/// A named member of the test catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub algebra: FiniteAlgebra,
}

impl CatalogEntry {
    fn new(label: impl Into<String>, algebra: FiniteAlgebra) -> Self {
        CatalogEntry {
            label: label.into(),
            algebra,
        }
    }
}

/// `bool2`, `L3..L8`, `G3..G8`, the non-chain Heyting expansions of
/// distributive lattices with at most six elements, and the trivial algebra.
///
/// Chain lattices are left out of the Heyting family because their
/// expansions are exactly the Gödel chains.
pub fn base_algebras() -> Vec<CatalogEntry> {
    let mut out = vec![CatalogEntry::new("bool2", bool2())];
    for k in 3..=8 {
        out.push(CatalogEntry::new(format!("L{k}"), lukasiewicz_chain(k).unwrap()));
    }
    for k in 3..=8 {
        out.push(CatalogEntry::new(format!("G{k}"), godel_chain(k).unwrap()));
    }
    let mut per_size = [0u8; 7];
    for l in distributive_lattices(6) {
        let h = heyting_from_lattice(&l).expect("down-set lattices are distributive");
        if h.is_chain() {
            continue;
        }
        let n = h.size();
        let tag = (b'a' + per_size[n]) as char;
        per_size[n] += 1;
        out.push(CatalogEntry::new(format!("H{n}{tag}"), h));
    }
    out.push(CatalogEntry::new("T1", trivial()));
    out
}

/// The base algebras followed by every product `A x B` of nontrivial base
/// algebras (unordered, `A = B` allowed) with at most `max_product` elements.
pub fn catalog(max_product: usize) -> Vec<CatalogEntry> {
    let base = base_algebras();
    let factors: Vec<&CatalogEntry> = base.iter().filter(|e| e.algebra.is_nontrivial()).collect();
    let mut products = Vec::new();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.algebra.size() * b.algebra.size() <= max_product {
                products.push(CatalogEntry::new(
                    format!("{}x{}", a.label, b.label),
                    a.algebra.product(&b.algebra),
                ));
            }
        }
    }
    let mut out = base;
    out.extend(products);
    out
}
