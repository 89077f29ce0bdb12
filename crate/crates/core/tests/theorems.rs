//! The characterization theorems, checked over catalog algebras and the
//! bounded term set (two variables, a connective bound) plus a seeded
//! sample of larger random terms.

mod common;

use flewsat::algebra::FiniteAlgebra;
use flewsat::decision::bounded::TermSpace;
use flewsat::decision::{self, ScanOptions};
use flewsat::forms;
use flewsat::term::{BinOp, Term};
use flewsat::zoo::{self, CatalogEntry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::ops::ControlFlow;

fn o() -> ScanOptions {
    ScanOptions::default()
}

fn nontrivial(max_product: usize) -> Vec<CatalogEntry> {
    zoo::catalog(max_product)
        .into_iter()
        .filter(|e| e.algebra.is_nontrivial())
        .collect()
}

fn random_term(rng: &mut impl Rng, vars: u32, connectives: usize) -> Term {
    if connectives == 0 {
        return match rng.gen_range(0..8) {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::var(rng.gen_range(1..=vars)),
        };
    }
    let left = rng.gen_range(0..connectives);
    let op = BinOp::ALL[rng.gen_range(0..4)];
    Term::binary(
        op,
        random_term(rng, vars, left),
        random_term(rng, vars, connectives - 1 - left),
    )
}

/// Seeded terms over three variables with 8 to 14 connectives.
fn larger_terms() -> Vec<Term> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..150)
        .map(|_| {
            let c = rng.gen_range(8..=14);
            random_term(&mut rng, 3, c)
        })
        .collect()
}

#[test]
fn classical_sat_below_sat_below_satpos() {
    let b = zoo::bool2();
    nontrivial(16).par_iter().for_each(|e| {
        let mut space = TermSpace::new(&[&e.algebra, &b], 2);
        let _ = space.visit(6, |t| {
            assert!(!t.sat(1) || t.sat(0), "{} on {}", t.term(), e.label);
            assert!(!t.sat(0) || t.satpos(0), "{} on {}", t.term(), e.label);
            ControlFlow::Continue(())
        });
    });
    let big = larger_terms();
    for e in nontrivial(9) {
        for t in &big {
            let classical = decision::sat(&b, t, &o()).unwrap().holds;
            let s = decision::sat(&e.algebra, t, &o()).unwrap().holds;
            let p = decision::satpos(&e.algebra, t, &o()).unwrap().holds;
            assert!(!classical || s, "{t} on {}", e.label);
            assert!(!s || p, "{t} on {}", e.label);
        }
    }
}

#[test]
fn positive_unsat_iff_negation_is_tautology() {
    for e in zoo::catalog(12) {
        let a = &e.algebra;
        let mut space = TermSpace::new(&[a], 2);
        let _ = space.visit(4, |t| {
            let term = t.term();
            let p = decision::satpos(a, &term, &o()).unwrap().holds;
            let n = decision::taut(a, &Term::neg(term.clone()), &o()).unwrap().holds;
            assert_eq!(!p, n, "{term} on {}", e.label);
            ControlFlow::Continue(())
        });
    }
    for e in nontrivial(9) {
        for t in larger_terms() {
            let p = decision::satpos(&e.algebra, &t, &o()).unwrap().holds;
            let n = decision::taut(&e.algebra, &Term::neg(t.clone()), &o()).unwrap().holds;
            assert_eq!(!p, n, "{t} on {}", e.label);
        }
    }
}

fn wcon_conditions(a: &FiniteAlgebra, bound: u32) -> [bool; 4] {
    let c1 = decision::classify(a).wcon;
    let x = Term::var(1);
    let c2 = !decision::satpos(a, &Term::meet(x.clone(), Term::neg(x)), &o()).unwrap().holds;
    let b = zoo::bool2();
    let mut space = TermSpace::new(&[a, &b], 2);
    let (mut c3, mut c4) = (true, true);
    let _ = space.visit(bound, |t| {
        c3 &= t.satpos(0) == t.sat(1);
        c4 &= t.sat(0) == t.satpos(0);
        ControlFlow::Continue(())
    });
    [c1, c2, c3, c4]
}

#[test]
fn weak_contraction_characterizations_agree() {
    let results: Vec<(String, [bool; 4])> = nontrivial(16)
        .par_iter()
        .map(|e| (e.label.clone(), wcon_conditions(&e.algebra, 5)))
        .collect();
    for (label, c) in &results {
        assert!(c.iter().all(|&x| x == c[0]), "{label}: {c:?}");
    }
    // both outcomes occur
    assert!(results.iter().any(|(_, c)| c[0]));
    assert!(results.iter().any(|(_, c)| !c[0]));
}

#[test]
fn chain_conditions_agree() {
    let mut chains = vec![zoo::bool2()];
    for k in 3..=8 {
        chains.push(zoo::lukasiewicz_chain(k).unwrap());
        chains.push(zoo::godel_chain(k).unwrap());
    }
    for a in &chains {
        let r = decision::chain_criterion(a, &o()).unwrap();
        assert!(r.agree(), "{r:?}");
        // Lukasiewicz chains beyond bool2 are the non-classical ones here
        let lukasiewicz = a.size() > 2 && decision::classify(a).involutive;
        assert_eq!(r.condition4(), !lukasiewicz);
    }
}

#[test]
fn classical_sat_iff_hom_onto_bool() {
    let b = zoo::bool2();
    let checked: Vec<(String, bool, bool)> = nontrivial(16)
        .par_iter()
        .map(|e| {
            let hom = decision::hom_onto_bool(&e.algebra).is_some();
            let mut space = TermSpace::new(&[&e.algebra, &b], 2);
            let mut leak = false;
            let _ = space.visit(6, |t| {
                if t.sat(0) && !t.sat(1) {
                    leak = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            (e.label.clone(), hom, !leak)
        })
        .collect();
    for (label, hom, classical) in &checked {
        assert_eq!(hom, classical, "{label}");
    }
    assert!(checked.iter().any(|c| c.1) && checked.iter().any(|c| !c.1));
}

#[test]
fn hom_search_matches_subset_enumeration() {
    for e in nontrivial(20) {
        let fast = decision::hom_onto_bool(&e.algebra);
        let slow = decision::hom_onto_bool_exhaustive(&e.algebra).unwrap();
        assert_eq!(fast.is_some(), slow.is_some(), "{}", e.label);
        for h in fast.iter().chain(slow.iter()) {
            assert!(h.verify(&e.algebra), "{}", e.label);
        }
    }
}

#[test]
fn glivenko_on_bounded_classical_tautologies() {
    let b = zoo::bool2();
    let wcon: Vec<CatalogEntry> = zoo::catalog(12)
        .into_iter()
        .filter(|e| decision::classify(&e.algebra).wcon)
        .collect();
    let mut space = TermSpace::new(&[&b], 2);
    let mut tautologies = Vec::new();
    let _ = space.visit(4, |t| {
        if t.taut(0) {
            tautologies.push(t.term());
        }
        ControlFlow::Continue(())
    });
    assert!(!tautologies.is_empty());
    for e in &wcon {
        for t in &tautologies {
            let wrapped = decision::glivenko(t);
            assert!(decision::taut(&e.algebra, &wrapped, &o()).unwrap().holds, "{t} on {}", e.label);
        }
    }
    // the translation is needed: excluded middle fails in G3
    let g3 = zoo::godel_chain(3).unwrap();
    let lem = flewsat::term::parse("x1 \\/ ~x1").unwrap();
    assert!(!decision::taut(&g3, &lem, &o()).unwrap().holds);
}

#[test]
fn bl_chain_sat_is_contained_in_finite_lukasiewicz_sat() {
    let ls: Vec<FiniteAlgebra> = (2..=8).map(|k| zoo::lukasiewicz_chain(k).unwrap()).collect();
    let mut chains: Vec<FiniteAlgebra> = (3..=8).map(|k| zoo::godel_chain(k).unwrap()).collect();
    chains.extend((3..=8).map(|k| zoo::lukasiewicz_chain(k).unwrap()));
    chains.par_iter().for_each(|a| {
        let mut list: Vec<&FiniteAlgebra> = vec![a];
        list.extend(ls.iter());
        let mut space = TermSpace::new(&list, 2);
        let _ = space.visit(5, |t| {
            if t.sat(0) {
                assert!((1..list.len()).any(|i| t.sat(i)), "{}", t.term());
            }
            ControlFlow::Continue(())
        });
    });
}

#[test]
fn product_sat_is_intersection_and_satpos_is_union() {
    let pairs = [
        (zoo::bool2(), zoo::lukasiewicz_chain(3).unwrap()),
        (zoo::godel_chain(3).unwrap(), zoo::lukasiewicz_chain(4).unwrap()),
        (zoo::lukasiewicz_chain(3).unwrap(), zoo::lukasiewicz_chain(4).unwrap()),
        (
            zoo::base_algebras().into_iter().find(|e| e.label == "H4a").unwrap().algebra,
            zoo::lukasiewicz_chain(3).unwrap(),
        ),
    ];
    for (a, b) in &pairs {
        let p = a.product(b);
        let mut space = TermSpace::new(&[&p, a, b], 2);
        let _ = space.visit(5, |t| {
            assert_eq!(t.sat(0), t.sat(1) && t.sat(2), "{}", t.term());
            assert_eq!(t.satpos(0), t.satpos(1) || t.satpos(2), "{}", t.term());
            ControlFlow::Continue(())
        });
    }
}

#[test]
fn fragment_collapse_on_random_cv_terms() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let algebras = nontrivial(12);
    for _ in 0..80 {
        let t = forms::random_cv_term(&mut rng, 3, 8);
        let term = t.to_term();
        let classical = forms::classical_sat_cv(&t, forms::DEFAULT_MONOMIAL_BUDGET).unwrap().holds;
        for e in &algebras {
            let s = decision::sat(&e.algebra, &term, &o()).unwrap().holds;
            let p = decision::satpos(&e.algebra, &term, &o()).unwrap().holds;
            assert_eq!((s, p), (classical, classical), "{term} on {}", e.label);
        }
    }
}

#[test]
fn dp_reduction_with_a_gap_term() {
    // alpha must be positively but not fully satisfiable
    let l3 = zoo::lukasiewicz_chain(3).unwrap();
    let alpha = flewsat::term::parse("x1 /\\ ~x1").unwrap();
    assert!(decision::satpos(&l3, &alpha, &o()).unwrap().holds);
    assert!(!decision::sat(&l3, &alpha, &o()).unwrap().holds);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cf = |rng: &mut ChaCha8Rng| {
        let clauses = rng.gen_range(1..=3);
        forms::CfForm(
            (0..clauses)
                .map(|_| {
                    let width = rng.gen_range(1..=2);
                    forms::Clause(
                        (0..width)
                            .map(|_| {
                                let v = rng.gen_range(1..=2);
                                if rng.gen_bool(0.5) {
                                    forms::Literal::neg(v)
                                } else {
                                    forms::Literal::pos(v)
                                }
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    for _ in 0..150 {
        let (p1, p2) = (cf(&mut rng), cf(&mut rng));
        let c1 = forms::classical_sat_cv(&p1.to_cv(), 1000).unwrap().holds;
        let c2 = forms::classical_sat_cv(&p2.to_cv(), 1000).unwrap().holds;
        let t = forms::dp_reduce(&alpha, &p1, &p2).term;
        let gap = decision::satpos(&l3, &t, &o()).unwrap().holds && !decision::sat(&l3, &t, &o()).unwrap().holds;
        assert_eq!(gap, c1 && !c2, "{t}");
    }
}

#[test]
fn finite_chain_containment_is_divisibility() {
    for n in 2..=5 {
        for m in 2..=10 {
            assert_eq!(decision::finite_chain_containment(n, m).unwrap(), m % n as usize == 0);
        }
    }
}

#[test]
fn bounded_set_contains_small_syntactic_terms() {
    // Every syntactic term with at most two connectives over x1, x2 has its
    // table among the visited representatives.
    let l3 = zoo::lukasiewicz_chain(3).unwrap();
    let mut space = TermSpace::new(&[&l3], 2);
    let mut tables = std::collections::HashSet::new();
    let _ = space.visit(2, |t| {
        tables.insert((0..9).map(|p| t.value(0, p)).collect::<Vec<_>>());
        ControlFlow::Continue(())
    });
    let atoms = [Term::var(1), Term::var(2), Term::Zero, Term::One];
    let mut terms: Vec<Term> = atoms.to_vec();
    for op in BinOp::ALL {
        for a in &atoms {
            for b in &atoms {
                terms.push(Term::binary(op, a.clone(), b.clone()));
            }
        }
    }
    let one_connective = terms.clone();
    for op in BinOp::ALL {
        for a in &one_connective[4..] {
            for b in &atoms {
                terms.push(Term::binary(op, a.clone(), b.clone()));
                terms.push(Term::binary(op, b.clone(), a.clone()));
            }
        }
    }
    let points = common::assignments(&l3, &[1, 2]);
    for t in &terms {
        let table: Vec<usize> = points.iter().map(|e| l3.evaluate(t, e).unwrap()).collect();
        assert!(tables.contains(&table), "{t}");
    }
}
