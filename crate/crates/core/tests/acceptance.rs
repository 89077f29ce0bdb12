//! Acceptance suite: one `criterion N: pass|fail` line per criterion.
//! Exits nonzero if any criterion fails.

use flewsat::algebra::{Assignment, FiniteAlgebra};
use flewsat::decision::bounded::{Candidate, TermSpace};
use flewsat::decision::{self, ScanOptions};
use flewsat::forms::{self, CfForm, Clause, CvTerm, Literal, DEFAULT_MONOMIAL_BUDGET};
use flewsat::term::{parse, BinOp, Term};
use flewsat::zoo::{self, CatalogEntry, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

const MAX_CONNECTIVES: u32 = 7;
const MAX_PRODUCT: usize = 36;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn opts() -> ScanOptions {
    ScanOptions::default()
}

fn nontrivial(cat: &[CatalogEntry]) -> Vec<&CatalogEntry> {
    cat.iter().filter(|e| e.algebra.is_nontrivial()).collect()
}

fn criterion1(cat: &[CatalogEntry]) -> Outcome {
    let start = Instant::now();
    let invalid: Vec<&str> = cat
        .iter()
        .filter(|e| !e.algebra.tables().validate().passed())
        .map(|e| e.label.as_str())
        .collect();
    let l5 = zoo::lukasiewicz_chain(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut undetected = 0;
    for _ in 0..50 {
        let mut t = l5.tables().clone();
        let op = BinOp::ALL[rng.gen_range(0..4)];
        let (a, b) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let old = t.op(op, a, b);
        let new = (old + rng.gen_range(1..5)) % 5;
        t.set_entry(op, a, b, new);
        if t.validate().passed() {
            undetected += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        invalid.is_empty() && undetected == 0 && elapsed < Duration::from_secs(10),
        format!(
            "{} algebras, invalid {:?}, 50 mutations, undetected {undetected}, {elapsed:.2?}",
            cat.len(),
            invalid
        ),
    )
}

fn criterion2() -> Outcome {
    let l3 = zoo::lukasiewicz_chain(3).unwrap();
    let half = l3.element_by_name("1/2").unwrap();
    let v = decision::sat(&l3, &parse("x1 <-> ~x1").unwrap(), &opts()).unwrap();
    let witness_ok = v.holds && v.witness == Some(Assignment::from_pairs([(1, half)]));
    let contradiction = parse("x1 /\\ ~x1").unwrap();
    let pos = decision::satpos(&l3, &contradiction, &opts()).unwrap().holds;
    let full = decision::sat(&l3, &contradiction, &opts()).unwrap().holds;
    outcome(
        witness_ok && pos && !full,
        format!("sat witness x1=1/2: {witness_ok}, x1 /\\ ~x1 satpos {pos} sat {full}"),
    )
}

/// The four conditions: the identity, positive unsatisfiability of
/// `x1 /\ ~x1`, SATPOS = classical SAT and SAT = SATPOS on the bounded set.
/// The term scan stops once both set conditions are refuted.
fn wcon_conditions(a: &FiniteAlgebra) -> [bool; 4] {
    let c1 = decision::classify(a).wcon;
    let c2 = !decision::satpos(a, &parse("x1 /\\ ~x1").unwrap(), &opts()).unwrap().holds;
    let b = zoo::bool2();
    let mut space = TermSpace::new(&[a, &b], 2);
    let (mut c3, mut c4) = (true, true);
    let _ = space.visit(MAX_CONNECTIVES, |t: &Candidate<'_>| {
        let pos = t.satpos(0);
        if c3 && pos != t.sat(1) {
            c3 = false;
        }
        if c4 && pos != t.sat(0) {
            c4 = false;
        }
        if c3 || c4 {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    [c1, c2, c3, c4]
}

fn criterion3(cat: &[CatalogEntry]) -> Outcome {
    let start = Instant::now();
    let algebras = nontrivial(cat);
    let results: Vec<(&str, [bool; 4])> = algebras
        .par_iter()
        .map(|e| (e.label.as_str(), wcon_conditions(&e.algebra)))
        .collect();
    let disagree: Vec<String> = results
        .iter()
        .filter(|(_, c)| c.iter().any(|&x| x != c[0]))
        .map(|(l, c)| format!("{l} {c:?}"))
        .collect();
    let wcon = results.iter().filter(|(_, c)| c[0]).count();
    let elapsed = start.elapsed();
    outcome(
        disagree.is_empty() && elapsed < Duration::from_secs(300),
        format!(
            "{} nontrivial algebras ({wcon} weakly contractive), trivial algebra degenerate, disagreements {disagree:?}, {elapsed:.2?}",
            results.len()
        ),
    )
}

fn criterion4() -> Outcome {
    let mut chains = vec![("bool2".to_string(), zoo::bool2())];
    for k in 3..=8 {
        chains.push((format!("L{k}"), zoo::lukasiewicz_chain(k).unwrap()));
        chains.push((format!("G{k}"), zoo::godel_chain(k).unwrap()));
    }
    let mut disagree = Vec::new();
    for (label, a) in &chains {
        let r = decision::chain_criterion(a, &opts()).unwrap();
        if !r.agree() {
            disagree.push(label.clone());
        }
    }
    let chang = decision::komori_chain_criterion(1).unwrap().classical();
    let l3_hom = decision::hom_onto_bool(&zoo::lukasiewicz_chain(3).unwrap());
    outcome(
        disagree.is_empty() && chang && l3_hom.is_none(),
        format!(
            "{} chains, disagreements {disagree:?}, Chang classical {chang}, L3 hom {}",
            chains.len(),
            if l3_hom.is_none() { "none" } else { "found" }
        ),
    )
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let mut wrong = Vec::new();
    for n in 2..=6u32 {
        for m in 2..=12usize {
            let got = decision::finite_chain_containment(n, m).unwrap();
            if got != (m % n as usize == 0) {
                wrong.push((n, m));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        wrong.is_empty() && elapsed < Duration::from_secs(30),
        format!("55 pairs, mismatches {wrong:?}, {elapsed:.2?}"),
    )
}

fn sample_terms() -> Vec<CvTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..200).map(|_| forms::random_cv_term(&mut rng, 4, 10)).collect()
}

fn all_assignments(a: &FiniteAlgebra, vars: &[u32]) -> Vec<Assignment> {
    let n = a.size();
    let total = n.pow(vars.len() as u32);
    (0..total)
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

fn criterion6(cat: &[CatalogEntry], terms: &[CvTerm]) -> Outcome {
    let algebras: Vec<&CatalogEntry> = nontrivial(cat).into_iter().filter(|e| e.algebra.size() <= 6).collect();
    let failures: Vec<String> = terms
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let term = t.to_term();
            let classical = forms::classical_sat_cv(t, DEFAULT_MONOMIAL_BUDGET).unwrap().holds;
            let df = forms::cv_to_df(t, DEFAULT_MONOMIAL_BUDGET).unwrap().to_term();
            let vars = t.variables();
            let mut bad = Vec::new();
            for e in &algebras {
                let a = &e.algebra;
                let s = decision::sat(a, &term, &opts()).unwrap().holds;
                let p = decision::satpos(a, &term, &opts()).unwrap().holds;
                if !(s == p && p == classical) {
                    bad.push(format!("term {i} on {}: sat {s} satpos {p} classical {classical}", e.label));
                }
                if all_assignments(a, &vars)
                    .iter()
                    .any(|w| a.evaluate(&term, w).unwrap() != a.evaluate(&df, w).unwrap())
                {
                    bad.push(format!("term {i} on {}: df differs", e.label));
                }
            }
            bad
        })
        .collect();
    let sat = terms
        .iter()
        .filter(|t| forms::classical_sat_cv(t, DEFAULT_MONOMIAL_BUDGET).unwrap().holds)
        .count();
    outcome(
        failures.is_empty(),
        format!(
            "200 terms ({sat} classically satisfiable) x {} algebras, failures {:?}",
            algebras.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    let den: i64 = rng.gen_range(1..=1000);
    let num: i64 = rng.gen_range(0..=den);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn criterion7(terms: &[CvTerm]) -> Outcome {
    let failures: Vec<String> = terms
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(7_000 + i as u64);
            let vm = forms::vertex_max(t).unwrap();
            let mut bad = Vec::new();
            if !(vm.value.is_zero() || vm.value.is_one()) {
                bad.push(format!("term {i}: vertex max {}", vm.value));
            }
            let term = t.to_term();
            let vars = t.variables();
            for _ in 0..1000 {
                let e: BTreeMap<u32, Rational> = vars.iter().map(|&v| (v, random_rational(&mut rng))).collect();
                let value = zoo::standard_mv_eval(&term, &e).unwrap();
                if value > vm.value {
                    bad.push(format!("term {i}: {value} exceeds {}", vm.value));
                    break;
                }
            }
            bad
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("200 terms x 1000 assignments, failures {:?}", failures.iter().take(3).collect::<Vec<_>>()),
    )
}

/// CF terms over `x1, x2` with one or two clauses. A clause is a nonempty
/// set of the four literals; a two-clause term is an unordered pair.
fn small_cf_family() -> Vec<CfForm> {
    let lits = [Literal::pos(1), Literal::neg(1), Literal::pos(2), Literal::neg(2)];
    let clauses: Vec<Clause> = (1u8..16)
        .map(|mask| Clause((0..4).filter(|i| mask >> i & 1 == 1).map(|i| lits[i]).collect()))
        .collect();
    let mut out: Vec<CfForm> = clauses.iter().map(|c| CfForm(vec![c.clone()])).collect();
    for i in 0..clauses.len() {
        for j in i..clauses.len() {
            out.push(CfForm(vec![clauses[i].clone(), clauses[j].clone()]));
        }
    }
    out
}

/// Pairs where membership of the reduction in SATPOS∖SAT(L3) differs from
/// "phi1 classically satisfiable and phi2 not", with the first example.
fn dp_mismatches(alpha: &Term, family: &[CfForm]) -> (usize, Option<String>) {
    let l3 = zoo::lukasiewicz_chain(3).unwrap();
    let classical: Vec<bool> = family
        .iter()
        .map(|f| forms::classical_sat_cv(&f.to_cv(), DEFAULT_MONOMIAL_BUDGET).unwrap().holds)
        .collect();
    let bad: Vec<String> = (0..family.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let l3 = &l3;
            let classical = &classical;
            (0..family.len()).filter_map(move |j| {
                let t = forms::dp_reduce(alpha, &family[i], &family[j]).term;
                let pos = decision::satpos(l3, &t, &opts()).unwrap().holds;
                let s = decision::sat(l3, &t, &opts()).unwrap();
                let in_gap = pos && !s.holds;
                let expected = classical[i] && !classical[j];
                (in_gap != expected).then(|| {
                    let why = s.witness.map_or(String::new(), |w| format!(", sat witness {}", w.display(l3)));
                    format!("phi1 = {}, phi2 = {}: in gap {in_gap}, expected {expected}{why}", family[i].to_term(), family[j].to_term())
                })
            })
        })
        .collect();
    (bad.len(), bad.into_iter().next())
}

fn criterion8() -> (Outcome, String) {
    let start = Instant::now();
    let family = small_cf_family();
    let pairs = family.len() * family.len();
    let (bad, first) = dp_mismatches(&parse("x1 <-> ~x1").unwrap(), &family);
    let elapsed = start.elapsed();
    let main = outcome(
        bad == 0 && elapsed < Duration::from_secs(60),
        format!(
            "alpha = x1 <-> ~x1, {} CF terms, {pairs} pairs, mismatches {bad}{}, {elapsed:.2?}",
            family.len(),
            first.map_or(String::new(), |f| format!(", first: {f}"))
        ),
    );
    // x1 /\ ~x1 is positively but not fully satisfiable in L3.
    let (bad_alt, first_alt) = dp_mismatches(&parse("x1 /\\ ~x1").unwrap(), &family);
    let note = format!(
        "with alpha = x1 /\\ ~x1 (positively but not fully satisfiable in L3): {pairs} pairs, mismatches {bad_alt}{}",
        first_alt.map_or(String::new(), |f| format!(", first: {f}"))
    );
    (main, note)
}

const TAUTOLOGIES: [&str; 20] = [
    "x1 \\/ ~x1",
    "((x1 -> x2) -> x1) -> x1",
    "~(x1 /\\ x2) -> (~x1 \\/ ~x2)",
    "(~x1 \\/ ~x2) -> ~(x1 /\\ x2)",
    "~(x1 \\/ x2) <-> (~x1 /\\ ~x2)",
    "~(x1 /\\ x2) <-> (~x1 \\/ ~x2)",
    "~~x1 -> x1",
    "x1 -> ~~x1",
    "(x1 -> x2) \\/ (x2 -> x1)",
    "(~x2 -> ~x1) -> (x1 -> x2)",
    "(x1 -> x2) -> (~x2 -> ~x1)",
    "x1 -> (x2 -> x1)",
    "(x1 -> (x2 -> x3)) -> ((x1 -> x2) -> (x1 -> x3))",
    "(x1 /\\ x2) -> (x1 * x2)",
    "x1 -> x1 * x1",
    "((x1 -> x2) -> x2) -> (x1 \\/ x2)",
    "(~x1 -> x1) -> x1",
    "(x1 -> x2) -> (~x1 \\/ x2)",
    "(x1 \\/ x2) -> (~x1 -> x2)",
    "~(x1 <-> ~x1)",
];

fn criterion9(cat: &[CatalogEntry]) -> Outcome {
    let b = zoo::bool2();
    let terms: Vec<Term> = TAUTOLOGIES.iter().map(|s| parse(s).unwrap()).collect();
    let not_classical: Vec<&str> = TAUTOLOGIES
        .iter()
        .zip(&terms)
        .filter(|(_, t)| !decision::taut(&b, t, &opts()).unwrap().holds)
        .map(|(s, _)| *s)
        .collect();
    let wcon: Vec<&CatalogEntry> = cat.iter().filter(|e| decision::classify(&e.algebra).wcon).collect();
    let failures: Vec<String> = wcon
        .par_iter()
        .flat_map_iter(|e| {
            terms
                .iter()
                .filter(|t| !decision::taut(&e.algebra, &decision::glivenko(t), &opts()).unwrap().holds)
                .map(|t| format!("{} on {}", t, e.label))
                .collect::<Vec<_>>()
        })
        .collect();
    let g3 = zoo::godel_chain(3).unwrap();
    let fail_in_g3 = terms
        .iter()
        .filter(|t| !decision::taut(&g3, t, &opts()).unwrap().holds)
        .count();
    outcome(
        not_classical.is_empty() && failures.is_empty() && fail_in_g3 >= 1,
        format!(
            "20 classical tautologies (non-classical {not_classical:?}) x {} weakly contractive algebras, wrapped failures {:?}, unwrapped failures in G3 {fail_in_g3}",
            wcon.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion10() -> Outcome {
    let start = Instant::now();
    let l3 = zoo::lukasiewicz_chain(3).unwrap();
    let g3 = zoo::godel_chain(3).unwrap();
    let p = l3.product(&g3);
    let mut space = TermSpace::new(&[&p, &l3, &g3], 2);
    let mut visited = 0u64;
    let mut bad: Vec<Term> = Vec::new();
    let _ = space.visit(MAX_CONNECTIVES, |t| {
        visited += 1;
        let sat_ok = t.sat(0) == (t.sat(1) && t.sat(2));
        let pos_ok = t.satpos(0) == (t.satpos(1) || t.satpos(2));
        if !(sat_ok && pos_ok) && bad.len() < 3 {
            bad.push(t.term());
        }
        ControlFlow::Continue(())
    });
    let elapsed = start.elapsed();
    let stored: usize = space.level_sizes().iter().sum();
    outcome(
        bad.is_empty(),
        format!(
            "L3xG3, {stored} distinct stored tables, {visited} terms visited, counterexamples {:?}, {elapsed:.2?}",
            bad.iter().map(|t| t.to_string()).collect::<Vec<_>>()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let cat = zoo::catalog(MAX_PRODUCT);
    let terms = sample_terms();
    let mut all_pass = true;
    let mut report = |n: usize, o: Outcome| {
        all_pass &= o.pass;
        println!("criterion {n}: {} ({})", if o.pass { "pass" } else { "fail" }, o.detail);
    };
    report(1, criterion1(&cat));
    report(2, criterion2());
    report(3, criterion3(&cat));
    report(4, criterion4());
    report(5, criterion5());
    report(6, criterion6(&cat, &terms));
    report(7, criterion7(&terms));
    let (c8, note) = criterion8();
    report(8, c8);
    println!("note: criterion 8 {note}");
    report(9, criterion9(&cat));
    report(10, criterion10());
    println!("total time {:.2?}", start.elapsed());
    if !all_pass {
        std::process::exit(1);
    }
}
