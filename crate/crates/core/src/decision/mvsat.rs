use super::scan::{assignment_count, sat};
use super::{DecisionError, ScanOptions};
use crate::term::{Term, Var};
use crate::zoo::mv::lukasiewicz_value;
use crate::zoo::{lukasiewicz_chain, Rational};
use std::collections::BTreeMap;

/// Searches the standard MV-algebra for an assignment sending `t` to `1`
/// among values with denominator at most `max_den`.
///
/// Chains `Ł_{d+1}` are scanned for `d = 1..=max_den`, so the witness found
/// has the smallest possible common denominator. `None` says nothing about
/// assignments with larger denominators. The budget caps the total number
/// of assignments over all chains.
pub fn bounded_mv_sat(
    t: &Term,
    max_den: u32,
    opts: &ScanOptions,
) -> Result<Option<BTreeMap<Var, Rational>>, DecisionError> {
    if max_den == 0 {
        return Err(DecisionError::Parameter("max-den must be at least 1".into()));
    }
    let vars = t.variables().len();
    let mut total: Option<u64> = Some(0);
    for d in 1..=max_den as usize {
        total = total
            .zip(assignment_count(d + 1, vars))
            .and_then(|(a, b)| a.checked_add(b));
    }
    match total {
        Some(n) if n <= opts.budget => {}
        needed => {
            return Err(DecisionError::BudgetExceeded {
                needed,
                budget: opts.budget,
            })
        }
    }
    for d in 1..=max_den as usize {
        let chain = lukasiewicz_chain(d + 1).expect("d + 1 >= 2");
        if let Some(w) = sat(&chain, t, opts)?.witness {
            return Ok(Some(w.iter().map(|(v, i)| (v, lukasiewicz_value(i, d + 1))).collect()));
        }
    }
    Ok(None)
}

/// Whether `Ł_{m+1}` satisfies `x1 ≡ (¬x1)^{n-1}`, by exhaustive scan.
pub fn finite_chain_containment(n: u32, m: usize) -> Result<bool, DecisionError> {
    if n < 2 || m < 2 {
        return Err(DecisionError::Parameter("n and m must be at least 2".into()));
    }
    let x = Term::var(1);
    let t = Term::equiv(x.clone(), Term::power(Term::neg(x), n - 1));
    let chain = lukasiewicz_chain(m + 1).expect("m + 1 >= 3");
    Ok(sat(&chain, &t, &ScanOptions::default())?.holds)
}
