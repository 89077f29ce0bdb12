//! Exact evaluation in the standard MV-algebra on `[0,1] ∩ Q`.

use crate::term::{Term, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("variable x{0} is not assigned")]
    Unassigned(Var),
    #[error("value {value} for x{var} lies outside [0,1]")]
    OutOfRange { var: Var, value: Rational },
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `i/(k-1)`, the rational standing for element `i` of the k-element
/// Łukasiewicz chain.
pub fn lukasiewicz_value(i: usize, k: usize) -> Rational {
    rational(i as i64, (k - 1) as i64)
}

pub(crate) fn in_unit_interval(q: &Rational) -> bool {
    *q >= Rational::zero() && *q <= Rational::one()
}

/// Evaluates `t` with `x·y = max(0, x+y-1)`, `x→y = min(1, 1-x+y)`,
/// `∧ = min`, `∨ = max`.
pub fn standard_mv_eval(t: &Term, e: &BTreeMap<Var, Rational>) -> Result<Rational, MvError> {
    for v in t.variables() {
        match e.get(&v) {
            None => return Err(MvError::Unassigned(v)),
            Some(q) if !in_unit_interval(q) => {
                return Err(MvError::OutOfRange {
                    var: v,
                    value: q.clone(),
                })
            }
            Some(_) => {}
        }
    }
    Ok(eval(t, e))
}

fn eval(t: &Term, e: &BTreeMap<Var, Rational>) -> Rational {
    let one = Rational::one;
    let zero = Rational::zero;
    match t {
        Term::Var(v) => e[v].clone(),
        Term::Zero => zero(),
        Term::One => one(),
        Term::Mult(l, r) => (eval(l, e) + eval(r, e) - one()).max(zero()),
        Term::Impl(l, r) => (one() - eval(l, e) + eval(r, e)).min(one()),
        Term::Meet(l, r) => eval(l, e).min(eval(r, e)),
        Term::Join(l, r) => eval(l, e).max(eval(r, e)),
    }
}

/// Whether `q` passes the denominator test for the subalgebra generated by
/// `{1/r : r in primes}`: in lowest terms, its denominator is a product of
/// distinct members of `primes`.
///
/// This is the criterion exactly as stated for such subalgebras; it is
/// not checked here against a closure computation.
pub fn rstar_membership(primes: &[u64], q: &Rational) -> bool {
    let mut den = q.denom().clone();
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        let p = BigInt::from(p);
        if (&den % &p).is_zero() {
            den /= &p;
            if (&den % &p).is_zero() {
                return false;
            }
        }
    }
    den.is_one()
}
