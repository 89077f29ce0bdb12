//! Komori chains `K_{n+1}`: the interval `[(0,0), (n,0)]` of `Z ×lex Z` with
//! truncated group operations. The second coordinate is unbounded, so these
//! chains are infinite and are handled symbolically rather than as tables.

use super::ZooError;
use crate::term::{Term, Var};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// An element `(a, b)` of `Z ×lex Z`. The derived order compares `a` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexPair {
    pub a: i64,
    pub b: BigInt,
}

impl LexPair {
    pub fn new(a: i64, b: impl Into<BigInt>) -> Self {
        LexPair { a, b: b.into() }
    }

    fn add(&self, o: &LexPair) -> LexPair {
        LexPair {
            a: self.a + o.a,
            b: &self.b + &o.b,
        }
    }

    fn sub(&self, o: &LexPair) -> LexPair {
        LexPair {
            a: self.a - o.a,
            b: &self.b - &o.b,
        }
    }

    /// `self + self`.
    pub fn double(&self) -> LexPair {
        self.add(self)
    }
}

impl fmt::Display for LexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KomoriError {
    #[error("{value} lies outside [(0,0), ({n},0)]")]
    OutOfBounds { value: LexPair, n: i64 },
    #[error("variable x{0} is not assigned")]
    Unassigned(Var),
}

/// The chain `K_{n+1}`; `K_2` (n = 1) is the Chang algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KomoriChain {
    n: i64,
}

impl KomoriChain {
    pub fn new(n: i64) -> Result<Self, ZooError> {
        if n < 1 {
            return Err(ZooError::KomoriParameter(n));
        }
        Ok(KomoriChain { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn zero(&self) -> LexPair {
        LexPair::new(0, 0)
    }

    /// The top element `u = (n, 0)`.
    pub fn unit(&self) -> LexPair {
        LexPair::new(self.n, 0)
    }

    pub fn contains(&self, x: &LexPair) -> bool {
        self.zero() <= *x && *x <= self.unit()
    }

    /// Returns `x` if it lies in the chain.
    pub fn element(&self, x: LexPair) -> Result<LexPair, KomoriError> {
        if self.contains(&x) {
            Ok(x)
        } else {
            Err(KomoriError::OutOfBounds { value: x, n: self.n })
        }
    }

    fn check(&self, xs: &[&LexPair]) -> Result<(), KomoriError> {
        for x in xs {
            self.element((*x).clone())?;
        }
        Ok(())
    }

    /// `max((0,0), x + y - u)`.
    pub fn mult(&self, x: &LexPair, y: &LexPair) -> Result<LexPair, KomoriError> {
        self.check(&[x, y])?;
        Ok(x.add(y).sub(&self.unit()).max(self.zero()))
    }

    /// `min(u, u - x + y)`.
    pub fn implies(&self, x: &LexPair, y: &LexPair) -> Result<LexPair, KomoriError> {
        self.check(&[x, y])?;
        Ok(self.unit().sub(x).add(y).min(self.unit()))
    }

    pub fn meet(&self, x: &LexPair, y: &LexPair) -> Result<LexPair, KomoriError> {
        self.check(&[x, y])?;
        Ok(x.clone().min(y.clone()))
    }

    pub fn join(&self, x: &LexPair, y: &LexPair) -> Result<LexPair, KomoriError> {
        self.check(&[x, y])?;
        Ok(x.clone().max(y.clone()))
    }

    /// `u - x`.
    pub fn neg(&self, x: &LexPair) -> Result<LexPair, KomoriError> {
        self.check(&[x])?;
        Ok(self.unit().sub(x))
    }

    pub fn evaluate(&self, t: &Term, e: &BTreeMap<Var, LexPair>) -> Result<LexPair, KomoriError> {
        match t {
            Term::Var(v) => self.element(e.get(v).cloned().ok_or(KomoriError::Unassigned(*v))?),
            Term::Zero => Ok(self.zero()),
            Term::One => Ok(self.unit()),
            Term::Mult(l, r) => self.mult(&self.evaluate(l, e)?, &self.evaluate(r, e)?),
            Term::Impl(l, r) => self.implies(&self.evaluate(l, e)?, &self.evaluate(r, e)?),
            Term::Meet(l, r) => self.meet(&self.evaluate(l, e)?, &self.evaluate(r, e)?),
            Term::Join(l, r) => self.join(&self.evaluate(l, e)?, &self.evaluate(r, e)?),
        }
    }

    /// Boundary representatives: every first coordinate `0..=n`, paired with
    /// second coordinates in `-spread..=spread`, clipped to the chain.
    pub fn sample(&self, spread: i64) -> Vec<LexPair> {
        let mut out = Vec::new();
        for a in 0..=self.n {
            for b in -spread..=spread {
                let x = LexPair::new(a, b);
                if self.contains(&x) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Whether `x` and `y` differ in first coordinate (are not
    /// infinitesimally close).
    pub fn archimedean_apart(x: &LexPair, y: &LexPair) -> bool {
        x.a != y.a
    }

    pub fn is_zero(x: &LexPair) -> bool {
        x.a == 0 && x.b.is_zero()
    }
}
