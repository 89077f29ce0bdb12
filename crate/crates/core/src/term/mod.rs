//! The term language over `·`, `→`, `∧`, `∨`, `0`, `1` and variables.
//!
//! Derived connectives (`¬`, `≡`, `+`, powers and n-fold sums) are not node
//! kinds: the constructors in this module expand them into the six core
//! symbols, so every [`Term`] is already desugared.

mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parse::{parse, ParseError};

/// Index of a propositional variable; `x7` has index 7.
pub type Var = u32;

/// A desugared term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Var),
    Zero,
    One,
    Mult(Box<Term>, Box<Term>),
    Impl(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

/// The four binary symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    Mult,
    Impl,
    Meet,
    Join,
}

impl BinOp {
    pub const ALL: [BinOp; 4] = [BinOp::Mult, BinOp::Impl, BinOp::Meet, BinOp::Join];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Mult => "*",
            BinOp::Impl => "->",
            BinOp::Meet => "/\\",
            BinOp::Join => "\\/",
        }
    }
}

impl Term {
    pub fn var(i: Var) -> Term {
        Term::Var(i)
    }

    pub fn binary(op: BinOp, l: Term, r: Term) -> Term {
        let (l, r) = (Box::new(l), Box::new(r));
        match op {
            BinOp::Mult => Term::Mult(l, r),
            BinOp::Impl => Term::Impl(l, r),
            BinOp::Meet => Term::Meet(l, r),
            BinOp::Join => Term::Join(l, r),
        }
    }

    pub fn mult(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Mult, l, r)
    }

    pub fn implies(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Impl, l, r)
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Meet, l, r)
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Join, l, r)
    }

    /// `¬t`, i.e. `t → 0`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::implies(t, Term::Zero)
    }

    /// `l ≡ r`, i.e. `(l → r)·(r → l)`.
    pub fn equiv(l: Term, r: Term) -> Term {
        Term::mult(Term::implies(l.clone(), r.clone()), Term::implies(r, l))
    }

    /// `l + r`, i.e. `¬(¬l · ¬r)`.
    pub fn plus(l: Term, r: Term) -> Term {
        Term::neg(Term::mult(Term::neg(l), Term::neg(r)))
    }

    /// `t^k = t·t·…·t` (k factors, left-associated). Panics if `k == 0`.
    pub fn power(t: Term, k: u32) -> Term {
        assert!(k >= 1, "power exponent must be at least 1");
        (1..k).fold(t.clone(), |acc, _| Term::mult(acc, t.clone()))
    }

    /// `k·t = t + t + … + t` (k summands, left-associated). Panics if `k == 0`.
    pub fn nsum(k: u32, t: Term) -> Term {
        assert!(k >= 1, "sum multiplicity must be at least 1");
        (1..k).fold(t.clone(), |acc, _| Term::plus(acc, t.clone()))
    }

    /// Splits a binary node into its operator and operands.
    pub fn as_binary(&self) -> Option<(BinOp, &Term, &Term)> {
        match self {
            Term::Mult(l, r) => Some((BinOp::Mult, l, r)),
            Term::Impl(l, r) => Some((BinOp::Impl, l, r)),
            Term::Meet(l, r) => Some((BinOp::Meet, l, r)),
            Term::Join(l, r) => Some((BinOp::Join, l, r)),
            _ => None,
        }
    }

    /// Variable indices occurring in the term.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Zero | Term::One => {}
            _ => {
                let (_, l, r) = self.as_binary().unwrap();
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Simultaneous substitution; variables outside the map are left alone.
    pub fn substitute(&self, sigma: &BTreeMap<Var, Term>) -> Term {
        match self {
            Term::Var(i) => sigma.get(i).cloned().unwrap_or(Term::Var(*i)),
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            _ => {
                let (op, l, r) = self.as_binary().unwrap();
                Term::binary(op, l.substitute(sigma), r.substitute(sigma))
            }
        }
    }

    /// Number of binary nodes.
    pub fn connectives(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.connectives() + r.connectives(),
            None => 0,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print(self))
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Canonical fully parenthesized rendering; `parse(&print(t)) == Ok(t)`.
pub fn print(t: &Term) -> String {
    print::print(t)
}
