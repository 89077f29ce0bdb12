//! The `(·, ∨)` fragment: literals combined by multiplication and join,
//! with its clause form (CF) and disjunctive form (DF).

mod dimacs;
mod dp;
mod random;
mod vertex;

use crate::algebra::Assignment;
use crate::decision::{self, ScanOptions, Verdict};
use crate::term::{Term, Var};
use crate::zoo::bool2;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub use dimacs::{dimacs_import, DimacsError};
pub use dp::{dp_reduce, DpReduction, Part};
pub use random::random_cv_term;
pub use vertex::{vertex_max, VertexMax};

/// Default cap on the number of monomials an expansion may produce.
pub const DEFAULT_MONOMIAL_BUDGET: u64 = 1_000_000;

/// Largest variable count for Boolean brute force and vertex scans.
pub const MAX_BRUTE_FORCE_VARS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    #[error("expansion needs {} monomials, budget is {budget}", needed.map_or("more than 2^64".to_string(), |n| n.to_string()))]
    ExpansionBudget { needed: Option<u64>, budget: u64 },
    #[error("{vars} variables exceed the limit of {limit}")]
    TooManyVariables { vars: usize, limit: usize },
    #[error("term is not built from literals by * and \\/ alone")]
    NotCv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: Var,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: Var) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: Var) -> Self {
        Literal { var, negated: true }
    }

    pub fn complement(self) -> Self {
        Literal {
            negated: !self.negated,
            ..self
        }
    }

    pub fn to_term(self) -> Term {
        let x = Term::var(self.var);
        if self.negated {
            Term::neg(x)
        } else {
            x
        }
    }

    /// `x` or `x -> 0`.
    pub fn recognize(t: &Term) -> Option<Self> {
        match t {
            Term::Var(v) => Some(Literal::pos(*v)),
            Term::Impl(l, r) => match (&**l, &**r) {
                (Term::Var(v), Term::Zero) => Some(Literal::neg(*v)),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

fn fold(items: impl IntoIterator<Item = Term>, join: bool) -> Term {
    let mut it = items.into_iter();
    let first = it.next().expect("forms are nonempty");
    it.fold(first, |acc, t| if join { Term::join(acc, t) } else { Term::mult(acc, t) })
}

/// A join of literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(pub Vec<Literal>);

/// A product of literals; repeated literals are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<Literal>);

/// A product of clauses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfForm(pub Vec<Clause>);

/// A join of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DfForm(pub Vec<Monomial>);

impl Clause {
    pub fn to_term(&self) -> Term {
        fold(self.0.iter().map(|l| l.to_term()), true)
    }
}

impl Monomial {
    pub fn to_term(&self) -> Term {
        fold(self.0.iter().map(|l| l.to_term()), false)
    }

    /// Whether some variable occurs both plain and negated.
    pub fn has_complementary_pair(&self) -> bool {
        self.0.iter().any(|l| self.0.contains(&l.complement()))
    }
}

impl CfForm {
    /// Left-associated product of left-associated clause joins.
    pub fn to_term(&self) -> Term {
        fold(self.0.iter().map(Clause::to_term), false)
    }

    /// Reads a term shaped as a product of joins of literals, in any
    /// association.
    pub fn from_term(t: &Term) -> Option<CfForm> {
        let mut factors = Vec::new();
        flatten(t, false, &mut factors);
        let clauses = factors
            .into_iter()
            .map(|f| {
                let mut lits = Vec::new();
                flatten(f, true, &mut lits);
                lits.into_iter().map(Literal::recognize).collect::<Option<Vec<_>>>().map(Clause)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CfForm(clauses))
    }

    pub fn to_cv(&self) -> CvTerm {
        let clause = |c: &Clause| {
            let mut it = c.0.iter().map(|&l| CvTerm::Lit(l));
            let first = it.next().expect("clauses are nonempty");
            it.fold(first, |a, b| CvTerm::Join(Box::new(a), Box::new(b)))
        };
        let mut it = self.0.iter().map(clause);
        let first = it.next().expect("forms are nonempty");
        it.fold(first, |a, b| CvTerm::Mult(Box::new(a), Box::new(b)))
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.0.iter().flat_map(|c| c.0.iter().map(|l| l.var)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

fn flatten<'t>(t: &'t Term, join: bool, out: &mut Vec<&'t Term>) {
    match (t, join) {
        (Term::Join(l, r), true) | (Term::Mult(l, r), false) => {
            flatten(l, join, out);
            flatten(r, join, out);
        }
        _ => out.push(t),
    }
}

impl DfForm {
    pub fn to_term(&self) -> Term {
        fold(self.0.iter().map(Monomial::to_term), true)
    }
}

impl fmt::Display for DfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" \\/ ")?;
            }
            for (j, l) in m.0.iter().enumerate() {
                if j > 0 {
                    f.write_str(" * ")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

/// A term built from literals by `·` and `∨` only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CvTerm {
    Lit(Literal),
    Mult(Box<CvTerm>, Box<CvTerm>),
    Join(Box<CvTerm>, Box<CvTerm>),
}

impl CvTerm {
    pub fn to_term(&self) -> Term {
        match self {
            CvTerm::Lit(l) => l.to_term(),
            CvTerm::Mult(a, b) => Term::mult(a.to_term(), b.to_term()),
            CvTerm::Join(a, b) => Term::join(a.to_term(), b.to_term()),
        }
    }

    pub fn literal_count(&self) -> usize {
        match self {
            CvTerm::Lit(_) => 1,
            CvTerm::Mult(a, b) | CvTerm::Join(a, b) => a.literal_count() + b.literal_count(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.to_term().variables().into_iter().collect();
        vs.sort_unstable();
        vs
    }

    /// Number of monomials of the DF expansion, `None` on overflow.
    pub fn monomial_count(&self) -> Option<u64> {
        match self {
            CvTerm::Lit(_) => Some(1),
            CvTerm::Mult(a, b) => a.monomial_count()?.checked_mul(b.monomial_count()?),
            CvTerm::Join(a, b) => a.monomial_count()?.checked_add(b.monomial_count()?),
        }
    }

    fn expand(&self) -> Vec<Monomial> {
        match self {
            CvTerm::Lit(l) => vec![Monomial(vec![*l])],
            CvTerm::Join(a, b) => {
                let mut out = a.expand();
                out.extend(b.expand());
                out
            }
            CvTerm::Mult(a, b) => {
                let (left, right) = (a.expand(), b.expand());
                let mut out = Vec::with_capacity(left.len() * right.len());
                for m in &left {
                    for n in &right {
                        let mut lits = m.0.clone();
                        lits.extend_from_slice(&n.0);
                        out.push(Monomial(lits));
                    }
                }
                out
            }
        }
    }
}

/// Recognizes the `(·, ∨)` fragment.
pub fn recognize_cv(t: &Term) -> Option<CvTerm> {
    if let Some(l) = Literal::recognize(t) {
        return Some(CvTerm::Lit(l));
    }
    match t {
        Term::Mult(a, b) => Some(CvTerm::Mult(
            Box::new(recognize_cv(a)?),
            Box::new(recognize_cv(b)?),
        )),
        Term::Join(a, b) => Some(CvTerm::Join(
            Box::new(recognize_cv(a)?),
            Box::new(recognize_cv(b)?),
        )),
        _ => None,
    }
}

/// Distributes `·` over `∨`. The count is checked against `budget` before
/// anything is expanded.
pub fn cv_to_df(t: &CvTerm, budget: u64) -> Result<DfForm, FormsError> {
    match t.monomial_count() {
        Some(n) if n <= budget => Ok(DfForm(t.expand())),
        needed => Err(FormsError::ExpansionBudget { needed, budget }),
    }
}

pub fn cf_to_df(c: &CfForm, budget: u64) -> Result<DfForm, FormsError> {
    cv_to_df(&c.to_cv(), budget)
}

/// Classical satisfiability of a `(·, ∨)`-term. The witness is an
/// assignment over `bool2` (element `1` true).
///
/// Within the monomial budget the DF expansion is searched for a monomial
/// without complementary literals; that monomial's literals are made true
/// and every other variable is `0`. Over budget, the term is scanned over
/// `bool2` directly when it has at most [`MAX_BRUTE_FORCE_VARS`] variables.
pub fn classical_sat_cv(t: &CvTerm, budget: u64) -> Result<Verdict, FormsError> {
    match cv_to_df(t, budget) {
        Ok(df) => {
            let Some(m) = df.0.iter().find(|m| !m.has_complementary_pair()) else {
                return Ok(Verdict {
                    holds: false,
                    witness: None,
                });
            };
            let mut w: BTreeMap<Var, usize> = t.variables().into_iter().map(|v| (v, 0)).collect();
            for l in &m.0 {
                w.insert(l.var, usize::from(!l.negated));
            }
            Ok(Verdict {
                holds: true,
                witness: Some(Assignment(w)),
            })
        }
        Err(FormsError::ExpansionBudget { .. }) => {
            let vars = t.variables().len();
            if vars > MAX_BRUTE_FORCE_VARS {
                return Err(FormsError::TooManyVariables {
                    vars,
                    limit: MAX_BRUTE_FORCE_VARS,
                });
            }
            let opts = ScanOptions { budget: u64::MAX };
            Ok(decision::sat(&bool2(), &t.to_term(), &opts).expect("budget is unbounded"))
        }
        Err(e) => Err(e),
    }
}
