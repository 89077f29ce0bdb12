//! Finite FLew-algebras given by operation tables.
//!
//! [`AlgebraTables`] is raw, well-formed table data; it may violate the
//! axioms and [`AlgebraTables::validate`] reports how. [`FiniteAlgebra`] can
//! only be obtained from tables that pass validation, so every decision
//! procedure taking a `&FiniteAlgebra` works on a genuine FLew-algebra.

mod eval;
pub mod format;
mod validate;

use crate::term::{BinOp, Term, Var};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub use eval::{EvalError, Program};
pub use validate::{Law, ValidationReport, Violation};

/// Index of a carrier element.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have at least one element")]
    Empty,
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("{table} table must be {size}x{size}")]
    TableShape { table: &'static str, size: usize },
    #[error("{table} table entry ({row},{col}) = {value} is out of range")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("{which} index {value} is out of range")]
    ConstantOutOfRange { which: &'static str, value: usize },
}

/// The algebra failed validation.
#[derive(Debug, Clone, Error)]
#[error("not an FLew-algebra: {report}")]
pub struct InvalidAlgebra {
    pub report: ValidationReport,
}

/// Well-formed operation tables over `0..size`. Row index is the left argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTables {
    size: usize,
    names: Vec<String>,
    zero: Elem,
    one: Elem,
    mult: Vec<Elem>,
    implication: Vec<Elem>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
}

fn flatten(
    table: &'static str,
    rows: Vec<Vec<Elem>>,
    size: usize,
) -> Result<Vec<Elem>, AlgebraError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(AlgebraError::TableShape { table, size });
    }
    let mut flat = Vec::with_capacity(size * size);
    for (row, r) in rows.into_iter().enumerate() {
        for (col, value) in r.into_iter().enumerate() {
            if value >= size {
                return Err(AlgebraError::EntryOutOfRange {
                    table,
                    row,
                    col,
                    value,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

impl AlgebraTables {
    pub fn new(
        names: Vec<String>,
        zero: Elem,
        one: Elem,
        mult: Vec<Vec<Elem>>,
        implication: Vec<Vec<Elem>>,
        meet: Vec<Vec<Elem>>,
        join: Vec<Vec<Elem>>,
    ) -> Result<Self, AlgebraError> {
        let size = names.len();
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(AlgebraError::DuplicateName(n.clone()));
            }
        }
        for (which, value) in [("zero", zero), ("one", one)] {
            if value >= size {
                return Err(AlgebraError::ConstantOutOfRange { which, value });
            }
        }
        Ok(AlgebraTables {
            size,
            zero,
            one,
            mult: flatten("mult", mult, size)?,
            implication: flatten("impl", implication, size)?,
            meet: flatten("meet", meet, size)?,
            join: flatten("join", join, size)?,
            names,
        })
    }

    /// Builds tables by evaluating one closure per operation.
    pub fn from_fn(
        names: Vec<String>,
        zero: Elem,
        one: Elem,
        op: impl Fn(BinOp, Elem, Elem) -> Elem,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        let table = |o: BinOp| -> Vec<Vec<Elem>> {
            (0..n).map(|a| (0..n).map(|b| op(o, a, b)).collect()).collect()
        };
        AlgebraTables::new(
            names,
            zero,
            one,
            table(BinOp::Mult),
            table(BinOp::Impl),
            table(BinOp::Meet),
            table(BinOp::Join),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn op(&self, op: BinOp, a: Elem, b: Elem) -> Elem {
        let i = a * self.size + b;
        match op {
            BinOp::Mult => self.mult[i],
            BinOp::Impl => self.implication[i],
            BinOp::Meet => self.meet[i],
            BinOp::Join => self.join[i],
        }
    }

    /// Overwrites one table entry. Intended for building mutants in tests.
    pub fn set_entry(&mut self, op: BinOp, a: Elem, b: Elem, value: Elem) {
        assert!(a < self.size && b < self.size && value < self.size);
        let i = a * self.size + b;
        let t = match op {
            BinOp::Mult => &mut self.mult,
            BinOp::Impl => &mut self.implication,
            BinOp::Meet => &mut self.meet,
            BinOp::Join => &mut self.join,
        };
        t[i] = value;
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    pub fn into_algebra(self) -> Result<FiniteAlgebra, InvalidAlgebra> {
        let report = self.validate();
        if !report.passed() {
            return Err(InvalidAlgebra { report });
        }
        let mut alg = FiniteAlgebra {
            tables: self,
            chain: false,
        };
        alg.chain = (0..alg.size()).all(|a| (0..alg.size()).all(|b| alg.leq(a, b) || alg.leq(b, a)));
        Ok(alg)
    }
}

/// A validated finite FLew-algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    tables: AlgebraTables,
    chain: bool,
}

impl FiniteAlgebra {
    pub fn tables(&self) -> &AlgebraTables {
        &self.tables
    }

    pub fn size(&self) -> usize {
        self.tables.size
    }

    pub fn names(&self) -> &[String] {
        &self.tables.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.tables.names[a]
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.tables.element_by_name(name)
    }

    pub fn zero(&self) -> Elem {
        self.tables.zero
    }

    pub fn one(&self) -> Elem {
        self.tables.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    #[inline]
    pub fn op(&self, op: BinOp, a: Elem, b: Elem) -> Elem {
        self.tables.op(op, a, b)
    }

    pub fn mult(&self, a: Elem, b: Elem) -> Elem {
        self.op(BinOp::Mult, a, b)
    }

    pub fn implies(&self, a: Elem, b: Elem) -> Elem {
        self.op(BinOp::Impl, a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.op(BinOp::Meet, a, b)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.op(BinOp::Join, a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.implies(a, self.zero())
    }

    /// `a^k` for `k >= 1`.
    pub fn power(&self, a: Elem, k: u32) -> Elem {
        (1..k).fold(a, |acc, _| self.mult(acc, a))
    }

    /// Lattice order, read off the meet table.
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    pub fn is_chain(&self) -> bool {
        self.chain
    }

    pub fn is_nontrivial(&self) -> bool {
        self.zero() != self.one()
    }

    /// Direct product; element `(a, b)` has index `a * other.size() + b`
    /// and name `"a|b"`.
    pub fn product(&self, other: &FiniteAlgebra) -> FiniteAlgebra {
        let m = other.size();
        let pair = |a: Elem, b: Elem| a * m + b;
        let names = self
            .elements()
            .flat_map(|a| other.elements().map(move |b| (a, b)))
            .map(|(a, b)| format!("{}|{}", self.name(a), other.name(b)))
            .collect();
        let tables = AlgebraTables::from_fn(
            names,
            pair(self.zero(), other.zero()),
            pair(self.one(), other.one()),
            |op, x, y| {
                pair(
                    self.op(op, x / m, y / m),
                    other.op(op, x % m, y % m),
                )
            },
        )
        .expect("product tables are well formed");
        tables
            .into_algebra()
            .expect("products of FLew-algebras are FLew-algebras")
    }

    /// Interprets `t` under `e`.
    pub fn evaluate(&self, t: &Term, e: &Assignment) -> Result<Elem, EvalError> {
        eval::evaluate(self, t, e)
    }
}

/// Variable-to-element map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(pub BTreeMap<Var, Elem>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Elem)>) -> Self {
        Assignment(pairs.into_iter().collect())
    }

    pub fn get(&self, v: Var) -> Option<Elem> {
        self.0.get(&v).copied()
    }

    pub fn insert(&mut self, v: Var, a: Elem) {
        self.0.insert(v, a);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, Elem)> + '_ {
        self.0.iter().map(|(v, a)| (*v, *a))
    }

    /// `x1=name x2=name ...` using the algebra's element names.
    pub fn display<'a>(&'a self, alg: &'a FiniteAlgebra) -> impl fmt::Display + 'a {
        DisplayAssignment(self, alg)
    }
}

struct DisplayAssignment<'a>(&'a Assignment, &'a FiniteAlgebra);

impl fmt::Display for DisplayAssignment<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, a)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{v}={}", self.1.name(a))?;
        }
        Ok(())
    }
}
