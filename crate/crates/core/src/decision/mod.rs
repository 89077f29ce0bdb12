//! Decision procedures over finite algebras and the two infinite families.

pub mod bounded;
mod chain;
mod classify;
mod hom;
mod mvsat;
mod scan;

use crate::term::Term;
use thiserror::Error;

pub use chain::{chain_criterion, chain_witness_term, komori_chain_criterion, ChainReport, KomoriReport};
pub use classify::{classify, Classification};
pub use hom::{hom_onto_bool, hom_onto_bool_exhaustive, HomPartition, EXHAUSTIVE_LIMIT};
pub use mvsat::{bounded_mv_sat, finite_chain_containment};
pub use scan::{assignment_count, find_assignment, sat, satpos, taut, Verdict};

/// Default cap on the number of assignments a single scan may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("scan needs {} assignments, budget is {budget}", fmt_needed(.needed))]
    BudgetExceeded { needed: Option<u64>, budget: u64 },
    #[error("algebra is not a chain")]
    NotAChain,
    #[error("algebra is trivial")]
    Trivial,
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

fn fmt_needed(n: &Option<u64>) -> String {
    match n {
        Some(n) => n.to_string(),
        None => "more than 2^64".to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Maximum number of assignments per scan.
    pub budget: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// The Glivenko translation `¬¬t`.
pub fn glivenko(t: &Term) -> Term {
    Term::neg(Term::neg(t.clone()))
}
