//! Constructors for concrete algebra families, plus exact arithmetic for the
//! standard MV-algebra on `[0,1] ∩ Q` and for Komori chains.

mod catalog;
mod chains;
mod heyting;
pub mod komori;
pub mod mv;

use thiserror::Error;

pub use catalog::{base_algebras, catalog, CatalogEntry};
pub use chains::{bool2, godel_chain, lukasiewicz_chain, trivial};
pub use heyting::{distributive_lattices, heyting_from_lattice, HeytingError};
pub use komori::{KomoriChain, LexPair};
pub use mv::{rstar_membership, standard_mv_eval, MvError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("chain length must be at least 2, got {0}")]
    ChainTooShort(usize),
    #[error("Komori chain parameter must be at least 1, got {0}")]
    KomoriParameter(i64),
}
