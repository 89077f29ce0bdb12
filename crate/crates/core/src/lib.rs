//! Satisfiability, positive satisfiability and tautology checking for
//! FLew-terms over concrete FLew-algebras.

pub mod algebra;
pub mod cli;
pub mod decision;
pub mod forms;
pub mod term;
pub mod zoo;
