use super::CfForm;
use crate::term::{Term, Var};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Part {
    Alpha,
    Phi1,
    Phi2,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::Alpha => "alpha",
            Part::Phi1 => "phi1",
            Part::Phi2 => "phi2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpReduction {
    /// `(α ∧ φ₁) ∨ φ₂` after renaming.
    pub term: Term,
    /// `(part, old, new)` for every variable, in order of `new`.
    pub renaming: Vec<(Part, Var, Var)>,
}

/// Builds `(α ∧ φ₁) ∨ φ₂` with the three parts made variable-disjoint.
///
/// Variables are always renamed, even when the inputs are already
/// disjoint: those of `alpha` become `x1, x2, ...` in increasing order,
/// then those of `phi1`, then those of `phi2`.
pub fn dp_reduce(alpha: &Term, phi1: &CfForm, phi2: &CfForm) -> DpReduction {
    let mut next: Var = 1;
    let mut renaming = Vec::new();
    let mut rename = |part: Part, t: &Term| -> Term {
        let sigma: BTreeMap<Var, Term> = t
            .variables()
            .into_iter()
            .map(|v| {
                renaming.push((part, v, next));
                next += 1;
                (v, Term::var(next - 1))
            })
            .collect();
        t.substitute(&sigma)
    };
    let a = rename(Part::Alpha, alpha);
    let p1 = rename(Part::Phi1, &phi1.to_term());
    let p2 = rename(Part::Phi2, &phi2.to_term());
    DpReduction {
        term: Term::join(Term::meet(a, p1), p2),
        renaming,
    }
}
