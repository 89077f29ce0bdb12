use super::{CvTerm, FormsError, MAX_BRUTE_FORCE_VARS};
use crate::term::Var;
use crate::zoo::{standard_mv_eval, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Maximum of a `(·, ∨)`-term over the Boolean vertices of `[0,1]^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMax {
    pub value: Rational,
    /// The first vertex, in lexicographic order, attaining `value`.
    pub vertex: BTreeMap<Var, Rational>,
}

/// Evaluates `t` in the standard MV-algebra at every `{0,1}` vertex.
///
/// These terms are convex on the cube, so this is also the maximum over
/// all of `[0,1]^n`.
pub fn vertex_max(t: &CvTerm) -> Result<VertexMax, FormsError> {
    let vars = t.variables();
    if vars.len() > MAX_BRUTE_FORCE_VARS {
        return Err(FormsError::TooManyVariables {
            vars: vars.len(),
            limit: MAX_BRUTE_FORCE_VARS,
        });
    }
    let term = t.to_term();
    let k = vars.len();
    let mut best: Option<VertexMax> = None;
    for mask in 0u32..(1 << k) {
        // first variable is the most significant bit
        let vertex: BTreeMap<Var, Rational> = vars
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let bit = mask >> (k - 1 - i) & 1 == 1;
                (v, if bit { Rational::one() } else { Rational::zero() })
            })
            .collect();
        let value = standard_mv_eval(&term, &vertex).expect("vertices are total and in range");
        if best.as_ref().is_none_or(|b| value > b.value) {
            let done = value.is_one();
            best = Some(VertexMax { value, vertex });
            if done {
                break;
            }
        }
    }
    Ok(best.expect("at least one vertex"))
}
