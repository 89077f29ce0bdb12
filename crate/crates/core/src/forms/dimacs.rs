use super::{CfForm, Clause, Literal};
use crate::term::Var;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("line {line}: expected `p cnf VARS CLAUSES`")]
    BadHeader { line: usize },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: bad literal {token:?}")]
    BadLiteral { line: usize, token: String },
    #[error("line {line}: literal {literal} exceeds the declared {vars} variables")]
    LiteralOutOfRange { line: usize, literal: i64, vars: u32 },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("last clause is not terminated by 0")]
    Unterminated,
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCount { declared: usize, found: usize },
    #[error("formula has no clauses")]
    NoClauses,
}

/// Reads DIMACS CNF: clause `i` becomes the `i`-th clause of the form and
/// literal `k` / `-k` becomes `x_k` / `¬x_k`.
///
/// Comment lines start with `c`. Clauses are `0`-terminated and may span
/// lines.
pub fn dimacs_import(text: &str) -> Result<CfForm, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        if s.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line });
            }
            let f: Vec<&str> = s.split_whitespace().collect();
            let parsed = match f.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or(DimacsError::BadHeader { line })?);
            continue;
        }
        let (vars, _) = header.ok_or(DimacsError::MissingHeader)?;
        for token in s.split_whitespace() {
            let literal: i64 = token.parse().map_err(|_| DimacsError::BadLiteral {
                line,
                token: token.to_string(),
            })?;
            if literal == 0 {
                if current.is_empty() {
                    return Err(DimacsError::EmptyClause { line });
                }
                clauses.push(Clause(std::mem::take(&mut current)));
                continue;
            }
            if literal.unsigned_abs() > vars as u64 {
                return Err(DimacsError::LiteralOutOfRange { line, literal, vars });
            }
            let var = literal.unsigned_abs() as Var;
            current.push(if literal < 0 {
                Literal::neg(var)
            } else {
                Literal::pos(var)
            });
        }
    }
    let (_, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        return Err(DimacsError::Unterminated);
    }
    if clauses.len() != declared {
        return Err(DimacsError::ClauseCount {
            declared,
            found: clauses.len(),
        });
    }
    if clauses.is_empty() {
        return Err(DimacsError::NoClauses);
    }
    Ok(CfForm(clauses))
}
