//! The `flewalg 1` table format and the `flewlat 1` lattice format.
//!
//! ```text
//! flewalg 1
//! size 2
//! names 0 1
//! zero 0
//! one 1
//! mult
//! 0 0
//! 0 1
//! impl
//! ...
//! ```
//!
//! Both formats are whitespace separated. After the version line each
//! section is introduced by its keyword, may appear in any order, and must
//! appear exactly once. `flewlat 1` carries `size`, `names`, `meet` and `join`
//! only.

use super::{AlgebraError, AlgebraTables, Elem};
use crate::term::BinOp;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("expected header '{0} 1'")]
    BadHeader(&'static str),
    #[error("unknown section header {0:?}")]
    UnknownHeader(String),
    #[error("section {0:?} appears twice")]
    DuplicateSection(String),
    #[error("missing section {0:?}")]
    MissingSection(&'static str),
    #[error("section {0:?} must follow 'size'")]
    SizeFirst(&'static str),
    #[error("unexpected end of input in section {0:?}")]
    Truncated(&'static str),
    #[error("invalid number {token:?} in section {section:?}")]
    BadNumber { section: &'static str, token: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

struct Tokens<'a> {
    it: std::iter::Peekable<std::str::SplitWhitespace<'a>>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens {
            it: text.split_whitespace().peekable(),
        }
    }

    fn next(&mut self, section: &'static str) -> Result<&'a str, FormatError> {
        self.it.next().ok_or(FormatError::Truncated(section))
    }

    fn number(&mut self, section: &'static str) -> Result<usize, FormatError> {
        let tok = self.next(section)?;
        // Plain decimal only; `str::parse` would also accept a leading '+'.
        if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
            return Err(FormatError::BadNumber {
                section,
                token: tok.to_string(),
            });
        }
        tok.parse().map_err(|_| FormatError::BadNumber {
            section,
            token: tok.to_string(),
        })
    }

    fn table(&mut self, section: &'static str, n: usize) -> Result<Vec<Vec<Elem>>, FormatError> {
        (0..n)
            .map(|_| (0..n).map(|_| self.number(section)).collect())
            .collect()
    }
}

fn header(tok: &mut Tokens<'_>, magic: &'static str) -> Result<(), FormatError> {
    match (tok.it.next(), tok.it.next()) {
        (Some(m), Some("1")) if m == magic => Ok(()),
        _ => Err(FormatError::BadHeader(magic)),
    }
}

#[derive(Default)]
struct Sections {
    size: Option<usize>,
    names: Option<Vec<String>>,
    zero: Option<usize>,
    one: Option<usize>,
    tables: HashMap<&'static str, Vec<Vec<Elem>>>,
}

fn read_sections(
    text: &str,
    magic: &'static str,
    allowed: &[&'static str],
) -> Result<Sections, FormatError> {
    let mut tok = Tokens::new(text);
    header(&mut tok, magic)?;
    let mut s = Sections::default();
    let mut seen: Vec<&'static str> = Vec::new();
    while let Some(word) = tok.it.next() {
        let key = *allowed
            .iter()
            .find(|k| **k == word)
            .ok_or_else(|| FormatError::UnknownHeader(word.to_string()))?;
        if seen.contains(&key) {
            return Err(FormatError::DuplicateSection(key.to_string()));
        }
        seen.push(key);
        if key == "size" {
            s.size = Some(tok.number("size")?);
            continue;
        }
        let n = s.size.ok_or(FormatError::SizeFirst(key))?;
        match key {
            "names" => {
                let names = (0..n)
                    .map(|_| tok.next("names").map(str::to_string))
                    .collect::<Result<_, _>>()?;
                s.names = Some(names);
            }
            "zero" => s.zero = Some(tok.number("zero")?),
            "one" => s.one = Some(tok.number("one")?),
            table => {
                let rows = tok.table(table, n)?;
                s.tables.insert(table, rows);
            }
        }
    }
    for key in allowed {
        if !seen.contains(key) {
            return Err(FormatError::MissingSection(key));
        }
    }
    Ok(s)
}

const ALG_SECTIONS: [&str; 8] = ["size", "names", "zero", "one", "mult", "impl", "meet", "join"];

/// Parses a `flewalg 1` document.
pub fn parse_algebra(text: &str) -> Result<AlgebraTables, FormatError> {
    let mut s = read_sections(text, "flewalg", &ALG_SECTIONS)?;
    let mut take = |k| s.tables.remove(k).unwrap();
    let (mult, implication, meet, join) = (take("mult"), take("impl"), take("meet"), take("join"));
    Ok(AlgebraTables::new(
        s.names.unwrap(),
        s.zero.unwrap(),
        s.one.unwrap(),
        mult,
        implication,
        meet,
        join,
    )?)
}

fn write_table(out: &mut String, header: &str, n: usize, entry: impl Fn(Elem, Elem) -> Elem) {
    out.push_str(header);
    out.push('\n');
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| entry(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Renders tables in the canonical `flewalg 1` layout.
pub fn write_algebra(t: &AlgebraTables) -> String {
    let n = t.size();
    let mut out = format!(
        "flewalg 1\nsize {n}\nnames {}\nzero {}\none {}\n",
        t.names().join(" "),
        t.zero(),
        t.one()
    );
    for (header, op) in [
        ("mult", BinOp::Mult),
        ("impl", BinOp::Impl),
        ("meet", BinOp::Meet),
        ("join", BinOp::Join),
    ] {
        write_table(&mut out, header, n, |a, b| t.op(op, a, b));
    }
    out
}

/// Meet and join tables of a finite lattice, as read from `flewlat 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    pub names: Vec<String>,
    pub meet: Vec<Vec<Elem>>,
    pub join: Vec<Vec<Elem>>,
}

pub fn parse_lattice(text: &str) -> Result<LatticeTables, FormatError> {
    let mut s = read_sections(text, "flewlat", &["size", "names", "meet", "join"])?;
    let names = s.names.take().unwrap();
    let n = names.len();
    let meet = s.tables.remove("meet").unwrap();
    let join = s.tables.remove("join").unwrap();
    if n == 0 {
        return Err(AlgebraError::Empty.into());
    }
    for (table, rows) in [("meet", &meet), ("join", &join)] {
        for (row, r) in rows.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(AlgebraError::EntryOutOfRange {
                        table,
                        row,
                        col,
                        value,
                    }
                    .into());
                }
            }
        }
    }
    Ok(LatticeTables { names, meet, join })
}

pub fn write_lattice(l: &LatticeTables) -> String {
    let n = l.names.len();
    let mut out = format!("flewlat 1\nsize {n}\nnames {}\n", l.names.join(" "));
    write_table(&mut out, "meet", n, |a, b| l.meet[a][b]);
    write_table(&mut out, "join", n, |a, b| l.join[a][b]);
    out
}
