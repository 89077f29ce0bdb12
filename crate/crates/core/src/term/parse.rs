//! Recursive-descent parser.
//!
//! Binding strength, tightest first: `^`, then the prefix forms `~t` and
//! `k # t`, then `*`, `/\`, `\/`, `+`, `->` (right-associative) and finally
//! `<->`, which does not associate.

use super::{Term, Var};
use thiserror::Error;

/// Largest accepted exponent or sum multiplicity. Each unit adds a subterm
/// copy, so unbounded values would let short inputs exhaust memory.
pub const MAX_REPEAT: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Var(Var),
    Tilde,
    Star,
    Meet,
    Join,
    Arrow,
    Equiv,
    Plus,
    Caret,
    Hash,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Var(i) => format!("variable x{i}"),
            Tok::Tilde => "'~'".into(),
            Tok::Star => "'*'".into(),
            Tok::Meet => "'/\\'".into(),
            Tok::Join => "'\\/'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Equiv => "'<->'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Hash => "'#'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let fixed = |s: &str| text[i..].starts_with(s);
        let tok = if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i]
                .parse::<u64>()
                .map_err(|_| ParseError::new(start, "number too large"))?;
            toks.push((Tok::Num(n), start));
            continue;
        } else if c == b'x' {
            i += 1;
            let digits = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if digits == i {
                return Err(ParseError::new(start, "expected digits after 'x'"));
            }
            let n = text[digits..i]
                .parse::<Var>()
                .map_err(|_| ParseError::new(start, "variable index too large"))?;
            toks.push((Tok::Var(n), start));
            continue;
        } else if fixed("<->") {
            (Tok::Equiv, 3)
        } else if fixed("->") {
            (Tok::Arrow, 2)
        } else if fixed("/\\") {
            (Tok::Meet, 2)
        } else if fixed("\\/") {
            (Tok::Join, 2)
        } else {
            let t = match c {
                b'~' => Tok::Tilde,
                b'*' => Tok::Star,
                b'+' => Tok::Plus,
                b'^' => Tok::Caret,
                b'#' => Tok::Hash,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                _ => {
                    let ch = text[i..].chars().next().unwrap();
                    return Err(ParseError::new(i, format!("unexpected character {ch:?}")));
                }
            };
            (t, 1)
        };
        toks.push((tok.0, start));
        i += tok.1;
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        let i = (self.pos + 1).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        Err(ParseError::new(
            self.offset(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        ))
    }

    fn equiv(&mut self) -> Result<Term, ParseError> {
        let lhs = self.implication()?;
        if self.eat(&Tok::Equiv) {
            let rhs = self.implication()?;
            if *self.peek() == Tok::Equiv {
                return Err(ParseError::new(
                    self.offset(),
                    "'<->' does not associate; add parentheses",
                ));
            }
            return Ok(Term::equiv(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Term, ParseError> {
        let lhs = self.left_assoc(0)?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Term::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    /// Levels 0..=3 are `+`, `\/`, `/\`, `*`; all associate to the left.
    fn left_assoc(&mut self, level: usize) -> Result<Term, ParseError> {
        const LEVELS: [Tok; 4] = [Tok::Plus, Tok::Join, Tok::Meet, Tok::Star];
        let next = |p: &mut Parser| {
            if level + 1 < LEVELS.len() {
                p.left_assoc(level + 1)
            } else {
                p.unary()
            }
        };
        let mut acc = next(self)?;
        while self.eat(&LEVELS[level]) {
            let rhs = next(self)?;
            acc = match level {
                0 => Term::plus(acc, rhs),
                1 => Term::join(acc, rhs),
                2 => Term::meet(acc, rhs),
                _ => Term::mult(acc, rhs),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Term::neg(self.unary()?));
        }
        if let (Tok::Num(k), Tok::Hash) = (self.peek().clone(), self.peek2().clone()) {
            let at = self.offset();
            self.bump();
            self.bump();
            let k = check_repeat(k, at, "sum multiplicity")?;
            return Ok(Term::nsum(k, self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Term, ParseError> {
        let mut base = self.primary()?;
        while self.eat(&Tok::Caret) {
            let at = self.offset();
            match self.bump() {
                Tok::Num(k) => {
                    let k = check_repeat(k, at, "exponent")?;
                    base = Term::power(base, k);
                }
                other => {
                    return Err(ParseError::new(
                        at,
                        format!("expected exponent after '^', found {}", other.describe()),
                    ))
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(0) => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::Num(1) => {
                self.bump();
                Ok(Term::One)
            }
            Tok::Num(n) => Err(ParseError::new(
                at,
                format!("number {n} is not a constant; only 0 and 1 are"),
            )),
            Tok::Var(i) => {
                self.bump();
                Ok(Term::Var(i))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.equiv()?;
                if !self.eat(&Tok::RParen) {
                    return self.unexpected("')'");
                }
                Ok(inner)
            }
            _ => self.unexpected("a term"),
        }
    }
}

fn check_repeat(k: u64, at: usize, what: &str) -> Result<u32, ParseError> {
    if k < 1 {
        return Err(ParseError::new(at, format!("{what} must be at least 1")));
    }
    if k > MAX_REPEAT {
        return Err(ParseError::new(
            at,
            format!("{what} {k} exceeds the limit {MAX_REPEAT}"),
        ));
    }
    Ok(k as u32)
}

/// Parses the textual term syntax; derived connectives are expanded.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let t = p.equiv()?;
    if *p.peek() != Tok::End {
        return p.unexpected("end of input");
    }
    Ok(t)
}
