//! Exhaustive axiom checks over the operation tables.

use super::{AlgebraTables, Elem};
use crate::term::BinOp;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    MeetCommutativity,
    JoinCommutativity,
    MeetAssociativity,
    JoinAssociativity,
    MeetIdempotence,
    JoinIdempotence,
    Absorption,
    ZeroBottom,
    OneTop,
    MultCommutativity,
    MultAssociativity,
    MultUnit,
    Residuation,
}

impl Law {
    pub const ALL: [Law; 13] = [
        Law::MeetCommutativity,
        Law::JoinCommutativity,
        Law::MeetAssociativity,
        Law::JoinAssociativity,
        Law::MeetIdempotence,
        Law::JoinIdempotence,
        Law::Absorption,
        Law::ZeroBottom,
        Law::OneTop,
        Law::MultCommutativity,
        Law::MultAssociativity,
        Law::MultUnit,
        Law::Residuation,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Law::MeetCommutativity => "meet-commutativity",
            Law::JoinCommutativity => "join-commutativity",
            Law::MeetAssociativity => "meet-associativity",
            Law::JoinAssociativity => "join-associativity",
            Law::MeetIdempotence => "meet-idempotence",
            Law::JoinIdempotence => "join-idempotence",
            Law::Absorption => "absorption",
            Law::ZeroBottom => "zero-bottom",
            Law::OneTop => "one-top",
            Law::MultCommutativity => "mult-commutativity",
            Law::MultAssociativity => "mult-associativity",
            Law::MultUnit => "mult-unit",
            Law::Residuation => "residuation",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// First (lexicographically least) witness tuple of a failed law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub trivial: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all laws hold");
        }
        let laws: Vec<_> = self.violations.iter().map(|v| v.law.key()).collect();
        write!(f, "failed {}", laws.join(", "))
    }
}

fn first1(n: usize, ok: impl Fn(Elem) -> bool) -> Option<Vec<Elem>> {
    (0..n).find(|&a| !ok(a)).map(|a| vec![a])
}

fn first2(n: usize, ok: impl Fn(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            if !ok(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn first3(n: usize, ok: impl Fn(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !ok(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

pub(super) fn validate(t: &AlgebraTables) -> ValidationReport {
    let n = t.size();
    let op = |o, a, b| t.op(o, a, b);
    let meet = |a, b| op(BinOp::Meet, a, b);
    let join = |a, b| op(BinOp::Join, a, b);
    let mult = |a, b| op(BinOp::Mult, a, b);
    let leq = |a, b| meet(a, b) == a;
    let (zero, one) = (t.zero(), t.one());

    let mut violations = Vec::new();
    for law in Law::ALL {
        let witness = match law {
            Law::MeetCommutativity => first2(n, |a, b| meet(a, b) == meet(b, a)),
            Law::JoinCommutativity => first2(n, |a, b| join(a, b) == join(b, a)),
            Law::MeetAssociativity => {
                first3(n, |a, b, c| meet(meet(a, b), c) == meet(a, meet(b, c)))
            }
            Law::JoinAssociativity => {
                first3(n, |a, b, c| join(join(a, b), c) == join(a, join(b, c)))
            }
            Law::MeetIdempotence => first1(n, |a| meet(a, a) == a),
            Law::JoinIdempotence => first1(n, |a| join(a, a) == a),
            Law::Absorption => {
                first2(n, |a, b| meet(a, join(a, b)) == a && join(a, meet(a, b)) == a)
            }
            Law::ZeroBottom => first1(n, |a| leq(zero, a)),
            Law::OneTop => first1(n, |a| leq(a, one)),
            Law::MultCommutativity => first2(n, |a, b| mult(a, b) == mult(b, a)),
            Law::MultAssociativity => {
                first3(n, |a, b, c| mult(mult(a, b), c) == mult(a, mult(b, c)))
            }
            Law::MultUnit => first1(n, |a| mult(one, a) == a && mult(a, one) == a),
            Law::Residuation => first3(n, |a, b, c| {
                leq(mult(a, b), c) == leq(a, op(BinOp::Impl, b, c))
            }),
        };
        if let Some(witness) = witness {
            violations.push(Violation { law, witness });
        }
    }
    ValidationReport {
        violations,
        trivial: n == 1,
    }
}
