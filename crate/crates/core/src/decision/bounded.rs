//! Exhaustive enumeration of bounded term sets, modulo semantics.
//!
//! The set of all terms over `x1..xv` with at most `c` connectives is far
//! too large to list syntactically once `c` reaches 7. What every
//! exhaustive check needs, though, is only each term's value table on a
//! fixed list of finite algebras. Two terms with identical joint tables on
//! every listed algebra answer every SAT/SATPOS/TAUT query identically, so
//! [`TermSpace`] keeps one representative per joint table:
//!
//! * level 0 holds the atoms `x1..xv`, `0` and `1`;
//! * level `c` holds every joint table first reached by a term with `c`
//!   binary connectives, built as `op(f, g)` from levels `a` and `c-1-a`.
//!
//! Only pairs taken from the *exact* levels `a` and `c-1-a` are needed: if
//! either argument were reachable with fewer connectives, `op(f, g)` would
//! already be reachable below level `c`. The final level is streamed to the
//! visitor without being stored.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::term::{BinOp, Term, Var};
use std::collections::HashMap;
use std::ops::ControlFlow;

/// Where a stored table came from; used to rebuild a representative term.
#[derive(Debug, Clone, Copy)]
enum Origin {
    Var(Var),
    Zero,
    One,
    Node(BinOp, Slot, Slot),
}

/// `(level, index within level)`.
type Slot = (u32, u32);

#[derive(Debug, Default)]
struct Level {
    values: Vec<u8>,
    origins: Vec<Origin>,
}

/// Joint value tables of all terms up to a connective bound.
pub struct TermSpace<'a> {
    algebras: Vec<&'a FiniteAlgebra>,
    /// Start of each algebra's block inside a joint table.
    offsets: Vec<usize>,
    points: Vec<usize>,
    width: usize,
    vars: u32,
    levels: Vec<Level>,
    index: HashMap<u64, Vec<Slot>>,
}

fn hash_bytes(v: &[u8]) -> u64 {
    // FxHash-style mixing over 8-byte chunks.
    const K: u64 = 0x517c_c1b7_2722_0a95;
    let mut h: u64 = v.len() as u64;
    let mut chunks = v.chunks_exact(8);
    for c in &mut chunks {
        let w = u64::from_le_bytes(c.try_into().unwrap());
        h = (h.rotate_left(5) ^ w).wrapping_mul(K);
    }
    for &b in chunks.remainder() {
        h = (h.rotate_left(5) ^ b as u64).wrapping_mul(K);
    }
    h
}

impl<'a> TermSpace<'a> {
    /// Prepares tables over `x1..=x{vars}` on the given algebras.
    ///
    /// Panics if an algebra has more than 256 elements.
    pub fn new(algebras: &[&'a FiniteAlgebra], vars: u32) -> Self {
        assert!(algebras.iter().all(|a| a.size() <= 256), "algebra too large");
        let mut offsets = Vec::new();
        let mut points = Vec::new();
        let mut width = 0;
        for a in algebras {
            let p = a.size().pow(vars);
            offsets.push(width);
            points.push(p);
            width += p;
        }
        let mut space = TermSpace {
            algebras: algebras.to_vec(),
            offsets,
            points,
            width,
            vars,
            levels: Vec::new(),
            index: HashMap::new(),
        };
        space.build_atoms();
        space
    }

    pub fn algebra(&self, i: usize) -> &FiniteAlgebra {
        self.algebras[i]
    }

    pub fn algebra_count(&self) -> usize {
        self.algebras.len()
    }

    /// Number of stored tables at each level.
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.origins.len()).collect()
    }

    /// Assignment (indexed by variable `1..=vars`) at a point of algebra `i`.
    pub fn point_assignment(&self, alg: usize, point: usize) -> Vec<Elem> {
        let n = self.algebras[alg].size();
        let mut digits = vec![0; self.vars as usize];
        let mut p = point;
        for d in digits.iter_mut().rev() {
            *d = p % n;
            p /= n;
        }
        digits
    }

    fn build_atoms(&mut self) {
        let mut level = Level::default();
        let mut row = vec![0u8; self.width];
        for v in 1..=self.vars {
            for (i, alg) in self.algebras.iter().enumerate() {
                let n = alg.size();
                let stride = n.pow(self.vars - v);
                for p in 0..self.points[i] {
                    row[self.offsets[i] + p] = ((p / stride) % n) as u8;
                }
            }
            self.push_if_new(&mut level, 0, &row, Origin::Var(v));
        }
        for (constant, origin) in [(false, Origin::Zero), (true, Origin::One)] {
            for (i, alg) in self.algebras.iter().enumerate() {
                let c = if constant { alg.one() } else { alg.zero() } as u8;
                row[self.offsets[i]..self.offsets[i] + self.points[i]].fill(c);
            }
            self.push_if_new(&mut level, 0, &row, origin);
        }
        self.levels.push(level);
    }

    fn lookup(&self, current: &Level, level: u32, row: &[u8], h: u64) -> bool {
        let Some(slots) = self.index.get(&h) else {
            return false;
        };
        slots.iter().any(|&(l, i)| {
            let lv = if l == level { current } else { &self.levels[l as usize] };
            let start = i as usize * self.width;
            &lv.values[start..start + self.width] == row
        })
    }

    fn push_if_new(&mut self, level: &mut Level, l: u32, row: &[u8], origin: Origin) -> bool {
        let h = hash_bytes(row);
        if self.lookup(level, l, row, h) {
            return false;
        }
        let idx = level.origins.len() as u32;
        level.values.extend_from_slice(row);
        level.origins.push(origin);
        self.index.entry(h).or_default().push((l, idx));
        true
    }

    fn row(&self, (l, i): Slot) -> &[u8] {
        let start = i as usize * self.width;
        &self.levels[l as usize].values[start..start + self.width]
    }

    /// Argument pairs `(op, left, right)` producing candidates at `level`.
    fn for_each_pair(
        &self,
        level: u32,
        mut f: impl FnMut(BinOp, Slot, Slot) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        for a in 0..level {
            let b = level - 1 - a;
            let (na, nb) = (
                self.levels[a as usize].origins.len() as u32,
                self.levels[b as usize].origins.len() as u32,
            );
            for op in BinOp::ALL {
                let symmetric = op != BinOp::Impl;
                if symmetric && a > b {
                    continue;
                }
                for i in 0..na {
                    let j0 = if symmetric && a == b { i } else { 0 };
                    for j in j0..nb {
                        f(op, (a, i), (b, j))?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Stores every new table at the next level. Returns how many were new.
    pub fn grow(&mut self) -> usize {
        let level = self.levels.len() as u32;
        let mut pairs = Vec::new();
        let _ = self.for_each_pair(level, |op, l, r| {
            pairs.push((op, l, r));
            ControlFlow::Continue(())
        });
        let mut next = Level::default();
        let mut row = vec![0u8; self.width];
        for (op, l, r) in pairs {
            self.combine(op, l, r, &mut row);
            self.push_if_new(&mut next, level, &row, Origin::Node(op, l, r));
        }
        let added = next.origins.len();
        self.levels.push(next);
        added
    }

    fn combine(&self, op: BinOp, l: Slot, r: Slot, out: &mut [u8]) {
        let (lr, rr) = (self.row(l), self.row(r));
        for (i, alg) in self.algebras.iter().enumerate() {
            let span = self.offsets[i]..self.offsets[i] + self.points[i];
            for p in span {
                out[p] = alg.op(op, lr[p] as Elem, rr[p] as Elem) as u8;
            }
        }
    }

    fn term_of(&self, (l, i): Slot) -> Term {
        match self.levels[l as usize].origins[i as usize] {
            Origin::Var(v) => Term::Var(v),
            Origin::Zero => Term::Zero,
            Origin::One => Term::One,
            Origin::Node(op, a, b) => Term::binary(op, self.term_of(a), self.term_of(b)),
        }
    }

    /// Visits one representative of every joint table reachable with at
    /// most `max_connectives` connectives, level by level. Levels below the
    /// bound are built and stored only when the visitor gets that far; the
    /// top level is streamed and may repeat tables.
    pub fn visit(
        &mut self,
        max_connectives: u32,
        mut f: impl FnMut(&Candidate<'_>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        for l in 0..=max_connectives {
            if l as usize >= self.levels.len() {
                if l == max_connectives {
                    let space = &*self;
                    return space.for_each_pair(l, |op, a, b| {
                        f(&Candidate {
                            space,
                            shape: Shape::Fresh(op, a, b),
                        })
                    });
                }
                self.grow();
            }
            for i in 0..self.levels[l as usize].origins.len() as u32 {
                f(&Candidate {
                    space: self,
                    shape: Shape::Stored((l, i)),
                })?;
            }
        }
        ControlFlow::Continue(())
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Stored(Slot),
    Fresh(BinOp, Slot, Slot),
}

/// One term of the bounded set, viewed through its joint value table.
pub struct Candidate<'s> {
    space: &'s TermSpace<'s>,
    shape: Shape,
}

impl Candidate<'_> {
    /// Value on algebra `alg` at assignment index `point`.
    #[inline]
    pub fn value(&self, alg: usize, point: usize) -> Elem {
        let p = self.space.offsets[alg] + point;
        match self.shape {
            Shape::Stored(s) => self.space.row(s)[p] as Elem,
            Shape::Fresh(op, l, r) => {
                let a = self.space.row(l)[p] as Elem;
                let b = self.space.row(r)[p] as Elem;
                self.space.algebras[alg].op(op, a, b)
            }
        }
    }

    /// First point of algebra `alg` whose value satisfies `pred`.
    pub fn find(&self, alg: usize, pred: impl Fn(Elem) -> bool) -> Option<usize> {
        (0..self.space.points[alg]).find(|&p| pred(self.value(alg, p)))
    }

    pub fn sat(&self, alg: usize) -> bool {
        let one = self.space.algebras[alg].one();
        self.find(alg, |v| v == one).is_some()
    }

    pub fn satpos(&self, alg: usize) -> bool {
        let zero = self.space.algebras[alg].zero();
        self.find(alg, |v| v != zero).is_some()
    }

    pub fn taut(&self, alg: usize) -> bool {
        let one = self.space.algebras[alg].one();
        self.find(alg, |v| v != one).is_none()
    }

    /// A representative term with this joint table.
    pub fn term(&self) -> Term {
        match self.shape {
            Shape::Stored(s) => self.space.term_of(s),
            Shape::Fresh(op, l, r) => Term::binary(op, self.space.term_of(l), self.space.term_of(r)),
        }
    }
}
