//! Naturally labelled topologies (ideal families of NL posets) and their
//! first/next generation by interval doubling.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::IndexSet;
use crate::error::{check_capacity, Error, Result};
use crate::ideals::ideal_supports;
use crate::matrix::PosetMatrix;

/// A family of subsets of `X_n` containing `∅` and `X_n`, closed under
/// union and intersection, whose specialization order is a natural labeling.
///
/// Sets are kept strictly increasing in length-lex order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Nlt {
    n: usize,
    sets: Vec<IndexSet>,
}

impl Nlt {
    /// Validates `sets` (which must already be sorted) as a topology on `X_n`.
    pub fn new(n: usize, sets: Vec<IndexSet>) -> Result<Self> {
        check_capacity(n)?;
        match nlt_defect(n, &sets) {
            Some(why) => Err(Error::InvalidTopology(why)),
            None => Ok(Nlt { n, sets }),
        }
    }

    /// The one topology on the empty set, `{∅}`.
    pub fn trivial() -> Self {
        Nlt { n: 0, sets: vec![IndexSet::EMPTY] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    /// Always false; `∅` is a member of every topology.
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: IndexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    fn require(&self, s: IndexSet) -> Result<usize> {
        self.sets.binary_search(&s).map_err(|_| Error::NotMember(s.list()))
    }

    /// Smallest member containing `x`, i.e. the down-set of `x`.
    fn smallest_containing(&self, x: usize) -> IndexSet {
        *self.sets.iter().find(|s| s.contains(x)).expect("X_n contains every element")
    }

    fn grow_unchecked(&self, s: IndexSet) -> Nlt {
        let n = self.n;
        let mut out = Vec::with_capacity(self.sets.len() * 2);
        // appending n (the largest element) keeps the doubled run sorted
        let mut doubled = self.sets.iter().filter(|u| s.is_subset(**u)).map(|u| u.with(n)).peekable();
        for &u in &self.sets {
            while let Some(&d) = doubled.peek() {
                if d < u {
                    out.push(d);
                    doubled.next();
                } else {
                    break;
                }
            }
            out.push(u);
        }
        out.extend(doubled);
        Nlt { n: n + 1, sets: out }
    }

    fn cut_unchecked(&self) -> Nlt {
        let top = self.n - 1;
        Nlt { n: top, sets: self.sets.iter().copied().filter(|s| !s.contains(top)).collect() }
    }

    fn next_after(&self, idx: usize) -> Option<IndexSet> {
        self.sets.get(idx + 1).copied()
    }

    /// One line: members separated by spaces, each as a comma-separated
    /// element list, `∅` written `e`.
    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.sets.iter().map(|s| s.list()).collect();
        parts.join(" ")
    }

    /// Inverse of [`Nlt::to_line`]; `n` is the size of the last member.
    pub fn parse_line(line: &str) -> Result<Self> {
        let mut sets = Vec::new();
        for tok in line.split(' ') {
            let s = IndexSet::parse_list(tok)
                .ok_or_else(|| Error::Parse { line: 1, msg: format!("bad set {tok:?}") })?;
            sets.push(s);
        }
        let n = sets.last().map_or(0, |s| s.len());
        Nlt::new(n, sets)
    }
}

impl fmt::Display for Nlt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

fn nlt_defect(n: usize, sets: &[IndexSet]) -> Option<String> {
    if sets.first() != Some(&IndexSet::EMPTY) {
        return Some("missing the empty set".into());
    }
    if sets.last() != Some(&IndexSet::full(n)) {
        return Some("missing the full set".into());
    }
    if let Some(s) = sets.iter().find(|s| !s.fits(n)) {
        return Some(format!("{} is not a subset of 0..{n}", s.list()));
    }
    if let Some(w) = sets.windows(2).find(|w| w[0] >= w[1]) {
        return Some(format!("{} and {} out of length-lex order", w[0].list(), w[1].list()));
    }
    let member = |s: IndexSet| sets.binary_search(&s).is_ok();
    for (k, &a) in sets.iter().enumerate() {
        for &b in &sets[k + 1..] {
            if !member(a.union(b)) {
                return Some(format!("union of {} and {} missing", a.list(), b.list()));
            }
            if !member(a.intersection(b)) {
                return Some(format!("intersection of {} and {} missing", a.list(), b.list()));
            }
        }
    }
    for y in 0..n {
        let down = sets.iter().filter(|s| s.contains(y)).fold(IndexSet::full(n), |acc, s| acc.intersection(*s));
        if !down.fits(y + 1) {
            return Some(format!("element {y} lies above a larger label"));
        }
    }
    None
}

/// Whether `sets` is a naturally labelled topology on `X_n`.
pub fn validate_nlt(n: usize, sets: &[IndexSet]) -> bool {
    n <= crate::bits::MAX_N && nlt_defect(n, sets).is_none()
}

/// The ideal family of `a`.
pub fn ideals_to_nlt(a: &PosetMatrix) -> Nlt {
    let mut sets = ideal_supports(a);
    sets.sort_unstable();
    Nlt { n: a.n(), sets }
}

/// The unique poset whose ideal family is `t`: row `y` is the intersection
/// of all members containing `y`.
pub fn nlt_to_poset(t: &Nlt) -> Result<PosetMatrix> {
    if let Some(why) = nlt_defect(t.n, &t.sets) {
        return Err(Error::InvalidTopology(why));
    }
    let rows = (0..t.n)
        .map(|y| {
            t.sets
                .iter()
                .filter(|s| s.contains(y))
                .fold(IndexSet::full(t.n), |acc, s| acc.intersection(*s))
        })
        .collect();
    PosetMatrix::new(rows)
}

/// Doubles the interval `[s, X_n]` with the new element `n`.
pub fn grow(t: &Nlt, s: IndexSet) -> Result<Nlt> {
    t.require(s)?;
    check_capacity(t.n + 1)?;
    Ok(t.grow_unchecked(s))
}

/// Drops every member containing `n - 1`.
pub fn cut(t: &Nlt) -> Result<Nlt> {
    if t.n == 0 {
        return Err(Error::EmptyCut);
    }
    Ok(t.cut_unchecked())
}

/// The member right after `s` in length-lex order.
pub fn next_in(t: &Nlt, s: IndexSet) -> Result<Option<IndexSet>> {
    let idx = t.require(s)?;
    Ok(t.next_after(idx))
}

/// `n`-fold doubling of `{∅}` at `∅`: the full power set of `X_n`.
pub fn first(n: usize) -> Nlt {
    assert!(n < 32, "first({n}) would hold 2^{n} sets");
    (0..n).fold(Nlt::trivial(), |t, _| t.grow_unchecked(IndexSet::EMPTY))
}

/// Successor of `t` in first/next order, or `None` after the last one.
///
/// Descends through cuts until some level has a next doubling point, then
/// regrows with `∅` once per level passed.
pub fn next(t: &Nlt) -> Option<Nlt> {
    let mut current = t.clone();
    let mut levels = 0;
    while current.n > 0 {
        let top = current.n - 1;
        let grown_at = current.smallest_containing(top).without(top);
        let below = current.cut_unchecked();
        let idx = below
            .sets
            .binary_search(&grown_at)
            .expect("the doubling point of a valid topology survives the cut");
        if let Some(s) = below.next_after(idx) {
            let mut out = below.grow_unchecked(s);
            for _ in 0..levels {
                out = out.grow_unchecked(IndexSet::EMPTY);
            }
            return Some(out);
        }
        current = below;
        levels += 1;
    }
    None
}

/// How [`generate_all`] produces topologies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationMode {
    /// Grow every member of every size-`(n-1)` topology, deduplicating.
    Recursive,
    /// `first(n)`, then `next` until exhausted.
    Stream,
}

/// Every topology of size `n`.
pub fn generate_all(n: usize, mode: GenerationMode) -> Vec<Nlt> {
    match mode {
        GenerationMode::Stream => NltStream::new(n).collect(),
        GenerationMode::Recursive => generate_recursive(n).into_iter().collect(),
    }
}

fn generate_recursive(n: usize) -> BTreeSet<Nlt> {
    if n == 0 {
        return BTreeSet::from([Nlt::trivial()]);
    }
    let mut out = BTreeSet::new();
    for t in generate_recursive(n - 1) {
        for &s in &t.sets {
            out.insert(t.grow_unchecked(s));
        }
    }
    out
}

/// First/next iterator. Its whole state is the next topology to emit, so a
/// stream can be resumed from any emitted topology.
#[derive(Clone, Debug)]
pub struct NltStream {
    pending: Option<Nlt>,
}

impl NltStream {
    pub fn new(n: usize) -> Self {
        NltStream { pending: Some(first(n)) }
    }

    /// Continues after `t`, which is not emitted again.
    pub fn resume_after(t: &Nlt) -> Self {
        NltStream { pending: next(t) }
    }
}

impl Iterator for NltStream {
    type Item = Nlt;

    fn next(&mut self) -> Option<Nlt> {
        let current = self.pending.take()?;
        self.pending = next(&current);
        Some(current)
    }
}

/// Counts size-`n` topologies by streaming, holding one at a time.
pub fn count_stream(n: usize) -> u64 {
    let mut count = 0;
    let mut current = Some(first(n));
    while let Some(t) = current {
        count += 1;
        current = next(&t);
    }
    count
}
