//! Single-word subsets of `X_n = {0, …, n-1}` for `n <= 64`.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground-set size; every row fits one machine word.
pub const MAX_N: usize = 64;

/// A subset of `{0, …, 63}` packed into one `u64`, bit `i` standing for element `i`.
///
/// `Ord` is the length-lexicographic order used for topologies: smaller
/// cardinality first, then lexicographic on the increasing element
/// sequences with numeric element comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set `X_n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        IndexSet(1u64 << i)
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub const fn with(self, i: usize) -> Self {
        IndexSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub const fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// True when every member is below `n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(IndexSet::full(n))
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Image of the set under `images[i]`.
    pub fn map(self, images: &[usize]) -> Self {
        self.iter()
            .fold(IndexSet::EMPTY, |acc, i| acc.with(images[i]))
    }

    /// The subset word: digits concatenated when every member is below 10,
    /// comma-separated otherwise; `"e"` for the empty set.
    pub fn word(self) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        if self.last().unwrap_or(0) < 10 {
            self.iter().map(|i| char::from(b'0' + i as u8)).collect()
        } else {
            self.list()
        }
    }

    /// Comma-separated members, `"e"` for the empty set.
    pub fn list(self) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        parts.join(",")
    }

    /// Inverse of [`IndexSet::list`].
    pub fn parse_list(s: &str) -> Option<Self> {
        if s == "e" {
            return Some(IndexSet::EMPTY);
        }
        let mut set = IndexSet::EMPTY;
        let mut last: Option<usize> = None;
        for part in s.split(',') {
            let i: usize = part.parse().ok()?;
            // canonical form only: strictly increasing, no leading zeros
            if i >= MAX_N || last.is_some_and(|l| l >= i) || part != i.to_string() {
                return None;
            }
            set.insert(i);
            last = Some(i);
        }
        Some(set)
    }

    /// Inverse of [`IndexSet::word`].
    pub fn parse_word(s: &str) -> Option<Self> {
        if s.contains(',') {
            return Self::parse_list(s);
        }
        if s == "e" {
            return Some(IndexSet::EMPTY);
        }
        let mut set = IndexSet::EMPTY;
        let mut last: Option<usize> = None;
        for c in s.chars() {
            let i = c.to_digit(10)? as usize;
            if last.is_some_and(|l| l >= i) {
                return None;
            }
            set.insert(i);
            last = Some(i);
        }
        (!s.is_empty()).then_some(set)
    }
}

/// Length-lex comparison of two subsets.
#[inline]
pub fn length_lex_cmp(a: IndexSet, b: IndexSet) -> Ordering {
    match a.len().cmp(&b.len()) {
        Ordering::Equal => {
            let diff = a.0 ^ b.0;
            if diff == 0 {
                Ordering::Equal
            } else if a.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest element on which they differ belongs to `a`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        other => other,
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        length_lex_cmp(*self, *other)
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.list())
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, |s, i| s.with(i))
    }
}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterator over members in increasing order.
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    // reference order: compare (len, sorted element vector)
    fn oracle(a: IndexSet, b: IndexSet) -> Ordering {
        let va: Vec<usize> = a.iter().collect();
        let vb: Vec<usize> = b.iter().collect();
        (va.len(), va).cmp(&(vb.len(), vb))
    }

    #[test]
    fn length_lex_matches_sequence_order() {
        for a in 0u64..256 {
            for b in 0u64..256 {
                let (a, b) = (IndexSet::from_bits(a), IndexSet::from_bits(b));
                assert_eq!(length_lex_cmp(a, b), oracle(a, b), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn order_handles_large_elements() {
        // 2 < 10 numerically even though "10" < "2" as text
        assert!(set(&[0, 2]) < set(&[0, 10]));
        assert!(set(&[63]) > set(&[62]));
        assert!(set(&[5]) < set(&[0, 1]));
    }

    #[test]
    fn words_round_trip() {
        for s in [set(&[]), set(&[0, 1, 3]), set(&[2, 11, 40])] {
            assert_eq!(IndexSet::parse_word(&s.word()), Some(s));
            assert_eq!(IndexSet::parse_list(&s.list()), Some(s));
        }
        assert_eq!(set(&[0, 1, 3]).word(), "013");
        assert_eq!(set(&[0, 1]).list(), "0,1");
        assert_eq!(IndexSet::parse_list("1,0"), None);
        assert_eq!(IndexSet::parse_list("01"), None);
        assert_eq!(IndexSet::parse_list("64"), None);
    }

    #[test]
    fn full_and_fits() {
        assert_eq!(IndexSet::full(0), IndexSet::EMPTY);
        assert_eq!(IndexSet::full(64).len(), 64);
        assert!(set(&[0, 3]).fits(4));
        assert!(!set(&[0, 4]).fits(4));
        assert_eq!(set(&[1, 5]).last(), Some(5));
        assert_eq!(IndexSet::EMPTY.first(), None);
    }
}
