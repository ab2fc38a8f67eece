//! Poset vectors (`vA = v`) and the distributive lattice they form.

use serde::{Deserialize, Serialize};

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::matrix::{ideal_witness, PosetMatrix, PosetVector};

/// All poset vectors of one matrix, in length-lex order of their supports,
/// with the cover edges of entrywise `≤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    n: usize,
    vectors: Vec<PosetVector>,
    /// `(lower, upper)` index pairs, sorted.
    hasse: Vec<(usize, usize)>,
}

impl IdealLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[PosetVector] {
        &self.vectors
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn supports(&self) -> impl Iterator<Item = IndexSet> + '_ {
        self.vectors.iter().map(|v| v.support())
    }

    /// Position of the vector with this support.
    pub fn index_of(&self, support: IndexSet) -> Option<usize> {
        self.vectors.binary_search_by(|v| v.support().cmp(&support)).ok()
    }

    pub fn contains(&self, support: IndexSet) -> bool {
        self.index_of(support).is_some()
    }

    /// One JSON object per line: a header carrying `n`, then every vector
    /// as its subset word, then every Hasse edge.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut push = |r: &Record| {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        };
        push(&Record::Header { n: self.n });
        for (index, v) in self.vectors.iter().enumerate() {
            push(&Record::Vector { index, word: v.support().word() });
        }
        for &(lo, hi) in &self.hasse {
            push(&Record::Edge { lo, hi });
        }
        out
    }

    /// Inverse of [`IdealLattice::to_jsonl`].
    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut n = None;
        let mut vectors = Vec::new();
        let mut hasse = Vec::new();
        for (k, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = |msg: String| Error::Parse { line: k + 1, msg };
            let rec: Record = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
            match rec {
                Record::Header { n: m } => n = Some(m),
                Record::Vector { index, word } => {
                    let m = n.ok_or_else(|| bad("vector before header".into()))?;
                    if index != vectors.len() {
                        return Err(bad(format!("expected index {}", vectors.len())));
                    }
                    let s = IndexSet::parse_word(&word).ok_or_else(|| bad(format!("bad word {word:?}")))?;
                    vectors.push(PosetVector::new(m, s).map_err(|e| bad(e.to_string()))?);
                }
                Record::Edge { lo, hi } => hasse.push((lo, hi)),
            }
        }
        let n = n.ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        Ok(IdealLattice { n, vectors, hasse })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Record {
    Header { n: usize },
    Vector { index: usize, word: String },
    Edge { lo: usize, hi: usize },
}

/// Whether `vA = v` over the Boolean semiring.
pub fn is_poset_vector(a: &PosetMatrix, v: &PosetVector) -> Result<bool> {
    if v.n() != a.n() {
        return Err(Error::SizeMismatch { expected: a.n(), found: v.n() });
    }
    let product = v
        .support()
        .iter()
        .fold(IndexSet::EMPTY, |acc, i| acc.union(a.row(i)));
    Ok(product == v.support())
}

/// Supports of all order ideals, in discovery order.
///
/// Depth-first over labels `0..n`; element `i` may join only when its strict
/// down-set is already present, which is decided because the labeling is
/// natural.
pub fn ideal_supports(a: &PosetMatrix) -> Vec<IndexSet> {
    let mut out = Vec::new();
    fn walk(a: &PosetMatrix, i: usize, current: IndexSet, out: &mut Vec<IndexSet>) {
        if i == a.n() {
            out.push(current);
            return;
        }
        walk(a, i + 1, current, out);
        if a.row(i).without(i).is_subset(current) {
            walk(a, i + 1, current.with(i), out);
        }
    }
    walk(a, 0, IndexSet::EMPTY, &mut out);
    out
}

/// Number of order ideals without materializing them.
pub fn count_ideals(a: &PosetMatrix) -> u64 {
    fn walk(a: &PosetMatrix, i: usize, current: IndexSet) -> u64 {
        if i == a.n() {
            return 1;
        }
        let skip = walk(a, i + 1, current);
        if a.row(i).without(i).is_subset(current) {
            skip + walk(a, i + 1, current.with(i))
        } else {
            skip
        }
    }
    walk(a, 0, IndexSet::EMPTY)
}

/// Every poset vector of `a`, sorted length-lex, with Hasse edges.
pub fn enumerate_poset_vectors(a: &PosetMatrix) -> IdealLattice {
    let n = a.n();
    let mut supports = ideal_supports(a);
    supports.sort_unstable();
    let vectors: Vec<PosetVector> = supports
        .iter()
        .map(|&s| PosetVector::new(n, s).expect("support fits"))
        .collect();
    let mut lattice = IdealLattice { n, vectors, hasse: Vec::new() };
    let ups: Vec<IndexSet> = (0..n).map(|x| a.up_set(x).without(x)).collect();
    let mut hasse = Vec::new();
    for (hi, &s) in supports.iter().enumerate() {
        // each lower cover removes one maximal element of the ideal
        for x in s.iter().filter(|&x| ups[x].is_disjoint(s)) {
            let lo = lattice.index_of(s.without(x)).expect("ideal minus a maximal element is an ideal");
            hasse.push((lo, hi));
        }
    }
    hasse.sort_unstable();
    lattice.hasse = hasse;
    lattice
}

/// Boolean sum of the rows indexed by the antichain `s`.
pub fn antichain_to_vector(a: &PosetMatrix, s: IndexSet) -> Result<PosetVector> {
    if let Some(m) = s.last().filter(|&m| m >= a.n()) {
        return Err(Error::Index { index: m, n: a.n() });
    }
    for hi in s.iter() {
        if let Some(lo) = a.row(hi).without(hi).intersection(s).first() {
            return Err(Error::NotAntichain { lo, hi });
        }
    }
    let support = s.iter().fold(IndexSet::EMPTY, |acc, i| acc.union(a.row(i)));
    PosetVector::new(a.n(), support)
}

/// Maximal elements of `supp(v)`.
pub fn ideal_to_max_antichain(a: &PosetMatrix, v: &PosetVector) -> Result<IndexSet> {
    if v.n() != a.n() {
        return Err(Error::SizeMismatch { expected: a.n(), found: v.n() });
    }
    let s = v.support();
    if let Some((above, below)) = ideal_witness(a, s) {
        return Err(Error::NotPosetVector { above, below });
    }
    // x is not maximal iff it sits strictly below some other member
    let covered = s.iter().fold(IndexSet::EMPTY, |acc, i| acc.union(a.row(i).without(i)));
    Ok(s.difference(covered))
}

/// Entrywise OR and AND.
pub fn lattice_join_meet(u: &PosetVector, v: &PosetVector) -> Result<(PosetVector, PosetVector)> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch { expected: u.n(), found: v.n() });
    }
    let join = PosetVector::new(u.n(), u.support().union(v.support()))?;
    let meet = PosetVector::new(u.n(), u.support().intersection(v.support()))?;
    Ok((join, meet))
}

/// Members covering exactly one other member.
///
/// In a finite distributive lattice these are exactly the join-irreducibles;
/// for an ideal lattice they are the principal ideals, i.e. the rows of `a`.
pub fn join_irreducibles(lattice: &IdealLattice, a: &PosetMatrix) -> Vec<PosetVector> {
    debug_assert_eq!(lattice.n(), a.n());
    let mut lower_covers = vec![0usize; lattice.len()];
    for &(_, hi) in lattice.hasse() {
        lower_covers[hi] += 1;
    }
    lattice
        .vectors()
        .iter()
        .zip(lower_covers)
        .filter(|&(_, c)| c == 1)
        .map(|(v, _)| *v)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{a_n, v_shape};

    fn vecs(a: &PosetMatrix, entries: &[&str]) -> Vec<IndexSet> {
        let mut v: Vec<IndexSet> = entries
            .iter()
            .map(|e| PosetVector::from_entries(e).unwrap().support())
            .collect();
        v.sort();
        assert!(v.iter().all(|s| s.fits(a.n())));
        v
    }

    fn pv(s: &str) -> PosetVector {
        PosetVector::from_entries(s).unwrap()
    }

    #[test]
    fn is_poset_vector_examples() {
        let a = a_n();
        assert!(is_poset_vector(&a, &pv("0101")).unwrap());
        assert!(!is_poset_vector(&a, &pv("0010")).unwrap());
        assert!(is_poset_vector(&a, &PosetVector::zero(4)).unwrap());
        assert!(is_poset_vector(&a, &pv("101")).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let a = a_n();
        let l = enumerate_poset_vectors(&a);
        let expected = vecs(&a, &["0000", "1000", "0100", "1100", "0101", "1110", "1101", "1111"]);
        assert_eq!(l.supports().collect::<Vec<_>>(), expected);

        let i2 = PosetMatrix::identity(2);
        let l = enumerate_poset_vectors(&i2);
        assert_eq!(l.supports().collect::<Vec<_>>(), vecs(&i2, &["00", "10", "01", "11"]));

        assert_eq!(enumerate_poset_vectors(&v_shape()).len(), 5);
    }

    #[test]
    fn empty_matrix_has_one_vector() {
        let l = enumerate_poset_vectors(&PosetMatrix::empty());
        assert_eq!(l.len(), 1);
        assert!(l.hasse().is_empty());
    }

    #[test]
    fn antichain_examples() {
        let a = a_n();
        let s = |xs: &[usize]| xs.iter().copied().collect::<IndexSet>();
        assert_eq!(antichain_to_vector(&a, s(&[2, 3])).unwrap(), pv("1111"));
        assert_eq!(antichain_to_vector(&a, s(&[])).unwrap(), pv("0000"));
        assert_eq!(antichain_to_vector(&a, s(&[0, 3])).unwrap(), pv("1101"));
        assert_eq!(antichain_to_vector(&a, s(&[0, 2])), Err(Error::NotAntichain { lo: 0, hi: 2 }));

        assert_eq!(ideal_to_max_antichain(&a, &pv("1111")).unwrap(), s(&[2, 3]));
        assert_eq!(ideal_to_max_antichain(&a, &pv("1100")).unwrap(), s(&[0, 1]));
        assert_eq!(ideal_to_max_antichain(&a, &pv("0000")).unwrap(), s(&[]));
        assert!(ideal_to_max_antichain(&a, &pv("0010")).is_err());
    }

    #[test]
    fn join_meet_examples() {
        let (j, m) = lattice_join_meet(&pv("1110"), &pv("1101")).unwrap();
        assert_eq!((j, m), (pv("1111"), pv("1100")));
        let u = pv("0101");
        assert_eq!(lattice_join_meet(&u, &PosetVector::zero(4)).unwrap(), (u, PosetVector::zero(4)));
        assert_eq!(lattice_join_meet(&pv("1000"), &pv("0100")).unwrap().0, pv("1100"));
        assert!(lattice_join_meet(&pv("10"), &pv("100")).is_err());
    }

    #[test]
    fn n_shape_hasse_edges() {
        let l = enumerate_poset_vectors(&a_n());
        let words: Vec<(String, String)> = l
            .hasse()
            .iter()
            .map(|&(lo, hi)| (l.vectors()[lo].support().word(), l.vectors()[hi].support().word()))
            .collect();
        let mut expected: Vec<(String, String)> = [
            ("e", "0"), ("e", "1"), ("0", "01"), ("1", "01"), ("1", "13"),
            ("01", "012"), ("01", "013"), ("13", "013"), ("012", "0123"), ("013", "0123"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        let mut got = words;
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn join_irreducible_examples() {
        let a = a_n();
        let ji: Vec<String> = join_irreducibles(&enumerate_poset_vectors(&a), &a)
            .iter()
            .map(|v| v.support().word())
            .collect();
        assert_eq!(ji, ["0", "1", "13", "012"]);

        let i3 = PosetMatrix::identity(3);
        let ji = join_irreducibles(&enumerate_poset_vectors(&i3), &i3);
        assert_eq!(ji, vec![pv("100"), pv("010"), pv("001")]);

        let c3 = PosetMatrix::chain(3);
        let ji = join_irreducibles(&enumerate_poset_vectors(&c3), &c3);
        assert_eq!(ji, vec![pv("100"), pv("110"), pv("111")]);
    }

    #[test]
    fn jsonl_round_trip() {
        let l = enumerate_poset_vectors(&a_n());
        let text = l.to_jsonl();
        assert!(text.starts_with("{\"kind\":\"header\",\"n\":4}\n"));
        assert!(text.contains("{\"kind\":\"vector\",\"index\":4,\"word\":\"13\"}"));
        assert_eq!(IdealLattice::from_jsonl(&text).unwrap(), l);
        assert!(IdealLattice::from_jsonl("{\"kind\":\"vector\",\"index\":0,\"word\":\"e\"}").is_err());
    }

    #[test]
    fn count_matches_enumeration() {
        for a in [a_n(), v_shape(), PosetMatrix::identity(6), PosetMatrix::chain(5)] {
            assert_eq!(count_ideals(&a), enumerate_poset_vectors(&a).len() as u64);
        }
    }
}
