//! Poset matrices: lower-triangular, reflexive, transitive Boolean matrices
//! whose row `i` is the principal down-set of element `i`.

use std::fmt;

use crate::bits::{IndexSet, MAX_N};
use crate::error::{check_capacity, Error, Result};

/// A square Boolean matrix with rows packed as [`IndexSet`]s.
///
/// Entry `(i, j)` is `rows[i].contains(j)`. Unlike [`PosetMatrix`] no
/// structural property is assumed; relabelled poset matrices live here.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<IndexSet>,
}

impl BoolMatrix {
    pub fn new(n: usize, rows: Vec<IndexSet>) -> Result<Self> {
        check_capacity(n)?;
        if rows.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: rows.len() });
        }
        if let Some(i) = rows.iter().position(|r| !r.fits(n)) {
            return Err(Error::InvalidMatrix(format!("row {i} has a column outside 0..{n}")));
        }
        Ok(BoolMatrix { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        BoolMatrix { n, rows: (0..n).map(IndexSet::singleton).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Rechecks the poset-matrix conditions and upgrades if they hold.
    pub fn into_poset_matrix(self) -> Result<PosetMatrix> {
        PosetMatrix::new(self.rows)
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.n, &self.rows)
    }
}

/// The Boolean semiring product `A·B` (OR of ANDs).
pub fn bool_product(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    if a.n != b.n {
        return Err(Error::SizeMismatch { expected: a.n, found: b.n });
    }
    let rows = a
        .rows
        .iter()
        .map(|r| r.iter().fold(IndexSet::EMPTY, |acc, k| acc.union(b.rows[k])))
        .collect();
    Ok(BoolMatrix { n: a.n, rows })
}

/// The poset matrix of a naturally labelled poset on `{0, …, n-1}`.
///
/// `rows[i]` holds `{ j : j ⪯ i }`, the principal ideal of `i`. All
/// constructors keep the matrix lower-triangular, reflexive and transitive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PosetMatrix {
    n: usize,
    rows: Vec<IndexSet>,
}

/// Length-`n` Boolean row vector, stored by its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PosetVector {
    n: usize,
    support: IndexSet,
}

impl PosetVector {
    pub fn new(n: usize, support: IndexSet) -> Result<Self> {
        check_capacity(n)?;
        match support.last() {
            Some(m) if m >= n => Err(Error::Index { index: m, n }),
            _ => Ok(PosetVector { n, support }),
        }
    }

    pub fn zero(n: usize) -> Self {
        PosetVector { n, support: IndexSet::EMPTY }
    }

    pub fn ones(n: usize) -> Self {
        PosetVector { n, support: IndexSet::full(n) }
    }

    /// Parses entries `v_0 v_1 … v_{n-1}` written as `'0'`/`'1'`.
    pub fn from_entries(s: &str) -> Result<Self> {
        let mut support = IndexSet::EMPTY;
        let n = s.chars().count();
        check_capacity(n)?;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => support.insert(i),
                '0' => {}
                _ => return Err(Error::Parse { line: 1, msg: format!("unexpected character {c:?}") }),
            }
        }
        Ok(PosetVector { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> IndexSet {
        self.support
    }

    pub fn get(&self, i: usize) -> bool {
        self.support.contains(i)
    }

    /// Entries as a `'0'`/`'1'` string.
    pub fn entries(&self) -> String {
        (0..self.n).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for PosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.entries())
    }
}

/// Chain or antichain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StandardKind {
    Chain,
    Antichain,
}

impl PosetMatrix {
    /// Validates `rows` as a poset matrix of size `rows.len()`.
    pub fn new(rows: Vec<IndexSet>) -> Result<Self> {
        let n = rows.len();
        check_capacity(n)?;
        if let Some(why) = structural_defect(n, &rows) {
            return Err(Error::InvalidMatrix(why));
        }
        Ok(PosetMatrix { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<IndexSet>) -> Self {
        debug_assert!(validate_poset_matrix(rows.len(), &rows).unwrap_or(false));
        PosetMatrix { n: rows.len(), rows }
    }

    /// The 0×0 matrix.
    pub fn empty() -> Self {
        PosetMatrix { n: 0, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        standard_poset(StandardKind::Antichain, n)
    }

    pub fn chain(n: usize) -> Self {
        standard_poset(StandardKind::Chain, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> IndexSet {
        self.rows[i]
    }

    /// `lo ⪯ hi` in the poset.
    #[inline]
    pub fn leq(&self, lo: usize, hi: usize) -> bool {
        self.rows[hi].contains(lo)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ z : x ⪯ z }`, including `x`.
    pub fn up_set(&self, x: usize) -> IndexSet {
        (x..self.n).filter(|&z| self.rows[z].contains(x)).collect()
    }

    /// Column supports, i.e. every up-set.
    pub fn columns(&self) -> Vec<IndexSet> {
        let mut cols = vec![IndexSet::EMPTY; self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter() {
                cols[j].insert(i);
            }
        }
        cols
    }

    /// `(row sum, column sum)` for each element.
    pub fn degree_pairs(&self) -> Vec<(usize, usize)> {
        self.rows.iter().zip(self.columns()).map(|(r, c)| (r.len(), c.len())).collect()
    }

    pub fn as_bool(&self) -> BoolMatrix {
        BoolMatrix { n: self.n, rows: self.rows.clone() }
    }

    /// The top-left `(n-1)×(n-1)` block and the last row's first `n-1`
    /// entries, i.e. the unique `(A, v)` with `self = A^v`.
    pub fn parent(&self) -> Option<(PosetMatrix, PosetVector)> {
        let last = *self.rows.last()?;
        let m = self.n - 1;
        let block = PosetMatrix { n: m, rows: self.rows[..m].to_vec() };
        Some((block, PosetVector { n: m, support: last.without(m) }))
    }

    /// Row-major bit string of all `n²` entries.
    pub fn bit_string(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n);
        for r in &self.rows {
            s.extend((0..self.n).map(|j| if r.contains(j) { '1' } else { '0' }));
        }
        s
    }

    /// Row-major bit string packed four bits per hex digit, zero padded.
    pub fn to_hex(&self) -> String {
        let bits = self.bit_string().into_bytes();
        bits.chunks(4)
            .map(|c| {
                let nib = (0..4).fold(0u32, |acc, k| acc << 1 | u32::from(c.get(k) == Some(&b'1')));
                char::from_digit(nib, 16).unwrap_or('0')
            })
            .collect()
    }

    /// Inverse of [`PosetMatrix::to_hex`]; `n` is not recoverable from the
    /// digits alone.
    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_capacity(n)?;
        let need = (n * n).div_ceil(4);
        if hex.len() != need {
            return Err(Error::Parse { line: 1, msg: format!("expected {need} hex digits for n = {n}") });
        }
        let mut bits = Vec::with_capacity(need * 4);
        for c in hex.chars() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse { line: 1, msg: format!("bad hex digit {c:?}") })?;
            bits.extend((0..4).rev().map(|k| d >> k & 1 == 1));
        }
        let rows = (0..n)
            .map(|i| (0..n).filter(|&j| bits[i * n + j]).collect())
            .collect();
        PosetMatrix::new(rows)
    }

    /// Parses `n` lines of `n` characters `'0'`/`'1'`.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        parse_block(&lines)
    }
}

impl fmt::Display for PosetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.n, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, n: usize, rows: &[IndexSet]) -> fmt::Result {
    for r in rows {
        for j in 0..n {
            f.write_str(if r.contains(j) { "1" } else { "0" })?;
        }
        writeln!(f)?;
    }
    Ok(())
}

fn parse_block(lines: &[(usize, &str)]) -> Result<PosetMatrix> {
    let n = lines.len();
    if n > MAX_N {
        return Err(Error::Capacity(n));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line, text) in lines {
        if text.chars().count() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} characters, found {}", text.chars().count()),
            });
        }
        let mut r = IndexSet::EMPTY;
        for (j, c) in text.chars().enumerate() {
            match c {
                '1' => r.insert(j),
                '0' => {}
                _ => return Err(Error::Parse { line, msg: format!("unexpected character {c:?}") }),
            }
        }
        rows.push(r);
    }
    PosetMatrix::new(rows).map_err(|e| match e {
        Error::InvalidMatrix(msg) => Error::Parse { line: lines.first().map_or(1, |l| l.0), msg },
        other => other,
    })
}

/// Marker line standing for the 0×0 matrix inside a matrix stream.
pub const EMPTY_MATRIX_LINE: &str = "-";

/// Parses a stream of matrices separated by blank lines.
pub fn parse_matrices(text: &str) -> Result<Vec<PosetMatrix>> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            if !block.is_empty() {
                out.push(parse_block(&block)?);
                block.clear();
            }
        } else if line == EMPTY_MATRIX_LINE && block.is_empty() {
            out.push(PosetMatrix::empty());
        } else {
            block.push((k + 1, line));
        }
    }
    if !block.is_empty() {
        out.push(parse_block(&block)?);
    }
    Ok(out)
}

/// Renders one matrix for a blank-line separated stream.
pub fn format_stream_entry(a: &PosetMatrix) -> String {
    if a.n == 0 {
        format!("{EMPTY_MATRIX_LINE}\n")
    } else {
        a.to_string()
    }
}

fn structural_defect(n: usize, rows: &[IndexSet]) -> Option<String> {
    for (i, r) in rows.iter().enumerate() {
        if !r.fits(i + 1) {
            return Some(format!("row {i} has an entry above the diagonal"));
        }
        if !r.contains(i) {
            return Some(format!("row {i} has a zero diagonal entry"));
        }
    }
    let by_closure = transitive_by_closure(rows);
    debug_assert_eq!(by_closure, transitive_by_submatrix(n, rows));
    if !by_closure {
        return Some("not transitive".to_string());
    }
    None
}

/// Row `i` equals the union of the rows it selects.
fn transitive_by_closure(rows: &[IndexSet]) -> bool {
    rows.iter()
        .all(|r| r.iter().fold(IndexSet::EMPTY, |acc, j| acc.union(rows[j])) == *r)
}

/// No principal 2×2 pattern `[[1, 1], [0, 1]]` on rows `(j, i)`, columns
/// `(k, j)` with `k < j < i`: that is `k ⪯ j ⪯ i` without `k ⪯ i`.
fn transitive_by_submatrix(n: usize, rows: &[IndexSet]) -> bool {
    for i in 0..n {
        for j in 0..i {
            if !rows[i].contains(j) {
                continue;
            }
            for k in 0..j {
                if rows[j].contains(k) && !rows[i].contains(k) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff `rows` is lower-triangular, reflexive and transitive.
///
/// Transitivity is decided twice, by the row-closure scan and by the
/// forbidden-submatrix criterion; the two must agree.
pub fn validate_poset_matrix(n: usize, rows: &[IndexSet]) -> Result<bool> {
    check_capacity(n)?;
    if rows.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: rows.len() });
    }
    if let Some(i) = rows.iter().position(|r| !r.fits(n)) {
        return Err(Error::Index { index: rows[i].last().unwrap_or(0), n });
    }
    let shape_ok = rows.iter().enumerate().all(|(i, r)| r.fits(i + 1) && r.contains(i));
    let by_closure = transitive_by_closure(rows);
    let by_submatrix = transitive_by_submatrix(n, rows);
    assert_eq!(by_closure, by_submatrix, "transitivity criteria disagree on {rows:?}");
    Ok(shape_ok && by_closure)
}

/// Reflexive-transitive closure of cover pairs `(lo, hi)` with `lo < hi`.
pub fn from_relations(n: usize, covers: &[(usize, usize)]) -> Result<PosetMatrix> {
    check_capacity(n)?;
    let mut below = vec![IndexSet::EMPTY; n];
    for &(lo, hi) in covers {
        if lo >= hi {
            return Err(Error::NaturalLabeling { lo, hi });
        }
        if hi >= n {
            return Err(Error::Index { index: hi, n });
        }
        below[hi].insert(lo);
    }
    // natural labeling: every row an element depends on is already closed
    let mut rows: Vec<IndexSet> = Vec::with_capacity(n);
    for (i, b) in below.into_iter().enumerate() {
        let r = b.iter().fold(IndexSet::singleton(i), |acc, j| acc.union(rows[j]));
        rows.push(r);
    }
    Ok(PosetMatrix::from_rows_unchecked(rows))
}

/// The first `(above, below)` with `above ∈ supp(v)`, `below ⪯ above`,
/// `below ∉ supp(v)`.
pub(crate) fn ideal_witness(a: &PosetMatrix, support: IndexSet) -> Option<(usize, usize)> {
    support
        .iter()
        .find_map(|i| a.rows[i].difference(support).first().map(|j| (i, j)))
}

/// `A^v`: `A` bordered by `v` as the last row and a 1 in the corner.
pub fn v_extension(a: &PosetMatrix, v: &PosetVector) -> Result<PosetMatrix> {
    if v.n != a.n {
        return Err(Error::SizeMismatch { expected: a.n, found: v.n });
    }
    check_capacity(a.n + 1)?;
    if let Some((above, below)) = ideal_witness(a, v.support) {
        return Err(Error::NotPosetVector { above, below });
    }
    let mut rows = a.rows.clone();
    rows.push(v.support.with(a.n));
    Ok(PosetMatrix { n: a.n + 1, rows })
}

/// Strict down-set and strict up-set of `x`.
pub fn strict_sets(a: &PosetMatrix, x: usize) -> Result<(IndexSet, IndexSet)> {
    if x >= a.n {
        return Err(Error::Index { index: x, n: a.n });
    }
    Ok((a.rows[x].without(x), a.up_set(x).without(x)))
}

/// Chain (full lower triangle) or antichain (identity).
pub fn standard_poset(kind: StandardKind, n: usize) -> PosetMatrix {
    assert!(n <= MAX_N, "size {n} exceeds capacity");
    let rows = match kind {
        StandardKind::Chain => (0..n).map(|i| IndexSet::full(i + 1)).collect(),
        StandardKind::Antichain => (0..n).map(IndexSet::singleton).collect(),
    };
    PosetMatrix { n, rows }
}

/// Block-diagonal sum; `b`'s elements are shifted past `a`'s.
pub fn disjoint_sum(a: &PosetMatrix, b: &PosetMatrix) -> Result<PosetMatrix> {
    let n = a.n + b.n;
    check_capacity(n)?;
    let shift = a.n;
    let rows = a
        .rows
        .iter()
        .copied()
        .chain(b.rows.iter().map(|r| IndexSet::from_bits(r.bits() << shift)))
        .collect();
    Ok(PosetMatrix { n, rows })
}

/// Cover pairs `(lo, hi)` sorted by `(hi, lo)`.
pub fn cover_relations(a: &PosetMatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, r) in a.rows.iter().enumerate() {
        let strict = r.without(i);
        let shadowed = strict
            .iter()
            .fold(IndexSet::EMPTY, |acc, k| acc.union(a.rows[k].without(k)));
        out.extend(strict.difference(shadowed).iter().map(|j| (j, i)));
    }
    out
}

/// Longest-chain cardinality and largest-antichain cardinality.
pub fn height_and_width(a: &PosetMatrix) -> (usize, usize) {
    (height(a), width(a))
}

/// Rank of each element: length of the longest chain ending at it, minus one.
pub fn ranks(a: &PosetMatrix) -> Vec<usize> {
    let mut rank = vec![0usize; a.n];
    for i in 0..a.n {
        rank[i] = a.rows[i].without(i).iter().map(|j| rank[j] + 1).max().unwrap_or(0);
    }
    rank
}

fn height(a: &PosetMatrix) -> usize {
    ranks(a).into_iter().max().map_or(0, |r| r + 1)
}

fn width(a: &PosetMatrix) -> usize {
    let cols = a.columns();
    let comparable: Vec<IndexSet> =
        a.rows.iter().zip(&cols).map(|(r, c)| r.union(*c)).collect();
    let mut best = 0;
    grow_antichain(&comparable, IndexSet::full(a.n), 0, &mut best);
    best
}

fn grow_antichain(comparable: &[IndexSet], candidates: IndexSet, size: usize, best: &mut usize) {
    if size + candidates.len() <= *best {
        return;
    }
    let Some(x) = candidates.first() else {
        *best = size;
        return;
    };
    grow_antichain(comparable, candidates.difference(comparable[x]), size + 1, best);
    grow_antichain(comparable, candidates.without(x), size, best);
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Rows given as entry strings, e.g. `["1", "01", "111", "0101"]`.
    pub fn pm(rows: &[&str]) -> PosetMatrix {
        let sets = rows
            .iter()
            .map(|r| r.chars().enumerate().filter(|(_, c)| *c == '1').map(|(j, _)| j).collect())
            .collect();
        PosetMatrix::new(sets).expect("fixture is a poset matrix")
    }

    pub fn a_n() -> PosetMatrix {
        pm(&["1", "01", "111", "0101"])
    }

    pub fn a8() -> PosetMatrix {
        pm(&[
            "1", "11", "101", "1111", "11101", "111001", "1110001", "11101001",
        ])
    }

    pub fn v_shape() -> PosetMatrix {
        pm(&["1", "11", "101"])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    fn raw(rows: &[&str]) -> Vec<IndexSet> {
        rows.iter()
            .map(|r| r.chars().enumerate().filter(|(_, c)| *c == '1').map(|(j, _)| j).collect())
            .collect()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_poset_matrix(2, &raw(&["1", "11"])).unwrap());
        assert!(validate_poset_matrix(4, &raw(&["1", "01", "111", "0101"])).unwrap());
        assert!(!validate_poset_matrix(3, &raw(&["1", "11", "011"])).unwrap());
        assert!(validate_poset_matrix(0, &[]).unwrap());
    }

    #[test]
    fn validate_rejects_shape_defects() {
        assert!(!validate_poset_matrix(2, &raw(&["11", "01"])).unwrap());
        assert!(!validate_poset_matrix(2, &raw(&["1", "10"])).unwrap());
        assert_eq!(
            validate_poset_matrix(3, &raw(&["1", "11"])),
            Err(Error::SizeMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn from_relations_examples() {
        assert_eq!(from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap(), a_n());
        assert_eq!(from_relations(3, &[]).unwrap(), PosetMatrix::identity(3));
        assert_eq!(from_relations(3, &[(0, 1), (1, 2)]).unwrap(), PosetMatrix::chain(3));
        assert_eq!(from_relations(3, &[(2, 1)]), Err(Error::NaturalLabeling { lo: 2, hi: 1 }));
        assert_eq!(from_relations(3, &[(1, 1)]), Err(Error::NaturalLabeling { lo: 1, hi: 1 }));
    }

    #[test]
    fn v_extension_examples() {
        let ext = v_extension(&PosetMatrix::identity(2), &PosetVector::from_entries("10").unwrap());
        assert_eq!(ext.unwrap(), pm(&["1", "01", "101"]));

        let ext = v_extension(&a_n(), &PosetVector::zero(4)).unwrap();
        assert_eq!(ext.row(4), set(&[4]));
        assert_eq!(ext.parent().unwrap().0, a_n());

        let ext = v_extension(&a_n(), &PosetVector::ones(4)).unwrap();
        assert_eq!(ext.row(4), IndexSet::full(5));
    }

    #[test]
    fn v_extension_reports_witness() {
        let v = PosetVector::from_entries("0010").unwrap();
        assert_eq!(v_extension(&a_n(), &v), Err(Error::NotPosetVector { above: 2, below: 0 }));
    }

    #[test]
    fn strict_sets_examples() {
        assert_eq!(strict_sets(&a8(), 1).unwrap(), (set(&[0]), set(&[3, 4, 5, 6, 7])));
        assert_eq!(strict_sets(&PosetMatrix::identity(3), 0).unwrap(), (set(&[]), set(&[])));
        assert_eq!(strict_sets(&a8(), 4).unwrap(), (set(&[0, 1, 2]), set(&[7])));
        assert_eq!(strict_sets(&a8(), 8), Err(Error::Index { index: 8, n: 8 }));
    }

    #[test]
    fn standard_posets() {
        assert_eq!(standard_poset(StandardKind::Antichain, 2), pm(&["1", "01"]));
        assert_eq!(standard_poset(StandardKind::Chain, 3), pm(&["1", "11", "111"]));
        assert_eq!(standard_poset(StandardKind::Chain, 0), PosetMatrix::empty());
    }

    #[test]
    fn disjoint_sum_examples() {
        let c1 = PosetMatrix::chain(1);
        assert_eq!(disjoint_sum(&c1, &c1).unwrap(), PosetMatrix::identity(2));
        let c2 = PosetMatrix::chain(2);
        assert_eq!(disjoint_sum(&c2, &c2).unwrap(), pm(&["1", "11", "001", "0011"]));
        let big = PosetMatrix::identity(40);
        assert_eq!(disjoint_sum(&big, &big), Err(Error::Capacity(80)));
    }

    #[test]
    fn height_width_examples() {
        assert_eq!(height_and_width(&PosetMatrix::chain(3)), (3, 1));
        assert_eq!(height_and_width(&a_n()), (2, 2));
        assert_eq!(height_and_width(&a8()), (4, 4));
        assert_eq!(height_and_width(&PosetMatrix::empty()), (0, 0));
        assert_eq!(height_and_width(&PosetMatrix::identity(5)), (1, 5));
    }

    #[test]
    fn product_examples() {
        let a = a_n().as_bool();
        assert_eq!(bool_product(&a, &a).unwrap(), a);
        assert_eq!(bool_product(&BoolMatrix::identity(4), &a).unwrap(), a);
        let c = PosetMatrix::chain(3).as_bool();
        assert_eq!(bool_product(&c, &c).unwrap(), c);
        assert!(bool_product(&c, &a).is_err());
    }

    #[test]
    fn cover_examples() {
        assert_eq!(cover_relations(&PosetMatrix::chain(3)), vec![(0, 1), (1, 2)]);
        assert_eq!(cover_relations(&a_n()), vec![(0, 2), (1, 2), (1, 3)]);
        let mut a8_covers = vec![
            (0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (4, 7),
        ];
        a8_covers.sort_by_key(|&(lo, hi)| (hi, lo));
        assert_eq!(cover_relations(&a8()), a8_covers);
    }

    #[test]
    fn text_format() {
        let a = a_n();
        assert_eq!(a.to_string(), "1000\n0100\n1110\n0101\n");
        assert_eq!(PosetMatrix::parse(&a.to_string()).unwrap(), a);
        match PosetMatrix::parse("100\n11\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match PosetMatrix::parse("10\n1x\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matrix_stream() {
        let text: String = [PosetMatrix::empty(), a_n(), PosetMatrix::chain(2)]
            .iter()
            .map(|m| format_stream_entry(m) + "\n")
            .collect();
        let back = parse_matrices(&text).unwrap();
        assert_eq!(back, vec![PosetMatrix::empty(), a_n(), PosetMatrix::chain(2)]);
    }

    #[test]
    fn hex_round_trip() {
        let a = a8();
        assert_eq!(PosetMatrix::from_hex(8, &a.to_hex()).unwrap(), a);
        assert_eq!(a_n().to_hex(), "84e5");
        assert_eq!(PosetMatrix::empty().to_hex(), "");
    }
}
