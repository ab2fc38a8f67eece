use std::cmp::Ordering;

use crate::bits::IndexSet;
use crate::matrix::PosetMatrix;

use super::twins::twin_decomposition;

/// Lexicographic order of two rows read as bit strings from column 0.
#[inline]
fn row_cmp(a: IndexSet, b: IndexSet) -> Ordering {
    let diff = a.bits() ^ b.bits();
    if diff == 0 {
        Ordering::Equal
    } else if b.bits() & diff & diff.wrapping_neg() != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn prefix_cmp(a: &[IndexSet], b: &[IndexSet]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| row_cmp(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Smallest row-major bit string over every natural relabeling of the
/// poset (every linear extension).
///
/// Positions are filled left to right. Only the least unplaced member of
/// each twin class is tried, since swapping unplaced twins fixes the
/// prefix; branches whose prefix already exceeds the best leaf are cut.
pub fn canonical_form(a: &PosetMatrix) -> PosetMatrix {
    let n = a.n();
    if n == 0 {
        return a.clone();
    }
    let twins = twin_decomposition(a);
    let mut s = Canon {
        a,
        class_of: &twins.class_of,
        strict_down: a.rows().iter().enumerate().map(|(i, r)| r.without(i)).collect(),
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        best: None,
    };
    s.run(IndexSet::EMPTY);
    PosetMatrix::from_rows_unchecked(s.best.expect("a linear extension exists"))
}

struct Canon<'a> {
    a: &'a PosetMatrix,
    class_of: &'a [usize],
    strict_down: Vec<IndexSet>,
    /// `order[p]` is the original element placed at position `p`.
    order: Vec<usize>,
    rows: Vec<IndexSet>,
    best: Option<Vec<IndexSet>>,
}

impl Canon<'_> {
    fn run(&mut self, placed: IndexSet) {
        let k = self.order.len();
        let n = self.a.n();
        if k == n {
            let better = match &self.best {
                None => true,
                Some(b) => prefix_cmp(&self.rows, b).is_lt(),
            };
            if better {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let mut tried_classes = IndexSet::EMPTY;
        let mut children: Vec<(IndexSet, usize)> = Vec::new();
        for x in IndexSet::full(n).difference(placed).iter() {
            if !self.strict_down[x].is_subset(placed) || tried_classes.contains(self.class_of[x]) {
                continue;
            }
            tried_classes.insert(self.class_of[x]);
            let row = self
                .order
                .iter()
                .enumerate()
                .filter(|&(_, &y)| self.a.leq(y, x))
                .fold(IndexSet::singleton(k), |r, (p, _)| r.with(p));
            children.push((row, x));
        }
        children.sort_by(|l, r| row_cmp(l.0, r.0));
        for (row, x) in children {
            if let Some(b) = &self.best {
                // prefix rows 0..k are shared by all children
                if prefix_cmp(&self.rows, &b[..k]).then(row_cmp(row, b[k])).is_gt() {
                    break;
                }
            }
            self.order.push(x);
            self.rows.push(row);
            self.run(placed.with(x));
            self.rows.pop();
            self.order.pop();
        }
    }
}

/// Same size and same canonical form.
pub fn is_isomorphic(a: &PosetMatrix, b: &PosetMatrix) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut da = a.degree_pairs();
    let mut db = b.degree_pairs();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{a8, pm};

    #[test]
    fn row_order_reads_column_zero_first() {
        let r = |s: &str| s.chars().enumerate().filter(|(_, c)| *c == '1').map(|(j, _)| j).collect::<IndexSet>();
        assert_eq!(row_cmp(r("01"), r("10")), Ordering::Less);
        assert_eq!(row_cmp(r("011"), r("100")), Ordering::Less);
        assert_eq!(row_cmp(r("101"), r("110")), Ordering::Less);
        assert_eq!(row_cmp(r("11"), r("11")), Ordering::Equal);
    }

    #[test]
    fn two_extensions_of_i2_agree() {
        let a10 = pm(&["1", "01", "101"]);
        let a01 = pm(&["1", "01", "011"]);
        assert_eq!(canonical_form(&a10), canonical_form(&a01));
        assert!(is_isomorphic(&a10, &a01));
    }

    #[test]
    fn antichain_is_canonical() {
        for n in 0..8 {
            let i = PosetMatrix::identity(n);
            assert_eq!(canonical_form(&i), i);
        }
        assert!(!is_isomorphic(&PosetMatrix::chain(3), &PosetMatrix::identity(3)));
    }

    #[test]
    fn idempotent_on_a8() {
        let c = canonical_form(&a8());
        assert_eq!(canonical_form(&c), c);
        assert!(is_isomorphic(&c, &a8()));
    }
}
