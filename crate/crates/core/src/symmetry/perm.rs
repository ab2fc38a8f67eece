use std::fmt;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::matrix::{BoolMatrix, PosetMatrix};

/// A bijection of `{0, …, n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Image of a subset; this is the action `v ↦ vQ` on supports.
    pub fn apply_set(&self, s: IndexSet) -> IndexSet {
        s.map(&self.images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// A finite permutation group kept as an explicit, sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub(crate) fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        PermGroup { n, elements }
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, elements: vec![Permutation::identity(n)] }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Identity present, closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
            && self.elements.iter().all(|p| self.contains(&p.inverse()))
            && self
                .elements
                .iter()
                .all(|p| self.elements.iter().all(|q| self.contains(&p.compose(q))))
    }
}

/// Relabels `a` by `σ`: entry `(σ(i), σ(j))` of the result is entry `(i, j)`
/// of `a`. This is `QᵀAQ` for the permutation matrix of `σ`; the result need
/// not be lower-triangular.
pub fn apply_permutation(a: &PosetMatrix, sigma: &Permutation) -> Result<BoolMatrix> {
    if sigma.degree() != a.n() {
        return Err(Error::Degree { expected: a.n(), found: sigma.degree() });
    }
    let mut rows = vec![IndexSet::EMPTY; a.n()];
    for (i, r) in a.rows().iter().enumerate() {
        rows[sigma.apply(i)] = sigma.apply_set(*r);
    }
    BoolMatrix::new(a.n(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{a8, pm};

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
    }

    #[test]
    fn apply_permutation_examples() {
        let a = a8();
        assert_eq!(apply_permutation(&a, &Permutation::identity(8)).unwrap(), a.as_bool());

        let a10 = pm(&["1", "01", "101"]);
        let swapped = apply_permutation(&a10, &Permutation::transposition(3, 0, 1)).unwrap();
        assert_eq!(swapped, pm(&["1", "01", "011"]).as_bool());

        let twins = apply_permutation(&a, &Permutation::transposition(8, 3, 5)).unwrap();
        assert_eq!(twins, a.as_bool());

        assert!(apply_permutation(&a, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn relabelled_matrix_need_not_be_lower_triangular() {
        let c2 = PosetMatrix::chain(2);
        let flipped = apply_permutation(&c2, &Permutation::transposition(2, 0, 1)).unwrap();
        assert!(flipped.get(0, 1));
        assert!(flipped.into_poset_matrix().is_err());
    }
}
