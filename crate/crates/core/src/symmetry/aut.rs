use crate::matrix::PosetMatrix;

use super::perm::{apply_permutation, PermGroup, Permutation};
use super::twins::twin_decomposition;

/// All `σ` with `QᵀAQ = A`, by backtracking.
///
/// An element may only map to one with the same (row sum, column sum) pair
/// and the same twin-class size; elements are assigned in order of
/// (row sum, column sum, twin class) so the search is reproducible.
pub fn automorphism_group(a: &PosetMatrix) -> PermGroup {
    let n = a.n();
    let degrees = a.degree_pairs();
    let twins = twin_decomposition(a);
    let invariant: Vec<(usize, usize, usize)> = (0..n)
        .map(|x| (degrees[x].0, degrees[x].1, twins.class_sizes[twins.class_of[x]]))
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (degrees[x], twins.class_of[x], x));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| invariant[y] == invariant[x]).collect())
        .collect();

    let mut search = Search {
        a,
        order: &order,
        candidates: &candidates,
        images: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    search.run(0);
    PermGroup::from_elements(n, search.found)
}

struct Search<'a> {
    a: &'a PosetMatrix,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.order.len() {
            let p = Permutation::new(self.images.clone()).expect("images form a bijection");
            debug_assert_eq!(apply_permutation(self.a, &p).ok(), Some(self.a.as_bool()));
            self.found.push(p);
            return;
        }
        let x = self.order[depth];
        for &y in &self.candidates[x] {
            if self.used[y] || !self.consistent(depth, x, y) {
                continue;
            }
            self.images[x] = y;
            self.used[y] = true;
            self.run(depth + 1);
            self.used[y] = false;
            self.images[x] = usize::MAX;
        }
    }

    /// Relations between `x` and every assigned element survive `x ↦ y`.
    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        self.order[..depth].iter().all(|&z| {
            let w = self.images[z];
            self.a.leq(z, x) == self.a.leq(w, y) && self.a.leq(x, z) == self.a.leq(y, w)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{a8, a_n, v_shape};
    use crate::matrix::{disjoint_sum, PosetMatrix};

    #[test]
    fn standard_orders() {
        for n in 0..6 {
            assert_eq!(automorphism_group(&PosetMatrix::chain(n)).order(), 1);
        }
        assert_eq!(automorphism_group(&PosetMatrix::identity(5)).order(), 120);
        assert_eq!(automorphism_group(&a8()).order(), 12);
        assert_eq!(automorphism_group(&a_n()).order(), 1);
        assert_eq!(automorphism_group(&v_shape()).order(), 2);
    }

    #[test]
    fn disjoint_sums() {
        let c2 = PosetMatrix::chain(2);
        let i2 = PosetMatrix::identity(2);
        assert_eq!(automorphism_group(&disjoint_sum(&c2, &c2).unwrap()).order(), 2);
        assert_eq!(automorphism_group(&disjoint_sum(&i2, &c2).unwrap()).order(), 2);
    }

    #[test]
    fn group_is_closed() {
        let g = automorphism_group(&a8());
        assert!(g.is_group());
        assert!(g.contains(&crate::symmetry::Permutation::transposition(8, 3, 5)));
    }
}
