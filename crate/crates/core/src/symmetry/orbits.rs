use std::collections::BTreeSet;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::ideals::{enumerate_poset_vectors, IdealLattice};
use crate::matrix::{PosetMatrix, PosetVector};

use super::aut::automorphism_group;
use super::perm::{apply_permutation, PermGroup, Permutation};

/// `PV_n(A)` split into `Aut(A)`-orbits.
///
/// Orbits are listed by their length-lex smallest member; members of each
/// orbit are length-lex sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<PosetVector>>,
    pub class_count: usize,
    /// `|G_v|` for the first member of each orbit.
    pub stabilizer_orders: Vec<usize>,
    pub group_order: usize,
}

impl OrbitPartition {
    /// `|orbit| · |stabilizer| = |G|` on every orbit.
    pub fn satisfies_orbit_stabilizer(&self) -> bool {
        self.orbits
            .iter()
            .zip(&self.stabilizer_orders)
            .all(|(o, &s)| o.len() * s == self.group_order)
    }
}

/// Orbit partition under `v ↦ vQ`, with `Q` ranging over `Aut(A)`.
pub fn orbits_on_vectors(a: &PosetMatrix) -> OrbitPartition {
    orbits_with(&enumerate_poset_vectors(a), &automorphism_group(a))
}

pub(crate) fn orbits_with(lattice: &IdealLattice, group: &PermGroup) -> OrbitPartition {
    let n = lattice.n();
    let mut seen = vec![false; lattice.len()];
    let mut orbits = Vec::new();
    let mut stabilizer_orders = Vec::new();
    for (k, v) in lattice.vectors().iter().enumerate() {
        if seen[k] {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut stabilizer = 0;
        for g in group.elements() {
            let image = g.apply_set(v.support());
            if image == v.support() {
                stabilizer += 1;
            }
            members.insert(image);
        }
        let orbit: Vec<PosetVector> = members
            .into_iter()
            .map(|s| {
                let idx = lattice.index_of(s).expect("automorphisms map ideals to ideals");
                seen[idx] = true;
                PosetVector::new(n, s).expect("support fits")
            })
            .collect();
        orbits.push(orbit);
        stabilizer_orders.push(stabilizer);
    }
    OrbitPartition {
        class_count: orbits.len(),
        orbits,
        stabilizer_orders,
        group_order: group.order(),
    }
}

fn fixed_by(lattice: &IdealLattice, sigma: &Permutation) -> u64 {
    lattice.supports().filter(|&s| sigma.apply_set(s) == s).count() as u64
}

/// Number of poset vectors fixed by an automorphism.
pub fn fix_count(a: &PosetMatrix, sigma: &Permutation) -> Result<u64> {
    if apply_permutation(a, sigma)? != a.as_bool() {
        return Err(Error::NotAutomorphism(sigma.images().to_vec()));
    }
    Ok(fixed_by(&enumerate_poset_vectors(a), sigma))
}

/// Orbit count as the average number of fixed vectors over `Aut(A)`.
pub fn burnside_count(a: &PosetMatrix) -> u64 {
    burnside_with(&enumerate_poset_vectors(a), &automorphism_group(a))
}

pub(crate) fn burnside_with(lattice: &IdealLattice, group: &PermGroup) -> u64 {
    let total: u64 = group.elements().iter().map(|g| fixed_by(lattice, g)).sum();
    let order = group.order() as u64;
    assert_eq!(total % order, 0, "fixed-point total {total} not divisible by |G| = {order}");
    total / order
}

/// `(all ideal sizes distinct, all (row sum, column sum) pairs distinct)`.
///
/// Either flag being true forces a trivial automorphism group.
pub fn triviality_predicates(a: &PosetMatrix) -> (bool, bool) {
    let mut sizes: Vec<usize> = enumerate_poset_vectors(a).supports().map(IndexSet::len).collect();
    sizes.sort_unstable();
    let distinct_sizes = sizes.windows(2).all(|w| w[0] != w[1]);
    let mut pairs = a.degree_pairs();
    pairs.sort_unstable();
    let distinct_pairs = pairs.windows(2).all(|w| w[0] != w[1]);
    (distinct_sizes, distinct_pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{a8, a_n, v_shape};

    fn words(p: &OrbitPartition) -> Vec<Vec<String>> {
        p.orbits
            .iter()
            .map(|o| o.iter().map(|v| v.entries()).collect())
            .collect()
    }

    #[test]
    fn v_shape_orbits() {
        let p = orbits_on_vectors(&v_shape());
        assert_eq!(words(&p), vec![vec!["000"], vec!["100"], vec!["110", "101"], vec!["111"]]);
        assert_eq!(p.class_count, 4);
        assert!(p.satisfies_orbit_stabilizer());
    }

    #[test]
    fn small_orbit_counts() {
        let i2 = PosetMatrix::identity(2);
        assert_eq!(orbits_on_vectors(&i2).class_count, 3);
        // action convention: swapping 0 and 1 sends (1,0) to (0,1)
        assert_eq!(words(&orbits_on_vectors(&i2))[1], vec!["10", "01"]);
        let c3 = PosetMatrix::chain(3);
        assert_eq!(orbits_on_vectors(&c3).orbits.iter().map(Vec::len).collect::<Vec<_>>(), [1, 1, 1, 1]);
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_count(&v_shape()), 4);
        assert_eq!(burnside_count(&PosetMatrix::identity(2)), 3);
        assert_eq!(burnside_count(&a_n()), 8);
        assert_eq!(burnside_count(&a8()), orbits_on_vectors(&a8()).class_count as u64);
    }

    #[test]
    fn fix_count_examples() {
        let v = v_shape();
        assert_eq!(fix_count(&v, &Permutation::identity(3)).unwrap(), 5);
        assert_eq!(fix_count(&v, &Permutation::transposition(3, 1, 2)).unwrap(), 3);
        assert_eq!(fix_count(&PosetMatrix::identity(2), &Permutation::transposition(2, 0, 1)).unwrap(), 2);
        assert!(matches!(
            fix_count(&v, &Permutation::transposition(3, 0, 1)),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn triviality_examples() {
        assert_eq!(triviality_predicates(&PosetMatrix::chain(4)), (true, true));
        assert_eq!(triviality_predicates(&PosetMatrix::identity(2)), (false, false));
        assert_eq!(triviality_predicates(&a_n()), (false, true));
    }
}
