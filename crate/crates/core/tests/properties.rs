use proptest::prelude::*;

use posetforge_core::ideals::{ideal_to_max_antichain, join_irreducibles, lattice_join_meet};
use posetforge_core::matrix::{cover_relations, from_relations, v_extension};
use posetforge_core::symmetry::{
    apply_permutation, aut_order_via_twins, automorphism_group, canonical_form, is_isomorphic,
};
use posetforge_core::topology::{grow, ideals_to_nlt, nlt_to_poset, NltStream};
use posetforge_core::{enumerate_poset_vectors, Nlt, PosetMatrix, Permutation};

/// A random naturally labelled poset on up to 9 elements.
fn poset() -> impl Strategy<Value = PosetMatrix> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|hi| (0..hi).map(move |lo| (lo, hi))).collect();
        let k = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.3), k).prop_map(move |keep| {
            let rel: Vec<(usize, usize)> =
                pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
            from_relations(n, &rel).unwrap()
        })
    })
}

/// A poset with a relabelling that keeps it naturally labelled.
fn relabelled() -> impl Strategy<Value = (PosetMatrix, PosetMatrix)> {
    (poset(), any::<u64>()).prop_map(|(a, seed)| {
        // random linear extension: repeatedly pick a minimal remaining element
        let n = a.n();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut state = seed | 1;
        while order.len() < n {
            let ready: Vec<usize> = (0..n)
                .filter(|&x| !placed[x] && a.row(x).iter().all(|y| y == x || placed[y]))
                .collect();
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let x = ready[(state % ready.len() as u64) as usize];
            placed[x] = true;
            order.push(x);
        }
        let mut images = vec![0; n];
        for (pos, &x) in order.iter().enumerate() {
            images[x] = pos;
        }
        let b = apply_permutation(&a, &Permutation::new(images).unwrap())
            .unwrap()
            .into_poset_matrix()
            .unwrap();
        (a, b)
    })
}

proptest! {
    #[test]
    fn matrix_text_round_trips(a in poset()) {
        prop_assert_eq!(PosetMatrix::parse(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(PosetMatrix::from_hex(a.n(), &a.to_hex()).unwrap(), a.clone());
        prop_assert_eq!(from_relations(a.n(), &cover_relations(&a)).unwrap(), a);
    }

    #[test]
    fn lattice_is_closed_and_parent_recovers(a in poset()) {
        let l = enumerate_poset_vectors(&a);
        for u in l.vectors() {
            prop_assert_eq!(ideal_to_max_antichain(&a, u).is_ok(), true);
            for v in l.vectors() {
                let (j, m) = lattice_join_meet(u, v).unwrap();
                prop_assert!(l.contains(j.support()) && l.contains(m.support()));
            }
            let child = v_extension(&a, u).unwrap();
            let (parent, vector) = child.parent().unwrap();
            prop_assert_eq!(&parent, &a);
            prop_assert_eq!(&vector, u);
        }
        let rows: Vec<_> = join_irreducibles(&l, &a).iter().map(|v| v.support()).collect();
        let mut expected = a.rows().to_vec();
        expected.sort();
        prop_assert_eq!(rows, expected);
    }

    #[test]
    fn canonical_form_is_a_class_invariant((a, b) in relabelled()) {
        let ca = canonical_form(&a);
        prop_assert_eq!(&ca, &canonical_form(&b));
        prop_assert_eq!(canonical_form(&ca), ca.clone());
        prop_assert!(is_isomorphic(&a, &b));
        prop_assert!(is_isomorphic(&ca, &a));
    }

    #[test]
    fn group_order_matches_twin_formula(a in poset()) {
        let g = automorphism_group(&a);
        prop_assert!(g.is_group());
        prop_assert_eq!(g.order() as u128, aut_order_via_twins(&a).unwrap());
    }

    #[test]
    fn topology_round_trip_and_grow(a in poset()) {
        let t = ideals_to_nlt(&a);
        prop_assert_eq!(nlt_to_poset(&t).unwrap(), a.clone());
        prop_assert_eq!(Nlt::parse_line(&t.to_line()).unwrap(), t.clone());
        for &s in t.sets() {
            let v = posetforge_core::PosetVector::new(a.n(), s).unwrap();
            prop_assert_eq!(grow(&t, s).unwrap(), ideals_to_nlt(&v_extension(&a, &v).unwrap()));
        }
    }

    #[test]
    fn stream_resumes_anywhere(k in 0usize..357) {
        let all: Vec<Nlt> = NltStream::new(5).collect();
        let tail: Vec<Nlt> = NltStream::resume_after(&all[k]).collect();
        prop_assert_eq!(&all[k + 1..], &tail[..]);
    }
}
