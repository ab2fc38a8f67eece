//! Exhaustive invariant suites over `PM(n)` for small `n`.
//!
//! Each check walks every matrix of one size and reports the first
//! counterexample it meets. Brute-force sides (all `2^n` vectors, all
//! Boolean sums of rows) are computed here without going through the
//! enumeration code they check.

use std::collections::{BTreeSet, HashSet};

use crate::bits::IndexSet;
use crate::enumerate::{count_nl, enumerate_nl, parent_orbit_census, CountMethod};
use crate::ideals::{
    antichain_to_vector, enumerate_poset_vectors, ideal_to_max_antichain, is_poset_vector,
    join_irreducibles,
};
use crate::matrix::{
    bool_product, cover_relations, from_relations, v_extension, validate_poset_matrix,
    PosetMatrix, PosetVector,
};
use crate::symmetry::{
    apply_permutation, aut_order_via_twins, automorphism_group, burnside_count, canonical_form,
    is_isomorphic, orbits_on_vectors, triviality_predicates, twin_decomposition,
};
use crate::topology::{
    cut, generate_all, grow, ideals_to_nlt, nlt_to_poset, GenerationMode,
};

/// Outcome of one check at one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub n: usize,
    pub result: Result<(), String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type Check = fn(usize, &[PosetMatrix]) -> Result<(), String>;

/// Every check with the largest size it is run at.
pub const CHECKS: &[(&str, Check, usize)] = &[
    ("idempotent", check_idempotent, 6),
    ("extension-validity", check_extension_validity, 5),
    ("cover-round-trip", check_cover_round_trip, 6),
    ("fixed-point", check_fixed_point, 5),
    ("row-space", check_row_space, 5),
    ("lattice-closure", check_lattice_closure, 6),
    ("antichain-bijection", check_antichain_bijection, 6),
    ("join-irreducibles", check_join_irreducibles, 6),
    ("group-axioms", check_group_axioms, 6),
    ("burnside", check_burnside, 6),
    ("twin-soundness", check_twins, 6),
    ("order-formula", check_order_formula, 6),
    ("triviality", check_triviality, 6),
    ("orbit-isomorphism", check_orbit_isomorphism, 5),
    ("nlt-bijection", check_nlt_bijection, 5),
    ("grow", check_grow, 5),
    ("grow-uniqueness", check_grow_uniqueness, 5),
    ("stream-completeness", check_stream, 5),
    ("dual-count", check_dual_count, 7),
    ("per-parent-orbits", check_per_parent, 6),
];

/// Runs every check for every size `0..=max_n`, each capped at its own limit.
pub fn run_all(max_n: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let level = enumerate_nl(n);
        for &(name, check, cap) in CHECKS {
            if n <= cap {
                out.push(CheckOutcome { name, n, result: check(n, &level) });
            }
        }
    }
    out
}

fn fail<T: std::fmt::Display>(a: &PosetMatrix, what: T) -> Result<(), String> {
    Err(format!("{what} for matrix\n{a}"))
}

fn all_vectors(n: usize) -> impl Iterator<Item = PosetVector> {
    (0u64..1 << n).map(move |b| PosetVector::new(n, IndexSet::from_bits(b)).expect("fits"))
}

fn check_idempotent(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let b = a.as_bool();
        if bool_product(&b, &b).map_err(|e| e.to_string())? != b {
            return fail(a, "A·A ≠ A");
        }
        if !validate_poset_matrix(a.n(), a.rows()).map_err(|e| e.to_string())? {
            return fail(a, "rejected by validation");
        }
    }
    Ok(())
}

fn check_extension_validity(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        for v in all_vectors(n) {
            let fixed = v.support().iter().fold(IndexSet::EMPTY, |acc, i| acc.union(a.row(i))) == v.support();
            let mut rows = a.rows().to_vec();
            rows.push(v.support().with(n));
            let valid = validate_poset_matrix(n + 1, &rows).map_err(|e| e.to_string())?;
            if fixed != valid || fixed != v_extension(a, &v).is_ok() {
                return fail(a, format!("vector {v}: fixed point {fixed}, valid {valid}"));
            }
        }
    }
    Ok(())
}

fn check_cover_round_trip(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        if from_relations(n, &cover_relations(a)).as_ref() != Ok(a) {
            return fail(a, "closure of covers differs");
        }
        for i in 0..n {
            let r = a.row(i);
            if r.iter().any(|j| !a.row(j).is_subset(r)) {
                return fail(a, format!("row {i} not downward closed"));
            }
        }
    }
    Ok(())
}

fn check_fixed_point(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let brute: BTreeSet<IndexSet> = all_vectors(n)
            .filter(|v| is_poset_vector(a, v).unwrap_or(false))
            .map(|v| v.support())
            .collect();
        let listed: BTreeSet<IndexSet> = enumerate_poset_vectors(a).supports().collect();
        if brute != listed {
            return fail(a, "fixed points differ from the enumeration");
        }
    }
    Ok(())
}

fn check_row_space(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let span: BTreeSet<IndexSet> = (0u64..1 << n)
            .map(|sel| {
                IndexSet::from_bits(sel)
                    .iter()
                    .fold(IndexSet::EMPTY, |acc, i| acc.union(a.row(i)))
            })
            .collect();
        let listed: BTreeSet<IndexSet> = enumerate_poset_vectors(a).supports().collect();
        if span != listed {
            return fail(a, "row space differs from the poset vectors");
        }
    }
    Ok(())
}

fn check_lattice_closure(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let l = enumerate_poset_vectors(a);
        let s: Vec<IndexSet> = l.supports().collect();
        if !l.contains(IndexSet::EMPTY) || !l.contains(IndexSet::full(a.n())) {
            return fail(a, "missing bottom or top");
        }
        for &u in &s {
            for &v in &s {
                if !l.contains(u.union(v)) || !l.contains(u.intersection(v)) {
                    return fail(a, format!("{u:?}, {v:?} not closed"));
                }
            }
        }
        // distributivity on a bounded sample keeps the cubic loop cheap
        for &u in s.iter().take(12) {
            for &v in s.iter().take(12) {
                for &w in s.iter().take(12) {
                    if u.intersection(v.union(w)) != u.intersection(v).union(u.intersection(w)) {
                        return fail(a, "not distributive");
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_antichain_bijection(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let l = enumerate_poset_vectors(a);
        let mut images = HashSet::new();
        for v in l.vectors() {
            let s = ideal_to_max_antichain(a, v).map_err(|e| e.to_string())?;
            if antichain_to_vector(a, s).as_ref() != Ok(v) {
                return fail(a, format!("antichain of {v} does not regenerate it"));
            }
            images.insert(s);
        }
        let antichains = (0u64..1 << n)
            .map(IndexSet::from_bits)
            .filter(|s| s.iter().all(|x| s.iter().all(|y| x == y || !a.comparable(x, y))))
            .count();
        if antichains != l.len() || images.len() != l.len() {
            return fail(a, format!("{antichains} antichains vs {} ideals", l.len()));
        }
    }
    Ok(())
}

fn check_join_irreducibles(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let ji: Vec<IndexSet> = join_irreducibles(&enumerate_poset_vectors(a), a)
            .iter()
            .map(|v| v.support())
            .collect();
        let mut rows = a.rows().to_vec();
        rows.sort();
        rows.dedup();
        if ji != rows {
            return fail(a, "join-irreducibles differ from rows");
        }
        // induced inclusion order on rows reproduces the poset
        for i in 0..n {
            for j in 0..n {
                if a.row(j).is_subset(a.row(i)) != a.leq(j, i) {
                    return fail(a, format!("inclusion of rows {j}, {i} disagrees with order"));
                }
            }
        }
    }
    Ok(())
}

fn check_group_axioms(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let g = automorphism_group(a);
        if !g.is_group() {
            return fail(a, "automorphisms not a group");
        }
        for p in g.elements() {
            if apply_permutation(a, p).map_err(|e| e.to_string())? != a.as_bool() {
                return fail(a, format!("{p:?} not an automorphism"));
            }
        }
    }
    Ok(())
}

fn check_burnside(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let p = orbits_on_vectors(a);
        if burnside_count(a) != p.class_count as u64 {
            return fail(a, "Burnside count differs from orbit count");
        }
        if !p.satisfies_orbit_stabilizer() {
            return fail(a, "orbit-stabilizer fails");
        }
    }
    Ok(())
}

fn check_twins(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let t = twin_decomposition(a);
        let mut covered = IndexSet::EMPTY;
        for &class in &t.classes {
            if !class.is_disjoint(covered) {
                return fail(a, "classes overlap");
            }
            covered = covered.union(class);
            let outside = IndexSet::full(n).difference(class);
            let first = class.first().expect("nonempty");
            for x in class.iter() {
                if class.iter().any(|y| x != y && a.comparable(x, y)) {
                    return fail(a, "class not an antichain");
                }
                // rows of A[α|α^C] agree, columns of A[α^C|α] agree
                if a.row(x).intersection(outside) != a.row(first).intersection(outside) {
                    return fail(a, "down-sets differ within a class");
                }
                if a.up_set(x).intersection(outside) != a.up_set(first).intersection(outside) {
                    return fail(a, "up-sets differ within a class");
                }
            }
        }
        if covered != IndexSet::full(n) {
            return fail(a, "classes do not cover");
        }
    }
    Ok(())
}

fn check_order_formula(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let brute = automorphism_group(a).order() as u128;
        let via = aut_order_via_twins(a).map_err(|e| e.to_string())?;
        if brute != via {
            return fail(a, format!("|Aut| = {brute} but twin formula gives {via}"));
        }
    }
    Ok(())
}

fn check_triviality(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let (sizes, pairs) = triviality_predicates(a);
        if (sizes || pairs) && automorphism_group(a).order() != 1 {
            return fail(a, format!("predicates ({sizes}, {pairs}) but nontrivial group"));
        }
    }
    Ok(())
}

fn check_orbit_isomorphism(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let p = orbits_on_vectors(a);
        let mut orbit_of = Vec::new();
        let mut ext = Vec::new();
        for (k, orbit) in p.orbits.iter().enumerate() {
            for v in orbit {
                orbit_of.push(k);
                ext.push(v_extension(a, v).map_err(|e| e.to_string())?);
            }
        }
        for i in 0..ext.len() {
            for j in i + 1..ext.len() {
                if is_isomorphic(&ext[i], &ext[j]) != (orbit_of[i] == orbit_of[j]) {
                    return fail(a, format!("extensions {i} and {j} break the orbit criterion"));
                }
            }
        }
    }
    Ok(())
}

fn check_nlt_bijection(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let t = ideals_to_nlt(a);
        if nlt_to_poset(&t).as_ref() != Ok(a) {
            return fail(a, "poset of the ideal family differs");
        }
    }
    Ok(())
}

fn check_grow(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let t = ideals_to_nlt(a);
        for &s in t.sets() {
            let grown = grow(&t, s).map_err(|e| e.to_string())?;
            let v = PosetVector::new(a.n(), s).map_err(|e| e.to_string())?;
            let ext = v_extension(a, &v).map_err(|e| e.to_string())?;
            if grown != ideals_to_nlt(&ext) {
                return fail(a, format!("growing at {s:?} differs from the extension"));
            }
        }
    }
    Ok(())
}

fn check_grow_uniqueness(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    if n == 0 {
        return Ok(());
    }
    for a in level {
        let t = ideals_to_nlt(a);
        let base = cut(&t).map_err(|e| e.to_string())?;
        let hits = base.sets().iter().filter(|&&s| grow(&base, s).as_ref() == Ok(&t)).count();
        if hits != 1 {
            return fail(a, format!("{hits} doubling points regrow the topology"));
        }
    }
    Ok(())
}

fn check_stream(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    let stream = generate_all(n, GenerationMode::Stream);
    let distinct: BTreeSet<_> = stream.iter().cloned().collect();
    if distinct.len() != stream.len() {
        return Err(format!("stream repeats topologies at n = {n}"));
    }
    let recursive: BTreeSet<_> = generate_all(n, GenerationMode::Recursive).into_iter().collect();
    if distinct != recursive {
        return Err(format!("stream and recursive generation differ at n = {n}"));
    }
    if stream.len() != level.len() {
        return Err(format!("{} topologies vs {} matrices at n = {n}", stream.len(), level.len()));
    }
    Ok(())
}

fn check_dual_count(n: usize, level: &[PosetMatrix]) -> Result<(), String> {
    let ext = count_nl(n, CountMethod::Extension);
    let stream = count_nl(n, CountMethod::Stream);
    if ext != stream || ext != level.len() as u64 {
        return Err(format!("extension {ext}, stream {stream}, listed {}", level.len()));
    }
    for a in level {
        if let Some((parent, v)) = a.parent() {
            if !is_poset_vector(&parent, &v).unwrap_or(false) {
                return fail(a, "last row is not a poset vector of the block");
            }
        }
    }
    Ok(())
}

fn check_per_parent(_: usize, level: &[PosetMatrix]) -> Result<(), String> {
    for a in level {
        let (orbits, children) = parent_orbit_census(a);
        if orbits != children.len() as u64 {
            return fail(a, format!("{orbits} orbits vs {} extension classes", children.len()));
        }
        if children.iter().any(|c| canonical_form(c) != *c) {
            return fail(a, "canonical form not idempotent");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_passes_to_four() {
        let failures: Vec<_> = run_all(4).into_iter().filter(|o| !o.passed()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }
}
