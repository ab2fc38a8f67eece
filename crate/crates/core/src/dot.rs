//! Graphviz export of Hasse diagrams, drawn bottom-up.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::ideals::IdealLattice;
use crate::matrix::{cover_relations, ranks, PosetMatrix};

fn push_ranks(out: &mut String, ranked: BTreeMap<usize, Vec<String>>) {
    for (_, ids) in ranked {
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
    }
}

/// Hasse diagram of the poset; elements sharing a height share a rank.
pub fn poset_dot(a: &PosetMatrix) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    let mut ranked: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (x, r) in ranks(a).into_iter().enumerate() {
        let _ = writeln!(out, "  n{x} [label=\"{x}\"];");
        ranked.entry(r).or_default().push(format!("n{x}"));
    }
    push_ranks(&mut out, ranked);
    for (lo, hi) in cover_relations(a) {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the ideal lattice, nodes labelled by subset words and
/// ranked by ideal size.
pub fn lattice_dot(l: &IdealLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    let mut ranked: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (k, v) in l.vectors().iter().enumerate() {
        let _ = writeln!(out, "  v{k} [label=\"{}\"];", v.support().word());
        ranked.entry(v.support().len()).or_default().push(format!("v{k}"));
    }
    push_ranks(&mut out, ranked);
    for &(lo, hi) in l.hasse() {
        let _ = writeln!(out, "  v{lo} -> v{hi};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_poset_vectors;
    use crate::matrix::fixtures::a_n;

    #[test]
    fn n_shape_dot() {
        let d = poset_dot(&a_n());
        assert!(d.contains("{ rank=same; n0; n1; }"));
        assert!(d.contains("{ rank=same; n2; n3; }"));
        assert_eq!(d.matches("->").count(), 3);
        assert!(d.contains("n1 -> n3;"));
    }

    #[test]
    fn lattice_dot_labels_words() {
        let d = lattice_dot(&enumerate_poset_vectors(&a_n()));
        assert!(d.contains("[label=\"013\"]"));
        assert!(d.contains("[label=\"e\"]"));
        assert_eq!(d.matches("->").count(), 10);
    }
}
