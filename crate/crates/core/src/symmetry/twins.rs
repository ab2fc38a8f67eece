use std::collections::HashMap;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::matrix::{strict_sets, PosetMatrix};

use super::aut::automorphism_group;
use super::perm::PermGroup;

/// Twin classes (equal strict down-set and strict up-set) and the quotient
/// poset on their minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinDecomposition {
    /// Ordered by minimum element.
    pub classes: Vec<IndexSet>,
    pub quotient: PosetMatrix,
    pub class_sizes: Vec<usize>,
    /// `class_of[x]` is the index of the class holding `x`.
    pub class_of: Vec<usize>,
}

impl TwinDecomposition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `"0 | 1,2 | 3,5,6"` style rendering.
    pub fn classes_string(&self) -> String {
        let parts: Vec<String> = self.classes.iter().map(|c| c.list()).collect();
        parts.join(" | ")
    }
}

pub fn twin_decomposition(a: &PosetMatrix) -> TwinDecomposition {
    let n = a.n();
    let mut key_to_class: HashMap<(IndexSet, IndexSet), usize> = HashMap::new();
    let mut classes: Vec<IndexSet> = Vec::new();
    let mut class_of = vec![0; n];
    // scanning in label order numbers classes by their minimum
    for (x, slot) in class_of.iter_mut().enumerate() {
        let key = strict_sets(a, x).expect("x < n");
        let id = *key_to_class.entry(key).or_insert_with(|| {
            classes.push(IndexSet::EMPTY);
            classes.len() - 1
        });
        classes[id].insert(x);
        *slot = id;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c.first().expect("classes are nonempty")).collect();
    let quotient_rows = reps
        .iter()
        .map(|&xi| {
            reps.iter()
                .enumerate()
                .filter(|&(_, &xj)| a.leq(xj, xi))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let quotient = PosetMatrix::new(quotient_rows).expect("quotient of a poset matrix is one");
    let class_sizes = classes.iter().map(|c| c.len()).collect();
    TwinDecomposition { classes, quotient, class_sizes, class_of }
}

/// Automorphisms of the quotient that preserve class sizes.
pub fn size_preserving_subgroup(quotient: &PosetMatrix, sizes: &[usize]) -> Result<PermGroup> {
    if sizes.len() != quotient.n() {
        return Err(Error::SizeMismatch { expected: quotient.n(), found: sizes.len() });
    }
    let all = automorphism_group(quotient);
    let kept = all
        .elements()
        .iter()
        .filter(|p| (0..sizes.len()).all(|i| sizes[p.apply(i)] == sizes[i]))
        .cloned()
        .collect();
    Ok(PermGroup::from_elements(quotient.n(), kept))
}

/// `|Aut(A)| = (∏ |αᵢ|!) · |H|`.
pub fn aut_order_via_twins(a: &PosetMatrix) -> Result<u128> {
    let twins = twin_decomposition(a);
    let h = size_preserving_subgroup(&twins.quotient, &twins.class_sizes)?;
    let mut order = h.order() as u128;
    for &k in &twins.class_sizes {
        for f in 2..=k as u128 {
            order = order.checked_mul(f).ok_or(Error::Overflow)?;
        }
    }
    Ok(order)
}
