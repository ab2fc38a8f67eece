//! Automorphisms, twin classes, orbits of poset vectors and canonical forms.

mod aut;
mod canon;
mod orbits;
mod perm;
mod twins;

pub use aut::automorphism_group;
pub use canon::{canonical_form, is_isomorphic};
pub use orbits::{burnside_count, fix_count, orbits_on_vectors, triviality_predicates, OrbitPartition};
pub(crate) use orbits::burnside_with;
pub use perm::{apply_permutation, PermGroup, Permutation};
pub use twins::{aut_order_via_twins, size_preserving_subgroup, twin_decomposition, TwinDecomposition};
