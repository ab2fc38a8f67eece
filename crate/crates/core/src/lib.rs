//! Naturally labelled posets through their Boolean poset matrices.
//!
//! A poset on `{0, …, n-1}` whose order refines the integer order is stored
//! as a lower-triangular, reflexive, transitive Boolean matrix with row `i`
//! holding the down-set of `i`. Adjoining a new top row `v` is valid exactly
//! when `vA = v`, i.e. when `supp(v)` is an order ideal. On top of that:
//!
//! * [`ideals`]: poset vectors, the distributive lattice they form, and
//!   recovery of the poset from its join-irreducibles;
//! * [`symmetry`]: automorphism groups (by backtracking and through twin
//!   classes), orbits of poset vectors, Burnside counts, canonical forms;
//! * [`topology`]: ideal families as topologies, grown by interval doubling
//!   and listed by a resumable first/next generator;
//! * [`enumerate`]: counting `PM(n)` two ways, the isomorphism-class census,
//!   and the orbit-sum report;
//! * [`verify`]: exhaustive invariant suites for small sizes.

pub mod bits;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod ideals;
pub mod matrix;
pub mod reference;
pub mod symmetry;
pub mod topology;
pub mod verify;

pub use bits::{IndexSet, MAX_N};
pub use enumerate::{
    count_nip, count_nl, count_report, enumerate_nl, orbit_sum_report, CountMethod, CountReport,
};
pub use error::{Error, Result};
pub use ideals::{enumerate_poset_vectors, IdealLattice};
pub use matrix::{BoolMatrix, PosetMatrix, PosetVector, StandardKind};
pub use symmetry::{OrbitPartition, PermGroup, Permutation, TwinDecomposition};
pub use topology::{GenerationMode, Nlt, NltStream};
