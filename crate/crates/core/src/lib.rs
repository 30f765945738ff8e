//! Harmonic index and diameter of small graphs, with exhaustive checks of the
//! lower bounds `H(G) ≥ D(G) + 5/3 − n/2` and `H(G) ≥ (1/2 + 2/(3(n−2)))·D(G)`
//! for quasi-trees.
//!
//! A quasi-tree is a connected graph that is not a tree but has a vertex whose
//! deletion leaves a tree. Both bounds fail only for two small graphs and are
//! tight exactly on `V(1,1)` and the family `U(n)`; [`verify::verify_theorems`]
//! checks this over every quasi-tree up to order 9.
//!
//! ```
//! use quasitree::{harmonic_index, evaluate, BoundId, FamilySpec, Rational, Status};
//!
//! let g = FamilySpec::V(1, 1).build()?;
//! assert_eq!(harmonic_index(&g)?, Rational::new(8, 3));
//! let verdict = evaluate(&g, &BoundId::QUASI_TREE)?;
//! assert!(verdict.checks.iter().all(|c| c.status == Status::Equal));
//! # Ok::<(), quasitree::Error>(())
//! ```

pub mod enumerate;
mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod rational;
pub mod verify;

pub use enumerate::{
    canonical_form, enumerate_class, quasi_trees_via_trees, CanonicalForm, GraphClass,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, QuasiTreeWitness};
pub use invariants::{
    bound_value, degree2_deletion_delta, evaluate, harmonic_index, pendant_deletion_delta, BoundId,
    DeletionCase, DeletionDelta, Status, Verdict,
};
pub use rational::Rational;
pub use verify::{verify_conjecture1, verify_theorems, VerificationReport};
