//! Finite algebra over dense index tables: monoids, modules over a monoid,
//! pairs `(A, A0)` with a distinguished zero substitute, surpassing relations,
//! and the generated-submagma / free-base machinery shared by the rest of the
//! workspace.
//!
//! Every carrier is a `Vec<String>` of labels; elements are referenced by
//! their dense index (`Elem`). All checks are exhaustive over the finite
//! carrier, so a passing report is a proof of the axiom on that structure.

pub mod error;
pub mod fixtures;
pub mod free;
pub mod module;
pub mod monoid;
pub mod pair;
pub mod report;
pub mod surpass;

pub use error::CoreError;
pub use free::{free_codec, FreeCodec};
pub use module::{check_module, TModule};
pub use monoid::{check_monoid, FiniteMonoid};
pub use pair::{
    check_circ_distributive, check_pair, find_property_n, generated_submagma, Pair,
    PropertyNWitness, Submagma,
};
pub use report::{Check, Report, Verdict};
pub use surpass::{check_surpassing, SurpassingRelation};

/// Dense index into a carrier or acting monoid.
pub type Elem = usize;
