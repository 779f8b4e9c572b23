//! Finite hypermagmas: carriers up to 16 elements whose addition is
//! subset-valued (the empty set is a legal, absorbing value). Subsets are bit
//! masks over carrier indices.
//!
//! The crate provides the power-set extension of the hyperaddition, the axiom
//! suites (hypersemigroup / hypergroup / hyperfield), the hyperpair (the
//! family of subsets generated by singletons, exposed as a core pair so core
//! law checkers apply verbatim), the builtin example tables, and the census
//! of small commutative tables.

pub mod builtin;
pub mod census;
pub mod error;
pub mod hypermagma;
pub mod hyperpair;
pub mod subset;

pub use builtin::{builtin, Builtin};
pub use census::{census, census_seq, CensusSuite};
pub use error::HyperError;
pub use hypermagma::{
    check_hyperfield, check_hypergroup, check_hypersemigroup, powerset_add,
    weakly_neutral_family, HypergroupOutcome, Hypermagma, MulStructure,
};
pub use hyperpair::{build_hyperpair, Hyperpair};
pub use subset::Mask;

/// Hard cap on hypermagma carriers so subsets fit comfortably in a mask.
pub const MAX_CARRIER: usize = 16;
