//! Bounded tensor products of modules and module pairs over finite monoids.

mod closure;
mod error;
mod extension;
mod freeform;
mod homs;
mod iso;
mod monoid;
mod nr;
mod oracle;
mod pair;
mod residue_iso;
mod subsets;
mod term;

pub use closure::{build_tensor, CongruenceClosure};
pub use extension::{tensor_extension, ExtensionClosure};
pub use freeform::{codec_closure_agreement, free_normal_form, TensorCodec};
pub use homs::{tensor_of_homs, tensor_swap};
pub use iso::check_assoc_comm_dist;
pub use monoid::{action_on, monoid_tensor, MonoidTensor};
pub use nr::{nr_add, nr_assoc_counterexample, nr_sum, nr_vs_closure, NrSet};
pub use pair::{tensor_pair, PairTensor};
pub use residue_iso::{residue_tensor_iso, ResidueTensorIso};
pub use subsets::subset_distributivity;
pub use error::TensorError;
pub use oracle::{
    additive_class_maps, balanced_maps, universal_property_oracle, BalancedMap, ORACLE_NODE_CAP,
};
pub use term::{count_terms, enumerate_terms, feasible_bound, TensorTerm, TERM_ENUM_CAP};
