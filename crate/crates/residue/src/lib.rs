//! Residue (quotient) hypermodules: a module modulo a normal subgroup of
//! acting units becomes a hypermagma on the orbit classes. Covers the
//! quotient-hyperfield construction on small finite fields, the constants
//! derived from the unit class, the induced surpassing relation, and the
//! transfer of a free base to the quotient.

pub mod error;
pub mod field;
pub mod freebase;
pub mod residue;
pub mod subgroup;
pub mod surpass;

pub use error::ResidueError;
pub use field::{field_module, FIELD_ORDERS};
pub use freebase::{residue_free_base, ResidueFreeBase};
pub use residue::{residue, residue_constants, ResidueConstants, ResidueHypermodule};
pub use subgroup::SubgroupSpec;
pub use surpass::induced_surpassing;
