//! Finite left quasigroups, racks and quandles: construction, classification
//! and exhaustive verification over desk-scale corpora.

pub mod congruence;
pub mod constructions;
pub mod displacement;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod involutory;
pub mod io;
pub mod groups;
pub mod partition;
pub mod perm;
pub mod properties;
pub mod table;

pub use congruence::CongruenceLattice;
pub use displacement::DisplacementData;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use groups::{FiniteGroup, GroupMap};
pub use partition::Partition;
pub use perm::Permutation;
pub use table::LeftQuasigroup;
