//! Characters of symmetric groups and of explicit subgroups of `S_j`.

mod perm;
mod subgroup;
mod symmetric;

pub use perm::Perm;
pub use subgroup::{induce_character, FiniteSubgroup, RationalTable};
pub use symmetric::{
    alt2, assemble, character, decompose, decompose_over, inner_product, is_character,
    kronecker_mult, mn_character, sym2, z_rho, ClassFunction, SymClasses,
};

/// A cycle type of `S_n` is a partition of `n`.
pub type CycleType = crate::partitions::Partition;
