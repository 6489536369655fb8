//! Finite-rank ground truth: explicit subgroups, algebras of equivariant
//! functions on `S_N`, invariant-ideal closure and small form computations.

mod algebra;
mod gram;
mod kernel;
mod subgroups;

pub use algebra::{
    fun_g_algebra, invariant_simple, symmetric_generators, ConcreteAlgebra, MatrixAction,
    SimplicityReport, Sparse,
};
pub use gram::{frobenius_gram, young_times};
pub use kernel::{kernel_model_check, perm_matrix, FormModule};
pub use subgroups::{count_all_subgroups, subgroup_classes, subgroups_of_sj, SUBGROUP_BOUND};
