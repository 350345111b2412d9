//! Lie algebras, modules, and the Chevalley–Eilenberg complex.

mod algebra;
mod complex;
mod homology;
mod module;

pub use algebra::{LieAlgebra, LieBuilder, Sparse};
pub(crate) use algebra::to_sparse;
pub use complex::{
    ce_differential, cochain_dim, cohomology, cohomology_table, differentiate, h2_trivial,
    Cohomology, DegreeDims,
};
pub use homology::{add_wedge, boundary_partial, bracket_map, homology_h2, H2Homology};
pub use module::{KModule, ModuleKind};
