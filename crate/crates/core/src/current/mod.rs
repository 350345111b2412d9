//! Current algebras g = A ⊗ k and their second (co)homology.

mod algebra;
mod boundaries;
mod cocycles;
mod sequence;

pub use algebra::{build_current_algebra, CurrentAlgebra};
pub use boundaries::{
    b2_generators_w, cycle_report, lemma_report, z2_generators_w, CycleReport, LemmaReport,
};
pub use cocycles::{
    coboundary_test, cocycle_check, coupled_cocycles_exist, coupled_construct, f1_form, f2_form,
    gamma_primitive, random_trials, random_triple, scalar_cocycles, scalar_part, split_f1,
    CoboundaryReport, CochainTriple, CocycleChecker, CocycleVerdict, Coupled, F1Split,
    TrialSummary,
};
pub use sequence::{
    h2_sequence, homology_count, lin_pair_dim, universal_cocycle, HomologyCount, SequenceReport,
    UniversalCocycle,
};
