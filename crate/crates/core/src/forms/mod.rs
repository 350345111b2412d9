//! Invariant symmetric forms, the Koszul map, and related sequences.

mod centroid;
mod invariant;
mod transfer;
mod witness;

pub use centroid::{centroid, CentroidReport, SymmetricCentroid};
pub use invariant::{
    exact_forms, from_gram, gram, invariant_forms, is_invariant, koszul, koszul_matrix,
    radical_probe, sym2_invariants, ExactFormsReport, InvariantForms, RadicalProbe,
};
pub use transfer::{
    alpha2_image, check_curry_identity, cochain_module, curry, transfer_sequence, TransferReport,
};
pub use witness::{
    check_primitive, magnetic_check, pelc_exactness_witness, pelc_with_flipped_eta,
    MagneticReport, PelcReport,
};
