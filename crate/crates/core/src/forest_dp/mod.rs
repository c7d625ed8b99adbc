//! Maximum weight induced forest over a nice decomposition, with state families
//! that stay small when bags touch few pairwise far-apart edges.

mod anatomy;
mod dp;
mod family;
mod signature;

pub use anatomy::{forest_anatomy, ForestAnatomy};
pub use dp::{mwif_dp, mwif_dp_with, signature_families, FamilyProvider};
pub use family::{
    bounded_family_bound, signature_family_exhaustive, signature_family_bounded, BoundedOptions, Provenance,
    SignatureFamily, DEFAULT_EXHAUSTIVE_CAP, DEFAULT_FAMILY_BUDGET,
};
pub use signature::{merge_partitions, oplus, respects_components, signature_of, signature_of_in, ForestSignature};
