//! Brute-force ground truth: the group `G^c` of order `l^{n+r}` built from an
//! explicit bilinear cocycle, and the fan, delta-pair and centralizer
//! questions answered by multiplying elements.

mod checks;
mod group;

pub use checks::{
    agreement_sweep, centralizer, derived_form, group_commutant, oracle_delta_pairs, oracle_fan, pairs_commute,
    preimage_abelian, preimage_abelian_exhaustive, AgreementReport, Centralizer, Disagreement,
};
pub use group::{isoclinic_variant, Cocycle, GroupElt};
