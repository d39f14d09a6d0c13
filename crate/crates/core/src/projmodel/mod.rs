//! A finite model of the product of projectivized induced representations:
//! `V_j = Ind_Z^{G^c}(chi_j)` as monomial matrices over `F_q`, `q ≡ 1 (mod l)`,
//! and the fixed loci of subgroups of `G^a` acting on `prod_j P(V_j)`.
//!
//! `F_q` contains the `l`-th roots of unity, so every matrix of exponent `l`
//! diagonalizes over it. Fixed loci are carried as eigenspaces, never as
//! point sets.

mod claims;
mod locus;
mod rep;

pub use claims::{verify_action_claims, ActionReport, ClaimOutcome, FixedLocusRow};
pub use locus::{fixed_locus, h_sigma, Eigenspace, FactorLocus, FixedLocus, HSigma, MAX_COMPONENTS};
pub use rep::{
    default_q, induced_rep, induced_rep_for, induced_reps, root_of_unity, MonomialRep, RepSummary, MAX_REP_DIM,
};
