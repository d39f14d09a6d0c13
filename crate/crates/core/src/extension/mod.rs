//! Central extensions of elementary abelian groups, presented by commutator
//! forms: liftability, fans, delta-pairs, radical reduction, isoclinism and
//! orbit questions.

mod delta;
mod fan;
mod form;
mod isoclinism;
pub mod orbit;
mod radical;

pub use delta::{d_max, delta_pair_surjects, delta_pairs, pullback_form, DeltaPair};
pub use fan::{fan, Fan};
pub use form::{CommutatorForm, FormData};
pub use isoclinism::{
    fan_determines, isoclinic_eq, kernel_orbits, FanDetermination, IsoclinismMode, IsoclinismResult, ORBIT_MAX_N,
};
pub use radical::{radical, reduce_radical, Reduction};

pub(crate) use delta::require_surjection;

use crate::fflinalg::Subspace;
use crate::Result;

/// Liftability of `sigma` under `form`; see [`CommutatorForm::is_liftable`].
pub fn is_liftable(sigma: &Subspace, form: &CommutatorForm) -> Result<bool> {
    form.is_liftable(sigma)
}
