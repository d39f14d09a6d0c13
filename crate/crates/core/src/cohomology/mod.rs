//! Stable cohomology of `G^a = F_l^n` with `F_l` coefficients, which is the
//! exterior algebra on `(G^a)^dual`, together with restriction, pullback and
//! the degree-2 unramified quotient.

mod class;
mod ideal;
mod unramified;

pub use class::{pullback_class, restrict, wedge, ExtClass};
pub use ideal::ideal_quotient_dims;
pub use unramified::{is_unramified_on_pair, r2_min, r2_sigma, r2_sigma_of_fan, unramified_quotient, UnramifiedReport};
