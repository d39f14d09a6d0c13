//! Finite-group invariants of unramified cohomology for class-two central
//! extensions `1 -> Z -> G^c -> G^a -> 1` of elementary abelian `l`-groups.
//!
//! An extension is presented, up to isoclinism, by its commutator form
//! `lambda: wedge^2(G^a) -> Z`. From it the crate computes liftable-subgroup
//! fans, delta-pairs, the degree-2 unramified quotient and GL-orbit data, and
//! checks all of it against an explicitly constructed group ([`oracle`]) and a
//! monomial model of the induced representations ([`projmodel`]).

pub mod cohomology;
pub mod error;
pub mod extension;
pub mod fflinalg;
pub mod oracle;
pub mod projmodel;
pub mod random;

pub use error::{Error, Result};
