//! Exact linear algebra over prime fields: echelon forms, kernels, the
//! subspace lattice with canonical representatives, subspace enumeration and
//! coordinates on the exterior square.

mod enumerate;
mod field;
mod matrix;
mod subspace;
mod wedge;

pub use enumerate::{combinations, enumerate_subspaces, gaussian_binomial, subspace_count, Caps, SubspaceIter};
pub use field::{Modulus, PrimeField};
pub use matrix::MatrixF;
pub use subspace::Subspace;
pub use wedge::{wedge_image, wedge_square, WedgeCoords};

/// Standard basis vector `e_i` of `F^n` (zero-based).
pub fn unit_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
