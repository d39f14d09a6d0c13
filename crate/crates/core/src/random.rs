//! Seeded random instances for property tests and randomized sweeps.

use rand::Rng;

use crate::cohomology::ExtClass;
use crate::extension::CommutatorForm;
use crate::fflinalg::{MatrixF, Modulus, PrimeField, Subspace, WedgeCoords};

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..field.p())).collect()
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, rows: usize, cols: usize) -> MatrixF {
    let data = random_vector(rng, field, rows * cols);
    MatrixF::new(field, rows, cols, data).expect("entries reduced")
}

/// Uniform full-rank `lambda` with `r` rows; requires `r <= n(n-1)/2`.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, modulus: Modulus, n: usize, r: usize) -> CommutatorForm {
    let m = WedgeCoords::new(n).dim();
    assert!(r <= m, "r must not exceed n(n-1)/2");
    loop {
        let lambda = random_matrix(rng, modulus.field(), r, m);
        if lambda.rank() == r {
            return CommutatorForm::new(modulus, n, lambda).expect("full rank");
        }
    }
}

/// A form with nonzero radical: `lambda` pulled back from a random form on a
/// proper quotient `F^n -> F^k`, `2 <= k < n`.
pub fn random_degenerate_form<R: Rng + ?Sized>(rng: &mut R, modulus: Modulus, n: usize) -> CommutatorForm {
    assert!(n >= 3, "degenerate nonzero forms need n >= 3");
    let k = rng.gen_range(2..n);
    let r = rng.gen_range(1..=WedgeCoords::new(k).dim());
    let base = random_form(rng, modulus, k, r);
    let gamma = random_surjection(rng, modulus.field(), k, n);
    crate::extension::pullback_form(&gamma, &base).expect("surjection")
}

/// A uniformly chosen subspace of dimension `dim` (rejection on rank).
pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, n: usize, dim: usize) -> Subspace {
    assert!(dim <= n);
    loop {
        let m = random_matrix(rng, field, dim, n);
        if m.rank() == dim {
            return Subspace::row_space(&m);
        }
    }
}

/// An `n x k` matrix of rank `n`, i.e. a surjection `F^k -> F^n`.
pub fn random_surjection<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, n: usize, k: usize) -> MatrixF {
    assert!(k >= n, "a surjection onto F^{n} needs k >= n");
    loop {
        let m = random_matrix(rng, field, n, k);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, n: usize) -> MatrixF {
    random_surjection(rng, field, n, n)
}

/// `r` symmetric `n x n` matrices.
pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, field: PrimeField, n: usize, r: usize) -> Vec<MatrixF> {
    (0..r)
        .map(|_| {
            let mut s = MatrixF::zeros(field, n, n);
            for i in 0..n {
                for j in i..n {
                    let v = rng.gen_range(0..field.p());
                    s.set(i, j, v);
                    s.set(j, i, v);
                }
            }
            s
        })
        .collect()
}

pub fn random_class<R: Rng + ?Sized>(rng: &mut R, modulus: Modulus, n: usize, degree: usize) -> ExtClass {
    let len = ExtClass::zero(modulus, n, degree).coords().len();
    ExtClass::new(modulus, n, degree, random_vector(rng, modulus.field(), len)).expect("reduced coordinates")
}
