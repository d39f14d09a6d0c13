use serde::Serialize;

use crate::fflinalg::{unit_vector, wedge_image, MatrixF, Modulus, PrimeField, Subspace, WedgeCoords};
use crate::{Error, Result};

/// A class-two central extension `1 -> Z -> G^c -> G^a -> 1` with
/// `G^a = F_l^n`, `Z = F_l^r`, recorded up to isoclinism by its commutator form
/// `lambda: wedge^2(G^a) -> Z`.
///
/// `lambda` is an `r x n(n-1)/2` matrix whose rows are the `Z`-coordinates of
/// the form in wedge lex coordinates. It must have full row rank, i.e.
/// `Z = [G^c, G^c]`. The zero form (`r = 0`) is the split abelian case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutatorForm {
    modulus: Modulus,
    n: usize,
    lambda: MatrixF,
    kernel: Subspace,
}

impl CommutatorForm {
    pub fn new(modulus: Modulus, n: usize, lambda: MatrixF) -> Result<Self> {
        let wc = WedgeCoords::new(n);
        if lambda.field() != modulus.field() {
            return Err(Error::FieldMismatch(lambda.field().p(), modulus.ell()));
        }
        if lambda.cols() != wc.dim() {
            return Err(Error::InvalidForm(format!(
                "lambda rows must have n(n-1)/2 = {} entries, found {}",
                wc.dim(),
                lambda.cols()
            )));
        }
        let rank = lambda.rank();
        if rank != lambda.rows() {
            return Err(Error::InvalidForm(format!(
                "lambda must be surjective: rank {rank} but r = {}",
                lambda.rows()
            )));
        }
        let kernel = lambda.kernel();
        Ok(CommutatorForm {
            modulus,
            n,
            lambda,
            kernel,
        })
    }

    pub fn from_rows<R: AsRef<[u32]>>(modulus: Modulus, n: usize, rows: &[R]) -> Result<Self> {
        let m = WedgeCoords::new(n).dim();
        let lambda = MatrixF::from_rows(modulus.field(), m, rows).map_err(|e| match e {
            Error::DimensionMismatch { expected, found } => Error::InvalidForm(format!(
                "lambda rows must have n(n-1)/2 = {expected} entries, found {found}"
            )),
            other => other,
        })?;
        CommutatorForm::new(modulus, n, lambda)
    }

    /// The abelian extension, `r = 0`.
    pub fn zero(modulus: Modulus, n: usize) -> Self {
        let m = WedgeCoords::new(n).dim();
        CommutatorForm::new(modulus, n, MatrixF::zeros(modulus.field(), 0, m)).expect("zero form")
    }

    /// Extra-special group of order `l^3`: `n = 2`, `lambda(e1 ^ e2) = 1`.
    pub fn heisenberg(modulus: Modulus) -> Self {
        CommutatorForm::from_rows(modulus, 2, &[[1]]).expect("heisenberg form")
    }

    /// The form whose kernel is `kernel`, with `lambda` the canonical basis of
    /// its annihilator.
    pub fn from_kernel(modulus: Modulus, n: usize, kernel: &Subspace) -> Result<Self> {
        let m = WedgeCoords::new(n).dim();
        if kernel.ambient_dim() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: kernel.ambient_dim(),
            });
        }
        CommutatorForm::new(modulus, n, kernel.annihilator().basis_matrix())
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.modulus.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.lambda.rows()
    }

    pub fn lambda(&self) -> &MatrixF {
        &self.lambda
    }

    /// `ker(lambda)` inside `wedge^2(G^a)`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn wedge_coords(&self) -> WedgeCoords {
        WedgeCoords::new(self.n)
    }

    /// `lambda(u ^ v)` in `Z`.
    pub fn value(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let w = self.wedge_coords().wedge(self.field(), u, v);
        self.lambda.apply(&w)
    }

    /// A subgroup is liftable when its full preimage in `G^c` is abelian,
    /// equivalently `wedge^2(sigma) ⊆ ker(lambda)`.
    pub fn is_liftable(&self, sigma: &Subspace) -> Result<bool> {
        self.check_subspace(sigma)?;
        Ok(self.kernel.contains(&wedge_image(sigma)))
    }

    /// `{d : lambda(x ^ d) = 0 for all x in xs}`.
    pub fn commutant<V: AsRef<[u32]>>(&self, xs: &[V]) -> Subspace {
        let f = self.field();
        let r = self.r();
        let mut rows = Vec::with_capacity(xs.len() * r);
        for x in xs {
            let images: Vec<Vec<u32>> = (0..self.n)
                .map(|j| self.value(x.as_ref(), &unit_vector(self.n, j)))
                .collect();
            for k in 0..r {
                rows.push(images.iter().map(|img| img[k]).collect::<Vec<u32>>());
            }
        }
        MatrixF::from_rows(f, self.n, &rows)
            .expect("commutant rows have length n")
            .kernel()
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.ambient_dim(),
            });
        }
        if s.field() != self.field() {
            return Err(Error::FieldMismatch(s.field().p(), self.field().p()));
        }
        Ok(())
    }
}

/// Plain-data view used for JSON output.
#[derive(Serialize)]
pub struct FormData {
    pub l: u32,
    pub n: usize,
    pub r: usize,
    pub lambda: Vec<Vec<u32>>,
}

impl From<&CommutatorForm> for FormData {
    fn from(f: &CommutatorForm) -> Self {
        FormData {
            l: f.modulus.ell(),
            n: f.n,
            r: f.r(),
            lambda: f.lambda.to_rows(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn rank_deficient_lambda_is_rejected() {
        assert!(matches!(
            CommutatorForm::from_rows(m3(), 2, &[[0]]),
            Err(Error::InvalidForm(_))
        ));
        assert!(matches!(
            CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0], [2, 0, 0]]),
            Err(Error::InvalidForm(_))
        ));
    }

    #[test]
    fn wrong_row_length_is_rejected() {
        assert!(matches!(
            CommutatorForm::from_rows(m3(), 3, &[[1, 0]]),
            Err(Error::InvalidForm(_))
        ));
    }

    #[test]
    fn kernel_dimension() {
        let f = CommutatorForm::from_rows(m3(), 4, &[[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]]).unwrap();
        assert_eq!(f.kernel().dim(), 6 - 2);
        assert_eq!(CommutatorForm::zero(m3(), 3).kernel().dim(), 3);
    }

    #[test]
    fn from_kernel_roundtrip() {
        let f = CommutatorForm::from_rows(m3(), 3, &[[1, 2, 0]]).unwrap();
        let g = CommutatorForm::from_kernel(m3(), 3, f.kernel()).unwrap();
        assert_eq!(f.kernel(), g.kernel());
    }

    #[test]
    fn value_is_alternating() {
        let f = CommutatorForm::heisenberg(m3());
        assert_eq!(f.value(&[1, 0], &[0, 1]), vec![1]);
        assert_eq!(f.value(&[0, 1], &[1, 0]), vec![2]);
        assert_eq!(f.value(&[1, 2], &[1, 2]), vec![0]);
    }
}
