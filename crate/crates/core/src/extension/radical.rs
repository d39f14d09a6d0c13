use super::CommutatorForm;
use crate::fflinalg::{unit_vector, MatrixF, Subspace, WedgeCoords};
use crate::Result;

/// `{g : lambda(g ^ h) = 0 for all h}`. Up to isoclinism the extension splits
/// off these central directions.
pub fn radical(form: &CommutatorForm) -> Subspace {
    let all: Vec<Vec<u32>> = (0..form.n()).map(|i| unit_vector(form.n(), i)).collect();
    form.commutant(&all)
}

/// The form on `G^a / rad` together with the change of basis that exhibits
/// the splitting.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub reduced: CommutatorForm,
    /// Invertible `n x n` matrix taking old coordinates to new ones; the first
    /// `n - dim(rad)` new coordinates are quotient coordinates, the rest are
    /// radical coordinates.
    pub witness: MatrixF,
    pub radical: Subspace,
    /// New basis vectors, in old coordinates, complement first then radical.
    pub basis: Vec<Vec<u32>>,
}

impl Reduction {
    pub fn quotient_rank(&self) -> usize {
        self.reduced.n()
    }

    /// `G^a -> G^a / rad` in new coordinates: the top rows of the witness.
    pub fn projection(&self) -> MatrixF {
        let q = self.quotient_rank();
        let rows: Vec<Vec<u32>> = (0..q).map(|i| self.witness.row(i).to_vec()).collect();
        MatrixF::from_rows(self.witness.field(), self.witness.cols(), &rows).expect("witness rows")
    }

    pub fn project(&self, sigma: &Subspace) -> Subspace {
        sigma.image(&self.projection())
    }

    /// Full preimage of a subspace of the quotient: its lift plus the radical.
    pub fn preimage(&self, tau: &Subspace) -> Subspace {
        let f = self.witness.field();
        let n = self.witness.cols();
        let lifted = tau.basis().map(|c| {
            let mut v = vec![0u32; n];
            for (coef, b) in c.iter().zip(&self.basis) {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(*coef, y));
                }
            }
            v
        });
        Subspace::span(f, n, lifted).sum(&self.radical)
    }
}

/// Splits the radical off: returns the nondegenerate form on `G^a / rad`.
/// With a trivial radical the input comes back unchanged with the identity
/// witness.
pub fn reduce_radical(form: &CommutatorForm) -> Result<Reduction> {
    let f = form.field();
    let n = form.n();
    let rad = radical(form);
    let mut basis = rad.complement_basis();
    let q = basis.len();
    basis.extend(rad.basis_vecs());

    let reduced = if rad.is_zero() {
        form.clone()
    } else {
        let wc = WedgeCoords::new(q);
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(wc.dim());
        for (a, b) in wc.pairs() {
            cols.push(form.value(&basis[a], &basis[b]));
        }
        let mut lambda = MatrixF::zeros(f, form.r(), wc.dim());
        for (j, col) in cols.iter().enumerate() {
            for (k, &v) in col.iter().enumerate() {
                lambda.set(k, j, v);
            }
        }
        CommutatorForm::new(form.modulus(), q, lambda)?
    };

    // columns of basis_t are the new basis vectors; old = basis_t * new
    let basis_t = MatrixF::from_rows(f, n, &basis)?.transpose();
    let witness = basis_t.inverse().expect("complement plus radical basis is a basis");
    Ok(Reduction {
        reduced,
        witness,
        radical: rad,
        basis,
    })
}
