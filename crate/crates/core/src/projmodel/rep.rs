use serde::Serialize;

use crate::extension::CommutatorForm;
use crate::fflinalg::{unit_vector, MatrixF, PrimeField, Subspace};
use crate::oracle::{Cocycle, GroupElt};
use crate::{Error, Result};

/// Largest `l^n` (index of `Z` in `G^c`) for which representations are built.
pub const MAX_REP_DIM: usize = 81;

/// Smallest prime `q` with `q ≡ 1 (mod l)`.
pub fn default_q(ell: u32) -> u32 {
    (1..)
        .map(|k| k * ell + 1)
        .find(|&q| PrimeField::new(q).is_ok())
        .expect("Dirichlet")
}

/// Smallest `x != 1` in `F_q` with `x^l = 1`: a primitive `l`-th root of unity.
pub fn root_of_unity(ell: u32, q: u32) -> Result<u32> {
    let f = PrimeField::new(q)?;
    if q % ell != 1 {
        return Err(Error::Precondition(format!("q = {q} is not 1 mod l = {ell}")));
    }
    Ok((2..q)
        .find(|&x| f.pow(x, ell as u64) == 1)
        .expect("F_q^x is cyclic of order divisible by l"))
}

/// `V_j = Ind_Z^{G^c}(chi_j)` over `F_q`, on the basis `v_a = (a, 0) ⊗ 1`,
/// `a` in `F_l^n`, with `chi_j(z) = zeta^{z_j}`. An element `(b, z)` sends
/// `v_a` to `zeta^{(z + beta(b, a))_j} v_{a+b}`, so every matrix is monomial.
#[derive(Clone, Debug)]
pub struct MonomialRep {
    cocycle: Cocycle,
    field: PrimeField,
    zeta: u32,
    character_index: usize,
    points: Vec<Vec<u32>>,
    generator_matrices: Vec<MatrixF>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepSummary {
    pub q: u32,
    pub zeta: u32,
    pub dim: usize,
    pub character_index: usize,
    pub generators: usize,
}

impl MonomialRep {
    pub fn q(&self) -> u32 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn zeta(&self) -> u32 {
        self.zeta
    }

    pub fn character_index(&self) -> usize {
        self.character_index
    }

    pub fn dim(&self) -> usize {
        self.points.len()
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    /// `rho((e_1, 0)), ..., rho((e_n, 0)), rho((0, e_1)), ..., rho((0, e_r))`.
    pub fn generator_matrices(&self) -> &[MatrixF] {
        &self.generator_matrices
    }

    pub fn summary(&self) -> RepSummary {
        RepSummary {
            q: self.q(),
            zeta: self.zeta,
            dim: self.dim(),
            character_index: self.character_index,
            generators: self.generator_matrices.len(),
        }
    }

    fn index(&self, a: &[u32]) -> usize {
        let ell = self.cocycle.modulus().ell() as usize;
        a.iter().rev().fold(0, |acc, &x| acc * ell + x as usize)
    }

    pub fn matrix(&self, x: &GroupElt) -> MatrixF {
        let fl = self.cocycle.field();
        let mut m = MatrixF::zeros(self.field, self.dim(), self.dim());
        for (col, a) in self.points.iter().enumerate() {
            let target: Vec<u32> = x.a.iter().zip(a).map(|(&p, &q)| fl.add(p, q)).collect();
            let phase = fl.add(
                x.z[self.character_index],
                self.cocycle.beta(&x.a, a)[self.character_index],
            );
            m.set(self.index(&target), col, self.field.pow(self.zeta, phase as u64));
        }
        m
    }

    /// `rho((a, 0))`.
    pub fn lift_matrix(&self, a: &[u32]) -> MatrixF {
        self.matrix(&self.cocycle.lift(a))
    }

    /// Relations of `G^c` on the generators: multiplicativity on every pair,
    /// exponent `l`, and `Z` acting through `chi_j`.
    pub fn relations_hold(&self) -> bool {
        let c = &self.cocycle;
        let ell = c.modulus().ell() as u64;
        let gens: Vec<GroupElt> = (0..c.n())
            .map(|i| c.lift(&unit_vector(c.n(), i)))
            .chain((0..c.r()).map(|k| c.central(&unit_vector(c.r(), k))))
            .collect();
        let id = MatrixF::identity(self.field, self.dim());
        for (x, mx) in gens.iter().zip(&self.generator_matrices) {
            if !is_monomial(mx) || mat_pow(mx, ell) != id {
                return false;
            }
            for (y, my) in gens.iter().zip(&self.generator_matrices) {
                let prod = mx.mul(my).expect("square");
                if prod != self.matrix(&c.product(x, y)) {
                    return false;
                }
            }
        }
        (0..c.r()).all(|k| {
            let expected = if k == self.character_index { self.zeta } else { 1 };
            self.generator_matrices[c.n() + k] == scalar(self.field, self.dim(), expected)
        })
    }
}

fn scalar(field: PrimeField, dim: usize, c: u32) -> MatrixF {
    let mut m = MatrixF::zeros(field, dim, dim);
    for i in 0..dim {
        m.set(i, i, c);
    }
    m
}

pub(crate) fn is_scalar(m: &MatrixF) -> bool {
    let c = m.get(0, 0);
    m.rows() == m.cols() && *m == scalar(m.field(), m.rows(), c)
}

fn is_monomial(m: &MatrixF) -> bool {
    let rows_ok = m.row_iter().all(|r| r.iter().filter(|&&x| x != 0).count() == 1);
    let cols_ok = (0..m.cols()).all(|j| m.column(j).iter().filter(|&&x| x != 0).count() == 1);
    rows_ok && cols_ok
}

fn mat_pow(m: &MatrixF, e: u64) -> MatrixF {
    let mut acc = MatrixF::identity(m.field(), m.rows());
    for _ in 0..e {
        acc = acc.mul(m).expect("square");
    }
    acc
}

/// The factor `V_j` for character index `j`. `q` defaults to
/// [`default_q`].
pub fn induced_rep(form: &CommutatorForm, j: usize, q: Option<u32>) -> Result<MonomialRep> {
    induced_rep_for(&Cocycle::new(form.clone()), j, q)
}

pub fn induced_rep_for(cocycle: &Cocycle, j: usize, q: Option<u32>) -> Result<MonomialRep> {
    let ell = cocycle.modulus().ell();
    if cocycle.r() == 0 {
        return Err(Error::Precondition(
            "r = 0: Z is trivial and there is no character to induce".into(),
        ));
    }
    if j >= cocycle.r() {
        return Err(Error::Precondition(format!(
            "character index {j} out of range for r = {}",
            cocycle.r()
        )));
    }
    let dim = (ell as u128).pow(cocycle.n() as u32);
    if dim > MAX_REP_DIM as u128 {
        return Err(Error::CapExceeded(format!("l^n = {dim} exceeds {MAX_REP_DIM}")));
    }
    let q = q.unwrap_or_else(|| default_q(ell));
    let zeta = root_of_unity(ell, q)?;
    let field = PrimeField::new(q)?;
    let points = Subspace::full(cocycle.field(), cocycle.n()).vectors();
    let mut rep = MonomialRep {
        cocycle: cocycle.clone(),
        field,
        zeta,
        character_index: j,
        points,
        generator_matrices: Vec::new(),
    };
    let n = cocycle.n();
    let r = cocycle.r();
    rep.generator_matrices = (0..n)
        .map(|i| rep.lift_matrix(&unit_vector(n, i)))
        .chain((0..r).map(|k| rep.matrix(&cocycle.central(&unit_vector(r, k)))))
        .collect();
    if !rep.relations_hold() {
        return Err(Error::Precondition(
            "induced matrices violate the group relations".into(),
        ));
    }
    Ok(rep)
}

/// One factor per coordinate of `Z`: the product `P = prod_j P(V_j)`.
pub fn induced_reps(form: &CommutatorForm, q: Option<u32>) -> Result<Vec<MonomialRep>> {
    let c = Cocycle::new(form.clone());
    (0..form.r()).map(|j| induced_rep_for(&c, j, q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::Modulus;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn default_primes_and_roots() {
        assert_eq!(default_q(3), 7);
        assert_eq!(default_q(5), 11);
        assert_eq!(root_of_unity(3, 7).unwrap(), 2);
        assert!(root_of_unity(3, 11).is_err());
    }

    #[test]
    fn heisenberg_rep_is_a_homomorphism() {
        let h = CommutatorForm::heisenberg(m3());
        let rep = induced_rep(&h, 0, Some(7)).unwrap();
        assert_eq!(rep.dim(), 9);
        assert_eq!(rep.zeta(), 2);
        let c = rep.cocycle().clone();
        let elts = c.elements();
        for x in &elts {
            let mx = rep.matrix(x);
            assert!(is_monomial(&mx));
            for y in &elts {
                assert_eq!(mx.mul(&rep.matrix(y)).unwrap(), rep.matrix(&c.product(x, y)));
            }
        }
        // Z acts by zeta
        assert_eq!(rep.matrix(&c.central(&[1])), scalar(rep.field(), 9, 2));
    }

    #[test]
    fn zero_form_has_nothing_to_induce() {
        assert!(matches!(
            induced_rep(&CommutatorForm::zero(m3(), 2), 0, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cap_and_modulus_checks() {
        let big = CommutatorForm::from_rows(Modulus::new(5).unwrap(), 3, &[[1, 0, 0]]).unwrap();
        assert!(matches!(induced_rep(&big, 0, None), Err(Error::CapExceeded(_))));
        assert!(matches!(
            induced_rep(&CommutatorForm::heisenberg(m3()), 0, Some(11)),
            Err(Error::Precondition(_))
        ));
    }
}
