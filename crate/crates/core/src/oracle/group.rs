use serde::Serialize;

use crate::extension::CommutatorForm;
use crate::fflinalg::{MatrixF, Modulus, PrimeField, Subspace, WedgeCoords};
use crate::{Error, Result};

/// An element `(a, z)` of `G^c`, with `a` in `F_l^n` and `z` in `Z = F_l^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElt {
    pub a: Vec<u32>,
    pub z: Vec<u32>,
}

impl GroupElt {
    pub fn is_central_part(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }
}

/// A bilinear 2-cocycle `beta: G^a x G^a -> Z` whose alternation is the
/// commutator form: `beta(a, b) - beta(b, a) = lambda(a ^ b)`.
///
/// The default cocycle is upper triangular, `beta(e_i, e_j) = lambda(e_i ^ e_j)`
/// for `i < j` and zero otherwise. A symmetric perturbation `s` may be added;
/// it changes the group but not its commutators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    form: CommutatorForm,
    perturbation: Option<Vec<MatrixF>>,
    /// `beta_k(a, b) = a^T B_k b`, one `n x n` matrix per coordinate of `Z`.
    mats: Vec<MatrixF>,
}

impl Cocycle {
    pub fn new(form: CommutatorForm) -> Self {
        let f = form.field();
        let n = form.n();
        let wc = WedgeCoords::new(n);
        let mats = (0..form.r())
            .map(|k| {
                let mut b = MatrixF::zeros(f, n, n);
                for (idx, (i, j)) in wc.pairs().enumerate() {
                    b.set(i, j, form.lambda().get(k, idx));
                }
                b
            })
            .collect();
        Cocycle {
            form,
            perturbation: None,
            mats,
        }
    }

    pub fn form(&self) -> &CommutatorForm {
        &self.form
    }

    pub fn perturbation(&self) -> Option<&[MatrixF]> {
        self.perturbation.as_deref()
    }

    pub fn modulus(&self) -> Modulus {
        self.form.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.form.field()
    }

    pub fn n(&self) -> usize {
        self.form.n()
    }

    pub fn r(&self) -> usize {
        self.form.r()
    }

    /// `log_l |G^c| = n + r`.
    pub fn log_order(&self) -> usize {
        self.n() + self.r()
    }

    pub fn beta(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field();
        self.mats
            .iter()
            .map(|m| {
                let mb = m.apply(b);
                a.iter().zip(&mb).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
            })
            .collect()
    }

    pub fn identity(&self) -> GroupElt {
        GroupElt {
            a: vec![0; self.n()],
            z: vec![0; self.r()],
        }
    }

    pub fn element(&self, a: Vec<u32>, z: Vec<u32>) -> Result<GroupElt> {
        for (v, len) in [(&a, self.n()), (&z, self.r())] {
            if v.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: v.len(),
                });
            }
            if let Some(&value) = v.iter().find(|&&x| x >= self.modulus().ell()) {
                return Err(Error::EntryOutOfRange {
                    value,
                    modulus: self.modulus().ell(),
                });
            }
        }
        Ok(GroupElt { a, z })
    }

    /// The section `a -> (a, 0)`.
    pub fn lift(&self, a: &[u32]) -> GroupElt {
        GroupElt {
            a: a.to_vec(),
            z: vec![0; self.r()],
        }
    }

    pub fn central(&self, z: &[u32]) -> GroupElt {
        GroupElt {
            a: vec![0; self.n()],
            z: z.to_vec(),
        }
    }

    /// `(a, z)(a', z') = (a + a', z + z' + beta(a, a'))`.
    pub fn product(&self, x: &GroupElt, y: &GroupElt) -> GroupElt {
        let f = self.field();
        let b = self.beta(&x.a, &y.a);
        GroupElt {
            a: x.a.iter().zip(&y.a).map(|(&p, &q)| f.add(p, q)).collect(),
            z: x.z
                .iter()
                .zip(&y.z)
                .zip(&b)
                .map(|((&p, &q), &c)| f.add(f.add(p, q), c))
                .collect(),
        }
    }

    /// `(a, z)^{-1} = (-a, -z + beta(a, a))`.
    pub fn inverse(&self, x: &GroupElt) -> GroupElt {
        let f = self.field();
        let b = self.beta(&x.a, &x.a);
        GroupElt {
            a: x.a.iter().map(|&p| f.neg(p)).collect(),
            z: x.z.iter().zip(&b).map(|(&p, &c)| f.add(f.neg(p), c)).collect(),
        }
    }

    /// `x y x^{-1} y^{-1}`, computed with the group law.
    pub fn commutator(&self, x: &GroupElt, y: &GroupElt) -> GroupElt {
        let xy = self.product(x, y);
        let xi_yi = self.product(&self.inverse(x), &self.inverse(y));
        self.product(&xy, &xi_yi)
    }

    pub fn power(&self, x: &GroupElt, k: u64) -> GroupElt {
        let mut acc = self.identity();
        let mut base = x.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.product(&acc, &base);
            }
            base = self.product(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn commute(&self, x: &GroupElt, y: &GroupElt) -> bool {
        self.commutator(x, y) == self.identity()
    }

    /// All `l^{n+r}` elements, `a` varying slowest.
    pub fn elements(&self) -> Vec<GroupElt> {
        let f = self.field();
        let a_all = Subspace::full(f, self.n()).vectors();
        let z_all = Subspace::full(f, self.r()).vectors();
        let mut out = Vec::with_capacity(a_all.len() * z_all.len());
        for a in &a_all {
            for z in &z_all {
                out.push(GroupElt {
                    a: a.clone(),
                    z: z.clone(),
                });
            }
        }
        out
    }
}

/// The same extension class up to isoclinism: `beta' = beta + s` with each
/// `s_k` symmetric, so `beta'` has the same alternation.
pub fn isoclinic_variant(c: &Cocycle, s: &[MatrixF]) -> Result<Cocycle> {
    if s.len() != c.r() {
        return Err(Error::DimensionMismatch {
            expected: c.r(),
            found: s.len(),
        });
    }
    let f = c.field();
    let mut mats = c.mats.clone();
    for (m, sk) in mats.iter_mut().zip(s) {
        if sk.rows() != c.n() || sk.cols() != c.n() {
            return Err(Error::DimensionMismatch {
                expected: c.n(),
                found: sk.rows().max(sk.cols()),
            });
        }
        if sk.field() != f {
            return Err(Error::FieldMismatch(sk.field().p(), f.p()));
        }
        if *sk != sk.transpose() {
            return Err(Error::NotSymmetric);
        }
        for i in 0..c.n() {
            for j in 0..c.n() {
                m.set(i, j, f.add(m.get(i, j), sk.get(i, j)));
            }
        }
    }
    let perturbation = match &c.perturbation {
        None => s.to_vec(),
        Some(prev) => prev
            .iter()
            .zip(s)
            .map(|(p, q)| {
                let data = p.data().iter().zip(q.data()).map(|(&x, &y)| f.add(x, y)).collect();
                MatrixF::new(f, c.n(), c.n(), data).expect("same shape")
            })
            .collect(),
    };
    Ok(Cocycle {
        form: c.form.clone(),
        perturbation: Some(perturbation),
        mats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis() -> Cocycle {
        Cocycle::new(CommutatorForm::heisenberg(Modulus::new(3).unwrap()))
    }

    #[test]
    fn heisenberg_commutator() {
        let g = heis();
        let c = g.commutator(&g.lift(&[1, 0]), &g.lift(&[0, 1]));
        assert_eq!(c, g.element(vec![0, 0], vec![1]).unwrap());
        // beta(e1, e2) - beta(e2, e1) = 1 - 0
        let alt = g.field().sub(g.beta(&[1, 0], &[0, 1])[0], g.beta(&[0, 1], &[1, 0])[0]);
        assert_eq!(c.z, vec![alt]);
    }

    #[test]
    fn central_elements_commute_with_everything() {
        let g = heis();
        let zc = g.central(&[2]);
        for x in g.elements() {
            assert!(g.commute(&x, &zc));
        }
    }

    #[test]
    fn inverse_formula() {
        let g = heis();
        for x in g.elements() {
            assert_eq!(g.product(&x, &g.inverse(&x)), g.identity());
            assert_eq!(g.product(&g.inverse(&x), &x), g.identity());
        }
    }

    #[test]
    fn exponent_three() {
        let g = heis();
        assert_eq!(g.elements().len(), 27);
        for x in g.elements() {
            assert_eq!(g.power(&x, 3), g.identity());
        }
    }

    #[test]
    fn zero_perturbation_is_same_group() {
        let g = heis();
        let zero = vec![MatrixF::zeros(g.field(), 2, 2)];
        let v = isoclinic_variant(&g, &zero).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(g.product(&x, &y), v.product(&x, &y));
            }
        }
    }

    #[test]
    fn asymmetric_perturbation_rejected() {
        let g = heis();
        let s = MatrixF::from_rows(g.field(), 2, &[[0, 1], [0, 0]]).unwrap();
        assert_eq!(isoclinic_variant(&g, &[s]), Err(Error::NotSymmetric));
    }

    #[test]
    fn element_validation() {
        let g = heis();
        assert!(g.element(vec![0, 3], vec![0]).is_err());
        assert!(g.element(vec![0], vec![0]).is_err());
    }
}
