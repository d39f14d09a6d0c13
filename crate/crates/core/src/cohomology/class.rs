use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::extension::require_surjection;
use crate::fflinalg::{combinations, MatrixF, Modulus, PrimeField, Subspace};
use crate::{Error, Result};

/// Lex-ordered monomials `x_{j1} ^ ... ^ x_{jd}` of one degree, with a lookup
/// from bitmask to position.
#[derive(Clone, Debug)]
pub(crate) struct MonomialBasis {
    sets: Vec<Vec<usize>>,
    masks: Vec<u32>,
    index: Vec<usize>,
}

impl MonomialBasis {
    pub(crate) fn new(n: usize, degree: usize) -> Self {
        let sets = combinations(n, degree);
        let masks: Vec<u32> = sets.iter().map(|s| s.iter().fold(0u32, |m, &i| m | (1 << i))).collect();
        let mut index = vec![usize::MAX; 1 << n];
        for (pos, &m) in masks.iter().enumerate() {
            index[m as usize] = pos;
        }
        MonomialBasis { sets, masks, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.sets.len()
    }

    pub(crate) fn set(&self, pos: usize) -> &[usize] {
        &self.sets[pos]
    }

    pub(crate) fn mask(&self, pos: usize) -> u32 {
        self.masks[pos]
    }

    pub(crate) fn position(&self, mask: u32) -> usize {
        self.index[mask as usize]
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// An element of `wedge^d((F_l^n)^dual)`, the degree-`d` stable cohomology of
/// `G^a` with `F_l` coefficients.
///
/// `coords` runs over the lex-ordered monomials of degree `d`; its length is
/// `binomial(n, d)` and every entry is reduced mod `l`. In degree 2 the
/// coordinates line up with the wedge coordinates of `wedge^2(F_l^n)`, and
/// the pairing between the two is the dot product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtClass {
    modulus: Modulus,
    n: usize,
    degree: usize,
    coords: Vec<u32>,
}

impl ExtClass {
    pub fn new(modulus: Modulus, n: usize, degree: usize, coords: Vec<u32>) -> Result<Self> {
        let expected = binomial(n, degree);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coords.len(),
            });
        }
        if let Some(&value) = coords.iter().find(|&&c| c >= modulus.ell()) {
            return Err(Error::EntryOutOfRange {
                value,
                modulus: modulus.ell(),
            });
        }
        Ok(ExtClass {
            modulus,
            n,
            degree,
            coords,
        })
    }

    pub fn zero(modulus: Modulus, n: usize, degree: usize) -> Self {
        ExtClass {
            modulus,
            n,
            degree,
            coords: vec![0; binomial(n, degree)],
        }
    }

    /// The unit `1` in degree 0.
    pub fn one(modulus: Modulus, n: usize) -> Self {
        ExtClass {
            modulus,
            n,
            degree: 0,
            coords: vec![1],
        }
    }

    /// `x_{i1} ^ ... ^ x_{id}` for arbitrary (zero-based) indices: signed by
    /// the sorting permutation, zero on a repeated index.
    pub fn monomial(modulus: Modulus, n: usize, indices: &[usize]) -> Self {
        let f = modulus.field();
        let degree = indices.len();
        let mut out = ExtClass::zero(modulus, n, degree);
        let mut sorted = indices.to_vec();
        let mut sign = 1u32;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = f.neg(sign);
                }
            }
        }
        assert!(sorted.iter().all(|&i| i < n), "monomial index out of range");
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return out;
        }
        let mask = sorted.iter().fold(0u32, |m, &i| m | (1 << i));
        let pos = MonomialBasis::new(n, degree).position(mask);
        out.coords[pos] = sign;
        out
    }

    /// `sum_i c_i x_i`.
    pub fn linear(modulus: Modulus, coeffs: &[u32]) -> Result<Self> {
        ExtClass::new(modulus, coeffs.len(), 1, coeffs.to_vec())
    }

    /// A 2-form from its coordinates on `wedge^2`, e.g. a row of `lambda`.
    pub fn two_form(modulus: Modulus, n: usize, coords: &[u32]) -> Result<Self> {
        ExtClass::new(modulus, n, 2, coords.to_vec())
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
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Nonzero terms as `(sorted indices, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<usize>, u32)> {
        let basis = MonomialBasis::new(self.n, self.degree);
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(pos, &c)| (basis.set(pos).to_vec(), c))
            .collect()
    }

    pub fn add(&self, other: &ExtClass) -> Result<ExtClass> {
        self.check_same_space(other)?;
        if self.degree != other.degree {
            return Err(Error::Precondition(format!(
                "cannot add classes of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let f = self.field();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(ExtClass { coords, ..self.clone() })
    }

    pub fn scale(&self, c: u32) -> ExtClass {
        let f = self.field();
        let c = c % f.p();
        ExtClass {
            coords: self.coords.iter().map(|&a| f.mul(a, c)).collect(),
            ..self.clone()
        }
    }

    fn check_same_space(&self, other: &ExtClass) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::FieldMismatch(self.modulus.ell(), other.modulus.ell()));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtClass(l={}, n={}, deg={}, {:?})",
            self.modulus.ell(),
            self.n,
            self.degree,
            self.coords
        )
    }
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(set, c)| {
                let mono = if set.is_empty() {
                    "1".to_string()
                } else {
                    set.iter().map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join("^")
                };
                if *c == 1 {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ExtClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExtClass", 4)?;
        st.serialize_field("l", &self.modulus.ell())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coords", &self.coords)?;
        st.end()
    }
}

/// Sign of merging two disjoint sorted index sets: `(-1)^{#{(s, t) : s > t}}`.
fn merge_sign(s: u32, t: u32) -> bool {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (s >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// Product in the exterior algebra. Degrees add; the result is zero once the
/// degree exceeds `n`.
pub fn wedge(a: &ExtClass, b: &ExtClass) -> Result<ExtClass> {
    a.check_same_space(b)?;
    let f = a.field();
    let n = a.n;
    let degree = a.degree + b.degree;
    let mut out = ExtClass::zero(a.modulus, n, degree);
    if degree > n {
        return Ok(out);
    }
    let ba = MonomialBasis::new(n, a.degree);
    let bb = MonomialBasis::new(n, b.degree);
    let bo = MonomialBasis::new(n, degree);
    for (i, &ca) in a.coords.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        let s = ba.mask(i);
        for (j, &cb) in b.coords.iter().enumerate() {
            let t = bb.mask(j);
            if cb == 0 || s & t != 0 {
                continue;
            }
            let mut c = f.mul(ca, cb);
            if merge_sign(s, t) {
                c = f.neg(c);
            }
            let pos = bo.position(s | t);
            out.coords[pos] = f.add(out.coords[pos], c);
        }
    }
    Ok(out)
}

/// `wedge^d(map^dual)(a)` for a linear map `map: F^k -> F^n` given as an
/// `n x k` matrix. The coefficient on `T` is `sum_S a_S det(map[S, T])`.
pub(crate) fn pull_along(map: &MatrixF, a: &ExtClass) -> ExtClass {
    assert_eq!(map.rows(), a.n, "map target must be the class's ambient space");
    let f = a.field();
    let k = map.cols();
    let d = a.degree;
    let mut out = ExtClass::zero(a.modulus, k, d);
    if d > k {
        return out;
    }
    let src = MonomialBasis::new(a.n, d);
    let dst = MonomialBasis::new(k, d);
    let mut minor = MatrixF::zeros(f, d, d);
    for (i, &ca) in a.coords.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        let rows = src.set(i);
        for t in 0..dst.len() {
            let cols = dst.set(t);
            for (p, &r) in rows.iter().enumerate() {
                for (q, &c) in cols.iter().enumerate() {
                    minor.set(p, q, map.get(r, c));
                }
            }
            let det = minor.determinant();
            out.coords[t] = f.add(out.coords[t], f.mul(ca, det));
        }
    }
    out
}

/// Restriction to a subgroup `sigma`, in the dual of the canonical basis of
/// `sigma`. The result lives on `F^{dim sigma}`.
pub fn restrict(a: &ExtClass, sigma: &Subspace) -> Result<ExtClass> {
    if sigma.ambient_dim() != a.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            found: sigma.ambient_dim(),
        });
    }
    if sigma.field() != a.field() {
        return Err(Error::FieldMismatch(sigma.field().p(), a.field().p()));
    }
    let inclusion = if sigma.is_zero() {
        MatrixF::zeros(a.field(), a.n, 0)
    } else {
        sigma.basis_matrix().transpose()
    };
    Ok(pull_along(&inclusion, a))
}

/// Pullback along a surjection `gamma: F^k -> F^n`, an `n x k` matrix.
pub fn pullback_class(gamma: &MatrixF, a: &ExtClass) -> Result<ExtClass> {
    require_surjection(gamma, a.n)?;
    if gamma.field() != a.field() {
        return Err(Error::FieldMismatch(gamma.field().p(), a.field().p()));
    }
    Ok(pull_along(gamma, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    fn x(n: usize, idx: &[usize]) -> ExtClass {
        ExtClass::monomial(m3(), n, idx)
    }

    /// `(a ^ b)(u, v) = a(u) b(v) - a(v) b(u)` for 1-forms.
    fn eval_wedge_of_linear(a: &[u32], b: &[u32], u: &[u32], v: &[u32]) -> u32 {
        let dot = |p: &[u32], q: &[u32]| p.iter().zip(q).map(|(x, y)| x * y).sum::<u32>();
        (3 * 100 + dot(a, u) * dot(b, v) - dot(a, v) * dot(b, u)) % 3
    }

    #[test]
    fn monomial_products() {
        assert_eq!(wedge(&x(2, &[0]), &x(2, &[1])).unwrap().coords(), &[1]);
        assert!(wedge(&x(2, &[0]), &x(2, &[0])).unwrap().is_zero());
        assert_eq!(x(3, &[1, 0]), x(3, &[0, 1]).scale(2));
    }

    #[test]
    fn bilinear_expansion() {
        let a = ExtClass::linear(m3(), &[1, 1]).unwrap();
        let b = ExtClass::linear(m3(), &[1, 2]).unwrap();
        let w = wedge(&a, &b).unwrap();
        let expected = eval_wedge_of_linear(&[1, 1], &[1, 2], &[1, 0], &[0, 1]);
        assert_eq!(w.coords(), &[expected]);
        assert_eq!(w, x(2, &[0, 1]));
    }

    #[test]
    fn graded_commutativity() {
        let a = x(4, &[0, 2]);
        let b = x(4, &[1]);
        let c = x(4, &[3]);
        assert_eq!(wedge(&a, &b).unwrap(), wedge(&b, &a).unwrap());
        assert_eq!(wedge(&b, &c).unwrap(), wedge(&c, &b).unwrap().scale(2));
        assert!(wedge(&wedge(&a, &a).unwrap(), &ExtClass::one(m3(), 4))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn restriction_examples() {
        let f = m3().field();
        let a = x(3, &[0, 1]);
        let s12 = Subspace::span(f, 3, [[1, 0, 0], [0, 1, 0]]);
        assert_eq!(restrict(&a, &s12).unwrap().coords(), &[1]);
        let s13 = Subspace::span(f, 3, [[1, 0, 0], [0, 0, 1]]);
        assert!(restrict(&a, &s13).unwrap().is_zero());

        // basis of the span below is not the one given, so compare values
        let u = [1, 1, 0];
        let v = [0, 1, 1];
        let s = Subspace::span(f, 3, [u, v]);
        let direct = eval_wedge_of_linear(&[1, 0, 0], &[0, 1, 0], &u, &v);
        assert_eq!(direct, 1);
        let res = restrict(&a, &s).unwrap();
        let b = s.basis_vecs();
        assert_eq!(
            res.coords(),
            &[eval_wedge_of_linear(&[1, 0, 0], &[0, 1, 0], &b[0], &b[1])]
        );
        assert!(!res.is_zero());
    }

    #[test]
    fn restriction_beyond_dimension_vanishes() {
        let f = m3().field();
        let line = Subspace::span(f, 3, [[1, 1, 1]]);
        let r = restrict(&x(3, &[0, 1]), &line).unwrap();
        assert_eq!(r.n(), 1);
        assert!(r.coords().is_empty());
    }

    #[test]
    fn pullback_examples() {
        let f = m3().field();
        let a = x(2, &[0, 1]);
        assert_eq!(pullback_class(&MatrixF::identity(f, 2), &a).unwrap(), a);
        let drop_e3 = MatrixF::from_rows(f, 3, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(pullback_class(&drop_e3, &a).unwrap(), x(3, &[0, 1]));
        assert!(pullback_class(&drop_e3, &ExtClass::zero(m3(), 2, 2)).unwrap().is_zero());
        let not_onto = MatrixF::from_rows(f, 3, &[[1, 0, 0], [1, 0, 0]]).unwrap();
        assert!(matches!(
            pullback_class(&not_onto, &a),
            Err(Error::NotSurjective { .. })
        ));
    }

    #[test]
    fn invalid_coordinates_rejected() {
        assert!(ExtClass::new(m3(), 3, 2, vec![0, 1]).is_err());
        assert!(ExtClass::new(m3(), 3, 2, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn display() {
        let a = x(3, &[0, 2]).add(&x(3, &[1, 2]).scale(2)).unwrap();
        assert_eq!(a.to_string(), "x1^x3 + 2*x2^x3");
    }
}
