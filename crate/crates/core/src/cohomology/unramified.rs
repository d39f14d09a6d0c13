use serde::Serialize;

use super::class::{pull_along, ExtClass, MonomialBasis};
use crate::extension::{fan, CommutatorForm, DeltaPair, Fan};
use crate::fflinalg::{wedge_image, Caps, MatrixF, PrimeField, Subspace, WedgeCoords};
use crate::{Error, Result};

/// Degree-2 classes bounded between the relations `chi ∘ lambda` and the
/// classes vanishing on the fan: `r2_min ⊆ R^2 ⊆ r2_sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnramifiedReport {
    pub r2_sigma: Subspace,
    pub r2_min: Subspace,
    /// `dim r2_sigma - dim r2_min`.
    pub quotient_dim: usize,
    /// Classes of `r2_sigma` completing a basis of `r2_min` to one of `r2_sigma`.
    pub quotient_basis: Vec<ExtClass>,
}

/// 2-forms vanishing on `wedge^2(sigma)` for every member of `sigma_fan`.
pub fn r2_sigma_of_fan(n: usize, sigma_fan: &Fan, field: PrimeField) -> Subspace {
    let m = WedgeCoords::new(n).dim();
    let constraints = Subspace::span(
        field,
        m,
        sigma_fan
            .iter()
            .flat_map(|s| wedge_image(s).basis_vecs())
            .collect::<Vec<_>>(),
    );
    constraints.annihilator()
}

/// `R^2(Sigma)`: the annihilator of all `wedge^2(sigma)`, `sigma` in the fan.
pub fn r2_sigma(form: &CommutatorForm, caps: &Caps) -> Result<Subspace> {
    let sigma = fan(form, false, caps)?;
    Ok(r2_sigma_of_fan(form.n(), &sigma, form.field()))
}

/// The relations `chi ∘ lambda`, i.e. the row space of `lambda` as 2-forms.
pub fn r2_min(form: &CommutatorForm) -> Subspace {
    let m = WedgeCoords::new(form.n()).dim();
    if form.r() == 0 {
        return Subspace::zero(form.field(), m);
    }
    Subspace::row_space(form.lambda())
}

pub fn unramified_quotient(form: &CommutatorForm, caps: &Caps) -> Result<UnramifiedReport> {
    let upper = r2_sigma(form, caps)?;
    let lower = r2_min(form);
    debug_assert!(upper.contains(&lower));
    let mut acc = lower.clone();
    let mut quotient_basis = Vec::new();
    for v in upper.basis() {
        if acc.contains_vector(v) {
            continue;
        }
        acc = acc.sum(&Subspace::span(form.field(), v.len(), [v]));
        quotient_basis.push(ExtClass::two_form(form.modulus(), form.n(), v)?);
    }
    Ok(UnramifiedReport {
        quotient_dim: upper.dim() - lower.dim(),
        r2_sigma: upper,
        r2_min: lower,
        quotient_basis,
    })
}

/// Basis of `D` (as columns of an `n x dim D` matrix) with a complement of
/// `I` first and a basis of `I` last, together with the complement size.
fn adapted_basis(i: &Subspace, d: &Subspace) -> (MatrixF, usize) {
    let f = d.field();
    let k = d.dim();
    let i_coords = Subspace::span(
        f,
        k,
        i.basis()
            .map(|v| d.coordinates(v).expect("I inside D"))
            .collect::<Vec<_>>(),
    );
    let mut coords = i_coords.complement_basis();
    let c = coords.len();
    coords.extend(i_coords.basis_vecs());
    let n = d.ambient_dim();
    let mut m = MatrixF::zeros(f, n, k);
    for (col, cv) in coords.iter().enumerate() {
        for (coef, row) in cv.iter().zip(d.basis()) {
            for (r, &x) in row.iter().enumerate() {
                let v = f.add(m.get(r, col), f.mul(*coef, x));
                m.set(r, col, v);
            }
        }
    }
    (m, c)
}

/// Whether the restriction of `a` to `D` is pulled back from `D / I`: in a
/// basis of `D` whose last vectors span `I`, no monomial of the restriction
/// involves a dual coordinate of `I`.
pub fn is_unramified_on_pair(a: &ExtClass, pair: &DeltaPair) -> Result<bool> {
    if a.degree() == 0 {
        return Err(Error::Precondition("unramifiedness is tested in degree >= 1".into()));
    }
    for s in [&pair.i, &pair.d] {
        if s.ambient_dim() != a.n() {
            return Err(Error::DimensionMismatch {
                expected: a.n(),
                found: s.ambient_dim(),
            });
        }
        if s.field() != a.field() {
            return Err(Error::FieldMismatch(s.field().p(), a.field().p()));
        }
    }
    if !pair.d.contains(&pair.i) {
        return Err(Error::NotNested);
    }
    let (basis, c) = adapted_basis(&pair.i, &pair.d);
    let restricted = pull_along(&basis, a);
    let allowed = if c >= 32 { u32::MAX } else { (1u32 << c) - 1 };
    let monomials = MonomialBasis::new(pair.d.dim(), a.degree());
    Ok(restricted
        .coords()
        .iter()
        .enumerate()
        .all(|(pos, &coef)| coef == 0 || monomials.mask(pos) & !allowed == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::Modulus;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    fn e12_form() -> CommutatorForm {
        CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap()
    }

    #[test]
    fn r2_sigma_examples() {
        let caps = Caps::default();
        let h = CommutatorForm::heisenberg(m3());
        assert!(r2_sigma(&h, &caps).unwrap().is_full());
        let z = CommutatorForm::zero(m3(), 2);
        assert!(r2_sigma(&z, &caps).unwrap().is_zero());
        let r = r2_sigma(&e12_form(), &caps).unwrap();
        assert_eq!(r, Subspace::span(m3().field(), 3, [[1, 0, 0]]));
    }

    #[test]
    fn quotient_examples() {
        let caps = Caps::default();
        let rep = unramified_quotient(&CommutatorForm::heisenberg(m3()), &caps).unwrap();
        assert_eq!((rep.r2_sigma.dim(), rep.r2_min.dim(), rep.quotient_dim), (1, 1, 0));
        let rep = unramified_quotient(&e12_form(), &caps).unwrap();
        assert_eq!(rep.quotient_dim, 0);
        assert_eq!(rep.r2_sigma, rep.r2_min);
        assert!(rep.quotient_basis.is_empty());
    }

    #[test]
    fn pair_examples() {
        let f = m3().field();
        let pair = DeltaPair {
            i: Subspace::span(f, 3, [[0, 0, 1]]),
            d: Subspace::full(f, 3),
        };
        let x12 = ExtClass::monomial(m3(), 3, &[0, 1]);
        let x13 = ExtClass::monomial(m3(), 3, &[0, 2]);
        assert!(is_unramified_on_pair(&x12, &pair).unwrap());
        assert!(!is_unramified_on_pair(&x13, &pair).unwrap());

        let trivial = DeltaPair {
            i: Subspace::zero(f, 3),
            d: Subspace::full(f, 3),
        };
        assert!(is_unramified_on_pair(&x13, &trivial).unwrap());
    }

    #[test]
    fn non_nested_pair_is_an_error() {
        let f = m3().field();
        let pair = DeltaPair {
            i: Subspace::span(f, 3, [[0, 0, 1]]),
            d: Subspace::span(f, 3, [[1, 0, 0], [0, 1, 0]]),
        };
        let a = ExtClass::monomial(m3(), 3, &[0, 1]);
        assert_eq!(is_unramified_on_pair(&a, &pair), Err(Error::NotNested));
    }

    #[test]
    fn skew_inertia_uses_adapted_basis() {
        // I = <e1 + e2> inside D = <e1, e2>; x1 ^ x2 restricted to D is the
        // top form, which always involves the dual coordinate of I
        let f = m3().field();
        let pair = DeltaPair {
            i: Subspace::span(f, 3, [[1, 1, 0]]),
            d: Subspace::span(f, 3, [[1, 0, 0], [0, 1, 0]]),
        };
        assert!(!is_unramified_on_pair(&ExtClass::monomial(m3(), 3, &[0, 1]), &pair).unwrap());
        // x1 - x2 kills e1 + e2, so it descends to D / I
        let lin = ExtClass::linear(m3(), &[1, 2, 0]).unwrap();
        assert!(is_unramified_on_pair(&lin, &pair).unwrap());
        let x1 = ExtClass::linear(m3(), &[1, 0, 0]).unwrap();
        assert!(!is_unramified_on_pair(&x1, &pair).unwrap());
    }
}
