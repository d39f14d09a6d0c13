use super::class::{wedge, ExtClass, MonomialBasis};
use crate::fflinalg::{Caps, Modulus, Subspace};
use crate::{Error, Result};

/// Dimensions of the graded pieces `0..=n` of `wedge^*(F_l^n) / (generators)`.
///
/// The ideal is two-sided, but degree-2 generators are central in the
/// exterior algebra, so its degree-`d` piece is spanned by `g ^ m` with `m`
/// running over monomials of degree `d - 2`.
pub fn ideal_quotient_dims(generators: &[ExtClass], modulus: Modulus, n: usize, caps: &Caps) -> Result<Vec<usize>> {
    if n > caps.max_n {
        return Err(Error::CapExceeded(format!(
            "exterior algebra on {n} generators exceeds max_n = {}",
            caps.max_n
        )));
    }
    for g in generators {
        if g.degree() != 2 {
            return Err(Error::Precondition(format!(
                "ideal generators must have degree 2, found {}",
                g.degree()
            )));
        }
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.n(),
            });
        }
        if g.modulus() != modulus {
            return Err(Error::FieldMismatch(g.modulus().ell(), modulus.ell()));
        }
    }
    let field = modulus.field();
    let mut dims = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let full = MonomialBasis::new(n, d).len();
        if d < 2 || generators.is_empty() {
            dims.push(full);
            continue;
        }
        let multipliers = MonomialBasis::new(n, d - 2);
        let mut spanning = Vec::new();
        for g in generators {
            for pos in 0..multipliers.len() {
                let m = ExtClass::monomial(modulus, n, multipliers.set(pos));
                spanning.push(wedge(g, &m)?.coords().to_vec());
            }
        }
        let piece = Subspace::span(field, full, spanning);
        dims.push(full - piece.dim());
    }
    Ok(dims)
}
