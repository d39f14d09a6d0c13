use serde::Serialize;

use super::rep::MonomialRep;
use crate::extension::{d_max, CommutatorForm};
use crate::fflinalg::{MatrixF, PrimeField, Subspace};
use crate::{Error, Result};

/// Largest number of components [`fixed_locus`] assembles.
pub const MAX_COMPONENTS: usize = 1_000_000;

/// A common eigenspace of the basis lifts of `sigma` in one factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenspace {
    /// Eigenvalue of each basis lift, in `F_q`.
    pub eigenvalues: Vec<u32>,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorLocus {
    pub character_index: usize,
    pub eigenspaces: Vec<Eigenspace>,
}

/// Fixed points of `sigma` on `P = prod_j P(V_j)`. A component picks one
/// common eigenspace in every factor; the locus is empty when some factor
/// has none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedLocus {
    pub sigma: Subspace,
    pub factors: Vec<FactorLocus>,
    /// Index into each factor's `eigenspaces`, one entry per factor.
    pub components: Vec<Vec<usize>>,
}

impl FixedLocus {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Projective dimension of each factor of a component.
    pub fn component_dims(&self, component: &[usize]) -> Vec<usize> {
        component
            .iter()
            .zip(&self.factors)
            .map(|(&e, fl)| fl.eigenspaces[e].space.dim() - 1)
            .collect()
    }
}

/// Nonzero eigenspaces `ker(m - mu)` for every `mu` in `F_q^x`.
pub(crate) fn eigenspaces(m: &MatrixF) -> Vec<(u32, Subspace)> {
    let f = m.field();
    let dim = m.rows();
    (1..f.p())
        .filter_map(|mu| {
            let mut shifted = m.clone();
            for i in 0..dim {
                shifted.set(i, i, f.sub(m.get(i, i), mu));
            }
            let k = shifted.kernel();
            (!k.is_zero()).then_some((mu, k))
        })
        .collect()
}

fn common_eigenspaces(field: PrimeField, dim: usize, mats: &[MatrixF]) -> Vec<Eigenspace> {
    let mut current = vec![Eigenspace {
        eigenvalues: Vec::new(),
        space: Subspace::full(field, dim),
    }];
    for m in mats {
        let eig = eigenspaces(m);
        let mut next = Vec::new();
        for e in &current {
            for (mu, k) in &eig {
                let meet = e.space.intersection(k);
                if !meet.is_zero() {
                    let mut eigenvalues = e.eigenvalues.clone();
                    eigenvalues.push(*mu);
                    next.push(Eigenspace {
                        eigenvalues,
                        space: meet,
                    });
                }
            }
        }
        current = next;
    }
    current
}

/// Simultaneous eigenspaces of lifts of a basis of `sigma`, factor by factor,
/// assembled into components. Nothing here uses the commutator form, so an
/// empty answer for a non-liftable `sigma` is a computed fact.
pub fn fixed_locus(sigma: &Subspace, reps: &[MonomialRep]) -> Result<FixedLocus> {
    let Some(first) = reps.first() else {
        return Err(Error::Precondition("no representation factors".into()));
    };
    let c = first.cocycle();
    if sigma.ambient_dim() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: c.n(),
            found: sigma.ambient_dim(),
        });
    }
    let factors: Vec<FactorLocus> = reps
        .iter()
        .map(|rep| {
            let lifts: Vec<MatrixF> = sigma.basis().map(|v| rep.lift_matrix(v)).collect();
            FactorLocus {
                character_index: rep.character_index(),
                eigenspaces: common_eigenspaces(rep.field(), rep.dim(), &lifts),
            }
        })
        .collect();
    let total = factors
        .iter()
        .try_fold(1usize, |acc, fl| acc.checked_mul(fl.eigenspaces.len()))
        .unwrap_or(usize::MAX);
    if total > MAX_COMPONENTS {
        return Err(Error::CapExceeded(format!(
            "{total} fixed components exceed {MAX_COMPONENTS}"
        )));
    }
    let mut components = Vec::with_capacity(total);
    if total > 0 {
        let mut choice = vec![0usize; factors.len()];
        loop {
            components.push(choice.clone());
            let Some(pos) = (0..factors.len())
                .rev()
                .find(|&p| choice[p] + 1 < factors[p].eigenspaces.len())
            else {
                break;
            };
            choice[pos] += 1;
            for c in choice.iter_mut().skip(pos + 1) {
                *c = 0;
            }
        }
    }
    Ok(FixedLocus {
        sigma: sigma.clone(),
        factors,
        components,
    })
}

/// `H_sigma`, the largest subgroup of `G^c` commuting with the preimage of
/// `sigma`: the full preimage of `d_max(sigma)`, always containing `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HSigma {
    /// Image in `G^a`.
    pub image: Subspace,
    /// `log_l |H_sigma| = r + dim image`.
    pub log_order: usize,
}

pub fn h_sigma(sigma: &Subspace, form: &CommutatorForm) -> Result<HSigma> {
    let image = d_max(sigma, form)?;
    Ok(HSigma {
        log_order: form.r() + image.dim(),
        image,
    })
}
