use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::locus::{eigenspaces, fixed_locus, h_sigma, FixedLocus};
use super::rep::{induced_reps, is_scalar, MonomialRep};
use crate::extension::CommutatorForm;
use crate::fflinalg::{enumerate_subspaces, unit_vector, Caps, Subspace};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub holds: bool,
    /// Number of instances examined.
    pub checked: usize,
    /// First failing instance, if any.
    pub failure: Option<String>,
}

impl ClaimOutcome {
    fn new() -> Self {
        ClaimOutcome {
            holds: true,
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.holds {
            self.holds = false;
            self.failure = Some(what());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedLocusRow {
    pub sigma: Subspace,
    pub liftable: bool,
    pub nonempty: bool,
    pub components: usize,
}

/// Checks of the `G^a`-action on `P = prod_j P(V_j)`:
/// 1. no nonzero `a` acts by scalars on every factor;
/// 2. `P^sigma` is nonempty exactly for liftable `sigma`;
/// 3. distinct components of `P^sigma` are disjoint;
/// 4. `H_sigma` fixes every component and `G^a / image(H_sigma)` permutes
///    the components freely;
/// 5. every point fixed by a nonzero `a` lies in `P^<a>`, and `<a>` is
///    liftable, so the action off the union of the `P^sigma` is free.
#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    pub q: u32,
    pub zeta: u32,
    pub factor_dim: usize,
    pub factors: usize,
    pub faithful: ClaimOutcome,
    pub fixed_iff_liftable: ClaimOutcome,
    pub table: Vec<FixedLocusRow>,
    pub components_disjoint: ClaimOutcome,
    pub free_on_components: ClaimOutcome,
    pub free_off_fixed_loci: ClaimOutcome,
}

impl ActionReport {
    pub fn claims(&self) -> [(&'static str, &ClaimOutcome); 5] {
        [
            ("faithful action", &self.faithful),
            ("fixed locus nonempty iff liftable", &self.fixed_iff_liftable),
            ("components disjoint", &self.components_disjoint),
            ("free action on components", &self.free_on_components),
            ("free off the fixed loci", &self.free_off_fixed_loci),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.claims().iter().all(|(_, c)| c.holds)
    }
}

fn check_disjoint(locus: &FixedLocus, outcome: &mut ClaimOutcome) {
    // per factor, which eigenspace pairs meet only in 0
    let apart: Vec<Vec<Vec<bool>>> = locus
        .factors
        .iter()
        .map(|fl| {
            let es = &fl.eigenspaces;
            es.iter()
                .map(|x| es.iter().map(|y| x.space.intersection(&y.space).is_zero()).collect())
                .collect()
        })
        .collect();
    let comps = &locus.components;
    for (i, ci) in comps.iter().enumerate() {
        for cj in &comps[i + 1..] {
            let ok = ci.iter().zip(cj).enumerate().any(|(j, (&x, &y))| apart[j][x][y]);
            outcome.record(ok, || format!("components {ci:?} and {cj:?} of P^{} meet", locus.sigma));
        }
    }
}

/// Permutation of the components of `P^sigma` induced by `(e_i, 0)`, or
/// `None` if some component is not carried onto a component.
fn generator_permutation(locus: &FixedLocus, reps: &[MonomialRep], i: usize, n: usize) -> Option<Vec<usize>> {
    let per_factor: Vec<Vec<usize>> = locus
        .factors
        .iter()
        .zip(reps)
        .map(|(fl, rep)| {
            let m = rep.lift_matrix(&unit_vector(n, i));
            let lookup: HashMap<&Subspace, usize> =
                fl.eigenspaces.iter().enumerate().map(|(k, e)| (&e.space, k)).collect();
            fl.eigenspaces
                .iter()
                .map(|e| lookup.get(&e.space.image(&m)).copied())
                .collect::<Option<Vec<usize>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let index: HashMap<&Vec<usize>, usize> = locus.components.iter().enumerate().map(|(k, c)| (c, k)).collect();
    locus
        .components
        .iter()
        .map(|c| {
            let image: Vec<usize> = c.iter().enumerate().map(|(j, &e)| per_factor[j][e]).collect();
            index.get(&image).copied()
        })
        .collect()
}

fn check_free(
    form: &CommutatorForm,
    locus: &FixedLocus,
    reps: &[MonomialRep],
    outcome: &mut ClaimOutcome,
) -> Result<()> {
    let n = form.n();
    let ell = form.modulus().ell() as usize;
    let h = h_sigma(&locus.sigma, form)?;
    let sigma = &locus.sigma;

    // H_sigma stabilizes every component
    for v in h.image.basis() {
        let stable = locus.factors.iter().zip(reps).all(|(fl, rep)| {
            let m = rep.lift_matrix(v);
            fl.eigenspaces.iter().all(|e| e.space.image(&m) == e.space)
        });
        outcome.record(stable, || {
            format!("H_sigma element {v:?} moves a component of P^{sigma}")
        });
    }

    // every orbit of G^a has size [G^a : image(H_sigma)]
    let mut perms = Vec::with_capacity(n);
    for i in 0..n {
        match generator_permutation(locus, reps, i, n) {
            Some(p) => perms.push(p),
            None => {
                outcome.record(false, || {
                    format!("e_{} does not permute the components of P^{sigma}", i + 1)
                });
                return Ok(());
            }
        }
    }
    let expected = ell.pow((n - h.image.dim()) as u32);
    let mut seen = vec![false; locus.components.len()];
    for start in 0..locus.components.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(c) = queue.pop_front() {
            size += 1;
            for p in &perms {
                if !seen[p[c]] {
                    seen[p[c]] = true;
                    queue.push_back(p[c]);
                }
            }
        }
        outcome.record(size == expected, || {
            format!("orbit of size {size} on components of P^{sigma}, expected {expected}")
        });
    }
    Ok(())
}

/// Runs the five checks for the form's induced representations over `F_q`.
pub fn verify_action_claims(form: &CommutatorForm, q: Option<u32>, caps: &Caps) -> Result<ActionReport> {
    let reps = induced_reps(form, q)?;
    let n = form.n();
    let field = form.field();
    let all: Vec<Subspace> = enumerate_subspaces(field, n, None, caps)?.collect();

    let mut faithful = ClaimOutcome::new();
    let mut free_off = ClaimOutcome::new();
    for a in Subspace::full(field, n).vectors().into_iter().skip(1) {
        let scalar_everywhere = reps.iter().all(|rep| is_scalar(&rep.lift_matrix(&a)));
        faithful.record(!scalar_everywhere, || format!("{a:?} acts by scalars on every factor"));

        let line = Subspace::span(field, n, [&a]);
        let line_locus = fixed_locus(&line, &reps)?;
        let liftable = form.is_liftable(&line)?;
        let contained = reps.iter().zip(&line_locus.factors).all(|(rep, fl)| {
            eigenspaces(&rep.lift_matrix(&a))
                .iter()
                .all(|(_, e)| fl.eigenspaces.iter().any(|c| c.space.contains(e)))
        });
        free_off.record(liftable && contained, || {
            format!("fixed points of {a:?} are not covered by P^<a> with <a> liftable")
        });
    }

    let mut iff = ClaimOutcome::new();
    let mut disjoint = ClaimOutcome::new();
    let mut free = ClaimOutcome::new();
    let mut table = Vec::with_capacity(all.len());
    for sigma in &all {
        let locus = fixed_locus(sigma, &reps)?;
        let liftable = form.is_liftable(sigma)?;
        iff.record(liftable == !locus.is_empty(), || {
            format!(
                "sigma = {sigma}: liftable {liftable}, fixed locus nonempty {}",
                !locus.is_empty()
            )
        });
        if !locus.is_empty() {
            check_disjoint(&locus, &mut disjoint);
            if liftable {
                check_free(form, &locus, &reps, &mut free)?;
            }
        }
        table.push(FixedLocusRow {
            sigma: sigma.clone(),
            liftable,
            nonempty: !locus.is_empty(),
            components: locus.components.len(),
        });
    }

    let first = &reps[0];
    Ok(ActionReport {
        q: first.q(),
        zeta: first.zeta(),
        factor_dim: first.dim(),
        factors: reps.len(),
        faithful,
        fixed_iff_liftable: iff,
        table,
        components_disjoint: disjoint,
        free_on_components: free,
        free_off_fixed_loci: free_off,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::Modulus;

    #[test]
    fn heisenberg_over_f7() {
        let h = CommutatorForm::heisenberg(Modulus::new(3).unwrap());
        let rep = verify_action_claims(&h, Some(7), &Caps::default()).unwrap();
        assert!(rep.all_hold(), "{rep:#?}");
        assert_eq!(rep.table.len(), 6);
        assert_eq!(rep.factor_dim, 9);
        assert!(rep.table.iter().all(|row| row.liftable == row.nonempty));
    }

    #[test]
    fn heisenberg_over_f11_for_l5() {
        let h = CommutatorForm::heisenberg(Modulus::new(5).unwrap());
        let rep = verify_action_claims(&h, None, &Caps::default()).unwrap();
        assert_eq!((rep.q, rep.factor_dim), (11, 25));
        assert!(rep.all_hold(), "{rep:#?}");
    }

    #[test]
    fn zero_form_is_rejected() {
        let z = CommutatorForm::zero(Modulus::new(3).unwrap(), 2);
        assert!(verify_action_claims(&z, None, &Caps::default()).is_err());
    }
}
