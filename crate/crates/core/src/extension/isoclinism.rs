use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::orbit::{GeneratorKind, OrbitExplorer};
use super::{fan, radical, CommutatorForm, Fan};
use crate::fflinalg::{
    enumerate_subspaces, subspace_count, wedge_image, Caps, MatrixF, Modulus, Subspace, WedgeCoords,
};
use crate::{Error, Result};

/// Largest rank of `G^a` for which orbit questions are answered.
pub const ORBIT_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoclinismMode {
    /// `G^a` identified on both sides.
    Fixed,
    /// Up to a change of basis of `G^a`.
    GlOrbit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismResult {
    pub equivalent: bool,
    /// `g` with `wedge^2(g)(ker lambda_1) = ker lambda_2`, when equivalent.
    pub witness: Option<MatrixF>,
}

/// Orbit explorer for kernels in `wedge^2(F_l^n)` with the orbit bound taken
/// from `caps`.
pub fn kernel_orbits(modulus: Modulus, n: usize, kind: GeneratorKind, caps: &Caps) -> OrbitExplorer {
    let bound = usize::try_from(caps.max_count).unwrap_or(usize::MAX);
    OrbitExplorer::new(modulus.field(), n, kind, bound)
}

fn invariant_profile(form: &CommutatorForm, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    let complete = fan(form, true, caps)?;
    Ok((radical(form).dim(), complete.size_profile(form.n())))
}

/// Isoclinism with `G^a` fixed is equality of kernels: forms that differ by
/// the image of `delta(H^1)` have identical commutators. In orbit mode a
/// basis change carrying one kernel to the other is searched for, after
/// comparing radical dimension and liftable-subgroup counts.
pub fn isoclinic_eq(
    f1: &CommutatorForm,
    f2: &CommutatorForm,
    mode: IsoclinismMode,
    caps: &Caps,
) -> Result<IsoclinismResult> {
    if f1.modulus() != f2.modulus() || f1.n() != f2.n() {
        return Err(Error::Precondition(format!(
            "forms live on different groups: (l={}, n={}) vs (l={}, n={})",
            f1.modulus().ell(),
            f1.n(),
            f2.modulus().ell(),
            f2.n()
        )));
    }
    let field = f1.field();
    match mode {
        IsoclinismMode::Fixed => {
            if f1.r() != f2.r() {
                return Err(Error::Precondition(format!(
                    "fixed-mode comparison needs equal r, found {} and {}",
                    f1.r(),
                    f2.r()
                )));
            }
            let equivalent = f1.kernel() == f2.kernel();
            Ok(IsoclinismResult {
                equivalent,
                witness: equivalent.then(|| MatrixF::identity(field, f1.n())),
            })
        }
        IsoclinismMode::GlOrbit => {
            let n = f1.n();
            if n > ORBIT_MAX_N {
                return Err(Error::CapExceeded(format!(
                    "orbit search supports n <= {ORBIT_MAX_N}, got {n}"
                )));
            }
            let none = IsoclinismResult {
                equivalent: false,
                witness: None,
            };
            if f1.kernel().dim() != f2.kernel().dim() {
                return Ok(none);
            }
            if invariant_profile(f1, caps)? != invariant_profile(f2, caps)? {
                return Ok(none);
            }
            let m = WedgeCoords::new(n).dim();
            if subspace_count(m, field.p(), Some(f1.kernel().dim())) > caps.max_count {
                return Err(Error::CapExceeded(format!(
                    "kernel orbits of dimension {} in F_{}^{m} exceed cap",
                    f1.kernel().dim(),
                    field.p()
                )));
            }
            let ex = kernel_orbits(f1.modulus(), n, GeneratorKind::Full, caps);
            let witness = ex.find(f1.kernel(), f2.kernel())?;
            Ok(IsoclinismResult {
                equivalent: witness.is_some(),
                witness,
            })
        }
    }
}

/// Kernels realizing a prescribed fan, grouped into `GL`-orbits.
#[derive(Clone, Debug, Serialize)]
pub struct FanDetermination {
    pub candidates: Vec<Subspace>,
    /// Canonical (lex-least) orbit representative of each candidate class.
    pub orbit_representatives: Vec<Subspace>,
    pub single_orbit: bool,
}

/// All kernels `K ⊆ wedge^2(F_l^n)` whose form has exactly the noncyclic
/// members of `sigma` as its fan: `wedge^2(s) ⊆ K` for every member `s`, and
/// no other noncyclic subspace is liftable.
pub fn fan_determines(sigma: &Fan, modulus: Modulus, n: usize, caps: &Caps) -> Result<FanDetermination> {
    if n > ORBIT_MAX_N {
        return Err(Error::CapExceeded(format!(
            "fan determination supports n <= {ORBIT_MAX_N}, got {n}"
        )));
    }
    let field = modulus.field();
    let m = WedgeCoords::new(n).dim();
    let members: BTreeSet<Subspace> = sigma.noncyclic().cloned().collect();
    for s in &members {
        if s.ambient_dim() != n || s.field() != field {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.ambient_dim(),
            });
        }
    }
    let required = Subspace::span(
        field,
        m,
        members
            .iter()
            .flat_map(|s| wedge_image(s).basis_vecs())
            .collect::<Vec<_>>(),
    );
    let forbidden: Vec<Subspace> = enumerate_subspaces(field, n, None, caps)?
        .filter(|t| !t.is_cyclic() && !members.contains(t))
        .map(|t| wedge_image(&t))
        .collect();

    // kernels containing `required` <-> subspaces of a complement
    let complement = required.complement_basis();
    let c = complement.len();
    let mut candidates = Vec::new();
    for u in enumerate_subspaces(field, c, None, &caps.with_ambient(c))? {
        let lifted = u.basis().map(|coeffs| {
            let mut v = vec![0u32; m];
            for (&a, e) in coeffs.iter().zip(&complement) {
                for (x, &y) in v.iter_mut().zip(e) {
                    *x = field.add(*x, field.mul(a, y));
                }
            }
            v
        });
        let k = Subspace::span(field, m, lifted).sum(&required);
        if forbidden.iter().all(|w| !k.contains(w)) {
            candidates.push(k);
        }
    }
    candidates.sort();

    let ex = kernel_orbits(modulus, n, GeneratorKind::Full, &caps.with_ambient(m));
    let mut canon: HashMap<Subspace, Subspace> = HashMap::new();
    let mut reps = BTreeSet::new();
    for k in &candidates {
        if let Some(rep) = canon.get(k) {
            reps.insert(rep.clone());
            continue;
        }
        let orbit = ex.orbit(k)?;
        let rep = orbit.iter().min().cloned().expect("nonempty orbit");
        for member in orbit {
            canon.insert(member, rep.clone());
        }
        reps.insert(rep);
    }
    let orbit_representatives: Vec<Subspace> = reps.into_iter().collect();
    Ok(FanDetermination {
        single_orbit: orbit_representatives.len() == 1,
        candidates,
        orbit_representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn rescaled_rows_are_isoclinic() {
        let f = CommutatorForm::from_rows(m3(), 3, &[[1, 2, 0]]).unwrap();
        let g = CommutatorForm::from_rows(m3(), 3, &[[2, 1, 0]]).unwrap();
        let res = isoclinic_eq(&f, &g, IsoclinismMode::Fixed, &Caps::default()).unwrap();
        assert!(res.equivalent);
    }

    #[test]
    fn heisenberg_is_not_abelian() {
        let h = CommutatorForm::heisenberg(m3());
        let z = CommutatorForm::zero(m3(), 2);
        let res = isoclinic_eq(&h, &z, IsoclinismMode::GlOrbit, &Caps::default()).unwrap();
        assert!(!res.equivalent);
        assert!(isoclinic_eq(&h, &z, IsoclinismMode::Fixed, &Caps::default()).is_err());
    }

    #[test]
    fn swapping_basis_vectors() {
        let a = CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap();
        let b = CommutatorForm::from_rows(m3(), 3, &[[0, 1, 0]]).unwrap();
        let fixed = isoclinic_eq(&a, &b, IsoclinismMode::Fixed, &Caps::default()).unwrap();
        assert!(!fixed.equivalent);
        let res = isoclinic_eq(&a, &b, IsoclinismMode::GlOrbit, &Caps::default()).unwrap();
        assert!(res.equivalent);
        let g = res.witness.unwrap();
        assert_eq!(&OrbitExplorer::act(&g, a.kernel()), b.kernel());

        let swap = MatrixF::from_rows(m3().field(), 3, &[[1, 0, 0], [0, 0, 1], [0, 1, 0]]).unwrap();
        assert_eq!(&OrbitExplorer::act(&swap, a.kernel()), b.kernel());
    }

    #[test]
    fn orbit_mode_caps_rank() {
        let z = CommutatorForm::zero(m3(), 5);
        assert!(matches!(
            isoclinic_eq(&z, &z, IsoclinismMode::GlOrbit, &Caps::default()),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn empty_fan_on_plane_is_heisenberg() {
        let empty = Fan {
            complete: false,
            sigmas: vec![],
        };
        let det = fan_determines(&empty, m3(), 2, &Caps::default()).unwrap();
        assert_eq!(det.candidates, vec![Subspace::zero(m3().field(), 1)]);
        assert!(det.single_orbit);
    }

    #[test]
    fn full_fan_on_plane_is_abelian() {
        let full = Fan {
            complete: false,
            sigmas: vec![Subspace::full(m3().field(), 2)],
        };
        let det = fan_determines(&full, m3(), 2, &Caps::default()).unwrap();
        assert_eq!(det.candidates, vec![Subspace::full(m3().field(), 1)]);
    }

    #[test]
    fn fan_of_a_form_is_among_its_candidates() {
        let f = CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap();
        let sigma = fan(&f, false, &Caps::default()).unwrap();
        let det = fan_determines(&sigma, m3(), 3, &Caps::default()).unwrap();
        assert!(det.candidates.contains(f.kernel()));
        for k in &det.candidates {
            let g = CommutatorForm::from_kernel(m3(), 3, k).unwrap();
            assert_eq!(fan(&g, false, &Caps::default()).unwrap(), sigma);
        }
    }
}
