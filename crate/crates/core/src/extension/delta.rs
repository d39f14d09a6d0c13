use serde::Serialize;

use super::CommutatorForm;
use crate::fflinalg::{enumerate_subspaces, wedge_square, Caps, MatrixF, Subspace};
use crate::{Error, Result};

/// Nested subgroups `I ⊆ D ⊆ G^a` with `D` noncyclic and
/// `lambda(I ^ D) = 0`, i.e. `<I, delta>` is liftable for every `delta` in `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeltaPair {
    #[serde(rename = "I")]
    pub i: Subspace,
    #[serde(rename = "D")]
    pub d: Subspace,
}

/// Whether all commutators `[x, d]` with `x` in `xs`, `d` in `ds` vanish.
fn brackets_vanish(form: &CommutatorForm, xs: &Subspace, ds: &Subspace) -> bool {
    xs.basis()
        .all(|x| ds.basis().all(|d| form.value(x, d).iter().all(|&v| v == 0)))
}

impl DeltaPair {
    /// Checks the delta-pair conditions for `(i, d)` under `form`.
    pub fn check(form: &CommutatorForm, i: &Subspace, d: &Subspace) -> Result<bool> {
        form.check_subspace(i)?;
        form.check_subspace(d)?;
        Ok(d.contains(i) && !d.is_cyclic() && brackets_vanish(form, i, d))
    }

    pub fn new(form: &CommutatorForm, i: Subspace, d: Subspace) -> Result<Self> {
        if !DeltaPair::check(form, &i, &d)? {
            return Err(Error::Precondition(format!("({i}, {d}) is not a delta-pair")));
        }
        Ok(DeltaPair { i, d })
    }
}

/// The largest `D` with `lambda(I ^ D) = 0`. Every delta-pair with first
/// entry `I` has its `D` inside this one.
pub fn d_max(i: &Subspace, form: &CommutatorForm) -> Result<Subspace> {
    if !form.is_liftable(i)? {
        return Err(Error::NotLiftable);
    }
    Ok(form.commutant(&i.basis_vecs()))
}

/// Maximal delta-pairs `(I, d_max(I))`, ordered by `I`. `I = 0` is skipped
/// unless `include_trivial_i` is set.
pub fn delta_pairs(form: &CommutatorForm, include_trivial_i: bool, caps: &Caps) -> Result<Vec<DeltaPair>> {
    let mut out = Vec::new();
    for i in enumerate_subspaces(form.field(), form.n(), None, caps)? {
        if i.is_zero() && !include_trivial_i {
            continue;
        }
        if !form.is_liftable(&i)? {
            continue;
        }
        let d = form.commutant(&i.basis_vecs());
        if !d.is_cyclic() {
            out.push(DeltaPair { i, d });
        }
    }
    Ok(out)
}

fn check_surjection(gamma: &MatrixF, target_n: usize) -> Result<()> {
    if gamma.rows() != target_n {
        return Err(Error::DimensionMismatch {
            expected: target_n,
            found: gamma.rows(),
        });
    }
    let rank = gamma.rank();
    if rank != target_n {
        return Err(Error::NotSurjective { rank, target: target_n });
    }
    Ok(())
}

/// Transports a form along a surjection `gamma: F^k -> F^n` (an `n x k`
/// matrix): `lambda~ = lambda ∘ wedge^2(gamma)`, with `Z` renormalized to the
/// image so the result is again surjective.
pub fn pullback_form(gamma: &MatrixF, form: &CommutatorForm) -> Result<CommutatorForm> {
    check_surjection(gamma, form.n())?;
    if gamma.field() != form.field() {
        return Err(Error::FieldMismatch(gamma.field().p(), form.field().p()));
    }
    let composed = form.lambda().mul(&wedge_square(gamma))?;
    let rows = Subspace::row_space(&composed).basis_matrix();
    CommutatorForm::new(form.modulus(), gamma.cols(), rows)
}

/// Whether `gamma` carries `up` onto `down`: `gamma(I~) = I` and `gamma(D~) = D`.
pub fn delta_pair_surjects(gamma: &MatrixF, up: &DeltaPair, down: &DeltaPair) -> bool {
    up.i.image(gamma) == down.i && up.d.image(gamma) == down.d
}

pub(crate) fn require_surjection(gamma: &MatrixF, target_n: usize) -> Result<()> {
    check_surjection(gamma, target_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::{Modulus, PrimeField};

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    fn f3() -> PrimeField {
        m3().field()
    }

    fn e12_form() -> CommutatorForm {
        CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap()
    }

    fn drop_e3() -> MatrixF {
        MatrixF::from_rows(f3(), 3, &[[1, 0, 0], [0, 1, 0]]).unwrap()
    }

    #[test]
    fn d_max_examples() {
        let h = CommutatorForm::heisenberg(m3());
        let line = Subspace::span(f3(), 2, [[1, 0]]);
        assert_eq!(d_max(&line, &h).unwrap(), line);

        let f = e12_form();
        let e3 = Subspace::span(f3(), 3, [[0, 0, 1]]);
        assert!(d_max(&e3, &f).unwrap().is_full());
        assert!(d_max(&Subspace::zero(f3(), 3), &f).unwrap().is_full());
    }

    #[test]
    fn d_max_rejects_non_liftable() {
        let h = CommutatorForm::heisenberg(m3());
        assert_eq!(d_max(&Subspace::full(f3(), 2), &h), Err(Error::NotLiftable));
    }

    #[test]
    fn heisenberg_has_no_pairs() {
        let h = CommutatorForm::heisenberg(m3());
        assert!(delta_pairs(&h, false, &Caps::default()).unwrap().is_empty());
    }

    #[test]
    fn pairs_of_single_relation() {
        let f = e12_form();
        let pairs = delta_pairs(&f, false, &Caps::default()).unwrap();
        let expected = DeltaPair {
            i: Subspace::span(f3(), 3, [[0, 0, 1]]),
            d: Subspace::full(f3(), 3),
        };
        assert!(pairs.contains(&expected));
        for p in &pairs {
            assert!(DeltaPair::check(&f, &p.i, &p.d).unwrap());
        }
    }

    #[test]
    fn zero_form_pairs_are_lines_in_plane() {
        let z = CommutatorForm::zero(m3(), 2);
        let pairs = delta_pairs(&z, false, &Caps::default()).unwrap();
        // the four lines, plus I = D = F_3^2 which is liftable as well
        assert_eq!(pairs.len(), 5);
        assert!(pairs.iter().all(|p| p.d.is_full()));
        assert_eq!(pairs.iter().filter(|p| p.i.dim() == 1).count(), 4);
        let with_zero = delta_pairs(&z, true, &Caps::default()).unwrap();
        assert_eq!(with_zero.len(), 6);
        assert!(with_zero[0].i.is_zero());
    }

    #[test]
    fn pullback_examples() {
        let h = CommutatorForm::heisenberg(m3());
        let id = MatrixF::identity(f3(), 2);
        assert_eq!(pullback_form(&id, &h).unwrap().kernel(), h.kernel());

        let pulled = pullback_form(&drop_e3(), &h).unwrap();
        assert_eq!(pulled.lambda().to_rows(), vec![vec![1, 0, 0]]);

        let rank_one = MatrixF::from_rows(f3(), 3, &[[1, 0, 0]]).unwrap();
        let line_form = CommutatorForm::zero(m3(), 1);
        let z = pullback_form(&rank_one, &line_form).unwrap();
        assert_eq!(z.r(), 0);
        assert_eq!(z.n(), 3);
    }

    #[test]
    fn pullback_preserves_rank_along_surjections() {
        // wedge^2 of a surjection is surjective, so r is unchanged
        let f = CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let gamma = MatrixF::from_rows(f3(), 3, &[[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let g = pullback_form(&gamma, &f).unwrap();
        assert_eq!(g.r(), 2);
    }

    #[test]
    fn pullback_rejects_non_surjection() {
        let h = CommutatorForm::heisenberg(m3());
        let g = MatrixF::from_rows(f3(), 3, &[[1, 0, 0], [2, 0, 0]]).unwrap();
        assert!(matches!(pullback_form(&g, &h), Err(Error::NotSurjective { .. })));
    }

    #[test]
    fn surjection_of_pairs() {
        let g = drop_e3();
        let pulled = pullback_form(&g, &CommutatorForm::heisenberg(m3())).unwrap();
        let up = DeltaPair::new(&pulled, Subspace::span(f3(), 3, [[0, 0, 1]]), Subspace::full(f3(), 3)).unwrap();
        assert!(up.i.image(&g).is_zero());
        // the zero image of I~ matches no pair with nontrivial I
        let fake_down = DeltaPair {
            i: Subspace::span(f3(), 2, [[1, 0]]),
            d: Subspace::full(f3(), 2),
        };
        assert!(!delta_pair_surjects(&g, &up, &fake_down));

        let up2 = DeltaPair::new(
            &pulled,
            Subspace::span(f3(), 3, [[1, 0, 1]]),
            Subspace::span(f3(), 3, [[1, 0, 0], [0, 0, 1]]),
        )
        .unwrap();
        assert_eq!(up2.i.image(&g), Subspace::span(f3(), 2, [[1, 0]]));
        assert!(up2.d.image(&g).is_cyclic());
        assert!(!delta_pair_surjects(&g, &up2, &fake_down));

        let id = MatrixF::identity(f3(), 3);
        assert!(delta_pair_surjects(&id, &up, &up));
    }
}
