use serde::Serialize;

use super::group::{Cocycle, GroupElt};
use crate::extension::{CommutatorForm, DeltaPair, Fan};
use crate::fflinalg::{enumerate_subspaces, unit_vector, Caps, MatrixF, Subspace, WedgeCoords};
use crate::{Error, Result};

fn check_ambient(c: &Cocycle, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: c.n(),
            found: s.ambient_dim(),
        });
    }
    if s.field() != c.field() {
        return Err(Error::FieldMismatch(s.field().p(), c.field().p()));
    }
    Ok(())
}

/// Whether the full preimage of `sigma` in `G^c` is abelian. Commutators are
/// central and bimultiplicative, so pairwise commutators of lifts of a basis
/// decide it.
pub fn preimage_abelian(c: &Cocycle, sigma: &Subspace) -> Result<bool> {
    check_ambient(c, sigma)?;
    let lifts: Vec<GroupElt> = sigma.basis().map(|v| c.lift(v)).collect();
    Ok(lifts
        .iter()
        .enumerate()
        .all(|(i, x)| lifts[i + 1..].iter().all(|y| c.commute(x, y))))
}

/// [`preimage_abelian`] by checking every pair of elements of the preimage.
/// Fails with `CapExceeded` when the preimage has more than `max_elements`
/// elements.
pub fn preimage_abelian_exhaustive(c: &Cocycle, sigma: &Subspace, max_elements: usize) -> Result<bool> {
    check_ambient(c, sigma)?;
    let size = (c.modulus().ell() as u128).pow((sigma.dim() + c.r()) as u32);
    if size > max_elements as u128 {
        return Err(Error::CapExceeded(format!(
            "preimage of order {size} exceeds {max_elements} elements"
        )));
    }
    let zs = Subspace::full(c.field(), c.r()).vectors();
    let mut elts = Vec::new();
    for a in sigma.vectors() {
        for z in &zs {
            elts.push(GroupElt {
                a: a.clone(),
                z: z.clone(),
            });
        }
    }
    Ok(elts
        .iter()
        .enumerate()
        .all(|(i, x)| elts[i + 1..].iter().all(|y| c.commute(x, y))))
}

/// `[pi^{-1}(I), pi^{-1}(D)] = 1`, on lifts of bases.
pub fn pairs_commute(c: &Cocycle, i: &Subspace, d: &Subspace) -> Result<bool> {
    check_ambient(c, i)?;
    check_ambient(c, d)?;
    if !d.contains(i) {
        return Err(Error::NotNested);
    }
    Ok(i.basis().all(|x| d.basis().all(|y| c.commute(&c.lift(x), &c.lift(y)))))
}

/// `{a : [(a, 0), x] = 1 for all x in xs}`, from the linear map
/// `a -> [(a, 0), x]` evaluated through the group law on unit vectors.
pub fn group_commutant(c: &Cocycle, xs: &[GroupElt]) -> Subspace {
    let n = c.n();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for x in xs {
        let images: Vec<Vec<u32>> = (0..n).map(|j| c.commutator(&c.lift(&unit_vector(n, j)), x).z).collect();
        for k in 0..c.r() {
            rows.push(images.iter().map(|img| img[k]).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::full(c.field(), n);
    }
    MatrixF::from_rows(c.field(), n, &rows)
        .expect("rows of length n")
        .kernel()
}

/// Centralizer `Z_g` of `g` in `G^c`, given by generators and order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Centralizer {
    pub element: GroupElt,
    /// Image of `Z_g` in `G^a`.
    pub image: Subspace,
    /// Lifts of a basis of `image`, followed by a basis of `Z`.
    pub generators: Vec<GroupElt>,
    /// `log_l |Z_g| = r + dim image`.
    pub log_order: usize,
    /// `log_l` of the order of `g` (0 or 1: the group has exponent `l`).
    pub log_order_of_element: usize,
    /// `log_l |Z_g / <g>|`.
    pub log_order_of_quotient: usize,
}

pub fn centralizer(c: &Cocycle, g: &GroupElt) -> Centralizer {
    let image = group_commutant(c, std::slice::from_ref(g));
    let mut generators: Vec<GroupElt> = image.basis().map(|v| c.lift(v)).collect();
    generators.extend((0..c.r()).map(|k| c.central(&unit_vector(c.r(), k))));
    let log_order = c.r() + image.dim();
    let log_order_of_element = usize::from(*g != c.identity());
    Centralizer {
        element: g.clone(),
        image,
        generators,
        log_order,
        log_order_of_element,
        log_order_of_quotient: log_order - log_order_of_element,
    }
}

/// The commutator form read off from `[(e_i, 0), (e_j, 0)]`, `i < j`.
pub fn derived_form(c: &Cocycle) -> Result<CommutatorForm> {
    let n = c.n();
    let wc = WedgeCoords::new(n);
    let mut lambda = MatrixF::zeros(c.field(), c.r(), wc.dim());
    for (idx, (i, j)) in wc.pairs().enumerate() {
        let comm = c.commutator(&c.lift(&unit_vector(n, i)), &c.lift(&unit_vector(n, j)));
        for (k, &v) in comm.z.iter().enumerate() {
            lambda.set(k, idx, v);
        }
    }
    CommutatorForm::new(c.modulus(), n, lambda)
}

/// The fan computed from the group: subgroups with abelian preimage.
pub fn oracle_fan(c: &Cocycle, complete: bool, caps: &Caps) -> Result<Fan> {
    let mut sigmas = Vec::new();
    for s in enumerate_subspaces(c.field(), c.n(), None, caps)? {
        if !complete && s.is_cyclic() {
            continue;
        }
        if preimage_abelian(c, &s)? {
            sigmas.push(s);
        }
    }
    Ok(Fan { complete, sigmas })
}

/// Maximal delta-pairs computed from the group: `I` with abelian preimage
/// and `D` the image of the common centralizer of lifts of `I`.
pub fn oracle_delta_pairs(c: &Cocycle, include_trivial_i: bool, caps: &Caps) -> Result<Vec<DeltaPair>> {
    let mut out = Vec::new();
    for i in enumerate_subspaces(c.field(), c.n(), None, caps)? {
        if i.is_zero() && !include_trivial_i {
            continue;
        }
        if !preimage_abelian(c, &i)? {
            continue;
        }
        let lifts: Vec<GroupElt> = i.basis().map(|v| c.lift(v)).collect();
        let d = group_commutant(c, &lifts);
        if !d.is_cyclic() {
            out.push(DeltaPair { i, d });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Disagreement {
    Liftable {
        sigma: Subspace,
        criterion: bool,
        oracle: bool,
    },
    Pair {
        i: Subspace,
        d: Subspace,
        criterion: bool,
        oracle: bool,
    },
}

/// Outcome of comparing the linear-algebra criteria with group computations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub subspaces: usize,
    pub pairs: usize,
    pub disagreements: Vec<Disagreement>,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn absorb(&mut self, other: AgreementReport) {
        self.subspaces += other.subspaces;
        self.pairs += other.pairs;
        self.disagreements.extend(other.disagreements);
    }
}

/// For every subspace `sigma`: `is_liftable` against [`preimage_abelian`].
/// For every nested `I ⊆ D`: the delta-pair conditions against
/// [`pairs_commute`] with `D` noncyclic.
pub fn agreement_sweep(c: &Cocycle, caps: &Caps) -> Result<AgreementReport> {
    let form = c.form();
    let all: Vec<Subspace> = enumerate_subspaces(c.field(), c.n(), None, caps)?.collect();
    let mut report = AgreementReport::default();
    for s in &all {
        let criterion = form.is_liftable(s)?;
        let oracle = preimage_abelian(c, s)?;
        report.subspaces += 1;
        if criterion != oracle {
            report.disagreements.push(Disagreement::Liftable {
                sigma: s.clone(),
                criterion,
                oracle,
            });
        }
    }
    for d in &all {
        for i in all.iter().filter(|i| i.dim() <= d.dim() && d.contains(i)) {
            let criterion = DeltaPair::check(form, i, d)?;
            let oracle = !d.is_cyclic() && pairs_commute(c, i, d)?;
            report.pairs += 1;
            if criterion != oracle {
                report.disagreements.push(Disagreement::Pair {
                    i: i.clone(),
                    d: d.clone(),
                    criterion,
                    oracle,
                });
            }
        }
    }
    Ok(report)
}
