use unram_core::cohomology::{
    ideal_quotient_dims, is_unramified_on_pair, pullback_class, r2_min, r2_sigma, restrict, unramified_quotient,
    ExtClass,
};
use unram_core::extension::{
    delta_pair_surjects, delta_pairs, fan, fan_determines, pullback_form, CommutatorForm, DeltaPair, Fan,
};
use unram_core::fflinalg::{enumerate_subspaces, Caps, MatrixF, Modulus, Subspace};
use unram_core::oracle::{centralizer, isoclinic_variant, preimage_abelian, preimage_abelian_exhaustive, Cocycle};
use unram_core::projmodel::{induced_rep, verify_action_claims};

fn m3() -> Modulus {
    Modulus::new(3).unwrap()
}

fn caps() -> Caps {
    Caps::default()
}

fn span(n: usize, rows: &[&[u32]]) -> Subspace {
    Subspace::span(m3().field(), n, rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn drop_e3() -> MatrixF {
    MatrixF::from_rows(m3().field(), 3, &[[1, 0, 0], [0, 1, 0]]).unwrap()
}

/// `J(a1, b1, a2, b2) = (-b1, a1, -b2, a2)`: multiplication by a square root
/// of `-1`, making `F_3^4` a plane over `F_9`.
fn j(v: &[u32]) -> Vec<u32> {
    vec![(3 - v[1]) % 3, v[0], (3 - v[3]) % 3, v[2]]
}

fn f9_lines() -> Fan {
    let mut sigmas: Vec<Subspace> = enumerate_subspaces(m3().field(), 4, Some(1), &caps())
        .unwrap()
        .map(|line| {
            let v = line.row(0).to_vec();
            let jv = j(&v);
            Subspace::span(m3().field(), 4, [v, jv])
        })
        .collect();
    sigmas.sort();
    sigmas.dedup();
    Fan {
        complete: false,
        sigmas,
    }
}

#[test]
fn f9_lines_determine_a_form_with_vanishing_higher_quotient() {
    let sigma = f9_lines();
    assert_eq!(sigma.len(), 10);
    assert!(sigma.iter().all(|s| s.dim() == 2));
    let det = fan_determines(&sigma, m3(), 4, &caps()).unwrap();
    assert!(!det.candidates.is_empty());
    for k in &det.candidates {
        let form = CommutatorForm::from_kernel(m3(), 4, k).unwrap();
        assert_eq!(fan(&form, false, &caps()).unwrap(), sigma);
        let gens: Vec<ExtClass> = r2_sigma(&form, &caps())
            .unwrap()
            .basis()
            .map(|a| ExtClass::two_form(m3(), 4, a).unwrap())
            .collect();
        let dims = ideal_quotient_dims(&gens, m3(), 4, &caps()).unwrap();
        assert_eq!(dims[3], 0);
        assert_eq!(dims[4], 0);
    }
}

#[test]
fn heisenberg_relations_kill_the_top_degree() {
    let h = CommutatorForm::heisenberg(m3());
    let gens: Vec<ExtClass> = r2_min(&h)
        .basis()
        .map(|a| ExtClass::two_form(m3(), 2, a).unwrap())
        .collect();
    assert_eq!(ideal_quotient_dims(&gens, m3(), 2, &caps()).unwrap(), vec![1, 2, 0]);
}

#[test]
fn restriction_examples() {
    let x12 = ExtClass::monomial(m3(), 3, &[0, 1]);
    assert_eq!(
        restrict(&x12, &span(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap().coords(),
        &[1]
    );
    assert!(restrict(&x12, &span(3, &[&[1, 0, 0], &[0, 0, 1]])).unwrap().is_zero());
    // canonical basis of <e1+e2, e2+e3> is (1,0,2), (0,1,1); x1^x2 there is 1*1 - 0*2
    let s = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
    let b = s.basis_vecs();
    let direct = (b[0][0] * b[1][1] + 3 * 3 - b[0][1] * b[1][0]) % 3;
    assert_eq!(restrict(&x12, &s).unwrap().coords(), &[direct]);
    assert_eq!(direct, 1);
}

#[test]
fn pullback_examples() {
    let x12 = ExtClass::monomial(m3(), 2, &[0, 1]);
    let up = pullback_class(&drop_e3(), &x12).unwrap();
    assert_eq!(up, ExtClass::monomial(m3(), 3, &[0, 1]));
    assert!(pullback_class(&drop_e3(), &ExtClass::zero(m3(), 2, 2))
        .unwrap()
        .is_zero());
    let id = MatrixF::identity(m3().field(), 2);
    assert_eq!(pullback_class(&id, &x12).unwrap(), x12);
    let rank_one = MatrixF::from_rows(m3().field(), 3, &[[1, 0, 0], [2, 0, 0]]).unwrap();
    assert!(pullback_class(&rank_one, &x12).is_err());
}

#[test]
fn pullback_form_examples() {
    let h = CommutatorForm::heisenberg(m3());
    let up = pullback_form(&drop_e3(), &h).unwrap();
    assert_eq!(up.lambda().to_rows(), vec![vec![1, 0, 0]]);
    let id = MatrixF::identity(m3().field(), 2);
    assert_eq!(pullback_form(&id, &h).unwrap().kernel(), h.kernel());
}

#[test]
fn delta_pair_surjection_examples() {
    let up_form = pullback_form(&drop_e3(), &CommutatorForm::heisenberg(m3())).unwrap();
    let full3 = Subspace::full(m3().field(), 3);
    let pair = DeltaPair::new(&up_form, span(3, &[&[0, 0, 1]]), full3.clone()).unwrap();
    assert!(pair.i.image(&drop_e3()).is_zero());
    let zero_form = CommutatorForm::zero(m3(), 2);
    for down in delta_pairs(&zero_form, false, &caps()).unwrap() {
        assert!(!delta_pair_surjects(&drop_e3(), &pair, &down));
    }
    let small = DeltaPair::new(&up_form, span(3, &[&[1, 0, 1]]), span(3, &[&[1, 0, 0], &[0, 0, 1]])).unwrap();
    assert_eq!(small.i.image(&drop_e3()), span(2, &[&[1, 0]]));
    assert!(small.d.image(&drop_e3()).is_cyclic());
    let id = MatrixF::identity(m3().field(), 3);
    assert!(delta_pair_surjects(&id, &pair, &pair));
}

#[test]
fn unramified_pair_examples() {
    let form = CommutatorForm::from_rows(m3(), 3, &[[1, 0, 0]]).unwrap();
    let full3 = Subspace::full(m3().field(), 3);
    let pair = DeltaPair::new(&form, span(3, &[&[0, 0, 1]]), full3.clone()).unwrap();
    assert!(is_unramified_on_pair(&ExtClass::monomial(m3(), 3, &[0, 1]), &pair).unwrap());
    assert!(!is_unramified_on_pair(&ExtClass::monomial(m3(), 3, &[0, 2]), &pair).unwrap());
    let report = unramified_quotient(&form, &caps()).unwrap();
    assert_eq!(report.r2_sigma, span(3, &[&[1, 0, 0]]));
    assert_eq!(report.quotient_dim, 0);
}

#[test]
fn oracle_examples() {
    let h = Cocycle::new(CommutatorForm::heisenberg(m3()));
    let e1 = h.lift(&[1, 0]);
    let e2 = h.lift(&[0, 1]);
    assert_eq!(h.commutator(&e1, &e2), h.central(&[1]));
    assert_eq!(h.commutator(&e1, &h.central(&[2])), h.identity());
    let x = h.element(vec![2, 1], vec![1]).unwrap();
    assert_eq!(h.product(&x, &h.inverse(&x)), h.identity());
    assert_eq!(centralizer(&h, &e1).log_order, 2);
    let plane = Subspace::full(m3().field(), 2);
    assert!(!preimage_abelian(&h, &plane).unwrap());
    assert!(!preimage_abelian_exhaustive(&h, &plane, 1000).unwrap());
}

#[test]
fn identity_perturbation_keeps_heisenberg_answers() {
    let f = m3().field();
    let base = Cocycle::new(CommutatorForm::heisenberg(m3()));
    let v = isoclinic_variant(&base, &[MatrixF::identity(f, 2)]).unwrap();
    let all: Vec<Subspace> = enumerate_subspaces(f, 2, None, &caps()).unwrap().collect();
    assert_eq!(all.len(), 6);
    for s in &all {
        assert_eq!(preimage_abelian(&v, s).unwrap(), preimage_abelian(&base, s).unwrap());
        assert_eq!(
            preimage_abelian_exhaustive(&v, s, 1000).unwrap(),
            preimage_abelian_exhaustive(&base, s, 1000).unwrap()
        );
    }
    let asym = MatrixF::from_rows(f, 2, &[[0, 1], [0, 0]]).unwrap();
    assert!(isoclinic_variant(&base, &[asym]).is_err());
}

#[test]
fn induced_rep_examples() {
    let rep = induced_rep(&CommutatorForm::heisenberg(m3()), 0, Some(7)).unwrap();
    assert_eq!(rep.dim(), 9);
    assert_eq!(rep.zeta(), 2);
    assert!(rep.relations_hold());
    let other = CommutatorForm::from_rows(m3(), 2, &[[2]]).unwrap();
    assert_eq!(induced_rep(&other, 0, Some(7)).unwrap().dim(), 9);
    assert!(induced_rep(&CommutatorForm::zero(m3(), 2), 0, Some(7)).is_err());
    assert!(induced_rep(&CommutatorForm::heisenberg(m3()), 0, Some(11)).is_err());
}

#[test]
fn action_claims_for_heisenberg() {
    let report = verify_action_claims(&CommutatorForm::heisenberg(m3()), Some(7), &caps()).unwrap();
    assert!(report.all_hold());
    assert_eq!(report.table.len(), 6);
    assert!(report.table.iter().all(|row| row.liftable == row.nonempty));
}

#[test]
fn cyclic_image_case_needs_degree_two() {
    // gamma drops e3; (<e1>, <e1, e3>) has cyclic image <e1>
    let up_form = pullback_form(&drop_e3(), &CommutatorForm::heisenberg(m3())).unwrap();
    let pair = DeltaPair::new(&up_form, span(3, &[&[1, 0, 0]]), span(3, &[&[1, 0, 0], &[0, 0, 1]])).unwrap();
    assert!(pair.d.image(&drop_e3()).is_cyclic());
    let x1 = pullback_class(&drop_e3(), &ExtClass::monomial(m3(), 2, &[0])).unwrap();
    assert!(!is_unramified_on_pair(&x1, &pair).unwrap());
    let x12 = pullback_class(&drop_e3(), &ExtClass::monomial(m3(), 2, &[0, 1])).unwrap();
    assert!(is_unramified_on_pair(&x12, &pair).unwrap());
}
