use std::sync::Arc;

use super::*;
use crate::corpus::{dual_group_algebra, group_algebra, kac_paljutkin, GroupTable};
use crate::exactmath::{Matrix, Subspace};
use crate::hopf::{
    closure, morphism_check, quotient_by_subalgebra, ClosureMode, HopfAlgebraData,
};
use crate::rep::{left_ideal_rep, regular_character, rep_from_block, tensor_rep, CharacterData, Representation};

fn data(h: HopfAlgebraData) -> CharacterData {
    CharacterData::new(Arc::new(h)).unwrap()
}

fn c2() -> CharacterData {
    data(group_algebra(&GroupTable::cyclic(2), 2).unwrap())
}

fn s3() -> (GroupTable, CharacterData) {
    let t = GroupTable::symmetric3();
    (t.clone(), data(group_algebra(&t, 3).unwrap()))
}

fn a3_elements(t: &GroupTable) -> Vec<usize> {
    (0..6).filter(|&g| t.element_order(g) != 2).collect()
}

#[test]
fn kernel_sets() {
    let d = c2();
    assert_eq!(ker_set(&d, d.irr.character(1)), vec![0]);
    assert_eq!(ker_set(&d, d.irr.character(0)), vec![0, 1]);
    let (t, d) = s3();
    // Irr(H*) of a group algebra is the group, in basis order
    assert_eq!(ker_set(&d, d.irr.character(1)), a3_elements(&t));
}

#[test]
fn kernel_subalgebras() {
    let (t, d) = s3();
    let h = &d.algebra;
    let sign = kernel_subalgebra(&d, d.irr.character(1)).unwrap();
    let a3 = Subspace::from_vectors(h.field(), 6, a3_elements(&t).into_iter().map(|g| h.basis_vec(g)));
    assert_eq!(sign.space, a3);
    assert!(kernel_subalgebra(&d, d.irr.character(0)).unwrap().space.is_full());
    let reg = regular_character(h, &d.irr).unwrap();
    assert_eq!(kernel_subalgebra(&d, &reg).unwrap().space, h.unit_span());
}

#[test]
fn simple_subcoalgebras() {
    let (_, d) = s3();
    let h = &d.algebra;
    assert_eq!(simple_subcoalgebra(&d, 0).unwrap(), h.unit_span());
    for g in 0..6 {
        let c = simple_subcoalgebra(&d, g).unwrap();
        assert_eq!(c, Subspace::from_vectors(h.field(), 6, [h.basis_vec(g)]));
    }
    let d = data(kac_paljutkin());
    assert_eq!(d.codegree(4), 2);
    assert_eq!(simple_subcoalgebra(&d, 4).unwrap().dim(), 4);
}

#[test]
fn sm_spaces_and_oracle() {
    let d = c2();
    let h = &d.algebra;
    let triv = Representation::trivial(h);
    assert!(sm_space(h, &triv).is_full());
    assert!(largest_hopf_in_sm(h, &triv).unwrap().space.is_full());
    let sign = rep_from_block(h, &d.irr, 1).unwrap();
    assert_eq!(sm_space(h, &sign), h.unit_span());
    assert_eq!(largest_hopf_in_sm(h, &sign).unwrap().space, h.unit_span());
    let (_, d) = s3();
    let regular = left_ideal_rep(&d.algebra, &Subspace::full(d.algebra.field(), 6)).unwrap();
    assert_eq!(sm_space(&d.algebra, &regular), d.algebra.unit_span());
}

#[test]
fn annihilators_and_im() {
    let d = c2();
    let h = &d.algebra;
    let f = h.field();
    let sign = rep_from_block(h, &d.irr, 1).unwrap();
    let one_plus_g = Subspace::from_vectors(f, 2, [vec![f.one(), f.one()]]);
    assert_eq!(annihilator(h, &sign), one_plus_g);
    let sq = tensor_rep(h, &sign, &sign);
    let one_minus_g = Subspace::from_vectors(f, 2, [vec![f.one(), -f.one()]]);
    assert_eq!(annihilator(h, &sq), one_minus_g);
    assert!(hopf_ideal_im(h, &sign).unwrap().is_zero());

    let regular = left_ideal_rep(h, &Subspace::full(f, 2)).unwrap();
    assert!(annihilator(h, &regular).is_zero());
    assert!(hopf_ideal_im(h, &regular).unwrap().is_zero());
    let triv = Representation::trivial(h);
    assert_eq!(hopf_ideal_im(h, &triv).unwrap(), h.augmentation_ideal());
}

/// `I_M` through explicit tensor powers `M^(x)n`, `n <= max_power`.
fn im_by_explicit_powers(h: &HopfAlgebraData, m: &Representation, max_power: usize) -> Subspace {
    let mut ideal = h.augmentation_ideal();
    let mut power = m.clone();
    for _ in 0..max_power {
        ideal = ideal.intersect(&annihilator(h, &power));
        power = tensor_rep(h, &power, m);
    }
    ideal
}

#[test]
fn im_matches_explicit_tensor_powers() {
    let cases = [
        group_algebra(&GroupTable::symmetric3(), 3).unwrap(),
        group_algebra(&GroupTable::cyclic(4), 4).unwrap(),
        kac_paljutkin(),
        dual_group_algebra(&GroupTable::symmetric3(), 3).unwrap(),
    ];
    for h in cases {
        let d = data(h);
        let h = &d.algebra;
        for i in 0..d.irr.len() {
            let m = rep_from_block(h, &d.irr, i).unwrap();
            let max_power = if m.module_dim > 1 { 3 } else { 4 };
            assert_eq!(hopf_ideal_im(h, &m).unwrap(), im_by_explicit_powers(h, &m, max_power), "{} {i}", h.name());
            let by_support = annihilator_by_support(&d, &m.character(h)).unwrap();
            assert_eq!(annihilator(h, &m), by_support);
        }
    }
}

#[test]
fn hopf_kernels_of_simple_maps() {
    let (t, d) = s3();
    let h = d.algebra.clone();
    let f = h.field();
    let id = morphism_check(Matrix::identity(f, 6), &h, &h).unwrap();
    assert_eq!(hopf_kernel(&id).space, h.unit_span());

    let base = Arc::new(group_algebra(&GroupTable::cyclic(1), 3).unwrap());
    let eps = Matrix::from_rows(f, 1, h.counit().iter().map(|e| vec![e.clone()]).collect()).unwrap();
    let eps = morphism_check(eps, &h, &base).unwrap();
    assert!(hopf_kernel(&eps).space.is_full());

    let r = a3_elements(&t)[1];
    let a3 = closure(&h, &Subspace::from_vectors(f, 6, [h.basis_vec(r)]), ClosureMode::Hopf).unwrap();
    let q = quotient_by_subalgebra(&h, &a3).unwrap();
    let k = hopf_kernel(&q.morphism());
    assert_eq!(k.space, a3.space);
    assert!(k.is_hopf_subalgebra());
}

#[test]
fn kernel_equalities_hold() {
    let cases = [
        group_algebra(&GroupTable::symmetric3(), 3).unwrap(),
        dual_group_algebra(&GroupTable::symmetric3(), 3).unwrap(),
        kac_paljutkin(),
    ];
    for h in cases {
        let d = data(h);
        for i in 0..d.irr.len() {
            let r = verify_2_10(&d, i).unwrap();
            assert!(r.all_pass(), "{} chi {i}: {r:?}", d.algebra.name());
        }
    }
}

#[test]
fn report_serializes_with_interface_keys() {
    let (_, d) = s3();
    let r = verify_2_10(&d, 1).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["equal_2_10"], true);
    assert_eq!(v["is_normal"], true);
    assert_eq!(v["kernel_dim"], 3);
    assert_eq!(v["ker_set"].as_array().unwrap().len(), 3);
}
