use std::sync::Arc;

use num_bigint::BigInt;

use crate::corpus::{dual_group_algebra, group_algebra, kac_paljutkin, GroupTable};
use crate::error::HopfError;
use crate::exactmath::matrix::Vector;
use crate::exactmath::{Matrix, Rational, Subspace};
use crate::hopf::*;

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn c2() -> HopfAlgebraData {
    group_algebra(&GroupTable::cyclic(2), 2).unwrap()
}

fn s3() -> (GroupTable, HopfAlgebraData) {
    let t = GroupTable::symmetric3();
    let h = group_algebra(&t, 3).unwrap();
    (t, h)
}

fn span(h: &HopfAlgebraData, vs: Vec<Vector>) -> Subspace {
    Subspace::from_vectors(h.field(), h.dim(), vs)
}

fn first_of_order(t: &GroupTable, k: usize) -> usize {
    (0..t.order()).find(|&a| t.element_order(a) == k).unwrap()
}

#[test]
fn group_algebras_and_h8_are_hopf() {
    for h in [c2(), s3().1, kac_paljutkin(), dual_group_algebra(&GroupTable::quaternion(), 4).unwrap()] {
        let r = verify_hopf(&h);
        assert!(r.is_hopf(), "{}: {:?}", h.name(), r.first_failure());
        assert!(r.antipode_involutive);
    }
}

#[test]
fn broken_antipode_is_reported_with_witness() {
    let h = c2();
    let f = h.field();
    let broken = HopfAlgebraData::new(
        "broken",
        f,
        2,
        h.mult_tensor().to_vec(),
        h.unit().to_vec(),
        h.comult_tensor().to_vec(),
        h.counit().to_vec(),
        Matrix::zeros(f, 2, 2),
    )
    .unwrap();
    let r = verify_hopf(&broken);
    assert!(!r.is_hopf());
    let fail = r.first_failure().unwrap();
    assert!(fail.axiom.starts_with("antipode"));
    assert!(fail.witness.is_some());
    assert!(matches!(r.into_result(), Err(HopfError::AxiomViolated(_))));
}

#[test]
fn double_dual_is_identity() {
    for h in [c2(), s3().1, kac_paljutkin()] {
        let dd = dual(&dual(&h));
        assert_eq!(dd, h);
        assert_eq!(dd.name(), h.name());
        assert!(verify_hopf(&dual(&h)).is_hopf());
    }
    let h = s3().1;
    let d = dual(&h);
    assert!(!d.is_cocommutative());
    assert!(d.is_commutative());
}

#[test]
fn integrals_of_small_examples() {
    let h = c2();
    let f = h.field();
    let half = f.from_rational(frac(1, 2));
    assert_eq!(integral(&h).unwrap(), vec![half.clone(), half]);

    let (_, h) = s3();
    let sixth = h.field().from_rational(frac(1, 6));
    assert_eq!(integral(&h).unwrap(), vec![sixth; 6]);

    let fun = dual_group_algebra(&GroupTable::cyclic(2), 2).unwrap();
    assert_eq!(integral(&fun).unwrap(), fun.basis_vec(0));

    let h8 = kac_paljutkin();
    let l = integral(&h8).unwrap();
    assert_eq!(h8.mul(&l, &l), l);
    assert!(h8.eps(&l).is_one());
}

#[test]
fn integral_of_a_subalgebra() {
    let (t, h) = s3();
    let r = first_of_order(&t, 3);
    let a3 = span(&h, vec![h.basis_vec(0), h.basis_vec(r), h.basis_vec(t.mul(r, r))]);
    let l = integral_in(&h, &a3).unwrap();
    let third = h.field().from_rational(frac(1, 3));
    for (i, c) in l.iter().enumerate() {
        let expect = if a3.contains(&h.basis_vec(i)) { third.clone() } else { h.field().zero() };
        assert_eq!(*c, expect);
    }
}

#[test]
fn largest_subcoalgebra_examples() {
    let h = c2();
    let f = h.field();
    let one_plus_g = vec![f.one(), f.one()];
    let v = span(&h, vec![one_plus_g]);
    assert!(largest_subcoalgebra_in(&h, &v).unwrap().is_zero());

    let v = span(&h, vec![h.basis_vec(1)]);
    assert_eq!(largest_subcoalgebra_in(&h, &v).unwrap(), v);
    assert!(is_subcoalgebra(&h, &v));

    let fun = dual_group_algebra(&GroupTable::symmetric3(), 3).unwrap();
    let full = Subspace::full(fun.field(), 6);
    assert_eq!(largest_subcoalgebra_in(&fun, &full).unwrap(), full);
    let aug = fun.augmentation_ideal();
    assert!(largest_subcoalgebra_in(&fun, &aug).unwrap().is_zero());
}

#[test]
fn closures_in_s3() {
    let (t, h) = s3();
    let r = first_of_order(&t, 3);
    let s = first_of_order(&t, 2);
    let c = closure(&h, &span(&h, vec![h.basis_vec(r)]), ClosureMode::Hopf).unwrap();
    assert_eq!(c.dim(), 3);
    assert!(c.is_hopf_subalgebra());
    assert!(c.is_normal());

    let c = closure(&h, &span(&h, vec![h.basis_vec(s)]), ClosureMode::Hopf).unwrap();
    assert_eq!(c.dim(), 2);
    assert!(!c.is_normal());
    assert!(!is_normal(&h, &c).unwrap());

    let c = closure(&h, &span(&h, vec![h.basis_vec(s)]), ClosureMode::NormalHopf).unwrap();
    assert_eq!(c.dim(), 6);
    assert!(c.space.is_full());

    let c = closure(&h, &Subspace::zero(h.field(), 6), ClosureMode::Hopf).unwrap();
    assert_eq!(c.space, h.unit_span());
}

#[test]
fn normality_requires_a_hopf_subalgebra() {
    let (t, h) = s3();
    let s = first_of_order(&t, 2);
    let not_sub = certify(&h, span(&h, vec![h.basis_vec(s)]));
    assert!(!not_sub.is_hopf_subalgebra());
    assert!(matches!(is_normal(&h, &not_sub), Err(HopfError::NotHopfSubalgebra(_))));
}

#[test]
fn quotient_of_s3_by_a3() {
    let (t, h) = s3();
    let h = Arc::new(h);
    let r = first_of_order(&t, 3);
    let a3 = closure(&h, &span(&h, vec![h.basis_vec(r)]), ClosureMode::Hopf).unwrap();
    let q = quotient_by_subalgebra(&h, &a3).unwrap();
    assert_eq!(q.quotient.dim(), 2);
    assert!(q.quotient.is_commutative() && q.quotient.is_cocommutative());
    let pi = q.morphism();
    assert_eq!(pi.apply(&h.basis_vec(r)), q.project(&h.basis_vec(0)));

    let s = first_of_order(&t, 2);
    let sub = closure(&h, &span(&h, vec![h.basis_vec(s)]), ClosureMode::Hopf).unwrap();
    assert!(matches!(quotient_by_subalgebra(&h, &sub), Err(HopfError::NotNormal(_))));
}

#[test]
fn non_ideals_are_rejected() {
    let h = Arc::new(c2());
    let v = span(&h, vec![h.basis_vec(1)]);
    let err = quotient_by_ideal(&h, &v).unwrap_err();
    assert!(matches!(err, HopfError::NotHopfIdeal(_)));
    assert!(!hopf_ideal_violations(&h, &v).is_empty());
    assert!(hopf_ideal_violations(&h, &h.augmentation_ideal()).is_empty());
}

#[test]
fn morphisms_from_c2() {
    let h = Arc::new(c2());
    let f = h.field();
    let triv = Arc::new(group_algebra(&GroupTable::cyclic(1), 2).unwrap());
    let to_triv = Matrix::from_rows(f, 1, vec![vec![f.one()], vec![f.one()]]).unwrap();
    let m = morphism_check(to_triv, &h, &triv).unwrap();
    assert_eq!(m.apply(&h.basis_vec(1)), vec![f.one()]);

    let g_to_zero = Matrix::from_rows(f, 2, vec![h.basis_vec(0), h.zero_vec()]).unwrap();
    assert!(matches!(morphism_check(g_to_zero, &h, &h), Err(HopfError::NotMorphism(_))));
    assert!(morphism_check(Matrix::identity(f, 2), &h, &h).is_ok());
}
