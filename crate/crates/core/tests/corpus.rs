use std::sync::Arc;

use hopfkern::corpus::{builtin, builtins, AlgebraSpecFile};
use hopfkern::hopf::{certify, quotient_by_ideal, quotient_by_subalgebra, verify_hopf};
use hopfkern::{HopfError, Subspace};

#[test]
fn every_builtin_round_trips_through_the_file_format() {
    for b in builtins() {
        let h = b.build().unwrap();
        let text = AlgebraSpecFile::from_hopf(&h, None).to_canonical_json();
        let parsed = AlgebraSpecFile::from_json(&text).unwrap();
        assert_eq!(parsed.to_canonical_json(), text, "{}", b.name);
        assert_eq!(parsed.to_hopf().unwrap(), h, "{}", b.name);
    }
}

#[test]
fn quotients_by_trivial_ideals() {
    let h = Arc::new(builtin("S3").unwrap().build().unwrap());
    let f = h.field();
    let zero = Subspace::zero(f, 6);
    let q = quotient_by_ideal(&h, &zero).unwrap();
    assert_eq!(q.quotient.dim(), 6);
    assert!(verify_hopf(&q.quotient).is_hopf());

    let q = quotient_by_ideal(&h, &h.augmentation_ideal()).unwrap();
    assert_eq!(q.quotient.dim(), 1);
    assert!(verify_hopf(&q.quotient).is_hopf());

    // a subspace that is not an ideal is rejected
    let not_ideal = Subspace::from_vectors(f, 6, [h.basis_vec(1)]);
    assert!(quotient_by_ideal(&h, &not_ideal).is_err());
}

#[test]
fn quotient_of_c2_by_one_minus_g() {
    let h = Arc::new(builtin("C2").unwrap().build().unwrap());
    let f = h.field();
    let ideal = Subspace::from_vectors(f, 2, [vec![f.one(), f.from_int(-1)]]);
    let q = quotient_by_ideal(&h, &ideal).unwrap();
    assert_eq!(q.quotient.dim(), 1);
    assert!(verify_hopf(&q.quotient).is_hopf());
}

#[test]
fn quotients_by_extreme_subalgebras() {
    for name in ["S3", "H8", "Fun(D4)"] {
        let h = Arc::new(builtin(name).unwrap().build().unwrap());
        let n = h.dim();
        let unit = certify(&h, h.unit_span());
        let q = quotient_by_subalgebra(&h, &unit).unwrap();
        assert_eq!(q.quotient.dim(), n, "{name}");
        let full = certify(&h, Subspace::full(h.field(), n));
        let q = quotient_by_subalgebra(&h, &full).unwrap();
        assert_eq!(q.quotient.dim(), 1, "{name}");
        assert!(verify_hopf(&q.quotient).is_hopf());
    }
    // b1 is a transposition: span{1, b1} is a Hopf subalgebra that is not normal
    let s3 = Arc::new(builtin("S3").unwrap().build().unwrap());
    let order_two = certify(&s3, Subspace::from_vectors(s3.field(), 6, [s3.unit().to_vec(), s3.basis_vec(1)]));
    assert!(order_two.is_hopf_subalgebra() && !order_two.is_normal());
    assert!(matches!(quotient_by_subalgebra(&s3, &order_two), Err(HopfError::NotNormal(_))));
}
