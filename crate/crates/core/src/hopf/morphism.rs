use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::{FieldElem, Matrix};
use crate::hopf::HopfAlgebraData;

/// A certified Hopf algebra map. `matrix` is `dim(source) x dim(target)`; row `i` is the image of
/// the source basis element `b_i`.
#[derive(Debug, Clone)]
pub struct HopfMorphism {
    pub source: Arc<HopfAlgebraData>,
    pub target: Arc<HopfAlgebraData>,
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn apply(&self, x: &[FieldElem]) -> Vector {
        self.matrix.vector_mul(x)
    }
}

/// Certifies that `f` intertwines every structure map of `a` and `b`, or names the first
/// violated condition with a witness.
pub fn morphism_check(
    f: Matrix,
    a: &Arc<HopfAlgebraData>,
    b: &Arc<HopfAlgebraData>,
) -> Result<HopfMorphism> {
    let (n, m) = (a.dim(), b.dim());
    if f.rows() != n || f.cols() != m {
        return Err(HopfError::NotMorphism(format!(
            "matrix is {}x{}, expected {n}x{m}",
            f.rows(),
            f.cols()
        )));
    }
    let img = |x: &[FieldElem]| f.vector_mul(x);
    let fail = |what: &str, w: &[usize]| Err(HopfError::NotMorphism(format!("{what} fails at basis {w:?}")));

    if img(a.unit()) != b.unit() {
        return fail("unit preservation", &[]);
    }
    for i in 0..n {
        let fi = f.row(i).to_vec();
        for j in 0..n {
            let lhs = img(&a.mul(&a.basis_vec(i), &a.basis_vec(j)));
            let rhs = b.mul(&fi, f.row(j));
            if lhs != rhs {
                return fail("multiplicativity", &[i, j]);
            }
        }
        if b.comul(&fi) != a.tensor_apply(&a.comul(&a.basis_vec(i)), &f, &f) {
            return fail("comultiplicativity", &[i]);
        }
        if b.eps(&fi) != a.counit()[i] {
            return fail("counit compatibility", &[i]);
        }
        if img(&a.apply_antipode(&a.basis_vec(i))) != b.apply_antipode(&fi) {
            return fail("antipode compatibility", &[i]);
        }
    }
    Ok(HopfMorphism {
        source: a.clone(),
        target: b.clone(),
        matrix: f,
    })
}
