use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{scale_vector, sub_vectors, Vector};
use crate::exactmath::{kernel_of_rows, Subspace};
use crate::hopf::HopfAlgebraData;

/// The idempotent two-sided integral `Lambda` (`x Lambda = Lambda x = eps(x) Lambda`,
/// `eps(Lambda) = 1`).
///
/// A vanishing `eps(Lambda)`, or no two-sided integral at all, means the algebra is not
/// semisimple, and the input is rejected.
pub fn integral(h: &HopfAlgebraData) -> Result<Vector> {
    integral_in(h, &Subspace::full(h.field(), h.dim()))
}

/// The idempotent integral of the Hopf subalgebra spanned by `k`.
pub fn integral_in(h: &HopfAlgebraData, k: &Subspace) -> Result<Vector> {
    let f = h.field();
    let r = k.dim();
    let basis = k.basis();
    // unknown: coefficients of Lambda in the basis of k
    let mut rows: Vec<Vector> = Vec::new();
    for x in basis {
        let ex = h.eps(x);
        let left: Vec<Vector> = basis
            .iter()
            .map(|w| sub_vectors(&h.mul(x, w), &scale_vector(&ex, w)))
            .collect();
        let right: Vec<Vector> = basis
            .iter()
            .map(|w| sub_vectors(&h.mul(w, x), &scale_vector(&ex, w)))
            .collect();
        for block in [left, right] {
            for coord in 0..h.dim() {
                rows.push((0..r).map(|t| block[t][coord].clone()).collect());
            }
        }
    }
    let space = kernel_of_rows(f, r, rows);
    match space.dim() {
        0 => {
            return Err(HopfError::NotSemisimple(
                "no nonzero two-sided integral (the algebra is not unimodular)".into(),
            ))
        }
        1 => {}
        d => {
            return Err(HopfError::Malformed(format!(
                "two-sided integral space has dimension {d}"
            )))
        }
    }
    let coef = &space.basis()[0];
    let mut lambda = h.zero_vec();
    for (c, w) in coef.iter().zip(basis) {
        crate::exactmath::matrix::axpy(&mut lambda, c, w);
    }
    let e = h.eps(&lambda);
    if e.is_zero() {
        return Err(HopfError::NotSemisimple("eps(Lambda) = 0".into()));
    }
    let lambda = scale_vector(&e.inv()?, &lambda);
    if h.mul(&lambda, &lambda) != lambda {
        return Err(HopfError::Internal("normalized integral is not idempotent".into()));
    }
    Ok(lambda)
}
