//! Finite-dimensional left modules given by the matrices of the basis elements.

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::{FieldElem, Matrix, Subspace};
use crate::hopf::HopfAlgebraData;
use crate::rep::irr::{Character, IrrData};

/// `matrices[i]` is `rho(b_i)` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub module_dim: usize,
    pub matrices: Vec<Matrix>,
}

impl Representation {
    pub fn act(&self, h: &HopfAlgebraData, x: &[FieldElem]) -> Matrix {
        let mut out = Matrix::zeros(h.field(), self.module_dim, self.module_dim);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out.add_scaled(c, m);
            }
        }
        out
    }

    pub fn character(&self, h: &HopfAlgebraData) -> Character {
        Character::new(h, self.matrices.iter().map(Matrix::trace).collect())
    }

    /// `rho(1) = I` and `rho(b_i) rho(b_j) = rho(b_i b_j)`.
    pub fn is_algebra_map(&self, h: &HopfAlgebraData) -> bool {
        let n = h.dim();
        if self.act(h, h.unit()) != Matrix::identity(h.field(), self.module_dim) {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.matrices[i].mul(&self.matrices[j]).expect("square");
                let prod = h.mul_basis_right(&h.basis_vec(i), j);
                lhs == self.act(h, &prod)
            })
        })
    }

    pub fn trivial(h: &HopfAlgebraData) -> Self {
        let f = h.field();
        Representation {
            module_dim: 1,
            matrices: h
                .counit()
                .iter()
                .map(|e| Matrix::from_rows(f, 1, vec![vec![e.clone()]]).expect("1x1"))
                .collect(),
        }
    }
}

/// The left module `v` for a left ideal `v`, in its echelon basis.
pub fn left_ideal_rep(h: &HopfAlgebraData, v: &Subspace) -> Result<Representation> {
    let m = v.dim();
    let f = h.field();
    let mut matrices = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let cols = v
            .basis()
            .iter()
            .map(|w| {
                v.coordinates(&h.mul_basis_left(i, w))
                    .ok_or_else(|| HopfError::Internal("subspace is not a left ideal".into()))
            })
            .collect::<Result<Vec<Vector>>>()?;
        matrices.push(Matrix::from_columns(f, m, &cols));
    }
    Ok(Representation {
        module_dim: m,
        matrices,
    })
}

/// The left module `H / j` for a left ideal `j`, on the non-pivot coordinates.
pub fn left_quotient_rep(h: &HopfAlgebraData, j: &Subspace) -> Representation {
    let np = j.non_pivots();
    let f = h.field();
    let matrices = (0..h.dim())
        .map(|i| {
            let cols: Vec<Vector> = np
                .iter()
                .map(|&a| {
                    let r = j.reduce(h.mul_basis_left(i, &h.basis_vec(a)));
                    np.iter().map(|&b| r[b].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, np.len(), &cols)
        })
        .collect();
    Representation {
        module_dim: np.len(),
        matrices,
    }
}

/// The block `H xi` of an irreducible character as a left module (`chi(1)` copies of the simple
/// module).
pub fn rep_from_block(h: &HopfAlgebraData, irr: &IrrData, index: usize) -> Result<Representation> {
    let xi = irr.idempotent(index);
    let block = Subspace::from_vectors(h.field(), h.dim(), (0..h.dim()).map(|i| h.mul_basis_left(i, xi)));
    left_ideal_rep(h, &block)
}

/// `M (x) N` with `b_i` acting through `Delta(b_i)`.
pub fn tensor_rep(h: &HopfAlgebraData, a: &Representation, b: &Representation) -> Representation {
    let dim = a.module_dim * b.module_dim;
    let matrices = (0..h.dim())
        .map(|i| {
            let mut out = Matrix::zeros(h.field(), dim, dim);
            for (j, k, c) in h.comult_terms(i) {
                out.add_scaled(c, &a.matrices[*j].kron(&b.matrices[*k]));
            }
            out
        })
        .collect();
    Representation {
        module_dim: dim,
        matrices,
    }
}
