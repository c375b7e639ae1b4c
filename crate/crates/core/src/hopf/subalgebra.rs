//! Subcoalgebras, Hopf subalgebras, closures and normality.

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{axpy, Vector};
use crate::exactmath::{kernel_of_rows, FieldElem, Subspace};
use crate::hopf::HopfAlgebraData;

/// Which closure [`closure`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    /// Smallest Hopf-closed subspace (unit, products, antipode).
    Hopf,
    /// Additionally stable under both adjoint actions.
    NormalHopf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubalgebraFlags {
    pub is_subalgebra: bool,
    pub is_subcoalgebra: bool,
    pub contains_unit: bool,
    pub antipode_stable: bool,
    pub is_normal: bool,
}

impl SubalgebraFlags {
    pub fn is_hopf_subalgebra(&self) -> bool {
        self.is_subalgebra && self.is_subcoalgebra && self.contains_unit && self.antipode_stable
    }
}

/// A subspace of `H` together with exactly certified closure flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfSubalgebraHandle {
    pub space: Subspace,
    pub flags: SubalgebraFlags,
}

impl HopfSubalgebraHandle {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_hopf_subalgebra(&self) -> bool {
        self.flags.is_hopf_subalgebra()
    }

    pub fn is_normal(&self) -> bool {
        self.flags.is_normal
    }
}

/// Checks every flag on the canonical basis of `space`.
pub fn certify(h: &HopfAlgebraData, space: Subspace) -> HopfSubalgebraHandle {
    let is_subalgebra = space
        .basis()
        .iter()
        .all(|x| space.basis().iter().all(|y| space.contains(&h.mul(x, y))));
    let contains_unit = space.contains(h.unit());
    let antipode_stable = space
        .basis()
        .iter()
        .all(|x| space.contains(&h.apply_antipode(x)));
    let is_subcoalgebra = is_subcoalgebra(h, &space);
    let mut flags = SubalgebraFlags {
        is_subalgebra,
        is_subcoalgebra,
        contains_unit,
        antipode_stable,
        is_normal: false,
    };
    if flags.is_hopf_subalgebra() {
        flags.is_normal = adjoint_stable(h, &space);
    }
    HopfSubalgebraHandle { space, flags }
}

/// `Delta(v) in V (x) V` for every basis vector `v` of `V`.
pub fn is_subcoalgebra(h: &HopfAlgebraData, v: &Subspace) -> bool {
    let ann = v.annihilator();
    v.basis().iter().all(|x| {
        let d = h.comul(x);
        ann.basis().iter().all(|q| {
            h.contract_left(q, &d).iter().all(FieldElem::is_zero)
                && h.contract_right(&d, q).iter().all(FieldElem::is_zero)
        })
    })
}

/// The largest subcoalgebra contained in `v`: the greatest fixpoint of
/// `D -> {x in D : Delta(x) in D (x) D}`.
pub fn largest_subcoalgebra_in(h: &HopfAlgebraData, v: &Subspace) -> Result<Subspace> {
    let n = h.dim();
    let f = h.field();
    let mut d = v.clone();
    for _ in 0..=n + 1 {
        if d.is_zero() {
            return Ok(d);
        }
        let ann = d.annihilator();
        if ann.is_zero() {
            return Ok(d);
        }
        let deltas: Vec<Vector> = d.basis().iter().map(|x| h.comul(x)).collect();
        let r = d.dim();
        // one equation per (functional, coordinate, side); unknowns are coefficients over d
        let images: Vec<Vec<Vector>> = deltas
            .iter()
            .map(|t| {
                ann.basis()
                    .iter()
                    .flat_map(|q| [h.contract_left(q, t), h.contract_right(t, q)])
                    .collect()
            })
            .collect();
        let eqs = images[0].len();
        let rows = (0..eqs).flat_map(|e| {
            let images = &images;
            (0..n).map(move |c| (0..r).map(|t| images[t][e][c].clone()).collect::<Vector>())
        });
        let coeffs = kernel_of_rows(f, r, rows);
        if coeffs.dim() == r {
            return Ok(d);
        }
        let next = Subspace::from_vectors(
            f,
            n,
            coeffs.basis().iter().map(|c| {
                let mut x = h.zero_vec();
                for (a, b) in c.iter().zip(d.basis()) {
                    axpy(&mut x, a, b);
                }
                x
            }),
        );
        d = next;
    }
    Err(HopfError::Internal(
        "largest subcoalgebra iteration exceeded dim(H)+1 steps".into(),
    ))
}

/// `sum x_1 w S(x_2)` for `x = b_i`.
pub fn adjoint_left(h: &HopfAlgebraData, i: usize, w: &[FieldElem]) -> Vector {
    let mut out = h.zero_vec();
    for (j, k, c) in h.comult_terms(i) {
        let left = h.mul_basis_left(*j, w);
        let s = h.apply_antipode(&h.basis_vec(*k));
        axpy(&mut out, c, &h.mul(&left, &s));
    }
    out
}

/// `sum S(x_1) w x_2` for `x = b_i`.
pub fn adjoint_right(h: &HopfAlgebraData, i: usize, w: &[FieldElem]) -> Vector {
    let mut out = h.zero_vec();
    for (j, k, c) in h.comult_terms(i) {
        let s = h.apply_antipode(&h.basis_vec(*j));
        let right = h.mul_basis_right(w, *k);
        axpy(&mut out, c, &h.mul(&s, &right));
    }
    out
}

fn adjoint_stable(h: &HopfAlgebraData, k: &Subspace) -> bool {
    (0..h.dim()).all(|i| {
        k.basis().iter().all(|w| {
            k.contains(&adjoint_left(h, i, w)) && k.contains(&adjoint_right(h, i, w))
        })
    })
}

/// Normality of a Hopf subalgebra under both adjoint actions.
pub fn is_normal(h: &HopfAlgebraData, k: &HopfSubalgebraHandle) -> Result<bool> {
    if !k.is_hopf_subalgebra() {
        return Err(HopfError::NotHopfSubalgebra(format!("{:?}", k.flags)));
    }
    Ok(adjoint_stable(h, &k.space))
}

/// Least fixpoint of `W -> W + span{1} + W W + S(W)` (plus adjoint images in
/// [`ClosureMode::NormalHopf`]) starting from `v`.
pub fn closure(h: &HopfAlgebraData, v: &Subspace, mode: ClosureMode) -> Result<HopfSubalgebraHandle> {
    let n = h.dim();
    let mut w = v.clone();
    w.insert(h.unit().to_vec());
    for _ in 0..=n + 1 {
        let before = w.dim();
        let basis: Vec<Vector> = w.basis().to_vec();
        let mut next = w.clone();
        for x in &basis {
            next.insert(h.apply_antipode(x));
            for y in &basis {
                if next.is_full() {
                    break;
                }
                next.insert(h.mul(x, y));
            }
            if mode == ClosureMode::NormalHopf {
                for i in 0..n {
                    if next.is_full() {
                        break;
                    }
                    next.insert(adjoint_left(h, i, x));
                    next.insert(adjoint_right(h, i, x));
                }
            }
        }
        w = next;
        if w.dim() == before {
            return Ok(certify(h, w));
        }
    }
    Err(HopfError::Internal("closure iteration exceeded dim(H)+1 steps".into()))
}
