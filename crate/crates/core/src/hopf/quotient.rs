//! Quotient Hopf algebras `H/I` and `H//K = H/(H K^+)`.

use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::{FieldElem, Matrix, Subspace};
use crate::hopf::{
    is_normal, morphism_check, verify_hopf, HopfAlgebraData, HopfMorphism, HopfSubalgebraHandle,
};

/// A Hopf ideal, the quotient it defines, and the maps between them.
///
/// The quotient basis is the set of non-pivot coordinates of the echelonized ideal; `projection`
/// reduces modulo the ideal and reads those coordinates, `section` embeds them back.
#[derive(Debug, Clone)]
pub struct QuotientData {
    pub parent: Arc<HopfAlgebraData>,
    pub ideal: Subspace,
    pub quotient: Arc<HopfAlgebraData>,
    /// `dim(H) x dim(H/I)`, row `i` is `pi(b_i)`.
    pub projection: Matrix,
    /// `dim(H/I) x dim(H)`, row `t` is `iota(q_t)`.
    pub section: Matrix,
}

impl QuotientData {
    pub fn project(&self, x: &[FieldElem]) -> Vector {
        let reduced = self.ideal.reduce(x.to_vec());
        self.ideal
            .non_pivots()
            .into_iter()
            .map(|i| reduced[i].clone())
            .collect()
    }

    pub fn morphism(&self) -> HopfMorphism {
        HopfMorphism {
            source: self.parent.clone(),
            target: self.quotient.clone(),
            matrix: self.projection.clone(),
        }
    }
}

/// The violated Hopf-ideal conditions of `i`, in a fixed order. Empty means `i` is a Hopf ideal.
pub fn hopf_ideal_violations(h: &HopfAlgebraData, i: &Subspace) -> Vec<String> {
    let n = h.dim();
    let mut out = Vec::new();
    let two_sided = i.basis().iter().all(|w| {
        (0..n).all(|j| i.contains(&h.mul_basis_left(j, w)) && i.contains(&h.mul_basis_right(w, j)))
    });
    if !two_sided {
        out.push("not a two-sided ideal".to_string());
    }
    if !i.basis().iter().all(|w| h.eps(w).is_zero()) {
        out.push("not annihilated by the counit".to_string());
    }
    if !i.basis().iter().all(|w| i.contains(&h.apply_antipode(w))) {
        out.push("not stable under the antipode".to_string());
    }
    let np = i.non_pivots();
    let coideal = i.basis().iter().all(|w| {
        let d = h.comul(w);
        let reduce_left: Vec<Vector> = (0..n)
            .map(|k| i.reduce((0..n).map(|j| d[j * n + k].clone()).collect()))
            .collect();
        // (pi (x) pi) Delta(w) = 0
        np.iter().all(|&a| {
            let col: Vector = (0..n).map(|k| reduce_left[k][a].clone()).collect();
            let red = i.reduce(col);
            np.iter().all(|&b| red[b].is_zero())
        })
    });
    if !coideal {
        out.push("not a coideal".to_string());
    }
    out
}

/// The quotient Hopf algebra `H/I`, after certifying that `I` is a Hopf ideal.
pub fn quotient_by_ideal(h: &Arc<HopfAlgebraData>, i: &Subspace) -> Result<QuotientData> {
    let n = h.dim();
    let f = h.field();
    if i.ambient_dim() != n {
        return Err(HopfError::NotHopfIdeal(format!(
            "ambient dimension {} differs from dim(H) = {n}",
            i.ambient_dim()
        )));
    }
    let violations = hopf_ideal_violations(h, i);
    if !violations.is_empty() {
        return Err(HopfError::NotHopfIdeal(violations.join("; ")));
    }
    let np = i.non_pivots();
    let m = np.len();
    let project = |x: Vector| -> Vector {
        let r = i.reduce(x);
        np.iter().map(|&a| r[a].clone()).collect()
    };
    let projection = Matrix::from_rows(f, m, (0..n).map(|a| project(h.basis_vec(a))).collect())?;
    let section = Matrix::from_rows(f, n, np.iter().map(|&a| h.basis_vec(a)).collect())?;

    let mut mult = Vec::with_capacity(m * m * m);
    for &s in &np {
        for &t in &np {
            let prod = h.mul(&h.basis_vec(s), &h.basis_vec(t));
            mult.extend(project(prod));
        }
    }
    let mut comult = Vec::with_capacity(m * m * m);
    for &s in &np {
        let t = h.tensor_apply(&h.comul(&h.basis_vec(s)), &projection, &projection);
        comult.extend(t);
    }
    let unit = project(h.unit().to_vec());
    let counit: Vector = np.iter().map(|&s| h.counit()[s].clone()).collect();
    let antipode = Matrix::from_rows(
        f,
        m,
        np.iter()
            .map(|&s| project(h.apply_antipode(&h.basis_vec(s))))
            .collect(),
    )?;
    let quotient = HopfAlgebraData::new(
        format!("{}/I", h.name()),
        f,
        m,
        mult,
        unit,
        comult,
        counit,
        antipode,
    )?;
    verify_hopf(&quotient).into_result().map_err(|e| {
        HopfError::Internal(format!("induced quotient structure is not a Hopf algebra: {e}"))
    })?;
    let quotient = Arc::new(quotient);
    morphism_check(projection.clone(), h, &quotient)
        .map_err(|e| HopfError::Internal(format!("canonical projection: {e}")))?;
    if section.mul(&projection)? != Matrix::identity(f, m) {
        return Err(HopfError::Internal("pi o iota is not the identity".into()));
    }
    Ok(QuotientData {
        parent: h.clone(),
        ideal: i.clone(),
        quotient,
        projection,
        section,
    })
}

/// `K^+ = K cap ker(eps)`.
pub fn augmentation(h: &HopfAlgebraData, k: &Subspace) -> Subspace {
    k.intersect(&h.augmentation_ideal())
}

/// `H//K = H/(H K^+)` for a normal Hopf subalgebra `K`.
pub fn quotient_by_subalgebra(h: &Arc<HopfAlgebraData>, k: &HopfSubalgebraHandle) -> Result<QuotientData> {
    if !is_normal(h, k)? {
        return Err(HopfError::NotNormal(format!(
            "subalgebra of dimension {} is not normal",
            k.dim()
        )));
    }
    let n = h.dim();
    let f = h.field();
    let kplus = augmentation(h, &k.space);
    let left = Subspace::from_vectors(
        f,
        n,
        (0..n).flat_map(|j| kplus.basis().iter().map(move |w| h.mul_basis_left(j, w))),
    );
    let right = Subspace::from_vectors(
        f,
        n,
        (0..n).flat_map(|j| kplus.basis().iter().map(move |w| h.mul_basis_right(w, j))),
    );
    if left != right {
        return Err(HopfError::Internal("H K^+ differs from K^+ H for a normal K".into()));
    }
    let q = quotient_by_ideal(h, &left)?;
    if q.quotient.dim() * k.dim() != n {
        return Err(HopfError::Internal(format!(
            "dim(H//K) * dim(K) = {} * {} != {n}",
            q.quotient.dim(),
            k.dim()
        )));
    }
    Ok(q)
}
