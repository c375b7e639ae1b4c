//! Central character subalgebras, the partitions of `Irr(H)` and `Irr(H*)` they induce, the
//! Hopf-subalgebra lattice, property (N), and the theorem harness.

mod harness;
mod lattice;

pub use harness::{property_n, theorem_harness, Finding, PropertyN, TheoremReport};
pub use lattice::{
    enumerate_lattice, lattice_members, n_of_d, normal_closure_integral_is_central, LatticeData,
};

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{axpy, is_zero_vector, scale_vector, Vector};
use crate::exactmath::{kernel_of_rows, Matrix, Subspace};
use crate::hopf::HopfAlgebraData;
use crate::rep::{center, CharacterData, IrrData, PhiMap};

/// `C(H) = span Irr(H)` inside `H*`, certified equal to `{f : f(ab) = f(ba)}`.
pub fn char_subalgebra(h: &HopfAlgebraData, irr: &IrrData) -> Result<Subspace> {
    let n = h.dim();
    let span = Subspace::from_vectors(h.field(), n, irr.characters().map(|c| c.values.clone()));
    // f(b_i b_j - b_j b_i) = 0
    let rows = (0..n).flat_map(|i| {
        (0..n).map(move |j| {
            (0..n)
                .map(|k| h.mult_coeff(i, j, k) - h.mult_coeff(j, i, k))
                .collect::<Vector>()
        })
    });
    let traces = kernel_of_rows(h.field(), n, rows);
    if traces != span {
        return Err(HopfError::Internal(format!(
            "span of Irr has dimension {} but trace functionals {}",
            span.dim(),
            traces.dim()
        )));
    }
    Ok(span)
}

/// Groups indices whose coordinates agree on every vector; classes ordered by least member.
fn coordinate_partition(coords: &[Vector], count: usize) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for d in 0..count {
        let same = |e: usize| coords.iter().all(|c| c[d] == c[e]);
        match classes.iter_mut().find(|cl| same(cl[0])) {
            Some(cl) => cl.push(d),
            None => classes.push(vec![d]),
        }
    }
    classes
}

/// Coordinates of each basis vector of `space` in the basis of central idempotents.
fn idempotent_coordinates(h: &HopfAlgebraData, irr: &IrrData, space: &Subspace) -> Result<Vec<Vector>> {
    let cols: Vec<Vector> = irr.blocks.iter().map(|b| b.idempotent.clone()).collect();
    let m = Matrix::from_columns(h.field(), h.dim(), &cols);
    space
        .basis()
        .iter()
        .map(|z| {
            let rhs = Matrix::from_columns(h.field(), h.dim(), std::slice::from_ref(z));
            let sol = m
                .solve(&rhs)?
                .ok_or_else(|| HopfError::Internal("central element outside the span of idempotents".into()))?;
            Ok(sol.column(0))
        })
        .collect()
}

fn sum_of(h: &HopfAlgebraData, vs: impl IntoIterator<Item = Vector>) -> Vector {
    let mut acc = h.zero_vec();
    for v in vs {
        axpy(&mut acc, &h.field().one(), &v);
    }
    acc
}

fn orthogonal_idempotents(h: &HopfAlgebraData, es: &[Vector]) -> bool {
    es.iter().enumerate().all(|(i, a)| {
        es.iter().enumerate().all(|(j, b)| {
            let p = h.mul(a, b);
            if i == j {
                p == *a
            } else {
                is_zero_vector(&p)
            }
        })
    }) && sum_of(h, es.iter().cloned()) == h.unit()
}

/// The central character structure of `H` and `H*`.
#[derive(Debug, Clone, Serialize)]
pub struct CentralData {
    /// `Z(H*) cap C(H)`, inside `H*`.
    pub z_hat_dual: Subspace,
    /// `Z(H) cap C(H*)`, inside `H`.
    pub z_hat: Subspace,
    /// Classes of `Irr(H*)` indices.
    pub partition_y: Vec<Vec<usize>>,
    /// Classes of `Irr(H)` indices.
    pub partition_x: Vec<Vec<usize>>,
    /// `e_j = sum_{d in Y_j} xi_d`, in `H*`.
    pub e_idempotents: Vec<Vector>,
    /// `sum_{d in Y_j} eps(d) S(d)`, in `H`.
    pub e_hats: Vec<Vector>,
    /// `dim(H) phi(e_j)`, in `H`.
    pub e_hats_via_phi: Vec<Vector>,
    /// `f_i = sum_{chi in X_i} chi(1) chi`, in `H*`.
    pub f_elements: Vec<Vector>,
    /// `phi(f_i)`, in `H`; equal to `sum_{chi in X_i} xi_chi`.
    pub f_images: Vec<Vector>,
    pub e_hat_formulas_agree: bool,
    pub e_idempotents_valid: bool,
    pub f_images_valid: bool,
    /// `sum_j e_hat_j = dim(H) Lambda`.
    pub e_hat_sum_is_regular: bool,
}

impl CentralData {
    pub fn all_pass(&self) -> bool {
        self.e_hat_formulas_agree
            && self.e_idempotents_valid
            && self.f_images_valid
            && self.e_hat_sum_is_regular
            && self.partition_x.len() == self.partition_y.len()
    }

    /// The `~` class containing `d`.
    pub fn class_of(&self, d: usize) -> &[usize] {
        self.partition_y
            .iter()
            .find(|c| c.contains(&d))
            .expect("partition covers Irr(H*)")
    }
}

pub fn central_data(data: &CharacterData) -> Result<CentralData> {
    let h = &data.algebra;
    let hd = &data.dual;
    let f = h.field();
    let n = h.dim();
    let dim_h = f.from_int(n as i64);
    let phi = PhiMap::new(h)?;

    let c_h = char_subalgebra(h, &data.irr)?;
    let c_hd = char_subalgebra(hd, &data.coirr)?;
    let z_hat_dual = center(hd).intersect(&c_h);
    let z_hat = center(h).intersect(&c_hd);

    let y_coords = idempotent_coordinates(hd, &data.coirr, &z_hat_dual)?;
    let partition_y = coordinate_partition(&y_coords, data.coirr.len());
    let x_coords = idempotent_coordinates(h, &data.irr, &z_hat)?;
    let partition_x = coordinate_partition(&x_coords, data.irr.len());

    let e_idempotents: Vec<Vector> = partition_y
        .iter()
        .map(|cl| sum_of(hd, cl.iter().map(|&d| data.coirr.idempotent(d).clone())))
        .collect();
    let e_hats: Vec<Vector> = partition_y
        .iter()
        .map(|cl| {
            sum_of(
                h,
                cl.iter().map(|&d| {
                    let eps = f.from_int(data.codegree(d) as i64);
                    scale_vector(&eps, &h.apply_antipode(data.coelement(d)))
                }),
            )
        })
        .collect();
    let e_hats_via_phi: Vec<Vector> = e_idempotents
        .iter()
        .map(|e| scale_vector(&dim_h, &phi.apply(e)))
        .collect();
    let f_elements: Vec<Vector> = partition_x
        .iter()
        .map(|cl| {
            sum_of(
                hd,
                cl.iter().map(|&c| {
                    let deg = f.from_int(data.irr.blocks[c].degree as i64);
                    scale_vector(&deg, &data.irr.character(c).values)
                }),
            )
        })
        .collect();
    let f_images: Vec<Vector> = f_elements.iter().map(|x| phi.apply(x)).collect();
    let f_expected: Vec<Vector> = partition_x
        .iter()
        .map(|cl| sum_of(h, cl.iter().map(|&c| data.irr.idempotent(c).clone())))
        .collect();

    let e_idempotents_valid = orthogonal_idempotents(hd, &e_idempotents)
        && e_idempotents.iter().all(|e| z_hat_dual.contains(e));
    let f_images_valid = f_images == f_expected
        && orthogonal_idempotents(h, &f_images)
        && f_images.iter().all(|e| z_hat.contains(e));
    let lambda = crate::hopf::integral(h)?;
    let e_hat_sum_is_regular = sum_of(h, e_hats.iter().cloned()) == scale_vector(&dim_h, &lambda);

    Ok(CentralData {
        z_hat_dual,
        z_hat,
        e_hat_formulas_agree: e_hats == e_hats_via_phi,
        partition_y,
        partition_x,
        e_idempotents,
        e_hats,
        e_hats_via_phi,
        f_elements,
        f_images,
        e_idempotents_valid,
        f_images_valid,
        e_hat_sum_is_regular,
    })
}
