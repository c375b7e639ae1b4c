use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::{kernel_of_rows, FieldElem, Matrix, Subspace};
use crate::hopf::{certify, hopf_ideal_violations, largest_subcoalgebra_in, HopfAlgebraData, HopfSubalgebraHandle};
use crate::rep::{decompose, left_quotient_rep, tensor_rep, Character, CharacterData, Representation};

/// Rows of the linear map `x -> sum x_i (rho(b_i) - c_i I)`, one per matrix entry.
fn entry_rows<'a>(
    h: &'a HopfAlgebraData,
    r: &'a Representation,
    shift: Option<&'a [FieldElem]>,
) -> impl Iterator<Item = Vector> + 'a {
    let m = r.module_dim;
    (0..m * m).map(move |ab| {
        let (a, b) = (ab / m, ab % m);
        (0..h.dim())
            .map(|i| {
                let v = r.matrices[i][(a, b)].clone();
                match shift {
                    Some(c) if a == b => &v - &c[i],
                    _ => v,
                }
            })
            .collect()
    })
}

/// `S_M = {h : hm = eps(h) m for all m}`.
pub fn sm_space(h: &HopfAlgebraData, r: &Representation) -> Subspace {
    kernel_of_rows(h.field(), h.dim(), entry_rows(h, r, Some(h.counit())))
}

/// `Ann_H(M)`.
pub fn annihilator(h: &HopfAlgebraData, r: &Representation) -> Subspace {
    kernel_of_rows(h.field(), h.dim(), entry_rows(h, r, None))
}

/// `Ann_H(M)` from the character: the sum of the blocks `H xi_chi` over the irreducible `chi`
/// not occurring in `M`.
pub fn annihilator_by_support(data: &CharacterData, chi: &Character) -> Result<Subspace> {
    let h = &data.algebra;
    let mult = decompose(h, chi, &data.irr)?;
    let n = h.dim();
    let vectors = mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m == 0)
        .flat_map(|(j, _)| {
            let xi = data.irr.idempotent(j);
            (0..n).map(move |i| h.mul_basis_left(i, xi))
        });
    Ok(Subspace::from_vectors(h.field(), n, vectors))
}

/// `rho(d) = eps(d) I`.
pub fn acts_trivially(h: &HopfAlgebraData, r: &Representation, d: &[FieldElem]) -> bool {
    let eps = h.eps(d);
    r.act(h, d) == Matrix::identity(h.field(), r.module_dim).scale(&eps)
}

/// The largest subcoalgebra of `S_M`, with its certified flags. By the theory it is a Hopf
/// subalgebra; callers treat a failed flag as a finding.
pub fn largest_hopf_in_sm(h: &HopfAlgebraData, r: &Representation) -> Result<HopfSubalgebraHandle> {
    let sm = sm_space(h, r);
    Ok(certify(h, largest_subcoalgebra_in(h, &sm)?))
}

/// `I_M = intersection over n >= 0 of Ann(M^(x)n)`, certified a Hopf ideal.
///
/// `M^(x)(n+1)` is replaced by `(H / Ann(M^(x)n)) (x) M`, which has the same irreducible
/// constituents; the intersection stops at the first step that does not shrink it.
pub fn hopf_ideal_im(h: &HopfAlgebraData, r: &Representation) -> Result<Subspace> {
    let mut ideal = h.augmentation_ideal();
    let mut reduced = Representation::trivial(h);
    for _ in 0..=h.dim() + 1 {
        let power = tensor_rep(h, &reduced, r);
        let ann = annihilator(h, &power);
        let next = ideal.intersect(&ann);
        if next == ideal {
            let violations = hopf_ideal_violations(h, &ideal);
            if !violations.is_empty() {
                return Err(HopfError::Internal(format!("I_M: {}", violations.join("; "))));
            }
            return Ok(ideal);
        }
        ideal = next;
        reduced = left_quotient_rep(h, &ann);
    }
    Err(HopfError::Internal("I_M iteration exceeded dim(H)+1 steps".into()))
}
