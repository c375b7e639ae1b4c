//! Representation kernels `H_chi`, the module-theoretic oracles `S_M`, `I_M`, and Hopf kernels.

mod hker;
mod module_kernels;
mod report;

pub use hker::hopf_kernel;
pub use module_kernels::{
    acts_trivially, annihilator, annihilator_by_support, hopf_ideal_im, largest_hopf_in_sm, sm_space,
};
pub use report::{verify_2_10, KernelReport};

use crate::error::{HopfError, Result};
use crate::exactmath::Subspace;
use crate::hopf::{certify, is_subcoalgebra, HopfSubalgebraHandle};
use crate::rep::{decompose, Character, CharacterData};

/// `{d in Irr(H*) : chi(d) = eps(d) chi(1)}` as indices into `Irr(H*)`.
pub fn ker_set(data: &CharacterData, chi: &Character) -> Vec<usize> {
    let f = data.algebra.field();
    (0..data.coirr.len())
        .filter(|&d| {
            let eps_d = f.from_int(data.codegree(d) as i64);
            chi.eval(data.coelement(d)) == &eps_d * &chi.degree
        })
        .collect()
}

/// Checks that a set of cocharacters is closed under products and `d -> S(d)`.
pub fn check_fusion_closed(data: &CharacterData, set: &[usize]) -> Result<()> {
    let h = &data.algebra;
    for &a in set {
        let star = h.apply_antipode(data.coelement(a));
        let found = set.iter().any(|&b| data.coelement(b) == star.as_slice());
        if !found {
            return Err(HopfError::Internal(format!("kernel set not closed under star at {a}")));
        }
        for &b in set {
            let prod = h.mul(data.coelement(a), data.coelement(b));
            let as_char = Character::new(&data.dual, prod);
            let mult = decompose(&data.dual, &as_char, &data.coirr)?;
            if let Some(bad) = (0..mult.len()).find(|i| mult[*i] > 0 && !set.contains(i)) {
                return Err(HopfError::Internal(format!(
                    "kernel set not closed under fusion: {a} * {b} contains {bad}"
                )));
            }
        }
    }
    Ok(())
}

/// `C_d`, the image of `x -> sum xi_d(x_1) x_2`; certified a subcoalgebra of dimension `eps(d)^2`.
pub fn simple_subcoalgebra(data: &CharacterData, d: usize) -> Result<Subspace> {
    let h = &data.algebra;
    let xi = data.coirr.idempotent(d);
    let n = h.dim();
    let image = Subspace::from_vectors(
        h.field(),
        n,
        (0..n).map(|i| h.contract_left(xi, &h.comul(&h.basis_vec(i)))),
    );
    let e = data.codegree(d) as usize;
    if image.dim() != e * e || !is_subcoalgebra(h, &image) {
        return Err(HopfError::Internal(format!(
            "simple subcoalgebra {d} has dimension {} (expected {})",
            image.dim(),
            e * e
        )));
    }
    Ok(image)
}

/// `sum_{d in set} C_d`.
pub fn span_of_subcoalgebras(data: &CharacterData, set: &[usize]) -> Result<Subspace> {
    let mut space = Subspace::zero(data.algebra.field(), data.dim());
    for &d in set {
        space = space.sum(&simple_subcoalgebra(data, d)?);
    }
    Ok(space)
}

/// `H_chi = sum_{d in ker_set(chi)} C_d`, certified a Hopf subalgebra of dimension
/// `sum eps(d)^2`.
pub fn kernel_subalgebra(data: &CharacterData, chi: &Character) -> Result<HopfSubalgebraHandle> {
    let set = ker_set(data, chi);
    check_fusion_closed(data, &set)?;
    let space = span_of_subcoalgebras(data, &set)?;
    let expected: usize = set.iter().map(|&d| (data.codegree(d) as usize).pow(2)).sum();
    let handle = certify(&data.algebra, space);
    if !handle.is_hopf_subalgebra() || handle.dim() != expected {
        return Err(HopfError::Internal(format!(
            "kernel of dimension {} failed certification: {:?}",
            handle.dim(),
            handle.flags
        )));
    }
    Ok(handle)
}

#[cfg(test)]
mod tests;
