use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::exactmath::matrix::{scale_vector, sub_vectors};
use crate::exactmath::{kernel_of_rows, Subspace};
use crate::hopf::{is_normal, largest_subcoalgebra_in, quotient_by_ideal};
use crate::kernels::{
    acts_trivially, hopf_ideal_im, hopf_kernel, kernel_subalgebra, ker_set, largest_hopf_in_sm,
    sm_space,
};
use crate::rep::{left_quotient_rep, rep_from_block, CharacterData};

/// Every kernel attached to one irreducible character `chi`, and the equalities between them.
#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    pub character: usize,
    pub degree: u32,
    pub ker_set: Vec<usize>,
    #[serde(skip)]
    pub kernel_space: Subspace,
    #[serde(skip)]
    pub sm_space: Subspace,
    #[serde(skip)]
    pub sm_oracle: Subspace,
    #[serde(skip)]
    pub hker_space: Subspace,
    #[serde(skip)]
    pub module_b_kernel: Subspace,
    pub kernel_dim: usize,
    pub sm_dim: usize,
    pub sm_oracle_dim: usize,
    pub hker_dim: usize,
    pub im_dim: usize,
    pub quotient_dim: usize,
    /// `H_chi = HKer(pi)` for `pi : H -> H/I_M`.
    #[serde(rename = "equal_2_10")]
    pub kernels_equal: bool,
    /// `H_chi` equals the largest subcoalgebra of `S_M`, and that subcoalgebra is a Hopf
    /// subalgebra.
    pub sm_oracle_equal: bool,
    pub sm_oracle_is_hopf: bool,
    /// `H_chi = H_B` for `B = H/I_M` as an `H`-module.
    pub module_b_equal: bool,
    /// `HKer(pi)` equals the largest subcoalgebra of `{h : pi(h) = eps(h) 1}`.
    pub coinvariant_oracle_equal: bool,
    /// For every `d`: `chi(d) = eps(d) chi(1)` exactly when `d` acts as `eps(d)` on the block.
    pub trivial_action_agrees: bool,
    pub is_normal: bool,
}

impl KernelReport {
    pub fn all_pass(&self) -> bool {
        self.kernels_equal
            && self.sm_oracle_equal
            && self.sm_oracle_is_hopf
            && self.module_b_equal
            && self.coinvariant_oracle_equal
            && self.trivial_action_agrees
    }
}

/// Builds `M`, `I_M`, `B = H/I_M` and compares `H_chi` with `HKer(pi)`, the `S_M` oracle and
/// `H_B`.
pub fn verify_2_10(data: &CharacterData, chi_index: usize) -> Result<KernelReport> {
    let h: &Arc<_> = &data.algebra;
    let chi = data.irr.character(chi_index);
    let set = ker_set(data, chi);
    let kernel = kernel_subalgebra(data, chi)?;
    let module = rep_from_block(h, &data.irr, chi_index)?;

    let trivial_action_agrees = (0..data.coirr.len()).all(|d| {
        acts_trivially(h, &module, data.coelement(d)) == set.contains(&d)
    });

    let sm = sm_space(h, &module);
    let oracle = largest_hopf_in_sm(h, &module)?;

    let im = hopf_ideal_im(h, &module)?;
    let q = quotient_by_ideal(h, &im)?;
    let hker = hopf_kernel(&q.morphism());

    // {h : pi(h) - eps(h) 1_B = 0}
    let unit_b = q.quotient.unit();
    let columns: Vec<_> = (0..h.dim())
        .map(|i| sub_vectors(q.projection.row(i), &scale_vector(&h.counit()[i], unit_b)))
        .collect();
    let coinv = kernel_of_rows(
        h.field(),
        h.dim(),
        (0..q.quotient.dim()).map(|s| columns.iter().map(|c| c[s].clone()).collect()),
    );
    let coinv_oracle = largest_subcoalgebra_in(h, &coinv)?;

    let module_b = left_quotient_rep(h, &im);
    let b_kernel = kernel_subalgebra(data, &module_b.character(h))?;

    Ok(KernelReport {
        character: chi_index,
        degree: data.irr.blocks[chi_index].degree,
        ker_set: set,
        kernel_dim: kernel.dim(),
        sm_dim: sm.dim(),
        sm_oracle_dim: oracle.dim(),
        hker_dim: hker.dim(),
        im_dim: im.dim(),
        quotient_dim: q.quotient.dim(),
        kernels_equal: hker.space == kernel.space && hker.is_hopf_subalgebra(),
        sm_oracle_equal: oracle.space == kernel.space,
        sm_oracle_is_hopf: oracle.is_hopf_subalgebra(),
        module_b_equal: b_kernel.space == kernel.space,
        coinvariant_oracle_equal: coinv_oracle == hker.space,
        trivial_action_agrees,
        is_normal: is_normal(h, &kernel)?,
        kernel_space: kernel.space,
        sm_space: sm,
        sm_oracle: oracle.space,
        hker_space: hker.space,
        module_b_kernel: b_kernel.space,
    })
}
