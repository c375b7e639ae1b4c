use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::Subspace;
use crate::hopf::{closure, integral_in, quotient_by_subalgebra, ClosureMode, HopfAlgebraData, HopfSubalgebraHandle};
use crate::kernels::simple_subcoalgebra;
use crate::rep::{center, CharacterData};

/// All Hopf subalgebras of `H` and of `H*`, with the correspondence `K -> (H//K)*` on normal
/// members.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeData {
    pub subalgebras: Vec<HopfSubalgebraHandle>,
    pub normal_flags: Vec<bool>,
    pub dual_subalgebras: Vec<HopfSubalgebraHandle>,
    pub dual_normal_flags: Vec<bool>,
    /// For each normal member, the index of `(H//K)*` among `dual_subalgebras`.
    pub dual_correspondence: Vec<Option<usize>>,
    pub intersection_closed: bool,
    pub correspondence_is_bijection: bool,
}

impl LatticeData {
    pub fn normal_members(&self) -> impl Iterator<Item = (usize, &HopfSubalgebraHandle)> {
        self.subalgebras
            .iter()
            .enumerate()
            .filter(|(i, _)| self.normal_flags[*i])
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subalgebras.iter().map(HopfSubalgebraHandle::dim).collect()
    }
}

fn cmp_spaces(a: &Subspace, b: &Subspace) -> Ordering {
    a.dim().cmp(&b.dim()).then_with(|| {
        for (u, v) in a.basis().iter().zip(b.basis()) {
            for (x, y) in u.iter().zip(v) {
                let o = x.coeffs().cmp(y.coeffs());
                if o.is_ne() {
                    return o;
                }
            }
        }
        Ordering::Equal
    })
}

/// Every Hopf subalgebra, as the join-closure of the atoms `closure(C_d)`; sorted by dimension,
/// then by canonical basis.
pub fn lattice_members(data: &CharacterData) -> Result<Vec<HopfSubalgebraHandle>> {
    let h = &data.algebra;
    let mut members: Vec<HopfSubalgebraHandle> = Vec::new();
    for d in 0..data.coirr.len() {
        let atom = closure(h, &simple_subcoalgebra(data, d)?, ClosureMode::Hopf)?;
        if !members.iter().any(|m| m.space == atom.space) {
            members.push(atom);
        }
    }
    let cap = 1usize << data.coirr.len().min(20);
    let mut rounds = 0;
    loop {
        let mut fresh: Vec<HopfSubalgebraHandle> = Vec::new();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let (a, b) = (&members[i].space, &members[j].space);
                if a.contains_subspace(b) || b.contains_subspace(a) {
                    continue;
                }
                let join = closure(h, &a.sum(b), ClosureMode::Hopf)?;
                let known = members.iter().chain(&fresh).any(|m| m.space == join.space);
                if !known {
                    fresh.push(join);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        members.extend(fresh);
        rounds += 1;
        if rounds > cap {
            return Err(HopfError::Internal("lattice join-closure did not terminate".into()));
        }
    }
    if let Some(bad) = members.iter().find(|m| !m.is_hopf_subalgebra()) {
        return Err(HopfError::Internal(format!("closure produced {:?}", bad.flags)));
    }
    members.sort_by(|a, b| cmp_spaces(&a.space, &b.space));
    Ok(members)
}

fn intersection_closed(members: &[HopfSubalgebraHandle]) -> bool {
    members.iter().enumerate().all(|(i, a)| {
        members[i + 1..]
            .iter()
            .all(|b| {
                let meet = a.space.intersect(&b.space);
                members.iter().any(|m| m.space == meet)
            })
    })
}

/// The image of `(H//K)*` in `H*`: the span of the columns of the projection `H -> H//K`.
pub(crate) fn dual_of_quotient(h: &std::sync::Arc<HopfAlgebraData>, k: &HopfSubalgebraHandle) -> Result<Subspace> {
    let q = quotient_by_subalgebra(h, k)?;
    let cols: Vec<Vector> = (0..q.quotient.dim()).map(|t| q.projection.column(t)).collect();
    Ok(Subspace::from_vectors(h.field(), h.dim(), cols))
}

pub fn enumerate_lattice(data: &CharacterData) -> Result<LatticeData> {
    let subalgebras = lattice_members(data)?;
    let dual_subalgebras = lattice_members(&data.dualized())?;
    let normal_flags: Vec<bool> = subalgebras.iter().map(HopfSubalgebraHandle::is_normal).collect();
    let dual_normal_flags: Vec<bool> = dual_subalgebras.iter().map(HopfSubalgebraHandle::is_normal).collect();
    let mut dual_correspondence = Vec::with_capacity(subalgebras.len());
    for (k, normal) in subalgebras.iter().zip(&normal_flags) {
        if !normal {
            dual_correspondence.push(None);
            continue;
        }
        let image = dual_of_quotient(&data.algebra, k)?;
        dual_correspondence.push(dual_subalgebras.iter().position(|m| m.space == image));
    }
    let mut hit: Vec<usize> = dual_correspondence.iter().flatten().copied().collect();
    let mapped_all = hit.len() == normal_flags.iter().filter(|&&b| b).count();
    hit.sort_unstable();
    hit.dedup();
    let normal_duals: Vec<usize> = (0..dual_subalgebras.len()).filter(|&i| dual_normal_flags[i]).collect();
    let correspondence_is_bijection = mapped_all && hit == normal_duals;
    Ok(LatticeData {
        intersection_closed: intersection_closed(&subalgebras) && intersection_closed(&dual_subalgebras),
        subalgebras,
        normal_flags,
        dual_subalgebras,
        dual_normal_flags,
        dual_correspondence,
        correspondence_is_bijection,
    })
}

/// `N(d)`: the smallest normal Hopf subalgebra containing `C_d`.
pub fn n_of_d(data: &CharacterData, d: usize, mode: ClosureMode) -> Result<HopfSubalgebraHandle> {
    let k = closure(&data.algebra, &simple_subcoalgebra(data, d)?, mode)?;
    if mode == ClosureMode::NormalHopf && !k.is_normal() {
        return Err(HopfError::Internal(format!("normal closure of C_{d} is not normal")));
    }
    Ok(k)
}

/// Whether the idempotent integral of `k` is central in `H`.
pub fn normal_closure_integral_is_central(h: &HopfAlgebraData, k: &HopfSubalgebraHandle) -> Result<bool> {
    Ok(center(h).contains(&integral_in(h, &k.space)?))
}
