use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::central::lattice::dual_of_quotient;
use crate::central::{central_data, enumerate_lattice, n_of_d, normal_closure_integral_is_central};
use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{scale_vector, Vector};
use crate::exactmath::Subspace;
use crate::hopf::{dual, integral, is_normal, quotient_by_subalgebra, ClosureMode, HopfAlgebraData, HopfSubalgebraHandle};
use crate::kernels::{ker_set, kernel_subalgebra};
use crate::rep::{induced_trivial_character, irr_characters, Character, CharacterData};

/// Whether every `H_chi` is normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyN {
    pub holds: bool,
    pub kernel_dims: Vec<usize>,
    /// Indices `chi` whose kernel is not normal.
    pub non_normal: Vec<usize>,
}

pub fn property_n(data: &CharacterData) -> Result<PropertyN> {
    let mut kernel_dims = Vec::new();
    let mut non_normal = Vec::new();
    for (i, chi) in data.irr.characters().enumerate() {
        let k = kernel_subalgebra(data, chi)?;
        kernel_dims.push(k.dim());
        if !is_normal(&data.algebra, &k)? {
            non_normal.push(i);
        }
    }
    Ok(PropertyN {
        holds: non_normal.is_empty(),
        kernel_dims,
        non_normal,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub id: &'static str,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub algebra: String,
    pub dim: usize,
    pub property_n: PropertyN,
    pub dual_property_n: PropertyN,
    pub findings: Vec<Finding>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.findings.iter().all(|f| f.passed)
    }

    pub fn finding(&self, id: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.id == id)
    }
}

/// `f o pi` for a functional `f` on the quotient.
fn pull_back(projection: &crate::exactmath::Matrix, f: &[crate::FieldElem]) -> Vector {
    projection.mul_vector(f)
}

fn index_of(data: &CharacterData, values: &[crate::FieldElem]) -> Option<usize> {
    data.irr.characters().position(|c| c.values == values)
}

fn normal_closure_finding(data: &CharacterData, classes: &[Vec<usize>]) -> Result<Finding> {
    let h = &data.algebra;
    let mut passed = true;
    let mut hopf_closure_constant = true;
    let mut rows = Vec::new();
    for class in classes {
        let normal: Vec<HopfSubalgebraHandle> = class
            .iter()
            .map(|&d| n_of_d(data, d, ClosureMode::NormalHopf))
            .collect::<Result<_>>()?;
        let plain: Vec<HopfSubalgebraHandle> = class
            .iter()
            .map(|&d| n_of_d(data, d, ClosureMode::Hopf))
            .collect::<Result<_>>()?;
        let same = normal.iter().all(|k| k.space == normal[0].space);
        let plain_same = plain.iter().all(|k| k.space == plain[0].space);
        passed &= same;
        hopf_closure_constant &= plain_same;
        let central = normal
            .iter()
            .map(|k| normal_closure_integral_is_central(h, k))
            .collect::<Result<Vec<bool>>>()?;
        rows.push(json!({
            "class": class,
            "normal_closure_dims": normal.iter().map(HopfSubalgebraHandle::dim).collect::<Vec<_>>(),
            "hopf_closure_dims": plain.iter().map(HopfSubalgebraHandle::dim).collect::<Vec<_>>(),
            "integral_central": central,
            "constant": same,
        }));
    }
    Ok(Finding {
        id: "normal_closure_constant_on_classes",
        passed,
        detail: json!({ "classes": rows, "hopf_closure_constant": hopf_closure_constant }),
    })
}

pub fn theorem_harness(data: &CharacterData) -> Result<TheoremReport> {
    let h: &Arc<HopfAlgebraData> = &data.algebra;
    let f = h.field();
    let dual_data = data.dualized();
    let central = central_data(data)?;
    let lattice = enumerate_lattice(data)?;
    let pn = property_n(data)?;
    let pn_dual = property_n(&dual_data)?;
    let mut findings = Vec::new();

    findings.push(Finding {
        id: "central_structure",
        passed: central.all_pass(),
        detail: json!({
            "partition_y": central.partition_y,
            "partition_x": central.partition_x,
            "e_hat_formulas_agree": central.e_hat_formulas_agree,
            "e_idempotents_valid": central.e_idempotents_valid,
            "f_images_valid": central.f_images_valid,
            "e_hat_sum_is_regular": central.e_hat_sum_is_regular,
        }),
    });

    findings.push(normal_closure_finding(data, &central.partition_y)?);

    // kernels of the characters induced from the trivial character of a normal K
    let mut rows = Vec::new();
    let mut passed = true;
    for (_, k) in lattice.normal_members() {
        let chi = induced_trivial_character(h, k);
        let kernel = kernel_subalgebra(data, &chi)?;
        let recovers = kernel.space == k.space;
        let central_char = central.z_hat_dual.contains(&chi.values);
        let q = quotient_by_subalgebra(h, k)?;
        let l = &q.quotient;
        let t_l = integral(&dual(l))?;
        let regular_l = scale_vector(&f.from_int(l.dim() as i64), &t_l);
        let agrees = pull_back(&q.projection, &regular_l) == chi.values;
        passed &= recovers && central_char && agrees;
        rows.push(json!({
            "dim": k.dim(),
            "kernel_recovers_k": recovers,
            "central_in_dual": central_char,
            "matches_pulled_back_regular_character": agrees,
        }));
    }
    findings.push(Finding {
        id: "induced_trivial_kernels",
        passed,
        detail: json!({ "normal_subalgebras": rows }),
    });

    // property (N) of H* against equality of kernels within classes
    let mut classes_equal = true;
    let mut witnesses = Vec::new();
    for class in &central.partition_y {
        let sets: Vec<Vec<usize>> = class
            .iter()
            .map(|&d| ker_set(&dual_data, dual_data.irr.character(d)))
            .collect();
        if sets.iter().any(|s| *s != sets[0]) {
            classes_equal = false;
            witnesses.push(json!({ "class": class, "kernels": sets }));
        }
    }
    findings.push(Finding {
        id: "dual_property_n_iff_equal_kernels_on_classes",
        passed: pn_dual.holds == classes_equal,
        detail: json!({
            "dual_property_n": pn_dual.holds,
            "kernels_constant_on_classes": classes_equal,
            "witnesses": witnesses,
        }),
    });

    findings.push(Finding {
        id: "property_n_self_dual",
        passed: pn.holds == pn_dual.holds,
        detail: json!({ "property_n": pn.holds, "dual_property_n": pn_dual.holds }),
    });

    findings.push(quotient_characters_finding(data, &dual_data, pn.holds)?);

    // kernels of central characters of H* are normal in H*
    let mut normal_all = true;
    let mut dims = Vec::new();
    for e_hat in &central.e_hats {
        let chi = Character::new(&data.dual, e_hat.clone());
        let k = kernel_subalgebra(&dual_data, &chi)?;
        normal_all &= is_normal(&data.dual, &k)?;
        dims.push(k.dim());
    }
    findings.push(Finding {
        id: "central_kernels_normal",
        passed: normal_all,
        detail: json!({ "kernel_dims": dims }),
    });

    // K -> (H//K)* -> (H* // (H//K)*)* returns K
    let mut round_trip = true;
    for (i, k) in lattice.normal_members() {
        let ok = match lattice.dual_correspondence[i] {
            Some(j) => {
                let back = dual_of_quotient(&data.dual, &lattice.dual_subalgebras[j])?;
                back == k.space
            }
            None => false,
        };
        round_trip &= ok;
    }
    findings.push(Finding {
        id: "lattice_correspondence",
        passed: round_trip && lattice.intersection_closed && lattice.correspondence_is_bijection,
        detail: json!({
            "dims": lattice.dims(),
            "normal": lattice.normal_flags,
            "dual_dims": lattice.dual_subalgebras.iter().map(HopfSubalgebraHandle::dim).collect::<Vec<_>>(),
            "dual_correspondence": lattice.dual_correspondence,
            "round_trip": round_trip,
            "intersection_closed": lattice.intersection_closed,
            "bijection": lattice.correspondence_is_bijection,
        }),
    });

    // d in ker(chi) iff chi in ker(d)
    let mut duality = true;
    for (c, chi) in data.irr.characters().enumerate() {
        let ks = ker_set(data, chi);
        for d in 0..data.coirr.len() {
            let back = ker_set(&dual_data, dual_data.irr.character(d));
            duality &= ks.contains(&d) == back.contains(&c);
        }
    }
    findings.push(Finding {
        id: "kernel_duality",
        passed: duality,
        detail: Value::Null,
    });

    Ok(TheoremReport {
        algebra: h.name().to_string(),
        dim: h.dim(),
        property_n: pn,
        dual_property_n: pn_dual,
        findings,
    })
}

/// With property (N): the kernel of `d` in `H*` is `(H//N(d))*`, i.e. its kernel set is the
/// pull-back of `Irr(H//N(d))`.
fn quotient_characters_finding(data: &CharacterData, dual_data: &CharacterData, holds: bool) -> Result<Finding> {
    if !holds {
        return Ok(Finding {
            id: "quotient_characters_are_kernels",
            passed: true,
            detail: json!({ "applicable": false }),
        });
    }
    let h = &data.algebra;
    let mut passed = true;
    let mut rows = Vec::new();
    for d in 0..data.coirr.len() {
        let k = n_of_d(data, d, ClosureMode::NormalHopf)?;
        let q = quotient_by_subalgebra(h, &k)?;
        let irr_l = irr_characters(&q.quotient)?;
        let mut pulled = irr_l
            .characters()
            .map(|c| {
                index_of(data, &pull_back(&q.projection, &c.values))
                    .ok_or_else(|| HopfError::Internal("pulled-back character is not irreducible".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        pulled.sort_unstable();
        let kernel_set = ker_set(dual_data, dual_data.irr.character(d));
        let containing: Vec<usize> = data
            .irr
            .characters()
            .enumerate()
            .filter_map(|(c, chi)| {
                kernel_subalgebra(data, chi)
                    .map(|kc| kc.space.contains_subspace(&k.space).then_some(c))
                    .transpose()
            })
            .collect::<Result<_>>()?;
        let kernel_space = kernel_subalgebra(dual_data, dual_data.irr.character(d))?.space;
        let image: Subspace = dual_of_quotient(h, &k)?;
        let ok = pulled == kernel_set && pulled == containing && kernel_space == image;
        passed &= ok;
        rows.push(json!({
            "d": d,
            "n_of_d_dim": k.dim(),
            "kernel_set": kernel_set,
            "quotient_characters": pulled,
            "characters_with_kernel_containing": containing,
            "subspaces_equal": kernel_space == image,
        }));
    }
    Ok(Finding {
        id: "quotient_characters_are_kernels",
        passed,
        detail: json!({ "applicable": true, "cocharacters": rows }),
    })
}
