use crate::exactmath::matrix::Vector;
use crate::exactmath::FieldElem;
use crate::hopf::HopfAlgebraData;

/// The dual Hopf algebra on the dual basis `delta_0, ..., delta_{n-1}`.
///
/// Multiplication and comultiplication swap roles by transposition, unit and counit swap, and the
/// antipode is transposed. Applying it twice returns the original constants entrywise.
pub fn dual(h: &HopfAlgebraData) -> HopfAlgebraData {
    let n = h.dim();
    let mut mult = Vec::with_capacity(n * n * n);
    let mut comult = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // (delta_i delta_j)(b_k) = (delta_i (x) delta_j)(Delta b_k)
                mult.push(h.comult_coeff(k, i, j).clone());
                // Delta(delta_i)(b_j (x) b_k) = delta_i(b_j b_k)
                comult.push(h.mult_coeff(j, k, i).clone());
            }
        }
    }
    let unit: Vector = h.counit().to_vec();
    let counit: Vec<FieldElem> = h.unit().to_vec();
    HopfAlgebraData::new(
        dual_name(h.name()),
        h.field(),
        n,
        mult,
        unit,
        comult,
        counit,
        h.antipode().transpose(),
    )
    .expect("dual of well-shaped constants is well-shaped")
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}
