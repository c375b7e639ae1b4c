use crate::exactmath::matrix::{zero_vector, Vector};
use crate::exactmath::kernel_of_rows;
use crate::hopf::{certify, comul_twice, HopfMorphism, HopfSubalgebraHandle};

/// `HKer(f) = {a : sum a_1 (x) f(a_2) (x) a_3 = sum a_1 (x) 1_B (x) a_2}`, solved as one linear
/// system over `H (x) B (x) H`, with its certified flags.
pub fn hopf_kernel(f: &HopfMorphism) -> HopfSubalgebraHandle {
    let h = &f.source;
    let unit_b = f.target.unit();
    let n = h.dim();
    let m = f.target.dim();
    let field = h.field();
    let images: Vec<Vector> = (0..n)
        .map(|i| {
            let x = h.basis_vec(i);
            let t = comul_twice(h, &x);
            let d = h.comul(&x);
            let mut out = zero_vector(field, n * m * n);
            for p in 0..n {
                for q in 0..n {
                    let row = f.matrix.row(q);
                    for r in 0..n {
                        let c = &t[(p * n + q) * n + r];
                        if c.is_zero() {
                            continue;
                        }
                        for (s, fs) in row.iter().enumerate() {
                            if !fs.is_zero() {
                                out[(p * m + s) * n + r].add_mul(c, fs);
                            }
                        }
                    }
                }
                for r in 0..n {
                    let c = &d[p * n + r];
                    if c.is_zero() {
                        continue;
                    }
                    for (s, us) in unit_b.iter().enumerate() {
                        if !us.is_zero() {
                            out[(p * m + s) * n + r] -= &(c * us);
                        }
                    }
                }
            }
            out
        })
        .collect();
    let rows = (0..n * m * n)
        .map(|coord| images.iter().map(|v| v[coord].clone()).collect::<Vector>())
        .filter(|row| row.iter().any(|c| !c.is_zero()));
    certify(h, kernel_of_rows(field, n, rows))
}
