//! Eigenvalue location: numeric roots under the complex embeddings, exact reconstruction in
//! `Q(zeta_N)`, exact certification.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{HopfError, Result};
use crate::exactmath::{CycloField, FieldElem, Rational};

/// Roots closer than this at some embedding are not trusted to be distinct.
const SEPARATION: f64 = 1.0 / (1u64 << 40) as f64;
const RECONSTRUCT_TOL: f64 = 1e-7;
const MAX_COMBINATIONS: usize = 1 << 16;

/// Evaluates a polynomial (lowest degree first) exactly.
pub(crate) fn eval_poly(p: &[FieldElem], x: &FieldElem) -> FieldElem {
    let mut acc = x.field().zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// All roots in `Q(zeta_N)` of a squarefree polynomial that splits there, certified exactly.
///
/// Fails with [`HopfError::FieldTooSmall`] when fewer than `deg p` roots can be certified.
pub(crate) fn split_roots(p: &[FieldElem], denominator_bound: u64) -> Result<Vec<FieldElem>> {
    let field = p[0].field();
    let degree = p.len() - 1;
    let reps = field.embedding_representatives();
    let mut located = Vec::with_capacity(reps.len());
    for &k in &reps {
        let coeffs: Vec<Complex64> = p.iter().map(|c| c.embed(k)).collect();
        located.push(locate_separated(&coeffs)?);
    }
    let system = EmbeddingSystem::new(field, &reps);
    let mut found: Vec<FieldElem> = Vec::new();
    let combos: usize = located[1..].iter().map(Vec::len).product();
    if combos > MAX_COMBINATIONS {
        return Err(HopfError::Internal(format!(
            "{combos} embedding combinations per root exceed the search limit"
        )));
    }
    for first in &located[0] {
        let mut choice = vec![0usize; reps.len() - 1];
        loop {
            let values: Vec<Complex64> = std::iter::once(*first)
                .chain(choice.iter().enumerate().map(|(t, &c)| located[t + 1][c]))
                .collect();
            if let Some(lambda) = system.reconstruct(&values, denominator_bound) {
                if eval_poly(p, &lambda).is_zero() && !found.contains(&lambda) {
                    found.push(lambda);
                    break;
                }
            }
            if !advance(&mut choice, &located[1..]) {
                break;
            }
        }
    }
    if found.len() != degree {
        return Err(HopfError::FieldTooSmall {
            order: field.order(),
            detail: format!(
                "certified {} of {degree} eigenvalues with denominators bounded by {denominator_bound}",
                found.len()
            ),
        });
    }
    Ok(found)
}

fn advance(choice: &mut [usize], lists: &[Vec<Complex64>]) -> bool {
    for (c, list) in choice.iter_mut().zip(lists) {
        *c += 1;
        if *c < list.len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// Roots of a monic complex polynomial, pairwise separated; one retry from a rotated start.
fn locate_separated(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    for (attempt, rotation) in [0.4, 1.3].into_iter().enumerate() {
        let roots = aberth(coeffs, rotation, 500 * (attempt + 1));
        let separated = roots
            .iter()
            .enumerate()
            .all(|(i, a)| roots[..i].iter().all(|b| (a - b).norm() > SEPARATION));
        if separated {
            return Ok(roots);
        }
    }
    Err(HopfError::Internal(format!(
        "numeric eigenvalues not separated by 2^-40 (degree {})",
        coeffs.len() - 1
    )))
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
fn aberth(coeffs: &[Complex64], rotation: f64, max_iter: usize) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if d == 1 {
        return vec![-monic[0]];
    }
    let radius = 1.0 + monic[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / d as f64 + rotation;
            Complex64::from_polar(radius * 0.5, angle)
        })
        .collect();
    for _ in 0..max_iter {
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= w;
            worst = worst.max(w.norm() / z[i].norm().max(1.0));
        }
        if worst < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *zi);
            if dp.norm() > 0.0 {
                *zi -= p / dp;
            }
        }
    }
    z
}

/// The real linear system sending power-basis coordinates to the chosen embeddings.
struct EmbeddingSystem {
    field: &'static CycloField,
    inverse: Vec<Vec<f64>>,
}

impl EmbeddingSystem {
    fn new(field: &'static CycloField, reps: &[u32]) -> Self {
        let phi = field.degree();
        let n = field.order() as f64;
        let mut rows = Vec::with_capacity(phi);
        for &k in reps {
            let angle = |j: usize| std::f64::consts::TAU * (j as f64) * (k as f64) / n;
            rows.push((0..phi).map(|j| angle(j).cos()).collect::<Vec<_>>());
            if rows.len() < phi {
                rows.push((0..phi).map(|j| angle(j).sin()).collect());
            }
        }
        EmbeddingSystem {
            field,
            inverse: invert(rows),
        }
    }

    fn reconstruct(&self, values: &[Complex64], bound: u64) -> Option<FieldElem> {
        let phi = self.field.degree();
        let rhs: Vec<f64> = values
            .iter()
            .flat_map(|v| [v.re, v.im])
            .take(phi)
            .collect();
        let coeffs = self
            .inverse
            .iter()
            .map(|row| {
                let x: f64 = row.iter().zip(&rhs).map(|(a, b)| a * b).sum();
                nearest_rational(x, bound)
            })
            .collect::<Option<Vec<Rational>>>()?;
        self.field.from_coeffs(coeffs).ok()
    }
}

fn invert(mut a: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .expect("nonempty");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                for j in 0..n {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    inv
}

/// Best rational approximation with denominator at most `bound`, if it is within tolerance.
fn nearest_rational(x: f64, bound: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    let mut best = None;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        if k2 > bound as i128 {
            break;
        }
        best = Some((h2, k2));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-12 {
            break;
        }
        r = 1.0 / frac;
    }
    let (h, k) = best?;
    let approx = h as f64 / k as f64;
    if (approx - x).abs() > RECONSTRUCT_TOL * x.abs().max(1.0) {
        return None;
    }
    Some(Rational::new(BigInt::from(h), BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field_make;

    #[test]
    fn rational_approximation() {
        assert_eq!(nearest_rational(0.5, 10), Some(Rational::new(1.into(), 2.into())));
        assert_eq!(nearest_rational(-2.0 / 3.0, 10), Some(Rational::new((-2).into(), 3.into())));
        assert_eq!(nearest_rational(3.0, 1), Some(Rational::from_integer(3.into())));
        assert_eq!(nearest_rational(std::f64::consts::PI, 10), None);
    }

    #[test]
    fn splits_cyclotomic_quadratics() {
        // t^2 + 1 over Q(zeta_4): roots +-i
        let f = field_make(4).unwrap();
        let p = vec![f.one(), f.zero(), f.one()];
        let roots = split_roots(&p, 16).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&f.zeta_pow(1)) && roots.contains(&-f.zeta_pow(1)));

        // t^2 - 2 over Q(zeta_8): +-(zeta + zeta^7)
        let f = field_make(8).unwrap();
        let p = vec![f.from_int(-2), f.zero(), f.one()];
        let roots = split_roots(&p, 64).unwrap();
        let sqrt2 = &f.zeta_pow(1) + &f.zeta_pow(7);
        assert!(roots.contains(&sqrt2) && roots.contains(&-sqrt2));
    }

    #[test]
    fn reports_a_field_that_is_too_small() {
        let q = field_make(1).unwrap();
        let p = vec![q.one(), q.zero(), q.one()];
        assert!(matches!(split_roots(&p, 16), Err(HopfError::FieldTooSmall { order: 1, .. })));
    }

    #[test]
    fn cubic_with_rational_roots() {
        let f = field_make(3).unwrap();
        // (t - 1)(t + 2)(t - 1/2) = t^3 + t^2/2 - 5t/2 + 1
        let h = |p: i64, q: i64| f.from_rational(Rational::new(p.into(), q.into()));
        let p = vec![h(1, 1), h(-5, 2), h(1, 2), h(1, 1)];
        let mut roots = split_roots(&p, 12).unwrap();
        roots.sort_by_key(|r| r.coeffs()[0].clone());
        assert_eq!(roots, vec![h(-2, 1), h(1, 2), h(1, 1)]);
    }
}
