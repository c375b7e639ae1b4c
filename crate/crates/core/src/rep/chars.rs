//! Character arithmetic, regular and induced characters, and the map `phi : H* -> H`.

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{add_vectors, axpy, dot, Vector};
use crate::exactmath::{FieldElem, Matrix, Subspace};
use crate::hopf::{augmentation, integral, HopfAlgebraData, HopfSubalgebraHandle};
use crate::rep::irr::{regular_trace, Character, IrrData};

/// Operations of [`char_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharOp {
    /// `(a b)(x) = sum a(x_1) b(x_2)`.
    Product,
    /// `a* = a o S`; the second argument is ignored.
    Star,
    Sum,
}

pub fn char_eval(chi: &Character, d: &[FieldElem]) -> FieldElem {
    chi.eval(d)
}

pub fn char_ops(h: &HopfAlgebraData, a: &Character, b: &Character, op: CharOp) -> Character {
    match op {
        CharOp::Product => char_product(h, a, b),
        CharOp::Star => char_star(h, a),
        CharOp::Sum => Character::new(h, add_vectors(&a.values, &b.values)),
    }
}

pub fn char_product(h: &HopfAlgebraData, a: &Character, b: &Character) -> Character {
    let values = (0..h.dim())
        .map(|i| {
            let mut acc = h.field().zero();
            for (j, k, c) in h.comult_terms(i) {
                if a.values[*j].is_zero() || b.values[*k].is_zero() {
                    continue;
                }
                acc.add_mul(c, &(&a.values[*j] * &b.values[*k]));
            }
            acc
        })
        .collect();
    Character::new(h, values)
}

pub fn char_star(h: &HopfAlgebraData, a: &Character) -> Character {
    Character::new(h, h.antipode().mul_vector(&a.values))
}

pub fn char_power(h: &HopfAlgebraData, a: &Character, k: u32) -> Character {
    let mut acc = Character::new(h, h.counit().to_vec());
    for _ in 0..k {
        acc = char_product(h, &acc, a);
    }
    acc
}

/// Multiplicities of `c` in the basis `Irr(H)`; they must be nonnegative integers.
pub fn decompose(h: &HopfAlgebraData, c: &Character, irr: &IrrData) -> Result<Vec<u32>> {
    let cols: Vec<Vector> = irr.characters().map(|x| x.values.clone()).collect();
    let m = Matrix::from_columns(h.field(), h.dim(), &cols);
    let rhs = Matrix::from_columns(h.field(), h.dim(), std::slice::from_ref(&c.values));
    let sol = m
        .solve(&rhs)?
        .ok_or_else(|| HopfError::NotACharacter("not in the span of Irr(H)".into()))?;
    (0..irr.len())
        .map(|i| {
            sol[(i, 0)]
                .as_integer()
                .filter(|&v| v >= 0)
                .map(|v| v as u32)
                .ok_or_else(|| {
                    HopfError::NotACharacter(format!("multiplicity {} of Irr[{i}]", sol[(i, 0)]))
                })
        })
        .collect()
}

/// `chi_reg(x) = trace(L_x)`, asserted equal to `sum chi(1) chi`.
pub fn regular_character(h: &HopfAlgebraData, irr: &IrrData) -> Result<Character> {
    let reg = Character::new(h, regular_trace(h));
    let mut expected = h.zero_vec();
    for b in &irr.blocks {
        axpy(&mut expected, &h.field().from_int(b.degree as i64), &b.character.values);
    }
    if expected != reg.values {
        return Err(HopfError::Internal("regular character differs from sum chi(1) chi".into()));
    }
    Ok(reg)
}

/// Trace of `L_{b_i}` restricted to a left ideal `j` (coordinates are read at the pivots).
fn trace_on_left_ideal(h: &HopfAlgebraData, j: &Subspace, i: usize) -> FieldElem {
    let mut t = h.field().zero();
    for (w, &p) in j.basis().iter().zip(j.pivots()) {
        t += &h.mul_basis_left(i, w)[p];
    }
    t
}

/// `H K^+`, the left ideal generated by the augmentation of `k`.
pub fn left_ideal_of_augmentation(h: &HopfAlgebraData, k: &Subspace) -> Subspace {
    let kplus = augmentation(h, k);
    Subspace::from_vectors(
        h.field(),
        h.dim(),
        (0..h.dim()).flat_map(|i| kplus.basis().iter().map(move |w| h.mul_basis_left(i, w))),
    )
}

/// The character of the left `H`-module `H / (H K^+)`.
pub fn induced_trivial_character(h: &HopfAlgebraData, k: &HopfSubalgebraHandle) -> Character {
    let j = left_ideal_of_augmentation(h, &k.space);
    let reg = regular_trace(h);
    let values = (0..h.dim())
        .map(|i| &reg[i] - &trace_on_left_ideal(h, &j, i))
        .collect();
    Character::new(h, values)
}

/// The matrix of `phi(f) = sum f(S(Lambda_1)) Lambda_2` acting on column coordinate vectors.
pub fn phi_matrix(h: &HopfAlgebraData) -> Result<Matrix> {
    let lambda = integral(h)?;
    let n = h.dim();
    let t = h.comul(&lambda);
    let s = h.antipode();
    let mut p = Matrix::zeros(h.field(), n, n);
    for j in 0..n {
        for k in 0..n {
            let c = &t[j * n + k];
            if c.is_zero() {
                continue;
            }
            for l in 0..n {
                if !s[(j, l)].is_zero() {
                    p[(k, l)].add_mul(c, &s[(j, l)]);
                }
            }
        }
    }
    Ok(p)
}

/// `phi` with its inverse; the matrix is certified invertible.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub matrix: Matrix,
    pub inverse: Matrix,
}

impl PhiMap {
    pub fn new(h: &HopfAlgebraData) -> Result<Self> {
        let matrix = phi_matrix(h)?;
        let inverse = matrix
            .inverse()
            .ok_or_else(|| HopfError::NotSemisimple("phi is singular".into()))?;
        Ok(PhiMap { matrix, inverse })
    }

    pub fn apply(&self, f: &[FieldElem]) -> Vector {
        self.matrix.mul_vector(f)
    }

    pub fn apply_inverse(&self, x: &[FieldElem]) -> Vector {
        self.inverse.mul_vector(x)
    }
}

pub fn phi_map(h: &HopfAlgebraData, f: &[FieldElem]) -> Result<Vector> {
    Ok(phi_matrix(h)?.mul_vector(f))
}

pub fn phi_inverse(h: &HopfAlgebraData, x: &[FieldElem]) -> Result<Vector> {
    Ok(PhiMap::new(h)?.apply_inverse(x))
}

/// Sanity report for `|chi(d)| <= eps(d) chi(1)` through the embedding `zeta -> e^(2 pi i/N)`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ValueBoundReport {
    pub pairs: usize,
    pub within_bound: bool,
    pub max_ratio: f64,
}

pub fn value_bound_report(irr: &IrrData, coirr: &IrrData) -> ValueBoundReport {
    let mut max_ratio: f64 = 0.0;
    let mut pairs = 0;
    for chi in irr.characters() {
        for d in coirr.characters() {
            let v = dot(&chi.values, &d.values).embed(1).norm();
            let bound = d.degree.embed(1).re * chi.degree.embed(1).re;
            max_ratio = max_ratio.max(v / bound);
            pairs += 1;
        }
    }
    ValueBoundReport {
        pairs,
        within_bound: max_ratio <= 1.0 + 1e-9,
        max_ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{group_algebra, GroupTable};
    use crate::exactmath::Rational;
    use crate::hopf::{certify, closure, ClosureMode};
    use crate::rep::irr::{irr_characters, irr_cocharacters};

    fn s3() -> (GroupTable, HopfAlgebraData, IrrData) {
        let t = GroupTable::symmetric3();
        let h = group_algebra(&t, 3).unwrap();
        let irr = irr_characters(&h).unwrap();
        (t, h, irr)
    }

    #[test]
    fn sign_values() {
        let (t, h, irr) = s3();
        let sign = irr.character(1);
        let r = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let s = (0..6).find(|&g| t.element_order(g) == 2).unwrap();
        assert!(char_eval(sign, &h.basis_vec(r)).is_one());
        assert_eq!(char_eval(sign, &h.basis_vec(s)), -h.field().one());
        assert_eq!(char_eval(irr.character(2), h.unit()), h.field().from_int(2));
    }

    #[test]
    fn products_stars_and_decomposition() {
        let (_, h, irr) = s3();
        let sign = irr.character(1);
        let chi2 = irr.character(2);
        assert_eq!(char_ops(&h, sign, sign, CharOp::Product), *irr.character(0));
        for chi in irr.characters() {
            assert_eq!(char_ops(&h, chi, chi, CharOp::Star), *chi);
        }
        let sq = char_product(&h, chi2, chi2);
        assert_eq!(decompose(&h, &sq, &irr).unwrap(), vec![1, 1, 1]);
        let sum = char_ops(&h, sign, chi2, CharOp::Sum);
        assert_eq!(decompose(&h, &sum, &irr).unwrap(), vec![0, 1, 1]);
        let neg = Character::new(&h, sign.values.iter().map(|v| -v).collect());
        assert!(matches!(decompose(&h, &neg, &irr), Err(HopfError::NotACharacter(_))));
    }

    #[test]
    fn regular_character_of_c2_and_s3() {
        let h = group_algebra(&GroupTable::cyclic(2), 2).unwrap();
        let irr = irr_characters(&h).unwrap();
        let reg = regular_character(&h, &irr).unwrap();
        assert_eq!(reg.values, vec![h.field().from_int(2), h.field().zero()]);
        let (_, h, irr) = s3();
        let reg = regular_character(&h, &irr).unwrap();
        assert_eq!(decompose(&h, &reg, &irr).unwrap(), vec![1, 1, 2]);
    }

    #[test]
    fn induced_characters() {
        let (t, h, irr) = s3();
        let one = certify(&h, h.unit_span());
        let reg = regular_character(&h, &irr).unwrap();
        assert_eq!(induced_trivial_character(&h, &one), reg);
        let all = certify(&h, Subspace::full(h.field(), 6));
        assert_eq!(induced_trivial_character(&h, &all).values, h.counit());
        let r = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let a3 = closure(&h, &Subspace::from_vectors(h.field(), 6, [h.basis_vec(r)]), ClosureMode::Hopf).unwrap();
        let ind = induced_trivial_character(&h, &a3);
        assert_eq!(decompose(&h, &ind, &irr).unwrap(), vec![1, 1, 0]);
    }

    #[test]
    fn phi_on_c2() {
        let h = group_algebra(&GroupTable::cyclic(2), 2).unwrap();
        let f = h.field();
        let half = f.from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(phi_map(&h, &h.basis_vec(0)).unwrap(), vec![half.clone(), f.zero()]);
        assert_eq!(phi_map(&h, &h.basis_vec(1)).unwrap(), vec![f.zero(), half]);
        let x = vec![f.from_int(3), f.from_int(-1)];
        assert_eq!(phi_map(&h, &phi_inverse(&h, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn value_bound_holds_on_s3() {
        let (_, h, irr) = s3();
        let co = irr_cocharacters(&h).unwrap();
        let r = value_bound_report(&irr, &co);
        assert_eq!(r.pairs, 18);
        assert!(r.within_bound);
    }
}
