//! Cyclotomic fields `Q(zeta_N)` in the power basis `1, zeta, ..., zeta^(phi(N)-1)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::MathError;

/// The field `Q(zeta_N)`.
///
/// Fields are interned: [`field_make`] returns the same `&'static` instance for the same order,
/// so elements carry a plain reference and field identity is a pointer comparison.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Coefficients of the N-th cyclotomic polynomial, lowest degree first. Monic.
    modulus: Vec<BigInt>,
    /// `zeta^k` reduced modulo the cyclotomic polynomial, for `k` in `0..order`.
    powers: Vec<Vec<BigInt>>,
}

static FIELDS: OnceLock<RwLock<HashMap<u32, &'static CycloField>>> = OnceLock::new();

/// Returns the (interned) field `Q(zeta_N)`.
pub fn field_make(order: u32) -> Result<&'static CycloField, MathError> {
    if order == 0 {
        return Err(MathError::InvalidFieldOrder);
    }
    let table = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = table.read().unwrap().get(&order) {
        return Ok(f);
    }
    let mut guard = table.write().unwrap();
    let f = *guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(CycloField::build(order))));
    Ok(f)
}

/// `Q` itself, realized as `Q(zeta_1)`.
pub fn rationals() -> &'static CycloField {
    field_make(1).expect("order 1 is valid")
}

/// Coefficients of the N-th cyclotomic polynomial via `x^N - 1 = prod_{d | N} Phi_d`.
pub fn cyclotomic_polynomial(order: u32) -> Vec<BigInt> {
    let n = order as usize;
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = -BigInt::one();
    poly[n] = BigInt::one();
    for d in 1..order {
        if order.is_multiple_of(d) {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl CycloField {
    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[deg - 1].clone();
            let mut next = vec![BigInt::zero(); deg];
            for k in (1..deg).rev() {
                next[k] = cur[k - 1].clone();
            }
            for k in 0..deg {
                next[k] -= &top * &modulus[k];
            }
            cur = next;
        }
        CycloField { order, modulus, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `phi(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(&'static self) -> FieldElem {
        FieldElem {
            field: self,
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&'static self) -> FieldElem {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&'static self, n: i64) -> FieldElem {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&'static self, q: Rational) -> FieldElem {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    /// `zeta^k`, with `k` taken modulo `N`.
    pub fn zeta_pow(&'static self, k: i64) -> FieldElem {
        let idx = k.rem_euclid(self.order as i64) as usize;
        FieldElem {
            field: self,
            coeffs: self.powers[idx].iter().cloned().map(Rational::from_integer).collect(),
        }
    }

    /// Builds an element from exactly `phi(N)` power-basis coefficients.
    pub fn from_coeffs(&'static self, coeffs: Vec<Rational>) -> Result<FieldElem, MathError> {
        if coeffs.len() != self.degree() {
            return Err(MathError::CoefficientLength {
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        Ok(FieldElem { field: self, coeffs })
    }

    /// Reduces an arbitrary polynomial in `zeta` (lowest degree first).
    pub fn from_poly(&'static self, poly: &[Rational]) -> FieldElem {
        let mut out = vec![Rational::zero(); self.degree()];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.powers[k % self.order as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * Rational::from_integer(r.clone());
                }
            }
        }
        FieldElem { field: self, coeffs: out }
    }

    /// A primitive `order`-th root of unity when `order` divides `N`.
    pub fn root_of_unity(&'static self, order: u32) -> Option<FieldElem> {
        if order == 0 || !self.order.is_multiple_of(order) {
            return None;
        }
        Some(self.zeta_pow((self.order / order) as i64))
    }

    /// Representatives `k` of `(Z/N)^x / {+-1}`; the embeddings `zeta -> e^(2 pi i k/N)` for these
    /// `k` determine an element.
    pub fn embedding_representatives(&self) -> Vec<u32> {
        let n = self.order;
        (1..=n.max(1))
            .filter(|&k| k.gcd(&n) == 1 && (k <= n - k || n <= 2))
            .take(self.degree().div_ceil(2).max(1))
            .collect()
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}
impl Eq for CycloField {}

/// An element of `Q(zeta_N)`, stored reduced in the power basis.
#[derive(Clone)]
pub struct FieldElem {
    field: &'static CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl FieldElem {
    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    /// The value as a machine integer, if the element is a small rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        q.is_integer().then(|| q.to_integer().to_i64()).flatten()
    }

    pub fn scale(&self, q: &Rational) -> FieldElem {
        FieldElem {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Applies the Galois automorphism `zeta -> zeta^k` (`k` coprime to `N`).
    pub fn galois(&self, k: i64) -> FieldElem {
        let n = self.field.order as i64;
        let poly: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = vec![Rational::zero(); self.field.degree()];
        for (j, c) in poly {
            let idx = (j as i64 * k).rem_euclid(n) as usize;
            for (o, r) in out.iter_mut().zip(&self.field.powers[idx]) {
                if !r.is_zero() {
                    *o += c * Rational::from_integer(r.clone());
                }
            }
        }
        FieldElem { field: self.field, coeffs: out }
    }

    /// Complex conjugation, i.e. `zeta -> zeta^(N-1)`.
    pub fn conj(&self) -> FieldElem {
        self.galois(-1)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the modulus.
    pub fn inv(&self) -> Result<FieldElem, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.from_rational(q.recip()));
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect();
        let (g, s) = poly::ext_gcd_left(&self.coeffs, &modulus);
        // g is a nonzero constant since the modulus is irreducible
        debug_assert_eq!(g.len(), 1);
        let c = g[0].recip();
        let s: Vec<Rational> = s.iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(&s))
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem, MathError> {
        check_same(self, other)?;
        Ok(self * &other.inv()?)
    }

    /// Image under the embedding `zeta -> e^(2 pi i k / N)`.
    pub fn embed(&self, k: u32) -> Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

fn check_same(a: &FieldElem, b: &FieldElem) -> Result<(), MathError> {
    if a.field.order != b.field.order {
        return Err(MathError::FieldMismatch(a.field.order, b.field.order));
    }
    Ok(())
}

/// Arithmetic operator selector for [`elem_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic; operators panic on mismatched fields, this reports it.
pub fn elem_arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, MathError> {
    check_same(a, b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.try_div(b)?,
    })
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        assert_eq!(self.field.order, rhs.field.order, "field mismatch");
        FieldElem {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        assert_eq!(self.field.order, rhs.field.order, "field mismatch");
        FieldElem {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        assert_eq!(self.field.order, rhs.field.order, "field mismatch");
        let deg = self.field.degree();
        if deg == 1 {
            return FieldElem {
                field: self.field,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        let mut conv = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rational> = conv[..deg].to_vec();
        for (k, c) in conv.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            let row = &self.field.powers[k % self.field.order as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * Rational::from_integer(r.clone());
                }
            }
        }
        FieldElem { field: self.field, coeffs: out }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(mut self) -> FieldElem {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        assert_eq!(self.field.order, rhs.field.order, "field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        assert_eq!(self.field.order, rhs.field.order, "field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl FieldElem {
    /// `self += a * b`, the inner step of every dense product.
    pub fn add_mul(&mut self, a: &FieldElem, b: &FieldElem) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.field.degree() == 1 {
            self.coeffs[0] += &a.coeffs[0] * &b.coeffs[0];
            return;
        }
        let p = a * b;
        *self += &p;
    }
}

/// Serialized as the array of power-basis coefficients, each a rational string.
impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(super::format_rational))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [Q(z{})]", self.field.order)
    }
}

mod poly {
    //! Dense polynomials over `Q`, lowest degree first, used only for inversion.
    use super::Rational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<Rational>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn sub_scaled_shift(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            a[i + shift] -= c * bi;
        }
    }

    fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead = b[db].clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
        while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() / &lead;
            sub_scaled_shift(&mut r, b, &c, shift);
            q[shift] = c;
            r.pop();
            if r.is_empty() {
                r.push(Rational::zero());
            }
            trim(&mut r);
        }
        (q, r)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// Returns `(g, s)` with `s*a = g (mod b)` and `g = gcd(a, b)`.
    pub fn ext_gcd_left(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r0 = b.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![num_traits::One::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        (r0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(field_make(4).unwrap().degree(), 2);
        assert_eq!(field_make(1).unwrap().degree(), 1);
        assert!(field_make(0).is_err());
    }

    #[test]
    fn reduction_examples() {
        let f3 = field_make(3).unwrap();
        let z = f3.zeta_pow(1);
        assert_eq!(&z * &z, f3.from_coeffs(vec![q(-1, 1), q(-1, 1)]).unwrap());

        let f4 = field_make(4).unwrap();
        let i = f4.zeta_pow(1);
        let one = f4.one();
        assert_eq!((&one + &i) * (&one - &i), f4.from_int(2));

        let f1 = rationals();
        let a = f1.from_rational(q(3, 2));
        let b = f1.from_rational(q(4, 3));
        assert_eq!(&a * &b, f1.from_int(2));
    }

    #[test]
    fn conjugation_examples() {
        let f4 = field_make(4).unwrap();
        assert_eq!(f4.zeta_pow(1).conj(), -f4.zeta_pow(1));
        let f3 = field_make(3).unwrap();
        assert_eq!(f3.zeta_pow(1).conj(), f3.from_coeffs(vec![q(-1, 1), q(-1, 1)]).unwrap());
        let f1 = rationals();
        assert_eq!(f1.from_rational(q(5, 7)).conj(), f1.from_rational(q(5, 7)));
    }

    #[test]
    fn division_and_errors() {
        let f8 = field_make(8).unwrap();
        let a = f8.from_poly(&[q(1, 1), q(2, 3), q(0, 1), q(-5, 2)]);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(f8.zero().inv(), Err(MathError::DivisionByZero));
        let f3 = field_make(3).unwrap();
        assert!(matches!(
            elem_arith(&f3.one(), &f8.one(), ArithOp::Add),
            Err(MathError::FieldMismatch(3, 8))
        ));
        assert_eq!(
            elem_arith(&f8.one(), &f8.zero(), ArithOp::Div),
            Err(MathError::DivisionByZero)
        );
    }

    #[test]
    fn embedding_matches_exponential() {
        let f8 = field_make(8).unwrap();
        let z = f8.zeta_pow(1).embed(1);
        assert!((z - Complex64::from_polar(1.0, std::f64::consts::PI / 4.0)).norm() < 1e-12);
        assert_eq!(f8.embedding_representatives(), vec![1, 3]);
        assert_eq!(field_make(3).unwrap().embedding_representatives(), vec![1]);
        assert_eq!(field_make(1).unwrap().embedding_representatives(), vec![1]);
        assert_eq!(field_make(2).unwrap().embedding_representatives(), vec![1]);
    }
}
