//! Hopf algebras given by structure constants on a basis `b_0, ..., b_{n-1}`.

use std::fmt;

use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{axpy, zero_vector, Vector};
use crate::exactmath::{CycloField, FieldElem, Matrix, Subspace};

/// Structure constants of a finite-dimensional Hopf algebra.
///
/// * `b_i b_j = sum_k mult[i][j][k] b_k`
/// * `1 = sum_i unit[i] b_i`
/// * `Delta(b_i) = sum_{j,k} comult[i][j][k] b_j (x) b_k`
/// * `eps(b_i) = counit[i]`
/// * `S(b_i) = sum_j antipode[(i, j)] b_j` (row `i` is the image of `b_i`)
///
/// Construction only checks shapes; [`verify_hopf`] checks the axioms.
#[derive(Clone)]
pub struct HopfAlgebraData {
    name: String,
    field: &'static CycloField,
    dim: usize,
    mult: Vec<FieldElem>,
    unit: Vector,
    comult: Vec<FieldElem>,
    counit: Vector,
    antipode: Matrix,
    mult_sparse: Vec<Vec<(usize, FieldElem)>>,
    comult_sparse: Vec<Vec<(usize, usize, FieldElem)>>,
}

/// A tensor in `H (x) H`, stored densely with index `j * n + k`.
pub type Tensor2 = Vector;

impl HopfAlgebraData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: &'static CycloField,
        dim: usize,
        mult: Vec<FieldElem>,
        unit: Vector,
        comult: Vec<FieldElem>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = dim;
        if n == 0 {
            return Err(HopfError::Malformed("dimension must be positive".into()));
        }
        let cube = n * n * n;
        let shape_err = |what: &str, found: usize, expected: usize| {
            HopfError::Malformed(format!("{what} has {found} entries, expected {expected}"))
        };
        if mult.len() != cube {
            return Err(shape_err("mult", mult.len(), cube));
        }
        if comult.len() != cube {
            return Err(shape_err("comult", comult.len(), cube));
        }
        if unit.len() != n {
            return Err(shape_err("unit", unit.len(), n));
        }
        if counit.len() != n {
            return Err(shape_err("counit", counit.len(), n));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(shape_err("antipode", antipode.rows() * antipode.cols(), n * n));
        }
        let all = mult
            .iter()
            .chain(&comult)
            .chain(&unit)
            .chain(&counit)
            .chain(antipode.entries());
        for x in all {
            if x.field().order() != field.order() {
                return Err(HopfError::Math(crate::MathError::FieldMismatch(
                    x.field().order(),
                    field.order(),
                )));
            }
        }
        let mult_sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !mult[ij * n + k].is_zero())
                    .map(|k| (k, mult[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        let comult_sparse = (0..n)
            .map(|i| {
                let mut terms = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let c = &comult[(i * n + j) * n + k];
                        if !c.is_zero() {
                            terms.push((j, k, c.clone()));
                        }
                    }
                }
                terms
            })
            .collect();
        Ok(HopfAlgebraData {
            name: name.into(),
            field,
            dim,
            mult,
            unit,
            comult,
            counit,
            antipode,
            mult_sparse,
            comult_sparse,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_tensor(&self) -> &[FieldElem] {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &[FieldElem] {
        &self.comult
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &FieldElem {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &FieldElem {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms `(k, c)` of `b_i b_j`.
    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, FieldElem)] {
        &self.mult_sparse[i * self.dim + j]
    }

    /// Nonzero terms `(j, k, c)` of `Delta(b_i)`.
    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, FieldElem)] {
        &self.comult_sparse[i]
    }

    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn counit(&self) -> &[FieldElem] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn zero_vec(&self) -> Vector {
        zero_vector(self.field, self.dim)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        crate::exactmath::matrix::unit_vector(self.field, self.dim, i)
    }

    pub fn mul(&self, x: &[FieldElem], y: &[FieldElem]) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, m) in &self.mult_sparse[i * n + j] {
                    out[*k].add_mul(&c, m);
                }
            }
        }
        out
    }

    /// `b_i * y`.
    pub fn mul_basis_left(&self, i: usize, y: &[FieldElem]) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vec();
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, m) in &self.mult_sparse[i * n + j] {
                out[*k].add_mul(yj, m);
            }
        }
        out
    }

    /// `x * b_j`.
    pub fn mul_basis_right(&self, x: &[FieldElem], j: usize) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, m) in &self.mult_sparse[i * n + j] {
                out[*k].add_mul(xi, m);
            }
        }
        out
    }

    pub fn comul(&self, x: &[FieldElem]) -> Tensor2 {
        let n = self.dim;
        let mut out = zero_vector(self.field, n * n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult_sparse[i] {
                out[j * n + k].add_mul(xi, c);
            }
        }
        out
    }

    pub fn eps(&self, x: &[FieldElem]) -> FieldElem {
        crate::exactmath::matrix::dot(&self.counit, x)
    }

    pub fn apply_antipode(&self, x: &[FieldElem]) -> Vector {
        self.antipode.vector_mul(x)
    }

    /// Left multiplication by `x` as a matrix acting on column coordinate vectors.
    pub fn left_mult_matrix(&self, x: &[FieldElem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.mult_terms(i, j) == self.mult_terms(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.comult_coeff(i, j, k) == self.comult_coeff(i, k, j))))
    }

    /// The augmentation ideal `ker eps`.
    pub fn augmentation_ideal(&self) -> Subspace {
        crate::exactmath::kernel_of_rows(self.field, self.dim, [self.counit.clone()])
    }

    pub fn unit_span(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.dim, [self.unit.clone()])
    }

    /// `(f (x) g)(t)` for a tensor `t` and linear maps given by their matrices (row convention).
    pub fn tensor_apply(&self, t: &[FieldElem], f: &Matrix, g: &Matrix) -> Vector {
        let n = self.dim;
        let (p, q) = (f.cols(), g.cols());
        let mut out = zero_vector(self.field, p * q);
        for j in 0..n {
            for k in 0..n {
                let c = &t[j * n + k];
                if c.is_zero() {
                    continue;
                }
                for (a, fa) in f.row(j).iter().enumerate() {
                    if fa.is_zero() {
                        continue;
                    }
                    let cf = c * fa;
                    for (b, gb) in g.row(k).iter().enumerate() {
                        out[a * q + b].add_mul(&cf, gb);
                    }
                }
            }
        }
        out
    }

    /// `(phi (x) id)(t)` for a functional `phi`; contracts the left leg.
    pub fn contract_left(&self, phi: &[FieldElem], t: &[FieldElem]) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vec();
        for (j, pj) in phi.iter().enumerate() {
            if pj.is_zero() {
                continue;
            }
            axpy(&mut out, pj, &t[j * n..(j + 1) * n]);
        }
        out
    }

    /// `(id (x) phi)(t)`; contracts the right leg.
    pub fn contract_right(&self, t: &[FieldElem], phi: &[FieldElem]) -> Vector {
        let n = self.dim;
        (0..n)
            .map(|j| crate::exactmath::matrix::dot(&t[j * n..(j + 1) * n], phi))
            .collect()
    }
}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebraData({}, dim {}, Q(z{}))",
            self.name,
            self.dim,
            self.field.order()
        )
    }
}

/// Structure constants compare entrywise; the name is not part of the structure.
impl PartialEq for HopfAlgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.field.order() == other.field.order()
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

/// Outcome of one axiom check; `witness` holds basis indices of a violating instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub algebra: String,
    pub dim: usize,
    pub checks: Vec<AxiomCheck>,
    /// `S^2 = id`; reported separately, it is a consequence of semisimplicity rather than an axiom.
    pub antipode_involutive: bool,
}

impl HopfReport {
    pub fn is_hopf(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn into_result(self) -> Result<HopfReport> {
        match self.first_failure() {
            Some(c) => Err(HopfError::AxiomViolated(format!(
                "{} (witness {:?})",
                c.axiom,
                c.witness.clone().unwrap_or_default()
            ))),
            None => Ok(self),
        }
    }
}

fn check<F>(axiom: &'static str, mut witness: F) -> AxiomCheck
where
    F: FnMut() -> Option<Vec<usize>>,
{
    let witness = witness();
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

fn first_failing<I, F>(items: I, mut ok: F) -> Option<Vec<usize>>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> bool,
{
    items.into_iter().find(|idx| !ok(idx))
}

fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).map(move |j| vec![i, j]))
}

fn triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| vec![i, j, k])))
}

fn singles(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|i| vec![i])
}

/// Multiplies two elements of `H (x) H` componentwise.
pub(crate) fn tensor_mul(h: &HopfAlgebraData, s: &[FieldElem], t: &[FieldElem]) -> Tensor2 {
    let n = h.dim;
    let mut out = zero_vector(h.field, n * n);
    let nz = |v: &[FieldElem]| -> Vec<(usize, usize)> {
        (0..n * n).filter(|&x| !v[x].is_zero()).map(|x| (x / n, x % n)).collect()
    };
    let (ls, rs) = (nz(s), nz(t));
    for &(a, b) in &ls {
        for &(c, d) in &rs {
            let coef = &s[a * n + b] * &t[c * n + d];
            for (p, m1) in h.mult_terms(a, c) {
                let c1 = &coef * m1;
                for (q, m2) in h.mult_terms(b, d) {
                    out[p * n + q].add_mul(&c1, m2);
                }
            }
        }
    }
    out
}

/// `Delta^2(x) = (Delta (x) id) Delta(x)` in `H^(x)3`, index `(p * n + q) * n + r`.
pub fn comul_twice(h: &HopfAlgebraData, x: &[FieldElem]) -> Vector {
    let n = h.dim;
    let mut out = zero_vector(h.field, n * n * n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, k, c) in h.comult_terms(i) {
            let c1 = xi * c;
            for (p, q, d) in h.comult_terms(*j) {
                out[(p * n + q) * n + k].add_mul(&c1, d);
            }
        }
    }
    out
}

fn comul_twice_right(h: &HopfAlgebraData, i: usize) -> Vector {
    let n = h.dim;
    let mut out = zero_vector(h.field, n * n * n);
    for (j, k, c) in h.comult_terms(i) {
        for (q, r, d) in h.comult_terms(*k) {
            out[(j * n + q) * n + r].add_mul(c, d);
        }
    }
    out
}

/// Exhaustive exact check of the bialgebra and antipode axioms on basis elements.
pub fn verify_hopf(h: &HopfAlgebraData) -> HopfReport {
    let n = h.dim;
    let f = h.field;
    let unit = h.unit.clone();
    let mut checks = Vec::new();

    checks.push(check("associativity", || {
        first_failing(triples(n), |t| {
            let ij = h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1]));
            let jk = h.mul(&h.basis_vec(t[1]), &h.basis_vec(t[2]));
            h.mul_basis_right(&ij, t[2]) == h.mul_basis_left(t[0], &jk)
        })
    }));
    checks.push(check("unit", || {
        first_failing(singles(n), |t| {
            let b = h.basis_vec(t[0]);
            h.mul(&unit, &b) == b && h.mul(&b, &unit) == b
        })
    }));
    checks.push(check("coassociativity", || {
        first_failing(singles(n), |t| {
            comul_twice(h, &h.basis_vec(t[0])) == comul_twice_right(h, t[0])
        })
    }));
    checks.push(check("counit", || {
        first_failing(singles(n), |t| {
            let d = h.comul(&h.basis_vec(t[0]));
            let b = h.basis_vec(t[0]);
            h.contract_left(&h.counit, &d) == b && h.contract_right(&d, &h.counit) == b
        })
    }));
    checks.push(check("comultiplication multiplicative", || {
        first_failing(pairs(n), |t| {
            let lhs = h.comul(&h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1])));
            let rhs = tensor_mul(h, &h.comul(&h.basis_vec(t[0])), &h.comul(&h.basis_vec(t[1])));
            lhs == rhs
        })
    }));
    checks.push(check("comultiplication unital", || {
        let d = h.comul(&unit);
        let mut expected = zero_vector(f, n * n);
        for j in 0..n {
            for k in 0..n {
                expected[j * n + k] = &unit[j] * &unit[k];
            }
        }
        (d != expected).then(Vec::new)
    }));
    checks.push(check("counit multiplicative", || {
        first_failing(pairs(n), |t| {
            h.eps(&h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1]))) == &h.counit[t[0]] * &h.counit[t[1]]
        })
    }));
    checks.push(check("counit unital", || (!h.eps(&unit).is_one()).then(Vec::new)));
    checks.push(check("antipode left", || {
        first_failing(singles(n), |t| {
            let mut acc = h.zero_vec();
            for (j, k, c) in h.comult_terms(t[0]) {
                let s = h.apply_antipode(&h.basis_vec(*j));
                let p = h.mul_basis_right(&s, *k);
                axpy(&mut acc, c, &p);
            }
            acc == crate::exactmath::matrix::scale_vector(&h.counit[t[0]], &unit)
        })
    }));
    checks.push(check("antipode right", || {
        first_failing(singles(n), |t| {
            let mut acc = h.zero_vec();
            for (j, k, c) in h.comult_terms(t[0]) {
                let s = h.apply_antipode(&h.basis_vec(*k));
                let p = h.mul_basis_left(*j, &s);
                axpy(&mut acc, c, &p);
            }
            acc == crate::exactmath::matrix::scale_vector(&h.counit[t[0]], &unit)
        })
    }));
    let s2 = h.antipode.mul(&h.antipode).expect("square antipode");
    HopfReport {
        algebra: h.name.clone(),
        dim: n,
        checks,
        antipode_involutive: s2 == Matrix::identity(f, n),
    }
}
