//! Dense matrices over a cyclotomic field and exact Gauss-Jordan elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::cyclo::{CycloField, FieldElem};
use super::subspace::Subspace;
use crate::error::MathError;

pub type Vector = Vec<FieldElem>;

pub fn zero_vector(field: &'static CycloField, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &'static CycloField, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[FieldElem]) -> bool {
    v.iter().all(FieldElem::is_zero)
}

/// `acc += c * v`.
pub fn axpy(acc: &mut [FieldElem], c: &FieldElem, v: &[FieldElem]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn scale_vector(c: &FieldElem, v: &[FieldElem]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vectors(a: &[FieldElem], b: &[FieldElem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[FieldElem], b: &[FieldElem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: &'static CycloField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(field: &'static CycloField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(
        field: &'static CycloField,
        cols: usize,
        rows: Vec<Vector>,
    ) -> Result<Self, MathError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MathError::Shape(format!("row of length {} in {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &'static CycloField, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MathError> {
        if self.cols != rhs.rows {
            return Err(MathError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    out.data[i * rhs.cols + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &[FieldElem]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix.
    pub fn vector_mul(&self, v: &[FieldElem]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector-matrix shape mismatch");
        let mut out = zero_vector(self.field, self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: scale_vector(c, &self.data),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &FieldElem, other: &Matrix) {
        axpy(&mut self.data, c, &other.data);
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElem {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let ech = Echelon::from_rows(self.field, self.cols, self.row_vectors());
        let rank = ech.rank();
        let mut rows = ech.into_rows();
        rows.resize(self.rows, zero_vector(self.field, self.cols));
        (
            Matrix::from_rows(self.field, self.cols, rows).expect("row lengths preserved"),
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.field, self.cols, self.row_vectors()).rank()
    }

    /// The null space `{x : self * x = 0}` as a subspace of `field^cols`.
    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.field, self.cols, self.row_vectors())
    }

    /// A particular solution `x` of `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>, MathError> {
        if rhs.rows != self.rows {
            return Err(MathError::Shape(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let n = self.cols;
        let width = n + rhs.cols;
        let aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(rhs.row(i));
                r
            })
            .collect();
        let ech = Echelon::from_rows(self.field, width, aug);
        if ech.pivots().iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, rhs.cols);
        for (p, row) in ech.pivots().iter().zip(ech.rows()) {
            for c in 0..rhs.cols {
                x[(*p, c)] = row[n + c].clone();
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows)).ok()??;
        (self.rank() == self.rows).then_some(x)
    }
}

/// Null space of the matrix with the given rows, streaming them through an incremental echelon
/// form. Stops early once the row space is full.
pub fn kernel_of_rows<I>(field: &'static CycloField, n: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = Vector>,
{
    let mut ech = Echelon::new(field, n);
    for r in rows {
        ech.insert(r);
        if ech.rank() == n {
            break;
        }
    }
    ech.null_space()
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(z{}):", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A row space kept in reduced row-echelon form as rows are inserted.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: &'static CycloField,
    width: usize,
    pivots: Vec<usize>,
    rows: Vec<Vector>,
}

impl Echelon {
    pub fn new(field: &'static CycloField, width: usize) -> Self {
        Echelon {
            field,
            width,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vector>>(
        field: &'static CycloField,
        width: usize,
        rows: I,
    ) -> Self {
        let mut e = Self::new(field, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    /// Reduces `v` against the current rows; the result vanishes on every pivot column.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row) in self.pivots.iter().zip(&self.rows) {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        is_zero_vector(&self.reduce(v.to_vec()))
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.width, "echelon row width mismatch");
        if is_zero_vector(&v) {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        if !v[p].is_one() {
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// `{x : r . x = 0 for every row r}`.
    pub fn null_space(&self) -> Subspace {
        let n = self.width;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.field, n);
            v[f] = self.field.one();
            for (p, row) in self.pivots.iter().zip(&self.rows) {
                if !row[f].is_zero() {
                    v[*p] = -&row[f];
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, n, basis)
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_echelon(self.clone())
    }
}
