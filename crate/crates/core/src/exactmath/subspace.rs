//! Subspaces held in canonical reduced row-echelon form, so equality is entrywise.

use std::fmt;

use super::cyclo::{CycloField, FieldElem};
use super::matrix::{zero_vector, Echelon, Matrix, Vector};
use crate::error::MathError;

#[derive(Clone)]
pub struct Subspace {
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ech.width() == other.ech.width() && self.ech.rows() == other.ech.rows()
    }
}
impl Eq for Subspace {}

/// Binary subspace operations for [`subspace_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    Contains,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceOpResult {
    Space(Subspace),
    Bool(bool),
}

pub fn subspace_ops(a: &Subspace, b: &Subspace, op: SubspaceOp) -> Result<SubspaceOpResult, MathError> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(MathError::Shape(format!(
            "ambient dimensions {} and {}",
            a.ambient_dim(),
            b.ambient_dim()
        )));
    }
    Ok(match op {
        SubspaceOp::Sum => SubspaceOpResult::Space(a.sum(b)),
        SubspaceOp::Intersect => SubspaceOpResult::Space(a.intersect(b)),
        SubspaceOp::Contains => SubspaceOpResult::Bool(a.contains_subspace(b)),
        SubspaceOp::Equal => SubspaceOpResult::Bool(a == b),
    })
}

impl Subspace {
    pub fn zero(field: &'static CycloField, ambient: usize) -> Self {
        Subspace {
            ech: Echelon::new(field, ambient),
        }
    }

    pub fn full(field: &'static CycloField, ambient: usize) -> Self {
        Self::from_echelon(Echelon::from_rows(
            field,
            ambient,
            (0..ambient).map(|i| super::matrix::unit_vector(field, ambient, i)),
        ))
    }

    /// Span of the given vectors.
    pub fn from_vectors<I: IntoIterator<Item = Vector>>(
        field: &'static CycloField,
        ambient: usize,
        vectors: I,
    ) -> Self {
        Self::from_echelon(Echelon::from_rows(field, ambient, vectors))
    }

    pub(crate) fn from_echelon(ech: Echelon) -> Self {
        Subspace { ech }
    }

    pub fn field(&self) -> &'static CycloField {
        self.ech.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.width()
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    /// Canonical basis vectors (rows of the reduced echelon matrix).
    pub fn basis(&self) -> &[Vector] {
        self.ech.rows()
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.ambient_dim(), self.basis().to_vec())
            .expect("basis rows have ambient length")
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.ech.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.contains_subspace(self)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut ech = self.ech.clone();
        for v in other.basis() {
            ech.insert(v.clone());
        }
        Subspace { ech }
    }

    pub fn insert(&mut self, v: Vector) -> bool {
        self.ech.insert(v)
    }

    /// Intersection via the null space of the stacked bases: `(a, b)` with
    /// `sum a_i u_i = sum b_j w_j`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let field = self.field();
        let n = self.ambient_dim();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(field, n);
        }
        if self.dim() == n {
            return other.clone();
        }
        if other.dim() == n {
            return self.clone();
        }
        let da = self.dim();
        let cols: Vec<Vector> = self
            .basis()
            .iter()
            .cloned()
            .chain(other.basis().iter().map(|w| w.iter().map(|x| -x).collect()))
            .collect();
        let stacked = Matrix::from_columns(field, n, &cols);
        let ker = stacked.kernel();
        let vectors = ker.basis().iter().map(|coef| {
            let mut v = zero_vector(field, n);
            for (c, u) in coef[..da].iter().zip(self.basis()) {
                super::matrix::axpy(&mut v, c, u);
            }
            v
        });
        Subspace::from_vectors(field, n, vectors)
    }

    /// `{f : f(v) = 0 for all v in self}`, as a subspace of the dual coordinate space.
    pub fn annihilator(&self) -> Subspace {
        self.ech.null_space()
    }

    /// Residue of `v` modulo this subspace: zero on every pivot coordinate.
    pub fn reduce(&self, v: Vector) -> Vector {
        self.ech.reduce(v)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[FieldElem]) -> Option<Vector> {
        let coords: Vector = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vector(self.field(), self.ambient_dim());
        for (c, b) in coords.iter().zip(self.basis()) {
            super::matrix::axpy(&mut recon, c, b);
        }
        (recon.as_slice() == v).then_some(coords)
    }

    /// Coordinates not occupied by pivots; the unit vectors there span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in self.pivots() {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Image of the subspace under a linear map given on basis vectors.
    pub fn map<F: FnMut(&[FieldElem]) -> Vector>(&self, ambient: usize, mut f: F) -> Subspace {
        Subspace::from_vectors(self.field(), ambient, self.basis().iter().map(|v| f(v)))
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient_dim", &self.ambient_dim())?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", self.basis())?;
        st.end()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}", self.dim(), self.ambient_dim())?;
        for v in self.basis() {
            let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "; [{}]", cells.join(", "))?;
        }
        write!(f, ")")
    }
}
