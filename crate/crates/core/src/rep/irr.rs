//! Center, central primitive idempotents and irreducible characters.

use std::cmp::Ordering;

use num_integer::Roots;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::{axpy, dot, is_zero_vector, scale_vector, sub_vectors, Vector};
use crate::exactmath::{kernel_of_rows, FieldElem, Matrix, Subspace};
use crate::hopf::{dual, HopfAlgebraData};
use crate::rep::roots::split_roots;

/// A linear functional on `H` given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vector,
    pub degree: FieldElem,
}

impl Character {
    pub fn new(h: &HopfAlgebraData, values: Vector) -> Self {
        let degree = dot(h.unit(), &values);
        Character { values, degree }
    }

    pub fn eval(&self, x: &[FieldElem]) -> FieldElem {
        dot(&self.values, x)
    }

    /// `chi(ab) = chi(ba)` on all basis pairs.
    pub fn is_trace_functional(&self, h: &HopfAlgebraData) -> bool {
        let n = h.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ab = h.mul_basis_right(&h.basis_vec(i), j);
                let ba = h.mul_basis_left(j, &h.basis_vec(i));
                self.eval(&ab) == self.eval(&ba)
            })
        })
    }
}

/// One Wedderburn block: its central primitive idempotent, dimension, degree and character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrBlock {
    pub idempotent: Vector,
    pub block_dim: usize,
    pub degree: u32,
    pub character: Character,
}

/// The blocks of a semisimple algebra; the trivial block (character `eps`) comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrData {
    pub blocks: Vec<IrrBlock>,
}

impl IrrData {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.degree).collect()
    }

    pub fn characters(&self) -> impl Iterator<Item = &Character> {
        self.blocks.iter().map(|b| &b.character)
    }

    pub fn character(&self, i: usize) -> &Character {
        &self.blocks[i].character
    }

    pub fn idempotent(&self, i: usize) -> &Vector {
        &self.blocks[i].idempotent
    }
}

/// `Z(H)`: the kernel of `x -> b_i x - x b_i` over all `i`.
pub fn center(h: &HopfAlgebraData) -> Subspace {
    let n = h.dim();
    let f = h.field();
    // column t of the commutator map for b_i is b_i b_t - b_t b_i
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    for i in 0..n {
        let cols: Vec<Vector> = (0..n)
            .map(|t| sub_vectors(&h.mul_basis_left(i, &h.basis_vec(t)), &h.mul_basis_right(&h.basis_vec(t), i)))
            .collect();
        for k in 0..n {
            rows.push((0..n).map(|t| cols[t][k].clone()).collect());
        }
    }
    kernel_of_rows(f, n, rows)
}

/// `trace(L_{b_j})` on `H`, i.e. the regular character.
pub(crate) fn regular_trace(h: &HopfAlgebraData) -> Vector {
    let n = h.dim();
    (0..n)
        .map(|j| {
            let mut t = h.field().zero();
            for i in 0..n {
                t += h.mult_coeff(j, i, i);
            }
            t
        })
        .collect()
}

/// Minimal polynomial (monic, lowest degree first) of `y` in the algebra with unit `e`.
fn minimal_polynomial(h: &HopfAlgebraData, e: &Vector, y: &Vector) -> Result<Vec<FieldElem>> {
    let f = h.field();
    let n = h.dim();
    let mut powers = vec![e.clone()];
    let mut span = Subspace::from_vectors(f, n, [e.clone()]);
    loop {
        let next = h.mul(y, powers.last().expect("nonempty"));
        if span.contains(&next) {
            let m = Matrix::from_columns(f, n, &powers);
            let rhs = Matrix::from_columns(f, n, &[next]);
            let c = m
                .solve(&rhs)?
                .ok_or_else(|| HopfError::Internal("power in span but unsolvable".into()))?;
            let mut p: Vec<FieldElem> = (0..powers.len()).map(|i| -&c[(i, 0)]).collect();
            p.push(f.one());
            return Ok(p);
        }
        if powers.len() > n {
            return Err(HopfError::Internal("minimal polynomial degree exceeds dim".into()));
        }
        span.insert(next.clone());
        powers.push(next);
    }
}

/// Splits `e` by the eigenvalues of `y = z e` into the Lagrange idempotents.
fn split_block(h: &HopfAlgebraData, e: &Vector, z: &Vector, bound: u64) -> Result<Vec<Vector>> {
    let y = h.mul(z, e);
    let p = minimal_polynomial(h, e, &y)?;
    if p.len() <= 2 {
        return Ok(vec![e.clone()]);
    }
    let roots = split_roots(&p, bound)?;
    let mut parts = Vec::with_capacity(roots.len());
    for (i, li) in roots.iter().enumerate() {
        let mut acc = e.clone();
        for (j, lj) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = sub_vectors(&y, &scale_vector(lj, e));
            let denom = (li - lj).inv()?;
            acc = scale_vector(&denom, &h.mul(&acc, &factor));
        }
        if is_zero_vector(&acc) {
            return Err(HopfError::Internal("vanishing Lagrange idempotent".into()));
        }
        parts.push(acc);
    }
    Ok(parts)
}

/// The central primitive idempotents, certified exactly.
pub fn central_primitive_idempotents(h: &HopfAlgebraData) -> Result<Vec<Vector>> {
    let z = center(h);
    let n = h.dim();
    let order = h.field().order() as u64;
    let bound = (n as u64) * order * order;
    let mut done: Vec<Vector> = Vec::new();
    let mut pending: Vec<(Vector, usize)> = vec![(h.unit().to_vec(), 0)];
    while let Some((e, start)) = pending.pop() {
        let mut split = false;
        for (idx, zb) in z.basis().iter().enumerate().skip(start) {
            let parts = split_block(h, &e, zb, bound)?;
            if parts.len() > 1 {
                pending.extend(parts.into_iter().map(|p| (p, idx + 1)));
                split = true;
                break;
            }
        }
        if !split {
            done.push(e);
        }
    }
    if done.len() != z.dim() {
        return Err(HopfError::FieldTooSmall {
            order: h.field().order(),
            detail: format!("center has dimension {} but {} blocks split", z.dim(), done.len()),
        });
    }
    certify_idempotents(h, &z, &done)?;
    Ok(done)
}

fn certify_idempotents(h: &HopfAlgebraData, z: &Subspace, es: &[Vector]) -> Result<()> {
    let mut total = h.zero_vec();
    for (i, a) in es.iter().enumerate() {
        if !z.contains(a) {
            return Err(HopfError::Internal(format!("idempotent {i} is not central")));
        }
        for (j, b) in es.iter().enumerate() {
            let prod = h.mul(a, b);
            let ok = if i == j { prod == *a } else { is_zero_vector(&prod) };
            if !ok {
                return Err(HopfError::Internal(format!("idempotents {i}, {j} not orthogonal")));
            }
        }
        axpy(&mut total, &h.field().one(), a);
    }
    if total != h.unit() {
        return Err(HopfError::Internal("idempotents do not sum to 1".into()));
    }
    Ok(())
}

fn cmp_elem(a: &FieldElem, b: &FieldElem) -> Ordering {
    a.coeffs().cmp(b.coeffs())
}

fn first_nonzero(v: &[FieldElem]) -> usize {
    v.iter().position(|c| !c.is_zero()).unwrap_or(v.len())
}

/// `Irr(H)`: one block per central primitive idempotent.
///
/// Ordering: trivial character, then by degree, then by the first basis element on which the
/// character is nonzero, then by values.
pub fn irr_characters(h: &HopfAlgebraData) -> Result<IrrData> {
    let idems = central_primitive_idempotents(h)?;
    let reg = regular_trace(h);
    let n = h.dim();
    let too_small = |detail: String| HopfError::FieldTooSmall {
        order: h.field().order(),
        detail,
    };
    let mut blocks = Vec::with_capacity(idems.len());
    for xi in idems {
        let dim_elem = dot(&reg, &xi);
        let block_dim = dim_elem
            .as_integer()
            .filter(|&d| d > 0)
            .ok_or_else(|| HopfError::Internal(format!("block dimension {dim_elem} is not a positive integer")))?
            as usize;
        let degree = block_dim.sqrt();
        if degree * degree != block_dim {
            return Err(too_small(format!("block of dimension {block_dim} is not a square")));
        }
        let inv_deg = h.field().from_int(degree as i64).inv()?;
        let values: Vector = (0..n)
            .map(|k| &dot(&reg, &h.mul_basis_left(k, &xi)) * &inv_deg)
            .collect();
        let character = Character::new(h, values);
        blocks.push(IrrBlock {
            idempotent: xi,
            block_dim,
            degree: degree as u32,
            character,
        });
    }
    let counit = h.counit().to_vec();
    blocks.sort_by(|a, b| {
        let ta = a.character.values != counit;
        let tb = b.character.values != counit;
        ta.cmp(&tb)
            .then(a.degree.cmp(&b.degree))
            .then(first_nonzero(&a.character.values).cmp(&first_nonzero(&b.character.values)))
            .then_with(|| {
                a.character
                    .values
                    .iter()
                    .zip(&b.character.values)
                    .map(|(x, y)| cmp_elem(x, y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    });
    if blocks.first().map(|b| &b.character.values) != Some(&counit) {
        return Err(HopfError::Internal("counit is not among the irreducible characters".into()));
    }
    let total: usize = blocks.iter().map(|b| b.block_dim).sum();
    if total != n {
        return Err(HopfError::Internal(format!("block dimensions sum to {total}, not {n}")));
    }
    Ok(IrrData { blocks })
}

/// `Irr(H*)`: blocks of the dual. Idempotents are functionals on `H`; each character is stored
/// as the element of `H` it evaluates.
pub fn irr_cocharacters(h: &HopfAlgebraData) -> Result<IrrData> {
    irr_characters(&dual(h))
}
