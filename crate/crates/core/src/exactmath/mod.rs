//! Exact arithmetic: cyclotomic fields, dense matrices, and canonical subspaces.

pub mod cyclo;
pub mod matrix;
pub mod subspace;

pub use cyclo::{elem_arith, field_make, rationals, ArithOp, CycloField, FieldElem};
pub use matrix::{kernel_of_rows, Echelon, Matrix, Vector};
pub use subspace::{subspace_ops, Subspace, SubspaceOp, SubspaceOpResult};

/// Arbitrary-precision rational numbers, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let q: Rational = s.parse().ok()?;
    if q.denom().sign() == num_bigint::Sign::NoSign {
        return None;
    }
    Some(q)
}

/// Serializes as `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
