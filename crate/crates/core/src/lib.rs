//! Semisimple Hopf algebras by structure constants over exact cyclotomic fields.
//!
//! The crate computes representation kernels `H_chi`, categorical Hopf kernels `HKer(f)`, the
//! central character subalgebras of a Hopf algebra and its dual, and checks the identities that
//! tie them together on concrete examples.

pub mod central;
pub mod corpus;
pub mod error;
pub mod exactmath;
pub mod hopf;
pub mod kernels;
pub mod rep;

pub use error::{HopfError, MathError};
pub use exactmath::{field_make, CycloField, FieldElem, Matrix, Rational, Subspace};
