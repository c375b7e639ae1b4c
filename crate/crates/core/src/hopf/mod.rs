//! The structure-constant representation of a Hopf algebra and the constructions on it.

mod algebra;
mod dual;
mod integral;
mod morphism;
mod quotient;
mod subalgebra;

pub use algebra::{comul_twice, verify_hopf, AxiomCheck, HopfAlgebraData, HopfReport, Tensor2};
pub use dual::dual;
pub use integral::{integral, integral_in};
pub use morphism::{morphism_check, HopfMorphism};
pub use quotient::{
    augmentation, hopf_ideal_violations, quotient_by_ideal, quotient_by_subalgebra, QuotientData,
};
pub use subalgebra::{
    adjoint_left, adjoint_right, certify, closure, is_normal, is_subcoalgebra,
    largest_subcoalgebra_in, ClosureMode, HopfSubalgebraHandle, SubalgebraFlags,
};

#[cfg(test)]
mod tests;
