use thiserror::Error;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("cyclotomic order must be positive")]
    InvalidFieldOrder,
    #[error("field mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} power-basis coefficients, found {found}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Errors raised by the Hopf algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("Hopf axiom violated: {0}")]
    AxiomViolated(String),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("field Q(zeta_{order}) too small; re-supply the algebra with larger N ({detail})")]
    FieldTooSmall { order: u32, detail: String },
    #[error("not a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("not a normal Hopf subalgebra: {0}")]
    NotNormal(String),
    #[error("not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("not a Hopf algebra morphism: {0}")]
    NotMorphism(String),
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("input too large: dimension {dim} exceeds limit {limit}")]
    TooLarge { dim: usize, limit: usize },
}

pub type Result<T, E = HopfError> = std::result::Result<T, E>;
