use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no root system of type {family}{rank}")]
    InvalidRootSystem { family: char, rank: usize },

    #[error("unknown root system family `{0}`")]
    UnknownFamily(String),

    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("weight {0} is not an integral W^Θ-invariant weight")]
    NotThetaInvariant(String),

    #[error("s-module parameter {0} does not vanish on the Levi roots Θ")]
    NotThetaStable(String),

    #[error("weight {0} is singular: λ+δ pairs to zero with a coroot")]
    Singular(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("cannot integrate: {0}")]
    NotIntegrable(String),

    #[error("unsupported integrand shape: {0}")]
    UnsupportedShape(String),

    #[error("incompatible potential derivatives: {0}")]
    IncompatiblePotential(String),

    #[error("expression is not a constant: {0}")]
    NotConstant(String),

    #[error("matrix is {rows}x{cols}, expected {expected}x{expected}")]
    MatrixShape { rows: usize, cols: usize, expected: usize },

    #[error("function is not a covariant symbol on O({n}): {reason}")]
    NotASymbol { n: u32, reason: String },

    #[error("degenerate potential: the metric ∂²Φ/∂z∂z̄ vanishes identically")]
    DegeneratePotential,

    #[error("recursion inconsistency at ν-order {order}: {detail}")]
    RecursionInconsistency { order: i32, detail: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
