use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}` in this ring")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable map is not an involution (index {0})")]
    NotAnInvolution(usize),
    #[error("rings do not match: `{0}` vs `{1}`")]
    RingMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported algebra ({kind}, n={n})")]
    UnsupportedAlgebra { kind: String, n: usize },
    #[error("no standard r-matrix is cataloged for `{0}`; supply a custom tensor")]
    NoStandardR(String),
    #[error("no invariant symmetric element is cataloged for `{0}`")]
    NoInvariantS(String),
    #[error("no modification s + lambda*I(x)I is symmetric; witness index (j,k,l,m) = {0:?}")]
    NoModification((usize, usize, usize, usize)),
    #[error("s_lambda violates the index symmetry (symsl); witness (j,k,l,m) = {0:?}")]
    SymmetryViolation((usize, usize, usize, usize)),
    #[error("stabilizer of the origin is the whole algebra; pick x != 0")]
    ZeroPoint,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("denominator is not a power of Lambda times a unit")]
    NotLambdaLocalized,
    #[error("mismatched algebras")]
    AlgebraMismatch,
    #[error("mismatched coordinate spaces")]
    SpaceMismatch,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
