use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCap { cap: usize },
    #[error("map does not preserve the tetracode")]
    NotTetracodePreserving,
    #[error("element does not have order 3")]
    WrongOrder,
    #[error("subgroup has index 1")]
    IndexOne,
    #[error("{p} does not divide the group order")]
    PrimeDoesNotDivide { p: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("unknown claim pattern: {0}")]
    UnknownClaim(String),
}
