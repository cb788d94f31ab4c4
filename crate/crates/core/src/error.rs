use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("monomials live in different variable contexts")]
    ContextMismatch,
    #[error("the unit monomial 1 is not allowed as a generator")]
    UnitGenerator,
    #[error("zero ideal: {0}")]
    ZeroIdeal(String),
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a face of the complex: {0:?}")]
    NotAFace(Vec<String>),
    #[error("the void complex has no chain complex")]
    VoidComplex,
    #[error("the full simplex has no non-faces")]
    FullSimplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset is not bounded")]
    Unbounded,
    #[error("elements {0} and {1} are not comparable")]
    Incomparable(usize, usize),
    #[error("vertex sets overlap")]
    OverlappingVertices,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
