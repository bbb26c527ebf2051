use thiserror::Error;

/// How a failure should be surfaced to a caller that only cares about the
/// category (the CLI maps these onto exit codes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input itself is malformed or degenerate.
    InvalidInput,
    /// A mathematical check failed or two computations disagree.
    MathFailure,
    /// The method could not decide.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid conductor {0}")]
    InvalidConductor(i64),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("Buchberger degree cap {cap} exceeded by an S-pair of degree {degree}")]
    DegreeCapExceeded { cap: u32, degree: u32 },
    #[error("the three bilinear forms are linearly dependent (span has rank {rank})")]
    DependentForms { rank: usize },
    #[error("coefficient matrix has generic rank below 3: all minor cubics vanish")]
    DegenerateCentre,
    #[error("degenerate pencil: the determinantal quartic vanishes identically")]
    DegenerateQuartic,
    #[error("expected a homogeneous quartic in 3 variables: {0}")]
    NotAQuartic(String),
    #[error("point does not lie on the {0}")]
    NotOnLocus(&'static str),
    #[error("point lies on the blowdown centre: all minor cubics vanish")]
    OnCentre,
    #[error("kernel has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error("coefficient matrix has rank {0} at the point, expected 2")]
    RankNotTwo(usize),
    #[error("the pencil of forms is not invariant under the action")]
    PencilNotInvariant,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error(
        "weights must share a parity for a swap action; the true projective order is {true_order}"
    )]
    ParityViolation { true_order: u64 },
    #[error("declared order {declared} differs from the computed projective order {computed}")]
    OrderMismatch { declared: u64, computed: u64 },
    #[error("action matrix is not diagonalisable over the roots of unity of order {order}")]
    NotDiagonalisable { order: u64 },
    #[error("value is not a root of unity of order {0}")]
    NotRootOfUnity(u64),
    #[error("eigenspace for exponent {exponent} is empty")]
    EmptyEigenspace { exponent: i64 },
    #[error("generator gave up after {attempts} attempts: {reason}")]
    GeneratorExhausted { attempts: usize, reason: String },
    #[error("quartic is not an eigenvector of the diagonal substitution")]
    NotEigenvector,
    #[error("quartic eigenvalue mismatch: expected exponent {expected}, found {found:?}")]
    QuarticEigenvalueMismatch { expected: i64, found: Option<u64> },
    #[error("truncation hypothesis violated: term F^{index} has nonzero cohomology")]
    TruncationHypothesis { index: i64 },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("order {0} is odd and cannot host the sign character")]
    OddOrder(u64),
    #[error("character multisets have different orders ({0} vs {1})")]
    CharacterOrderMismatch(u64, u64),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::DegreeCapExceeded { .. } | Error::Inconclusive(_) => ErrorKind::Inconclusive,
            Error::NotDiagonalisable { .. }
            | Error::NotRootOfUnity(_)
            | Error::NotEigenvector
            | Error::QuarticEigenvalueMismatch { .. }
            | Error::GeneratorExhausted { .. } => ErrorKind::MathFailure,
            _ => ErrorKind::InvalidInput,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
