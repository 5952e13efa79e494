use thiserror::Error;

/// Errors raised by the geometric constructions and the decision engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected P^{expected}, got P^{got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero vector does not define a projective point")]
    ZeroVector,

    #[error("frame is not in general position")]
    FrameDegenerate,

    #[error("subspaces are not complementary in a hyperplane: {0}")]
    NotComplementary(String),

    #[error("point lies in the projection center")]
    InCenter,

    #[error("every equation of the subspace vanishes on the curve")]
    CurveInSubspaceSpan,

    #[error("parameter points coincide")]
    DuplicateParameters,

    #[error("generic sampling failed after {attempts} attempts: {what}")]
    GenericityExhausted { attempts: usize, what: String },

    #[error("normalized coordinates are zero or repeated; parameters coincide")]
    CoincidentParameters,

    #[error("projection center meets the curve (common factor of degree {degree})")]
    CenterMeetsCurve { degree: usize },

    #[error("point lies in the base locus of the Segre contraction")]
    BaseLocus,

    #[error("point lies on the contracted hyperplane y_0 = 0")]
    OnContractedLocus,

    #[error("{s} points exceed the bound for factor dimensions {dims:?}")]
    BoundViolated { s: usize, dims: Vec<usize> },

    #[error("leading forms of factors {0} and {1} share a root")]
    CommonRootOfLeadForms(usize, usize),

    #[error("composed curve is degenerate")]
    DegenerateImage,

    #[error("witness verification failed: {0}")]
    VerificationFailed(String),

    #[error("configuration has a fat component")]
    FatComponentPresent,

    #[error("no constructive path for weight vector {0}")]
    NoConstructivePath(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
