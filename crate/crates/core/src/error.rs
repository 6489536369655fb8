use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Messages start with the module that
/// raised them so the CLI can print them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arith: VerificationFailure: {0}")]
    VerificationFailure(String),

    #[error("partitions: PadTooSmall: cannot pad {lambda} to {n}")]
    PadTooSmall { lambda: String, n: usize },

    #[error("chars: SizeMismatch: {0}")]
    SizeMismatch(String),
    #[error("chars: RankMismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("chars: NonIntegralMultiplicity: {0}")]
    NonIntegralMultiplicity(String),
    #[error("chars: NotClassFunction: {0}")]
    NotClassFunction(String),
    #[error("chars: NotSubgroup: {0}")]
    NotSubgroup(String),

    #[error("diagrams: ArityMismatch: {0}")]
    ArityMismatch(String),

    #[error("BoundExceeded: {0}")]
    BoundExceeded(String),

    #[error("repst: StabilizationFailure: {0}")]
    StabilizationFailure(String),
    #[error("repst: NegativeMultiplicity: {0}")]
    NegativeMultiplicity(String),

    #[error("lie: ZeroObject")]
    ZeroObject,
    #[error("lie: DimensionNonzero: dimension at t = {0} is {1}")]
    DimensionNonzero(String, String),
    #[error("lie: InsufficientTrivial: {0}")]
    InsufficientTrivial(String),
    #[error("lie: NoInvariantForm: {0}")]
    NoInvariantForm(String),
    #[error("lie: ParityViolation: {0}")]
    ParityViolation(String),
    #[error("lie: OutOfRangeExponent: {0}")]
    OutOfRangeExponent(String),
    #[error("lie: InvalidAction: {0}")]
    InvalidAction(String),

    #[error("frob: UnsupportedTarget: {0}")]
    UnsupportedTarget(String),
    #[error("frob: NotAnAlgebra: {0}")]
    NotAnAlgebra(String),

    #[error("oracle: NotMultiplicative: {0}")]
    NotMultiplicative(String),
    #[error("oracle: AssertionFailure: {0}")]
    AssertionFailure(String),
}
