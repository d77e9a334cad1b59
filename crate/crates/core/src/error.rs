use thiserror::Error;

/// Errors raised by the constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector is not a step")]
    ZeroStep,
    #[error("step has dimension {found}, expected {expected}")]
    StepDimension { expected: usize, found: usize },
    #[error("path has dimension {found}, expected {expected}")]
    PathDimension { expected: usize, found: usize },
    #[error("path ends at {found:?}, expected {expected:?}")]
    PathTarget { expected: Vec<usize>, found: Vec<usize> },
    #[error("axis map {axes:?} is not an injection into [{dim}]")]
    NonInjectiveAxes { axes: Vec<usize>, dim: usize },
    #[error("tuple is not strictly increasing")]
    NotIncreasing,
    #[error("invalid letter {0:?} in weight (expected 'b' or 'w')")]
    InvalidLetter(char),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid cell signature {slots:?} for arity {arity} over {breakpoints} breakpoints")]
    InvalidSignature {
        slots: Vec<usize>,
        arity: usize,
        breakpoints: usize,
    },
    #[error("breakpoints {0} are not a refinement of the current breakpoints")]
    NotARefinement(String),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("coordinate index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("interval {0} is empty or malformed")]
    MalformedInterval(usize),
    #[error("intervals {0} and {1} overlap or are out of order")]
    IntervalOrder(usize, usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("function is not expressed over the required breakpoints")]
    BreakpointMismatch,
    #[error("morphism is not square ({rows}<-{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<usize>),
}

pub type Result<T> = std::result::Result<T, Error>;
