use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The divisor function is only defined on nonzero elements.
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("argument must not be a unit")]
    UnitArgument,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not divisible")]
    NotDivisible,
    #[error("ring {0} is not flagged as a UFD")]
    NotUfd(String),
    #[error("element belongs to {found}, expected {expected}")]
    TagMismatch { expected: String, found: String },
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNode,
    #[error("not in ring: {0}")]
    NotInRing(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search cap exceeded: {what} needs {needed}, cap is {cap}")]
    SearchCap {
        what: String,
        needed: String,
        cap: String,
    },
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Validation(String),
    #[error("schedule repeats index {0}")]
    RepeatedIndex(u64),
    #[error("argument must be non-constant")]
    ConstantArgument,
    #[error("constant term is a unit; no non-primality witness of this shape exists")]
    ArgumentIsPrimeCandidate,
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } => 2,
            Error::SearchCap { .. } => 3,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroArgument => "ZeroArgument",
            Error::UnitArgument => "UnitArgument",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible => "NotDivisible",
            Error::NotUfd(_) => "NotUFD",
            Error::TagMismatch { .. } => "TagMismatch",
            Error::DuplicateNode => "DuplicateNode",
            Error::NotInRing(_) => "NotInRing",
            Error::Unsupported(_) => "Unsupported",
            Error::SearchCap { .. } => "SearchCap",
            Error::Syntax { .. } => "SyntaxError",
            Error::Validation(_) => "ValidationError",
            Error::RepeatedIndex(_) => "RepeatedIndex",
            Error::ConstantArgument => "ConstantArgument",
            Error::ArgumentIsPrimeCandidate => "ArgumentIsPrimeCandidate",
        }
    }
}
