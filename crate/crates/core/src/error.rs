use alloc::string::String;
use core::fmt;

/// Failures reported by the library. Absence of an inverse is never an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An element does not belong to the ring it was used with.
    RingMismatch(String),
    /// The ring has no involution but a `*`-operation was requested.
    UnsupportedInvolution,
    /// The ring is infinite and cannot be enumerated.
    NotEnumerable,
    /// Ideals of different sides were combined.
    SideMismatch,
    /// A ring specification is invalid (non-prime modulus, n < 2, ...).
    InvalidSpec(String),
    /// An input violates a documented precondition.
    Precondition(String),
    /// The question cannot be decided on this backend.
    Undecidable(String),
    /// A constraint bundle does not match any supported shape.
    MalformedConstraint(String),
    /// Text could not be parsed as a scalar or element.
    Parse(String),
    /// A computed value failed re-validation; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch(s) => write!(f, "ring mismatch: {s}"),
            Error::UnsupportedInvolution => write!(f, "ring has no involution"),
            Error::NotEnumerable => write!(f, "ring is infinite and cannot be enumerated"),
            Error::SideMismatch => write!(f, "ideals have different sides"),
            Error::InvalidSpec(s) => write!(f, "invalid ring spec: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::Undecidable(s) => write!(f, "undecidable on this backend: {s}"),
            Error::MalformedConstraint(s) => write!(f, "malformed constraint: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
