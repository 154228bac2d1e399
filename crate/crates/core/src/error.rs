//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Alias for results carrying [`Error`].
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Variants fall into three groups, which front ends may want to map to
/// distinct exit codes:
///
/// * invalid input ([`Error::InvalidSpec`], [`Error::LetterOutOfRange`],
///   [`Error::InvalidElement`], [`Error::Parse`], [`Error::NotReduced`],
///   [`Error::NotLongestElement`], [`Error::SourceNotInGraph`],
///   [`Error::Unsupported`]),
/// * resource limits ([`Error::BudgetExceeded`]),
/// * internal invariant violations ([`Error::InvariantViolation`]), which
///   indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The family/rank combination does not describe a supported group.
    InvalidSpec { reason: String },
    /// A word letter is outside the generator index range of its group.
    LetterOutOfRange { letter: usize, min: usize, max: usize },
    /// One-line notation that does not describe a group element.
    InvalidElement { reason: String },
    /// Text that cannot be parsed as the requested object.
    Parse { input: String, reason: String },
    /// An operation that requires a reduced word received one that is not.
    NotReduced { word: String },
    /// An operation restricted to the longest element received another element.
    NotLongestElement { element: String },
    /// A requested source word is not a vertex of the graph at hand.
    SourceNotInGraph { word: String },
    /// The requested mode or parameter combination is not supported.
    Unsupported { reason: String },
    /// An enumeration grew past its configured budget.
    BudgetExceeded { what: String, budget: usize },
    /// An internal consistency check failed; this is a bug, not bad input.
    InvariantViolation { what: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpec { reason } => write!(f, "invalid group: {reason}"),
            Error::LetterOutOfRange { letter, min, max } => {
                write!(f, "letter {letter} out of range: generators are {min}..={max}")
            }
            Error::InvalidElement { reason } => write!(f, "invalid element: {reason}"),
            Error::Parse { input, reason } => write!(f, "cannot parse {input:?}: {reason}"),
            Error::NotReduced { word } => write!(f, "word {word} is not reduced"),
            Error::NotLongestElement { element } => {
                write!(f, "element {element} is not the longest element of its group")
            }
            Error::SourceNotInGraph { word } => {
                write!(f, "word {word} is not a vertex of this graph")
            }
            Error::Unsupported { reason } => write!(f, "unsupported: {reason}"),
            Error::BudgetExceeded { what, budget } => {
                write!(f, "{what} exceeds the budget of {budget}")
            }
            Error::InvariantViolation { what } => {
                write!(f, "internal invariant violated: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}
