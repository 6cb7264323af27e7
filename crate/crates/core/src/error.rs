use alloc::string::String;
use core::fmt;

use crate::automata::StateId;

/// Errors raised by the automata and logic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A symbol or word has a different number of tracks than expected.
    WidthMismatch {
        expected: usize,
        found: usize,
    },
    /// Two automata (or an automaton and an interpretation) disagree on
    /// their variable signature.
    SignatureMismatch,
    UnknownState(StateId),
    UnknownVariable(String),
    DuplicateVariable(String),
    InvalidPermutation,
    /// A first-order track does not carry exactly one `1`.
    InvalidEncoding {
        track: String,
    },
    /// Universal quantification was requested over a second-order variable.
    NotFirstOrder(String),
    /// A widget was requested for a subset state without accepting member.
    NoAcceptingMember,
    /// `ω`-closure of a finite automaton whose language contains the empty word.
    EpsilonInLanguage,
    TooManyTracks(usize),
    /// Structural problem in an automaton description.
    Malformed(String),
    Syntax {
        pos: usize,
        message: String,
    },
    Scope(String),
    OffsetTooLarge {
        offset: u32,
        max: u32,
    },
    UnknownRelation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WidthMismatch { expected, found } => {
                write!(
                    f,
                    "symbol width mismatch: expected {expected}, found {found}"
                )
            }
            Error::SignatureMismatch => f.write_str("variable signatures differ"),
            Error::UnknownState(q) => write!(f, "unknown state {q}"),
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::DuplicateVariable(v) => write!(f, "duplicate variable `{v}`"),
            Error::InvalidPermutation => f.write_str("not a permutation of the signature"),
            Error::InvalidEncoding { track } => {
                write!(
                    f,
                    "first-order track `{track}` does not contain exactly one 1"
                )
            }
            Error::NotFirstOrder(v) => write!(f, "`{v}` is not a first-order variable"),
            Error::NoAcceptingMember => {
                f.write_str("subset state contains no accepting state of the source automaton")
            }
            Error::EpsilonInLanguage => f.write_str("language contains the empty word"),
            Error::TooManyTracks(n) => write!(f, "{n} tracks exceed the supported maximum of 64"),
            Error::Malformed(msg) => write!(f, "malformed automaton: {msg}"),
            Error::Syntax { pos, message } => write!(f, "syntax error at {pos}: {message}"),
            Error::Scope(msg) => write!(f, "scope error: {msg}"),
            Error::OffsetTooLarge { offset, max } => {
                write!(f, "offset {offset} exceeds the configured maximum {max}")
            }
            Error::UnknownRelation(r) => write!(f, "unknown relation `@{r}`"),
        }
    }
}

impl core::error::Error for Error {}
