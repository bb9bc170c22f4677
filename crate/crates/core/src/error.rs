use std::fmt;

/// Errors raised by the toolkit.
///
/// Every variant except [`Error::Parse`] is a domain error: the request was
/// well formed but asks for something the construction does not contain.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{value} is not {expected}")]
    NotInDomain { value: String, expected: String },
    #[error("invalid rational {numerator}/0: zero denominator")]
    InvalidRational { numerator: String },
    #[error("no such guest: {0}")]
    NoSuchGuest(String),
    #[error("{stream}: position {position} lies beyond the supplied prefix of {available} digits")]
    OutOfPrefix {
        stream: String,
        position: usize,
        available: usize,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("cannot parse {input:?} as {what}")]
    Parse { input: String, what: &'static str },
}

impl Error {
    pub(crate) fn not_in_domain(value: impl fmt::Display, expected: impl Into<String>) -> Self {
        Error::NotInDomain {
            value: value.to_string(),
            expected: expected.into(),
        }
    }

    pub(crate) fn parse(input: &str, what: &'static str) -> Self {
        Error::Parse {
            input: input.to_owned(),
            what,
        }
    }

    /// True for malformed input, as opposed to a well-formed request outside
    /// a domain.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
