//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed snapshot line; parsing aborts at the first offender.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A referenced entity is missing or declared inconsistently.
    #[error("integrity error for <{iri}>: {reason}")]
    Integrity { iri: String, reason: String },

    #[error("unknown concept <{0}>")]
    UnknownConcept(String),

    #[error("unknown author <{0}>")]
    UnknownAuthor(String),

    #[error("unknown paper <{0}>")]
    UnknownPaper(String),

    /// The keyword contained no alphanumeric characters at all.
    #[error("keyword {0:?} normalizes to an empty key")]
    EmptyKey(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Wraps an error with the input file it occurred in.
    #[error("{path}: {source}")]
    InFile {
        path: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn integrity(iri: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Integrity {
            iri: iri.into(),
            reason: reason.into(),
        }
    }

    pub fn in_file(path: impl Into<String>, source: Error) -> Self {
        Error::InFile {
            path: path.into(),
            source: Box::new(source),
        }
    }

    /// The underlying error, unwrapping any file-context layers.
    pub fn root(&self) -> &Error {
        match self {
            Error::InFile { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
