use thiserror::Error;

use crate::alphabet::Token;
use crate::codec::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("character {ch:?} at index {index} has no token")]
    UnknownCharacter { ch: char, index: usize },

    #[error("invalid token stream at index {index}: UPPER must be followed by a letter")]
    InvalidTokenStream { index: usize },

    #[error("sequence is not admissible ({} violation(s))", .0.violations.len())]
    NotAdmissible(Box<ValidationReport>),

    #[error("token {index}: {lexeme:?} is not a two-digit number")]
    MalformedNumber { lexeme: String, index: usize },

    #[error("token {0} appears more than once")]
    DuplicateToken(Token),

    #[error("token {0} is missing")]
    MissingToken(Token),

    #[error("expected 49 tokens, got {0}")]
    WrongLength(usize),

    #[error("unknown token name {0:?}")]
    UnknownTokenName(String),

    #[error("UPPER cannot be used as a replacement token")]
    InvalidPolicy,

    #[error("unknown policy {0:?}, expected error, skip or replace=TOKEN")]
    InvalidPolicySyntax(String),

    #[error(transparent)]
    SquareFile(#[from] SquareFileError),
}

/// Square file loading failures, each carrying a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareFileError {
    #[error("line {line}: unknown token {entry:?}")]
    UnknownToken { line: usize, entry: String },

    #[error("line {line}: duplicate token {token} (first on line {first_line})")]
    Duplicate {
        line: usize,
        token: Token,
        first_line: usize,
    },

    #[error("line {line}: missing token {token}, found only {found} of 49 entries")]
    Missing {
        line: usize,
        found: usize,
        token: Token,
    },

    #[error("line {line}: more than 49 entries")]
    TooManyEntries { line: usize },
}
