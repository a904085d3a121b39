use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::lexer::LexError;
use crate::parser::{ParseError, Span};
use crate::MAX_DIGITS;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("lex error: {0}")]
    Lex(#[from] LexError),

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    /// A library error, with the subexpression it came from.
    #[error("{source} (in {span})")]
    Math { source: rdec::Error, span: Span },

    #[error("sqrt needs an operand with an exact rational value (in {span})")]
    UnsupportedSqrtOperand { span: Span },

    #[error("{0} digits requested, the limit is {MAX_DIGITS}")]
    DigitLimit(usize),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lex(_) | CliError::Parse(_) | CliError::DigitLimit(_) => 2,
            CliError::Math {
                source: rdec::Error::FuelExhausted { .. },
                ..
            } => 3,
            CliError::Math { .. } | CliError::UnsupportedSqrtOperand { .. } => 4,
            CliError::Io { .. } => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lex(_) => "lex",
            CliError::Parse(_) => "parse",
            CliError::Math { source, .. } => match source {
                rdec::Error::FuelExhausted { .. } => "fuel_exhausted",
                rdec::Error::DivisionByZero => "division_by_zero",
                rdec::Error::NegativeRadicand(_) => "negative_radicand",
                _ => "math",
            },
            CliError::UnsupportedSqrtOperand { .. } => "unsupported_sqrt_operand",
            CliError::DigitLimit(_) => "usage",
            CliError::Io { .. } => "io",
        }
    }

    /// Source range the error points at, when it has one.
    pub fn span(&self) -> Option<Span> {
        match self {
            CliError::Lex(e) => Some(Span {
                start: e.offset,
                end: e.offset + e.found.chars().count(),
            }),
            CliError::Parse(e) => Some(Span {
                start: e.offset,
                end: e.offset,
            }),
            CliError::Math { span, .. } | CliError::UnsupportedSqrtOperand { span } => Some(*span),
            CliError::DigitLimit(_) | CliError::Io { .. } => None,
        }
    }
}
