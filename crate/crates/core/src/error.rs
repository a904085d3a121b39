use thiserror::Error;

use crate::oracle::Rational;

/// Identifier of the stream that raised a lazily surfaced error.
///
/// Every [`RealDecimal`](crate::RealDecimal) carries one (see
/// [`RealDecimal::id`](crate::RealDecimal::id)); front-ends use it to map a
/// stalled search back to the subexpression that produced it.
pub type StreamId = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A semi-decidable search scanned its whole budget without progress.
    #[error("fuel exhausted: scanned {budget} positions without certifying a digit")]
    FuelExhausted {
        budget: usize,
        origin: Option<StreamId>,
    },

    /// The divisor was proved to be zero by its exactness witness.
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative radicand {0}")]
    NegativeRadicand(Rational),

    /// A user digit source produced a value outside `0..=9`.
    #[error("digit source returned {value} at position {position}")]
    NonCanonicalInput {
        position: usize,
        value: u32,
        origin: Option<StreamId>,
    },

    #[error("denominator {0} is above the period-detection cap")]
    PeriodCapExceeded(num_bigint::BigInt),

    #[error("cannot parse {0:?} as a terminating decimal")]
    ParseDecimal(String),
}

impl Error {
    /// The stream that raised the error, for lazily surfaced errors.
    pub fn origin(&self) -> Option<StreamId> {
        match self {
            Error::FuelExhausted { origin, .. } | Error::NonCanonicalInput { origin, .. } => *origin,
            _ => None,
        }
    }

    pub(crate) fn stamp(mut self, id: StreamId) -> Self {
        match &mut self {
            Error::FuelExhausted { origin, .. } | Error::NonCanonicalInput { origin, .. } => {
                origin.get_or_insert(id);
            }
            _ => {}
        }
        self
    }

    pub(crate) fn fuel(budget: usize) -> Self {
        Error::FuelExhausted {
            budget,
            origin: None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
