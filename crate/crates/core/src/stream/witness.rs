use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::numeral::ScaledDecimal;
use crate::oracle::Rational;
use crate::stream::SignClass;

/// Exact symbolic value attached to a stream, when one is known.
///
/// Digit access alone cannot decide whether a sum or product has a
/// terminating value; a witness can. `SqrtRational` is normalized: a radicand
/// that is the square of a rational always becomes `Rational`, and a zero
/// radicand becomes `Rational(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Witness {
    #[default]
    None,
    Rational(Rational),
    /// `±sqrt(radicand)`.
    SqrtRational { radicand: Rational, negative: bool },
}

impl Witness {
    /// `±sqrt(c)`, reduced to `Rational` when `c` is a rational square.
    pub fn sqrt(radicand: Rational, negative: bool) -> Witness {
        assert!(!radicand.is_negative(), "radicand must be non-negative");
        match radicand.sqrt_exact() {
            Some(root) => Witness::Rational(if negative { -root } else { root }),
            None => Witness::SqrtRational { radicand, negative },
        }
    }

    pub fn rational(&self) -> Option<&Rational> {
        match self {
            Witness::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Whether the witness proves a terminating decimal.
    pub fn is_terminating(&self) -> bool {
        matches!(self, Witness::Rational(r) if r.is_terminating())
    }

    /// Whether a run of nines in the digit rule for two operands with these
    /// witnesses can be the terminating first case. Two terminating operands
    /// always end in positions summing to 0, never in an endless run.
    pub(crate) fn run_may_be_endless(&self, other: &Witness) -> bool {
        !(self.is_terminating() && other.is_terminating())
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Witness::None)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Witness::Rational(r) if r.is_zero())
    }

    /// The sign, when the witness fixes it.
    pub fn sign(&self) -> Option<SignClass> {
        match self {
            Witness::None => None,
            Witness::Rational(r) => Some(match r.signum() {
                Ordering::Less => SignClass::Negative,
                Ordering::Equal => SignClass::Zero,
                Ordering::Greater => SignClass::Positive,
            }),
            Witness::SqrtRational { negative: true, .. } => Some(SignClass::Negative),
            Witness::SqrtRational { negative: false, .. } => Some(SignClass::Positive),
        }
    }

    /// Exact comparison against a terminating candidate value. `None` when
    /// the witness is absent.
    pub fn equals(&self, v: &ScaledDecimal) -> Option<bool> {
        match self {
            Witness::None => None,
            Witness::Rational(r) => Some(*r == Rational::from(v)),
            Witness::SqrtRational { radicand, negative } => {
                // compare squares; sign first
                if v.is_zero() || v.is_negative() != *negative {
                    return Some(false);
                }
                Some(Rational::from(v * v) == *radicand)
            }
        }
    }

    pub fn neg(&self) -> Witness {
        match self {
            Witness::None => Witness::None,
            Witness::Rational(r) => Witness::Rational(-r),
            Witness::SqrtRational { radicand, negative } => Witness::SqrtRational {
                radicand: radicand.clone(),
                negative: !negative,
            },
        }
    }

    pub fn add(&self, other: &Witness) -> Witness {
        use Witness as W;
        match (self, other) {
            (W::Rational(a), W::Rational(b)) => W::Rational(a + b),
            (W::Rational(z), w) | (w, W::Rational(z)) if z.is_zero() => w.clone(),
            (
                W::SqrtRational { radicand: c, negative: s },
                W::SqrtRational { radicand: d, negative: t },
            ) if c == d => {
                if s == t {
                    // √c + √c = √(4c)
                    W::sqrt(c * &Rational::from(4), *s)
                } else {
                    W::Rational(Rational::zero())
                }
            }
            _ => W::None,
        }
    }

    pub fn mul(&self, other: &Witness) -> Witness {
        use Witness as W;
        match (self, other) {
            (W::Rational(a), W::Rational(b)) => W::Rational(a * b),
            (W::Rational(z), _) | (_, W::Rational(z)) if z.is_zero() => W::Rational(Rational::zero()),
            (
                W::SqrtRational { radicand: c, negative: s },
                W::SqrtRational { radicand: d, negative: t },
            ) => W::sqrt(c * d, s != t),
            (W::SqrtRational { radicand, negative }, W::Rational(r))
            | (W::Rational(r), W::SqrtRational { radicand, negative }) => {
                W::sqrt(radicand * &r.square(), *negative != r.is_negative())
            }
            _ => W::None,
        }
    }

    pub fn inv(&self) -> Result<Witness> {
        match self {
            Witness::None => Ok(Witness::None),
            Witness::Rational(r) => Ok(Witness::Rational(r.inv()?)),
            Witness::SqrtRational { radicand, negative } => Ok(Witness::SqrtRational {
                radicand: radicand.inv()?,
                negative: *negative,
            }),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("none"),
            Witness::Rational(r) => write!(f, "{r}"),
            Witness::SqrtRational { radicand, negative } => {
                write!(f, "{}sqrt({radicand})", if *negative { "-" } else { "" })
            }
        }
    }
}

pub fn witness_add(a: &Witness, b: &Witness) -> Witness {
    a.add(b)
}

pub fn witness_mul(a: &Witness, b: &Witness) -> Witness {
    a.mul(b)
}

pub fn witness_neg(a: &Witness) -> Witness {
    a.neg()
}

pub fn witness_inv(a: &Witness) -> Result<Witness, Error> {
    a.inv()
}
