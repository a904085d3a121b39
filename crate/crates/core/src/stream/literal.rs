use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeral::{Digit, ScaledDecimal};
use crate::oracle::Rational;
use crate::stream::{Chunk, Engine, RealDecimal};

const BLOCK: usize = 32;

/// Long division of `p/q`, floor-based so negative values come out in
/// complement form.
pub(crate) struct RationalEngine {
    numer: BigInt,
    denom: BigInt,
    remainder: Option<BigInt>,
}

impl RationalEngine {
    pub fn new(r: &Rational) -> Self {
        RationalEngine {
            numer: r.numer().clone(),
            denom: r.denom().clone(),
            remainder: None,
        }
    }
}

impl Engine for RationalEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        let Some(rem) = self.remainder.as_mut() else {
            let (int, rem) = self.numer.div_mod_floor(&self.denom);
            self.remainder = Some(rem);
            return Ok(Chunk {
                integer: Some(int),
                digits: Vec::new(),
            });
        };
        let mut digits = Vec::with_capacity(BLOCK);
        for _ in 0..BLOCK {
            if rem.is_zero() {
                digits.push(Digit::ZERO);
                continue;
            }
            *rem *= 10u8;
            let (d, r) = rem.div_rem(&self.denom);
            digits.push(Digit::from_small(&d));
            *rem = r;
        }
        Ok(Chunk {
            integer: None,
            digits,
        })
    }
}

/// A terminating value followed by zeros.
pub(crate) struct TerminatingEngine {
    value: ScaledDecimal,
    emitted: usize,
    case_one: Option<usize>,
}

impl TerminatingEngine {
    pub fn new(value: ScaledDecimal, case_one: Option<usize>) -> Self {
        TerminatingEngine {
            value,
            emitted: 0,
            case_one,
        }
    }

    /// Continue emitting `value` after `emitted` positions produced elsewhere.
    pub fn resume(value: ScaledDecimal, emitted: usize, case_one: Option<usize>) -> Self {
        TerminatingEngine {
            value,
            emitted,
            case_one,
        }
    }
}

impl Engine for TerminatingEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        let upto = self.emitted + BLOCK;
        Ok(Chunk::from_value(&self.value, &mut self.emitted, upto))
    }

    fn case_one(&self) -> Option<usize> {
        self.case_one
    }
}

type DigitFn = Box<dyn Fn(usize) -> u32 + Send + Sync>;

pub(crate) struct DigitFnEngine {
    integer: Option<BigInt>,
    source: DigitFn,
    next: usize,
}

impl DigitFnEngine {
    pub fn new(integer: BigInt, source: DigitFn) -> Self {
        DigitFnEngine {
            integer: Some(integer),
            source,
            next: 1,
        }
    }
}

impl Engine for DigitFnEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        if let Some(integer) = self.integer.take() {
            return Ok(Chunk {
                integer: Some(integer),
                digits: Vec::new(),
            });
        }
        let k = self.next;
        let value = (self.source)(k);
        let digit = u8::try_from(value)
            .ok()
            .and_then(Digit::new)
            .ok_or(Error::NonCanonicalInput {
                position: k,
                value,
                origin: None,
            })?;
        self.next += 1;
        Ok(Chunk {
            integer: None,
            digits: vec![digit],
        })
    }
}

/// Copies another stream position by position. Used where an operation is
/// defined by rewriting into other operations, e.g. signed products.
pub(crate) struct RelayEngine {
    source: RealDecimal,
    next: usize,
}

impl RelayEngine {
    pub fn new(source: RealDecimal) -> Self {
        RelayEngine { source, next: 0 }
    }
}

impl Engine for RelayEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        let chunk = if self.next == 0 {
            Chunk {
                integer: Some(self.source.integer_part()?),
                digits: Vec::new(),
            }
        } else {
            let upto = self.source.known_len().max(self.next + 1) - 1;
            let (_, digits) = self.source.prefix(upto)?;
            Chunk {
                integer: None,
                digits: digits[self.next - 1..].to_vec(),
            }
        };
        self.next += chunk.digits.len() + usize::from(chunk.integer.is_some());
        Ok(chunk)
    }

    fn case_one(&self) -> Option<usize> {
        self.source.case_one_point()
    }
}
