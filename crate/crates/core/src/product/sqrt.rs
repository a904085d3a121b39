use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::oracle::Rational;
use crate::stream::{Chunk, Engine, RealDecimal, Witness};

/// Square root of a non-negative rational.
///
/// Rational squares come back as the exact rational stream; the strict
/// bracket below has no solution there. Every other radicand is expanded
/// greedily: digit `k` is the largest keeping `x_k^2 < c`, so that
/// `x_k^2 < c < (x_k + 10^{-k})^2` at every step.
pub fn sqrt(c: &Rational) -> Result<RealDecimal> {
    if c.is_negative() {
        return Err(Error::NegativeRadicand(c.clone()));
    }
    if let Some(root) = c.sqrt_exact() {
        return Ok(RealDecimal::from_rational(root));
    }
    let a0 = (c.numer() / c.denom()).sqrt();
    let engine = SqrtEngine {
        rem: c.numer() - &a0 * &a0 * c.denom(),
        q: c.denom().clone(),
        root: a0,
        started: false,
    };
    Ok(RealDecimal::from_engine(engine, Witness::sqrt(c.clone(), false)))
}

/// `c = p/q` and `root` is the mantissa of `x_k`. Invariant:
/// `rem = p * 10^{2k} - root^2 * q > 0`, which is the left half of the
/// bracket. Appending digit `d` changes it to
/// `100 * rem - q * (20 * root * d + d^2)`, so each digit costs a few
/// multiplications by small numbers.
struct SqrtEngine {
    rem: BigInt,
    q: BigInt,
    root: BigInt,
    started: bool,
}

impl Engine for SqrtEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        if !self.started {
            self.started = true;
            return Ok(Chunk {
                integer: Some(self.root.clone()),
                digits: Vec::new(),
            });
        }
        let mut digits = Vec::with_capacity(8);
        for _ in 0..8 {
            self.rem *= 100u8;
            let step = &self.root * &self.q * 20u8;
            let cost = |d: u8| &step * d + &self.q * (d * d);
            let (mut lo, mut hi) = (0u8, 10u8);
            while hi - lo > 1 {
                let mid = (lo + hi) / 2;
                if cost(mid) < self.rem {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            self.rem -= cost(lo);
            self.root = &self.root * 10u8 + lo;
            digits.push(crate::Digit::new(lo).unwrap());
        }
        Ok(Chunk {
            integer: None,
            digits,
        })
    }
}
