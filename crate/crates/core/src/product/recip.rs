use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeral::{pow10, ScaledDecimal};
use crate::stream::{
    neg_internal, sign, Chunk, Cursor, Engine, Fuel, RealDecimal, RelayEngine, SignClass, Witness,
};

/// Reciprocal.
///
/// For positive `x` the result `y` is the unique expansion with
/// `x * y_k <= 1 < x * (y_k + 10^{-k})` for every `k`. The integer part is
/// found by doubling then bisection, each later digit by bisection over
/// `0..=9`, all on that bracket. The comparisons are exact for rational and
/// square-root witnesses. Without a witness they are certified on the
/// enclosure `x ∈ [x_n, x_n + 10^{-n})`, refining `n` under `fuel`; when
/// `x * y_k` is exactly 1 neither side can ever be certified and the query
/// fails with [`Error::FuelExhausted`].
///
/// Negative `x` uses `x^{-1} = -((-x)^{-1})`. A witness that proves `x = 0`
/// fails immediately with [`Error::DivisionByZero`]; a witness-less zero
/// cannot be told apart from a tiny positive number and exhausts its fuel.
pub fn recip(x: &RealDecimal, fuel: Fuel) -> Result<RealDecimal> {
    build(x, fuel, false)
}

pub(crate) fn recip_internal(x: &RealDecimal, fuel: Fuel) -> Result<RealDecimal> {
    build(x, fuel, true)
}

fn build(x: &RealDecimal, fuel: Fuel, internal: bool) -> Result<RealDecimal> {
    let witness = x.witness().inv()?;
    let engine = match x.witness().sign() {
        Some(SignClass::Negative) => RecipEngine::Relay(negative_route(x, fuel)?),
        Some(SignClass::Positive) => {
            RecipEngine::Scan(BracketScan::new(Comparator::exact(x.witness())))
        }
        Some(SignClass::Zero) => return Err(Error::DivisionByZero),
        None => RecipEngine::Pending {
            x: x.clone(),
            fuel,
        },
    };
    Ok(if internal {
        RealDecimal::from_engine_internal(engine, witness)
    } else {
        RealDecimal::from_engine(engine, witness)
    })
}

fn negative_route(x: &RealDecimal, fuel: Fuel) -> Result<RelayEngine> {
    let inner = recip_internal(&neg_internal(x), fuel)?;
    Ok(RelayEngine::new(neg_internal(&inner)))
}

enum RecipEngine {
    Pending { x: RealDecimal, fuel: Fuel },
    Scan(BracketScan),
    Relay(RelayEngine),
}

impl Engine for RecipEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        if let RecipEngine::Pending { x, fuel } = self {
            let (x, fuel) = (x.clone(), *fuel);
            *self = match sign(&x, fuel)? {
                SignClass::Negative => RecipEngine::Relay(negative_route(&x, fuel)?),
                SignClass::Positive => RecipEngine::Scan(BracketScan::new(Comparator::Interval {
                    x: Cursor::new(x),
                    fuel,
                })),
                SignClass::Zero => unreachable!("zero is only reported with a witness"),
            };
        }
        match self {
            RecipEngine::Scan(scan) => scan.next_chunk(),
            RecipEngine::Relay(relay) => relay.next_chunk(),
            RecipEngine::Pending { .. } => unreachable!(),
        }
    }
}

/// Decides `x * y <= 1` for a positive `x` and non-negative `y`.
enum Comparator {
    /// `x = p/q`
    Rational { p: BigInt, q: BigInt },
    /// `x = sqrt(p/q)`
    Sqrt { p: BigInt, q: BigInt },
    Interval { x: Cursor, fuel: Fuel },
}

impl Comparator {
    fn exact(w: &Witness) -> Comparator {
        match w {
            Witness::Rational(r) => Comparator::Rational {
                p: r.numer().clone(),
                q: r.denom().clone(),
            },
            Witness::SqrtRational { radicand, .. } => Comparator::Sqrt {
                p: radicand.numer().clone(),
                q: radicand.denom().clone(),
            },
            Witness::None => unreachable!("exact comparator needs a witness"),
        }
    }

    fn at_most_one(&mut self, y: &ScaledDecimal) -> Result<bool> {
        match self {
            Comparator::Rational { p, q } => Ok(&*p * y.mantissa() <= &*q * pow10(y.scale())),
            Comparator::Sqrt { p, q } => {
                let m = y.mantissa();
                Ok(&*p * m * m <= &*q * pow10(2 * y.scale()))
            }
            Comparator::Interval { x, fuel } => {
                let one = ScaledDecimal::one();
                let mut lower = x.at(x.depth())?;
                for _ in 0..fuel.budget() {
                    let upper = &lower + &ScaledDecimal::ulp(x.depth());
                    if &upper * y <= one {
                        return Ok(true);
                    }
                    if &lower * y > one {
                        return Ok(false);
                    }
                    x.advance()?;
                    lower = x.value();
                }
                Err(Error::fuel(fuel.budget()))
            }
        }
    }
}

/// Emits `y` one position at a time, keeping the bracket
/// `x * y_k <= 1 < x * (y_k + 10^{-k})`.
struct BracketScan {
    cmp: Comparator,
    y: Option<ScaledDecimal>,
}

impl BracketScan {
    fn new(cmp: Comparator) -> Self {
        BracketScan { cmp, y: None }
    }

    fn integer_part(&mut self) -> Result<BigInt> {
        let fits = |cmp: &mut Comparator, b: &BigInt| cmp.at_most_one(&ScaledDecimal::from_integer(b.clone()));
        if !fits(&mut self.cmp, &BigInt::one())? {
            return Ok(BigInt::from(0));
        }
        // x * lo <= 1 < x * hi
        let mut lo = BigInt::one();
        let mut hi = BigInt::from(2);
        while fits(&mut self.cmp, &hi)? {
            lo = hi.clone();
            hi *= 2;
        }
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) / 2;
            if fits(&mut self.cmp, &mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(lo)
    }

    fn next_chunk(&mut self) -> Result<Chunk> {
        let Some(y) = &self.y else {
            let b0 = self.integer_part()?;
            self.y = Some(ScaledDecimal::from_integer(b0.clone()));
            return Ok(Chunk {
                integer: Some(b0),
                digits: Vec::new(),
            });
        };
        let k = y.scale() + 1;
        let base = y.mantissa() * 10u8;
        // digit 0 always fits because y_{k-1} did
        let (mut lo, mut hi) = (0u8, 10u8);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            let candidate = ScaledDecimal::new(&base + mid, k);
            if self.cmp.at_most_one(&candidate)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let next = ScaledDecimal::new(base + lo, k);
        let digit = next.digit(k);
        self.y = Some(next);
        Ok(Chunk {
            integer: None,
            digits: vec![digit],
        })
    }
}
