//! Lazy infinite decimals and the additive operations.
//!
//! A [`RealDecimal`] is `a0.a1a2a3...` with the integer part `a0` in
//! complement form and digits produced on demand. Each stream owns an engine
//! that appends to a memoized prefix; the prefix only ever grows, so a digit
//! once emitted is never retracted.
//!
//! Streams are canonical: `a_k < 9` for infinitely many `k`. Streams built
//! from rationals, square roots and the operations in this crate satisfy that
//! by construction. Streams built with [`RealDecimal::from_digit_fn`] must
//! promise it; [`neg`] in particular relies on it.

mod add;
mod cursor;
mod literal;
mod neg;
mod search;
mod witness;

use std::fmt;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;
use parking_lot::{Mutex, RwLock};

use crate::error::{Result, StreamId};
use crate::numeral::{format_expansion, prefix_value, Digit, DisplayMode, IntervalBound, ScaledDecimal};
use crate::oracle::Rational;

pub use add::{add, sub};
pub(crate) use cursor::Cursor;
pub(crate) use literal::{RelayEngine, TerminatingEngine};
pub use neg::neg;
pub(crate) use neg::neg_internal;
pub use search::{separate, sign};
pub use witness::{witness_add, witness_inv, witness_mul, witness_neg, Witness};

/// Budget for semi-decidable digit searches: the number of positions an
/// operation may scan without certifying anything before it gives up with
/// [`Error::FuelExhausted`](crate::Error::FuelExhausted).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fuel(NonZeroUsize);

impl Fuel {
    pub const DEFAULT_BUDGET: usize = 10_000;

    pub fn new(budget: usize) -> Option<Fuel> {
        NonZeroUsize::new(budget).map(Fuel)
    }

    pub fn budget(self) -> usize {
        self.0.get()
    }
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel::new(Fuel::DEFAULT_BUDGET).unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Negative,
    Zero,
    Positive,
}

/// Output of one engine step: positions appended to the prefix. The first
/// chunk carries the integer part.
#[derive(Debug, Default)]
pub(crate) struct Chunk {
    pub integer: Option<BigInt>,
    pub digits: Vec<Digit>,
}

impl Chunk {
    pub fn is_empty(&self) -> bool {
        self.integer.is_none() && self.digits.is_empty()
    }

    /// Positions `emitted..=upto` of `value`'s expansion; advances `emitted`.
    pub fn from_value(value: &ScaledDecimal, emitted: &mut usize, upto: usize) -> Chunk {
        if upto < *emitted {
            return Chunk::default();
        }
        let (int, digits) = value.expansion(upto);
        let chunk = Chunk {
            integer: (*emitted == 0).then_some(int),
            digits: digits[emitted.saturating_sub(1)..].to_vec(),
        };
        *emitted = upto + 1;
        chunk
    }
}

/// Producer behind a stream.
pub(crate) trait Engine: Send {
    /// Append at least one position unless an error stops the search.
    fn next_chunk(&mut self) -> Result<Chunk>;

    /// The `m` at which a terminating value was confirmed, if any.
    fn case_one(&self) -> Option<usize> {
        None
    }
}

#[derive(Debug)]
struct Known {
    integer: BigInt,
    digits: Vec<Digit>,
}

struct Inner {
    id: StreamId,
    /// Internal helper streams let errors pass through unstamped so they are
    /// attributed to the public stream that owns them.
    transparent: bool,
    witness: Witness,
    known: RwLock<Option<Known>>,
    engine: Mutex<Box<dyn Engine>>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A real number as a lazily computed, memoized decimal expansion.
///
/// Cloning is cheap and shares the memo. Queries from several threads are
/// safe; the prefix is published under a lock so no reader sees a torn
/// result.
#[derive(Clone)]
pub struct RealDecimal {
    inner: Arc<Inner>,
}

impl RealDecimal {
    pub(crate) fn from_engine(engine: impl Engine + 'static, witness: Witness) -> Self {
        Self::build(Box::new(engine), witness, false)
    }

    pub(crate) fn from_engine_internal(engine: impl Engine + 'static, witness: Witness) -> Self {
        Self::build(Box::new(engine), witness, true)
    }

    fn build(engine: Box<dyn Engine>, witness: Witness, transparent: bool) -> Self {
        RealDecimal {
            inner: Arc::new(Inner {
                id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
                transparent,
                witness,
                known: RwLock::new(None),
                engine: Mutex::new(engine),
            }),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        let engine = literal::RationalEngine::new(&r);
        RealDecimal::from_engine(engine, Witness::Rational(r))
    }

    pub fn from_scaled(v: ScaledDecimal) -> Self {
        let w = Witness::Rational(Rational::from(&v));
        RealDecimal::from_engine(TerminatingEngine::new(v, None), w)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        RealDecimal::from_scaled(ScaledDecimal::from_integer(n))
    }

    pub fn zero() -> Self {
        RealDecimal::from_integer(0)
    }

    pub fn one() -> Self {
        RealDecimal::from_integer(1)
    }

    /// A stream with no exactness witness: integer part `integer` and
    /// fractional digit `k` given by `digit(k)` for `k >= 1`.
    ///
    /// The source must be deterministic and canonical (not ending in all
    /// nines). Values above 9 are reported as
    /// [`Error::NonCanonicalInput`](crate::Error::NonCanonicalInput) when
    /// queried.
    pub fn from_digit_fn<F>(integer: impl Into<BigInt>, digit: F) -> Self
    where
        F: Fn(usize) -> u32 + Send + Sync + 'static,
    {
        let engine = literal::DigitFnEngine::new(integer.into(), Box::new(digit));
        RealDecimal::from_engine(engine, Witness::None)
    }

    pub fn id(&self) -> StreamId {
        self.inner.id
    }

    pub fn witness(&self) -> &Witness {
        &self.inner.witness
    }

    /// If this stream was resolved as a terminating value confirmed at
    /// position `m` (the first case of the addition and multiplication
    /// rules, or a terminating negation), returns `m`. Only meaningful after
    /// digits have been requested.
    pub fn case_one_point(&self) -> Option<usize> {
        self.inner.engine.lock().case_one()
    }

    /// Number of positions (integer part included) currently memoized.
    pub fn known_len(&self) -> usize {
        match &*self.inner.known.read() {
            Some(k) => 1 + k.digits.len(),
            None => 0,
        }
    }

    /// Make sure positions `0..=pos` are memoized.
    fn ensure(&self, pos: usize) -> Result<()> {
        if self.known_len() > pos {
            return Ok(());
        }
        let mut engine = self.inner.engine.lock();
        while self.known_len() <= pos {
            let chunk = engine.next_chunk().map_err(|e| {
                if self.inner.transparent {
                    e
                } else {
                    e.stamp(self.inner.id)
                }
            })?;
            self.publish(chunk);
        }
        Ok(())
    }

    fn publish(&self, chunk: Chunk) {
        let mut known = self.inner.known.write();
        match (&mut *known, chunk.integer) {
            (None, Some(integer)) => {
                *known = Some(Known {
                    integer,
                    digits: chunk.digits,
                });
            }
            (Some(k), None) => k.digits.extend(chunk.digits),
            (None, None) => assert!(chunk.digits.is_empty(), "engine emitted digits before the integer part"),
            (Some(_), Some(_)) => panic!("engine emitted the integer part twice"),
        }
    }

    /// `a0`, the integer part in complement form.
    pub fn integer_part(&self) -> Result<BigInt> {
        self.ensure(0)?;
        Ok(self.inner.known.read().as_ref().unwrap().integer.clone())
    }

    /// Fractional digit `k >= 1`.
    pub fn digit(&self, k: usize) -> Result<Digit> {
        assert!(k >= 1, "fractional digits are numbered from 1");
        self.ensure(k)?;
        Ok(self.inner.known.read().as_ref().unwrap().digits[k - 1])
    }

    /// Integer part and the first `n` digits.
    pub fn prefix(&self, n: usize) -> Result<(BigInt, Vec<Digit>)> {
        self.ensure(n)?;
        let known = self.inner.known.read();
        let k = known.as_ref().unwrap();
        Ok((k.integer.clone(), k.digits[..n].to_vec()))
    }

    /// The truncation `x_k = a0.a1...ak`, so `x_k <= x < x_k + 10^{-k}`.
    pub fn truncate(&self, k: usize) -> Result<ScaledDecimal> {
        let (int, digits) = self.prefix(k)?;
        Ok(prefix_value(&int, &digits))
    }

    /// `[x_k, x_k + 10^{-k})`.
    pub fn enclosure(&self, k: usize) -> Result<IntervalBound> {
        Ok(IntervalBound::new(self.truncate(k)?, k))
    }

    /// Render `n` fractional digits.
    ///
    /// Complement mode prints the stream verbatim. Signed mode prints
    /// non-negative values the same way and negative values as `-` followed
    /// by the digits of the negated stream, which is the conventional
    /// truncation of the magnitude.
    pub fn render(&self, n: usize, mode: DisplayMode) -> Result<String> {
        let (int, digits) = self.prefix(n)?;
        if mode == DisplayMode::Complement || !int.is_negative() {
            return Ok(format_expansion(&int, &digits, DisplayMode::Complement));
        }
        let (mag_int, mag_digits) = neg(self).prefix(n)?;
        Ok(format!(
            "-{}",
            format_expansion(&mag_int, &mag_digits, DisplayMode::Complement)
        ))
    }
}

impl fmt::Debug for RealDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let known = self.inner.known.read();
        let prefix = known
            .as_ref()
            .map(|k| format_expansion(&k.integer, &k.digits, DisplayMode::Complement));
        f.debug_struct("RealDecimal")
            .field("id", &self.inner.id)
            .field("witness", &self.inner.witness)
            .field("known", &prefix)
            .finish()
    }
}

impl From<Rational> for RealDecimal {
    fn from(r: Rational) -> Self {
        RealDecimal::from_rational(r)
    }
}

impl From<ScaledDecimal> for RealDecimal {
    fn from(v: ScaledDecimal) -> Self {
        RealDecimal::from_scaled(v)
    }
}
