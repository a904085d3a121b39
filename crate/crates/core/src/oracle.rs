//! Exact rational arithmetic and long-division expansions.
//!
//! This is the ground truth the stream operations are checked against, and
//! the value type behind [`Witness`](crate::Witness). Digits of negative
//! rationals come out in complement form (`-13/5` is `(-3).4000...`) and
//! terminating rationals end in zeros, never in a tail of nines.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeral::{format_expansion, pow10, Digit, DisplayMode, ScaledDecimal};

/// Largest denominator [`expansion_period`] will cycle-detect.
pub const PERIOD_DENOMINATOR_CAP: u64 = 10_000_000;

/// Reduced fraction `p/q` with `q > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signum(&self) -> Ordering {
        self.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    /// `floor(self)`, the complement-form integer part.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// The truncation `r_k`: largest `n / 10^k` not above `self`.
    pub fn truncate(&self, k: usize) -> ScaledDecimal {
        let m = (self.numer() * pow10(k)).div_floor(self.denom());
        ScaledDecimal::new(m, k)
    }

    /// Whether the reduced denominator has no prime factors besides 2 and 5.
    pub fn is_terminating(&self) -> bool {
        let mut q = self.denom().clone();
        for p in [2u8, 5] {
            let p = BigInt::from(p);
            while q.is_multiple_of(&p) {
                q /= &p;
            }
        }
        q.is_one()
    }

    /// The exact terminating decimal, if there is one.
    pub fn to_scaled(&self) -> Option<ScaledDecimal> {
        if !self.is_terminating() {
            return None;
        }
        let mut k = 0;
        loop {
            let t = self.truncate(k);
            if Rational::from(&t) == *self {
                return Some(t);
            }
            k += 1;
        }
    }

    /// `Some(s)` with `s >= 0` and `s*s == self` when the square root is rational.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let p = self.numer().sqrt();
        let q = self.denom().sqrt();
        (&p * &p == *self.numer() && &q * &q == *self.denom())
            .then(|| Rational(BigRational::new(p, q)))
    }

    pub fn digit(&self, k: usize) -> BigInt {
        rational_digit(self, k)
    }

    pub fn expansion(&self) -> Result<PeriodicExpansion> {
        expansion_period(self)
    }
}

impl From<&ScaledDecimal> for Rational {
    fn from(v: &ScaledDecimal) -> Self {
        Rational(BigRational::new(v.mantissa().clone(), pow10(v.scale())))
    }
}

impl From<ScaledDecimal> for Rational {
    fn from(v: ScaledDecimal) -> Self {
        Rational::from(&v)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Accepts `p`, `p/q` and anything [`ScaledDecimal`] parses.
impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some((p, q)) = s.split_once('/') {
            let bad = || Error::ParseDecimal(s.to_string());
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return Rational::new(p, q);
        }
        s.parse::<ScaledDecimal>().map(Rational::from)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

pub fn rat_add(r: &Rational, s: &Rational) -> Rational {
    r + s
}

pub fn rat_mul(r: &Rational, s: &Rational) -> Rational {
    r * s
}

pub fn rat_neg(r: &Rational) -> Rational {
    -r
}

pub fn rat_inv(r: &Rational) -> Result<Rational> {
    r.inv()
}

pub fn rat_compare(r: &Rational, s: &Rational) -> Ordering {
    // cross multiplication; denominators are positive
    (r.numer() * s.denom()).cmp(&(s.numer() * r.denom()))
}

/// The `k`-th complement-form digit of `r`: `floor(r)` for `k = 0`, otherwise a
/// value in `0..=9`.
pub fn rational_digit(r: &Rational, k: usize) -> BigInt {
    let scaled = (r.numer() * pow10(k)).div_floor(r.denom());
    if k == 0 {
        scaled
    } else {
        scaled.mod_floor(&BigInt::from(10u8))
    }
}

/// Eventually periodic decimal expansion `integer_part.preperiod(period)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicExpansion {
    pub integer_part: BigInt,
    pub preperiod: Vec<Digit>,
    /// Empty for terminating values.
    pub period: Vec<Digit>,
}

impl PeriodicExpansion {
    /// The `k`-th fractional digit (`k >= 1`).
    pub fn digit(&self, k: usize) -> Digit {
        assert!(k >= 1);
        let i = k - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else if self.period.is_empty() {
            Digit::ZERO
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Sum the expansion back into an exact rational.
    pub fn to_rational(&self) -> Rational {
        let digits_value = |ds: &[Digit]| {
            ds.iter()
                .fold(BigInt::zero(), |acc, d| acc * 10u8 + d.get())
        };
        let a = self.preperiod.len();
        let b = self.period.len();
        let mut r = Rational::from_integer(self.integer_part.clone())
            + Rational(BigRational::new(digits_value(&self.preperiod), pow10(a)));
        if b > 0 {
            let denom = pow10(a) * (pow10(b) - 1u8);
            r = r + Rational(BigRational::new(digits_value(&self.period), denom));
        }
        r
    }
}

impl fmt::Display for PeriodicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = format_expansion(&self.integer_part, &self.preperiod, DisplayMode::Complement);
        if self.period.is_empty() {
            return f.write_str(&head);
        }
        let mut out = if self.preperiod.is_empty() {
            if self.integer_part.is_negative() {
                format!("({}).", self.integer_part)
            } else {
                format!("{}.", self.integer_part)
            }
        } else {
            head
        };
        out.push('(');
        out.extend(self.period.iter().map(|d| char::from(b'0' + d.get())));
        out.push(')');
        f.write_str(&out)
    }
}

/// Minimal preperiod and period of `r`, found by watching long-division
/// remainders for a repeat. Denominators above [`PERIOD_DENOMINATOR_CAP`] are
/// refused since their periods can be enormous.
pub fn expansion_period(r: &Rational) -> Result<PeriodicExpansion> {
    let q = r.denom();
    if *q > BigInt::from(PERIOD_DENOMINATOR_CAP) {
        return Err(Error::PeriodCapExceeded(q.clone()));
    }
    let q: u64 = q.try_into().expect("capped denominator fits in u64");
    let (integer_part, rem) = r.numer().div_mod_floor(&BigInt::from(q));
    let mut rem: u64 = rem.try_into().expect("remainder below denominator");

    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut digits = Vec::new();
    while rem != 0 {
        if let Some(&start) = seen.get(&rem) {
            let period = digits.split_off(start);
            return Ok(PeriodicExpansion {
                integer_part,
                preperiod: digits,
                period,
            });
        }
        seen.insert(rem, digits.len());
        let t = rem * 10;
        digits.push(Digit::new((t / q) as u8).expect("long-division digit"));
        rem = t % q;
    }
    Ok(PeriodicExpansion {
        integer_part,
        preperiod: digits,
        period: Vec::new(),
    })
}
