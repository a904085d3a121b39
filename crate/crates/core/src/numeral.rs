//! Terminating decimals.
//!
//! A [`ScaledDecimal`] is the exact value `mantissa / 10^scale`. Every truncation
//! `x_k` of an infinite expansion is one of these, as is every intermediate
//! quantity in the addition, multiplication and reciprocal digit rules.
//!
//! Negative values are stored sign-magnitude but their digits are always read
//! in complement form: `-3.12` has integer part `-4` and fractional digits
//! `88`, written `(-4).88`. [`ScaledDecimal::truncate`] is therefore a floor,
//! never a truncation toward zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// `10^k` as a big integer.
pub fn pow10(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u8), k)
}

/// A decimal digit, `0..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Digit(u8);

impl Digit {
    pub const ZERO: Digit = Digit(0);
    pub const NINE: Digit = Digit(9);

    pub fn new(value: u8) -> Option<Digit> {
        (value <= 9).then_some(Digit(value))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// `9 - d`.
    pub fn complement(self) -> Digit {
        Digit(9 - self.0)
    }

    pub(crate) fn from_small(value: &BigInt) -> Digit {
        let v: u8 = value
            .try_into()
            .expect("digit arithmetic produced a value outside 0..=9");
        debug_assert!(v <= 9);
        Digit(v)
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Digit> for u8 {
    fn from(d: Digit) -> u8 {
        d.0
    }
}

/// Exact terminating decimal `mantissa / 10^scale`.
///
/// Representations are not normalized: `1.20` and `1.2` are distinct
/// representations of one value and compare equal.
#[derive(Debug, Clone)]
pub struct ScaledDecimal {
    mantissa: BigInt,
    scale: usize,
}

impl ScaledDecimal {
    pub fn new(mantissa: impl Into<BigInt>, scale: usize) -> Self {
        ScaledDecimal {
            mantissa: mantissa.into(),
            scale,
        }
    }

    pub fn zero() -> Self {
        ScaledDecimal::new(0, 0)
    }

    pub fn one() -> Self {
        ScaledDecimal::new(1, 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ScaledDecimal::new(n, 0)
    }

    /// `10^{-k}`, one unit in the `k`-th place.
    pub fn ulp(k: usize) -> Self {
        ScaledDecimal::new(1, k)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Same value at a scale of at least `scale`.
    pub fn rescale(&self, scale: usize) -> Self {
        assert!(scale >= self.scale, "rescale would lose digits");
        ScaledDecimal::new(&self.mantissa * pow10(scale - self.scale), scale)
    }

    /// Largest `n / 10^k` not above `self`. Negative values floor toward
    /// minus infinity, which is what complement-form digit extraction needs.
    pub fn truncate(&self, k: usize) -> Self {
        if k >= self.scale {
            self.rescale(k)
        } else {
            let m = self.mantissa.div_floor(&pow10(self.scale - k));
            ScaledDecimal::new(m, k)
        }
    }

    /// The integer part in complement form, `floor(self)`.
    pub fn floor(&self) -> BigInt {
        self.truncate(0).mantissa
    }

    /// The `k`-th fractional digit (`k >= 1`) of the complement-form expansion.
    pub fn digit(&self, k: usize) -> Digit {
        assert!(k >= 1, "fractional digits are numbered from 1");
        let t = self.truncate(k);
        Digit::from_small(&t.mantissa.mod_floor(&BigInt::from(10u8)))
    }

    /// Integer part and the first `n` complement digits.
    pub fn expansion(&self, n: usize) -> (BigInt, Vec<Digit>) {
        let t = self.truncate(n);
        let (int, mut frac) = t.mantissa.div_mod_floor(&pow10(n));
        let mut digits = vec![Digit::ZERO; n];
        let ten = BigInt::from(10u8);
        for slot in digits.iter_mut().rev() {
            let (q, r) = frac.div_mod_floor(&ten);
            *slot = Digit::from_small(&r);
            frac = q;
        }
        (int, digits)
    }

    /// Complement rendering with exactly `n` fractional digits, e.g. `(-4).88`.
    pub fn to_complement_string(&self, n: usize) -> String {
        let (int, digits) = self.expansion(n);
        format_expansion(&int, &digits, DisplayMode::Complement)
    }

    /// Sign-magnitude rendering with exactly `n` fractional digits, e.g. `-3.12`.
    ///
    /// Digits beyond `n` are floored away, so pass `n >= self.scale()` for an
    /// exact rendering.
    pub fn to_signed_string(&self, n: usize) -> String {
        let t = self.truncate(n);
        let mag = t.mantissa.abs().to_string();
        let mag = if mag.len() <= n {
            format!("{}{}", "0".repeat(n + 1 - mag.len()), mag)
        } else {
            mag
        };
        let (int, frac) = mag.split_at(mag.len() - n);
        let sign = if t.is_negative() { "-" } else { "" };
        if n == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, usize) {
        let scale = self.scale.max(other.scale);
        (
            self.rescale(scale).mantissa,
            other.rescale(scale).mantissa,
            scale,
        )
    }
}

impl Default for ScaledDecimal {
    fn default() -> Self {
        ScaledDecimal::zero()
    }
}

impl PartialEq for ScaledDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ScaledDecimal {}

impl PartialOrd for ScaledDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaledDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.scale == other.scale {
            return self.mantissa.cmp(&other.mantissa);
        }
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for &ScaledDecimal {
    type Output = ScaledDecimal;
    fn add(self, rhs: &ScaledDecimal) -> ScaledDecimal {
        let (a, b, scale) = self.aligned(rhs);
        ScaledDecimal::new(a + b, scale)
    }
}

impl Add for ScaledDecimal {
    type Output = ScaledDecimal;
    fn add(self, rhs: ScaledDecimal) -> ScaledDecimal {
        &self + &rhs
    }
}

impl Sub for &ScaledDecimal {
    type Output = ScaledDecimal;
    fn sub(self, rhs: &ScaledDecimal) -> ScaledDecimal {
        let (a, b, scale) = self.aligned(rhs);
        ScaledDecimal::new(a - b, scale)
    }
}

impl Sub for ScaledDecimal {
    type Output = ScaledDecimal;
    fn sub(self, rhs: ScaledDecimal) -> ScaledDecimal {
        &self - &rhs
    }
}

impl Mul for &ScaledDecimal {
    type Output = ScaledDecimal;
    fn mul(self, rhs: &ScaledDecimal) -> ScaledDecimal {
        ScaledDecimal::new(&self.mantissa * &rhs.mantissa, self.scale + rhs.scale)
    }
}

impl Mul for ScaledDecimal {
    type Output = ScaledDecimal;
    fn mul(self, rhs: ScaledDecimal) -> ScaledDecimal {
        &self * &rhs
    }
}

impl Neg for &ScaledDecimal {
    type Output = ScaledDecimal;
    fn neg(self) -> ScaledDecimal {
        ScaledDecimal::new(-&self.mantissa, self.scale)
    }
}

impl Neg for ScaledDecimal {
    type Output = ScaledDecimal;
    fn neg(self) -> ScaledDecimal {
        ScaledDecimal::new(-self.mantissa, self.scale)
    }
}

/// Conventional rendering at the representation's own scale.
impl fmt::Display for ScaledDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_signed_string(self.scale))
    }
}

/// Accepts conventional (`-3.12`, `2.48`, `7`) and complement (`(-4).88`)
/// notation. The scale of the result is the number of fractional digits
/// written.
impl FromStr for ScaledDecimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseDecimal(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let parse_frac = |t: &str| -> Result<(BigInt, usize), Error> {
            if !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let m = if t.is_empty() { BigInt::zero() } else { t.parse().map_err(|_| bad())? };
            Ok((m, t.len()))
        };

        if let Some(rest) = s.strip_prefix('(') {
            // complement form: (a0).digits, value a0 + 0.digits
            let close = rest.find(')').ok_or_else(bad)?;
            let int = parse_int(&rest[..close])?;
            let tail = &rest[close + 1..];
            let (frac, scale) = match tail.strip_prefix('.') {
                Some(t) => parse_frac(t)?,
                None if tail.is_empty() => (BigInt::zero(), 0),
                None => return Err(bad()),
            };
            return Ok(ScaledDecimal::new(int * pow10(scale) + frac, scale));
        }

        let (negative, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s),
        };
        let (int_txt, frac_txt) = body.split_once('.').unwrap_or((body, ""));
        let int = parse_int(int_txt)?;
        if int_txt.starts_with('-') {
            return Err(bad());
        }
        let (frac, scale) = parse_frac(frac_txt)?;
        let mag = int * pow10(scale) + frac;
        Ok(ScaledDecimal::new(if negative { -mag } else { mag }, scale))
    }
}

/// The half-open interval `[lower, lower + 10^{-width_scale})`.
///
/// A truncation `x_k` encloses its real as `[x_k, x_k + 10^{-k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalBound {
    pub lower: ScaledDecimal,
    pub width_scale: usize,
}

impl IntervalBound {
    pub fn new(lower: ScaledDecimal, width_scale: usize) -> Self {
        IntervalBound { lower, width_scale }
    }

    pub fn width(&self) -> ScaledDecimal {
        ScaledDecimal::ulp(self.width_scale)
    }

    /// The excluded upper end.
    pub fn upper(&self) -> ScaledDecimal {
        &self.lower + &self.width()
    }

    pub fn contains(&self, v: &ScaledDecimal) -> bool {
        &self.lower <= v && v < &self.upper()
    }
}

/// How an expansion is written out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DisplayMode {
    /// `a0.a1a2...an` verbatim, negative integer parts parenthesised: `(-4).88`.
    Complement,
    /// Conventional sign-magnitude: `-3.12`.
    #[default]
    Signed,
}

impl DisplayMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DisplayMode::Complement => "complement",
            DisplayMode::Signed => "signed",
        }
    }
}

impl FromStr for DisplayMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "complement" => Ok(DisplayMode::Complement),
            "signed" => Ok(DisplayMode::Signed),
            other => Err(format!("unknown display mode {other:?}")),
        }
    }
}

/// Render `integer.digits`.
///
/// In signed mode the prefix is read as the terminating value
/// `integer + 0.d1...dn` and printed sign-magnitude. That is the exact value
/// only when the expansion terminates within the prefix; for a negative
/// non-terminating real use [`RealDecimal::render`](crate::RealDecimal::render),
/// which renders the magnitude from the negated stream instead.
pub fn format_expansion(integer: &BigInt, digits: &[Digit], mode: DisplayMode) -> String {
    match mode {
        DisplayMode::Complement => {
            let mut out = if integer.is_negative() && !digits.is_empty() {
                format!("({integer})")
            } else {
                integer.to_string()
            };
            if !digits.is_empty() {
                out.push('.');
                out.extend(digits.iter().map(|d| char::from(b'0' + d.get())));
            }
            out
        }
        DisplayMode::Signed => prefix_value(integer, digits).to_signed_string(digits.len()),
    }
}

/// `integer + Σ d_k 10^{-k}` as an exact terminating decimal.
pub fn prefix_value(integer: &BigInt, digits: &[Digit]) -> ScaledDecimal {
    let mut m = integer.clone();
    for d in digits {
        m = m * 10u8 + d.get();
    }
    ScaledDecimal::new(m, digits.len())
}
