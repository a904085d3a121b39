#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rdec::{RealDecimal, Rational, ScaledDecimal};

/// A value with an exact description independent of the stream machinery.
#[derive(Debug, Clone)]
pub enum Val {
    Rat(Rational),
    /// `±sqrt(c)` for a non-square positive integer `c`.
    Root { c: u32, negative: bool },
}

impl Val {
    pub fn stream(&self) -> RealDecimal {
        match self {
            Val::Rat(r) => RealDecimal::from_rational(r.clone()),
            Val::Root { c, negative } => {
                let x = rdec::sqrt(&Rational::from(*c as i64)).unwrap();
                if *negative {
                    rdec::neg(&x)
                } else {
                    x
                }
            }
        }
    }

    /// `x_k` computed with plain integer arithmetic.
    pub fn truncation(&self, k: usize) -> ScaledDecimal {
        let scale = BigInt::from(10u8).pow(k as u32);
        match self {
            Val::Rat(r) => ScaledDecimal::new((r.numer() * &scale).div_floor(r.denom()), k),
            Val::Root { c, negative } => {
                let root = (BigInt::from(*c) * &scale * &scale).sqrt();
                // c is not a square, so sqrt(c) * 10^k is never an integer
                let m = if *negative { -root - 1 } else { root };
                ScaledDecimal::new(m, k)
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Val::Rat(r) => r.is_negative(),
            Val::Root { negative, .. } => *negative,
        }
    }
}

pub fn is_square(n: u32) -> bool {
    let r = (n as f64).sqrt() as u32;
    (r.saturating_sub(1)..=r + 1).any(|t| t * t == n)
}

/// Reduced rational with `|p|, q <= bound`.
pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

pub fn nonneg_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (0..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

pub fn root(max: u32) -> impl Strategy<Value = Val> {
    (2..=max)
        .prop_filter("non-square radicand", |c| !is_square(*c))
        .prop_flat_map(|c| any::<bool>().prop_map(move |negative| Val::Root { c, negative }))
}

/// Mixed rational and square-root values of either sign.
pub fn val() -> impl Strategy<Value = Val> {
    prop_oneof![
        3 => rational(1_000_000).prop_map(Val::Rat),
        1 => root(200),
    ]
}

pub fn nonneg_val() -> impl Strategy<Value = Val> {
    prop_oneof![
        3 => nonneg_rational(1_000_000).prop_map(Val::Rat),
        1 => root(200).prop_map(|v| match v {
            Val::Root { c, .. } => Val::Root { c, negative: false },
            v => v,
        }),
    ]
}

/// `x_k` of a stream as an exact value.
pub fn trunc(x: &RealDecimal, k: usize) -> ScaledDecimal {
    x.truncate(k).unwrap()
}

/// Complement rendering of the first `n` digits of the exact rational `r`.
pub fn oracle_digits(r: &Rational, n: usize) -> (BigInt, Vec<u8>) {
    let t = Val::Rat(r.clone()).truncation(n);
    let (q, rem) = t.mantissa().div_mod_floor(&BigInt::from(10u8).pow(n as u32));
    let s = format!("{:0>width$}", rem.to_string(), width = n);
    (q, s.bytes().map(|b| b - b'0').collect())
}

pub fn stream_digits(x: &RealDecimal, n: usize) -> (BigInt, Vec<u8>) {
    let (a0, ds) = x.prefix(n).unwrap();
    (a0, ds.iter().map(|d| d.get()).collect())
}

/// A witness-less copy of `x`, read through the digit-function constructor.
pub fn opaque(x: &RealDecimal) -> RealDecimal {
    let src = x.clone();
    RealDecimal::from_digit_fn(x.integer_part().unwrap(), move |k| src.digit(k).unwrap().get() as u32)
}

pub fn ulp(k: usize) -> ScaledDecimal {
    ScaledDecimal::ulp(k)
}

pub fn abs(v: &ScaledDecimal) -> ScaledDecimal {
    if v.is_negative() {
        -v
    } else {
        v.clone()
    }
}
