use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::stream::{Fuel, RealDecimal, SignClass};

/// An index `l` with `|x_k - y_k| >= 10^{-l}` for every `k > l`.
///
/// Finds the first position `m` where the expansions differ, then the first
/// `l > m` where the smaller number has a digit of at most 8. Each phase may
/// scan `fuel` positions; equal inputs therefore end in
/// [`Error::FuelExhausted`].
pub fn separate(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> Result<usize> {
    let budget = fuel.budget();
    let mut order = x.integer_part()?.cmp(&y.integer_part()?);
    let mut m = 0;
    while order == Ordering::Equal {
        if m >= budget {
            return Err(Error::fuel(budget));
        }
        m += 1;
        order = x.digit(m)?.cmp(&y.digit(m)?);
    }
    let smaller = if order == Ordering::Less { x } else { y };
    for l in m + 1..=m + budget {
        if smaller.digit(l)?.get() <= 8 {
            return Ok(l);
        }
    }
    Err(Error::fuel(budget))
}

/// Sign classification. Negative exactly when `a0 < 0`; zero only when the
/// witness proves it; otherwise positive once a nonzero digit is seen.
pub fn sign(x: &RealDecimal, fuel: Fuel) -> Result<SignClass> {
    if let Some(s) = x.witness().sign() {
        return Ok(s);
    }
    let a0 = x.integer_part()?;
    if a0.is_negative() {
        return Ok(SignClass::Negative);
    }
    if a0.is_positive() {
        return Ok(SignClass::Positive);
    }
    for k in 1..=fuel.budget() {
        if x.digit(k)?.get() != 0 {
            return Ok(SignClass::Positive);
        }
    }
    Err(Error::fuel(fuel.budget()))
}
