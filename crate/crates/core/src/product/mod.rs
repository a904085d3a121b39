//! Multiplication, reciprocal, division and square root.

mod mul;
mod recip;
mod sqrt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Result;
use crate::numeral::pow10;
use crate::stream::{Fuel, RealDecimal};

pub use mul::mul;
pub use recip::recip;
pub use sqrt::sqrt;

/// Number of guard digits `s` used by multiplication, with `x + y <= 10^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaleParam(pub usize);

impl ScaleParam {
    /// Smallest `s` with `a0 + b0 + 2 <= 10^s`. Since `x < a0 + 1` and
    /// `y < b0 + 1`, that forces `x + y <= 10^s`.
    pub fn for_integer_parts(a0: &BigInt, b0: &BigInt) -> ScaleParam {
        assert!(
            !a0.is_negative() && !b0.is_negative(),
            "scale is defined for non-negative operands"
        );
        let need = a0 + b0 + 2u8;
        let mut s = 0;
        while pow10(s) < need {
            s += 1;
        }
        ScaleParam(s)
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// [`ScaleParam`] for two non-negative streams, read off their integer parts.
pub fn choose_scale(x: &RealDecimal, y: &RealDecimal) -> Result<ScaleParam> {
    Ok(ScaleParam::for_integer_parts(
        &x.integer_part()?,
        &y.integer_part()?,
    ))
}

/// `x * y^{-1}`.
pub fn div(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> Result<RealDecimal> {
    let inv = recip::recip_internal(y, fuel)?;
    Ok(mul(x, &inv, fuel))
}
