use num_bigint::BigInt;

use crate::error::Result;
use crate::numeral::{Digit, ScaledDecimal};
use crate::stream::RealDecimal;

/// Walks the truncations `x_0, x_1, ...` of a stream, keeping the current
/// mantissa so each step costs one multiply-add.
pub(crate) struct Cursor {
    x: RealDecimal,
    k: usize,
    mantissa: Option<BigInt>,
}

impl Cursor {
    pub fn new(x: RealDecimal) -> Self {
        Cursor {
            x,
            k: 0,
            mantissa: None,
        }
    }

    fn start(&mut self) -> Result<&mut BigInt> {
        if self.mantissa.is_none() {
            self.mantissa = Some(self.x.integer_part()?);
        }
        Ok(self.mantissa.as_mut().unwrap())
    }

    /// Current depth `k`.
    pub fn depth(&self) -> usize {
        self.k
    }

    /// Step to `x_{k+1}` and return the digit read.
    pub fn advance(&mut self) -> Result<Digit> {
        self.start()?;
        let d = self.x.digit(self.k + 1)?;
        let m = self.mantissa.as_mut().unwrap();
        *m *= 10u8;
        *m += d.get();
        self.k += 1;
        Ok(d)
    }

    /// `x_k` for `k` no smaller than the current depth.
    pub fn at(&mut self, k: usize) -> Result<ScaledDecimal> {
        self.start()?;
        assert!(k >= self.k, "cursor only moves forward");
        while self.k < k {
            self.advance()?;
        }
        Ok(self.value())
    }

    /// `x_k` at the current depth. Call after the cursor has started.
    pub fn value(&self) -> ScaledDecimal {
        ScaledDecimal::new(
            self.mantissa.clone().expect("cursor not started"),
            self.k,
        )
    }
}
