use num_traits::Signed;

use crate::error::{Error, Result};
use crate::numeral::ScaledDecimal;
use crate::product::ScaleParam;
use crate::stream::{
    neg_internal, Chunk, Cursor, Engine, Fuel, RealDecimal, RelayEngine, TerminatingEngine,
    Witness,
};

/// Product of two streams.
///
/// For non-negative operands, with `s` from [`ScaleParam`], position `k` is
/// examined through `P_k = x_{k+s} * y_{k+s}`. When the `k`-th digit of `P_k`
/// is not 9 the prefix `(xy)_{k-1} = (P_k)_{k-1}` is fixed. A run of nines
/// starting at `m + 1` suggests the terminating value
/// `(P_m)_m + 10^{-m}`, which is accepted only when the witness product
/// confirms it exactly. Otherwise the scan goes on under `fuel`.
///
/// Signed operands are reduced to the non-negative case: `xy = (-x)(-y)`
/// when both are negative and `xy = -(x(-y))` when one is.
pub fn mul(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> RealDecimal {
    let witness = x.witness().mul(y.witness());
    RealDecimal::from_engine(MulEngine::new(x, y, fuel, witness.clone()), witness)
}

pub(crate) fn mul_internal(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> RealDecimal {
    let witness = x.witness().mul(y.witness());
    RealDecimal::from_engine_internal(MulEngine::new(x, y, fuel, witness.clone()), witness)
}

enum Phase {
    Pending,
    Scan(Box<ProductScan>),
    Relay(RelayEngine),
}

struct MulEngine {
    x: RealDecimal,
    y: RealDecimal,
    fuel: Fuel,
    witness: Witness,
    phase: Phase,
}

impl MulEngine {
    fn new(x: &RealDecimal, y: &RealDecimal, fuel: Fuel, witness: Witness) -> Self {
        MulEngine {
            x: x.clone(),
            y: y.clone(),
            fuel,
            witness,
            phase: Phase::Pending,
        }
    }

    fn route(&mut self) -> Result<()> {
        let a0 = self.x.integer_part()?;
        let b0 = self.y.integer_part()?;
        let (x, y, f) = (&self.x, &self.y, self.fuel);
        self.phase = match (a0.is_negative(), b0.is_negative()) {
            (false, false) => Phase::Scan(Box::new(ProductScan::new(
                x,
                y,
                ScaleParam::for_integer_parts(&a0, &b0),
                self.witness.clone(),
                f,
            ))),
            (true, true) => Phase::Relay(RelayEngine::new(mul_internal(
                &neg_internal(x),
                &neg_internal(y),
                f,
            ))),
            (true, false) => Phase::Relay(RelayEngine::new(neg_internal(&mul_internal(
                &neg_internal(x),
                y,
                f,
            )))),
            (false, true) => Phase::Relay(RelayEngine::new(neg_internal(&mul_internal(
                x,
                &neg_internal(y),
                f,
            )))),
        };
        Ok(())
    }
}

impl Engine for MulEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        if let Phase::Pending = self.phase {
            self.route()?;
        }
        match &mut self.phase {
            Phase::Scan(scan) => scan.next_chunk(),
            Phase::Relay(relay) => relay.next_chunk(),
            Phase::Pending => unreachable!(),
        }
    }

    fn case_one(&self) -> Option<usize> {
        match &self.phase {
            Phase::Scan(scan) => scan.case_one(),
            Phase::Relay(relay) => relay.case_one(),
            Phase::Pending => None,
        }
    }
}

/// The digit rule for non-negative operands.
struct ProductScan {
    x: Cursor,
    y: Cursor,
    s: usize,
    /// last examined position `k`, and `P_k`
    k: usize,
    last: Option<ScaledDecimal>,
    witness: Witness,
    endless_runs: bool,
    fuel: Fuel,
    emitted: usize,
    stall: usize,
    fixed: Option<ScaledDecimal>,
    terminal: Option<TerminatingEngine>,
}

impl ProductScan {
    fn new(x: &RealDecimal, y: &RealDecimal, s: ScaleParam, witness: Witness, fuel: Fuel) -> Self {
        ProductScan {
            x: Cursor::new(x.clone()),
            y: Cursor::new(y.clone()),
            s: s.get(),
            k: 0,
            last: None,
            witness,
            endless_runs: x.witness().run_may_be_endless(y.witness()),
            fuel,
            emitted: 0,
            stall: 0,
            fixed: None,
            terminal: None,
        }
    }

    fn product_at(&mut self, k: usize) -> Result<ScaledDecimal> {
        let xs = self.x.at(k + self.s)?;
        let ys = self.y.at(k + self.s)?;
        Ok(&xs * &ys)
    }

    fn next_chunk(&mut self) -> Result<Chunk> {
        if self.last.is_none() {
            self.last = Some(self.product_at(0)?);
        }
        loop {
            if let Some(t) = &mut self.terminal {
                return t.next_chunk();
            }
            let k = self.k + 1;
            let p = self.product_at(k)?;
            let previous = self.last.replace(p.clone()).unwrap();
            self.k = k;

            if p.digit(k).get() != 9 {
                self.stall = 0;
                let prefix = p.truncate(k - 1);
                if let Some(prev) = &self.fixed {
                    // (x_n y_n)_{k_i - 1} agrees with (x_{k_i+s} y_{k_i+s})_{k_i - 1}
                    debug_assert_eq!(prefix.truncate(prev.scale()), *prev);
                }
                let chunk = Chunk::from_value(&prefix, &mut self.emitted, k - 1);
                self.fixed = Some(prefix);
                if !chunk.is_empty() {
                    return Ok(chunk);
                }
                continue;
            }

            if self.stall == 0 && self.endless_runs {
                let m = k - 1;
                let candidate = &previous.truncate(m) + &ScaledDecimal::ulp(m);
                if self.witness.equals(&candidate) == Some(true) {
                    if let Some(prev) = &self.fixed {
                        debug_assert_eq!(candidate.truncate(prev.scale()), *prev);
                    }
                    self.terminal = Some(TerminatingEngine::resume(candidate, self.emitted, Some(m)));
                    continue;
                }
            }
            self.stall += 1;
            if self.stall >= self.fuel.budget() {
                return Err(Error::fuel(self.fuel.budget()));
            }
        }
    }

    fn case_one(&self) -> Option<usize> {
        self.terminal.as_ref().and_then(|t| t.case_one())
    }
}
