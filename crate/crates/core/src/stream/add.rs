use crate::error::{Error, Result};
use crate::numeral::ScaledDecimal;
use crate::stream::{neg_internal, Chunk, Cursor, Engine, Fuel, RealDecimal, TerminatingEngine};

/// Sum of two streams, digit by digit.
///
/// Positions `k` where `a_k + b_k != 9` fix the result prefix:
/// `(x+y)_{k-1} = (x_k + y_k)_{k-1}`. A run of positions summing to 9 leaves
/// the prefix open; if the run started at `m + 1` and never ends, the sum is
/// the terminating value `x_m + y_m + 10^{-m}`. That can only be confirmed
/// with exact witnesses, so at the start of every run the candidate is
/// compared against the witness sum. Without a witness the scan continues
/// until the run ends or `fuel` positions have been scanned, in which case
/// the query fails with [`Error::FuelExhausted`] and nothing is emitted.
pub fn add(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> RealDecimal {
    let witness = x.witness().add(y.witness());
    RealDecimal::from_engine(AddEngine::new(x, y, fuel), witness)
}

/// `x + (-y)`.
pub fn sub(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> RealDecimal {
    add(x, &neg_internal(y), fuel)
}

enum Phase {
    Scanning,
    Terminal(TerminatingEngine),
}

struct AddEngine {
    x: Cursor,
    y: Cursor,
    witness: crate::Witness,
    /// false when both operands terminate, so no run of nines is endless
    endless_runs: bool,
    fuel: Fuel,
    emitted: usize,
    /// positions scanned since the last fixed prefix
    stall: usize,
    /// last fixed prefix `(x_k + y_k)_{k-1}`
    fixed: Option<ScaledDecimal>,
    phase: Phase,
}

impl AddEngine {
    fn new(x: &RealDecimal, y: &RealDecimal, fuel: Fuel) -> Self {
        AddEngine {
            x: Cursor::new(x.clone()),
            y: Cursor::new(y.clone()),
            witness: x.witness().add(y.witness()),
            endless_runs: x.witness().run_may_be_endless(y.witness()),
            fuel,
            emitted: 0,
            stall: 0,
            fixed: None,
            phase: Phase::Scanning,
        }
    }

    fn fix(&mut self, prefix: ScaledDecimal) -> Chunk {
        if let Some(prev) = &self.fixed {
            // later truncation sums never revise an earlier fixed prefix
            debug_assert_eq!(prefix.truncate(prev.scale()), *prev);
        }
        let upto = prefix.scale();
        let chunk = Chunk::from_value(&prefix, &mut self.emitted, upto);
        self.fixed = Some(prefix);
        chunk
    }
}

impl Engine for AddEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        loop {
            if let Phase::Terminal(t) = &mut self.phase {
                return t.next_chunk();
            }
            let a = self.x.advance()?;
            let b = self.y.advance()?;
            let k = self.x.depth();
            let sum = &self.x.value() + &self.y.value();

            if a.get() + b.get() != 9 {
                self.stall = 0;
                let chunk = self.fix(sum.truncate(k - 1));
                if !chunk.is_empty() {
                    return Ok(chunk);
                }
                continue;
            }

            if self.stall == 0 && self.endless_runs {
                // run of nines starts at k = m + 1; the candidate
                // x_m + y_m + 10^{-m} equals x_k + y_k + 10^{-k}
                let m = k - 1;
                let candidate = (&sum + &ScaledDecimal::ulp(k)).truncate(m);
                debug_assert_eq!(candidate, &sum + &ScaledDecimal::ulp(k));
                if self.witness.equals(&candidate) == Some(true) {
                    if let Some(prev) = &self.fixed {
                        debug_assert_eq!(candidate.truncate(prev.scale()), *prev);
                    }
                    self.phase = Phase::Terminal(TerminatingEngine::resume(
                        candidate,
                        self.emitted,
                        Some(m),
                    ));
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
        match &self.phase {
            Phase::Terminal(t) => t.case_one(),
            Phase::Scanning => None,
        }
    }
}
