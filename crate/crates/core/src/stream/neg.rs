use num_bigint::BigInt;

use crate::error::Result;
use crate::stream::{Chunk, Engine, RealDecimal, TerminatingEngine};

/// Additive inverse.
///
/// A stream whose witness proves it terminating, `x = x_m`, negates exactly
/// to `-x_m` followed by zeros. Every other stream is complemented digit by
/// digit: `(-1 - a0).(9 - a1)(9 - a2)...`. The complement is only the
/// negation when the input has infinitely many nonzero digits, which is why
/// witness-less streams must be canonical.
pub fn neg(x: &RealDecimal) -> RealDecimal {
    negate(x, false)
}

pub(crate) fn neg_internal(x: &RealDecimal) -> RealDecimal {
    negate(x, true)
}

fn negate(x: &RealDecimal, internal: bool) -> RealDecimal {
    let witness = x.witness().neg();
    if let Some(v) = x.witness().rational().and_then(|r| r.to_scaled()) {
        let m = v.scale();
        let engine = TerminatingEngine::new(-v, Some(m));
        return if internal {
            RealDecimal::from_engine_internal(engine, witness)
        } else {
            RealDecimal::from_engine(engine, witness)
        };
    }
    let engine = ComplementEngine {
        x: x.clone(),
        next: 0,
    };
    if internal {
        RealDecimal::from_engine_internal(engine, witness)
    } else {
        RealDecimal::from_engine(engine, witness)
    }
}

struct ComplementEngine {
    x: RealDecimal,
    next: usize,
}

impl Engine for ComplementEngine {
    fn next_chunk(&mut self) -> Result<Chunk> {
        let chunk = if self.next == 0 {
            let a0 = self.x.integer_part()?;
            Chunk {
                integer: Some(BigInt::from(-1) - a0),
                digits: Vec::new(),
            }
        } else {
            // whatever the operand already has memoized, at least one digit
            let upto = self.x.known_len().max(self.next + 1) - 1;
            let mut digits = Vec::with_capacity(upto + 1 - self.next);
            for k in self.next..=upto {
                digits.push(self.x.digit(k)?.complement());
            }
            Chunk {
                integer: None,
                digits,
            }
        };
        self.next += chunk.digits.len() + usize::from(chunk.integer.is_some());
        Ok(chunk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Rational;
    use crate::stream::test_support::*;
    use crate::stream::Witness;

    #[test]
    fn complement_of_repeating_sevens() {
        let x = neg(&rd(7, 9));
        assert_eq!(show(&x, 5), "(-1).22222");
        assert_eq!(x.witness(), &Witness::Rational(q(-7, 9)));
        assert_eq!(x.case_one_point(), None);
    }

    #[test]
    fn terminating_value_negates_exactly() {
        let x = neg(&rd(248, 100));
        assert_eq!(show(&x, 4), "(-3).5200");
        assert_eq!(x.case_one_point(), Some(2));
        assert_eq!(x.truncate(6).unwrap(), "-2.48".parse().unwrap());
    }

    #[test]
    fn zero_stays_zero() {
        let z = neg(&RealDecimal::zero());
        assert_eq!(show(&z, 3), "0.000");
    }

    #[test]
    fn involution() {
        let two = crate::product::sqrt(&Rational::from(2)).unwrap();
        for x in [rd(7, 9), rd(-1, 7), rd(5, 4), two] {
            let back = neg(&neg(&x));
            assert_eq!(show(&back, 40), show(&x, 40));
        }
    }

    #[test]
    fn witness_less_streams_use_the_complement_formula() {
        let x = opaque(&rd(1, 3));
        let n = neg(&x);
        assert_eq!(show(&n, 6), "(-1).666666");
        assert_eq!(n.witness(), &Witness::None);
    }
}
