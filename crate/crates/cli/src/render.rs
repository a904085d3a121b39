use num_bigint::BigInt;
use rdec::{neg, DisplayMode, Rational, RealDecimal, Witness};
use serde_json::{json, Value};

use crate::error::CliError;

/// The printed pieces of a value: integer part as text (a negative
/// magnitude below one still prints as `-0`) and the digit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub integer_part: String,
    pub digits: String,
    pub text: String,
}

fn digit_string(digits: &[rdec::Digit]) -> String {
    digits.iter().map(|d| char::from(b'0' + d.get())).collect()
}

pub fn render(x: &RealDecimal, n: usize, mode: DisplayMode) -> rdec::Result<Rendered> {
    let (int, digits) = x.prefix(n)?;
    let (integer_part, digits) = if mode == DisplayMode::Signed && int < BigInt::from(0) {
        let (mag, mag_digits) = neg(x).prefix(n)?;
        (format!("-{mag}"), mag_digits)
    } else {
        (int.to_string(), digits)
    };
    Ok(Rendered {
        integer_part,
        digits: digit_string(&digits),
        text: x.render(n, mode)?,
    })
}

/// True when a rational witness equals the printed truncation, so every
/// digit past the prefix is 0.
pub fn is_exact(x: &RealDecimal, n: usize) -> rdec::Result<bool> {
    let Witness::Rational(r) = x.witness() else {
        return Ok(false);
    };
    Ok(Rational::from(&x.truncate(n)?) == *r)
}

pub fn json_result(expr: &str, x: &RealDecimal, n: usize, mode: DisplayMode) -> rdec::Result<Value> {
    let r = render(x, n, mode)?;
    let witness = match x.witness() {
        Witness::None => Value::Null,
        w => Value::String(w.to_string()),
    };
    Ok(json!({
        "expr": expr,
        "digits_requested": n,
        "integer_part": r.integer_part,
        "digits": r.digits,
        "display": mode.as_str(),
        "witness": witness,
        "exact": is_exact(x, n)?,
        "rendered": r.text,
    }))
}

pub fn json_error(expr: &str, e: &CliError) -> Value {
    let span = e.span().map(|s| json!({ "start": s.start, "end": s.end }));
    json!({
        "expr": expr,
        "error": {
            "kind": e.kind(),
            "message": e.to_string(),
            "span": span,
            "exit_code": e.exit_code(),
        }
    })
}
