use std::collections::HashMap;

use rdec::{add, div, mul, neg, sqrt, sub, Fuel, RealDecimal, StreamId};

use crate::error::CliError;
use crate::parser::{Expr, ExprKind, Span};

/// A lazily evaluated expression. Digits are computed on demand, so errors
/// can still surface while rendering; [`Evaluated::blame`] maps them back to
/// the subexpression whose stream raised them.
pub struct Evaluated {
    pub value: RealDecimal,
    root: Span,
    origins: HashMap<StreamId, Span>,
}

impl Evaluated {
    pub fn blame(&self, e: rdec::Error) -> CliError {
        let span = e
            .origin()
            .and_then(|id| self.origins.get(&id).copied())
            .unwrap_or(self.root);
        CliError::Math { source: e, span }
    }
}

/// Build the stream for `e`. Literals carry their rational as witness, so
/// exact cancellations and terminating results are recognized.
pub fn eval(e: &Expr, fuel: Fuel) -> Result<Evaluated, CliError> {
    let mut origins = HashMap::new();
    let value = build(e, fuel, &mut origins)?;
    Ok(Evaluated {
        value,
        root: e.span,
        origins,
    })
}

fn build(e: &Expr, fuel: Fuel, origins: &mut HashMap<StreamId, Span>) -> Result<RealDecimal, CliError> {
    let here = |source| CliError::Math { source, span: e.span };
    let x = match &e.kind {
        ExprKind::Literal(r) => RealDecimal::from_rational(r.clone()),
        ExprKind::Neg(a) => neg(&build(a, fuel, origins)?),
        ExprKind::Add(a, b) => add(&build(a, fuel, origins)?, &build(b, fuel, origins)?, fuel),
        ExprKind::Sub(a, b) => sub(&build(a, fuel, origins)?, &build(b, fuel, origins)?, fuel),
        ExprKind::Mul(a, b) => mul(&build(a, fuel, origins)?, &build(b, fuel, origins)?, fuel),
        ExprKind::Div(a, b) => {
            let (x, y) = (build(a, fuel, origins)?, build(b, fuel, origins)?);
            div(&x, &y, fuel).map_err(here)?
        }
        ExprKind::Sqrt(a) => {
            let x = build(a, fuel, origins)?;
            let Some(c) = x.witness().rational() else {
                return Err(CliError::UnsupportedSqrtOperand { span: a.span });
            };
            sqrt(c).map_err(here)?
        }
    };
    origins.insert(x.id(), e.span);
    Ok(x)
}
