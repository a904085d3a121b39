use std::fmt;

use num_bigint::BigInt;
use rdec::{Digit, PeriodicExpansion, Rational, ScaledDecimal};

use crate::lexer::{Token, TokenKind};

/// Half-open range of character offsets into the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Literal(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    /// The tree as an S-expression, spans dropped: `(+ (* 6/5 (neg 13/5)) 28/5)`.
    pub fn shape(&self) -> String {
        let bin = |op: &str, a: &Expr, b: &Expr| format!("({op} {} {})", a.shape(), b.shape());
        match &self.kind {
            ExprKind::Literal(r) => r.to_string(),
            ExprKind::Neg(a) => format!("(neg {})", a.shape()),
            ExprKind::Sqrt(a) => format!("(sqrt {})", a.shape()),
            ExprKind::Add(a, b) => bin("+", a, b),
            ExprKind::Sub(a, b) => bin("-", a, b),
            ExprKind::Mul(a, b) => bin("*", a, b),
            ExprKind::Div(a, b) => bin("/", a, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected {} but found {} at offset {}",
            self.expected, self.found, self.offset
        )
    }
}

impl std::error::Error for ParseError {}

/// Nesting deeper than this is refused rather than risking the stack.
pub const MAX_DEPTH: usize = 200;

/// Parse a token stream from [`tokenize`](crate::lexer::tokenize).
///
/// ```text
/// expr    := term (('+' | '-') term)*
/// term    := factor (('*' | '/') factor)*
/// factor  := '-' factor | primary
/// primary := literal | 'sqrt' '(' expr ')' | '(' expr ')'
/// ```
pub fn parse(tokens: &[Token]) -> Result<Expr, ParseError> {
    assert!(
        tokens.last().is_some_and(|t| t.kind == TokenKind::End),
        "token stream must end with End"
    );
    let mut p = Parser { tokens, pos: 0, depth: 0 };
    let e = p.expr()?;
    p.expect(TokenKind::End, "operator or end of input")?;
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    depth: usize,
}

fn token_span(t: &Token) -> Span {
    Span {
        start: t.position,
        end: t.position + t.lexeme.chars().count(),
    }
}

fn node(kind: ExprKind, span: Span) -> Expr {
    Expr { kind, span }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.pos];
        if t.kind != TokenKind::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        let found = if t.kind == TokenKind::End {
            t.kind.describe().to_string()
        } else {
            format!("{:?}", t.lexeme)
        };
        ParseError {
            offset: t.position,
            expected: expected.to_string(),
            found,
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<&'a Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("shallower nesting"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let kind = self.peek().kind;
            let build = match kind {
                TokenKind::Plus => ExprKind::Add,
                TokenKind::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            lhs = node(build(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let build = match self.peek().kind {
                TokenKind::Star => ExprKind::Mul,
                TokenKind::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.join(rhs.span);
            lhs = node(build(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek().kind != TokenKind::Minus {
            return self.primary();
        }
        self.descend()?;
        let minus = token_span(self.bump());
        let inner = self.factor()?;
        self.depth -= 1;
        let span = minus.join(inner.span);
        Ok(node(ExprKind::Neg(Box::new(inner)), span))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek();
        match t.kind {
            k if k.is_literal() => {
                self.bump();
                Ok(literal(t))
            }
            TokenKind::Sqrt => {
                self.descend()?;
                self.bump();
                self.expect(TokenKind::LParen, "'(' after sqrt")?;
                let inner = self.expr()?;
                let close = self.expect(TokenKind::RParen, "')'")?;
                self.depth -= 1;
                let span = token_span(t).join(token_span(close));
                Ok(node(ExprKind::Sqrt(Box::new(inner)), span))
            }
            TokenKind::LParen => {
                self.descend()?;
                self.bump();
                let mut inner = self.expr()?;
                let close = self.expect(TokenKind::RParen, "')'")?;
                self.depth -= 1;
                inner.span = token_span(t).join(token_span(close));
                Ok(inner)
            }
            _ => Err(self.error("number, '-', 'sqrt' or '('")),
        }
    }
}

fn digit_list(s: &str) -> Vec<Digit> {
    s.bytes().map(|b| Digit::new(b - b'0').unwrap()).collect()
}

/// Exact value of a literal token. A rational with a zero denominator
/// becomes a division node so that evaluation reports it.
fn literal(t: &Token) -> Expr {
    let span = token_span(t);
    let lit = |r: Rational, span: Span| node(ExprKind::Literal(r), span);
    match t.kind {
        TokenKind::Number => {
            let v: ScaledDecimal = t.lexeme.parse().expect("lexer admits only decimal numbers");
            lit(Rational::from(&v), span)
        }
        TokenKind::Rational => {
            let (p, q) = t.lexeme.split_once('/').unwrap();
            let (p, q): (BigInt, BigInt) = (p.parse().unwrap(), q.parse().unwrap());
            match Rational::new(p.clone(), q.clone()) {
                Ok(r) => lit(r, span),
                Err(_) => {
                    let cut = t.position + t.lexeme.find('/').unwrap();
                    let num = Span { start: span.start, end: cut };
                    let den = Span { start: cut + 1, end: span.end };
                    node(
                        ExprKind::Div(
                            Box::new(lit(Rational::from_integer(p), num)),
                            Box::new(lit(Rational::from_integer(q), den)),
                        ),
                        span,
                    )
                }
            }
        }
        TokenKind::Repeating => {
            let (int, rest) = t.lexeme.split_once('.').unwrap();
            let (pre, period) = rest.trim_end_matches(')').split_once('(').unwrap();
            let e = PeriodicExpansion {
                integer_part: int.parse().unwrap(),
                preperiod: digit_list(pre),
                period: digit_list(period),
            };
            lit(e.to_rational(), span)
        }
        _ => unreachable!("not a literal token"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    fn shape(s: &str) -> String {
        parse(&tokenize(s).unwrap()).unwrap().shape()
    }

    fn err(s: &str) -> ParseError {
        parse(&tokenize(s).unwrap()).unwrap_err()
    }

    #[test]
    fn intro_expression() {
        assert_eq!(shape("1.2*-2.6+5.6"), "(+ (* 6/5 (neg 13/5)) 28/5)");
    }

    #[test]
    fn parentheses_vanish() {
        assert_eq!(shape("(2)"), "2");
        assert_eq!(shape("sqrt(2)*sqrt(2)"), "(* (sqrt 2) (sqrt 2))");
    }

    #[test]
    fn literal_forms_reduce() {
        assert_eq!(shape("0.(7)"), "7/9");
        assert_eq!(shape("1.2(34)"), "611/495");
        assert_eq!(shape("14/21"), "2/3");
        assert_eq!(shape("2.50"), "5/2");
        assert_eq!(shape("1/0"), "(/ 1 0)");
    }

    #[test]
    fn spans_cover_subexpressions() {
        let e = parse(&tokenize("1 + (2*3)").unwrap()).unwrap();
        assert_eq!(e.span, Span { start: 0, end: 9 });
        let ExprKind::Add(_, rhs) = &e.kind else { panic!() };
        assert_eq!(rhs.span, Span { start: 4, end: 9 });
        let e = parse(&tokenize("10/0").unwrap()).unwrap();
        let ExprKind::Div(a, b) = &e.kind else { panic!() };
        assert_eq!((a.span, b.span), (Span { start: 0, end: 2 }, Span { start: 3, end: 4 }));
    }

    #[test]
    fn diagnostics() {
        let e = err("sqrt(2");
        assert_eq!((e.offset, e.expected.as_str(), e.found.as_str()), (6, "')'", "end of input"));
        assert_eq!(err("1 +").offset, 3);
        assert_eq!(err("2 3").offset, 2);
        assert_eq!(err(")").offset, 0);
        assert_eq!(err("sqrt 2").expected, "'(' after sqrt");
    }

    #[test]
    fn nesting_is_bounded() {
        let deep = format!("{}1{}", "(".repeat(MAX_DEPTH + 1), ")".repeat(MAX_DEPTH + 1));
        assert_eq!(err(&deep).expected, "shallower nesting");
        let ok = format!("{}1{}", "(".repeat(MAX_DEPTH), ")".repeat(MAX_DEPTH));
        assert_eq!(shape(&ok), "1");
        assert!(parse(&tokenize(&"-".repeat(10_000)).unwrap()).is_err());
    }
}
