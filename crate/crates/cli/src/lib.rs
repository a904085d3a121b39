//! Front-end for the `rdec` command: arithmetic expressions over exact
//! rationals and square roots of rationals, printed to a requested number of
//! certified digits.
//!
//! ```
//! use rdec_cli::{execute, EvalConfig};
//!
//! let cfg = EvalConfig { digits: 8, ..EvalConfig::default() };
//! assert_eq!(execute("0.(7)+0.(23)", &cfg).unwrap(), "1.01010101");
//! ```

pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod render;

use rdec::{DisplayMode, Fuel};

pub use error::CliError;
pub use eval::{eval, Evaluated};
pub use lexer::{tokenize, LexError, Token, TokenKind};
pub use parser::{parse, Expr, ExprKind, ParseError, Span};

/// Largest accepted digit count.
pub const MAX_DIGITS: usize = 100_000;

pub const DEFAULT_DIGITS: usize = 30;

/// Environment variable overriding the default fuel budget.
pub const FUEL_ENV: &str = "RDEC_FUEL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    pub digits: usize,
    pub fuel: Fuel,
    pub display: DisplayMode,
    pub output: Output,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            digits: DEFAULT_DIGITS,
            fuel: Fuel::default(),
            display: DisplayMode::Signed,
            output: Output::Text,
        }
    }
}

impl EvalConfig {
    pub fn check(&self) -> Result<(), CliError> {
        if self.digits > MAX_DIGITS {
            return Err(CliError::DigitLimit(self.digits));
        }
        Ok(())
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, CliError> {
    Ok(parse(&tokenize(src)?)?)
}

/// Evaluate `src` and produce its output line, without the newline: the
/// rendered digits in text mode, a JSON object in JSON mode.
pub fn execute(src: &str, cfg: &EvalConfig) -> Result<String, CliError> {
    cfg.check()?;
    let ev = eval(&parse_expr(src)?, cfg.fuel)?;
    let line = match cfg.output {
        Output::Text => ev.value.render(cfg.digits, cfg.display),
        Output::Json => render::json_result(src, &ev.value, cfg.digits, cfg.display).map(|v| v.to_string()),
    };
    line.map_err(|e| ev.blame(e))
}

/// Error report for `src`: a JSON object in JSON mode, `error: ...` in text
/// mode.
pub fn describe_error(src: &str, e: &CliError, output: Output) -> String {
    match output {
        Output::Json => render::json_error(src, e).to_string(),
        Output::Text => format!("error: {e}"),
    }
}

/// Expressions in a batch file: one per line, blank lines and lines starting
/// with `#` skipped.
pub fn batch_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}
