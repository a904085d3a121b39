//! Exact real arithmetic on infinite decimal expansions.
//!
//! Reals are lazy digit streams ([`RealDecimal`]). Addition, negation,
//! multiplication and reciprocal work directly on the digits: a digit is
//! emitted only once finitely many digits of the operands prove it, and is
//! never revised. Where digits alone cannot settle the answer (a sum whose
//! digit pairs add to 9 forever), an exact [`Witness`] can; otherwise the
//! search is bounded by [`Fuel`] and fails loudly instead of guessing.
//!
//! ```
//! use rdec::{add, Fuel, RealDecimal, Rational};
//!
//! let x = RealDecimal::from_rational(Rational::new(7, 9).unwrap());
//! let y = RealDecimal::from_rational(Rational::new(23, 99).unwrap());
//! let sum = add(&x, &y, Fuel::default());
//! assert_eq!(sum.render(8, rdec::DisplayMode::Signed).unwrap(), "1.01010101");
//! ```
//!
//! The `book/` directory next to this crate walks through the construction
//! chapter by chapter; its code samples run as doctests of this crate.

mod error;
pub mod numeral;
pub mod oracle;
pub mod product;
pub mod stream;

pub use error::{Error, Result, StreamId};
pub use numeral::{format_expansion, Digit, DisplayMode, IntervalBound, ScaledDecimal};
pub use oracle::{expansion_period, rational_digit, PeriodicExpansion, Rational};
pub use product::{choose_scale, div, mul, recip, sqrt, ScaleParam};
pub use stream::{add, neg, separate, sign, sub, Fuel, RealDecimal, SignClass, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/terminating.md")]
    mod terminating {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/streams.md")]
    mod streams {}
    #[doc = include_str!("../../../book/src/addition.md")]
    mod addition {}
    #[doc = include_str!("../../../book/src/multiplication.md")]
    mod multiplication {}
    #[doc = include_str!("../../../book/src/reciprocal.md")]
    mod reciprocal {}
    #[doc = include_str!("../../../book/src/square-root.md")]
    mod square_root {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
