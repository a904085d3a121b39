//! Addition and negation on digit streams.

mod common;

use proptest::prelude::*;
use rdec::{add, neg, separate, sign, sub, Fuel, RealDecimal, ScaledDecimal, SignClass};

use common::*;

fn fuel() -> Fuel {
    Fuel::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sums_never_emit_a_wrong_digit(r in rational(1_000_000), s in rational(1_000_000)) {
        let (x, y) = (RealDecimal::from_rational(r.clone()), RealDecimal::from_rational(s.clone()));
        prop_assert_eq!(stream_digits(&add(&x, &y, fuel()), 200), oracle_digits(&(&r + &s), 200));
        prop_assert_eq!(stream_digits(&sub(&x, &y, fuel()), 200), oracle_digits(&(&r - &s), 200));
        prop_assert_eq!(stream_digits(&neg(&x), 200), oracle_digits(&-&r, 200));
    }

    #[test]
    fn fixed_prefixes_persist(a in val(), b in val()) {
        // wherever the k-th digit of x_k + y_k is not 9, its (k-1)-prefix is final
        let (x, y) = (a.stream(), b.stream());
        let sum = add(&x, &y, fuel());
        let n = 40;
        let tn = &a.truncation(n) + &b.truncation(n);
        for k in 1..n {
            let tk = &a.truncation(k) + &b.truncation(k);
            if tk.digit(k).get() != 9 {
                prop_assert_eq!(tn.truncate(k - 1), tk.truncate(k - 1));
                prop_assert_eq!(trunc(&sum, k - 1), tk.truncate(k - 1));
            }
        }
    }

    #[test]
    fn sum_truncations_stay_close(a in val(), b in val()) {
        let sum = add(&a.stream(), &b.stream(), fuel());
        for k in 0..=50 {
            let gap = &trunc(&sum, k) - &(&a.truncation(k) + &b.truncation(k));
            prop_assert!(abs(&gap) <= ScaledDecimal::new(4, k), "k={} gap={}", k, gap);
        }
    }

    #[test]
    fn negation_is_an_involution(a in val()) {
        let x = a.stream();
        prop_assert_eq!(stream_digits(&neg(&neg(&x)), 120), stream_digits(&x, 120));
        let o = opaque(&x);
        prop_assert_eq!(stream_digits(&neg(&neg(&o)), 120), stream_digits(&x, 120));
    }

    #[test]
    fn x_minus_x_is_zero(a in val()) {
        let x = a.stream();
        let z = add(&x, &neg(&x), fuel());
        prop_assert_eq!(z.render(60, rdec::DisplayMode::Complement).unwrap(), format!("0.{}", "0".repeat(60)));
    }

    #[test]
    fn separation_index_is_a_certificate(r in rational(1_000_000), s in rational(1_000_000)) {
        prop_assume!(r != s);
        let (x, y) = (RealDecimal::from_rational(r), RealDecimal::from_rational(s));
        let l = separate(&x, &y, fuel()).unwrap();
        for k in l + 1..l + 40 {
            prop_assert!(abs(&(&trunc(&x, k) - &trunc(&y, k))) >= ScaledDecimal::ulp(l));
        }
    }

    #[test]
    fn sign_of_opaque_streams(a in val()) {
        let expected = if a.is_negative() { SignClass::Negative } else if a.truncation(60).is_zero() { SignClass::Zero } else { SignClass::Positive };
        prop_assume!(expected != SignClass::Zero);
        prop_assert_eq!(sign(&opaque(&a.stream()), fuel()).unwrap(), expected);
        prop_assert_eq!(sign(&a.stream(), fuel()).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn endless_nine_runs_resolve_independently_of_m(r in rational(1_000_000), shift in 1i64..1000) {
        // x + (v - x) for a terminating v: the digits of the summands pair to 9 forever
        let terminating = r.is_terminating();
        let a = Val::Rat(r);
        let v = ScaledDecimal::new(a.truncation(3).mantissa().clone() + shift, 3);
        let x = a.stream();
        let y = add(&RealDecimal::from_scaled(v.clone()), &neg(&x), fuel());
        let sum = add(&x, &y, fuel());
        prop_assert_eq!(trunc(&sum, 40), v.clone());
        prop_assert_eq!(sum.case_one_point().is_some(), !terminating);
        if let Some(m) = sum.case_one_point() {
            let at = |k: usize| &(&trunc(&x, k) + &trunc(&y, k)) + &ulp(k);
            let reference = at(m);
            prop_assert_eq!(&reference, &v);
            for k in m + 1..m + 60 {
                prop_assert_eq!(at(k), reference.clone());
            }
        }
    }

    #[test]
    fn opaque_sums_match_when_no_endless_run(r in rational(100_000), s in rational(100_000)) {
        let exact = &r + &s;
        // an endless run of nines needs a terminating sum of non-terminating summands
        prop_assume!(!exact.is_terminating() || (r.is_terminating() && s.is_terminating()));
        let x = opaque(&RealDecimal::from_rational(r));
        let y = opaque(&RealDecimal::from_rational(s));
        prop_assert_eq!(stream_digits(&add(&x, &y, fuel()), 100), oracle_digits(&exact, 100));
    }
}

#[test]
fn witness_free_stall_never_emits() {
    let third = RealDecimal::from_rational(rdec::Rational::new(1, 3).unwrap());
    let x = opaque(&third);
    let sum = add(&x, &neg(&x), Fuel::new(500).unwrap());
    assert!(matches!(sum.integer_part(), Err(rdec::Error::FuelExhausted { budget: 500, .. })));
    assert_eq!(sum.known_len(), 0);
    assert!(matches!(sum.digit(1), Err(rdec::Error::FuelExhausted { .. })));
}
