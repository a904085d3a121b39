//! Multiplication, reciprocal and square root on digit streams.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rdec::{choose_scale, div, mul, recip, sqrt, Fuel, Rational, RealDecimal, ScaleParam, ScaledDecimal};

use common::*;

fn fuel() -> Fuel {
    Fuel::default()
}

fn product_gap_constant(s: usize) -> BigInt {
    BigInt::from(10u8).pow(s as u32) + 1
}

fn exact(v: &ScaledDecimal) -> Rational {
    Rational::from(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn products_and_quotients_match_the_oracle(r in rational(1_000_000), s in rational(1_000_000)) {
        let (x, y) = (RealDecimal::from_rational(r.clone()), RealDecimal::from_rational(s.clone()));
        prop_assert_eq!(stream_digits(&mul(&x, &y, fuel()), 200), oracle_digits(&(&r * &s), 200));
        if !s.is_zero() {
            prop_assert_eq!(stream_digits(&recip(&y, fuel()).unwrap(), 200), oracle_digits(&s.inv().unwrap(), 200));
            let q = &r * &s.inv().unwrap();
            prop_assert_eq!(stream_digits(&div(&x, &y, fuel()).unwrap(), 200), oracle_digits(&q, 200));
        }
    }

    #[test]
    fn fixed_product_prefixes_persist(a in nonneg_val(), b in nonneg_val()) {
        let (x, y) = (a.stream(), b.stream());
        let s = choose_scale(&x, &y).unwrap().get();
        let prod = mul(&x, &y, fuel());
        let p = |n: usize| &a.truncation(n) * &b.truncation(n);
        for k in 1..30 {
            let pk = p(k + s);
            if pk.digit(k).get() != 9 {
                let fixed = pk.truncate(k - 1);
                for n in [k + s + 1, k + s + 5, 50] {
                    prop_assert_eq!(p(n).truncate(k - 1), fixed.clone(), "k={} n={}", k, n);
                }
                prop_assert_eq!(trunc(&prod, k - 1), fixed);
            }
        }
    }

    #[test]
    fn product_truncations_stay_close(a in nonneg_val(), b in nonneg_val()) {
        let (x, y) = (a.stream(), b.stream());
        let s = choose_scale(&x, &y).unwrap().get();
        let prod = mul(&x, &y, fuel());
        let m = ScaledDecimal::from_integer(product_gap_constant(s));
        for k in 0..=50 {
            let gap = &trunc(&prod, k) - &(&a.truncation(k) * &b.truncation(k));
            prop_assert!(abs(&gap) <= &m * &ulp(k), "k={} s={} gap={}", k, s, gap);
        }
    }

    #[test]
    fn reciprocal_brackets_and_converges(a in nonneg_val()) {
        let x = a.stream();
        prop_assume!(!a.truncation(40).is_zero());
        let y = recip(&x, fuel()).unwrap();
        let a0 = a.truncation(0).mantissa().clone();
        let b0 = y.integer_part().unwrap();
        let one = ScaledDecimal::one();
        for k in 0..=40 {
            let yk = trunc(&y, k);
            let up = &yk + &ulp(k);
            match &a {
                Val::Rat(r) => {
                    prop_assert!(r * &exact(&yk) <= Rational::one());
                    prop_assert!(r * &exact(&up) > Rational::one());
                }
                Val::Root { c, .. } => {
                    let c = Rational::from(*c as i64);
                    prop_assert!(&c * &exact(&(&yk * &yk)) <= Rational::one());
                    prop_assert!(&c * &exact(&(&up * &up)) > Rational::one());
                }
            }
            let slack = &one - &(&a.truncation(k) * &yk);
            let bound = ScaledDecimal::new(&a0 + &b0 + 2, 0);
            prop_assert!(slack <= &bound * &ulp(k), "k={}", k);
        }
    }

    #[test]
    fn x_times_its_reciprocal_is_one(a in val()) {
        prop_assume!(!a.truncation(40).is_zero());
        let x = a.stream();
        let p = mul(&x, &recip(&x, fuel()).unwrap(), fuel());
        prop_assert_eq!(p.render(30, rdec::DisplayMode::Complement).unwrap(), format!("1.{}", "0".repeat(30)));
    }

    #[test]
    fn root_digits_bracket_the_radicand(p in 1i64..1_000_000, q in 1i64..1_000) {
        let c = Rational::new(p, q).unwrap();
        prop_assume!(c.sqrt_exact().is_none());
        let x = sqrt(&c).unwrap();
        for k in 0..=60 {
            let xk = trunc(&x, k);
            let up = &xk + &ulp(k);
            prop_assert!(exact(&(&xk * &xk)) < c);
            prop_assert!(exact(&(&up * &up)) > c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exact_products_resolve_independently_of_m_and_s(base in prop_oneof![
        (nonneg_rational(100_000), 1i64..60).prop_filter("nonzero", |(r, _)| !r.is_zero()).prop_map(|(r, t)| {
            let y = Rational::from(t) * r.inv().unwrap();
            (Val::Rat(r), Val::Rat(y), Rational::from(t))
        }),
        (2u32..60, 1i64..20).prop_filter("non-square", |(c, _)| !is_square(*c)).prop_map(|(c, t)| {
            let y = Val::Root { c: c * (t * t) as u32, negative: false };
            (Val::Root { c, negative: false }, y, Rational::from(c as i64 * t))
        }),
    ]) {
        let (a, b, v) = base;
        let (x, y) = (a.stream(), b.stream());
        let prod = mul(&x, &y, fuel());
        let terminating = |w: &Val| matches!(w, Val::Rat(r) if r.is_terminating());
        prop_assert_eq!(exact(&trunc(&prod, 30)), v.clone());
        prop_assert_eq!(prod.case_one_point().is_some(), !(terminating(&a) && terminating(&b)));
        if let Some(m) = prod.case_one_point() {
            let s = choose_scale(&x, &y).unwrap().get();
            let p = |n: usize| (&a.truncation(n) * &b.truncation(n)).truncate(m);
            let reference = p(m + s);
            for n in m + 1..m + 40 {
                prop_assert_eq!(p(n + s), reference.clone());
            }
            for larger in s..s + 4 {
                prop_assert_eq!(exact(&(&p(m + larger) + &ulp(m))), v.clone(), "s={}", larger);
            }
        }
    }
}

/// Brute-force check of the product gap constant on exact truncation pairs:
/// `|(xy)_k - x_k y_k| <= (10^s + 1) 10^{-k}` with `s` from the integer parts.
#[test]
fn product_gap_constant_holds_on_random_truncations() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let r = Rational::new(rng.gen_range(0..10_000_000i64), rng.gen_range(1..100_000i64)).unwrap();
        let t = Rational::new(rng.gen_range(0..10_000_000i64), rng.gen_range(1..100_000i64)).unwrap();
        let k = rng.gen_range(0..40usize);
        let s = ScaleParam::for_integer_parts(&r.floor(), &t.floor()).get();
        let xy = &r * &t;
        let gap = exact(&xy.truncate(k)) - exact(&(&r.truncate(k) * &t.truncate(k)));
        let scaled = gap.abs() * Rational::from_integer(BigInt::from(10u8).pow(k as u32));
        assert!(scaled <= Rational::from_integer(product_gap_constant(s)), "{r} * {t} at k={k}");
    }
}

#[test]
fn root_digits_never_run_to_a_nine_tail() {
    for c in [2, 3, 5, 7, 10, 99, 12345] {
        let x = sqrt(&Rational::from(c)).unwrap();
        let (_, ds) = stream_digits(&x, 3000);
        let mut run = 0;
        for d in ds {
            run = if d == 9 { run + 1 } else { 0 };
            assert!(run < 64, "sqrt({c})");
        }
    }
}
