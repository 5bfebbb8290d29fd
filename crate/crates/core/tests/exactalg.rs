use matval::exactalg::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn fact_binom(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::from(0);
    }
    factorial(a) / (factorial(b) * factorial(a - b))
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-20i64..20, 0..6).prop_map(UniPoly::from_ints)
}

#[test]
fn binomial_conventions() {
    assert_eq!(binom(5, 2), BigInt::from(10));
    assert_eq!(binom(2, 5), BigInt::from(0));
    assert_eq!(binom(-1, 0), BigInt::from(0));
    assert_eq!(binom_conv(-1, 0, BinomConvention::NegUpperExtended), BigInt::from(1));
    assert_eq!(binom_conv(-3, 2, BinomConvention::NegUpperExtended), BigInt::from(6));
    assert_eq!(binom_conv(4, -1, BinomConvention::NegUpperExtended), BigInt::from(0));
    assert_eq!(binom_i(30, 15), 155117520);
}

#[test]
fn eulerian_rows() {
    assert_eq!(eulerian_poly(0), UniPoly::one());
    assert_eq!(eulerian_poly(2), UniPoly::from_ints([1, 1]));
    assert_eq!(eulerian_poly(4), UniPoly::from_ints([1, 11, 11, 1]));
    for n in 1..12usize {
        let total: BigInt = (0..n as i64).map(|k| eulerian(n, k)).sum();
        assert_eq!(total, factorial(n as u64));
        for k in 0..n as i64 {
            assert_eq!(eulerian(n, k), eulerian(n, n as i64 - 1 - k));
        }
    }
}

#[test]
fn formatting() {
    assert_eq!(UniPoly::from_ints([1, -2, 0, 3]).fmt_var("t"), "3*t^3 - 2*t + 1");
    assert_eq!(UniPoly::zero().fmt_var("t"), "0");
    assert_eq!(UniPoly::new(vec![rat_frac(1, 2), rat_frac(-3, 4)]).fmt_var("x"), "-3/4*x + 1/2");
    let b = BiPoly::from_terms([(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1)]);
    assert_eq!(b.fmt_vars("x", "y"), "x^2 + 2*x + 2*y + y^2");
    assert_eq!(format_rat(&rat_frac(6, -4)), "-3/2");
    assert_eq!(format_rat(&rat(7)), "7");
}

#[test]
fn interpolation_rejects_repeated_nodes() {
    let pts = vec![(rat(1), rat(2)), (rat(1), rat(3))];
    assert_eq!(interpolate(&pts), Err(matval::MvError::DuplicateNodes));
}

#[test]
fn truncated_binomial_polynomial() {
    for (a, b, m) in [(3, 1, 5), (1, 0, 7), (2, -3, 6)] {
        let full = poly_binom(a, b, m);
        for d in 0..=m {
            assert_eq!(poly_binom_truncated(a, b, m, d), full.truncate(d));
        }
    }
}

proptest! {
    #[test]
    fn binom_matches_factorials(a in 0u64..40, b in 0u64..40) {
        prop_assert_eq!(binom(a as i64, b as i64), fact_binom(a, b));
    }

    #[test]
    fn pascal_rule(a in -15i64..30, b in 1i64..20) {
        let c = BinomConvention::NegUpperExtended;
        prop_assert_eq!(binom_conv(a, b, c), binom_conv(a - 1, b, c) + binom_conv(a - 1, b - 1, c));
    }

    #[test]
    fn negated_upper_index(a in 1i64..20, b in 0i64..15) {
        let sign = if b % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(binom_conv(-a, b, BinomConvention::NegUpperExtended), binom(a + b - 1, b) * sign);
    }

    #[test]
    fn poly_binom_at_integers(a in 1i64..4, b in -3i64..4, m in 0usize..6, t in 0i64..6) {
        let p = poly_binom(a, b, m);
        let v = binom_conv(a * t + b, m as i64, BinomConvention::NegUpperExtended);
        prop_assert_eq!(p.eval_i(t), rat_int(v));
    }

    #[test]
    fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        let x = rat(3);
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn compose_and_shift(p in small_poly(), s in -4i64..4, x in -5i64..5) {
        prop_assert_eq!(p.shift(s).eval_i(x), p.eval_i(x + s));
    }

    #[test]
    fn interpolation_round_trip(p in small_poly()) {
        let vals: Vec<Rat> = (0..6).map(|t| p.eval_i(t)).collect();
        prop_assert_eq!(interpolate_from_zero(&vals), p);
    }

    #[test]
    fn reverse_is_involution(p in small_poly()) {
        prop_assert_eq!(p.reverse(6).reverse(6), p);
    }

    #[test]
    fn rat_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = rat_frac(p, q);
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn bipoly_eval_is_multiplicative(
        a in prop::collection::vec((0u32..3, 0u32..3, -5i64..5), 0..5),
        b in prop::collection::vec((0u32..3, 0u32..3, -5i64..5), 0..5),
        x in -3i64..3, y in -3i64..3,
    ) {
        let (p, q) = (BiPoly::from_terms(a), BiPoly::from_terms(b));
        let (x, y) = (rat(x), rat(y));
        prop_assert_eq!((&p * &q).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
        prop_assert_eq!(p.swap().eval(&y, &x), p.eval(&x, &y));
    }
}
