use conjrel::poly::{rat, trace_normalize, translate, BigRat, QPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn rat_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1).prop_map(QPoly::from_rats)
}

fn int_poly(min_deg: usize, max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-9i64..=9, min_deg + 1..=max_deg + 1).prop_map(|mut c| {
        if let Some(last) = c.last_mut() {
            if *last == 0 {
                *last = 1;
            }
        }
        QPoly::from_i64(&c)
    })
}

/// Numerators share no factor with the positive common denominator, and
/// every coefficient read back is a reduced fraction.
fn normalized(p: &QPoly) -> bool {
    let den = p.denominator();
    if !den.is_positive() {
        return false;
    }
    let g = p.numerators().iter().fold(den.clone(), |g, n| g.gcd(n));
    g.is_one()
        && p.coeffs().iter().all(|c| c.denom().is_positive() && c.numer().gcd(c.denom()).is_one())
        && p.numerators().last().map_or(true, |n| !n.is_zero())
}

/// Horner evaluation over the rationals, written independently of the library.
fn eval(p: &QPoly, x: &BigRat) -> BigRat {
    p.coeffs().iter().rev().fold(BigRat::zero(), |acc, c| acc * x + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn arithmetic_results_are_normalized(a in rat_poly(6), b in rat_poly(4), r in small_rat()) {
        prop_assert!(normalized(&(&a + &b)));
        prop_assert!(normalized(&(&a - &b)));
        prop_assert!(normalized(&(&a * &b)));
        prop_assert!(normalized(&a.translate(&r)));
        prop_assert!(normalized(&a.derivative()));
        if !b.is_zero() {
            let (q, rem) = a.div_rem(&b).unwrap();
            prop_assert!(normalized(&q) && normalized(&rem));
            prop_assert_eq!(&(&q * &b) + &rem, a.clone());
        }
        if !a.is_zero() {
            prop_assert!(normalized(&a.monic()));
        }
    }

    #[test]
    fn translate_is_a_group_action(p in rat_poly(6), r1 in small_rat(), r2 in small_rat()) {
        prop_assert_eq!(translate(&p, &(&r1 + &r2)), translate(&translate(&p, &r1), &r2));
        prop_assert_eq!(translate(&translate(&p, &r1), &-&r1), p.clone());
    }

    #[test]
    fn translate_matches_pointwise_evaluation(p in rat_poly(5), r in small_rat(), x in small_rat()) {
        prop_assert_eq!(eval(&translate(&p, &r), &x), eval(&p, &(&x + &r)));
    }

    #[test]
    fn trace_normalize_kills_subleading_coefficient(p in rat_poly(7)) {
        prop_assume!(p.degree() >= 1);
        let (q, shift) = trace_normalize(&p).unwrap();
        let d = q.degree();
        prop_assert!(q.is_monic());
        prop_assert!(q.coeff(d - 1).is_zero());
        prop_assert_eq!(q, p.monic().translate(&shift.r));
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(q in int_poly(0, 3), r in int_poly(1, 2), generic in int_poly(1, 6)) {
        let planted = &q * &(&r * &r);
        prop_assert!(planted.discriminant().is_zero());
        prop_assert!(planted.gcd_monic(&planted.derivative()).degree() >= 1);
        let shared = generic.gcd_monic(&generic.derivative()).degree() >= 1;
        prop_assert_eq!(generic.discriminant().is_zero(), shared);
    }
}

#[test]
fn discriminant_of_small_cases() {
    // b^2 - 4ac and -4p^3 - 27q^2, computed by hand.
    assert_eq!(QPoly::from_i64(&[3, 5, 2]).discriminant(), BigRat::from_integer(BigInt::from(1)));
    assert_eq!(QPoly::from_i64(&[1, -1, 0, 1]).discriminant(), BigRat::from_integer(BigInt::from(-23)));
    assert_eq!(QPoly::from_i64(&[1, 0, 0, 0, 1]).discriminant(), BigRat::from_integer(BigInt::from(256)));
}
