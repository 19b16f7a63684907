use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

use lyness_core::Rational;

/// Random integers of up to 256 bits.
fn big() -> impl Strategy<Value = BigInt> {
    (any::<bool>(), prop::collection::vec(any::<u32>(), 1..=8))
        .prop_map(|(neg, digits)| BigInt::from_slice(if neg { Sign::Minus } else { Sign::Plus }, &digits))
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (big(), big().prop_filter("nonzero", |d| d.sign() != Sign::NoSign)).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn canonical_form(r in big_rational()) {
        prop_assert!(r.denom().is_positive());
        prop_assert!(r.numer().gcd(r.denom()).is_one());
    }

    #[test]
    fn display_parse_round_trip(r in big_rational()) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn field_identities(a in big_rational(), b in big_rational(), c in big_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
        }
        prop_assert_eq!(-(-&a), a);
    }

    #[test]
    fn squares_have_exact_roots(r in big_rational()) {
        prop_assert_eq!(r.square().sqrt_exact().unwrap(), r.abs());
    }

    #[test]
    fn non_squares_detected(r in big_rational().prop_filter("nonzero", |r| !r.is_zero())) {
        // r²·2 is never a rational square.
        prop_assert!(!(r.square() * 2).is_square());
        prop_assert!((-r.square()).sqrt_exact().is_err());
    }
}
