#![allow(dead_code)]

use lyness_core::curve::LynessCurve;
use lyness_core::lyness::PlanePoint;
use lyness_core::Rational;
use proptest::prelude::*;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=15).prop_map(|(n, d)| Rational::ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// `(curve, seed)` with the curve elliptic and the seed on it.
pub fn elliptic_curve() -> impl Strategy<Value = (LynessCurve, PlanePoint)> {
    (small_rational(), nonzero_rational(), nonzero_rational()).prop_filter_map("elliptic", |(a, x, y)| {
        let seed = PlanePoint::new(x, y);
        let c = LynessCurve::through(&a, &seed).ok()?;
        c.is_elliptic().then_some((c, seed))
    })
}
