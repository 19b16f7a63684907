mod common;

use common::{elliptic_curve, nonzero_rational, q};
use lyness_core::curve::{h_for_period, projective_step, q_multiples, LynessCurve, PeriodLevel, PointOrder, ProjectivePoint};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms((c, seed) in elliptic_curve(), m in -2i64..=2, n in 0i64..9) {
        let o = ProjectivePoint::zero();
        let p = ProjectivePoint::from_affine(&seed);
        let r = c.add(&c.mul(&p, m).unwrap(), &c.mul(&ProjectivePoint::q(), n).unwrap()).unwrap();
        let s = c.add(&p, &ProjectivePoint::q()).unwrap();
        prop_assert!(c.contains(&r));
        prop_assert_eq!(c.add(&p, &o).unwrap(), p.clone());
        prop_assert!(c.add(&p, &c.neg(&p).unwrap()).unwrap().is_zero());
        prop_assert_eq!(c.add(&p, &r).unwrap(), c.add(&r, &p).unwrap());
        let left = c.add(&c.add(&p, &r).unwrap(), &s).unwrap();
        let right = c.add(&p, &c.add(&r, &s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn step_is_translation_by_q((c, seed) in elliptic_curve()) {
        let p = ProjectivePoint::from_affine(&seed);
        prop_assert_eq!(c.add(&p, &ProjectivePoint::q()).unwrap(), projective_step(c.a(), &p).unwrap());
    }

    #[test]
    fn closed_forms_match_group_law((c, _) in elliptic_curve()) {
        for k in -5..=7 {
            // Poles of the closed forms are excluded parameters.
            if let Ok(pt) = q_multiples(c.a(), c.h(), k) {
                prop_assert_eq!(pt, c.mul(&ProjectivePoint::q(), k).unwrap(), "k = {}", k);
            }
        }
    }

    #[test]
    fn level_formulas_give_torsion(n in prop::sample::select(vec![7u32, 8, 9, 10]), a in nonzero_rational()) {
        let Ok(PeriodLevel::Level(h)) = h_for_period(n, &a) else { return Ok(()) };
        let c = LynessCurve::new(a, h);
        prop_assume!(c.is_elliptic());
        prop_assert_eq!(c.order_of(&ProjectivePoint::q(), 30).unwrap(), PointOrder::Finite(n as usize));
    }
}

#[test]
fn a7_curve_q_has_order_nine() {
    let c = LynessCurve::new(q("7"), q("258/7"));
    assert_eq!(c.order_of(&ProjectivePoint::q(), 30).unwrap(), PointOrder::Finite(9));
    assert!(c.mul(&ProjectivePoint::q(), 9).unwrap().is_zero());
}
