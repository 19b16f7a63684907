//! The Lyness map `F_a(x, y) = (y, (a + y) / x)` over the rationals.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Default bound on the bit length of orbit coordinates.
pub const DEFAULT_MAX_BITS: u64 = 1_000_000;
/// Default iteration budget for period detection.
pub const DEFAULT_MAX_STEPS: usize = 100;

/// Rational prime periods that the recurrence can realise.
pub const RATIONAL_PERIODS: [usize; 10] = [1, 2, 3, 5, 6, 7, 8, 9, 10, 12];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapParams {
    pub a: Rational,
}

impl MapParams {
    pub fn new(a: Rational) -> Self {
        MapParams { a }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && self.y.is_positive()
    }

    fn height_bits(&self) -> u64 {
        self.x.height_bits().max(self.y.height_bits())
    }
}

impl fmt::Debug for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

pub fn step(params: &MapParams, p: &PlanePoint) -> Result<PlanePoint> {
    if p.x.is_zero() {
        return Err(Error::ForbiddenSet { step: 0 });
    }
    let next = (&params.a + &p.y).checked_div(&p.x)?;
    Ok(PlanePoint::new(p.y.clone(), next))
}

/// Inverse map `(x, y) -> ((a + x) / y, x)`.
pub fn step_back(params: &MapParams, p: &PlanePoint) -> Result<PlanePoint> {
    if p.y.is_zero() {
        return Err(Error::ForbiddenSet { step: 0 });
    }
    let prev = (&params.a + &p.x).checked_div(&p.y)?;
    Ok(PlanePoint::new(prev, p.x.clone()))
}

/// The first integral `h = (x+1)(y+1)(x+y+a) / (xy)`.
pub fn invariant_h(params: &MapParams, p: &PlanePoint) -> Result<Rational> {
    let xy = &p.x * &p.y;
    if xy.is_zero() {
        return Err(Error::NotOnAffineChart);
    }
    let num = (&p.x + 1) * (&p.y + 1) * (&p.x + &p.y + &params.a);
    num.checked_div(&xy)
}

/// The sequence `x_0, x_1, ..., x_steps` of the recurrence.
///
/// Stops early if some `x_n` vanishes before it is needed as a divisor; the
/// returned error carries `n`.
pub fn sequence(params: &MapParams, x0: &Rational, x1: &Rational, steps: usize) -> (Vec<Rational>, Option<Error>) {
    let mut terms = vec![x0.clone()];
    if steps >= 1 {
        terms.push(x1.clone());
    }
    while terms.len() <= steps {
        let n = terms.len() - 2;
        if terms[n].is_zero() {
            return (terms, Some(Error::ForbiddenSet { step: n }));
        }
        let next = (&params.a + &terms[n + 1]).checked_div(&terms[n]).expect("nonzero divisor");
        terms.push(next);
    }
    (terms, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodStatus {
    Periodic(usize),
    Aperiodic { after: usize },
    HitForbiddenSet { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub status: PeriodStatus,
    /// One full period when periodic; otherwise every point visited.
    pub orbit: Vec<PlanePoint>,
}

impl PeriodReport {
    pub fn period(&self) -> Option<usize> {
        match self.status {
            PeriodStatus::Periodic(p) => Some(p),
            _ => None,
        }
    }

    /// The scalar sequence `x_0, x_1, ...` carried by the orbit.
    pub fn terms(&self) -> Vec<Rational> {
        self.orbit.iter().map(|p| p.x.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectOptions {
    pub max_steps: usize,
    pub max_bits: u64,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions { max_steps: DEFAULT_MAX_STEPS, max_bits: DEFAULT_MAX_BITS }
    }
}

impl DetectOptions {
    pub fn with_max_steps(max_steps: usize) -> Self {
        DetectOptions { max_steps, ..Default::default() }
    }
}

/// First return of the full state `(x, y)` to the seed.
///
/// The map is invertible, so the first return time is the prime period.
pub fn detect_period(params: &MapParams, seed: &PlanePoint, opts: DetectOptions) -> Result<PeriodReport> {
    if opts.max_steps == 0 {
        return Err(Error::ExcludedParameter("max_steps must be at least 1".into()));
    }
    let mut orbit = vec![seed.clone()];
    for n in 1..=opts.max_steps {
        let current = orbit.last().expect("orbit is never empty");
        if current.x.is_zero() {
            return Ok(PeriodReport { status: PeriodStatus::HitForbiddenSet { step: n - 1 }, orbit });
        }
        let next = step(params, current)?;
        let bits = next.height_bits();
        if bits > opts.max_bits {
            return Err(Error::GrowthLimit { step: n, bits, limit: opts.max_bits });
        }
        if next == *seed {
            return Ok(PeriodReport { status: PeriodStatus::Periodic(n), orbit });
        }
        orbit.push(next);
    }
    Ok(PeriodReport { status: PeriodStatus::Aperiodic { after: opts.max_steps }, orbit })
}

/// Convenience wrapper returning only the prime period.
pub fn period_of(a: &Rational, x0: &Rational, x1: &Rational) -> Result<Option<usize>> {
    let report = detect_period(
        &MapParams::new(a.clone()),
        &PlanePoint::new(x0.clone(), x1.clone()),
        DetectOptions::default(),
    )?;
    Ok(report.period())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(x: &str, y: &str) -> PlanePoint {
        PlanePoint::new(q(x), q(y))
    }

    #[test]
    fn step_examples() {
        let a7 = MapParams::new(q("7"));
        assert_eq!(step(&a7, &pt("3/2", "5/7")).unwrap(), pt("5/7", "36/7"));
        assert_eq!(step(&MapParams::new(q("1")), &pt("1", "1")).unwrap(), pt("1", "2"));
        assert_eq!(step(&MapParams::new(q("0")), &pt("1", "2")).unwrap(), pt("2", "2"));
        assert_eq!(step(&a7, &pt("0", "2")), Err(Error::ForbiddenSet { step: 0 }));
    }

    #[test]
    fn a_zero_six_cycle_by_hand() {
        // x_{n+2} = x_{n+1} / x_n from (1, 2): 1, 2, 2, 1, 1/2, 1/2, 1, 2
        let params = MapParams::new(Rational::zero());
        let (terms, err) = sequence(&params, &q("1"), &q("2"), 7);
        assert!(err.is_none());
        let expected: Vec<Rational> = ["1", "2", "2", "1", "1/2", "1/2", "1", "2"].iter().map(|s| q(s)).collect();
        assert_eq!(terms, expected);
    }

    #[test]
    fn step_back_examples() {
        let a7 = MapParams::new(q("7"));
        assert_eq!(step_back(&a7, &pt("5/7", "36/7")).unwrap(), pt("3/2", "5/7"));
        assert_eq!(step_back(&MapParams::new(q("1")), &pt("1", "2")).unwrap(), pt("1", "1"));
        let p = MapParams::new(q("3/2"));
        let seed = pt("-2", "3/5");
        assert_eq!(step_back(&p, &step(&p, &seed).unwrap()).unwrap(), seed);
        assert_eq!(step_back(&p, &pt("1", "0")), Err(Error::ForbiddenSet { step: 0 }));
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(invariant_h(&MapParams::new(q("7")), &pt("3/2", "5/7")).unwrap(), q("258/7"));
        assert_eq!(invariant_h(&MapParams::new(q("1")), &pt("1", "1")).unwrap(), q("12"));
        assert_eq!(invariant_h(&MapParams::new(q("1")), &pt("0", "1")), Err(Error::NotOnAffineChart));
    }

    #[test]
    fn period_examples() {
        let rep = detect_period(&MapParams::new(q("7")), &pt("3/2", "5/7"), DetectOptions::with_max_steps(100)).unwrap();
        assert_eq!(rep.status, PeriodStatus::Periodic(9));
        let terms: Vec<String> = rep.terms().iter().map(|t| t.to_string()).collect();
        assert_eq!(terms, ["3/2", "5/7", "36/7", "17/1", "14/3", "35/51", "28/17", "63/5", "119/10"]);

        assert_eq!(period_of(&q("3/2"), &q("-2"), &q("3/5")).unwrap(), Some(10));
        assert_eq!(period_of(&q("12/13"), &q("-4/9"), &q("-10/13")).unwrap(), Some(12));
        assert_eq!(period_of(&q("1"), &q("2"), &q("3")).unwrap(), Some(5));
    }

    #[test]
    fn forbidden_and_aperiodic() {
        let p = MapParams::new(q("2"));
        let rep = detect_period(&p, &pt("0", "1"), DetectOptions::default()).unwrap();
        assert_eq!(rep.status, PeriodStatus::HitForbiddenSet { step: 0 });
        // a = 2, h = 12 seed (1, 1): generic, non-torsion
        let rep = detect_period(&p, &pt("1", "1"), DetectOptions::with_max_steps(12)).unwrap();
        assert_eq!(rep.status, PeriodStatus::Aperiodic { after: 12 });
        assert_eq!(rep.orbit.len(), 13);
    }

    #[test]
    fn growth_guard_trips() {
        let opts = DetectOptions { max_steps: 100, max_bits: 64 };
        let err = detect_period(&MapParams::new(q("2")), &pt("1", "1"), opts).unwrap_err();
        assert!(matches!(err, Error::GrowthLimit { limit: 64, .. }));
    }

    #[test]
    fn sequence_stops_at_zero() {
        let (terms, err) = sequence(&MapParams::new(q("2")), &q("0"), &q("1"), 3);
        assert_eq!(terms.len(), 2);
        assert_eq!(err, Some(Error::ForbiddenSet { step: 0 }));
        let (terms, err) = sequence(&MapParams::new(q("1")), &q("1"), &q("1"), 6);
        assert!(err.is_none());
        let s: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, ["1/1", "1/1", "2/1", "3/1", "2/1", "1/1", "1/1"]);
    }
}
