//! Projective Lyness cubics `(x+z)(y+z)(x+y+az) - hxyz = 0` and their
//! chord-tangent group law with neutral element `O = [1:-1:0]`.
//!
//! One step of the Lyness map is translation by `Q = [1:0:0]`, so a rational
//! seed is `n`-periodic exactly when `Q` has order `n` on its level set.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::lyness::PlanePoint;

/// Default cap for [`LynessCurve::order_of`].
pub const DEFAULT_ORDER_CAP: usize = 30;

/// Point of the projective plane as a coprime integer triple whose first
/// nonzero coordinate is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl ProjectivePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        Self::canonical([x.into(), y.into(), z.into()]).ok_or(Error::BasePoint)
    }

    fn canonical(mut v: [BigInt; 3]) -> Option<Self> {
        let g = v[0].gcd(&v[1]).gcd(&v[2]);
        if g.is_zero() {
            return None;
        }
        let lead_negative = v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        for c in v.iter_mut() {
            *c /= &g;
            if lead_negative {
                *c = -&*c;
            }
        }
        let [x, y, z] = v;
        Some(ProjectivePoint { x, y, z })
    }

    /// `[x:y:z]` with rational entries, scaled to integers.
    pub fn from_rationals(x: &Rational, y: &Rational, z: &Rational) -> Result<Self> {
        let d = x.denom().lcm(y.denom()).lcm(z.denom());
        let scale = |r: &Rational| r.numer() * (&d / r.denom());
        Self::new(scale(x), scale(y), scale(z))
    }

    pub fn from_affine(p: &PlanePoint) -> Self {
        Self::from_rationals(&p.x, &p.y, &Rational::one()).expect("z = 1 is nonzero")
    }

    /// The neutral element `O = [1:-1:0]`.
    pub fn zero() -> Self {
        ProjectivePoint { x: BigInt::one(), y: -BigInt::one(), z: BigInt::zero() }
    }

    /// The translation point `Q = [1:0:0]`.
    pub fn q() -> Self {
        ProjectivePoint { x: BigInt::one(), y: BigInt::zero(), z: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    pub fn coords(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.x, &self.y, &self.z)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.z.is_zero()
    }

    pub fn to_affine(&self) -> Option<PlanePoint> {
        if self.z.is_zero() {
            return None;
        }
        let x = Rational::new(self.x.clone(), self.z.clone()).ok()?;
        let y = Rational::new(self.y.clone(), self.z.clone()).ok()?;
        Some(PlanePoint::new(x, y))
    }

    fn as_array(&self) -> [BigInt; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.x, self.y, self.z)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    /// `x:y:z` (integers or rationals) or affine `x,y`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePoint(s.to_string());
        let t = s.trim();
        if t.contains(':') {
            let parts: Vec<&str> = t.split(':').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let r: Vec<Rational> = parts.iter().map(|p| p.parse()).collect::<Result<_>>().map_err(|_| bad())?;
            return Self::from_rationals(&r[0], &r[1], &r[2]).map_err(|_| bad());
        }
        let (x, y) = t.split_once(',').ok_or_else(bad)?;
        let x: Rational = x.parse().map_err(|_| bad())?;
        let y: Rational = y.parse().map_err(|_| bad())?;
        Ok(Self::from_affine(&PlanePoint::new(x, y)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelSetClass {
    Elliptic,
    /// `h = 0`: the lines `x+1 = 0`, `y+1 = 0`, `x+y+a = 0`.
    ThreeLines,
    /// `h = a - 1 != 0`: the line `x+y+1 = 0` and a hyperbola.
    LineHyperbola,
    /// `h = h_c±`: the level set through a fixed point, singular there.
    RationalCubic,
    /// `(a, h) = (0, 8)`: the fixed-point level set at `a = 0`.
    DegenerateOther,
}

pub fn classify_level_set(a: &Rational, h: &Rational) -> LevelSetClass {
    if h.is_zero() {
        return LevelSetClass::ThreeLines;
    }
    if *h == a - 1 {
        return LevelSetClass::LineHyperbola;
    }
    if a.is_zero() {
        // The squared identity collapses to 1 = 1 at a = 0; the singular
        // level through the fixed point (1, 1) is h = 8.
        return if *h == Rational::from(8) { LevelSetClass::DegenerateOther } else { LevelSetClass::Elliptic };
    }
    let lhs = (a * h * 2 - a.square() * 2 - a * 10 + 1).square();
    let rhs = (a * 4 + 1).pow(3);
    if lhs == rhs {
        return LevelSetClass::RationalCubic;
    }
    LevelSetClass::Elliptic
}

/// Result of [`LynessCurve::order_of`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOrder {
    Finite(usize),
    InfiniteOrPastCap,
}

/// The level set `C_{a,h}` with integer-scaled coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LynessCurve {
    a: Rational,
    h: Rational,
    class: LevelSetClass,
    // L, L·a, L·h with L the lcm of the denominators of a and h.
    l: BigInt,
    la: BigInt,
    lh: BigInt,
}

impl fmt::Debug for LynessCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(a={}, h={}, {:?})", self.a, self.h, self.class)
    }
}

fn cross(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn lincomb(s: &BigInt, p: &[BigInt; 3], t: &BigInt, q: &[BigInt; 3]) -> [BigInt; 3] {
    [s * &p[0] + t * &q[0], s * &p[1] + t * &q[1], s * &p[2] + t * &q[2]]
}

impl LynessCurve {
    pub fn new(a: Rational, h: Rational) -> Self {
        let class = classify_level_set(&a, &h);
        let l = a.denom().lcm(h.denom());
        let la = a.numer() * (&l / a.denom());
        let lh = h.numer() * (&l / h.denom());
        LynessCurve { a, h, class, l, la, lh }
    }

    /// The curve through an affine seed, `h = invariant_h(a, seed)`.
    pub fn through(a: &Rational, p: &PlanePoint) -> Result<Self> {
        let h = crate::lyness::invariant_h(&crate::lyness::MapParams::new(a.clone()), p)?;
        Ok(Self::new(a.clone(), h))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn class(&self) -> LevelSetClass {
        self.class
    }

    pub fn is_elliptic(&self) -> bool {
        self.class == LevelSetClass::Elliptic
    }

    fn eval(&self, v: &[BigInt; 3]) -> BigInt {
        let [x, y, z] = v;
        let xz = x + z;
        let yz = y + z;
        &self.l * &xz * &yz * (x + y) + &self.la * z * &xz * &yz - &self.lh * x * y * z
    }

    fn gradient(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        let [x, y, z] = v;
        let xz = x + z;
        let yz = y + z;
        let xy = x + y;
        let gx = &self.l * (&yz * &xy + &xz * &yz) + &self.la * z * &yz - &self.lh * y * z;
        let gy = &self.l * (&xz * &xy + &xz * &yz) + &self.la * z * &xz - &self.lh * x * z;
        let gz = &self.l * (&yz * &xy + &xz * &xy) + &self.la * (&xz * &yz + z * &yz + z * &xz) - &self.lh * x * y;
        [gx, gy, gz]
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.eval(&p.as_array()).is_zero()
    }

    fn require_elliptic(&self) -> Result<()> {
        if self.is_elliptic() {
            Ok(())
        } else {
            Err(Error::SingularCurve(self.class))
        }
    }

    fn require_on_curve(&self, p: &ProjectivePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// Coefficients `[c3, c2, c1, c0]` of `F(u·p + v·d)` as a binary cubic
    /// in `u, v`, recovered from four exact evaluations.
    fn binary_cubic(&self, p: &[BigInt; 3], d: &[BigInt; 3]) -> [BigInt; 4] {
        let one = BigInt::one();
        let c3 = self.eval(p);
        let c0 = self.eval(d);
        let s = self.eval(&lincomb(&one, p, &one, d));
        let t = self.eval(&lincomb(&one, p, &-&one, d));
        // s = c3 + c2 + c1 + c0, t = c3 - c2 + c1 - c0
        let c1 = (&s + &t - &c3 * 2) / 2;
        let c2 = (&s - &t - &c0 * 2) / 2;
        [c3, c2, c1, c0]
    }

    /// Third intersection of the chord through `p, q` (the tangent when
    /// `p = q`) with the curve, counted with multiplicity.
    pub fn third_intersection(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        let pv = p.as_array();
        if p != q {
            // [1:0] and [0:1] are roots, so F = u·v·(c2·u + c1·v).
            let qv = q.as_array();
            let [_, c2, c1, _] = self.binary_cubic(&pv, &qv);
            if c1.is_zero() && c2.is_zero() {
                return Err(Error::LineInCurve);
            }
            return ProjectivePoint::canonical(lincomb(&c1, &pv, &-c2, &qv)).ok_or(Error::LineInCurve);
        }
        let grad = self.gradient(&pv);
        if grad.iter().all(Zero::is_zero) {
            return Err(Error::ZeroGradient);
        }
        // A second point on the tangent line grad · X = 0, distinct from p.
        let basis = [
            [BigInt::one(), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero(), BigInt::one()],
        ];
        let dv = basis
            .iter()
            .map(|e| cross(&grad, e))
            .find(|d| !cross(d, &pv).iter().all(Zero::is_zero))
            .ok_or(Error::ZeroGradient)?;
        // [1:0] is a double root, so F = v^2·(c1·u + c0·v).
        let [_, c2, c1, c0] = self.binary_cubic(&pv, &dv);
        if !c2.is_zero() {
            return Err(Error::Internal("tangent line is not tangent".into()));
        }
        if c1.is_zero() && c0.is_zero() {
            return Err(Error::LineInCurve);
        }
        ProjectivePoint::canonical(lincomb(&c0, &pv, &-c1, &dv)).ok_or(Error::LineInCurve)
    }

    pub fn add(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        let r = self.third_intersection(p, q)?;
        self.third_intersection(&ProjectivePoint::zero(), &r)
    }

    pub fn neg(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let o = ProjectivePoint::zero();
        let t = self.third_intersection(&o, &o)?;
        self.third_intersection(p, &t)
    }

    pub fn sub(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.add(p, &self.neg(q)?)
    }

    /// `k·p` by double-and-add.
    pub fn mul(&self, p: &ProjectivePoint, k: i64) -> Result<ProjectivePoint> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        let base = if k < 0 { self.neg(p)? } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = ProjectivePoint::zero();
        let mut dbl = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &dbl)?;
            }
            n >>= 1;
            if n > 0 {
                dbl = self.add(&dbl, &dbl)?;
            }
        }
        Ok(acc)
    }

    /// Least `n <= cap` with `n·p = O`.
    pub fn order_of(&self, p: &ProjectivePoint, cap: usize) -> Result<PointOrder> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        let mut acc = p.clone();
        for n in 1..=cap {
            if acc.is_zero() {
                return Ok(PointOrder::Finite(n));
            }
            acc = self.add(&acc, p)?;
        }
        Ok(PointOrder::InfiniteOrPastCap)
    }
}

/// `F̃([x:y:z]) = [xy : az² + yz : xz]`.
pub fn projective_step(a: &Rational, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    let (x, y, z) = p.coords();
    let d = a.denom();
    let n = a.numer();
    ProjectivePoint::canonical([d * x * y, n * z * z + d * y * z, d * x * z]).ok_or(Error::BasePoint)
}

fn affine_q(x: Rational, y: Rational) -> ProjectivePoint {
    ProjectivePoint::from_affine(&PlanePoint::new(x, y))
}

fn nonzero(r: Rational, what: &'static str) -> Result<Rational> {
    if r.is_zero() {
        Err(Error::FormulaPole(what))
    } else {
        Ok(r)
    }
}

/// Closed forms for `kQ`, `k ∈ [-5, 7]`.
pub fn q_multiples(a: &Rational, h: &Rational, k: i64) -> Result<ProjectivePoint> {
    let am1 = nonzero(a - 1, "a - 1")?;
    nonzero(a.clone(), "a")?;
    let neg_a = -a;
    let a_am1 = a * &am1;
    let ahm = a * h - a + 1;
    // (ah - a + 1) / (a - 1)
    let r4 = || ahm.checked_div(&am1);
    // (-a² - ah + 2a - 1) / (a(a - 1))
    let r5 = || (-a.square() - a * h + a * 2 - 1).checked_div(&a_am1);
    // (a³ - 2a² - ah + 2a - 1) / (a(ah - a + 1))
    let r6 = || {
        let den = nonzero(a * &ahm, "a(ah - a + 1)")?;
        (a.pow(3) - a.square() * 2 - a * h + a * 2 - 1).checked_div(&den)
    };
    let pt = match k {
        0 => ProjectivePoint::zero(),
        1 => ProjectivePoint::q(),
        2 => affine_q(Rational::from(-1), Rational::zero()),
        3 => affine_q(Rational::zero(), neg_a),
        4 => affine_q(neg_a, r4()?),
        5 => affine_q(r4()?, r5()?),
        6 => affine_q(r5()?, r6()?),
        7 => {
            let h2 = h.square();
            let a2 = a.square();
            let a3 = a.pow(3);
            let num = -(a.pow(4) * h) + &a3 * h + &a3 + &a2 * h - &a2 * 3 - a * h + a * 3 - 1;
            let den = &a3 * h - &a3 + &a2 * &h2 - &a2 * h * 3 + &a2 * 3 + a * h * 2 - a * 3 + 1;
            let den = nonzero(den, "7Q denominator")?;
            affine_q(r6()?, num.checked_div(&den)?)
        }
        -1 => ProjectivePoint::new(0, 1, 0)?,
        -2 => affine_q(Rational::zero(), Rational::from(-1)),
        -3 => affine_q(neg_a, Rational::zero()),
        -4 => affine_q(r4()?, neg_a),
        -5 => affine_q(r5()?, r4()?),
        _ => return Err(Error::ExcludedParameter(format!("k = {k} outside [-5, 7]"))),
    };
    Ok(pt)
}

/// Level `h` on which `Q` has order `n`, where that is a single curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodLevel {
    Level(Rational),
    /// Period 5 needs `a = 1` and period 6 needs `a = 0`, with `h` free.
    RequiresA(Rational),
    /// Period 12 is a rational curve in the `(a, h)` plane.
    Parametrized,
}

pub fn h_for_period(n: u32, a: &Rational) -> Result<PeriodLevel> {
    let pole = |what| Error::FormulaPole(what);
    let level = match n {
        5 => return Ok(PeriodLevel::RequiresA(Rational::one())),
        6 => return Ok(PeriodLevel::RequiresA(Rational::zero())),
        12 => return Ok(PeriodLevel::Parametrized),
        7 => (a - 1).checked_div(a).map_err(|_| pole("(a-1)/a"))?,
        8 => (-(a - 1).square()).checked_div(a).map_err(|_| pole("-(a-1)^2/a"))?,
        9 => ((a - 1) * (a.square() - a + 1)).checked_div(a).map_err(|_| pole("(a-1)(a^2-a+1)/a"))?,
        10 => (a - 1).checked_div(&(a * (a + 1))).map_err(|_| pole("(a-1)/(a(a+1))"))?,
        _ => return Err(Error::ExcludedParameter(format!("no level formula for period {n}"))),
    };
    Ok(PeriodLevel::Level(level))
}

/// The nine 9-torsion points on `h = (a-1)(a²-a+1)/a`, in the order
/// `Q, 2Q, 3Q, 4Q, -4Q, -3Q, -2Q, -Q, O`.
pub fn torsion9_points(a: &Rational) -> Result<Vec<ProjectivePoint>> {
    if a.is_zero() || a.is_one() {
        return Err(Error::FormulaPole("a(a - 1)"));
    }
    let neg_a = -a;
    let a_am1 = a * (a - 1);
    Ok(vec![
        ProjectivePoint::q(),
        affine_q(Rational::from(-1), Rational::zero()),
        affine_q(Rational::zero(), neg_a.clone()),
        affine_q(neg_a.clone(), a_am1.clone()),
        affine_q(a_am1, neg_a.clone()),
        affine_q(neg_a, Rational::zero()),
        affine_q(Rational::zero(), Rational::from(-1)),
        ProjectivePoint::new(0, 1, 0)?,
        ProjectivePoint::zero(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyness::{step, MapParams};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pp(s: &str) -> ProjectivePoint {
        s.parse().unwrap()
    }

    fn c7() -> LynessCurve {
        LynessCurve::new(q("7"), q("258/7"))
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(ProjectivePoint::new(-2, 4, -6).unwrap().to_string(), "1:-2:3");
        assert_eq!(ProjectivePoint::new(0, -3, 6).unwrap().to_string(), "0:1:-2");
        assert_eq!(ProjectivePoint::new(0, 0, 0), Err(Error::BasePoint));
        assert_eq!(pp("3/2,5/7").to_string(), "21:10:14");
        assert_eq!(pp("1/2:1:0").to_string(), "1:2:0");
        assert!("1:2".parse::<ProjectivePoint>().is_err());
        assert!("1,2,3".parse::<ProjectivePoint>().is_err());
    }

    #[test]
    fn contains_examples() {
        let c = c7();
        assert!(c.contains(&ProjectivePoint::zero()));
        assert!(LynessCurve::new(q("-3/5"), q("11")).contains(&ProjectivePoint::zero()));
        assert!(!c.contains(&pp("3/2,-1")));
        assert!(c.contains(&pp("3/2,5/7")));
        let c9 = LynessCurve::new(q("9"), q("584/9"));
        assert!(c9.contains(&pp("-3/70,-1273/105")));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_level_set(&q("2"), &q("1")), LevelSetClass::LineHyperbola);
        assert_eq!(classify_level_set(&q("2"), &q("27/2")), LevelSetClass::RationalCubic);
        assert_eq!(classify_level_set(&q("7"), &q("258/7")), LevelSetClass::Elliptic);
        assert_eq!(classify_level_set(&q("7"), &q("0")), LevelSetClass::ThreeLines);
        assert_eq!(classify_level_set(&q("1"), &q("0")), LevelSetClass::ThreeLines);
        assert_eq!(classify_level_set(&q("1"), &q("12")), LevelSetClass::Elliptic);
        assert_eq!(classify_level_set(&q("0"), &q("8")), LevelSetClass::DegenerateOther);
        assert_eq!(classify_level_set(&q("0"), &q("3")), LevelSetClass::Elliptic);
        // b = -sqrt(4a+1) branch: a = 2, b = -3 gives h_c^- = 0, already ThreeLines
        // a = 6: b = ±5, h_c^± = (b+3)^3/(4(b+1)) = 512/24, -8/-16
        assert_eq!(classify_level_set(&q("6"), &q("64/3")), LevelSetClass::RationalCubic);
        assert_eq!(classify_level_set(&q("6"), &q("1/2")), LevelSetClass::RationalCubic);
    }

    #[test]
    fn projective_step_examples() {
        assert_eq!(projective_step(&q("5"), &ProjectivePoint::q()), Err(Error::BasePoint));
        assert_eq!(projective_step(&q("7"), &pp("21:10:14")).unwrap(), pp("5:36:7"));
        assert_eq!(pp("5:36:7").to_affine().unwrap(), PlanePoint::new(q("5/7"), q("36/7")));
        assert_eq!(projective_step(&q("1"), &pp("1:1:1")).unwrap(), pp("1:2:1"));
    }

    #[test]
    fn third_intersection_examples() {
        let c = c7();
        let o = ProjectivePoint::zero();
        let qq = ProjectivePoint::q();
        assert_eq!(c.third_intersection(&qq, &pp("0:1:0")).unwrap(), o);
        let two_q = pp("-1:0:1");
        let r = c.third_intersection(&o, &two_q).unwrap();
        assert_eq!(c.third_intersection(&o, &r).unwrap(), two_q);
        let t = c.third_intersection(&qq, &qq).unwrap();
        assert_eq!(c.third_intersection(&o, &t).unwrap(), two_q);
    }

    #[test]
    fn add_and_neg_examples() {
        let c = c7();
        let p = pp("21:10:14");
        let qq = ProjectivePoint::q();
        assert_eq!(c.add(&p, &ProjectivePoint::zero()).unwrap(), p);
        assert_eq!(c.add(&qq, &qq).unwrap(), pp("-1:0:1"));
        assert_eq!(c.add(&pp("-1:0:1"), &qq).unwrap(), pp("0:-7:1"));
        assert_eq!(c.add(&p, &qq).unwrap().to_affine().unwrap(), PlanePoint::new(q("5/7"), q("36/7")));
        assert_eq!(c.neg(&ProjectivePoint::zero()).unwrap(), ProjectivePoint::zero());
        assert_eq!(c.neg(&qq).unwrap(), pp("0:1:0"));
        assert_eq!(c.neg(&pp("0:-7:1")).unwrap(), pp("-7:0:1"));
    }

    #[test]
    fn mul_examples() {
        let c = c7();
        let p = pp("3/2,5/7");
        let qq = ProjectivePoint::q();
        let three = c.mul(&p, 3).unwrap();
        assert_eq!(three, pp("1220196964/288610463,183493485/276443357"));
        // The published "3P" and "9P" for this seed are 3P + 4Q and 5P + 8Q:
        // iterates of the translation R -> R + 2P + 4Q.
        let shift = c.add(&c.mul(&p, 2).unwrap(), &c.mul(&qq, 4).unwrap()).unwrap();
        let published3 = pp("260143588/23256135,337001111/246029869");
        let published9 = pp(
            "3147471926986755321149021/226091071032606625830925,891522142852888213265718/85174628288506877231975",
        );
        assert_eq!(c.add(&three, &c.mul(&qq, 4).unwrap()).unwrap(), published3);
        assert_eq!(c.add(&p, &shift).unwrap(), published3);
        assert_eq!(c.add(&published3, &shift).unwrap(), published9);
        assert!(c.contains(&c.mul(&p, 9).unwrap()));
        assert_eq!(c.mul(&ProjectivePoint::q(), 9).unwrap(), ProjectivePoint::zero());
        assert_eq!(c.mul(&p, 0).unwrap(), ProjectivePoint::zero());
        assert_eq!(c.mul(&p, -3).unwrap(), c.neg(&c.mul(&p, 3).unwrap()).unwrap());
    }

    #[test]
    fn order_examples() {
        let c = c7();
        assert_eq!(c.order_of(&ProjectivePoint::zero(), 30).unwrap(), PointOrder::Finite(1));
        assert_eq!(c.order_of(&ProjectivePoint::q(), 30).unwrap(), PointOrder::Finite(9));
        let c9 = LynessCurve::new(q("9"), q("584/9"));
        assert_eq!(c9.order_of(&pp("-3/70,-1273/105"), 30).unwrap(), PointOrder::InfiniteOrPastCap);
    }

    #[test]
    fn q_multiples_examples() {
        assert_eq!(q_multiples(&q("7"), &q("258/7"), 4).unwrap(), pp("-7:42:1"));
        for (a, h) in [("7", "258/7"), ("3", "5"), ("-2/3", "11/4")] {
            assert_eq!(q_multiples(&q(a), &q(h), -2).unwrap(), pp("0:-1:1"));
        }
        let c = LynessCurve::new(q("3"), q("5"));
        assert_eq!(q_multiples(&q("3"), &q("5"), 7).unwrap(), c.mul(&ProjectivePoint::q(), 7).unwrap());
        assert_eq!(q_multiples(&q("1"), &q("5"), 4), Err(Error::FormulaPole("a - 1")));
        // a·h - a + 1 = 0 at a = 2, h = 1/2
        assert_eq!(q_multiples(&q("2"), &q("1/2"), 6), Err(Error::FormulaPole("a(ah - a + 1)")));
        assert!(q_multiples(&q("2"), &q("3"), 8).is_err());
    }

    #[test]
    fn h_for_period_examples() {
        assert_eq!(h_for_period(9, &q("7")).unwrap(), PeriodLevel::Level(q("258/7")));
        assert_eq!(h_for_period(10, &q("21/37")).unwrap(), PeriodLevel::Level(q("-296/609")));
        assert_eq!(h_for_period(7, &q("8/5")).unwrap(), PeriodLevel::Level(q("3/8")));
        let c = LynessCurve::new(q("8/5"), q("3/8"));
        assert_eq!(c.order_of(&ProjectivePoint::q(), 30).unwrap(), PointOrder::Finite(7));
        assert_eq!(h_for_period(5, &q("3")).unwrap(), PeriodLevel::RequiresA(q("1")));
        assert_eq!(h_for_period(10, &q("-1")), Err(Error::FormulaPole("(a-1)/(a(a+1))")));
        assert!(h_for_period(4, &q("2")).is_err());
    }

    #[test]
    fn torsion9_examples() {
        let pts = torsion9_points(&q("7")).unwrap();
        assert!(pts.contains(&pp("-7:42:1")) && pts.contains(&pp("42:-7:1")));
        let c = c7();
        for p in &pts {
            assert!(c.contains(p));
            assert_eq!(c.mul(p, 9).unwrap(), ProjectivePoint::zero());
        }
    }

    #[test]
    fn singular_levels_refuse_group_law() {
        for (a, h) in [("2", "0"), ("2", "1"), ("2", "27/2"), ("0", "8")] {
            let c = LynessCurve::new(q(a), q(h));
            let o = ProjectivePoint::zero();
            assert!(matches!(c.add(&o, &o), Err(Error::SingularCurve(_))), "{a} {h}");
            assert!(matches!(c.mul(&o, 2), Err(Error::SingularCurve(_))));
        }
        assert_eq!(c7().add(&pp("1,1"), &ProjectivePoint::zero()), Err(Error::NotOnCurve));
    }

    #[test]
    fn affine_chart_agrees_with_map() {
        let params = MapParams::new(q("7"));
        let mut p = PlanePoint::new(q("3/2"), q("5/7"));
        for _ in 0..8 {
            let next = step(&params, &p).unwrap();
            let lifted = projective_step(&q("7"), &ProjectivePoint::from_affine(&p)).unwrap();
            assert_eq!(lifted.to_affine().unwrap(), next);
            p = next;
        }
    }
}
