//! Constructions specific to the Lyness map: dynamics on the non-elliptic
//! level sets, explicit period families, the period-12 parametrization and
//! the pipeline that manufactures rational 9-periodic seeds with `x + y = 23/4`.

use crate::curve::{classify_level_set, LevelSetClass};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::forms::{cubic_point_to_quartic, quartic_to_cubic, QuarticCurve, ShortWeierstrass, SwPoint};
use crate::lyness::{detect_period, invariant_h, DetectOptions, MapParams, PlanePoint};

/// `t -> (A·t + B) / (C·t + D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusMap {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusClass {
    Identity,
    GloballyPeriodic(u32),
    NonPeriodic,
}

impl MobiusMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        Ok(m)
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.d
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// `None` at the pole.
    pub fn apply(&self, t: &Rational) -> Option<Rational> {
        let den = &self.c * t + &self.d;
        (&self.a * t + &self.b).checked_div(&den).ok()
    }

    pub fn compose(&self, inner: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: &self.a * &inner.a + &self.b * &inner.c,
            b: &self.a * &inner.b + &self.b * &inner.d,
            c: &self.c * &inner.a + &self.d * &inner.c,
            d: &self.c * &inner.b + &self.d * &inner.d,
        }
    }

    /// Finite order is decided by `tr²/det`: an eigenvalue ratio that is a
    /// root of unity with rational cosine gives 0, 1, 2 or 3.
    pub fn classify(&self) -> Result<MobiusClass> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        if self.is_scalar() {
            return Ok(MobiusClass::Identity);
        }
        let r = self.trace().square().checked_div(&det)?;
        let class = match r {
            _ if r.is_zero() => MobiusClass::GloballyPeriodic(2),
            _ if r.is_one() => MobiusClass::GloballyPeriodic(3),
            _ if r == Rational::from(2) => MobiusClass::GloballyPeriodic(4),
            _ if r == Rational::from(3) => MobiusClass::GloballyPeriodic(6),
            _ => MobiusClass::NonPeriodic,
        };
        Ok(class)
    }
}

pub fn mobius_classify(m: &MobiusMap) -> Result<MobiusClass> {
    m.classify()
}

/// Which non-elliptic level set, with the induced one-dimensional map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEllipticBranch {
    /// `F³` on `x = -1` acts as `y -> (1-a)/(y+a)`.
    ThreeLines,
    /// `F²` on `x + y + 1 = 0` acts as `x -> (-x + a - 1)/x`.
    LineHyperbola,
    /// `F` on the parametrized cubic acts as `t -> (t - (b+1)/(2b+4))/t`,
    /// with `b = ±sqrt(4a+1)`.
    RationalCubic { b: Rational },
    /// `a = 0`, `h = 8`: every point but the fixed point has period 6.
    GloballySixPeriodic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonEllipticReport {
    pub branch: NonEllipticBranch,
    /// Absent when the induced map degenerates (`a = 1` on `h = 0`).
    pub mobius: Option<MobiusMap>,
    pub class: Option<MobiusClass>,
    /// Power of `F_a` that the Möbius map represents.
    pub multiplier: u32,
    /// `F_a`-period of the non-fixed points of the continuum, if periodic.
    pub fa_period: Option<u32>,
}

fn translate_period(class: Option<MobiusClass>, multiplier: u32) -> Option<u32> {
    match class? {
        MobiusClass::GloballyPeriodic(p) => Some(p * multiplier),
        MobiusClass::Identity => Some(multiplier),
        MobiusClass::NonPeriodic => None,
    }
}

/// The `b` with `(b+3)³/(4(b+1)) = h` among `±sqrt(4a+1)`.
fn cubic_branch_b(a: &Rational, h: &Rational) -> Result<Rational> {
    let s = (a * 4 + 1).sqrt_exact().map_err(|_| Error::Internal("rational cubic with 4a+1 not a square".into()))?;
    for b in [s.clone(), -s] {
        let den = (&b + 1) * 4;
        if let Ok(hc) = (&b + 3).pow(3).checked_div(&den) {
            if hc == *h {
                return Ok(b);
            }
        }
    }
    Err(Error::Internal("no branch of sqrt(4a+1) matches h".into()))
}

pub fn nonelliptic_dynamics(a: &Rational, h: &Rational) -> Result<NonEllipticReport> {
    let one = Rational::one;
    let zero = Rational::zero;
    let (branch, mobius, multiplier) = match classify_level_set(a, h) {
        LevelSetClass::Elliptic => return Err(Error::WrongClass),
        LevelSetClass::ThreeLines => {
            let m = MobiusMap::new(zero(), one() - a, one(), a.clone()).ok();
            (NonEllipticBranch::ThreeLines, m, 3)
        }
        LevelSetClass::LineHyperbola => {
            let m = MobiusMap::new(Rational::from(-1), a - 1, one(), zero()).ok();
            (NonEllipticBranch::LineHyperbola, m, 2)
        }
        LevelSetClass::RationalCubic => {
            let b = cubic_branch_b(a, h)?;
            let shift = (&b + 1).checked_div(&(&b * 2 + 4))?;
            let m = MobiusMap::new(one(), -shift, one(), zero()).ok();
            (NonEllipticBranch::RationalCubic { b }, m, 1)
        }
        LevelSetClass::DegenerateOther => {
            return Ok(NonEllipticReport {
                branch: NonEllipticBranch::GloballySixPeriodic,
                mobius: None,
                class: None,
                multiplier: 1,
                fa_period: Some(6),
            });
        }
    };
    let class = mobius.as_ref().map(MobiusMap::classify).transpose()?;
    Ok(NonEllipticReport { branch, mobius, class, multiplier, fa_period: translate_period(class, multiplier) })
}

/// Rational parametrization `t -> (x(t), y(t))` of the singular cubic
/// level set through a fixed point, for `b = ±sqrt(4a+1)`.
pub fn rational_cubic_point(b: &Rational, t: &Rational) -> Result<PlanePoint> {
    let b1 = b + 1;
    let x_num = (t * 3 + t * b - 2) * (t * b * 2 + t * 4 - b - 1);
    let x = x_num.checked_div(&(&b1 * 2 * (t - 1)))?;
    let y_num = (t * 3 + t * b - b - 1) * (t * b * 2 + t * 4 - 3 - b);
    let y = -(y_num.checked_div(&(t * 2 * &b1))?);
    Ok(PlanePoint::new(x, y))
}

/// One-parameter families of periodic seeds, indexed by `u`.
pub fn family_point(period: u32, u: &Rational) -> Result<(Rational, Rational, Rational)> {
    let excluded = |why: &str| Error::ExcludedParameter(format!("period {period}, u = {u}: {why}"));
    let (a, x0, x1) = match period {
        1 => {
            if u.is_zero() {
                return Err(excluded("u = 0"));
            }
            (u.square() - u, u.clone(), u.clone())
        }
        2 => {
            if u.is_zero() || *u == Rational::from(-1) {
                return Err(excluded("u in {-1, 0}"));
            }
            (u.square() + u + 1, u.clone(), -u - 1)
        }
        3 => {
            if u.is_one() {
                return Err(excluded("a = 1"));
            }
            (u.clone(), Rational::from(-1), Rational::from(-1))
        }
        7 => {
            let a = (u.square() - 1).checked_div(&(u * 2 - 1)).map_err(|_| excluded("2u - 1 = 0"))?;
            let x0 = (u.square() - 1).checked_div(&(u.square() - u + 1)).map_err(|_| excluded("pole"))?;
            let x1 = -&x0;
            (a, x0, x1)
        }
        8 => {
            let a = (u.square() - 1).checked_div(&(u.square() + u * 2 - 1)).map_err(|_| excluded("pole"))?;
            let x0 = (u.square() - 1).checked_div(&(u.square() + 1)).map_err(|_| excluded("pole"))?;
            let x1 = -&x0;
            (a, x0, x1)
        }
        _ => return Err(Error::ExcludedParameter(format!("no one-parameter family for period {period}"))),
    };
    let report = detect_period(&MapParams::new(a.clone()), &PlanePoint::new(x0.clone(), x1.clone()), DetectOptions::default())?;
    match report.period() {
        Some(p) if p == period as usize => Ok((a, x0, x1)),
        Some(p) => Err(excluded(&format!("seed has prime period {p}"))),
        None => Err(excluded("seed is not periodic")),
    }
}

/// `a = 2t(1+t)/(3t²+1)`, `h = -(t-1)²(t²+1)/(t(1+t)(3t²+1))`.
pub fn period12_parametrization(t: &Rational) -> Result<(Rational, Rational)> {
    if t.is_zero() || t.abs().is_one() {
        return Err(Error::ExcludedParameter(format!("t = {t} is in {{0, 1, -1}}")));
    }
    let d = t.square() * 3 + 1;
    let a = (t * 2 * (t + 1)).checked_div(&d)?;
    let h = -((t - 1).square() * (t.square() + 1)).checked_div(&(t * (t + 1) * &d))?;
    Ok((a, h))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoexistenceFlags {
    /// `4a + 1` is a rational square.
    pub fixed_point_rational: bool,
    /// `4a - 3` is a rational square.
    pub two_periodic_rational: bool,
    /// `((1 ± sqrt(4a+1))/2, same)` when rational.
    pub fixed_points: Vec<PlanePoint>,
}

pub fn coexistence_tests(a: &Rational) -> CoexistenceFlags {
    let disc = a * 4 + 1;
    let mut fixed_points = Vec::new();
    if let Ok(s) = disc.sqrt_exact() {
        for root in [&s, &-&s] {
            let v = (root + 1) * Rational::ratio(1, 2);
            let p = PlanePoint::new(v.clone(), v);
            if !fixed_points.contains(&p) {
                fixed_points.push(p);
            }
        }
    }
    CoexistenceFlags {
        fixed_point_rational: disc.is_square(),
        two_periodic_rational: (a * 4 - 3).is_square(),
        fixed_points,
    }
}

/// Sum `x + y` fixed along the construction.
pub fn nine_sum() -> Rational {
    Rational::ratio(23, 4)
}

/// Translation `A = a - 4135/2116` taking the Δ₃ quartic to depressed form.
pub fn quartic_shift() -> Rational {
    Rational::ratio(4135, 2116)
}

/// `Δ₃ = (a - 4)(a³ - (2019/529)a² - (777/92)a - 1)`.
pub fn delta3(a: &Rational) -> Rational {
    (a - 4) * (a.pow(3) - a.square() * Rational::ratio(2019, 529) - a * Rational::ratio(777, 92) - 1)
}

fn nine_pole_guard(a: &Rational) -> Result<()> {
    if *a == Rational::from(4) || *a == Rational::ratio(-1, 2) {
        return Err(Error::Pole("a in {4, -1/2}"));
    }
    Ok(())
}

/// `Δ₂ = (46/(4(1+2a)(a-4)))² · Δ₃`, the value of `S² - 4P` at `S = 23/4`.
pub fn delta2(a: &Rational) -> Result<Rational> {
    nine_pole_guard(a)?;
    let scale = Rational::from(46).checked_div(&((a * 2 + 1) * (a - 4) * 4))?;
    Ok(scale.square() * delta3(a))
}

/// `P = xy` on the period-9 curve along `x + y = 23/4`.
pub fn product_at_nine_sum(a: &Rational) -> Result<Rational> {
    nine_pole_guard(a)?;
    let num = a * (a * 4 + 23) * Rational::ratio(27, 4);
    num.checked_div(&((a - 4) * (a * 2 + 1).square()))
}

/// `P = a(1+S)(a+S)/(a³ - 3a² + (2-S)a - 1)` for general `S`.
pub fn product_for_sum(a: &Rational, s: &Rational) -> Result<Rational> {
    let den = a.pow(3) - a.square() * 3 + (Rational::from(2) - s) * a - 1;
    (a * (s + 1) * (a + s)).checked_div(&den).map_err(|_| Error::Pole("denominator of P"))
}

/// `a > 4` and `Δ₃(a) ≥ 0`, i.e. `a` is at or beyond the largest root `a₁`.
pub fn at_or_beyond_a1(a: &Rational) -> bool {
    *a > Rational::from(4) && !delta3(a).is_negative()
}

/// Largest roots of the two cubics bounding the positive region, for display.
pub const A_STAR_DISPLAY: &str = "5.41147413";
pub const A1_DISPLAY: &str = "5.41147624";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConstants {
    pub quartic: QuarticCurve,
    pub cubic: ShortWeierstrass,
    pub r: SwPoint,
}

pub fn pipeline_constants() -> Result<PipelineConstants> {
    let quartic = QuarticCurve::new(
        Rational::ratio(-36024561, 2238728),
        Rational::ratio(-38272338, 148035889),
        Rational::ratio(1009624858257249, 20047612231936),
    );
    let cubic = ShortWeierstrass::new(Rational::ratio(-1288423179, 71639296), Rational::ratio(8775405707427, 303177500672))?;
    if quartic_to_cubic(&quartic)? != cubic {
        return Err(Error::Internal("quartic does not map to the stated cubic".into()));
    }
    let r = SwPoint::affine(Rational::ratio(18243, 8464), Rational::ratio(81, 184));
    if !cubic.contains(&r) {
        return Err(Error::Internal("R is not on the cubic".into()));
    }
    // The quartic is Δ₃ after the shift; check one sample value.
    let probe = Rational::from(7);
    if quartic.eval(&(&probe - quartic_shift())) != delta3(&probe) {
        return Err(Error::Internal("quartic is not the shifted Δ₃".into()));
    }
    Ok(PipelineConstants { quartic, cubic, r })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NineSeed {
    pub k: i64,
    pub a: Rational,
    pub x: Rational,
    pub y: Rational,
    /// `a > 0` and both coordinates positive, so the whole orbit is positive.
    pub positive: bool,
    /// The quartic point `(A, K)` the seed was read from.
    pub quartic_point: (Rational, Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum NineOutcome {
    Seed(NineSeed),
    Skipped(String),
}

/// Seed from an arbitrary rational point `(A, K)` of the quartic.
pub fn nine_seed_from_quartic(k: i64, quartic: &QuarticCurve, big_a: &Rational, big_k: &Rational) -> Result<NineOutcome> {
    if !quartic.contains(big_a, big_k) {
        return Err(Error::NotOnQuartic);
    }
    let a = big_a + quartic_shift();
    let s = nine_sum();
    let p = match product_at_nine_sum(&a) {
        Ok(p) => p,
        Err(e) => return Ok(NineOutcome::Skipped(format!("a = {a}: {e}"))),
    };
    let delta = s.square() - p * 4;
    let root = delta
        .sqrt_exact()
        .map_err(|_| Error::Internal(format!("Δ = {delta} is not a square for a quartic point")))?;
    let x = (&s + &root) * Rational::ratio(1, 2);
    let y = (&s - &root) * Rational::ratio(1, 2);
    let seed = PlanePoint::new(x.clone(), y.clone());
    let report = detect_period(&MapParams::new(a.clone()), &seed, DetectOptions::default())?;
    match report.period() {
        Some(9) => {}
        Some(p) => return Err(Error::Internal(format!("seed at a = {a} has period {p}, expected 9"))),
        None => return Ok(NineOutcome::Skipped(format!("a = {a}: orbit is not periodic ({:?})", report.status))),
    }
    let positive = a.is_positive() && x.is_positive() && y.is_positive();
    Ok(NineOutcome::Seed(NineSeed { k, a, x, y, positive, quartic_point: (big_a.clone(), big_k.clone()) }))
}

/// Pushes `k·R` through the quartic and the `(S, P)` coordinates to a
/// rational 9-periodic seed of `F_a`.
pub fn generate_nine_periodic(k: i64) -> Result<NineOutcome> {
    if k == 0 {
        return Err(Error::ExcludedParameter("k = 0".into()));
    }
    let consts = pipeline_constants()?;
    let (x, y) = match consts.cubic.mul(&consts.r, k)? {
        SwPoint::Infinity => return Ok(NineOutcome::Skipped(format!("{k}R is the point at infinity"))),
        SwPoint::Affine(x, y) => (x, y),
    };
    let (big_a, big_k) = match cubic_point_to_quartic(&consts.quartic, &x, &y) {
        Ok(pt) => pt,
        Err(Error::AtInfinityBranch) => return Ok(NineOutcome::Skipped(format!("{k}R maps to infinity on the quartic"))),
        Err(e) => return Err(e),
    };
    nine_seed_from_quartic(k, &consts.quartic, &big_a, &big_k)
}

/// Seeds for every nonzero `k` in `kmin..=kmax`.
pub fn scan_nine_periodic(kmin: i64, kmax: i64) -> Result<Vec<NineOutcome>> {
    (kmin..=kmax).filter(|&k| k != 0).map(generate_nine_periodic).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NineWitness {
    pub label: &'static str,
    pub a: Rational,
    pub x: Rational,
    pub y: Rational,
}

/// Known rational 9-periodic seeds.
pub fn known_nine_witnesses() -> Vec<NineWitness> {
    let w = |label, a: &str, x: &str, y: &str| NineWitness {
        label,
        a: a.parse().expect("literal"),
        x: x.parse().expect("literal"),
        y: y.parse().expect("literal"),
    };
    vec![
        w("positive", "7", "3/2", "5/7"),
        w("positive", "11", "29/82", "19/22"),
        w("positive", "13", "1584676/61133", "335937/856427"),
        w("positive", "19", "4259697/16150", "5178617/168283"),
        w("rank-4 generator", "408/23", "15708/38617", "1275/4346"),
        w("rank-4 generator", "408/23", "117348775936/1130069373", "17875982344/22803541107"),
        w("rank-4 generator", "408/23", "-5313/5186", "199644/17"),
        w("rank-4 generator", "408/23", "96539240/980237", "892914/1232041"),
        w("rank-1 generator", "9", "-3/70", "-1273/105"),
    ]
}

/// `h` of the level set through a seed.
pub fn seed_level(a: &Rational, x: &Rational, y: &Rational) -> Result<Rational> {
    invariant_h(&MapParams::new(a.clone()), &PlanePoint::new(x.clone(), y.clone()))
}
