//! Normal forms: Lyness cubic to Tate normal form, Tate to short Weierstrass,
//! and the quartic `K² = A⁴ + w₂A² + w₁A + w₀` to its Weierstrass cubic.
//!
//! The short Weierstrass chord law here is written independently of
//! [`crate::curve`] and serves as a cross-check of it.

use std::fmt;

use crate::curve::{LevelSetClass, LynessCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `Y² + (1 - c)XY - bY = X³ - bX²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateCurve {
    pub b: Rational,
    pub c: Rational,
}

/// `Y² = X³ + pX + q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortWeierstrass {
    pub p: Rational,
    pub q: Rational,
}

/// `K² = A⁴ + w2·A² + w1·A + w0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCurve {
    pub w2: Rational,
    pub w1: Rational,
    pub w0: Rational,
}

#[derive(Clone, PartialEq, Eq)]
pub enum SwPoint {
    Infinity,
    Affine(Rational, Rational),
}

impl fmt::Debug for SwPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwPoint::Infinity => write!(f, "∞"),
            SwPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl SwPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        SwPoint::Affine(x, y)
    }
}

/// Discriminant of the long Weierstrass model `[a1, a2, a3, a4, a6]`.
pub fn weierstrass_discriminant(a1: &Rational, a2: &Rational, a3: &Rational, a4: &Rational, a6: &Rational) -> Rational {
    let b2 = a1.square() + a2 * 4;
    let b4 = a4 * 2 + a1 * a3;
    let b6 = a3.square() + a6 * 4;
    let b8 = a1.square() * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3.square() - a4.square();
    -(b2.square() * &b8) - b4.pow(3) * 8 - b6.square() * 27 + b2 * &b4 * &b6 * 9
}

impl TateCurve {
    pub fn new(b: Rational, c: Rational) -> Result<Self> {
        let t = TateCurve { b, c };
        if t.discriminant().is_zero() {
            return Err(Error::DegenerateParameters("singular Tate curve"));
        }
        Ok(t)
    }

    pub fn discriminant(&self) -> Rational {
        let a1 = Rational::one() - &self.c;
        let nb = -&self.b;
        weierstrass_discriminant(&a1, &nb, &nb, &Rational::zero(), &Rational::zero())
    }

    /// Projective equation `Y²Z + (1-c)XYZ - bYZ² - X³ + bX²Z = 0`.
    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let (x, y, z) = p.coords();
        let (x, y, z) = (Rational::integer(x.clone()), Rational::integer(y.clone()), Rational::integer(z.clone()));
        let lhs = y.square() * &z + (Rational::one() - &self.c) * &x * &y * &z - &self.b * &y * z.square() - x.pow(3)
            + &self.b * x.square() * &z;
        lhs.is_zero()
    }

    // a1 = 1 - c, a3 = -b; b2 = a1² - 4b, b4 = a1·a3, b6 = a3².
    fn b_invariants(&self) -> (Rational, Rational, Rational) {
        let a1 = Rational::one() - &self.c;
        let a3 = -&self.b;
        let b2 = a1.square() - &self.b * 4;
        let b4 = &a1 * &a3;
        let b6 = a3.square();
        (b2, b4, b6)
    }

    /// Completing the square in `Y` and the cube in `X`.
    pub fn to_short(&self) -> Result<ShortWeierstrass> {
        let (b2, b4, b6) = self.b_invariants();
        let p = &b4 * Rational::ratio(1, 2) - b2.square() * Rational::ratio(1, 48);
        let q = &b6 * Rational::ratio(1, 4) - &b2 * &b4 * Rational::ratio(1, 24) + b2.pow(3) * Rational::ratio(1, 864);
        ShortWeierstrass::new(p, q)
    }

    /// `(X, Y) -> (X + b2/12, Y + ((1-c)X - b)/2)`; `Z = 0` goes to infinity.
    pub fn point_to_short(&self, p: &ProjectivePoint) -> Result<SwPoint> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let (x, y, z) = p.coords();
        if z == &num_bigint::BigInt::from(0) {
            return Ok(SwPoint::Infinity);
        }
        let z = Rational::integer(z.clone());
        let x = Rational::integer(x.clone()).checked_div(&z)?;
        let y = Rational::integer(y.clone()).checked_div(&z)?;
        let (b2, _, _) = self.b_invariants();
        let a1 = Rational::one() - &self.c;
        let sx = &x + b2 * Rational::ratio(1, 12);
        let sy = &y + (a1 * &x - &self.b) * Rational::ratio(1, 2);
        Ok(SwPoint::Affine(sx, sy))
    }
}

/// `c = 1/(a - 1 - h)`, `b = -h·c²`.
pub fn lyness_to_tate(a: &Rational, h: &Rational) -> Result<TateCurve> {
    let d = a - 1 - h;
    if d.is_zero() {
        return Err(Error::DegenerateParameters("a - 1 - h = 0"));
    }
    let class = crate::curve::classify_level_set(a, h);
    if class != LevelSetClass::Elliptic {
        return Err(Error::SingularCurve(class));
    }
    let c = d.recip()?;
    let b = -(h * c.square());
    TateCurve::new(b, c)
}

/// `h = -b/c²`, `a = (c² + c - b)/c²`.
pub fn tate_to_lyness(t: &TateCurve) -> Result<(Rational, Rational)> {
    let c2 = t.c.square();
    if c2.is_zero() {
        return Err(Error::DegenerateParameters("c = 0"));
    }
    let h = (-&t.b).checked_div(&c2)?;
    let a = (&c2 + &t.c - &t.b).checked_div(&c2)?;
    Ok((a, h))
}

/// `X = -b/(c+1)·z`, `Y = -bc/(c+1)·(y+z)`, `Z = -c/(c+1)·(x+y) - z`.
pub fn lyness_point_to_tate(a: &Rational, h: &Rational, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    let t = lyness_to_tate(a, h)?;
    if !LynessCurve::new(a.clone(), h.clone()).contains(p) {
        return Err(Error::NotOnCurve);
    }
    let c1 = &t.c + 1;
    if c1.is_zero() {
        return Err(Error::PoleOfMap);
    }
    let (x, y, z) = p.coords();
    let (x, y, z) = (Rational::integer(x.clone()), Rational::integer(y.clone()), Rational::integer(z.clone()));
    let tx = (-&t.b).checked_div(&c1)? * &z;
    let ty = (-(&t.b * &t.c)).checked_div(&c1)? * (&y + &z);
    let tz = (-&t.c).checked_div(&c1)? * (&x + &y) - &z;
    ProjectivePoint::from_rationals(&tx, &ty, &tz)
}

/// Inverse of [`lyness_point_to_tate`]; the linear map is inverted directly.
pub fn tate_point_to_lyness(t: &TateCurve, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    let c1 = &t.c + 1;
    if c1.is_zero() {
        return Err(Error::PoleOfMap);
    }
    if !t.contains(p) {
        return Err(Error::NotOnCurve);
    }
    let (x, y, zz) = p.coords();
    let (tx, ty, tz) = (Rational::integer(x.clone()), Rational::integer(y.clone()), Rational::integer(zz.clone()));
    // z = -(c+1)X/b, y = -(c+1)Y/(bc) - z, x = -((c+1)(Z + z))/c - y
    let bc = &t.b * &t.c;
    let z = (-(&c1 * &tx)).checked_div(&t.b)?;
    let y = (-(&c1 * &ty)).checked_div(&bc)? - &z;
    let x = (-(&c1 * (&tz + &z))).checked_div(&t.c)? - &y;
    ProjectivePoint::from_rationals(&x, &y, &z)
}

/// Composite `C_{a,h} -> Tate -> short Weierstrass`.
pub fn lyness_to_short(a: &Rational, h: &Rational) -> Result<ShortWeierstrass> {
    lyness_to_tate(a, h)?.to_short()
}

pub fn lyness_point_to_short(a: &Rational, h: &Rational, p: &ProjectivePoint) -> Result<SwPoint> {
    let t = lyness_to_tate(a, h)?;
    let tp = lyness_point_to_tate(a, h, p)?;
    t.point_to_short(&tp)
}

impl ShortWeierstrass {
    pub fn new(p: Rational, q: Rational) -> Result<Self> {
        let s = ShortWeierstrass { p, q };
        if s.discriminant_core().is_zero() {
            return Err(Error::SingularImage);
        }
        Ok(s)
    }

    /// `4p³ + 27q²`.
    pub fn discriminant_core(&self) -> Rational {
        self.p.pow(3) * 4 + self.q.square() * 27
    }

    pub fn contains(&self, pt: &SwPoint) -> bool {
        match pt {
            SwPoint::Infinity => true,
            SwPoint::Affine(x, y) => y.square() == x.pow(3) + &self.p * x + &self.q,
        }
    }

    pub fn neg(&self, pt: &SwPoint) -> SwPoint {
        match pt {
            SwPoint::Infinity => SwPoint::Infinity,
            SwPoint::Affine(x, y) => SwPoint::Affine(x.clone(), -y),
        }
    }

    pub fn add(&self, p1: &SwPoint, p2: &SwPoint) -> Result<SwPoint> {
        if !self.contains(p1) || !self.contains(p2) {
            return Err(Error::NotOnCurve);
        }
        let (x1, y1, x2, y2) = match (p1, p2) {
            (SwPoint::Infinity, _) => return Ok(p2.clone()),
            (_, SwPoint::Infinity) => return Ok(p1.clone()),
            (SwPoint::Affine(x1, y1), SwPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 != x2 {
            (y2 - y1).checked_div(&(x2 - x1))?
        } else if y1 == y2 && !y1.is_zero() {
            (x1.square() * 3 + &self.p).checked_div(&(y1 * 2))?
        } else {
            return Ok(SwPoint::Infinity);
        };
        let x3 = slope.square() - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        Ok(SwPoint::Affine(x3, y3))
    }

    pub fn mul(&self, pt: &SwPoint, k: i64) -> Result<SwPoint> {
        if !self.contains(pt) {
            return Err(Error::NotOnCurve);
        }
        let mut base = if k < 0 { self.neg(pt) } else { pt.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = SwPoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }
}

impl QuarticCurve {
    pub fn new(w2: Rational, w1: Rational, w0: Rational) -> Self {
        QuarticCurve { w2, w1, w0 }
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        a.pow(4) + &self.w2 * a.square() + &self.w1 * a + &self.w0
    }

    pub fn contains(&self, a: &Rational, k: &Rational) -> bool {
        k.square() == self.eval(a)
    }

    /// Coefficients of the image cubic, before the nonsingularity check.
    pub fn cubic_coefficients(&self) -> (Rational, Rational) {
        let (w2, w1, w0) = (&self.w2, &self.w1, &self.w0);
        let p = -(w2.square() * Rational::ratio(1, 48) + w0 * Rational::ratio(1, 4));
        let q = w1.square() * Rational::ratio(1, 64) + w2.pow(3) * Rational::ratio(1, 864) - w0 * w2 * Rational::ratio(1, 24);
        (p, q)
    }
}

pub fn quartic_to_cubic(quartic: &QuarticCurve) -> Result<ShortWeierstrass> {
    let (p, q) = quartic.cubic_coefficients();
    ShortWeierstrass::new(p, q)
}

/// `X = (A² + K + w2/6)/2`, `Y = (A/2)(A² + K + w2/2) + w1/8`.
pub fn quartic_point_to_cubic(quartic: &QuarticCurve, a: &Rational, k: &Rational) -> Result<(Rational, Rational)> {
    if !quartic.contains(a, k) {
        return Err(Error::NotOnQuartic);
    }
    let a2k = a.square() + k;
    let x = (&a2k + &quartic.w2 * Rational::ratio(1, 6)) * Rational::ratio(1, 2);
    let y = a * Rational::ratio(1, 2) * (&a2k + &quartic.w2 * Rational::ratio(1, 2)) + &quartic.w1 * Rational::ratio(1, 8);
    Ok((x, y))
}

/// `A = (Y - w1/8)/(X + w2/6)`, `K = 2X - w2/6 - A²`.
pub fn cubic_point_to_quartic(quartic: &QuarticCurve, x: &Rational, y: &Rational) -> Result<(Rational, Rational)> {
    let (p, q) = quartic.cubic_coefficients();
    if y.square() != x.pow(3) + p * x + q {
        return Err(Error::NotOnCurve);
    }
    let den = x + &quartic.w2 * Rational::ratio(1, 6);
    if den.is_zero() {
        return Err(Error::AtInfinityBranch);
    }
    let a = (y - &quartic.w1 * Rational::ratio(1, 8)).checked_div(&den)?;
    let k = x * 2 - &quartic.w2 * Rational::ratio(1, 6) - a.square();
    Ok((a, k))
}
