use std::fmt::Write as _;

use lyness_core::curve::{classify_level_set, h_for_period, torsion9_points, LynessCurve, PeriodLevel, PointOrder, ProjectivePoint};
use lyness_core::forms::{lyness_point_to_short, lyness_point_to_tate, lyness_to_short, lyness_to_tate, SwPoint};
use lyness_core::lyness::{detect_period, invariant_h, step, DetectOptions, MapParams, PeriodStatus, PlanePoint, DEFAULT_MAX_BITS};
use lyness_core::special::{
    at_or_beyond_a1, family_point, generate_nine_periodic, MobiusClass, MobiusMap, NineOutcome,
};
use lyness_core::suites::{run_suite, Suite};
use lyness_core::{Error, Rational, Result};
use serde_json::{json, Value};

/// Payload plus its plain-text rendering.
pub struct Outcome {
    pub payload: Value,
    pub text: String,
    /// A verification ran and something failed.
    pub failed: bool,
}

impl Outcome {
    fn ok(payload: Value, text: String) -> Self {
        Outcome { payload, text, failed: false }
    }
}

fn max_bits() -> Result<u64> {
    match std::env::var("LYNESS_MAX_BITS") {
        Ok(v) => v.trim().parse().map_err(|_| Error::ExcludedParameter(format!("LYNESS_MAX_BITS={v:?} is not a bit count"))),
        Err(_) => Ok(DEFAULT_MAX_BITS),
    }
}

fn r(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn sw_point(p: &SwPoint) -> Value {
    match p {
        SwPoint::Infinity => Value::String("infinity".into()),
        SwPoint::Affine(x, y) => Value::String(format!("{x},{y}")),
    }
}

fn class_name(c: MobiusClass) -> &'static str {
    match c {
        MobiusClass::Identity => "identity",
        MobiusClass::GloballyPeriodic(_) => "globally-periodic",
        MobiusClass::NonPeriodic => "non-periodic",
    }
}

pub fn iterate(a: Rational, x0: Rational, x1: Rational, steps: usize) -> Result<Outcome> {
    let params = MapParams::new(a.clone());
    let limit = max_bits()?;
    let mut terms = vec![x0.clone()];
    let mut truncated = Value::Null;
    if steps >= 1 {
        terms.push(x1.clone());
    }
    let mut state = PlanePoint::new(x0, x1);
    while terms.len() <= steps {
        let n = terms.len() - 2;
        let Ok(next) = step(&params, &state) else {
            truncated = json!({ "step": n, "reason": format!("x_{n} = 0 (forbidden set)") });
            break;
        };
        let bits = next.y.height_bits();
        if bits > limit {
            return Err(Error::GrowthLimit { step: n + 2, bits, limit });
        }
        terms.push(next.y.clone());
        state = next;
    }
    let mut text: String = terms.iter().map(|t| format!("{t}\n")).collect();
    if let Some(n) = truncated.get("step") {
        let _ = writeln!(text, "stopped: x_{n} = 0 lies in the forbidden set");
    }
    let payload = json!({
        "a": r(&a),
        "steps": steps,
        "terms": terms.iter().map(r).collect::<Vec<_>>(),
        "truncated": truncated,
    });
    Ok(Outcome::ok(payload, text))
}

pub fn period(a: Rational, x0: Rational, x1: Rational, max_steps: usize) -> Result<Outcome> {
    let params = MapParams::new(a.clone());
    let seed = PlanePoint::new(x0, x1);
    let rep = detect_period(&params, &seed, DetectOptions { max_steps, max_bits: max_bits()? })?;
    let (status, detail) = match rep.status {
        PeriodStatus::Periodic(p) => ("periodic", format!("period {p}")),
        PeriodStatus::Aperiodic { after } => ("aperiodic", format!("no return within {after} steps")),
        PeriodStatus::HitForbiddenSet { step } => ("forbidden", format!("x_{step} = 0 lies in the forbidden set")),
    };
    let h = invariant_h(&params, &seed).ok();
    let payload = json!({
        "a": r(&a),
        "seed": seed.to_string(),
        "status": status,
        "period": rep.period(),
        "h": h.as_ref().map(r),
        "orbit": rep.terms().iter().map(r).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(payload, format!("{detail}\n")))
}

pub fn classify(a: Rational, h: Rational) -> Result<Outcome> {
    let class = format!("{:?}", classify_level_set(&a, &h));
    let text = format!("{class}\n");
    Ok(Outcome::ok(json!({ "a": r(&a), "h": r(&h), "class": class }), text))
}

/// `C_{a,h}`, taking `h` from the first affine point when omitted.
fn level_curve(a: Rational, h: Option<Rational>, p: &ProjectivePoint) -> Result<LynessCurve> {
    match h {
        Some(h) => Ok(LynessCurve::new(a, h)),
        None => {
            let affine = p
                .to_affine()
                .ok_or_else(|| Error::ExcludedParameter("--h is required when the point is at infinity".into()))?;
            LynessCurve::through(&a, &affine)
        }
    }
}

fn point_text(p: &ProjectivePoint) -> String {
    match p.to_affine() {
        Some(a) => format!("{p}  ({a})"),
        None => format!("{p}"),
    }
}

fn curve_fields(c: &LynessCurve) -> (Value, Value) {
    (r(c.a()), r(c.h()))
}

pub fn curve_add(a: Rational, h: Option<Rational>, p: ProjectivePoint, q: ProjectivePoint) -> Result<Outcome> {
    let c = level_curve(a, h, &p)?;
    let sum = c.add(&p, &q)?;
    let (a, h) = curve_fields(&c);
    let payload = json!({ "a": a, "h": h, "p": p.to_string(), "q": q.to_string(), "sum": sum.to_string() });
    Ok(Outcome::ok(payload, format!("{}\n", point_text(&sum))))
}

pub fn curve_neg(a: Rational, h: Option<Rational>, p: ProjectivePoint) -> Result<Outcome> {
    let c = level_curve(a, h, &p)?;
    let neg = c.neg(&p)?;
    let (a, h) = curve_fields(&c);
    let payload = json!({ "a": a, "h": h, "p": p.to_string(), "neg": neg.to_string() });
    Ok(Outcome::ok(payload, format!("{}\n", point_text(&neg))))
}

pub fn curve_mul(a: Rational, h: Option<Rational>, p: ProjectivePoint, k: i64) -> Result<Outcome> {
    let c = level_curve(a, h, &p)?;
    let m = c.mul(&p, k)?;
    let (a, h) = curve_fields(&c);
    let payload = json!({ "a": a, "h": h, "p": p.to_string(), "k": k, "result": m.to_string() });
    Ok(Outcome::ok(payload, format!("{}\n", point_text(&m))))
}

pub fn curve_order(a: Rational, h: Option<Rational>, p: ProjectivePoint, cap: usize) -> Result<Outcome> {
    let c = level_curve(a, h, &p)?;
    let ord = c.order_of(&p, cap)?;
    let (a, h) = curve_fields(&c);
    let (order, text) = match ord {
        PointOrder::Finite(n) => (json!(n), format!("{n}\n")),
        PointOrder::InfiniteOrPastCap => (Value::Null, format!("infinite or greater than {cap}\n")),
    };
    let payload = json!({ "a": a, "h": h, "p": p.to_string(), "cap": cap, "order": order });
    Ok(Outcome::ok(payload, text))
}

fn resolve_level(a: &Rational, h: Option<Rational>, point: Option<&ProjectivePoint>) -> Result<Rational> {
    match (h, point) {
        (Some(h), _) => Ok(h),
        (None, Some(p)) => Ok(level_curve(a.clone(), None, p)?.h().clone()),
        (None, None) => Err(Error::ExcludedParameter("--h or an affine --point is required".into())),
    }
}

pub fn convert_tate(a: Rational, h: Option<Rational>, point: Option<ProjectivePoint>) -> Result<Outcome> {
    let h = resolve_level(&a, h, point.as_ref())?;
    let t = lyness_to_tate(&a, &h)?;
    let mut text = format!("Y^2 + ({})XY - ({})Y = X^3 - ({})X^2\nb = {}\nc = {}\n", Rational::one() - &t.c, t.b, t.b, t.b, t.c);
    let image = match &point {
        Some(p) => {
            let img = lyness_point_to_tate(&a, &h, p)?;
            let _ = writeln!(text, "point {}", point_text(&img));
            Value::String(img.to_string())
        }
        None => Value::Null,
    };
    let payload = json!({
        "a": r(&a),
        "h": r(&h),
        "b": r(&t.b),
        "c": r(&t.c),
        "discriminant": r(&t.discriminant()),
        "point": image,
    });
    Ok(Outcome::ok(payload, text))
}

pub fn convert_weierstrass(a: Rational, h: Option<Rational>, point: Option<ProjectivePoint>) -> Result<Outcome> {
    let h = resolve_level(&a, h, point.as_ref())?;
    let sw = lyness_to_short(&a, &h)?;
    let mut text = format!("Y^2 = X^3 + ({})X + ({})\n", sw.p, sw.q);
    let image = match &point {
        Some(p) => {
            let img = lyness_point_to_short(&a, &h, p)?;
            let _ = writeln!(text, "point {img:?}");
            sw_point(&img)
        }
        None => Value::Null,
    };
    let payload = json!({ "a": r(&a), "h": r(&h), "p": r(&sw.p), "q": r(&sw.q), "point": image });
    Ok(Outcome::ok(payload, text))
}

pub fn family(period: u32, u: Rational) -> Result<Outcome> {
    let (a, x0, x1) = family_point(period, &u)?;
    let text = format!("a = {a}\nx0 = {x0}\nx1 = {x1}\n");
    let payload = json!({ "period": period, "u": r(&u), "a": r(&a), "x0": r(&x0), "x1": r(&x1) });
    Ok(Outcome::ok(payload, text))
}

pub fn torsion(a: Rational) -> Result<Outcome> {
    let PeriodLevel::Level(h) = h_for_period(9, &a)? else {
        return Err(Error::Internal("period 9 has a level formula".into()));
    };
    let pts = torsion9_points(&a)?;
    let c = LynessCurve::new(a.clone(), h.clone());
    for p in &pts {
        if !c.contains(p) {
            return Err(Error::Internal(format!("{p} is not on the period-9 level set")));
        }
    }
    let labels = ["Q", "2Q", "3Q", "4Q", "-4Q", "-3Q", "-2Q", "-Q", "O"];
    let text: String = labels.iter().zip(&pts).map(|(l, p)| format!("{l:>3}  {p}\n")).collect();
    let points: Vec<Value> =
        labels.iter().zip(&pts).map(|(l, p)| json!({ "label": l, "point": p.to_string() })).collect();
    let payload = json!({ "a": r(&a), "h": r(&h), "class": format!("{:?}", c.class()), "points": points });
    Ok(Outcome::ok(payload, format!("h = {h}\n{text}")))
}

pub fn mobius(matrix: &str) -> Result<Outcome> {
    let entries: Vec<Rational> = matrix.split(',').map(str::parse).collect::<Result<_>>()?;
    let [a, b, c, d]: [Rational; 4] = entries
        .try_into()
        .map_err(|_| Error::ExcludedParameter(format!("--matrix needs four entries A,B,C,D, got {matrix:?}")))?;
    let m = MobiusMap::new(a, b, c, d)?;
    let class = m.classify()?;
    let period = match class {
        MobiusClass::GloballyPeriodic(p) => Some(p),
        MobiusClass::Identity => Some(1),
        MobiusClass::NonPeriodic => None,
    };
    let payload = json!({
        "matrix": [r(&m.a), r(&m.b), r(&m.c), r(&m.d)],
        "class": class_name(class),
        "period": period,
    });
    let text = match period {
        Some(p) => format!("{} (period {p})\n", class_name(class)),
        None => format!("{}\n", class_name(class)),
    };
    Ok(Outcome::ok(payload, text))
}

pub fn nine(kmin: i64, kmax: i64, positive_only: bool) -> Result<Outcome> {
    if kmin > kmax {
        return Err(Error::ExcludedParameter(format!("kmin {kmin} > kmax {kmax}")));
    }
    let mut seeds = Vec::new();
    let mut skipped = Vec::new();
    let mut text = String::new();
    for k in (kmin..=kmax).filter(|&k| k != 0) {
        match generate_nine_periodic(k)? {
            NineOutcome::Seed(s) => {
                if positive_only && !s.positive {
                    continue;
                }
                let beyond = at_or_beyond_a1(&s.a);
                let _ = writeln!(text, "k={k} a={} x={} y={} positive={} a>=a1={beyond}", s.a, s.x, s.y, s.positive);
                seeds.push(json!({
                    "k": k,
                    "a": r(&s.a),
                    "x": r(&s.x),
                    "y": r(&s.y),
                    "positive": s.positive,
                    "a_at_or_beyond_a1": beyond,
                }));
            }
            NineOutcome::Skipped(reason) => {
                let _ = writeln!(text, "k={k} skipped: {reason}");
                skipped.push(json!({ "k": k, "reason": reason }));
            }
        }
    }
    let payload = json!({ "kmin": kmin, "kmax": kmax, "positive_only": positive_only, "seeds": seeds, "skipped": skipped });
    Ok(Outcome::ok(payload, text))
}

pub fn verify(suite: &str, seed: u64) -> Result<Outcome> {
    let which: Suite = suite.parse()?;
    let checks = run_suite(which, seed);
    let passed = checks.iter().all(|c| c.passed);
    let text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "id": c.id, "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let payload = json!({ "suite": suite, "seed": seed, "passed": passed, "checks": list });
    Ok(Outcome { payload, text, failed: !passed })
}
