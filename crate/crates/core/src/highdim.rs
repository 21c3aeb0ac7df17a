//! Convex curves in higher dimensions: `j(d)`, moment and Carathéodory
//! curves, hyperplane crossing counts, and the generalized spread-out test.

use std::f64::consts::TAU;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::witness::{has_spread_subset, spread_threshold};

/// Default `c_d` in `alpha = c_d * gamma`. Only `d = 2` is backed by an
/// analysis; other dimensions reuse it unvalidated.
pub const C_D_DEFAULT: f64 = 1.0 / 300.0;

/// Number of separators in a piercing tuple on a convex curve in `R^d`.
pub fn j_of_d(d: usize) -> Result<usize> {
    if d < 2 {
        return Err(Error::arg(format!("dimension must be at least 2, got {d}")));
    }
    Ok(if d.is_multiple_of(2) { (d * d + d + 2) / 2 } else { (d * d).div_ceil(2) })
}

/// Occurrences needed for a color to be spread out: `j + 1` for odd `d`,
/// `j` for even `d`.
pub fn spread_arity(d: usize) -> Result<usize> {
    let j = j_of_d(d)?;
    Ok(if d % 2 == 1 { j + 1 } else { j })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKindD {
    Moment,
    Caratheodory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpecD {
    pub kind: CurveKindD,
    pub d: usize,
}

impl CurveSpecD {
    pub fn new(kind: CurveKindD, d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::arg(format!("dimension must be at least 2, got {d}")));
        }
        if kind == CurveKindD::Caratheodory && d % 2 == 1 {
            return Err(Error::arg(format!("the Carathéodory curve needs even d, got {d}")));
        }
        Ok(CurveSpecD { kind, d })
    }

    /// Whether the curve is closed, which makes occurrence order circular.
    pub fn is_closed(&self) -> bool {
        self.kind == CurveKindD::Caratheodory
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointD {
    pub coords: Vec<f64>,
}

impl PointD {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 || coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::arg("a point needs at least 2 finite coordinates"));
        }
        Ok(PointD { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

pub fn curve_point(spec: &CurveSpecD, t: f64) -> Result<PointD> {
    let spec = CurveSpecD::new(spec.kind, spec.d)?;
    let coords = match spec.kind {
        CurveKindD::Moment => (1..=spec.d as i32).map(|k| t.powi(k)).collect(),
        CurveKindD::Caratheodory => (1..=spec.d / 2)
            .flat_map(|k| {
                let (s, c) = (k as f64 * t).sin_cos();
                [s, c]
            })
            .collect(),
    };
    PointD::new(coords)
}

fn hyperplane_value(spec: &CurveSpecD, a: &[f64], b: f64, t: f64) -> Result<f64> {
    let p = curve_point(spec, t)?;
    Ok(a.iter().zip(&p.coords).map(|(x, y)| x * y).sum::<f64>() - b)
}

fn check_normal(spec: &CurveSpecD, a: &[f64], b: f64) -> Result<()> {
    if a.len() != spec.d {
        return Err(Error::arg(format!("normal has {} entries, expected {}", a.len(), spec.d)));
    }
    if a.iter().chain(std::iter::once(&b)).any(|v| !v.is_finite()) {
        return Err(Error::arg("non-finite hyperplane coefficient"));
    }
    if a.iter().all(|&v| v == 0.0) {
        return Err(Error::arg("hyperplane normal is zero"));
    }
    Ok(())
}

/// Sign changes of `<a, x(t)> - b` over `samples + 1` equally spaced
/// parameters in `t_range`. Samples that evaluate to exactly zero are skipped.
pub fn hyperplane_crossings(spec: &CurveSpecD, a: &[f64], b: f64, t_range: (f64, f64), samples: usize) -> Result<usize> {
    check_normal(spec, a, b)?;
    let (lo, hi) = t_range;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || samples == 0 {
        return Err(Error::arg("need a finite range lo < hi and at least one sample"));
    }
    let mut last = 0.0f64;
    let mut changes = 0;
    for i in 0..=samples {
        let t = lo + (hi - lo) * i as f64 / samples as f64;
        let v = hyperplane_value(spec, a, b, t)?;
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    Ok(changes)
}

/// Crossings over one full period of a closed curve.
pub fn closed_curve_crossings(spec: &CurveSpecD, a: &[f64], b: f64, samples: usize) -> Result<usize> {
    if !spec.is_closed() {
        return Err(Error::arg("curve is not closed"));
    }
    check_normal(spec, a, b)?;
    // start at a nonzero sample so the wrap-around is counted once
    let start = (0..samples)
        .map(|i| TAU * i as f64 / samples as f64)
        .find(|&t| hyperplane_value(spec, a, b, t).is_ok_and(|v| v != 0.0))
        .unwrap_or(0.0);
    hyperplane_crossings(spec, a, b, (start, start + TAU), samples)
}

/// Polynomial with exact rational coefficients, lowest degree first.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect())
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let q = r.last().unwrap() / &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn eval(p: &Poly, t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

fn sign_changes(values: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in values.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sgn(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct real roots of `p` in `(lo, hi]`, or on the whole line for `None`.
pub fn sturm_root_count(p: &[BigRational], range: Option<(&BigRational, &BigRational)>) -> Result<usize> {
    let p0 = trim(p.to_vec());
    if p0.is_empty() {
        return Err(Error::arg("zero polynomial has infinitely many roots"));
    }
    if p0.len() == 1 {
        return Ok(0);
    }
    let mut seq = vec![p0.clone(), derivative(&p0)];
    loop {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let count = |at: &dyn Fn(&Poly) -> i8| sign_changes(seq.iter().map(at));
    Ok(match range {
        Some((lo, hi)) => {
            if lo >= hi {
                return Err(Error::arg("empty root range"));
            }
            count(&|q| sgn(&eval(q, lo))) - count(&|q| sgn(&eval(q, hi)))
        }
        None => {
            let at_neg = |q: &Poly| {
                let s = sgn(q.last().unwrap());
                if (q.len() - 1) % 2 == 1 {
                    -s
                } else {
                    s
                }
            };
            count(&at_neg) - count(&|q| sgn(q.last().unwrap()))
        }
    })
}

/// Exact number of distinct real parameters at which the moment curve
/// meets the hyperplane `<a, x> = b`, optionally restricted to `(lo, hi]`.
pub fn moment_crossings_exact(spec: &CurveSpecD, a: &[f64], b: f64, t_range: Option<(f64, f64)>) -> Result<usize> {
    if spec.kind != CurveKindD::Moment {
        return Err(Error::arg("exact counts are for the moment curve"));
    }
    check_normal(spec, a, b)?;
    let exact = |x: f64| BigRational::from_float(x).ok_or_else(|| Error::arg("non-finite coefficient"));
    let mut poly = vec![exact(-b)?];
    for &c in a {
        poly.push(exact(c)?);
    }
    match t_range {
        Some((lo, hi)) => sturm_root_count(&poly, Some((&exact(lo)?, &exact(hi)?))),
        None => sturm_root_count(&poly, None),
    }
}

/// Whether `spread_arity(d)` occurrences lie pairwise at distance at least
/// `ceil(alpha N)`; circular distance for even `d`, linear for odd `d`.
pub fn spread_out_general(occurrences: &[usize], n: usize, alpha: f64, d: usize) -> Result<bool> {
    let r = spread_arity(d)?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::arg(format!("alpha must lie in (0,1), got {alpha}")));
    }
    if n == 0 {
        return Ok(false);
    }
    Ok(has_spread_subset(occurrences, n, spread_threshold(alpha, n), r, d.is_multiple_of(2)))
}

/// Fewest runs of `ceil(alpha N)` consecutive positions covering the
/// sorted `occurrences`; circular for even `d`.
pub fn min_interval_cover(occurrences: &[usize], n: usize, alpha: f64, d: usize) -> Result<usize> {
    j_of_d(d)?;
    if occurrences.is_empty() {
        return Ok(0);
    }
    let t = spread_threshold(alpha, n);
    let circular = d.is_multiple_of(2);
    let starts: &[usize] = if circular { occurrences } else { &occurrences[..1] };
    let mut best = usize::MAX;
    for &s in starts {
        let mut rot: Vec<usize> = occurrences.iter().map(|&p| if circular { (p + n - s) % n } else { p - s }).collect();
        rot.sort_unstable();
        let (mut count, mut i) = (0, 0);
        while i < rot.len() {
            count += 1;
            let end = rot[i] + t - 1;
            while i < rot.len() && rot[i] <= end {
                i += 1;
            }
        }
        best = best.min(count);
    }
    Ok(best)
}

/// Interval budget of a non-spread color: `j` for odd `d`, `j - 1` for even.
pub fn interval_budget(d: usize) -> Result<usize> {
    let j = j_of_d(d)?;
    Ok(if d % 2 == 1 { j } else { j - 1 })
}

/// `alpha = c_d * gamma` with the default `c_d`.
pub fn alpha_from_gamma(gamma: f64, d: usize) -> Result<f64> {
    j_of_d(d)?;
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::arg(format!("gamma must lie in (0,1], got {gamma}")));
    }
    Ok(C_D_DEFAULT * gamma)
}

/// Whether the default `c_d` has been checked for dimension `d`.
pub fn c_d_validated(d: usize) -> bool {
    d == 2
}
