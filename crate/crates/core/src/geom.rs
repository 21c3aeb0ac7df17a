//! Planar kernel: convex polygons, the circle curve, arcs on it, segment
//! crossings, candidate points for the transversal LPs and an exact
//! minimum-transversal oracle over a candidate set.
//!
//! All predicates use plain `f64` with an absolute tolerance ([`TOL_GEOM`]).

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::bitset::BodySet;
use crate::error::{Error, Result};

pub const TOL_GEOM: f64 = 1e-9;
pub const NUDGE_EPS: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Point2::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2 { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

/// Normalize an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// A closed convex polygon carrying a color index.
///
/// Vertices are stored counter-clockwise with repeated and collinear
/// vertices removed. One vertex is a point body, two a segment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawBody")]
pub struct ConvexBody {
    pub id: usize,
    vertices: Vec<Point2>,
}

#[derive(Deserialize)]
struct RawBody {
    id: usize,
    vertices: Vec<Point2>,
}

impl TryFrom<RawBody> for ConvexBody {
    type Error = Error;
    fn try_from(raw: RawBody) -> Result<Self> {
        ConvexBody::new(raw.id, raw.vertices)
    }
}

impl ConvexBody {
    /// Validates and normalizes a vertex cycle. Clockwise input is reversed.
    pub fn new(id: usize, vertices: Vec<Point2>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidBody {
            id,
            reason: reason.to_string(),
        };
        if vertices.is_empty() {
            return Err(invalid("no vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(invalid("non-finite coordinate"));
        }

        let mut vs: Vec<Point2> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if vs.last().is_none_or(|l: &Point2| l.dist(v) > TOL_GEOM) {
                vs.push(v);
            }
        }
        while vs.len() > 1 && vs[0].dist(*vs.last().unwrap()) <= TOL_GEOM {
            vs.pop();
        }

        if vs.len() >= 3 && signed_area(&vs) < 0.0 {
            vs.reverse();
        }

        // drop collinear middle vertices
        loop {
            let m = vs.len();
            if m < 3 {
                break;
            }
            let pos = (0..m).find(|&i| {
                let prev = vs[(i + m - 1) % m];
                let next = vs[(i + 1) % m];
                let e1 = vs[i] - prev;
                let e2 = next - vs[i];
                e1.cross(e2).abs() <= TOL_GEOM * e1.norm().max(e2.norm()) && e1.dot(e2) >= 0.0
            });
            match pos {
                Some(i) => {
                    vs.remove(i);
                }
                None => break,
            }
        }

        let m = vs.len();
        if m >= 3 {
            let mut turning = 0.0;
            for i in 0..m {
                let e1 = vs[(i + 1) % m] - vs[i];
                let e2 = vs[(i + 2) % m] - vs[(i + 1) % m];
                let c = e1.cross(e2);
                if c < -TOL_GEOM * e1.norm() * e2.norm() {
                    return Err(invalid("vertex sequence is not convex"));
                }
                turning += c.atan2(e1.dot(e2));
            }
            if (turning - TAU).abs() > 1e-6 {
                return Err(invalid("vertex sequence winds more than once"));
            }
        } else if m == 2 && vs[0].dist(vs[1]) <= TOL_GEOM {
            vs.pop();
        }
        Ok(ConvexBody { id, vertices: vs })
    }

    /// Convex hull of an arbitrary point cloud (monotone chain).
    pub fn hull(id: usize, points: &[Point2]) -> Result<Self> {
        let mut pts: Vec<Point2> = points.to_vec();
        if pts.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidBody {
                id,
                reason: "non-finite coordinate".into(),
            });
        }
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup_by(|a, b| a.dist(*b) <= TOL_GEOM);
        if pts.len() < 3 {
            return ConvexBody::new(id, pts);
        }
        let mut lower: Vec<Point2> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2
                && (lower[lower.len() - 1] - lower[lower.len() - 2]).cross(p - lower[lower.len() - 1]) <= 0.0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point2> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && (upper[upper.len() - 1] - upper[upper.len() - 2]).cross(p - upper[upper.len() - 1]) <= 0.0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        ConvexBody::new(id, lower)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn with_id(&self, id: usize) -> Self {
        ConvexBody {
            id,
            vertices: self.vertices.clone(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let m = self.vertices.len();
        let count = match m {
            1 => 0,
            2 => 1,
            _ => m,
        };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % m]))
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            0.0
        } else {
            signed_area(&self.vertices)
        }
    }
}

fn signed_area(vs: &[Point2]) -> f64 {
    let m = vs.len();
    (0..m).map(|i| vs[i].cross(vs[(i + 1) % m])).sum::<f64>() / 2.0
}

fn dist_to_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// True iff `pt` lies in the body or within `tol` of it.
pub fn body_contains(body: &ConvexBody, pt: Point2, tol: f64) -> bool {
    let vs = &body.vertices;
    match vs.len() {
        1 => pt.dist(vs[0]) <= tol,
        2 => dist_to_segment(pt, vs[0], vs[1]) <= tol,
        m => (0..m).all(|i| {
            let a = vs[i];
            let e = vs[(i + 1) % m] - a;
            e.cross(pt - a) >= -tol * e.norm()
        }),
    }
}

/// Bodies containing `pt`, as a bitset over body positions.
pub fn containment_signature(bodies: &[ConvexBody], pt: Point2, tol: f64) -> BodySet {
    let mut s = BodySet::new(bodies.len());
    for (i, b) in bodies.iter().enumerate() {
        if body_contains(b, pt, tol) {
            s.insert(i);
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    #[default]
    Circle,
}

/// The convex curve `X`: a circle parameterized by angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveModel {
    #[serde(rename = "type")]
    pub kind: CurveKind,
    pub center: Point2,
    pub radius: f64,
}

impl CurveModel {
    pub fn unit_circle() -> Self {
        CurveModel {
            kind: CurveKind::Circle,
            center: Point2::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    pub fn circle(center: Point2, radius: f64) -> Result<Self> {
        let c = CurveModel {
            kind: CurveKind::Circle,
            center,
            radius,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius.is_finite()) || !self.center.is_finite() {
            return Err(Error::arg(format!("curve radius must be positive, got {}", self.radius)));
        }
        Ok(())
    }

    pub fn point_at(&self, theta: f64) -> Point2 {
        self.center + Point2::polar(self.radius, theta)
    }

    pub fn angle_of(&self, p: Point2) -> f64 {
        let d = p - self.center;
        normalize_angle(d.y.atan2(d.x))
    }

    /// Angular tolerance matching [`TOL_GEOM`] on this circle.
    pub fn angle_tol(&self) -> f64 {
        TOL_GEOM / self.radius
    }
}

/// A closed arc of the curve, `start` to `end` counter-clockwise.
///
/// `wraps` is set when the arc passes through angle 0 (`end < start`).
/// `start == end` is a single point unless `wraps` is set, in which case
/// the arc is the whole circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngularInterval {
    pub start: f64,
    pub end: f64,
    pub wraps: bool,
}

impl AngularInterval {
    pub fn new(start: f64, length: f64) -> Self {
        if length >= TAU {
            return Self::full();
        }
        let start = normalize_angle(start);
        let length = length.max(0.0);
        let raw_end = start + length;
        AngularInterval {
            start,
            end: normalize_angle(raw_end),
            wraps: raw_end >= TAU,
        }
    }

    pub fn full() -> Self {
        AngularInterval {
            start: 0.0,
            end: 0.0,
            wraps: true,
        }
    }

    pub fn is_full(&self) -> bool {
        self.wraps && self.start == self.end
    }

    pub fn length(&self) -> f64 {
        if self.wraps {
            self.end - self.start + TAU
        } else {
            self.end - self.start
        }
    }

    pub fn midpoint(&self) -> f64 {
        normalize_angle(self.start + self.length() / 2.0)
    }

    pub fn contains(&self, theta: f64, tol: f64) -> bool {
        if self.is_full() {
            return true;
        }
        let off = normalize_angle(theta - self.start);
        off <= self.length() + tol || off >= TAU - tol
    }
}

/// `{θ : curve(θ) ∈ body}` as disjoint arcs sorted by start angle.
pub fn body_curve_arcs(body: &ConvexBody, curve: &CurveModel) -> Vec<AngularInterval> {
    let c = curve.center;
    let r = curve.radius;
    let ang_tol = curve.angle_tol();

    let mut vertex_angles = Vec::new();
    for &v in body.vertices() {
        if ((v - c).norm() - r).abs() <= TOL_GEOM {
            vertex_angles.push(curve.angle_of(v));
        }
    }
    let near = |list: &[f64], t: f64| {
        list.iter().any(|&s| {
            let d = (s - t).abs();
            d.min(TAU - d) <= ang_tol
        })
    };
    let mut crit = vertex_angles.clone();
    for (a, b) in body.edges() {
        let d = b - a;
        let f = a - c;
        let qa = d.dot(d);
        if qa == 0.0 {
            continue;
        }
        let qb = 2.0 * f.dot(d);
        let qc = f.dot(f) - r * r;
        let mut disc = qb * qb - 4.0 * qa * qc;
        // near-tangent edges: treat small negative discriminants as touching
        if disc < 0.0 {
            if disc > -4.0 * qa * (2.0 * r * TOL_GEOM) {
                disc = 0.0;
            } else {
                continue;
            }
        }
        let sq = disc.sqrt();
        let tslack = TOL_GEOM / qa.sqrt();
        for t in [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)] {
            if t >= -tslack && t <= 1.0 + tslack {
                let theta = curve.angle_of(a + d * t.clamp(0.0, 1.0));
                if !near(&crit, theta) {
                    crit.push(theta);
                }
            }
        }
    }

    if crit.is_empty() {
        return if body_contains(body, curve.point_at(0.0), TOL_GEOM) {
            vec![AngularInterval::full()]
        } else {
            Vec::new()
        };
    }
    crit.sort_by(f64::total_cmp);
    let k = crit.len();
    let gap_end = |i: usize| if i + 1 < k { crit[i + 1] } else { crit[0] + TAU };
    let open: Vec<bool> = (0..k)
        .map(|i| body_contains(body, curve.point_at((crit[i] + gap_end(i)) / 2.0), TOL_GEOM))
        .collect();
    if open.iter().all(|&o| o) {
        return vec![AngularInterval::full()];
    }
    let at: Vec<bool> = (0..k)
        .map(|i| open[i] || open[(i + k - 1) % k] || body_contains(body, curve.point_at(crit[i]), TOL_GEOM))
        .collect();

    // walk from just after an uncovered open gap so no run straddles the start
    let first = (0..k).find(|&i| !open[i]).unwrap();
    let mut arcs = Vec::new();
    let mut step = 0;
    while step < k {
        let i = (first + 1 + step) % k;
        if !at[i] {
            step += 1;
            continue;
        }
        let start = crit[i];
        let mut len = 0.0;
        let mut j = i;
        while open[j] {
            len += gap_end(j) - crit[j];
            j = (j + 1) % k;
            step += 1;
        }
        step += 1;
        arcs.push(AngularInterval::new(start, len));
    }
    arcs.sort_by(|a, b| a.start.total_cmp(&b.start));
    arcs
}

fn intersect_arcs(a: &AngularInterval, b: &AngularInterval, tol: f64) -> Vec<AngularInterval> {
    if a.is_full() {
        return vec![*b];
    }
    if b.is_full() {
        return vec![*a];
    }
    let (s1, e1) = (a.start, a.start + a.length());
    let mut out = Vec::new();
    for k in [-1.0, 0.0, 1.0] {
        let s2 = b.start + k * TAU;
        let e2 = s2 + b.length();
        let lo = s1.max(s2);
        let hi = e1.min(e2);
        if hi >= lo - tol {
            let piece = AngularInterval::new(lo, (hi - lo).max(0.0));
            if !out.iter().any(|p: &AngularInterval| {
                let d = (p.start - piece.start).abs();
                d.min(TAU - d) <= tol && (p.length() - piece.length()).abs() <= tol
            }) {
                out.push(piece);
            }
        }
    }
    out
}

/// Canonical common angle of two arc sets: the midpoint of the common piece
/// with the smallest normalized start angle.
pub fn arcs_common_point(a: &[AngularInterval], b: &[AngularInterval]) -> Option<f64> {
    arcs_common_point_tol(a, b, TOL_GEOM)
}

pub fn arcs_common_point_tol(a: &[AngularInterval], b: &[AngularInterval], ang_tol: f64) -> Option<f64> {
    let mut best: Option<AngularInterval> = None;
    for x in a {
        for y in b {
            for piece in intersect_arcs(x, y, ang_tol) {
                if best.is_none_or(|bst| piece.start < bst.start) {
                    best = Some(piece);
                }
            }
        }
    }
    best.map(|p| p.midpoint())
}

/// Intersection point of the closed segments `a1a2` and `b1b2`, if they
/// cross and are not parallel. Symmetric in the two segments.
pub fn segment_intersection(a1: Point2, a2: Point2, b1: Point2, b2: Point2) -> Option<Point2> {
    let d1 = a2 - a1;
    let d2 = b2 - b1;
    let (n1, n2) = (d1.norm(), d2.norm());
    if n1 == 0.0 || n2 == 0.0 {
        return None;
    }
    let denom = d1.cross(d2);
    if denom.abs() <= TOL_GEOM * n1 * n2 {
        return None;
    }
    let w = b1 - a1;
    let t = w.cross(d2) / denom;
    let u = w.cross(d1) / denom;
    let (st, su) = (TOL_GEOM / n1, TOL_GEOM / n2);
    if t < -st || t > 1.0 + st || u < -su || u > 1.0 + su {
        return None;
    }
    let pa = a1 + d1 * t.clamp(0.0, 1.0);
    let pb = b1 + d2 * u.clamp(0.0, 1.0);
    Some(Point2::new((pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0))
}

/// Deduplicates points within `tol` using a hash grid. Keeps first occurrences.
pub(crate) fn dedup_points(points: impl IntoIterator<Item = Point2>, tol: f64) -> Vec<Point2> {
    let cell = tol.max(f64::MIN_POSITIVE) * 2.0;
    let key = |p: Point2| ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let mut out: Vec<Point2> = Vec::new();
    for p in points {
        let (kx, ky) = key(p);
        let dup = (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                grid.get(&(kx + dx, ky + dy))
                    .is_some_and(|ids| ids.iter().any(|&i| out[i].dist(p) <= tol))
            })
        });
        if !dup {
            grid.entry((kx, ky)).or_default().push(out.len());
            out.push(p);
        }
    }
    out
}

/// Finite point set meeting every face of the arrangement: polygon
/// vertices, pairwise edge crossings, and four diagonal nudges of each.
pub fn candidate_points(bodies: &[ConvexBody]) -> Vec<Point2> {
    candidate_points_with(bodies, NUDGE_EPS)
}

pub fn candidate_points_with(bodies: &[ConvexBody], nudge_eps: f64) -> Vec<Point2> {
    let mut base: Vec<Point2> = bodies.iter().flat_map(|b| b.vertices().iter().copied()).collect();
    let boxes: Vec<_> = bodies.iter().map(ConvexBody::bbox).collect();
    for i in 0..bodies.len() {
        for j in (i + 1)..bodies.len() {
            let (lo1, hi1) = boxes[i];
            let (lo2, hi2) = boxes[j];
            if lo1.x > hi2.x + TOL_GEOM || lo2.x > hi1.x + TOL_GEOM || lo1.y > hi2.y + TOL_GEOM || lo2.y > hi1.y + TOL_GEOM {
                continue;
            }
            for (a1, a2) in bodies[i].edges() {
                for (b1, b2) in bodies[j].edges() {
                    if let Some(p) = segment_intersection(a1, a2, b1, b2) {
                        base.push(p);
                    }
                }
            }
        }
    }
    let base = dedup_points(base, TOL_GEOM);
    let h = nudge_eps / std::f64::consts::SQRT_2;
    let mut all = Vec::with_capacity(base.len() * 5);
    all.extend(base.iter().copied());
    for p in &base {
        for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
            all.push(Point2::new(p.x + sx * h, p.y + sy * h));
        }
    }
    dedup_points(all, TOL_GEOM)
}

/// Candidates grouped by containment signature, keeping only signatures not
/// strictly contained in another. Each entry is `(signature, representative
/// candidate index)`.
pub fn maximal_signatures(bodies: &[ConvexBody], candidates: &[Point2], tol: f64) -> Vec<(BodySet, usize)> {
    let mut seen: HashMap<BodySet, usize> = HashMap::new();
    let mut uniq: Vec<(BodySet, usize)> = Vec::new();
    for (ci, &c) in candidates.iter().enumerate() {
        let sig = containment_signature(bodies, c, tol);
        if sig.is_empty() || seen.contains_key(&sig) {
            continue;
        }
        seen.insert(sig.clone(), ci);
        uniq.push((sig, ci));
    }
    uniq.sort_by(|a, b| b.0.count().cmp(&a.0.count()).then(a.1.cmp(&b.1)));
    let mut kept: Vec<(BodySet, usize)> = Vec::new();
    for (sig, ci) in uniq {
        if !kept.iter().any(|(k, _)| sig.is_subset(k)) {
            kept.push((sig, ci));
        }
    }
    kept.sort_by_key(|&(_, ci)| ci);
    kept
}

/// Minimum-cardinality subset of `candidates` hitting every body, searched
/// for sizes `1..=k_max` by branch and bound. `None` if no hitting set of
/// size at most `k_max` exists among the candidates.
pub fn brute_min_transversal(bodies: &[ConvexBody], candidates: &[Point2], k_max: usize) -> Result<Option<Vec<Point2>>> {
    if k_max < 1 {
        return Err(Error::arg("k_max must be at least 1"));
    }
    if bodies.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let sigs = maximal_signatures(bodies, candidates, TOL_GEOM);
    let n = bodies.len();
    let mut coverable = BodySet::new(n);
    for (s, _) in &sigs {
        coverable.union_with(s);
    }
    if coverable.count() < n {
        return Ok(None);
    }
    // per body, the signatures hitting it
    let hitting: Vec<Vec<usize>> = (0..n)
        .map(|b| (0..sigs.len()).filter(|&s| sigs[s].0.contains(b)).collect())
        .collect();
    let max_gain = sigs.iter().map(|(s, _)| s.count()).max().unwrap_or(0);

    fn search(
        unhit: &BodySet,
        budget: usize,
        sigs: &[(BodySet, usize)],
        hitting: &[Vec<usize>],
        max_gain: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let left = unhit.count();
        if left == 0 {
            return true;
        }
        if budget == 0 || left > budget * max_gain {
            return false;
        }
        // branch on the unhit body with fewest options
        let body = unhit.iter().min_by_key(|&b| hitting[b].len()).unwrap();
        for &s in &hitting[body] {
            let mut next = unhit.clone();
            next.difference_with(&sigs[s].0);
            chosen.push(s);
            if search(&next, budget - 1, sigs, hitting, max_gain, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let all = BodySet::full(n);
    for k in 1..=k_max {
        let mut chosen = Vec::new();
        if search(&all, k, &sigs, &hitting, max_gain, &mut chosen) {
            return Ok(Some(chosen.into_iter().map(|s| candidates[sigs[s].1]).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn square(id: usize, x: f64, y: f64, s: f64) -> ConvexBody {
        ConvexBody::new(
            id,
            vec![
                Point2::new(x, y),
                Point2::new(x + s, y),
                Point2::new(x + s, y + s),
                Point2::new(x, y + s),
            ],
        )
        .unwrap()
    }

    fn tri(id: usize) -> ConvexBody {
        ConvexBody::new(id, vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn contains_examples() {
        let sq = square(0, 0.0, 0.0, 1.0);
        assert!(body_contains(&sq, Point2::new(0.5, 0.5), 1e-9));
        assert!(!body_contains(&sq, Point2::new(2.0, 2.0), 1e-9));
        assert!(body_contains(&sq, Point2::new(1.0 + 1e-12, 0.5), 1e-9));
        assert!(!body_contains(&sq, Point2::new(1.0 + 1e-6, 0.5), 1e-9));
    }

    #[test]
    fn body_validation() {
        assert!(ConvexBody::new(0, vec![]).is_err());
        assert!(ConvexBody::new(0, vec![Point2::new(f64::NAN, 0.0)]).is_err());
        // clockwise input is reoriented
        let cw = ConvexBody::new(
            1,
            vec![Point2::new(0.0, 0.0), Point2::new(0.0, 1.0), Point2::new(1.0, 1.0), Point2::new(1.0, 0.0)],
        )
        .unwrap();
        assert!(cw.area() > 0.0);
        // reflex vertex
        let bad = ConvexBody::new(
            2,
            vec![
                Point2::new(0.0, 0.0),
                Point2::new(2.0, 0.0),
                Point2::new(1.0, 0.2),
                Point2::new(1.0, 2.0),
            ],
        );
        assert!(bad.is_err());
        // pentagram order winds twice
        let star: Vec<Point2> = (0..5).map(|k| Point2::polar(1.0, 2.0 * TAU * k as f64 / 5.0)).collect();
        assert!(ConvexBody::new(3, star).is_err());
        // collinear and repeated vertices removed
        let b = ConvexBody::new(
            4,
            vec![
                Point2::new(0.0, 0.0),
                Point2::new(0.5, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
            ],
        )
        .unwrap();
        assert_eq!(b.vertices().len(), 3);
    }

    #[test]
    fn hull_of_cloud() {
        let pts = [
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.5, 0.2),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.5, 1.0),
        ];
        let h = ConvexBody::hull(0, &pts).unwrap();
        assert_eq!(h.vertices().len(), 4);
        assert!((h.area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_bodies() {
        let pt = ConvexBody::new(0, vec![Point2::new(1.0, 0.0)]).unwrap();
        assert!(body_contains(&pt, Point2::new(1.0, 0.0), TOL_GEOM));
        assert!(!body_contains(&pt, Point2::new(1.0, 1e-6), TOL_GEOM));
        let arcs = body_curve_arcs(&pt, &CurveModel::unit_circle());
        assert_eq!(arcs.len(), 1);
        assert_eq!(arcs[0].length(), 0.0);
        let seg = ConvexBody::new(1, vec![Point2::new(-2.0, 0.0), Point2::new(2.0, 0.0)]).unwrap();
        let arcs = body_curve_arcs(&seg, &CurveModel::unit_circle());
        assert_eq!(arcs.len(), 2);
        assert!(arcs.iter().all(|a| a.length() == 0.0));
    }

    #[test]
    fn slab_arcs() {
        let slab = ConvexBody::new(
            0,
            vec![Point2::new(-2.0, -0.5), Point2::new(2.0, -0.5), Point2::new(2.0, 0.5), Point2::new(-2.0, 0.5)],
        )
        .unwrap();
        let arcs = body_curve_arcs(&slab, &CurveModel::unit_circle());
        assert_eq!(arcs.len(), 2);
        let a = arcs[0];
        assert!((a.start - 5.0 * PI / 6.0).abs() < 1e-12);
        assert!((a.end - 7.0 * PI / 6.0).abs() < 1e-12);
        assert!(!a.wraps);
        let b = arcs[1];
        assert!((b.start - 11.0 * PI / 6.0).abs() < 1e-12);
        assert!((b.end - PI / 6.0).abs() < 1e-12);
        assert!(b.wraps);
    }

    #[test]
    fn far_and_enclosing_squares() {
        let c = CurveModel::unit_circle();
        assert!(body_curve_arcs(&square(0, 5.0, 5.0, 0.1), &c).is_empty());
        let big = body_curve_arcs(&square(0, -2.0, -2.0, 4.0), &c);
        assert_eq!(big.len(), 1);
        assert!(big[0].is_full());
        assert_eq!(big[0].length(), TAU);
    }

    #[test]
    fn common_point_examples() {
        let a = [AngularInterval::new(0.0, PI)];
        let b = [AngularInterval::new(PI / 2.0, PI)];
        assert!((arcs_common_point(&a, &b).unwrap() - 3.0 * PI / 4.0).abs() < 1e-12);
        let c = [AngularInterval::new(0.0, PI / 4.0)];
        let d = [AngularInterval::new(PI / 2.0, PI / 2.0)];
        assert_eq!(arcs_common_point(&c, &d), None);
        let full = [AngularInterval::full()];
        let e = [AngularInterval::new(1.0, 1.0)];
        assert!((arcs_common_point(&full, &e).unwrap() - 1.5).abs() < 1e-12);
        // touching endpoints meet in a single angle
        let f = [AngularInterval::new(0.0, 1.0)];
        let g = [AngularInterval::new(1.0, 1.0)];
        assert!((arcs_common_point(&f, &g).unwrap() - 1.0).abs() < 1e-12);
        // two overlap pieces: the one with smaller start wins
        let h = [AngularInterval::new(0.0, 4.0)];
        let i = [AngularInterval::new(3.0, 4.0)];
        let got = arcs_common_point(&h, &i).unwrap();
        assert!((got - (3.0 + 4.0 - TAU) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn segment_examples() {
        let o = segment_intersection(
            Point2::new(-1.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, -1.0),
            Point2::new(0.0, 1.0),
        )
        .unwrap();
        assert!(o.norm() < 1e-15);
        assert_eq!(
            segment_intersection(
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
                Point2::new(1.0, 1.0)
            ),
            None
        );
        let p = segment_intersection(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        )
        .unwrap();
        assert!(p.dist(Point2::new(0.5, 0.5)) < 1e-15);
        // non-parallel but not reaching
        assert_eq!(
            segment_intersection(
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(2.0, -1.0),
                Point2::new(2.0, 1.0)
            ),
            None
        );
    }

    #[test]
    fn candidates_single_triangle() {
        let c = candidate_points(&[tri(0)]);
        assert_eq!(c.len(), 3 * 5);
    }

    #[test]
    fn candidates_offset_squares() {
        let bodies = [square(0, 0.0, 0.0, 1.0), square(1, 0.5, 0.5, 1.0)];
        let c = candidate_points(&bodies);
        // 8 vertices + 2 crossings, each with 4 nudges
        assert_eq!(c.len(), 10 * 5);
        assert!(c.iter().any(|p| p.dist(Point2::new(0.5, 1.0)) < 1e-12));
        assert!(c.iter().any(|p| p.dist(Point2::new(1.0, 0.5)) < 1e-12));
    }

    #[test]
    fn oracle_small_cases() {
        let t = [tri(0)];
        let got = brute_min_transversal(&t, &candidate_points(&t), 1).unwrap().unwrap();
        assert_eq!(got.len(), 1);
        assert!(body_contains(&t[0], got[0], TOL_GEOM));

        let two = [square(0, 0.0, 0.0, 1.0), square(1, 3.0, 0.0, 1.0)];
        let cands = candidate_points(&two);
        assert_eq!(brute_min_transversal(&two, &cands, 1).unwrap(), None);
        assert_eq!(brute_min_transversal(&two, &cands, 2).unwrap().unwrap().len(), 2);
        assert!(brute_min_transversal(&two, &cands, 0).is_err());
    }

    #[test]
    fn interval_contains_wrapping() {
        let a = AngularInterval::new(TAU - 0.5, 1.0);
        assert!(a.wraps);
        assert!(a.contains(0.0, 0.0));
        assert!(a.contains(0.5, 0.0));
        assert!(!a.contains(0.6, 1e-9));
        assert!((a.midpoint() - 0.0).abs() < 1e-12 || (a.midpoint() - TAU).abs() < 1e-12);
    }
}
