//! Instance files and deterministic instance generators.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexBody, CurveModel, Point2};
use crate::graph::{build_meet_graph, verify_p2, P2Status};
use crate::pipeline::TransversalReport;

/// Default displacement of `f` towards `e` in [`gallery7`], in radians.
/// Below about 0.274 two points pierce all seven triangles.
pub const GALLERY_DELTA: f64 = 0.4;
const GENERATOR_RETRIES: u64 = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance")]
pub struct Instance {
    pub curve: CurveModel,
    pub bodies: Vec<ConvexBody>,
    pub p: usize,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

#[derive(Deserialize)]
struct RawInstance {
    curve: CurveModel,
    bodies: Vec<ConvexBody>,
    p: usize,
    #[serde(default)]
    meta: BTreeMap<String, String>,
}

impl TryFrom<RawInstance> for Instance {
    type Error = Error;
    fn try_from(raw: RawInstance) -> Result<Self> {
        let inst = Instance {
            curve: raw.curve,
            bodies: raw.bodies,
            p: raw.p,
            meta: raw.meta,
        };
        inst.validate()?;
        Ok(inst)
    }
}

impl Instance {
    pub fn new(curve: CurveModel, bodies: Vec<ConvexBody>, p: usize) -> Result<Self> {
        let inst = Instance {
            curve,
            bodies,
            p,
            meta: BTreeMap::new(),
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        self.curve.validate()?;
        if self.bodies.is_empty() {
            return Err(Error::arg("instance has no bodies"));
        }
        if self.p < 2 {
            return Err(Error::arg(format!("p must be at least 2, got {}", self.p)));
        }
        if let Some((i, b)) = self.bodies.iter().enumerate().find(|(i, b)| b.id != *i) {
            return Err(Error::arg(format!("body at position {i} has id {}", b.id)));
        }
        Ok(())
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }
}

/// Instance keys followed by the pipeline's report keys in one object.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    #[serde(flatten)]
    pub instance: Instance,
    #[serde(flatten)]
    pub report: TransversalReport,
}

impl ReportFile {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }
}

/// Polygon whose intersection with the circle is exactly the arc
/// `[start, start + len]`: the chord endpoints, the tangent-line corners of
/// `segments` equal sub-arcs, and optionally a point on the inward ray
/// through the arc midpoint at radius fraction `inner` (0 is the center).
pub fn arc_body(id: usize, curve: &CurveModel, start: f64, len: f64, segments: usize, inner: Option<f64>) -> Result<ConvexBody> {
    if !(len > 0.0 && len < TAU) || segments == 0 {
        return Err(Error::arg(format!("arc length {len} must lie in (0, 2π)")));
    }
    let h = len / segments as f64;
    if h >= PI {
        return Err(Error::arg("arc sub-segments must be shorter than π"));
    }
    let outer = curve.radius / (h / 2.0).cos();
    let mut pts = vec![curve.point_at(start)];
    for k in 0..segments {
        pts.push(curve.center + Point2::polar(outer, start + (k as f64 + 0.5) * h));
    }
    pts.push(curve.point_at(start + len));
    if let Some(rho) = inner {
        pts.push(curve.center + Point2::polar(rho * curve.radius, start + len / 2.0));
    }
    ConvexBody::hull(id, &pts)
}

fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// `n` arc bodies on the unit circle whose arcs are longer than π, so every
/// two of them meet on the circle.
pub fn gen_pairwise(n: usize, seed: u64) -> Result<Instance> {
    if n < 2 {
        return Err(Error::arg(format!("gen_pairwise needs n >= 2, got {n}")));
    }
    let curve = CurveModel::unit_circle();
    for attempt in 0..GENERATOR_RETRIES {
        let mut rng = attempt_rng(seed, attempt);
        let bodies = (0..n)
            .map(|id| {
                let start = rng.gen_range(0.0..TAU);
                let len = rng.gen_range(PI + 0.2..PI + 1.2);
                arc_body(id, &curve, start, len, 5, None)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = build_meet_graph(&bodies, &curve);
        if g.edge_count() == n * (n - 1) / 2 {
            return Ok(Instance::new(curve, bodies, 2)?
                .with_meta("generator", "pairwise")
                .with_meta("seed", seed)
                .with_meta("attempt", attempt));
        }
        log::warn!("gen_pairwise attempt {attempt}: meets graph not complete, regenerating");
    }
    Err(Error::Generator("pairwise instance failed verification".into()))
}

/// Bodies split round-robin into `p - 1` clusters. Each cluster's arcs
/// surround a shared curve point and stay inside its own angular window, so
/// any `p` bodies contain two from one cluster.
pub fn gen_clustered(p: usize, n: usize, seed: u64) -> Result<Instance> {
    if p < 2 {
        return Err(Error::arg(format!("gen_clustered needs p >= 2, got {p}")));
    }
    if n < p - 1 {
        return Err(Error::arg(format!("gen_clustered needs n >= p - 1 = {}, got {n}", p - 1)));
    }
    let curve = CurveModel::unit_circle();
    let clusters = p - 1;
    let spacing = TAU / clusters as f64;
    let half = (0.35 * spacing).min(1.2);
    for attempt in 0..GENERATOR_RETRIES {
        let mut rng = attempt_rng(seed, attempt);
        let centers: Vec<f64> = (0..clusters)
            .map(|c| c as f64 * spacing + rng.gen_range(-0.1..0.1) * spacing)
            .collect();
        let bodies = (0..n)
            .map(|id| {
                let center = centers[id % clusters];
                let before = rng.gen_range(0.05..half);
                let after = rng.gen_range(0.05..half);
                let inner = rng.gen_range(0.0..0.9);
                arc_body(id, &curve, center - before, before + after, 3, Some(inner))
            })
            .collect::<Result<Vec<_>>>()?;
        let g = build_meet_graph(&bodies, &curve);
        let expected = (0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == (a % clusters == b % clusters)));
        if expected && verify_p2(&g, p)? == P2Status::Holds {
            return Ok(Instance::new(curve, bodies, p)?
                .with_meta("generator", "clustered")
                .with_meta("seed", seed)
                .with_meta("clusters", clusters)
                .with_meta("attempt", attempt));
        }
        log::warn!("gen_clustered attempt {attempt}: cluster structure not realized, regenerating");
    }
    Err(Error::Generator("clustered instance failed verification".into()))
}

/// Seven triangles on points `a..g` of the unit circle, every two sharing a
/// vertex, with `f` shifted towards `e` by `delta` radians. No two points
/// pierce all seven.
pub fn gallery7(delta: f64) -> Result<Instance> {
    if !(delta.is_finite() && delta.abs() < TAU / 7.0) {
        return Err(Error::arg(format!("delta must be smaller than 2π/7, got {delta}")));
    }
    let curve = CurveModel::unit_circle();
    let mut angles: Vec<f64> = (0..7).map(|k| TAU * k as f64 / 7.0).collect();
    angles[5] -= delta;
    let pt: Vec<Point2> = angles.iter().map(|&t| curve.point_at(t)).collect();
    let (a, b, c, d, e, f, g) = (0, 1, 2, 3, 4, 5, 6);
    let triples = [[a, b, c], [c, d, e], [e, f, a], [b, d, f], [a, d, g], [b, e, g], [c, f, g]];
    let bodies = triples
        .iter()
        .enumerate()
        .map(|(id, t)| ConvexBody::hull(id, &[pt[t[0]], pt[t[1]], pt[t[2]]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Instance::new(curve, bodies, 2)?
        .with_meta("generator", "gallery7")
        .with_meta("delta", delta))
}
