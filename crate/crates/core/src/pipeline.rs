//! Fractional transversal and packing, rationalization and replication,
//! heavy-point extraction on the multiset, and the final hitting set.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BodySet;
use crate::error::{Error, Result};
use crate::geom::{
    arcs_common_point, body_contains, body_curve_arcs, candidate_points, maximal_signatures, AngularInterval, ConvexBody,
    CurveModel, Point2, TOL_GEOM,
};
use crate::graph::{build_meet_graph, verify_p2, P2Status};
use crate::lp::{lp_solve, Direction, LpProblem, LpStatus, Sense, TOL_LP};
use crate::witness::{find_heavy_point, SearchStrategy, WitnessList, EXHAUSTIVE_MAX_N};

/// Jitter radius of cloud copies.
pub const CLOUD_EPS: f64 = 1e-7;
/// Duality gap accepted between the two LP optima.
pub const DUALITY_TOL: f64 = 1e-6;
/// Alpha for families in which every two bodies meet on the curve.
pub const ALPHA_PAIRWISE: f64 = 0.027;
/// `alpha = gamma * C_ALPHA` otherwise, with `gamma = 1/p`.
pub const C_ALPHA: f64 = 1.0 / 300.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Overrides the default `0.027` (p = 2) or `1/(300 p)`.
    pub alpha: Option<f64>,
    /// `None` picks exhaustive search for `N <= 60`, sampling otherwise.
    pub strategy: Option<SearchStrategy>,
    pub trials: usize,
    pub seed: u64,
    pub max_denominator: u64,
    pub cloud_resolution: usize,
    pub tol_geom: f64,
    pub tol_lp: f64,
    /// Upper bound on the replicated multiset size.
    pub max_multiset: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            alpha: None,
            strategy: None,
            trials: 256,
            seed: 0,
            max_denominator: 10_000,
            cloud_resolution: 1000,
            tol_geom: TOL_GEOM,
            tol_lp: TOL_LP,
            max_multiset: 1000,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::arg(format!("alpha must lie in (0,1), got {a}")));
            }
        }
        if !(self.tol_geom > 0.0 && self.tol_lp > 0.0) {
            return Err(Error::arg("tolerances must be positive"));
        }
        let strategy_trials = match self.strategy {
            Some(SearchStrategy::Random { trials, .. }) => trials,
            _ => self.trials,
        };
        if strategy_trials < 1 {
            return Err(Error::arg("trials must be at least 1"));
        }
        if self.max_denominator < 1 || self.cloud_resolution < 1 || self.max_multiset < 1 {
            return Err(Error::arg("max_denominator, cloud_resolution and max_multiset must be at least 1"));
        }
        Ok(())
    }

    pub fn alpha_for(&self, p: usize) -> f64 {
        self.alpha.unwrap_or(if p <= 2 { ALPHA_PAIRWISE } else { C_ALPHA / p as f64 })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FractionalTransversal {
    pub points: Vec<Point2>,
    pub weights: Vec<f64>,
    pub size: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FractionalPacking {
    pub weights: Vec<f64>,
    pub size: f64,
}

/// Candidate points reduced to maximal containment signatures.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    pub points: Vec<Point2>,
    pub signatures: Vec<BodySet>,
    /// Number of raw candidates before reduction.
    pub raw: usize,
}

impl CandidateSet {
    pub fn build(bodies: &[ConvexBody], tol: f64) -> Result<Self> {
        let candidates = candidate_points(bodies);
        Self::from_points(bodies, &candidates, tol)
    }

    pub fn from_points(bodies: &[ConvexBody], candidates: &[Point2], tol: f64) -> Result<Self> {
        let sigs = maximal_signatures(bodies, candidates, tol);
        let mut covered = BodySet::new(bodies.len());
        for (s, _) in &sigs {
            covered.union_with(s);
        }
        if let Some(id) = (0..bodies.len()).find(|&i| !covered.contains(i)) {
            return Err(Error::IncompleteCandidates(bodies[id].id));
        }
        Ok(CandidateSet {
            points: sigs.iter().map(|&(_, ci)| candidates[ci]).collect(),
            signatures: sigs.into_iter().map(|(s, _)| s).collect(),
            raw: candidates.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn solved(sol: crate::lp::LpSolution) -> Result<crate::lp::LpSolution> {
    match sol.status {
        LpStatus::Optimal => Ok(sol),
        LpStatus::Infeasible => Err(Error::Lp("infeasible")),
        LpStatus::Unbounded => Err(Error::Lp("unbounded")),
    }
}

pub fn fractional_transversal(bodies: &[ConvexBody], candidates: &CandidateSet) -> Result<FractionalTransversal> {
    let k = candidates.len();
    let mut lp = LpProblem::new(Direction::Minimize, vec![1.0; k]);
    for b in 0..bodies.len() {
        let row = candidates.signatures.iter().map(|s| if s.contains(b) { 1.0 } else { 0.0 }).collect();
        lp = lp.constraint(row, Sense::Ge, 1.0);
    }
    let sol = solved(lp_solve(&lp)?)?;
    let weights: Vec<f64> = sol.values.iter().map(|w| w.clamp(0.0, 1.0)).collect();
    Ok(FractionalTransversal {
        points: candidates.points.clone(),
        size: weights.iter().sum(),
        weights,
    })
}

pub fn fractional_packing(bodies: &[ConvexBody], candidates: &CandidateSet) -> Result<FractionalPacking> {
    let n = bodies.len();
    let mut lp = LpProblem::new(Direction::Maximize, vec![1.0; n]);
    for sig in &candidates.signatures {
        let row = (0..n).map(|b| if sig.contains(b) { 1.0 } else { 0.0 }).collect();
        lp = lp.constraint(row, Sense::Le, 1.0);
    }
    let sol = solved(lp_solve(&lp)?)?;
    let weights: Vec<f64> = sol.values.iter().map(|w| w.clamp(0.0, 1.0)).collect();
    Ok(FractionalPacking {
        size: weights.iter().sum(),
        weights,
    })
}

/// Best rational approximation `num/den` of `x >= 0` with `den <= max_den`.
pub fn best_rational(x: f64, max_den: u64) -> (u64, u64) {
    let (mut h0, mut h1, mut k0, mut k1) = (0u64, 1u64, 1u64, 0u64);
    let mut r = x;
    loop {
        let a = r.floor();
        if a > u32::MAX as f64 {
            break;
        }
        let a = a as u64;
        let k2 = a.saturating_mul(k1).saturating_add(k0);
        if k2 > max_den {
            // semiconvergent with the largest admissible coefficient
            let t = (max_den - k0) / k1.max(1);
            let (hs, ks) = (t * h1 + h0, t * k1 + k0);
            if k1 == 0 || ((hs as f64 / ks as f64) - x).abs() < ((h1 as f64 / k1 as f64) - x).abs() {
                return (hs, ks);
            }
            return (h1, k1);
        }
        let h2 = a * h1 + h0;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a as f64;
        if frac < 1e-12 || ((h1 as f64 / k1 as f64) - x).abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (h1, k1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Common-denominator approximation `m / D` of weights in `[0,1]`.
pub fn rationalize(weights: &[f64], max_denominator: u64) -> Result<(Vec<u64>, u64)> {
    if max_denominator < 1 {
        return Err(Error::arg("max_denominator must be at least 1"));
    }
    if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < -TOL_LP || **w > 1.0 + TOL_LP) {
        return Err(Error::arg(format!("weight {w} outside [0,1]")));
    }
    let w: Vec<f64> = weights.iter().map(|x| x.clamp(0.0, 1.0)).collect();
    let fracs: Vec<(u64, u64)> = w.iter().map(|&x| best_rational(x, max_denominator)).collect();
    let mut d = 1u64;
    for &(_, den) in &fracs {
        d = d / gcd(d, den) * den;
        if d > max_denominator {
            break;
        }
    }
    if d <= max_denominator {
        let m = fracs.iter().map(|&(num, den)| num * (d / den)).collect();
        return Ok((m, d));
    }
    let d = max_denominator;
    let m = w.iter().map(|&x| (x * d as f64 + 1e-9).floor() as u64).collect();
    Ok((m, d))
}

/// Lowers multiplicities until `sum_{S in sig} m(S) <= D` for every
/// signature; returns the number of unit decrements.
pub fn repair_load(m: &mut [u64], d: u64, signatures: &[BodySet]) -> usize {
    let mut steps = 0;
    for sig in signatures {
        let mut sum: u64 = sig.iter().map(|s| m[s]).sum();
        while sum > d {
            let top = sig.iter().max_by_key(|&s| (m[s], std::cmp::Reverse(s))).expect("nonempty signature");
            m[top] -= 1;
            sum -= 1;
            steps += 1;
        }
    }
    steps
}

/// Signatures at which `sum_{S in sig} m(S) > D`.
pub fn load_violations(m: &[u64], d: u64, signatures: &[BodySet]) -> usize {
    signatures.iter().filter(|sig| sig.iter().map(|s| m[s]).sum::<u64>() > d).count()
}

#[derive(Clone, Debug)]
pub struct Replicated {
    pub bodies: Vec<ConvexBody>,
    /// Index of the original body each copy came from.
    pub provenance: Vec<usize>,
}

pub fn replicate(bodies: &[ConvexBody], m: &[u64]) -> Result<Replicated> {
    if m.len() != bodies.len() {
        return Err(Error::arg(format!("{} multiplicities for {} bodies", m.len(), bodies.len())));
    }
    let total: u64 = m.iter().sum();
    if total == 0 {
        return Err(Error::EmptyMultiset);
    }
    let mut out = Replicated {
        bodies: Vec::with_capacity(total as usize),
        provenance: Vec::with_capacity(total as usize),
    };
    for (i, (b, &k)) in bodies.iter().zip(m).enumerate() {
        for _ in 0..k {
            out.bodies.push(b.with_id(out.bodies.len()));
            out.provenance.push(i);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cloud {
    pub points: Vec<Point2>,
    /// Index into the fractional transversal's points for each copy.
    pub parents: Vec<usize>,
}

/// `ceil(R w(x))` jittered copies of each weighted point.
pub fn cloud_expand(ft: &FractionalTransversal, resolution: usize) -> Result<Cloud> {
    if resolution < 1 {
        return Err(Error::arg("cloud resolution must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut cloud = Cloud {
        points: Vec::new(),
        parents: Vec::new(),
    };
    for (i, (&x, &w)) in ft.points.iter().zip(&ft.weights).enumerate() {
        let copies = (resolution as f64 * w - 1e-9).ceil().max(0.0) as usize;
        for _ in 0..copies {
            let r = CLOUD_EPS * rng.gen::<f64>().sqrt();
            cloud.points.push(x + Point2::polar(r, rng.gen_range(0.0..std::f64::consts::TAU)));
            cloud.parents.push(i);
        }
    }
    Ok(cloud)
}

/// Fraction of the cloud inside each body. A copy counts for a body when
/// its parent point does.
pub fn cloud_fractions(bodies: &[ConvexBody], ft: &FractionalTransversal, cloud: &Cloud, tol: f64) -> Vec<f64> {
    let total = cloud.points.len().max(1) as f64;
    let mut counts = vec![0usize; ft.points.len()];
    for &p in &cloud.parents {
        counts[p] += 1;
    }
    bodies
        .iter()
        .map(|b| {
            let inside: usize = ft
                .points
                .iter()
                .zip(&counts)
                .filter(|(&x, _)| body_contains(b, x, tol))
                .map(|(_, &c)| c)
                .sum();
            inside as f64 / total
        })
        .collect()
}

/// Repeatedly takes the candidate inside the most bodies not yet hit.
pub fn greedy_transversal(bodies: &[ConvexBody], candidates: &CandidateSet) -> Result<Vec<Point2>> {
    let n = bodies.len();
    let mut unhit = BodySet::full(n);
    let mut out = Vec::new();
    while !unhit.is_empty() {
        let (best, gain) = candidates
            .signatures
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_count(&unhit)))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if gain == 0 {
            return Err(Error::IncompleteCandidates(bodies[unhit.first().expect("nonempty")].id));
        }
        unhit.difference_with(&candidates.signatures[best]);
        out.push(candidates.points[best]);
    }
    Ok(out)
}

pub fn greedy_bound(tau_star: f64, n: usize) -> f64 {
    tau_star * (1.0 + (n.max(1) as f64).ln()) + 1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportFlags {
    /// Every body contains a transversal point.
    pub all_hit: bool,
    pub p2_checked: bool,
    pub duality_ok: bool,
    /// `sum_{S ∋ x} m(S) <= D` at every candidate.
    pub load_ok: bool,
    pub load_at_z: bool,
    /// Coverage of `z` in the multiset is at most `D`, so `tau ε <= 1`.
    pub tau_bound_ok: bool,
    pub greedy_bound_ok: bool,
    /// `z` lies in every color the chosen quadruple pierces.
    pub coverage_ge_pierced: bool,
    pub heavy_fallback: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransversalReport {
    pub transversal: Vec<Point2>,
    pub tau_star: f64,
    pub packing_size: f64,
    pub m: Vec<u64>,
    #[serde(rename = "D")]
    pub d: u64,
    pub z: Option<Point2>,
    /// Copies in the multiset containing `z`.
    pub coverage: usize,
    /// Original bodies containing `z`.
    pub coverage_bodies: usize,
    pub multiset_size: usize,
    /// `coverage / multiset_size`.
    pub epsilon: f64,
    pub witness_count: usize,
    pub alpha: f64,
    pub strategy: Option<SearchStrategy>,
    pub pierced: usize,
    pub mean_pierced: f64,
    pub spread_out: usize,
    /// `p` after discounting bodies that miss the curve.
    pub p_effective: usize,
    /// Bodies missing the curve, left out of the multiset.
    pub filtered: Vec<usize>,
    pub candidates: usize,
    pub signatures: usize,
    pub load_repairs: usize,
    pub fractional_transversal: FractionalTransversal,
    pub cloud_size: usize,
    pub cloud_min_fraction: f64,
    pub greedy_bound: f64,
    pub stages: Vec<StageTiming>,
    pub flags: ReportFlags,
}

struct Stopwatch {
    stages: Vec<StageTiming>,
    t: Instant,
}

impl Stopwatch {
    fn lap(&mut self, stage: &str) {
        self.stages.push(StageTiming {
            stage: stage.to_string(),
            seconds: self.t.elapsed().as_secs_f64(),
        });
        self.t = Instant::now();
    }
}

fn staged<T>(stage: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| e.in_stage(stage))
}

fn multiset_witnesses(
    curve_bodies: &[usize],
    arcs: &[Vec<AngularInterval>],
    provenance: &[usize],
) -> Result<WitnessList> {
    let k = curve_bodies.len();
    let mut local = vec![usize::MAX; arcs.len()];
    for (li, &b) in curve_bodies.iter().enumerate() {
        local[b] = li;
    }
    let mut cache = vec![None; k * k];
    for a in 0..k {
        for b in a..k {
            let w = arcs_common_point(&arcs[curve_bodies[a]], &arcs[curve_bodies[b]]);
            cache[a * k + b] = w;
            cache[b * k + a] = w;
        }
    }
    WitnessList::from_pairs(provenance.len(), |i, j| {
        cache[local[provenance[i]] * k + local[provenance[j]]]
    })
}

/// Runs the whole construction on `bodies` under the `(p,2)`-condition on
/// the curve and returns a verified transversal.
pub fn run_pipeline(bodies: &[ConvexBody], curve: &CurveModel, p: usize, config: &RunConfig) -> Result<TransversalReport> {
    config.validate()?;
    curve.validate()?;
    if bodies.is_empty() {
        return Err(Error::arg("no bodies"));
    }
    if p < 2 {
        return Err(Error::arg(format!("p must be at least 2, got {p}")));
    }
    let n = bodies.len();
    let mut sw = Stopwatch {
        stages: Vec::new(),
        t: Instant::now(),
    };

    let graph = build_meet_graph(bodies, curve);
    let p2 = staged("condition", verify_p2(&graph, p))?;
    if let P2Status::Violated(set) = &p2 {
        return Err(Error::ConditionNotSatisfied(format!("bodies {set:?} pairwise miss the curve")).in_stage("condition"));
    }
    let arcs: Vec<Vec<AngularInterval>> = bodies.iter().map(|b| body_curve_arcs(b, curve)).collect();
    let filtered: Vec<usize> = (0..n).filter(|&i| arcs[i].is_empty()).collect();
    let on_curve: Vec<usize> = (0..n).filter(|&i| !arcs[i].is_empty()).collect();
    let p_effective = p.saturating_sub(filtered.len()).max(1);
    sw.lap("condition");

    let cands = staged("candidates", CandidateSet::build(bodies, config.tol_geom))?;
    sw.lap("candidates");

    let ft = staged("transversal_lp", fractional_transversal(bodies, &cands))?;
    let fp = staged("packing_lp", fractional_packing(bodies, &cands))?;
    let duality_ok = (ft.size - fp.size).abs() <= DUALITY_TOL;
    if !duality_ok {
        log::warn!("duality gap {} exceeds {DUALITY_TOL}", (ft.size - fp.size).abs());
    }
    sw.lap("lp");

    // packing of the bodies meeting the curve; zero elsewhere
    let packing_weights: Vec<f64> = if filtered.is_empty() {
        fp.weights.clone()
    } else if on_curve.is_empty() {
        vec![0.0; n]
    } else {
        let sub: Vec<ConvexBody> = on_curve.iter().map(|&i| bodies[i].clone()).collect();
        let sub_cands = staged("packing_lp", CandidateSet::build(&sub, config.tol_geom))?;
        let sub_fp = staged("packing_lp", fractional_packing(&sub, &sub_cands))?;
        let mut w = vec![0.0; n];
        for (li, &i) in on_curve.iter().enumerate() {
            w[i] = sub_fp.weights[li];
        }
        w
    };

    let mut max_den = config.max_denominator;
    let (mut m, mut d, mut load_repairs);
    loop {
        (m, d) = staged("rationalize", rationalize(&packing_weights, max_den))?;
        load_repairs = repair_load(&mut m, d, &cands.signatures);
        let total: u64 = m.iter().sum();
        if total as usize <= config.max_multiset || max_den == 1 {
            break;
        }
        let shrunk = (max_den as f64 * config.max_multiset as f64 / total as f64).floor() as u64;
        max_den = shrunk.clamp(1, max_den - 1);
        log::debug!("multiset of {total} exceeds cap, retrying with max_denominator {max_den}");
    }
    let load_ok = load_violations(&m, d, &cands.signatures) == 0;
    sw.lap("rationalize");

    let mut report_z = None;
    let (mut coverage, mut multiset_size, mut witness_count, mut pierced, mut spread_out) = (0, 0, 0, 0, 0);
    let mut mean_pierced = 0.0;
    let mut heavy_fallback = false;
    let mut coverage_ge_pierced = true;
    let mut strategy_used = None;
    let alpha = config.alpha_for(p_effective);
    if !on_curve.is_empty() && m.iter().sum::<u64>() > 0 {
        let rep = staged("replicate", replicate(bodies, &m))?;
        multiset_size = rep.bodies.len();
        sw.lap("replicate");
        let q = staged("witness", multiset_witnesses(&on_curve, &arcs, &rep.provenance))?;
        witness_count = q.len();
        sw.lap("witness");
        if q.len() >= 4 {
            let strategy = config.strategy.unwrap_or(if q.len() <= EXHAUSTIVE_MAX_N {
                SearchStrategy::Exhaustive
            } else {
                SearchStrategy::Random {
                    trials: config.trials,
                    seed: config.seed,
                }
            });
            strategy_used = Some(strategy);
            let hp = staged("heavy_point", find_heavy_point(&q, &rep.bodies, curve, strategy, alpha))?;
            coverage = hp.covered;
            pierced = hp.pierced;
            spread_out = hp.spread_out;
            mean_pierced = hp.mean_pierced;
            heavy_fallback = hp.fallback;
            coverage_ge_pierced = hp.covered >= hp.pierced;
            report_z = Some(hp.z);
        } else {
            let angle = match q.entries().first() {
                Some(w) => w.angle,
                None => arcs[rep.provenance[0]][0].midpoint(),
            };
            let z = curve.point_at(angle);
            coverage = rep.bodies.iter().filter(|b| body_contains(b, z, config.tol_geom)).count();
            heavy_fallback = true;
            report_z = Some(z);
        }
        sw.lap("heavy_point");
    }

    let z_bodies: Vec<usize> = match report_z {
        Some(z) => (0..n).filter(|&i| body_contains(&bodies[i], z, config.tol_geom)).collect(),
        None => Vec::new(),
    };
    let load_at_z = z_bodies.iter().map(|&i| m[i]).sum::<u64>() <= d;
    let tau_bound_ok = coverage as u64 <= d;
    let epsilon = if multiset_size > 0 { coverage as f64 / multiset_size as f64 } else { 0.0 };

    let cloud = cloud_expand(&ft, config.cloud_resolution)?;
    let fractions = cloud_fractions(bodies, &ft, &cloud, config.tol_geom);
    let cloud_min_fraction = fractions.iter().copied().fold(f64::INFINITY, f64::min);
    sw.lap("cloud");

    let transversal = staged("greedy", greedy_transversal(bodies, &cands))?;
    let all_hit = bodies.iter().all(|b| transversal.iter().any(|&x| body_contains(b, x, config.tol_geom)));
    let bound = greedy_bound(ft.size, n);
    sw.lap("greedy");

    Ok(TransversalReport {
        tau_star: ft.size,
        packing_size: fp.size,
        greedy_bound: bound,
        flags: ReportFlags {
            all_hit,
            p2_checked: p2 == P2Status::Holds,
            duality_ok,
            load_ok,
            load_at_z,
            tau_bound_ok,
            greedy_bound_ok: transversal.len() as f64 <= bound,
            coverage_ge_pierced,
            heavy_fallback,
        },
        transversal,
        m,
        d,
        z: report_z,
        coverage,
        coverage_bodies: z_bodies.len(),
        multiset_size,
        epsilon,
        witness_count,
        alpha,
        strategy: strategy_used,
        pierced,
        mean_pierced,
        spread_out,
        p_effective,
        filtered,
        candidates: cands.raw,
        signatures: cands.len(),
        load_repairs,
        fractional_transversal: ft,
        cloud_size: cloud.points.len(),
        cloud_min_fraction,
        stages: sw.stages,
    })
}

/// One named re-check of a report against its instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Recomputes the report's invariants from scratch.
pub fn verify_report(bodies: &[ConvexBody], report: &TransversalReport, tol_geom: f64) -> Result<Vec<Check>> {
    let n = bodies.len();
    let mut checks = Vec::new();
    let mut push = |name: &str, ok: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            ok,
            detail,
        })
    };
    let missed: Vec<usize> = (0..n)
        .filter(|&i| !report.transversal.iter().any(|&x| body_contains(&bodies[i], x, tol_geom)))
        .collect();
    push("all_hit", missed.is_empty(), format!("bodies missed: {missed:?}"));

    let shape_ok = report.m.len() == n && report.d >= 1;
    push("multiplicities", shape_ok, format!("{} multiplicities, D = {}", report.m.len(), report.d));
    let cands = CandidateSet::build(bodies, tol_geom)?;
    if shape_ok {
        let bad = load_violations(&report.m, report.d, &cands.signatures);
        push("load", bad == 0, format!("{bad} candidate signatures exceed D"));
        if let Some(z) = report.z {
            let cov: u64 = (0..n).filter(|&i| body_contains(&bodies[i], z, tol_geom)).map(|i| report.m[i]).sum();
            push(
                "coverage",
                cov as usize == report.coverage && cov <= report.d,
                format!("recount {cov}, reported {}, D = {}", report.coverage, report.d),
            );
        }
    }
    let ft = fractional_transversal(bodies, &cands)?;
    let fp = fractional_packing(bodies, &cands)?;
    push(
        "tau_star",
        (ft.size - report.tau_star).abs() <= DUALITY_TOL && (ft.size - fp.size).abs() <= DUALITY_TOL,
        format!("transversal {}, packing {}, reported {}", ft.size, fp.size, report.tau_star),
    );
    let bound = greedy_bound(ft.size, n);
    push(
        "greedy_bound",
        report.transversal.len() as f64 <= bound,
        format!("size {} against bound {bound:.4}", report.transversal.len()),
    );
    Ok(checks)
}
