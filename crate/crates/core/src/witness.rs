//! Circular witness lists and the quadruple-piercing engine.
//!
//! For every pair of bodies meeting on the curve one witness angle is kept;
//! the witnesses are sorted around the curve and a separator sits in every
//! gap between consecutive witnesses. Four separators cut the witness list
//! into four runs, and if every run carries color `i` then the crossing of
//! the two diagonals of the separator quadrilateral lies in body `i`.

use std::f64::consts::TAU;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{arcs_common_point, body_contains, body_curve_arcs, normalize_angle, segment_intersection};
use crate::geom::{AngularInterval, ConvexBody, CurveModel, Point2, TOL_GEOM};

/// Largest witness count searched exhaustively.
pub const EXHAUSTIVE_MAX_N: usize = 60;
/// Samples used when an exhaustive search is requested above [`EXHAUSTIVE_MAX_N`].
pub const FALLBACK_TRIALS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub angle: f64,
    /// Unordered color pair, stored with `colors.0 < colors.1`.
    pub colors: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct WitnessList {
    entries: Vec<WitnessPoint>,
    n_colors: usize,
    occurrences: Vec<Vec<usize>>,
}

impl WitnessList {
    /// Sorts the witnesses circularly (ties by color pair) and indexes color
    /// occurrences. Each unordered pair may appear at most once.
    pub fn new(n_colors: usize, mut entries: Vec<WitnessPoint>) -> Result<Self> {
        for w in entries.iter_mut() {
            let (i, j) = w.colors;
            if i == j {
                return Err(Error::arg(format!("witness with repeated color {i}")));
            }
            if i.max(j) >= n_colors {
                return Err(Error::arg(format!("witness color out of range: {:?}", w.colors)));
            }
            w.colors = (i.min(j), i.max(j));
            w.angle = normalize_angle(w.angle);
        }
        entries.sort_by(|a, b| a.angle.total_cmp(&b.angle).then(a.colors.cmp(&b.colors)));
        let mut pairs: Vec<(usize, usize)> = entries.iter().map(|w| w.colors).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::arg("color pair occurs twice"));
        }
        let mut occurrences = vec![Vec::new(); n_colors];
        for (pos, w) in entries.iter().enumerate() {
            occurrences[w.colors.0].push(pos);
            occurrences[w.colors.1].push(pos);
        }
        Ok(WitnessList {
            entries,
            n_colors,
            occurrences,
        })
    }

    /// Builds the list from a symmetric "common angle" oracle over `n` colors.
    pub fn from_pairs(n_colors: usize, mut meet: impl FnMut(usize, usize) -> Option<f64>) -> Result<Self> {
        let mut entries = Vec::new();
        for i in 0..n_colors {
            for j in (i + 1)..n_colors {
                if let Some(angle) = meet(i, j) {
                    entries.push(WitnessPoint { angle, colors: (i, j) });
                }
            }
        }
        Self::new(n_colors, entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn entries(&self) -> &[WitnessPoint] {
        &self.entries
    }

    /// Sorted positions of witnesses carrying `color`.
    pub fn occurrences(&self, color: usize) -> &[usize] {
        self.occurrences.get(color).map_or(&[], Vec::as_slice)
    }

    /// Angle of separator `i`, placed at the angular midpoint between
    /// witnesses `i-1` and `i` (circularly).
    pub fn separator_angle(&self, i: usize) -> f64 {
        let n = self.entries.len();
        let next = self.entries[i].angle;
        let prev = if i == 0 {
            self.entries[n - 1].angle - TAU
        } else {
            self.entries[i - 1].angle
        };
        if prev == next {
            next
        } else {
            normalize_angle((prev + next) / 2.0)
        }
    }
}

/// One witness per pair of bodies meeting on the curve.
pub fn build_witness_list(bodies: &[ConvexBody], curve: &CurveModel) -> Result<WitnessList> {
    let arcs: Vec<Vec<AngularInterval>> = bodies.iter().map(|b| body_curve_arcs(b, curve)).collect();
    WitnessList::from_pairs(bodies.len(), |i, j| arcs_common_point(&arcs[i], &arcs[j]))
}

pub fn circ_distance(a: usize, b: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::arg("circular distance on an empty list"));
    }
    if a >= n || b >= n {
        return Err(Error::arg(format!("index out of range: ({a}, {b}) with N = {n}")));
    }
    let fwd = (b + n - a) % n;
    Ok(fwd.min(n - fwd))
}

/// Integer distance threshold `ceil(alpha * n)`, ignoring float noise in the product.
pub fn spread_threshold(alpha: f64, n: usize) -> usize {
    ((alpha * n as f64) - 1e-9).ceil().max(1.0) as usize
}

/// Whether `r` of the sorted, distinct positions `occ` can be chosen with all
/// pairwise distances at least `threshold`. Circular distance on `Z_n` when
/// `circular`, plain `|a-b|` otherwise. Exact (greedy from every start).
pub fn has_spread_subset(occ: &[usize], n: usize, threshold: usize, r: usize, circular: bool) -> bool {
    let k = occ.len();
    if r == 0 {
        return true;
    }
    if k < r {
        return false;
    }
    if r == 1 {
        return true;
    }
    if !circular {
        let mut picked = 1;
        let mut last = occ[0];
        for &p in &occ[1..] {
            if p >= last + threshold {
                picked += 1;
                last = p;
                if picked == r {
                    return true;
                }
            }
        }
        return false;
    }
    // unwrap twice around so every start sees a full turn
    let doubled: Vec<usize> = occ.iter().copied().chain(occ.iter().map(|&p| p + n)).collect();
    #[allow(clippy::needless_range_loop)]
    for s in 0..k {
        let start = occ[s];
        let mut last = start;
        let mut idx = s;
        let mut picked = 1;
        while picked < r {
            let want = last + threshold;
            let off = doubled[idx + 1..].partition_point(|&p| p < want);
            let nxt = idx + 1 + off;
            if nxt >= s + k || doubled[nxt] >= start + n {
                break;
            }
            last = doubled[nxt];
            idx = nxt;
            picked += 1;
        }
        if picked == r && start + n - last >= threshold {
            return true;
        }
    }
    false
}

/// Four occurrences of `color` pairwise at circular distance `>= ceil(alpha N)`.
pub fn is_spread_out(q: &WitnessList, color: usize, alpha: f64) -> bool {
    let n = q.len();
    if n == 0 {
        return false;
    }
    has_spread_subset(q.occurrences(color), n, spread_threshold(alpha, n), 4, true)
}

/// Circular run of witness positions `start..=end` (wrapping past `N-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexInterval {
    pub start: usize,
    pub end: usize,
}

impl IndexInterval {
    /// `(end - start) mod n`; the circular distance spanned.
    pub fn span(&self, n: usize) -> usize {
        (self.end + n - self.start) % n
    }

    pub fn contains(&self, pos: usize, n: usize) -> bool {
        (pos + n - self.start) % n <= self.span(n)
    }
}

/// For a color that is not spread out, three short runs covering all of its
/// occurrences, built from the longest color-free gap as in the classical
/// argument. Each run spans at most `ceil(alpha N) - 1 < alpha N` positions.
/// `None` when the color is spread out.
///
/// The two outcomes are complementary whenever `alpha < 1/8`.
pub fn three_interval_cover(q: &WitnessList, color: usize, alpha: f64) -> Option<Vec<IndexInterval>> {
    let n = q.len();
    let occ = q.occurrences(color);
    if occ.is_empty() {
        return Some(Vec::new());
    }
    if is_spread_out(q, color, alpha) {
        return None;
    }
    let t = spread_threshold(alpha, n);
    let k = occ.len();
    // longest color-free gap runs from occ[a] to occ[b]
    let gap = |i: usize| if k == 1 { n } else { (occ[(i + 1) % k] + n - occ[i]) % n };
    let a = (0..k).max_by(|&x, &y| gap(x).cmp(&gap(y)).then(y.cmp(&x))).unwrap();
    let b = (a + 1) % k;
    // occurrences in order along the complement of the gap, as offsets from occ[b]
    let w: Vec<usize> = (0..k).map(|i| (occ[(b + i) % k] + n - occ[b]) % n).collect();
    let last = k - 1;
    let b_far = w.iter().rposition(|&x| x < t).unwrap();
    let a_far = w.iter().position(|&x| w[last] - x < t).unwrap();
    let run = |i: usize, j: usize| IndexInterval {
        start: (occ[b] + w[i]) % n,
        end: (occ[b] + w[j]) % n,
    };
    let mut cover = vec![run(0, b_far)];
    if a_far > b_far + 1 {
        let c = a_far - 1;
        let d = b_far + 1;
        if w[c] - w[d] >= t {
            return None;
        }
        cover.push(run(d, c));
    }
    cover.push(run(a_far, last));
    cover.dedup();
    if cover.len() > 1 && cover[0] == *cover.last().unwrap() {
        cover.pop();
    }
    Some(cover)
}

/// Four separator indices `a < b < c < d`, each in `[0, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeparatorQuadruple {
    pub indices: [usize; 4],
}

impl SeparatorQuadruple {
    pub fn new(indices: [usize; 4], n: usize) -> Result<Self> {
        let [a, b, c, d] = indices;
        if !(a < b && b < c && c < d && d < n) {
            return Err(Error::arg(format!("invalid separator quadruple {indices:?} for N = {n}")));
        }
        Ok(SeparatorQuadruple { indices })
    }

    /// The four witness runs `[a, b-1]`, `[b, c-1]`, `[c, d-1]`, `[d, a-1]`.
    pub fn runs(&self, n: usize) -> [IndexInterval; 4] {
        let [a, b, c, d] = self.indices;
        let before = |x: usize| (x + n - 1) % n;
        [
            IndexInterval { start: a, end: before(b) },
            IndexInterval { start: b, end: before(c) },
            IndexInterval { start: c, end: before(d) },
            IndexInterval { start: d, end: before(a) },
        ]
    }
}

/// True iff each of the four runs cut by `quad` contains `color`.
pub fn quadruple_pierces(q: &WitnessList, quad: &SeparatorQuadruple, color: usize) -> bool {
    let n = q.len();
    let occ = q.occurrences(color);
    if occ.len() < 4 {
        return false;
    }
    let [a, _, _, d] = quad.indices;
    quad.runs(n).iter().enumerate().all(|(i, run)| {
        if i < 3 {
            // non-wrapping run [start, end]
            let p = occ.partition_point(|&x| x < run.start);
            p < occ.len() && occ[p] <= run.end
        } else {
            occ.first().is_some_and(|&x| x < a) || occ.last().is_some_and(|&x| x >= d)
        }
    })
}

/// Gap index containing separator `s`: gap `t` holds separators in
/// `(occ[t-1], occ[t]]`, with gap 0 wrapping around.
#[inline]
fn gap_of(occ: &[usize], s: usize) -> usize {
    let p = occ.partition_point(|&x| x < s);
    if p == occ.len() {
        0
    } else {
        p
    }
}

/// Pierced colors for `quad`: a color is pierced iff the four separators fall
/// into four distinct gaps between its occurrences.
pub fn pierced_count(q: &WitnessList, quad: &SeparatorQuadruple) -> usize {
    (0..q.n_colors()).filter(|&c| pierces_by_gaps(q.occurrences(c), &quad.indices)).count()
}

fn pierces_by_gaps(occ: &[usize], idx: &[usize; 4]) -> bool {
    if occ.len() < 4 {
        return false;
    }
    let g = idx.map(|s| gap_of(occ, s));
    g[0] != g[1] && g[0] != g[2] && g[0] != g[3] && g[1] != g[2] && g[1] != g[3] && g[2] != g[3]
}

fn gap_sizes(occ: &[usize], n: usize) -> Vec<u128> {
    let k = occ.len();
    (0..k)
        .map(|t| {
            if t == 0 {
                (occ[0] + n - occ[k - 1]) as u128
            } else {
                (occ[t] - occ[t - 1]) as u128
            }
        })
        .collect()
}

/// Elementary symmetric polynomials `e_0..=e_4` of `values`.
fn elementary4(values: impl IntoIterator<Item = u128>) -> [u128; 5] {
    let mut e = [1u128, 0, 0, 0, 0];
    for v in values {
        for j in (1..5).rev() {
            e[j] += e[j - 1] * v;
        }
    }
    e
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of separator quadruples piercing `color` (exact).
pub fn piercing_quadruple_count(q: &WitnessList, color: usize) -> u128 {
    let occ = q.occurrences(color);
    if occ.len() < 4 {
        return 0;
    }
    elementary4(gap_sizes(occ, q.len()))[4]
}

/// Exact mean number of pierced colors over all `C(N,4)` quadruples, as
/// `(total, quadruple_count)`.
pub fn pierced_mean_exact(q: &WitnessList) -> (u128, u128) {
    let total = (0..q.n_colors()).map(|c| piercing_quadruple_count(q, c)).sum();
    (total, binomial(q.len() as u128, 4))
}

pub fn expected_pierced(q: &WitnessList) -> f64 {
    let (t, d) = pierced_mean_exact(q);
    if d == 0 {
        0.0
    } else {
        t as f64 / d as f64
    }
}

/// `ceil(expected_pierced)`, computed in integers.
pub fn expected_pierced_ceil(q: &WitnessList) -> u64 {
    let (t, d) = pierced_mean_exact(q);
    if d == 0 {
        0
    } else {
        t.div_ceil(d) as u64
    }
}

/// A quadruple piercing at least the mean number of colors, chosen by the
/// method of conditional expectations (exact integer arithmetic).
pub fn derandomized_quadruple(q: &WitnessList) -> Result<SeparatorQuadruple> {
    let n = q.len();
    if n < 4 {
        return Err(Error::InsufficientWitnesses(n));
    }
    struct ColorState<'a> {
        occ: &'a [usize],
        sizes: Vec<u128>,
        used: Vec<usize>,
        dead: bool,
    }
    let mut states: Vec<ColorState> = (0..q.n_colors())
        .filter_map(|c| {
            let occ = q.occurrences(c);
            (occ.len() >= 4).then(|| ColorState {
                occ,
                sizes: gap_sizes(occ, n),
                used: Vec::new(),
                dead: false,
            })
        })
        .collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(4);
    let mut diff = vec![0i128; n + 1];
    for step in 0..4 {
        let need = 3 - step; // separators still to place after this one
        diff.iter_mut().for_each(|v| *v = 0);
        for st in states.iter().filter(|s| !s.dead) {
            let e = elementary4(
                st.sizes.iter().enumerate().filter(|(t, _)| !st.used.contains(t)).map(|(_, &g)| g),
            );
            let k = st.occ.len();
            for t in 0..k {
                if st.used.contains(&t) {
                    continue;
                }
                // e_need of the unused gaps other than t
                let g = st.sizes[t] as i128;
                let mut rest = 1i128;
                for e_j in e.iter().take(need + 1).skip(1) {
                    rest = *e_j as i128 - g * rest;
                }
                if rest == 0 {
                    continue;
                }
                let mut add = |lo: usize, hi: usize| {
                    diff[lo] += rest;
                    diff[hi + 1] -= rest;
                };
                if t == 0 {
                    add(0, st.occ[0]);
                    if st.occ[k - 1] + 1 < n {
                        add(st.occ[k - 1] + 1, n - 1);
                    }
                } else {
                    add(st.occ[t - 1] + 1, st.occ[t]);
                }
            }
        }
        let mut best: Option<(i128, usize)> = None;
        let mut acc = 0i128;
        for (s, d) in diff.iter().take(n).enumerate() {
            acc += d;
            if chosen.contains(&s) {
                continue;
            }
            if best.is_none_or(|(v, _)| acc > v) {
                best = Some((acc, s));
            }
        }
        let s = best.unwrap().1;
        chosen.push(s);
        for st in states.iter_mut().filter(|s| !s.dead) {
            let g = gap_of(st.occ, s);
            if st.used.contains(&g) {
                st.dead = true;
            } else {
                st.used.push(g);
            }
        }
    }
    chosen.sort_unstable();
    SeparatorQuadruple::new([chosen[0], chosen[1], chosen[2], chosen[3]], n)
}

/// Crossing of the diagonals `y_a y_c` and `y_b y_d` of the separator
/// quadrilateral. Adjacent separators at the same angle (zero-length gaps)
/// collapse the crossing onto that curve point.
pub fn piercing_point(curve: &CurveModel, q: &WitnessList, quad: &SeparatorQuadruple) -> Result<Point2> {
    let n = q.len();
    if n < 4 {
        return Err(Error::InsufficientWitnesses(n));
    }
    if quad.indices.iter().any(|&i| i >= n) {
        return Err(Error::arg("quadruple index out of range"));
    }
    let ang = quad.indices.map(|i| q.separator_angle(i));
    let tol = curve.angle_tol();
    let close = |x: f64, y: f64| {
        let d = (x - y).abs();
        d.min(TAU - d) <= tol
    };
    if ang.iter().all(|&t| close(t, ang[0])) {
        return Err(Error::DegenerateQuadruple(quad.indices));
    }
    for i in 0..4 {
        if ang[i] == ang[(i + 1) % 4] {
            return Ok(curve.point_at(ang[i]));
        }
    }
    let y = ang.map(|t| curve.point_at(t));
    segment_intersection(y[0], y[2], y[1], y[3]).ok_or(Error::DegenerateQuadruple(quad.indices))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum SearchStrategy {
    /// Every quadruple when `N <= 60`; otherwise sampled with seed 0.
    Exhaustive,
    /// Uniform samples from a seeded stream, plus the derandomized quadruple.
    Random { trials: usize, seed: u64 },
    /// Method of conditional expectations only.
    Derandomized,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HeavyPoint {
    pub z: Point2,
    /// Bodies containing `z`, recounted geometrically.
    pub covered: usize,
    pub quadruple: SeparatorQuadruple,
    /// Colors pierced by `quadruple`.
    pub pierced: usize,
    /// Quadruples evaluated.
    pub evaluated: u64,
    pub mean_pierced: f64,
    pub mean_pierced_ceil: u64,
    /// Spread-out colors at the given `alpha`.
    pub spread_out: usize,
    /// `24 alpha^3 (1 - 3 alpha)` times the spread-out count.
    pub expected_lower_bound: f64,
    /// Whether `z` came from the all-coincident fallback.
    pub fallback: bool,
}

fn for_each_quadruple(n: usize, mut f: impl FnMut([usize; 4])) {
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    f([a, b, c, d]);
                }
            }
        }
    }
}

/// Searches separator quadruples for one piercing many colors and returns the
/// diagonal crossing `z` with its geometric coverage.
pub fn find_heavy_point(
    q: &WitnessList,
    bodies: &[ConvexBody],
    curve: &CurveModel,
    strategy: SearchStrategy,
    alpha: f64,
) -> Result<HeavyPoint> {
    let n = q.len();
    if n < 4 {
        return Err(Error::InsufficientWitnesses(n));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::arg(format!("alpha must lie in (0,1), got {alpha}")));
    }
    let live: Vec<&[usize]> = (0..q.n_colors()).map(|c| q.occurrences(c)).filter(|o| o.len() >= 4).collect();
    let score = |idx: &[usize; 4]| live.iter().filter(|occ| pierces_by_gaps(occ, idx)).count();

    let mut best: Option<(usize, [usize; 4])> = None;
    let mut evaluated = 0u64;
    let consider = |idx: [usize; 4], best: &mut Option<(usize, [usize; 4])>| {
        let s = score(&idx);
        if best.is_none_or(|(b, _)| s > b) {
            *best = Some((s, idx));
        }
    };
    let strategy = match strategy {
        SearchStrategy::Exhaustive if n > EXHAUSTIVE_MAX_N => SearchStrategy::Random {
            trials: FALLBACK_TRIALS,
            seed: 0,
        },
        s => s,
    };
    match strategy {
        SearchStrategy::Exhaustive => {
            for_each_quadruple(n, |idx| {
                evaluated += 1;
                consider(idx, &mut best);
            });
        }
        SearchStrategy::Random { trials, seed } => {
            consider(derandomized_quadruple(q)?.indices, &mut best);
            evaluated += 1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let mut v = sample(&mut rng, n, 4).into_vec();
                v.sort_unstable();
                consider([v[0], v[1], v[2], v[3]], &mut best);
                evaluated += 1;
            }
        }
        SearchStrategy::Derandomized => {
            consider(derandomized_quadruple(q)?.indices, &mut best);
            evaluated += 1;
        }
    }
    let (pierced, idx) = best.expect("at least one quadruple evaluated");
    let quadruple = SeparatorQuadruple::new(idx, n)?;
    let (z, fallback) = match piercing_point(curve, q, &quadruple) {
        Ok(z) => (z, false),
        Err(Error::DegenerateQuadruple(_)) => (curve.point_at(q.separator_angle(idx[1])), true),
        Err(e) => return Err(e),
    };
    let covered = bodies.iter().filter(|b| body_contains(b, z, TOL_GEOM)).count();
    let spread_out = (0..q.n_colors()).filter(|&c| is_spread_out(q, c, alpha)).count();
    Ok(HeavyPoint {
        z,
        covered,
        quadruple,
        pierced,
        evaluated,
        mean_pierced: expected_pierced(q),
        mean_pierced_ceil: expected_pierced_ceil(q),
        spread_out,
        expected_lower_bound: random_quadruple_bound(alpha) * spread_out as f64,
        fallback,
    })
}

/// `24 alpha^3 (1 - 3 alpha)`: lower bound on the chance that a random
/// quadruple pierces a given spread-out color.
pub fn random_quadruple_bound(alpha: f64) -> f64 {
    24.0 * alpha.powi(3) * (1.0 - 3.0 * alpha)
}

/// `24 alpha^3 (1 - 3 alpha) (1 - 3 sqrt(3 alpha))`, the pierced fraction
/// guaranteed for pairwise-meeting families.
pub fn case_a_constant(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0 / 3.0) {
        return Err(Error::arg(format!("alpha must lie in (0, 1/3), got {alpha}")));
    }
    Ok(random_quadruple_bound(alpha) * (1.0 - 3.0 * (3.0 * alpha).sqrt()))
}

/// `(1 - gamma/2) / (1 - 3 gamma / 20)`: the bound on the non-spread color
/// fraction `k` when a `gamma` fraction of pairs meet.
pub fn not_spread_fraction_bound(gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::arg(format!("gamma must lie in (0, 1), got {gamma}")));
    }
    Ok((1.0 - gamma / 2.0) / (1.0 - 3.0 * gamma / 20.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Witness list over `n_positions` slots where `color 0` sits at `positions`
    /// and the other slots are filled by pairs of filler colors.
    pub(crate) fn list_with_color(n: usize, positions: &[usize]) -> WitnessList {
        let mut entries = Vec::new();
        let mut next = 1;
        for pos in 0..n {
            let colors = if positions.contains(&pos) {
                (0, next)
            } else {
                (next, next + 1)
            };
            next += 2;
            entries.push(WitnessPoint {
                angle: TAU * pos as f64 / n as f64,
                colors,
            });
        }
        WitnessList::new(next + 1, entries).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(circ_distance(2, 9, 10).unwrap(), 3);
        assert_eq!(circ_distance(4, 4, 10).unwrap(), 0);
        assert_eq!(circ_distance(0, 5, 10).unwrap(), 5);
        assert!(circ_distance(0, 0, 0).is_err());
    }

    #[test]
    fn threshold_ignores_float_noise() {
        assert_eq!(spread_threshold(0.1, 40), 4);
        assert_eq!(spread_threshold(0.2, 40), 8);
        assert_eq!(spread_threshold(0.027, 100), 3);
    }

    #[test]
    fn spread_examples() {
        let q = list_with_color(40, &[0, 10, 20, 30]);
        assert!(is_spread_out(&q, 0, 0.2));
        let q = list_with_color(40, &[0, 10, 20]);
        assert!(!is_spread_out(&q, 0, 0.2));
        let q = list_with_color(100, &[0, 1, 2, 3]);
        assert!(!is_spread_out(&q, 0, 0.1));
        assert!(!is_spread_out(&q, 12345, 0.1));
    }

    #[test]
    fn cover_examples() {
        let q = list_with_color(100, &[0, 1, 2, 3]);
        let cover = three_interval_cover(&q, 0, 0.1).unwrap();
        assert_eq!(cover, vec![IndexInterval { start: 0, end: 3 }]);
        let q = list_with_color(40, &[0, 10, 20, 30]);
        assert_eq!(three_interval_cover(&q, 0, 0.2), None);
        // three clusters, wrapping
        let q = list_with_color(60, &[58, 59, 1, 20, 21, 40]);
        let cover = three_interval_cover(&q, 0, 0.1).unwrap();
        assert_eq!(cover.len(), 3);
        for &p in q.occurrences(0) {
            assert!(cover.iter().any(|iv| iv.contains(p, 60)));
        }
        assert!(cover.iter().all(|iv| iv.span(60) < 6));
    }

    #[test]
    fn pierce_examples() {
        let q = list_with_color(40, &[0, 10, 20, 30]);
        let quad = SeparatorQuadruple::new([5, 15, 25, 35], 40).unwrap();
        assert!(quadruple_pierces(&q, &quad, 0));
        let single = list_with_color(8, &[3]);
        for_each_quadruple(8, |idx| {
            assert!(!quadruple_pierces(&single, &SeparatorQuadruple::new(idx, 8).unwrap(), 0));
        });
    }

    #[test]
    fn pierce_count_n8_enumerated() {
        let q = list_with_color(8, &[0, 2, 4, 6]);
        let mut hits = 0;
        let mut total = 0;
        for_each_quadruple(8, |idx| {
            total += 1;
            if quadruple_pierces(&q, &SeparatorQuadruple::new(idx, 8).unwrap(), 0) {
                hits += 1;
            }
        });
        assert_eq!((hits, total), (16, 70));
        assert_eq!(piercing_quadruple_count(&q, 0), 16);
    }

    #[test]
    fn quadruple_validation() {
        assert!(SeparatorQuadruple::new([0, 1, 2, 3], 4).is_ok());
        assert!(SeparatorQuadruple::new([0, 1, 1, 3], 4).is_err());
        assert!(SeparatorQuadruple::new([0, 1, 2, 4], 4).is_err());
    }

    #[test]
    fn piercing_point_examples() {
        let c = CurveModel::unit_circle();
        let q = list_with_color(4, &[]);
        // witnesses at 0, π/2, π, 3π/2 ⇒ separators at -π/4, π/4, 3π/4, 5π/4
        let quad = SeparatorQuadruple::new([0, 1, 2, 3], 4).unwrap();
        let z = piercing_point(&c, &q, &quad).unwrap();
        assert!(z.norm() < 1e-12);

        // separators at 0, π/2, π, 5π/4 by construction of the witness angles
        let angles = [0.25, 0.75 * std::f64::consts::PI, 1.125 * std::f64::consts::PI, 1.5 * std::f64::consts::PI];
        let sep = [0.0, std::f64::consts::FRAC_PI_2, std::f64::consts::PI, 1.25 * std::f64::consts::PI];
        let entries = (0..4)
            .map(|i| WitnessPoint {
                angle: angles[i],
                colors: (2 * i, 2 * i + 1),
            })
            .collect();
        let _ = sep;
        let q = WitnessList::new(8, entries).unwrap();
        let quad = SeparatorQuadruple::new([0, 1, 2, 3], 4).unwrap();
        let ys: Vec<Point2> = (0..4).map(|i| c.point_at(q.separator_angle(i))).collect();
        let direct = segment_intersection(ys[0], ys[2], ys[1], ys[3]).unwrap();
        let z = piercing_point(&c, &q, &quad).unwrap();
        assert!(z.dist(direct) < 1e-15);
        assert!(z.norm() < 1.0);
    }

    #[test]
    fn coincident_separators() {
        let c = CurveModel::unit_circle();
        let entries = (0..5)
            .map(|i| WitnessPoint {
                angle: 1.0,
                colors: (0, i + 1),
            })
            .collect();
        let q = WitnessList::new(6, entries).unwrap();
        // separators 1..4 sit at angle 1.0, separator 0 opposite
        let quad = SeparatorQuadruple::new([1, 2, 3, 4], 5).unwrap();
        assert!(matches!(piercing_point(&c, &q, &quad), Err(Error::DegenerateQuadruple(_))));
        let quad = SeparatorQuadruple::new([0, 2, 3, 4], 5).unwrap();
        let z = piercing_point(&c, &q, &quad).unwrap();
        assert!(z.dist(c.point_at(1.0)) < 1e-15);
    }

    #[test]
    fn constants() {
        let v = case_a_constant(0.027).unwrap();
        assert!((v - 6.346305171942171e-05).abs() < 1e-15);
        assert!(v >= 1.0 / 15800.0);
        assert!(case_a_constant(1e-9).unwrap() < 1e-20);
        assert!(case_a_constant(0.0).is_err());
        assert!(case_a_constant(0.34).is_err());

        let b = not_spread_fraction_bound(1.0 - 1e-9).unwrap();
        assert!((b - 10.0 / 17.0).abs() < 1e-8 && b <= 0.75);
        let b = not_spread_fraction_bound(0.5).unwrap();
        assert!((b - 30.0 / 37.0).abs() < 1e-15 && b <= 0.875);
        assert!(not_spread_fraction_bound(1.0).is_err());
        assert!(not_spread_fraction_bound(0.0).is_err());
        for i in 1..1000 {
            let g = i as f64 / 1000.0;
            assert!(not_spread_fraction_bound(g).unwrap() <= 1.0 - g / 4.0);
        }
    }

    #[test]
    fn case_a_grid_maximizer() {
        let grid: Vec<f64> = (0..=100).map(|i| 0.022 + i as f64 * 1e-4).collect();
        let best = grid
            .iter()
            .copied()
            .max_by(|a, b| case_a_constant(*a).unwrap().total_cmp(&case_a_constant(*b).unwrap()))
            .unwrap();
        assert!((best - 0.027).abs() <= 0.005);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(4950, 4), 24_985_210_479_075);
    }

    #[test]
    fn duplicate_pairs_rejected() {
        let e = vec![
            WitnessPoint { angle: 0.0, colors: (0, 1) },
            WitnessPoint { angle: 1.0, colors: (1, 0) },
        ];
        assert!(WitnessList::new(2, e).is_err());
        let e = vec![WitnessPoint { angle: 0.0, colors: (1, 1) }];
        assert!(WitnessList::new(2, e).is_err());
    }
}
