#![allow(dead_code)]

use std::f64::consts::TAU;

use pierce_core::instance::arc_body;
use pierce_core::witness::WitnessPoint;
use pierce_core::{ConvexBody, CurveModel, WitnessList};
use rand::Rng;

/// `n` bodies cut from random arcs of the unit circle, lengths in `(0.2, 5.5)`.
pub fn random_arc_family(rng: &mut impl Rng, n: usize) -> Vec<ConvexBody> {
    let curve = CurveModel::unit_circle();
    (0..n)
        .map(|id| {
            let start = rng.gen_range(0.0..TAU);
            let len = rng.gen_range(0.2..5.5);
            let segments = rng.gen_range(2usize..6).max((len / 1.2f64).ceil() as usize);
            let inner = rng.gen_bool(0.5).then(|| rng.gen_range(0.0..0.9));
            arc_body(id, &curve, start, len, segments, inner).unwrap()
        })
        .collect()
}

/// Circular list of `n` witnesses where color 0 sits exactly at `positions`;
/// every other witness uses a fresh pair of colors.
pub fn list_with_color(n: usize, positions: &[usize]) -> WitnessList {
    let mut entries = Vec::with_capacity(n);
    let mut next = 1;
    for pos in 0..n {
        let colors = if positions.contains(&pos) { (0, next) } else { (next, next + 1) };
        next += 2;
        entries.push(WitnessPoint {
            angle: TAU * pos as f64 / n as f64,
            colors,
        });
    }
    WitnessList::new(next + 1, entries).unwrap()
}

pub fn circ(a: usize, b: usize, n: usize) -> usize {
    let f = (b + n - a) % n;
    f.min(n - f)
}

/// Definition-level check: some `r`-subset of `occ` is pairwise `>= t` apart.
pub fn brute_spread(occ: &[usize], n: usize, t: usize, r: usize, circular: bool) -> bool {
    fn rec(occ: &[usize], from: usize, chosen: &mut Vec<usize>, n: usize, t: usize, r: usize, circular: bool) -> bool {
        if chosen.len() == r {
            return true;
        }
        for i in from..occ.len() {
            let p = occ[i];
            let ok = chosen
                .iter()
                .all(|&c| if circular { circ(c, p, n) >= t } else { p.abs_diff(c) >= t });
            if ok {
                chosen.push(p);
                if rec(occ, i + 1, chosen, n, t, r, circular) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(occ, 0, &mut Vec::new(), n, t, r, circular)
}

/// Fewest runs of `t` consecutive positions covering `occ`, trying every
/// occurrence as the first run's start.
pub fn brute_min_cover(occ: &[usize], n: usize, t: usize, circular: bool) -> usize {
    if occ.is_empty() {
        return 0;
    }
    let starts: Vec<usize> = if circular { occ.to_vec() } else { vec![occ[0]] };
    starts
        .iter()
        .map(|&s| {
            let mut rot: Vec<usize> = occ.iter().map(|&p| if circular { (p + n - s) % n } else { p - s }).collect();
            rot.sort_unstable();
            let mut count = 0;
            let mut covered_to: Option<usize> = None;
            for p in rot {
                if covered_to.is_none_or(|e| p > e) {
                    count += 1;
                    covered_to = Some(p + t - 1);
                }
            }
            count
        })
        .min()
        .unwrap()
}

pub fn threshold(alpha: f64, n: usize) -> usize {
    ((alpha * n as f64) - 1e-9).ceil().max(1.0) as usize
}
