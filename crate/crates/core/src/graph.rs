//! The meets-on-the-curve graph and the (p,2)-condition.

use serde::{Deserialize, Serialize};

use crate::bitset::BodySet;
use crate::error::{Error, Result};
use crate::geom::{arcs_common_point, body_curve_arcs, ConvexBody, CurveModel};

/// Simple undirected graph over colors `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGraph {
    n: usize,
    adj: Vec<BodySet>,
}

impl ColorGraph {
    pub fn empty(n: usize) -> Self {
        ColorGraph {
            n,
            adj: vec![BodySet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::arg(format!("invalid edge ({a}, {b}) for n = {n}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// `g(v)`: sum of the degrees of the neighbors of `v`.
    pub fn neighbor_degree_sum(&self, v: usize) -> usize {
        self.neighbors(v).map(|w| self.degree(w)).sum()
    }
}

/// Edge iff the two bodies share a point of the curve.
pub fn build_meet_graph(bodies: &[ConvexBody], curve: &CurveModel) -> ColorGraph {
    let arcs: Vec<_> = bodies.iter().map(|b| body_curve_arcs(b, curve)).collect();
    let mut g = ColorGraph::empty(bodies.len());
    for i in 0..bodies.len() {
        for j in (i + 1)..bodies.len() {
            if arcs_common_point(&arcs[i], &arcs[j]).is_some() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Search-tree nodes allowed before [`verify_p2`] gives up.
pub const P2_NODE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P2Status {
    Holds,
    /// An independent set of size `p`: `p` bodies no two of which meet.
    Violated(Vec<usize>),
    /// Search budget exhausted.
    NotChecked,
}

impl P2Status {
    pub fn holds(&self) -> bool {
        matches!(self, P2Status::Holds)
    }
}

/// Whether among every `p` vertices two are adjacent, i.e. the graph has no
/// independent set of size `p`. Exact branch and bound with a greedy
/// clique-partition bound; vacuously true when `n < p`.
pub fn verify_p2(graph: &ColorGraph, p: usize) -> Result<P2Status> {
    if p < 2 {
        return Err(Error::arg(format!("p must be at least 2, got {p}")));
    }
    let n = graph.n();
    if n < p {
        return Ok(P2Status::Holds);
    }
    if p == 2 {
        for a in 0..n {
            for b in (a + 1)..n {
                if !graph.has_edge(a, b) {
                    return Ok(P2Status::Violated(vec![a, b]));
                }
            }
        }
        return Ok(P2Status::Holds);
    }

    // Independent sets in `graph` are cliques in the complement.
    let comp = graph.complement();
    let mut nodes = 0u64;
    let mut current = Vec::new();
    let cand = BodySet::full(n);
    match clique_search(&comp, graph, cand, p, &mut current, &mut nodes) {
        Some(true) => Ok(P2Status::Violated(current)),
        Some(false) => Ok(P2Status::Holds),
        None => Ok(P2Status::NotChecked),
    }
}

/// Looks for a clique of size `target` in `comp`. `Some(true)` if found
/// (left in `current`), `None` if the node budget ran out.
fn clique_search(
    comp: &ColorGraph,
    graph: &ColorGraph,
    cand: BodySet,
    target: usize,
    current: &mut Vec<usize>,
    nodes: &mut u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > P2_NODE_BUDGET {
        return None;
    }
    if current.len() >= target {
        return Some(true);
    }
    let need = target - current.len();
    if cand.count() < need {
        return Some(false);
    }
    // greedy partition of candidates into cliques of `graph`; a clique of
    // `comp` takes at most one vertex per part
    let mut parts: Vec<BodySet> = Vec::new();
    let mut part_of = vec![0usize; comp.n()];
    for v in cand.iter() {
        match parts.iter().position(|part| part.iter().all(|u| graph.has_edge(u, v))) {
            Some(i) => {
                parts[i].insert(v);
                part_of[v] = i;
            }
            None => {
                let mut s = BodySet::new(comp.n());
                s.insert(v);
                part_of[v] = parts.len();
                parts.push(s);
            }
        }
    }
    if parts.len() < need {
        return Some(false);
    }
    let mut rest = cand;
    let order: Vec<usize> = rest.iter().collect();
    for v in order {
        if !rest.contains(v) {
            continue;
        }
        let mut next = rest.clone();
        next.remove(v);
        let mut nbrs = BodySet::new(comp.n());
        for u in next.iter() {
            if comp.has_edge(u, v) {
                nbrs.insert(u);
            }
        }
        current.push(v);
        match clique_search(comp, graph, nbrs, target, current, nodes) {
            Some(false) => {}
            other => return other,
        }
        current.pop();
        rest.remove(v);
        let remaining_parts = rest.iter().map(|u| part_of[u]).collect::<std::collections::BTreeSet<_>>().len();
        if remaining_parts < need {
            break;
        }
    }
    Some(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuranCheck {
    pub meets: usize,
    /// `n^2 / (2p)`.
    pub bound: f64,
    pub ok: bool,
    /// `C(n,2) - t(n, p-1)`: the exact minimum number of meeting pairs, where
    /// `t(n, r)` is the edge count of the Turán graph with `r` parts.
    pub exact_bound: usize,
    pub exact_ok: bool,
}

/// Edge count of the complete `r`-partite graph on `n` vertices with parts
/// as equal as possible.
pub fn turan_edges(n: usize, r: usize) -> usize {
    if r == 0 {
        return 0;
    }
    let (q, rem) = (n / r, n % r);
    let sizes = (0..r).map(|i| q + usize::from(i < rem));
    let sum_sq: usize = sizes.map(|s| s * s).sum();
    (n * n - sum_sq) / 2
}

/// Counts meeting pairs and compares with `n^2/(2p)`. Fails with
/// [`Error::ConditionNotSatisfied`] if the (p,2)-condition does not hold.
pub fn turan_pair_check(graph: &ColorGraph, p: usize) -> Result<TuranCheck> {
    match verify_p2(graph, p)? {
        P2Status::Holds => {}
        P2Status::Violated(set) => {
            return Err(Error::ConditionNotSatisfied(format!("independent set {set:?} of size {p}")));
        }
        P2Status::NotChecked => {
            return Err(Error::ConditionNotSatisfied("independent-set search budget exhausted".into()));
        }
    }
    let n = graph.n();
    let meets = graph.edge_count();
    let bound = (n * n) as f64 / (2 * p) as f64;
    let exact_bound = n * n.saturating_sub(1) / 2 - turan_edges(n, p - 1);
    Ok(TuranCheck {
        meets,
        bound,
        ok: meets as f64 >= bound,
        exact_bound,
        exact_ok: meets >= exact_bound,
    })
}

/// A vertex maximizing `g(v)`, the sum of its neighbors' degrees.
pub fn max_neighbor_degree_sum(graph: &ColorGraph) -> Result<(usize, usize)> {
    if graph.n() == 0 {
        return Err(Error::arg("graph has no vertices"));
    }
    let mut best = (0, graph.neighbor_degree_sum(0));
    for v in 1..graph.n() {
        let g = graph.neighbor_degree_sum(v);
        if g > best.1 {
            best = (v, g);
        }
    }
    Ok(best)
}
