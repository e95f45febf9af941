//! Exact densest subgraph and constrained densest subgraph via min-cut.
//!
//! The decision step follows Goldberg's reduction: for a density guess `g`
//! build a network with source arcs weighted by degree, unit arcs for graph
//! edges, and sink arcs weighted by `2g`. For a source side `S` the cut
//! value is `2|E| − 2|S|(dens(S) − g)`, so a subgraph denser than `g`
//! exists iff the minimal min-cut source side is non-empty and denser
//! than `g`. The optimum is located by binary search on the guess over
//! `[0, (n−1)/2]` down to interval width `1/(n(n−1))`, below the smallest
//! possible gap between distinct subgraph densities, followed by one final
//! cut at the proven-feasible bound.
//!
//! Constrained variants delete excluded vertices before network
//! construction and force included vertices to the source side with
//! effectively-infinite source-arc capacities.
//!
//! Ties between equal-density sets are resolved canonically (fewest
//! vertices, then lexicographically smallest id sequence) by a
//! deterministic post-pass: one min-cut per vertex at the exact optimal
//! density, each returning the inclusion-minimal optimal set through that
//! vertex (residual reachability yields the unique minimal min cut).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{rat, rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::cell::Cell;

thread_local! {
    static MAX_FLOW_RUNS: Cell<u64> = const { Cell::new(0) };
}

/// Max-flow computations performed on this thread since the last reset.
/// Bench instrumentation only; solver results never depend on it.
pub fn max_flow_runs() -> u64 {
    MAX_FLOW_RUNS.with(|c| c.get())
}

pub fn reset_max_flow_runs() {
    MAX_FLOW_RUNS.with(|c| c.set(0))
}

type Cap = u128;

/// Goldberg-style auxiliary network for one density guess.
///
/// Capacities are stored pre-scaled by the guess denominator so the cut
/// computation runs on exact integers; the rational view of an arc is its
/// stored capacity divided by [`FlowNetwork::scale`].
pub struct FlowNetwork {
    /// Original ids of the kept (non-excluded) vertices, ascending;
    /// network node `i` is `vertex_ids[i]`, then source, then sink.
    vertex_ids: Vec<u32>,
    arcs: Vec<(usize, usize, Cap)>,
    node_count: usize,
    source: usize,
    sink: usize,
    guess: Rational,
    scale: BigInt,
}

impl FlowNetwork {
    /// Builds the density-test network for `guess` on the subgraph of `g`
    /// induced by everything outside `exclude`, forcing `include` into the
    /// source side.
    pub fn goldberg(
        g: &Graph,
        include: &[u32],
        exclude: &[u32],
        guess: &Rational,
    ) -> Result<FlowNetwork> {
        if guess < &Rational::zero() {
            return Err(Error::contract("density guess must be non-negative"));
        }
        let n = g.vertex_count();
        let mut kept_mask = vec![true; n as usize];
        for &v in exclude {
            kept_mask[v as usize] = false;
        }
        let vertex_ids: Vec<u32> = (0..n).filter(|&v| kept_mask[v as usize]).collect();
        if vertex_ids.is_empty() {
            return Err(Error::Infeasible(
                "every vertex is excluded; no subgraph can exist".into(),
            ));
        }
        let mut local = vec![usize::MAX; n as usize];
        for (i, &v) in vertex_ids.iter().enumerate() {
            local[v as usize] = i;
        }

        let q = guess
            .denom()
            .to_u128()
            .ok_or_else(|| Error::contract("density guess denominator too large"))?;
        let p2 = (guess.numer() * BigInt::from(2u32))
            .to_u128()
            .ok_or_else(|| Error::contract("density guess numerator too large"))?;

        let node_count = vertex_ids.len() + 2;
        let source = vertex_ids.len();
        let sink = vertex_ids.len() + 1;

        let mut arcs: Vec<(usize, usize, Cap)> = Vec::new();
        let mut finite_total: Cap = 0;
        // unit arcs (scaled to q) in both directions per kept edge
        for (i, &v) in vertex_ids.iter().enumerate() {
            for &u in g.neighbors(v) {
                if u > v && kept_mask[u as usize] {
                    arcs.push((i, local[u as usize], q));
                    finite_total += 2 * q;
                }
            }
        }
        // degree within the kept subgraph
        let mut kept_degree = vec![0u128; vertex_ids.len()];
        for &(a, b, _) in &arcs {
            kept_degree[a] += 1;
            kept_degree[b] += 1;
        }
        for (i, _) in vertex_ids.iter().enumerate() {
            finite_total += kept_degree[i] * q + p2;
        }
        let infinite = finite_total + 1;

        let mut source_cap = vec![0u128; vertex_ids.len()];
        for (i, deg) in kept_degree.iter().enumerate() {
            source_cap[i] = deg * q;
        }
        for &v in include {
            if !kept_mask[v as usize] {
                return Err(Error::contract(format!(
                    "vertex {v} is both included and excluded"
                )));
            }
            source_cap[local[v as usize]] = infinite;
        }
        for (i, &cap) in source_cap.iter().enumerate() {
            arcs.push((source, i, cap));
        }
        for i in 0..vertex_ids.len() {
            arcs.push((i, sink, p2));
        }

        Ok(FlowNetwork {
            vertex_ids,
            arcs,
            node_count,
            source,
            sink,
            guess: guess.clone(),
            scale: BigInt::from(q),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn guess(&self) -> &Rational {
        &self.guess
    }

    /// Common denominator applied to all stored capacities.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }
}

/// Graph vertices on the source side of a minimum s–t cut, extracted as
/// residual reachability from the source after max-flow; `None` when the
/// trivial cut (source alone) is minimal.
pub fn min_cut_source_side(net: &FlowNetwork) -> Option<VertexSet> {
    let mut dinic = Dinic::new(net.node_count);
    for &(u, v, cap) in &net.arcs {
        if u == net.source || v == net.sink {
            dinic.add_arc(u, v, cap, 0);
        } else {
            // undirected graph edge: full capacity in both directions
            dinic.add_arc(u, v, cap, cap);
        }
    }
    dinic.max_flow(net.source, net.sink);
    MAX_FLOW_RUNS.with(|c| c.set(c.get() + 1));
    let reach = dinic.residual_reachable(net.source);
    let ids: Vec<u32> = net
        .vertex_ids
        .iter()
        .enumerate()
        .filter(|&(i, _)| reach[i])
        .map(|(_, &v)| v)
        .collect();
    if ids.is_empty() {
        None
    } else {
        Some(VertexSet::from_sorted(ids))
    }
}

/// Outcome of an exact densest-subgraph search.
#[derive(Clone, Debug)]
pub struct DensestResult {
    pub set: VertexSet,
    pub dens: Rational,
    /// Final `[lo, hi]` interval of the binary search; width below
    /// `1/(n(n−1))`, and zero when the optimum was pinned directly.
    pub cut_certificate: (Rational, Rational),
}

/// Densest subgraph of `g`, canonical tie-break.
pub fn densest_subgraph(g: &Graph) -> Result<DensestResult> {
    constrained_densest_subgraph(g, None, None)
}

/// Densest subgraph containing all of `include` and none of `exclude`.
pub fn constrained_densest_subgraph(
    g: &Graph,
    include: Option<&VertexSet>,
    exclude: Option<&VertexSet>,
) -> Result<DensestResult> {
    let ctx = ConstraintContext::new(g, include, exclude)?;
    search(g, &ctx, None)
}

pub(crate) struct ConstraintContext {
    include: Vec<u32>,
    exclude: Vec<u32>,
    kept_count: usize,
}

impl ConstraintContext {
    pub(crate) fn new(
        g: &Graph,
        include: Option<&VertexSet>,
        exclude: Option<&VertexSet>,
    ) -> Result<ConstraintContext> {
        let include_ids: Vec<u32> = include.map(|s| s.ids().to_vec()).unwrap_or_default();
        let exclude_ids: Vec<u32> = exclude.map(|s| s.ids().to_vec()).unwrap_or_default();
        Self::from_ids(g, include_ids, exclude_ids)
    }

    pub(crate) fn from_ids(
        g: &Graph,
        include: Vec<u32>,
        exclude: Vec<u32>,
    ) -> Result<ConstraintContext> {
        let n = g.vertex_count();
        for &v in include.iter().chain(exclude.iter()) {
            if v >= n {
                return Err(Error::contract(format!(
                    "vertex {v} out of range for a graph on {n} vertices"
                )));
            }
        }
        debug_assert!(include.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(exclude.windows(2).all(|w| w[0] < w[1]));
        let mut i = 0;
        let mut j = 0;
        while i < include.len() && j < exclude.len() {
            match include[i].cmp(&exclude[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    return Err(Error::contract(format!(
                        "vertex {} is both included and excluded",
                        include[i]
                    )))
                }
            }
        }
        let kept_count = n as usize - exclude.len();
        if kept_count == 0 {
            return Err(Error::Infeasible(
                "every vertex is excluded; no subgraph can exist".into(),
            ));
        }
        Ok(ConstraintContext {
            include,
            exclude,
            kept_count,
        })
    }

    fn network(&self, g: &Graph, guess: &Rational) -> Result<FlowNetwork> {
        FlowNetwork::goldberg(g, &self.include, &self.exclude, guess)
    }

    fn network_with_extra_include(
        &self,
        g: &Graph,
        extra: u32,
        guess: &Rational,
    ) -> Result<FlowNetwork> {
        if self.include.contains(&extra) {
            return self.network(g, guess);
        }
        let mut inc = self.include.clone();
        inc.push(extra);
        inc.sort_unstable();
        FlowNetwork::goldberg(g, &inc, &self.exclude, guess)
    }

    fn kept_vertices(&self, g: &Graph) -> Vec<u32> {
        (0..g.vertex_count())
            .filter(|v| self.exclude.binary_search(v).is_err())
            .collect()
    }
}

/// One decision cut: the minimal min-cut source side at `guess`, with its
/// exact density. A denser-than-`guess` feasible set exists iff the
/// returned side is denser than `guess`.
pub(crate) fn decision_cut(
    g: &Graph,
    ctx: &ConstraintContext,
    guess: &Rational,
) -> Result<Option<(VertexSet, Rational)>> {
    let net = ctx.network(g, guess)?;
    Ok(min_cut_source_side(&net).map(|set| {
        let dens = g.density(&set);
        (set, dens)
    }))
}

/// Canonical representative of the feasible sets with density exactly
/// `target`: fewest vertices, then lexicographically smallest. `None` when
/// no feasible set attains `target`.
///
/// With a non-empty include the answer needs one cut: optimal feasible
/// sets containing the include form a lattice under intersection, so the
/// minimal min cut is contained in every one of them and is therefore the
/// unique minimum-cardinality pick. With no include, one cut per vertex
/// plays the same role.
pub(crate) fn canonical_optimum_at(
    g: &Graph,
    ctx: &ConstraintContext,
    target: &Rational,
) -> Result<Option<VertexSet>> {
    if !ctx.include.is_empty() {
        let net = ctx.network(g, target)?;
        return Ok(min_cut_source_side(&net).filter(|s| &g.density(s) == target));
    }
    let mut best: Option<VertexSet> = None;
    for v in ctx.kept_vertices(g) {
        let net = ctx.network_with_extra_include(g, v, target)?;
        let side = match min_cut_source_side(&net) {
            Some(side) => side,
            None => continue,
        };
        if &g.density(&side) != target {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (side.len(), side.ids()) < (b.len(), b.ids()),
        };
        if better {
            best = Some(side);
        }
    }
    Ok(best)
}

/// Shared search engine: binary search for the optimal density, then the
/// canonical tie-break pass at the exact optimum. `known_feasible` seeds
/// the lower bound with a density already proven attainable.
pub(crate) fn search(
    g: &Graph,
    ctx: &ConstraintContext,
    known_feasible: Option<&Rational>,
) -> Result<DensestResult> {
    let n_kept = ctx.kept_count as i64;
    let mut lo = known_feasible.cloned().unwrap_or_else(Rational::zero);
    let mut hi = rat(n_kept - 1, 2).max(lo.clone());
    if n_kept >= 2 {
        let sep = rat(1, n_kept * (n_kept - 1));
        while &hi - &lo >= sep {
            let mid = (&lo + &hi) / rat_int(2);
            match decision_cut(g, ctx, &mid)? {
                Some((_, dens)) if dens > mid => lo = mid,
                _ => hi = mid,
            }
        }
    }
    let optimum = match decision_cut(g, ctx, &lo)? {
        Some((_, dens)) if dens > lo => dens,
        _ => lo.clone(),
    };
    let set = canonical_optimum_at(g, ctx, &optimum)?.ok_or_else(|| {
        Error::Infeasible("no feasible subgraph attains the computed optimum".into())
    })?;
    debug_assert_eq!(g.density(&set), optimum);
    Ok(DensestResult {
        set,
        dens: optimum,
        cut_certificate: (lo, hi),
    })
}

/// Greedy peeling baseline: repeatedly delete a minimum-degree vertex and
/// return the densest prefix encountered. 1/2-approximation, used only to
/// cross-check the flow solver.
pub fn greedy_peel(g: &Graph) -> Result<DensestResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::contract("graph must have at least one vertex"));
    }
    let mut alive = vec![true; n as usize];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut edges_left = g.edge_count();
    let mut vertices_left = n as usize;

    let mut best_set: Vec<u32> = (0..n).collect();
    let mut best = Rational::new(BigInt::from(edges_left), BigInt::from(vertices_left));

    while vertices_left > 1 {
        let victim = (0..n)
            .filter(|&v| alive[v as usize])
            .min_by_key(|&v| (degree[v as usize], v))
            .expect("a live vertex exists");
        alive[victim as usize] = false;
        edges_left -= degree[victim as usize];
        vertices_left -= 1;
        for &u in g.neighbors(victim) {
            if alive[u as usize] {
                degree[u as usize] -= 1;
            }
        }
        let dens = Rational::new(BigInt::from(edges_left), BigInt::from(vertices_left));
        if dens > best {
            best = dens;
            best_set = (0..n).filter(|&v| alive[v as usize]).collect();
        }
    }

    let set = VertexSet::from_sorted(best_set);
    debug_assert_eq!(g.density(&set), best);
    Ok(DensestResult {
        set,
        dens: best.clone(),
        cut_certificate: (best.clone(), best),
    })
}

// ---------------------------------------------------------------------------
// Dinic max-flow on integer capacities
// ---------------------------------------------------------------------------

struct Dinic {
    to: Vec<u32>,
    cap: Vec<Cap>,
    head: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Dinic {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![-1; n],
            iter: vec![0; n],
        }
    }

    /// Adds the arc pair `u→v` / `v→u`; paired arcs are mutual residuals.
    fn add_arc(&mut self, u: usize, v: usize, cap_uv: Cap, cap_vu: Cap) {
        let e = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(cap_uv);
        self.head[u].push(e);
        self.to.push(u as u32);
        self.cap.push(cap_vu);
        self.head[v].push(e + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: Cap) -> Cap {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]] as usize;
            let v = self.to[e] as usize;
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> Cap {
        let mut flow: Cap = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(s, t, Cap::MAX);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }

    /// Vertices reachable from `s` via positive residual capacity: the
    /// source side of the unique minimal min cut.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn vs(ids: &[u32]) -> VertexSet {
        VertexSet::new(ids.to_vec()).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// K4 on 0..4 disjoint from K3 on 4..7.
    fn k4_plus_k3() -> Graph {
        let mut edges = Vec::new();
        for u in 0..4u32 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        edges.extend([(4, 5), (4, 6), (5, 6)]);
        Graph::from_edges(7, &edges).unwrap()
    }

    #[test]
    fn min_cut_side_on_k3_tracks_the_guess() {
        let g = complete(3);
        let net = FlowNetwork::goldberg(&g, &[], &[], &Rational::zero()).unwrap();
        assert_eq!(min_cut_source_side(&net), Some(vs(&[0, 1, 2])));

        let net = FlowNetwork::goldberg(&g, &[], &[], &rat_int(2)).unwrap();
        assert_eq!(min_cut_source_side(&net), None);

        let single = Graph::from_edges(1, &[]).unwrap();
        let net = FlowNetwork::goldberg(&single, &[], &[], &rat(1, 2)).unwrap();
        assert_eq!(min_cut_source_side(&net), None);
    }

    #[test]
    fn densest_subgraph_fixtures() {
        // K4 plus one isolated vertex
        let mut edges = Vec::new();
        for u in 0..4u32 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        let r = densest_subgraph(&g).unwrap();
        assert_eq!(r.set, vs(&[0, 1, 2, 3]));
        assert_eq!(r.dens, rat(3, 2));

        // triangle plus pendant: ties at density 1, smaller set wins
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = densest_subgraph(&g).unwrap();
        assert_eq!(r.set, vs(&[0, 1, 2]));
        assert_eq!(r.dens, rat_int(1));

        // edgeless graph: lexicographic-least singleton
        let g = Graph::from_edges(3, &[]).unwrap();
        let r = densest_subgraph(&g).unwrap();
        assert_eq!(r.set, vs(&[0]));
        assert_eq!(r.dens, rat_int(0));
    }

    #[test]
    fn certificate_interval_is_narrow() {
        let g = complete(5);
        let r = densest_subgraph(&g).unwrap();
        let (lo, hi) = r.cut_certificate;
        assert!(lo <= r.dens);
        assert!(&hi - &lo < rat(1, 20));
    }

    #[test]
    fn constrained_solver_fixtures() {
        let g = k4_plus_k3();
        // forced to contain vertex 4: the whole graph is the best superset
        // (9 edges over 7 vertices beats any smaller candidate containing 4)
        let r = constrained_densest_subgraph(&g, Some(&vs(&[4])), None).unwrap();
        assert_eq!(r.dens, rat(9, 7));
        assert_eq!(r.set, vs(&[0, 1, 2, 3, 4, 5, 6]));

        // excluding 0 leaves two density-1 triangles; canonical pick
        let r = constrained_densest_subgraph(&g, None, Some(&vs(&[0]))).unwrap();
        assert_eq!(r.dens, rat_int(1));
        assert_eq!(r.set, vs(&[1, 2, 3]));

        let err = constrained_densest_subgraph(&g, Some(&vs(&[0])), Some(&vs(&[0]))).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn constrained_solver_rejects_excluding_everything() {
        let g = complete(3);
        let err =
            constrained_densest_subgraph(&g, None, Some(&vs(&[0, 1, 2]))).unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }

    #[test]
    fn constraints_are_always_honored() {
        let g = k4_plus_k3();
        let r = constrained_densest_subgraph(&g, Some(&vs(&[6])), Some(&vs(&[0, 5]))).unwrap();
        assert!(r.set.contains(6));
        assert!(!r.set.contains(0) && !r.set.contains(5));
        // dominance: unconstrained optimum is at least as dense
        let full = densest_subgraph(&g).unwrap();
        assert!(full.dens >= r.dens);
    }

    #[test]
    fn greedy_peel_fixtures() {
        let g = complete(5);
        let r = greedy_peel(&g).unwrap();
        assert_eq!(r.dens, rat_int(2));
        assert_eq!(r.set.len(), 5);

        let g = Graph::from_edges(4, &[]).unwrap();
        let r = greedy_peel(&g).unwrap();
        assert_eq!(r.dens, rat_int(0));
    }

    #[test]
    fn flow_run_counter_increments() {
        reset_max_flow_runs();
        let g = complete(4);
        densest_subgraph(&g).unwrap();
        assert!(max_flow_runs() > 0);
    }
}
