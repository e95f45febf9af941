//! Brute-force ground truth for desk-scale instances: exact densest
//! subgraph, exact densest-distinct subgraph, and exact top-k by
//! exhaustive enumeration over vertex-set bitmasks.
//!
//! Budgets are enforced up front and loudly; a silently truncated oracle
//! would be worse than none.

use crate::error::{Error, Result};
use crate::flow::DensestResult;
use crate::graph::{Graph, SubgraphCollection, VertexSet};
use crate::rational::Rational;
use crate::topk::{AlgorithmId, SolveReport};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use std::time::Instant;

/// Enumeration limits. `max_vertices` caps subset enumeration (2^n − 1
/// sets); `max_collections` caps the number of k-element collections in
/// the top-k sweep. Collections of more than three subgraphs additionally
/// cap the vertex count at 5.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_vertices: u32,
    pub max_collections: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 7,
            max_collections: 2_000_000,
        }
    }
}

impl OracleBudget {
    pub fn with_max_vertices(max_vertices: u32) -> Self {
        OracleBudget {
            max_vertices,
            ..OracleBudget::default()
        }
    }

    fn check_vertices(&self, n: u32, cap: u32) -> Result<()> {
        if n > cap {
            return Err(Error::BudgetExceeded(format!(
                "graph has {n} vertices, oracle budget allows {cap}"
            )));
        }
        Ok(())
    }
}

/// Per-mask edge counts for all 2^n subsets, computed incrementally from
/// adjacency bitmasks.
fn subset_edge_counts(g: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = g.vertex_count() as usize;
    let mut adj = vec![0u32; n];
    for v in 0..n {
        for &u in g.neighbors(v as u32) {
            adj[v] |= 1 << u;
        }
    }
    let mut edges = vec![0u32; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        edges[mask] = edges[rest] + (adj[low] & rest as u32).count_ones();
    }
    (edges, adj.iter().map(|&a| a).collect())
}

fn mask_to_set(mask: u32) -> VertexSet {
    let ids: Vec<u32> = (0..32).filter(|b| mask & (1 << b) != 0).collect();
    VertexSet::new(ids).expect("non-zero mask")
}

fn set_to_mask(s: &VertexSet) -> u32 {
    s.ids().iter().fold(0u32, |m, &v| m | (1 << v))
}

/// `(edges, size)` beats the incumbent when denser, or equally dense and
/// canonically smaller (fewer vertices, then lexicographically least ids).
fn beats(edges: u32, mask: u32, best_edges: u32, best_mask: u32) -> bool {
    let (c, bc) = (mask.count_ones() as u64, best_mask.count_ones() as u64);
    let lhs = edges as u64 * bc;
    let rhs = best_edges as u64 * c;
    if lhs != rhs {
        return lhs > rhs;
    }
    if c != bc {
        return c < bc;
    }
    mask_to_set(mask).ids() < mask_to_set(best_mask).ids()
}

/// Exhaustive densest subgraph: the canonical maximizer over all 2^n − 1
/// non-empty subsets.
pub fn oracle_densest(g: &Graph, budget: &OracleBudget) -> Result<DensestResult> {
    oracle_densest_excluding(g, &[], budget)
}

/// Exhaustive densest subgraph distinct from every member of `w`.
pub fn oracle_densest_distinct(
    g: &Graph,
    w: &SubgraphCollection,
    budget: &OracleBudget,
) -> Result<DensestResult> {
    g.validate_collection(w)?;
    let masks: Vec<u32> = w.members().iter().map(set_to_mask).collect();
    let n = g.vertex_count();
    if n <= 31 && masks.len() as u64 >= (1u64 << n) - 1 {
        return Err(Error::contract(
            "the collection already contains every non-empty subset",
        ));
    }
    oracle_densest_excluding(g, &masks, budget)
}

fn oracle_densest_excluding(
    g: &Graph,
    excluded: &[u32],
    budget: &OracleBudget,
) -> Result<DensestResult> {
    let n = g.vertex_count();
    budget.check_vertices(n, budget.max_vertices)?;
    if n == 0 {
        return Err(Error::contract("graph must have at least one vertex"));
    }
    let (edge_counts, _) = subset_edge_counts(g);
    let mut best: Option<(u32, u32)> = None; // (edges, mask)
    for mask in 1u32..(1u32 << n) {
        if excluded.contains(&mask) {
            continue;
        }
        let e = edge_counts[mask as usize];
        match best {
            None => best = Some((e, mask)),
            Some((be, bm)) => {
                if beats(e, mask, be, bm) {
                    best = Some((e, mask));
                }
            }
        }
    }
    let (e, mask) = best.ok_or_else(|| {
        Error::Infeasible("no subgraph distinct from the collection exists".into())
    })?;
    let set = mask_to_set(mask);
    let dens = Rational::new(BigInt::from(e), BigInt::from(set.len()));
    Ok(DensestResult {
        set,
        dens: dens.clone(),
        cut_certificate: (dens.clone(), dens),
    })
}

/// Exact rational on i128, used in the enumeration hot path. All graph
/// quantities stay tiny under the budget; lambda is checked for headroom
/// and falls back to big-integer comparisons when enormous.
type Frac = Ratio<i128>;

fn frac(n: i128, d: i128) -> Frac {
    Ratio::new(n, d)
}

fn to_big(f: &Frac) -> Rational {
    Rational::new(BigInt::from(*f.numer()), BigInt::from(*f.denom()))
}

enum LambdaScale {
    Small(Frac),
    Big(Rational),
}

impl LambdaScale {
    fn of(lambda: &Rational) -> LambdaScale {
        let bound = BigInt::from(1i128 << 62);
        if lambda.numer().abs() < bound && lambda.denom().abs() < bound {
            LambdaScale::Small(frac(
                lambda.numer().to_i128().expect("checked bound"),
                lambda.denom().to_i128().expect("checked bound"),
            ))
        } else {
            LambdaScale::Big(lambda.clone())
        }
    }

    /// Compares `dens_a + λ·dist_a` with `dens_b + λ·dist_b`.
    fn cmp_scores(&self, a: (&Frac, &Frac), b: (&Frac, &Frac)) -> std::cmp::Ordering {
        match self {
            LambdaScale::Small(l) => (a.0 + l * a.1).cmp(&(b.0 + l * b.1)),
            LambdaScale::Big(l) => {
                let ra = to_big(a.0) + l * to_big(a.1);
                let rb = to_big(b.0) + l * to_big(b.1);
                ra.cmp(&rb)
            }
        }
    }

    fn score(&self, dens: &Frac, dist: &Frac) -> Rational {
        match self {
            LambdaScale::Small(l) => to_big(&(dens + l * dist)),
            LambdaScale::Big(l) => to_big(dens) + l * to_big(dist),
        }
    }
}

/// Exhaustive top-k: the canonical maximizer of `r` over all k-element
/// sets of distinct non-empty subsets.
pub fn oracle_topk(
    g: &Graph,
    k: usize,
    lambda: &Rational,
    budget: &OracleBudget,
) -> Result<SolveReport> {
    let start = Instant::now();
    let n = g.vertex_count();
    if k == 0 || k >= n as usize {
        return Err(Error::contract(format!(
            "instance rejected: k = {k} but the problem requires k < |V| = {n}"
        )));
    }
    if lambda <= &Rational::zero() {
        return Err(Error::contract("lambda must be positive"));
    }
    let cap = if k <= 3 {
        budget.max_vertices
    } else {
        budget.max_vertices.min(5)
    };
    budget.check_vertices(n, cap)?;

    let subset_count = (1u64 << n) - 1;
    let mut combos: u128 = 1;
    for i in 0..k as u64 {
        combos = combos * (subset_count - i) as u128 / (i as u128 + 1);
        if combos > budget.max_collections as u128 {
            return Err(Error::BudgetExceeded(format!(
                "more than {} collections to enumerate",
                budget.max_collections
            )));
        }
    }

    let (edge_counts, _) = subset_edge_counts(g);
    let total = subset_count as usize;
    // densities and pairwise distances for every non-empty mask
    let dens: Vec<Frac> = (1..=total)
        .map(|m| frac(edge_counts[m] as i128, (m as u32).count_ones() as i128))
        .collect();
    let mut dist = vec![Frac::zero(); total * total];
    for a in 0..total {
        let ma = (a + 1) as u32;
        let ca = ma.count_ones() as i128;
        for b in (a + 1)..total {
            let mb = (b + 1) as u32;
            let inter = (ma & mb).count_ones() as i128;
            let d = frac(2, 1) - frac(inter * inter, ca * mb.count_ones() as i128);
            dist[a * total + b] = d;
            dist[b * total + a] = d;
        }
    }

    let scale = LambdaScale::of(lambda);
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut best: Option<(Frac, Frac, Vec<usize>)> = None;

    // depth-first over ascending mask indices with running partial sums
    fn descend(
        level: usize,
        start: usize,
        sum_dens: Frac,
        sum_dist: Frac,
        k: usize,
        total: usize,
        dens: &[Frac],
        dist: &[Frac],
        scale: &LambdaScale,
        chosen: &mut Vec<usize>,
        best: &mut Option<(Frac, Frac, Vec<usize>)>,
    ) {
        if level == k {
            let replace = match best {
                None => true,
                Some((bd, bt, bc)) => {
                    match scale.cmp_scores((&sum_dens, &sum_dist), (&*bd, &*bt)) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => canonical_lt(chosen, bc),
                    }
                }
            };
            if replace {
                *best = Some((sum_dens, sum_dist, chosen.clone()));
            }
            return;
        }
        let remaining = k - level;
        for idx in start..=(total - remaining) {
            let mut extra = Frac::zero();
            for &c in chosen.iter() {
                extra = extra + dist[c * total + idx];
            }
            chosen.push(idx);
            descend(
                level + 1,
                idx + 1,
                sum_dens + dens[idx],
                sum_dist + extra,
                k,
                total,
                dens,
                dist,
                scale,
                chosen,
                best,
            );
            chosen.pop();
        }
    }

    descend(
        0,
        0,
        Frac::zero(),
        Frac::zero(),
        k,
        total,
        &dens,
        &dist,
        &scale,
        &mut chosen,
        &mut best,
    );

    let (sum_dens, sum_dist, indices) =
        best.ok_or_else(|| Error::Infeasible("no collection enumerated".into()))?;
    let mut members: Vec<VertexSet> = indices.iter().map(|&i| mask_to_set((i + 1) as u32)).collect();
    members.sort();
    let collection = SubgraphCollection::new(members)?;
    let report = SolveReport::assemble(
        g,
        AlgorithmId::ExactOracle,
        collection,
        lambda,
        None,
        start.elapsed(),
    )?;
    debug_assert_eq!(report.r_value, scale.score(&sum_dens, &sum_dist));
    Ok(report)
}

/// Deterministic tie-break between collections with equal score: compare
/// the sorted member sets lexicographically.
fn canonical_lt(a: &[usize], b: &[usize]) -> bool {
    let canon = |idxs: &[usize]| -> Vec<VertexSet> {
        let mut sets: Vec<VertexSet> = idxs.iter().map(|&i| mask_to_set((i + 1) as u32)).collect();
        sets.sort();
        sets
    };
    canon(a) < canon(b)
}
