//! End-to-end solvers for top-k overlapping densest subgraphs.
//!
//! Two approximation routes plus dispatch:
//! * constant-k: seed with a densest subgraph, extend with optimal
//!   densest-distinct solves, then take the better of that collection and
//!   the k-singleton solution — a 2/3-approximation;
//! * general k: phase 1 extends with the no-crossing densest-distinct
//!   solver while no two members cross; once a crossing pair appears,
//!   phase 2 completes the collection from the one-vertex perturbations of
//!   the crossing pair — a 1/2-approximation;
//! * small instances route to the exhaustive oracle.

use crate::distinct::{densest_distinct_constant_k, densest_distinct_no_crossing, has_crossing_pair};
use crate::error::{Error, Result};
use crate::flow::densest_subgraph;
use crate::graph::{distance, objective, Graph, SubgraphCollection, VertexSet};
use crate::oracle::{oracle_topk, OracleBudget};
use crate::rational::{to_f64, Rational};
use num_traits::Zero;
use std::time::{Duration, Instant};

/// Which algorithm produced a report. `Singleton` marks runs where the
/// k-singletons solution beat the constant-k collection in the final max.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmId {
    ConstantK,
    General,
    Singleton,
    ExactOracle,
    Reduction,
}

impl AlgorithmId {
    pub fn as_str(&self) -> &'static str {
        match self {
            AlgorithmId::ConstantK => "constant_k",
            AlgorithmId::General => "general",
            AlgorithmId::Singleton => "singleton",
            AlgorithmId::ExactOracle => "exact_oracle",
            AlgorithmId::Reduction => "reduction",
        }
    }

    pub fn parse(s: &str) -> Option<AlgorithmId> {
        match s {
            "constant_k" => Some(AlgorithmId::ConstantK),
            "general" => Some(AlgorithmId::General),
            "singleton" => Some(AlgorithmId::Singleton),
            "exact_oracle" => Some(AlgorithmId::ExactOracle),
            "reduction" => Some(AlgorithmId::Reduction),
            _ => None,
        }
    }
}

/// Solution plus independently recomputed scores and run metadata.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub algorithm: AlgorithmId,
    pub k: usize,
    pub lambda: Rational,
    pub collection: SubgraphCollection,
    pub densities: Vec<Rational>,
    /// Upper-triangular distances as `(i, j, d)` with `i < j`.
    pub pair_distances: Vec<(usize, usize, Rational)>,
    pub r_value: Rational,
    pub r_value_float: f64,
    /// Index where phase-2 members begin (general algorithm only).
    pub phase_boundary: Option<usize>,
    pub wall_time: Duration,
}

impl SolveReport {
    /// Recomputes every score from the collection. `r_value` goes through
    /// [`objective`] so the report never trusts a solver-side total.
    pub fn assemble(
        g: &Graph,
        algorithm: AlgorithmId,
        collection: SubgraphCollection,
        lambda: &Rational,
        phase_boundary: Option<usize>,
        wall_time: Duration,
    ) -> Result<SolveReport> {
        let densities: Vec<Rational> = collection.members().iter().map(|s| g.density(s)).collect();
        let mut pair_distances = Vec::new();
        for i in 0..collection.len() {
            for j in (i + 1)..collection.len() {
                pair_distances.push((i, j, distance(collection.get(i), collection.get(j))));
            }
        }
        let r_value = objective(g, &collection, lambda)?;
        let check: Rational = densities.iter().cloned().sum::<Rational>()
            + lambda
                * pair_distances
                    .iter()
                    .map(|(_, _, d)| d.clone())
                    .sum::<Rational>();
        debug_assert_eq!(check, r_value);
        Ok(SolveReport {
            algorithm,
            k: collection.len(),
            lambda: lambda.clone(),
            r_value_float: to_f64(&r_value),
            collection,
            densities,
            pair_distances,
            r_value,
            phase_boundary,
            wall_time,
        })
    }
}

fn validate_instance(g: &Graph, k: usize, lambda: &Rational) -> Result<()> {
    let n = g.vertex_count() as usize;
    if n == 0 {
        return Err(Error::contract("graph must have at least one vertex"));
    }
    if k == 0 {
        return Err(Error::contract("k must be at least 1"));
    }
    if k >= n {
        return Err(Error::contract(format!(
            "instance rejected: k = {k} but the problem requires k < |V| = {n}"
        )));
    }
    if lambda <= &Rational::zero() {
        return Err(Error::contract("lambda must be positive"));
    }
    Ok(())
}

/// The trivial solution: the lexicographically first `k` singletons.
/// Zero total density, every pair at distance 2.
pub fn singleton_solution(g: &Graph, k: usize) -> Result<SubgraphCollection> {
    let n = g.vertex_count() as usize;
    if k == 0 || k >= n.max(1) {
        return Err(Error::contract(format!(
            "singleton solution needs 1 <= k < |V|, got k = {k}, |V| = {n}"
        )));
    }
    SubgraphCollection::new((0..k as u32).map(VertexSet::singleton).collect())
}

/// The constant-k collection before the final max: a densest subgraph
/// followed by k−1 optimal densest-distinct extensions. Densities are
/// non-increasing along the sequence.
pub fn build_constant_k_collection(g: &Graph, k: usize) -> Result<SubgraphCollection> {
    let mut members = vec![densest_subgraph(g)?.set];
    for _ in 1..k {
        let w = SubgraphCollection::new(members.clone())?;
        members.push(densest_distinct_constant_k(g, &w)?.set);
    }
    SubgraphCollection::new(members)
}

/// 2/3-approximation for constant k: the better of the constant-k
/// collection and the k-singleton solution, ties preferring the former.
pub fn solve_constant_k(g: &Graph, k: usize, lambda: &Rational) -> Result<SolveReport> {
    validate_instance(g, k, lambda)?;
    if g.vertex_count() <= 5 {
        return Err(Error::contract(
            "the approximation guarantee needs |V| > 5; use the exact oracle for smaller graphs",
        ));
    }
    let start = Instant::now();
    let dense = build_constant_k_collection(g, k)?;
    let singletons = singleton_solution(g, k)?;
    let r_dense = objective(g, &dense, lambda)?;
    let r_singletons = objective(g, &singletons, lambda)?;
    let (algorithm, winner) = if r_dense >= r_singletons {
        (AlgorithmId::ConstantK, dense)
    } else {
        (AlgorithmId::Singleton, singletons)
    };
    SolveReport::assemble(g, algorithm, winner, lambda, None, start.elapsed())
}

/// Phase-1/phase-2 collection for general k, plus the phase boundary
/// (the index where phase-2 members begin; equals `k` when phase 2 never
/// ran).
pub fn build_general_collection(g: &Graph, k: usize) -> Result<(SubgraphCollection, usize)> {
    let n = g.vertex_count();
    let mut members = vec![densest_subgraph(g)?.set];
    loop {
        if members.len() >= k {
            break;
        }
        let w = SubgraphCollection::new(members.clone())?;
        if has_crossing_pair(&w).is_some() {
            break;
        }
        members.push(densest_distinct_no_crossing(g, &w)?.set);
    }
    let boundary = members.len();
    if members.len() < k {
        let w = SubgraphCollection::new(members.clone())?;
        let (i, j) = has_crossing_pair(&w).expect("phase 1 stopped on a crossing pair");
        let (wi, wj) = (w.get(i).clone(), w.get(j).clone());
        let overlap = VertexSet::new(wi.intersection(&wj))
            .expect("crossing subgraphs have a non-empty intersection");

        let mut pool: Vec<VertexSet> = Vec::new();
        for v in 0..n {
            if let Some(s) = wi.with_vertex(v) {
                pool.push(s);
            }
        }
        for u in 0..n {
            if let Some(s) = wj.with_vertex(u) {
                pool.push(s);
            }
        }
        if overlap.len() >= 4 {
            for &x in overlap.ids() {
                if let Some(s) = wj.without_vertex(x) {
                    pool.push(s);
                }
            }
        }
        pool.sort();
        pool.dedup();
        pool.retain(|s| !members.contains(s));
        // densest first, canonical tie-break
        let mut scored: Vec<(Rational, VertexSet)> =
            pool.into_iter().map(|s| (g.density(&s), s)).collect();
        scored.sort_by(|(da, sa), (db, sb)| {
            db.cmp(da)
                .then_with(|| sa.len().cmp(&sb.len()))
                .then_with(|| sa.ids().cmp(sb.ids()))
        });
        let needed = k - members.len();
        if scored.len() < needed {
            return Err(Error::contract(format!(
                "phase-2 candidate pool exhausted: {} candidates for {} slots",
                scored.len(),
                needed
            )));
        }
        members.extend(scored.into_iter().take(needed).map(|(_, s)| s));
    }
    Ok((SubgraphCollection::new(members)?, boundary))
}

/// 1/2-approximation for general k.
pub fn solve_general(g: &Graph, k: usize, lambda: &Rational) -> Result<SolveReport> {
    validate_instance(g, k, lambda)?;
    if g.vertex_count() <= 5 {
        return Err(Error::contract(
            "the approximation guarantee needs |V| > 5; use the exact oracle for smaller graphs",
        ));
    }
    let start = Instant::now();
    let (collection, boundary) = build_general_collection(g, k)?;
    SolveReport::assemble(
        g,
        AlgorithmId::General,
        collection,
        lambda,
        Some(boundary),
        start.elapsed(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Auto,
    ConstantK,
    General,
    Oracle,
}

/// Dispatch options. The constant-k cutoff bounds the witness enumeration
/// cost (it grows as n^(k-1)); instances above it take the general route.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: SolveMode,
    pub budget: OracleBudget,
    pub constant_k_cutoff: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: SolveMode::Auto,
            budget: OracleBudget::default(),
            constant_k_cutoff: 4,
        }
    }
}

/// Routed entry point: exact oracle for desk-size instances, constant-k
/// route for small k, general route otherwise. Explicit approximation
/// modes still route |V| <= 5 to the oracle, where their guarantee
/// assumptions do not hold.
pub fn solve_with(g: &Graph, k: usize, lambda: &Rational, options: &SolveOptions) -> Result<SolveReport> {
    validate_instance(g, k, lambda)?;
    let n = g.vertex_count() as usize;
    match options.mode {
        SolveMode::Auto => {
            if n <= 5 || (n <= 7 && k <= 3) {
                oracle_topk(g, k, lambda, &options.budget)
            } else if k <= options.constant_k_cutoff {
                solve_constant_k(g, k, lambda)
            } else {
                solve_general(g, k, lambda)
            }
        }
        SolveMode::ConstantK => {
            if n <= 5 {
                oracle_topk(g, k, lambda, &options.budget)
            } else {
                solve_constant_k(g, k, lambda)
            }
        }
        SolveMode::General => {
            if n <= 5 {
                oracle_topk(g, k, lambda, &options.budget)
            } else {
                solve_general(g, k, lambda)
            }
        }
        SolveMode::Oracle => oracle_topk(g, k, lambda, &options.budget),
    }
}

pub fn solve(g: &Graph, k: usize, lambda: &Rational, mode: SolveMode) -> Result<SolveReport> {
    solve_with(
        g,
        k,
        lambda,
        &SolveOptions {
            mode,
            ..SolveOptions::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

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

    fn two_k4s() -> Graph {
        let mut edges = Vec::new();
        for base in [0u32, 4] {
            for u in 0..4 {
                for v in (u + 1)..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn singleton_solution_fixtures() {
        let g = complete(5);
        let w = singleton_solution(&g, 3).unwrap();
        assert_eq!(w.members(), &[vs(&[0]), vs(&[1]), vs(&[2])]);
        assert_eq!(objective(&g, &w, &rat_int(1)).unwrap(), rat_int(6));

        let w = singleton_solution(&g, 1).unwrap();
        assert_eq!(w.len(), 1);

        let g4 = complete(4);
        assert!(singleton_solution(&g4, 4).is_err());
    }

    #[test]
    fn constant_k_on_two_k4s_reaches_the_optimum() {
        let g = two_k4s();
        let report = solve_constant_k(&g, 2, &rat_int(1)).unwrap();
        assert_eq!(report.algorithm, AlgorithmId::ConstantK);
        assert_eq!(report.r_value, rat_int(5));
        assert_eq!(
            report.collection.members(),
            &[vs(&[0, 1, 2, 3]), vs(&[4, 5, 6, 7])]
        );
    }

    #[test]
    fn large_lambda_prefers_singletons() {
        let g = complete(6);
        let report = solve_constant_k(&g, 2, &rat_int(100)).unwrap();
        assert_eq!(report.algorithm, AlgorithmId::Singleton);
        assert_eq!(report.r_value, rat_int(200));
        assert_eq!(report.collection.members(), &[vs(&[0]), vs(&[1])]);
    }

    #[test]
    fn small_lambda_prefers_the_dense_collection() {
        let g = complete(6);
        let report = solve_constant_k(&g, 2, &rat(1, 1000)).unwrap();
        assert_eq!(report.algorithm, AlgorithmId::ConstantK);
        assert_eq!(
            report.collection.members(),
            &[vs(&[0, 1, 2, 3, 4, 5]), vs(&[0, 1, 2, 3, 4])]
        );
        // density term dominates: 5/2 + 2 plus a tiny distance contribution
        assert!(report.r_value > rat(9, 2));
    }

    #[test]
    fn constant_k_densities_are_non_increasing() {
        let g = two_k4s();
        let w = build_constant_k_collection(&g, 4).unwrap();
        let dens: Vec<Rational> = w.members().iter().map(|s| g.density(s)).collect();
        for pair in dens.windows(2) {
            assert!(pair[0] >= pair[1]);
        }
        assert_eq!(dens[0], densest_subgraph(&g).unwrap().dens);
    }

    #[test]
    fn general_solver_on_two_k4s_finishes_in_phase_one() {
        let g = two_k4s();
        let report = solve_general(&g, 2, &rat_int(1)).unwrap();
        assert_eq!(report.algorithm, AlgorithmId::General);
        assert_eq!(report.phase_boundary, Some(2));
        assert_eq!(report.r_value, rat_int(5));
    }

    #[test]
    fn general_solver_completes_with_phase_two_on_k7() {
        let g = complete(7);
        let report = solve_general(&g, 6, &rat(1, 100)).unwrap();
        let boundary = report.phase_boundary.unwrap();
        assert!(boundary < 6, "a crossing pair must appear on K7");
        assert_eq!(report.collection.len(), 6);
        // every phase-2 member keeps at least half the smaller density of
        // the crossing pair
        let phase1 =
            SubgraphCollection::new(report.collection.members()[..boundary].to_vec()).unwrap();
        let (i, j) = has_crossing_pair(&phase1).unwrap();
        let floor = g
            .density(phase1.get(i))
            .min(g.density(phase1.get(j)))
            / rat_int(2);
        for member in &report.collection.members()[boundary..] {
            assert!(g.density(member) >= floor);
        }
    }

    #[test]
    fn distance_floor_holds_on_reports() {
        let g = two_k4s();
        for report in [
            solve_constant_k(&g, 3, &rat_int(1)).unwrap(),
            solve_general(&g, 3, &rat_int(1)).unwrap(),
        ] {
            for (_, _, d) in &report.pair_distances {
                assert!(d > &rat_int(1) && d <= &rat_int(2));
            }
        }
    }

    #[test]
    fn dispatch_routes_by_size() {
        let g4 = complete(4);
        let r = solve(&g4, 2, &rat_int(1), SolveMode::Auto).unwrap();
        assert_eq!(r.algorithm, AlgorithmId::ExactOracle);

        // sparse ring above the oracle cutoffs: routing depends on n and k
        let edges: Vec<(u32, u32)> = (0..12u32).map(|v| (v, (v + 1) % 12)).collect();
        let ring = Graph::from_edges(12, &edges).unwrap();
        let r = solve(&ring, 3, &rat_int(1), SolveMode::Auto).unwrap();
        assert!(matches!(
            r.algorithm,
            AlgorithmId::ConstantK | AlgorithmId::Singleton
        ));
        let r = solve(&ring, 8, &rat_int(1), SolveMode::Auto).unwrap();
        assert_eq!(r.algorithm, AlgorithmId::General);
    }

    #[test]
    fn dispatch_rejects_k_at_least_n() {
        let g = complete(4);
        let err = solve(&g, 4, &rat_int(1), SolveMode::Auto).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
        assert!(err.to_string().contains("k < |V|"));
    }

    #[test]
    fn explicit_modes_route_small_graphs_to_the_oracle() {
        let g = complete(4);
        for mode in [SolveMode::ConstantK, SolveMode::General] {
            let r = solve(&g, 2, &rat_int(1), mode).unwrap();
            assert_eq!(r.algorithm, AlgorithmId::ExactOracle);
        }
    }

    #[test]
    fn report_recomputes_r_from_the_collection() {
        let g = two_k4s();
        let report = solve_constant_k(&g, 2, &rat(3, 7)).unwrap();
        let direct = objective(&g, &report.collection, &rat(3, 7)).unwrap();
        assert_eq!(report.r_value, direct);
        assert_eq!(report.k, 2);
        assert_eq!(report.densities.len(), 2);
        assert_eq!(report.pair_distances.len(), 1);
    }
}
