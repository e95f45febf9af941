//! Hardness-reduction instances: top-3 solving on an unmodified input
//! graph with `λ = 3n³` certifies or refutes a partition of the vertices
//! into three cliques.
//!
//! With that λ, a solution scoring at least `(n−3)/2 + 18n³` must consist
//! of three disjoint cliques covering every vertex: any overlap costs at
//! least `3n³/n² = 3n` in the distance term, far more than the density
//! term can repay, and once the parts are disjoint the density term
//! reaches `(n−3)/2` only for covering cliques. Both directions are
//! therefore constructive set copies, validated here.

use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphCollection, VertexSet};
use crate::rational::Rational;
use crate::topk::{AlgorithmId, SolveReport};
use num_bigint::BigInt;
use std::time::Instant;

/// A top-3 instance wrapping an unmodified graph with the reduction's
/// λ and certification threshold.
#[derive(Clone, Debug)]
pub struct HardnessInstance {
    pub graph: Graph,
    pub lambda: Rational,
    pub threshold: Rational,
    pub k: usize,
}

/// λ = 3n³ for an n-vertex graph.
pub fn hardness_lambda(n: u32) -> Rational {
    let n = BigInt::from(n);
    Rational::from_integer(3 * &n * &n * &n)
}

/// Certification threshold `(n−3)/2 + 18n³`.
pub fn hardness_threshold(n: u32) -> Rational {
    let n = BigInt::from(n);
    Rational::new(&n - 3, BigInt::from(2)) + Rational::from_integer(18 * &n * &n * &n)
}

/// Wraps a graph as a top-3 hardness instance.
pub fn build_hardness_instance(graph: Graph) -> Result<HardnessInstance> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::contract("graph must have at least one vertex"));
    }
    Ok(HardnessInstance {
        lambda: hardness_lambda(n),
        threshold: hardness_threshold(n),
        k: 3,
        graph,
    })
}

/// Three disjoint cliques covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    pub parts: [VertexSet; 3],
}

/// Checks the partition conditions in order and names the first violation:
/// pairwise disjointness, full cover, then cliqueness of each part.
pub fn validate_clique_partition(g: &Graph, parts: &[VertexSet; 3]) -> Result<()> {
    for p in parts {
        g.validate_set(p)?;
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            if parts[i].intersection_size(&parts[j]) > 0 {
                return Err(Error::contract(format!(
                    "parts {i} and {j} overlap; a clique partition needs disjoint parts"
                )));
            }
        }
    }
    let covered: usize = parts.iter().map(|p| p.len()).sum();
    if covered != g.vertex_count() as usize {
        return Err(Error::contract(format!(
            "parts cover {covered} of {} vertices; a clique partition must cover all of them",
            g.vertex_count()
        )));
    }
    for (i, p) in parts.iter().enumerate() {
        let want = p.len() * (p.len() - 1) / 2;
        let have = g.induced_edge_count(p);
        if have != want {
            return Err(Error::contract(format!(
                "part {i} induces {have} of the {want} edges of a clique"
            )));
        }
    }
    Ok(())
}

/// Forward direction: a valid clique partition becomes a top-3 solution
/// scoring at least the threshold (the three parts are disjoint, so every
/// pair sits at distance 2 and the density term is `(n−3)/2`).
pub fn verify_partition_to_solution(g: &Graph, parts: &[VertexSet; 3]) -> Result<SolveReport> {
    let start = Instant::now();
    validate_clique_partition(g, parts)?;
    let collection = SubgraphCollection::new(parts.to_vec())?;
    let report = SolveReport::assemble(
        g,
        AlgorithmId::Reduction,
        collection,
        &hardness_lambda(g.vertex_count()),
        None,
        start.elapsed(),
    )?;
    if report.r_value < hardness_threshold(g.vertex_count()) {
        return Err(Error::contract(
            "internal consistency: a valid clique partition scored below the threshold",
        ));
    }
    Ok(report)
}

/// Reverse direction: a top-3 solution scoring at least `threshold` under
/// λ = 3n³ has its three sets forming a clique partition; below the
/// threshold no partition is certified.
pub fn extract_partition_from_solution(
    g: &Graph,
    w: &SubgraphCollection,
    threshold: &Rational,
) -> Result<CliquePartition> {
    if w.len() != 3 {
        return Err(Error::contract(format!(
            "expected a collection of 3 subgraphs, got {}",
            w.len()
        )));
    }
    let r = crate::graph::objective(g, w, &hardness_lambda(g.vertex_count()))?;
    if &r < threshold {
        return Err(Error::CertificationRefused(format!(
            "no partition certified: r(W) = {r} is below the threshold {threshold}"
        )));
    }
    let parts = [w.get(0).clone(), w.get(1).clone(), w.get(2).clone()];
    validate_clique_partition(g, &parts).map_err(|e| {
        Error::contract(format!(
            "internal consistency: score meets the threshold but the sets are not a clique partition ({e})"
        ))
    })?;
    Ok(CliquePartition { parts })
}
