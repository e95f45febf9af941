//! Exact and approximate solvers for the top-k overlapping densest
//! subgraphs problem: find `k` distinct, possibly overlapping induced
//! subgraphs maximizing total density plus a λ-weighted sum of pairwise
//! distances.
//!
//! The crate provides:
//! * [`graph`] — graphs, canonical vertex sets, density / distance /
//!   objective / crossing primitives, all scored in exact rationals;
//! * [`flow`] — exact (constrained) densest subgraph via min-cut with a
//!   binary-searched density guess, plus a greedy peeling baseline;
//! * [`distinct`] — densest subgraph distinct from a given collection,
//!   optimal for small collections and for crossing-free collections;
//! * [`topk`] — the 2/3-approximation (constant k) and 1/2-approximation
//!   (general k) end-to-end solvers with dispatch;
//! * [`oracle`] — exhaustive ground truth for desk-scale verification;
//! * [`gen`] — seeded graph generators for corpora and benchmarks;
//! * [`reduction`] — the top-3 hardness instances built from clique
//!   partitions, with certify/extract round-trips;
//! * [`report`] — the JSON wire schema.

pub mod distinct;
pub mod error;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod report;
pub mod topk;

pub use error::{Error, Result};
pub use flow::{
    constrained_densest_subgraph, densest_subgraph, greedy_peel, DensestResult, FlowNetwork,
};
pub use graph::{
    are_crossing, distance, objective, Graph, ParsedEdgeList, SubgraphCollection, VertexSet,
};
pub use oracle::{oracle_densest, oracle_densest_distinct, oracle_topk, OracleBudget};
pub use rational::Rational;
pub use topk::{
    singleton_solution, solve, solve_constant_k, solve_general, solve_with, AlgorithmId,
    SolveMode, SolveOptions, SolveReport,
};
