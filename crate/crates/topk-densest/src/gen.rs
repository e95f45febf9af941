//! Deterministic random-graph generation for test corpora and benchmarks.
//!
//! Every kind is a pure function of `(spec, seed)`; the stream cipher RNG
//! keeps outputs identical across platforms.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    /// Uniform random graph with exactly `m` edges.
    Gnm { n: u32, m: u64 },
    Complete { n: u32 },
    /// Disjoint cliques of the given sizes.
    DisjointCliques { sizes: Vec<u32> },
    /// Dense blocks with sparse inter-block edges.
    PlantedPartition {
        sizes: Vec<u32>,
        p_in: f64,
        p_out: f64,
    },
    Path { n: u32 },
    Cycle { n: u32 },
    /// `pairs` disjoint edges on `2 * pairs` vertices.
    Matching { pairs: u32 },
}

pub fn generate_graph(spec: &GraphSpec, seed: u64) -> Result<Graph> {
    match spec {
        GraphSpec::Gnm { n, m } => gnm(*n, *m, seed),
        GraphSpec::Complete { n } => {
            require(*n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in (u + 1)..*n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(*n, &edges)
        }
        GraphSpec::DisjointCliques { sizes } => {
            require(!sizes.is_empty(), "at least one clique size required")?;
            require(sizes.iter().all(|&s| s >= 1), "clique sizes must be >= 1")?;
            let n: u32 = sizes.iter().sum();
            let mut edges = Vec::new();
            let mut base = 0u32;
            for &s in sizes {
                for u in 0..s {
                    for v in (u + 1)..s {
                        edges.push((base + u, base + v));
                    }
                }
                base += s;
            }
            Graph::from_edges(n, &edges)
        }
        GraphSpec::PlantedPartition { sizes, p_in, p_out } => {
            require(!sizes.is_empty(), "at least one block size required")?;
            require(sizes.iter().all(|&s| s >= 1), "block sizes must be >= 1")?;
            require(
                (0.0..=1.0).contains(p_in) && (0.0..=1.0).contains(p_out),
                "edge probabilities must lie in [0, 1]",
            )?;
            let n: u32 = sizes.iter().sum();
            let mut block = vec![0u32; n as usize];
            let mut base = 0u32;
            for (b, &s) in sizes.iter().enumerate() {
                for v in base..base + s {
                    block[v as usize] = b as u32;
                }
                base += s;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    let p = if block[u as usize] == block[v as usize] {
                        *p_in
                    } else {
                        *p_out
                    };
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        GraphSpec::Path { n } => {
            require(*n >= 1, "path needs n >= 1")?;
            let edges: Vec<(u32, u32)> = (1..*n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(*n, &edges)
        }
        GraphSpec::Cycle { n } => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let edges: Vec<(u32, u32)> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        GraphSpec::Matching { pairs } => {
            require(*pairs >= 1, "matching needs at least one pair")?;
            let edges: Vec<(u32, u32)> = (0..*pairs).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(2 * pairs, &edges)
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::contract(msg))
    }
}

fn gnm(n: u32, m: u64, seed: u64) -> Result<Graph> {
    require(n >= 1, "random graph needs n >= 1")?;
    let max_m = n as u64 * (n as u64 - 1) / 2;
    if m > max_m {
        return Err(Error::contract(format!(
            "m = {m} exceeds the {max_m} possible edges on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: HashSet<(u32, u32)> = HashSet::with_capacity(m as usize);
    let mut edges = Vec::with_capacity(m as usize);
    while (edges.len() as u64) < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if chosen.insert(pair) {
            edges.push(pair);
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_clique_fixtures() {
        let g = generate_graph(&GraphSpec::Complete { n: 4 }, 0).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);

        // three disjoint edges: the 6-vertex matching fixture
        let g = generate_graph(
            &GraphSpec::DisjointCliques {
                sizes: vec![2, 2, 2],
            },
            0,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3) && g.has_edge(4, 5));
        let m = generate_graph(&GraphSpec::Matching { pairs: 3 }, 0).unwrap();
        assert_eq!(m.edges(), g.edges());
    }

    #[test]
    fn gnm_is_deterministic_for_a_seed() {
        let spec = GraphSpec::Gnm { n: 7, m: 12 };
        let a = generate_graph(&spec, 1).unwrap();
        let b = generate_graph(&spec, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.edge_count(), 12);
        let c = generate_graph(&spec, 2).unwrap();
        assert!(a.edges() != c.edges() || a.edge_count() == c.edge_count());
    }

    #[test]
    fn gnm_rejects_impossible_edge_counts() {
        assert!(generate_graph(&GraphSpec::Gnm { n: 4, m: 7 }, 0).is_err());
        assert!(generate_graph(&GraphSpec::Gnm { n: 4, m: 6 }, 0).is_ok());
    }

    #[test]
    fn path_cycle_shapes() {
        let p = generate_graph(&GraphSpec::Path { n: 5 }, 0).unwrap();
        assert_eq!(p.edge_count(), 4);
        let c = generate_graph(&GraphSpec::Cycle { n: 7 }, 0).unwrap();
        assert_eq!(c.edge_count(), 7);
        assert!((0..7).all(|v| c.degree(v) == 2));
        assert!(generate_graph(&GraphSpec::Cycle { n: 2 }, 0).is_err());
    }

    #[test]
    fn planted_partition_parameter_checks() {
        let spec = GraphSpec::PlantedPartition {
            sizes: vec![3, 3],
            p_in: 1.0,
            p_out: 0.0,
        };
        let g = generate_graph(&spec, 9).unwrap();
        assert_eq!(g.edge_count(), 6); // two K3 blocks, no cross edges
        let bad = GraphSpec::PlantedPartition {
            sizes: vec![2],
            p_in: 1.5,
            p_out: 0.0,
        };
        assert!(generate_graph(&bad, 0).is_err());
    }
}
