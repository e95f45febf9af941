//! Shared fixtures and independent brute-force checkers for integration
//! tests. The enumerators here deliberately avoid the library's oracle
//! module so that flow-based solvers and the oracle can be validated
//! against a third implementation path.

use num_bigint::BigInt;
use topk_densest::graph::{Graph, SubgraphCollection, VertexSet};
use topk_densest::rational::Rational;

pub fn vs(ids: &[u32]) -> VertexSet {
    VertexSet::new(ids.to_vec()).unwrap()
}

pub fn coll(sets: &[&[u32]]) -> SubgraphCollection {
    SubgraphCollection::new(sets.iter().map(|s| vs(s)).collect()).unwrap()
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Triangle 0-1-2 with pendant edge 2-3.
pub fn triangle_pendant() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

/// K4 on 0..4 disjoint from K4 on 4..8.
pub fn two_k4s() -> Graph {
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

/// K4 on 0..4 plus an isolated vertex 4.
pub fn k4_plus_isolated() -> Graph {
    let mut edges = Vec::new();
    for u in 0..4u32 {
        for v in (u + 1)..4 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(5, &edges).unwrap()
}

/// Deterministic small random graph: every possible edge is kept when the
/// next output of a splitmix-style generator clears the threshold.
pub fn random_graph(n: u32, density_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state >> 30;
        state = state.wrapping_mul(0xbf58476d1ce4e5b9);
        state ^= state >> 27;
        state = state.wrapping_mul(0x94d049bb133111eb);
        state ^= state >> 31;
        state
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if next() % 100 < density_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn mask_set(mask: u32) -> VertexSet {
    vs(&(0..32).filter(|b| mask & (1 << b) != 0).collect::<Vec<_>>())
}

/// All subset densities of `g`, one entry per non-empty mask.
pub fn all_densities(g: &Graph) -> Vec<(u32, Rational)> {
    let n = g.vertex_count();
    assert!(n <= 16);
    (1u32..(1 << n))
        .map(|mask| (mask, g.density(&mask_set(mask))))
        .collect()
}

/// Canonical order: higher density first, then fewer vertices, then
/// lexicographically smaller id sequence.
pub fn canonically_better(
    cand: (&Rational, &VertexSet),
    incumbent: (&Rational, &VertexSet),
) -> bool {
    match cand.0.cmp(incumbent.0) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            (cand.1.len(), cand.1.ids()) < (incumbent.1.len(), incumbent.1.ids())
        }
    }
}

/// Independent constrained brute force: canonical densest set containing
/// `include` and avoiding `exclude`, by direct subset enumeration.
pub fn constrained_brute_force(
    g: &Graph,
    include: &[u32],
    exclude: &[u32],
) -> Option<(VertexSet, Rational)> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut best: Option<(VertexSet, Rational)> = None;
    'mask: for mask in 1u32..(1 << n) {
        for &v in include {
            if mask & (1 << v) == 0 {
                continue 'mask;
            }
        }
        for &v in exclude {
            if mask & (1 << v) != 0 {
                continue 'mask;
            }
        }
        let set = mask_set(mask);
        let dens = g.density(&set);
        let better = match &best {
            None => true,
            Some((bs, bd)) => canonically_better((&dens, &set), (bd, bs)),
        };
        if better {
            best = Some((set, dens));
        }
    }
    best
}

/// Independent densest-distinct brute force with the same canonical order.
pub fn distinct_brute_force(g: &Graph, w: &SubgraphCollection) -> Option<(VertexSet, Rational)> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut best: Option<(VertexSet, Rational)> = None;
    for mask in 1u32..(1 << n) {
        let set = mask_set(mask);
        if w.contains_set(&set) {
            continue;
        }
        let dens = g.density(&set);
        let better = match &best {
            None => true,
            Some((bs, bd)) => canonically_better((&dens, &set), (bd, bs)),
        };
        if better {
            best = Some((set, dens));
        }
    }
    best
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
