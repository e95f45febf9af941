//! Property-based invariants for the scoring primitives and cross-checks
//! between the flow solvers, the greedy baseline, and brute force.

mod common;

use common::*;
use proptest::prelude::*;
use topk_densest::flow::{constrained_densest_subgraph, densest_subgraph, greedy_peel};
use topk_densest::graph::{are_crossing, distance, objective, Graph, SubgraphCollection, VertexSet};
use topk_densest::oracle::{oracle_densest, oracle_densest_distinct, OracleBudget};
use topk_densest::rational::{rat, rat_int, Rational};
use num_traits::Zero;

fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0u64..=100, any::<u64>())
        .prop_map(|(n, density, seed)| random_graph(n, density, seed))
}

fn arb_subset(n: u32) -> impl Strategy<Value = VertexSet> {
    (1u32..(1 << n)).prop_map(mask_set)
}

proptest! {
    #[test]
    fn density_is_bounded_with_equality_only_on_cliques(g in arb_graph(7)) {
        let n = g.vertex_count();
        for mask in 1u32..(1 << n) {
            let s = mask_set(mask);
            let d = g.density(&s);
            let upper = rat(s.len() as i64 - 1, 2);
            prop_assert!(d >= Rational::zero());
            prop_assert!(d <= upper);
            let complete_edges = s.len() * (s.len() - 1) / 2;
            prop_assert_eq!(d == upper, g.induced_edge_count(&s) == complete_edges);
        }
    }

    #[test]
    fn distance_properties(a_mask in 1u32..128, b_mask in 1u32..128) {
        let a = mask_set(a_mask);
        let b = mask_set(b_mask);
        let d = distance(&a, &b);
        prop_assert_eq!(&d, &distance(&b, &a));
        prop_assert!(d <= rat_int(2));
        if a == b {
            prop_assert_eq!(&d, &Rational::zero());
        } else {
            prop_assert!(d > rat_int(1));
        }
    }

    #[test]
    fn crossing_matches_the_set_algebra(a_mask in 1u32..256, b_mask in 1u32..256) {
        let a = mask_set(a_mask);
        let b = mask_set(b_mask);
        let inter = a_mask & b_mask;
        let expected = inter != 0 && inter != a_mask && inter != b_mask;
        prop_assert_eq!(are_crossing(&a, &b), expected);
    }

    #[test]
    fn objective_is_the_sum_of_its_parts(
        g in arb_graph(6),
        masks in proptest::collection::btree_set(1u32..64, 1..4),
        lam_num in 1i64..50,
        lam_den in 1i64..50,
    ) {
        let n = g.vertex_count();
        let members: Vec<VertexSet> = masks
            .into_iter()
            .map(|m| m & ((1u32 << n) - 1))
            .filter(|&m| m != 0)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(mask_set)
            .collect();
        prop_assume!(!members.is_empty());
        let w = SubgraphCollection::new(members.clone()).unwrap();
        let lambda = rat(lam_num, lam_den);
        let mut dens_sum = Rational::zero();
        for s in &members {
            dens_sum += g.density(s);
        }
        let mut dist_sum = Rational::zero();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                dist_sum += distance(&members[i], &members[j]);
            }
        }
        prop_assert_eq!(
            objective(&g, &w, &lambda).unwrap(),
            dens_sum + &lambda * dist_sum
        );
    }

    #[test]
    fn flow_solver_matches_brute_force(g in arb_graph(7)) {
        let r = densest_subgraph(&g).unwrap();
        let (best_set, best_dens) = constrained_brute_force(&g, &[], &[]).unwrap();
        prop_assert_eq!(&r.dens, &best_dens);
        prop_assert_eq!(&r.set, &best_set);
        prop_assert_eq!(&g.density(&r.set), &r.dens);
    }

    #[test]
    fn constrained_flow_matches_brute_force(
        g in arb_graph(6),
        inc_mask in 0u32..64,
        exc_mask in 0u32..64,
    ) {
        let n = g.vertex_count();
        let full = (1u32 << n) - 1;
        let inc = inc_mask & full;
        let exc = exc_mask & full & !inc;
        prop_assume!(inc != 0 || exc != full);
        let include = if inc == 0 { None } else { Some(mask_set(inc)) };
        let exclude = if exc == 0 { None } else { Some(mask_set(exc)) };
        let r = constrained_densest_subgraph(&g, include.as_ref(), exclude.as_ref()).unwrap();
        let inc_ids: Vec<u32> = include.map(|s| s.ids().to_vec()).unwrap_or_default();
        let exc_ids: Vec<u32> = exclude.map(|s| s.ids().to_vec()).unwrap_or_default();
        let (best_set, best_dens) = constrained_brute_force(&g, &inc_ids, &exc_ids).unwrap();
        prop_assert_eq!(&r.dens, &best_dens);
        prop_assert_eq!(&r.set, &best_set);
        for &v in &inc_ids {
            prop_assert!(r.set.contains(v));
        }
        for &v in &exc_ids {
            prop_assert!(!r.set.contains(v));
        }
    }

    #[test]
    fn peeling_is_a_half_approximation(g in arb_graph(7)) {
        let peel = greedy_peel(&g).unwrap();
        let opt = oracle_densest(&g, &OracleBudget::default()).unwrap();
        prop_assert!(rat_int(2) * &peel.dens >= opt.dens);
        prop_assert!(peel.dens <= opt.dens);
    }

    #[test]
    fn distinct_solver_outputs_are_distinct_and_optimal(
        g in arb_graph(6),
        m1 in 1u32..64,
        m2 in 1u32..64,
    ) {
        let n = g.vertex_count();
        let full = (1u32 << n) - 1;
        let mut masks = vec![m1 & full, m2 & full];
        masks.retain(|&m| m != 0);
        masks.sort_unstable();
        masks.dedup();
        prop_assume!(!masks.is_empty() && masks.len() < n as usize);
        let w = SubgraphCollection::new(masks.iter().map(|&m| mask_set(m)).collect()).unwrap();

        let solved = topk_densest::distinct::densest_distinct_constant_k(&g, &w).unwrap();
        prop_assert!(!w.contains_set(&solved.set));
        let (brute_set, brute_dens) = distinct_brute_force(&g, &w).unwrap();
        prop_assert_eq!(&solved.dens, &brute_dens);
        prop_assert_eq!(&solved.set, &brute_set);

        let by_oracle = oracle_densest_distinct(&g, &w, &OracleBudget::default()).unwrap();
        prop_assert_eq!(&by_oracle.dens, &solved.dens);
        prop_assert_eq!(&by_oracle.set, &solved.set);
    }

    #[test]
    fn subset_densities_respect_the_separation_gap(g in arb_graph(6), s in prop::sample::select(vec![0u64])) {
        let _ = s;
        let n = g.vertex_count() as i64;
        prop_assume!(n >= 2);
        let gap = rat(1, n * (n - 1));
        let mut values: Vec<Rational> =
            all_densities(&g).into_iter().map(|(_, d)| d).collect();
        values.sort();
        values.dedup();
        for pair in values.windows(2) {
            prop_assert!(&pair[1] - &pair[0] >= gap);
        }
    }
}

#[test]
fn flow_solver_matches_brute_force_on_all_graphs_up_to_four_vertices() {
    for n in 1u32..=4 {
        let pairs: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        for edge_mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| edge_mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let r = densest_subgraph(&g).unwrap();
            let (best_set, best_dens) = constrained_brute_force(&g, &[], &[]).unwrap();
            assert_eq!(r.dens, best_dens, "n={n} mask={edge_mask}");
            assert_eq!(r.set, best_set, "n={n} mask={edge_mask}");
        }
    }
}

#[test]
fn monotone_dominance_of_the_unconstrained_optimum() {
    for seed in 0..30u64 {
        let g = random_graph(6, 50, seed);
        let full = densest_subgraph(&g).unwrap();
        for inc in 0..6u32 {
            for exc in 0..6u32 {
                if inc == exc {
                    continue;
                }
                let r = constrained_densest_subgraph(
                    &g,
                    Some(&vs(&[inc])),
                    Some(&vs(&[exc])),
                )
                .unwrap();
                assert!(full.dens >= r.dens);
            }
        }
    }
}

#[test]
fn no_crossing_solver_agrees_with_brute_force_on_laminar_collections() {
    // nested chains and disjoint blocks never cross
    for seed in 0..40u64 {
        let g = random_graph(6, 60, seed);
        let w = coll(&[&[0, 1, 2, 3, 4, 5], &[0, 1, 2], &[0, 1], &[4, 5]]);
        assert!(topk_densest::distinct::has_crossing_pair(&w).is_none());
        let solved = topk_densest::distinct::densest_distinct_no_crossing(&g, &w).unwrap();
        let (brute_set, brute_dens) = distinct_brute_force(&g, &w).unwrap();
        assert_eq!(solved.dens, brute_dens, "seed {seed}");
        assert_eq!(solved.set, brute_set, "seed {seed}");
    }
}
