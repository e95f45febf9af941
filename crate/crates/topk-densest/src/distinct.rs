//! Densest subgraph distinct from every member of a given collection.
//!
//! Distinctness from a collection `W` reduces to constrained densest
//! subgraph: a small witness — vertices forced inside (`U1`) and vertices
//! forced outside (`U2`) such that no member of `W` contains all of `U1`
//! while avoiding all of `U2` — pins down a family of sets that are all
//! distinct from `W`, and every distinct set is captured by some witness.
//! With `|W| = t` a witness of total size at most `t` always exists; when
//! no two members cross, three vertices suffice (at most two inside, one
//! outside), which keeps the enumeration polynomial for unbounded `t`.
//!
//! The result is the canonical optimum over all distinct sets: maximum
//! density, then fewest vertices, then lexicographically smallest, found
//! by evaluating constrained solves per feasible witness. Witnesses that
//! provably cannot beat or tie the incumbent are skipped after a single
//! decision cut; the probe just below the incumbent density exploits the
//! `1/(n(n−1))` separation between distinct subgraph densities, so the
//! returned set is identical to the one full evaluation would produce.

use crate::error::{Error, Result};
use crate::flow::{self, ConstraintContext, DensestResult};
use crate::graph::{are_crossing, Graph, SubgraphCollection, VertexSet};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

/// Vertices forced inside / outside a candidate subgraph. Either side may
/// be empty, never both in a feasible enumeration: the all-empty witness is
/// satisfied by every collection member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessWitness {
    pub forced_in: Vec<u32>,
    pub forced_out: Vec<u32>,
}

impl DistinctnessWitness {
    pub fn new(mut forced_in: Vec<u32>, mut forced_out: Vec<u32>) -> DistinctnessWitness {
        forced_in.sort_unstable();
        forced_in.dedup();
        forced_out.sort_unstable();
        forced_out.dedup();
        DistinctnessWitness {
            forced_in,
            forced_out,
        }
    }

    fn satisfied_by(&self, member: &VertexSet) -> bool {
        self.forced_in.iter().all(|&v| member.contains(v))
            && self.forced_out.iter().all(|&v| !member.contains(v))
    }

    /// A witness is feasible when no collection member satisfies both of
    /// its constraints; every set honoring a feasible witness is then
    /// distinct from every member.
    pub fn is_feasible(&self, w: &SubgraphCollection) -> bool {
        !w.members().iter().any(|m| self.satisfied_by(m))
    }

    /// Feasible with no feasible proper sub-witness. Dropping a constraint
    /// only enlarges the candidate family while feasibility is monotone
    /// under dropping, so minimal feasible witnesses dominate all others:
    /// evaluating only them loses no candidate set.
    fn is_minimal_feasible(&self, w: &SubgraphCollection) -> bool {
        if !self.is_feasible(w) {
            return false;
        }
        let without = |side: &[u32], skip: usize| -> Vec<u32> {
            side.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect()
        };
        for i in 0..self.forced_in.len() {
            let sub = DistinctnessWitness {
                forced_in: without(&self.forced_in, i),
                forced_out: self.forced_out.clone(),
            };
            if sub.is_feasible(w) {
                return false;
            }
        }
        for i in 0..self.forced_out.len() {
            let sub = DistinctnessWitness {
                forced_in: self.forced_in.clone(),
                forced_out: without(&self.forced_out, i),
            };
            if sub.is_feasible(w) {
                return false;
            }
        }
        true
    }
}

/// Lexicographically-first crossing pair of member indices, if any.
pub fn has_crossing_pair(w: &SubgraphCollection) -> Option<(usize, usize)> {
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            if are_crossing(w.get(i), w.get(j)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Optimal densest-distinct solver for small collections: witnesses of
/// total size up to `|w|` are exhaustive for any collection shape.
pub fn densest_distinct_constant_k(g: &Graph, w: &SubgraphCollection) -> Result<DensestResult> {
    g.validate_collection(w)?;
    let n = g.vertex_count();
    let t = w.len();
    if t == 0 {
        return Err(Error::contract("the collection must contain at least one subgraph"));
    }
    if t as u32 >= n {
        return Err(Error::contract(format!(
            "collection size {t} must be smaller than the vertex count {n}"
        )));
    }
    densest_distinct_over(g, w, constant_k_witnesses(n, t))
}

/// Optimal densest-distinct solver for collections without crossing pairs:
/// witnesses with at most two forced-in and one forced-out vertex suffice.
pub fn densest_distinct_no_crossing(g: &Graph, w: &SubgraphCollection) -> Result<DensestResult> {
    g.validate_collection(w)?;
    if w.is_empty() {
        return Err(Error::contract("the collection must contain at least one subgraph"));
    }
    if let Some((i, j)) = has_crossing_pair(w) {
        return Err(Error::contract(format!(
            "members {i} and {j} cross; the three-vertex witness bound does not apply"
        )));
    }
    densest_distinct_over(g, w, no_crossing_witnesses(g.vertex_count()))
}

/// Witnesses `(U1, U2)` with `|U1 ∪ U2| <= t`, both sides drawn freely.
fn constant_k_witnesses(n: u32, t: usize) -> Vec<DistinctnessWitness> {
    let mut out = Vec::new();
    let mut support = Vec::new();
    fn choose(
        n: u32,
        start: u32,
        remaining: usize,
        support: &mut Vec<u32>,
        out: &mut Vec<DistinctnessWitness>,
    ) {
        if !support.is_empty() {
            // every way to split the support into forced-in / forced-out
            for assignment in 0u32..(1 << support.len()) {
                let mut inside = Vec::new();
                let mut outside = Vec::new();
                for (bit, &v) in support.iter().enumerate() {
                    if assignment & (1 << bit) == 0 {
                        inside.push(v);
                    } else {
                        outside.push(v);
                    }
                }
                out.push(DistinctnessWitness::new(inside, outside));
            }
        }
        if remaining == 0 {
            return;
        }
        for v in start..n {
            support.push(v);
            choose(n, v + 1, remaining - 1, support, out);
            support.pop();
        }
    }
    choose(n, 0, t, &mut support, &mut out);
    out
}

/// Witness shapes for the no-crossing regime: at most two forced-in
/// vertices and at most one forced-out vertex. Exclude-only singletons are
/// included so the family is closed under dropping a constraint, which the
/// minimal-witness pruning relies on.
fn no_crossing_witnesses(n: u32) -> Vec<DistinctnessWitness> {
    let mut out = Vec::new();
    for a in 0..n {
        out.push(DistinctnessWitness::new(vec![a], vec![]));
        out.push(DistinctnessWitness::new(vec![], vec![a]));
    }
    for a in 0..n {
        for c in 0..n {
            if c != a {
                out.push(DistinctnessWitness::new(vec![a], vec![c]));
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(DistinctnessWitness::new(vec![a, b], vec![]));
            for c in 0..n {
                if c != a && c != b {
                    out.push(DistinctnessWitness::new(vec![a, b], vec![c]));
                }
            }
        }
    }
    out
}

/// Evaluates the witness family and reduces to the canonical best result.
/// The reduction is order-independent: candidates are compared by exact
/// density, then set cardinality, then lexicographic ids.
fn densest_distinct_over(
    g: &Graph,
    w: &SubgraphCollection,
    witnesses: Vec<DistinctnessWitness>,
) -> Result<DensestResult> {
    let n = g.vertex_count() as i64;
    let probe_gap = Rational::new(BigInt::from(1), BigInt::from(2 * n * n));
    let mut best: Option<(Rational, VertexSet)> = None;

    for wit in witnesses {
        if !wit.is_minimal_feasible(w) {
            continue;
        }
        let ctx = ConstraintContext::from_ids(g, wit.forced_in.clone(), wit.forced_out.clone())?;
        match &mut best {
            None => {
                let r = flow::search(g, &ctx, None)?;
                best = Some((r.dens, r.set));
            }
            Some((incumbent, incumbent_set)) => {
                let cut = flow::decision_cut(g, &ctx, incumbent)?;
                let strict_improvement = match &cut {
                    Some((_, d)) => d > incumbent,
                    None => false,
                };
                if strict_improvement {
                    let (_, seen) = cut.expect("strict improvement carries a cut");
                    let r = flow::search(g, &ctx, Some(&seen))?;
                    best = Some((r.dens, r.set));
                    continue;
                }
                // The witness optimum is at most the incumbent density; it
                // can still tie exactly. Densities are separated by more
                // than the probe gap, so a cut just below the incumbent
                // distinguishes "equal" from "strictly below".
                let tied = if incumbent.is_zero() {
                    true
                } else {
                    let probe = &*incumbent - &probe_gap;
                    matches!(flow::decision_cut(g, &ctx, &probe)?, Some((_, d)) if &d >= incumbent)
                };
                if tied {
                    if let Some(cand) = flow::canonical_optimum_at(g, &ctx, incumbent)? {
                        if (cand.len(), cand.ids()) < (incumbent_set.len(), incumbent_set.ids()) {
                            *incumbent_set = cand;
                        }
                    }
                }
            }
        }
    }

    match best {
        Some((dens, set)) => {
            debug_assert!(!w.contains_set(&set));
            Ok(DensestResult {
                set,
                dens: dens.clone(),
                cut_certificate: (dens.clone(), dens),
            })
        }
        None => Err(Error::Infeasible(
            "no subgraph distinct from the collection exists".into(),
        )),
    }
}
