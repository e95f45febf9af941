//! Simple undirected graphs, canonical vertex sets, and the scoring
//! primitives: density, inter-subgraph distance, the top-k objective, and
//! the crossing test.
//!
//! Everything here is immutable after construction and pure, so values can
//! be shared freely across threads.

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;

/// Immutable simple undirected graph with internal ids `0..n` and external
/// string labels assigned in first-appearance order.
#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
    labels: Vec<String>,
    label_ids: HashMap<String, u32>,
}

/// Result of parsing an edge-list text: the graph plus the number of
/// duplicate edge lines that were collapsed.
#[derive(Clone, Debug)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices labeled `"0".."n-1"` from an edge list.
    /// Duplicate edges collapse silently; self-loops are rejected.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Graph> {
        let labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        Self::build(labels, edges.iter().copied()).map(|(g, _)| g)
    }

    fn build(labels: Vec<String>, edges: impl Iterator<Item = (u32, u32)>) -> Result<(Graph, usize)> {
        let n = labels.len() as u32;
        let mut adjacency = vec![Vec::new(); n as usize];
        let mut duplicates = 0usize;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) references a vertex >= {n}"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            if adjacency[u as usize].contains(&v) {
                duplicates += 1;
                continue;
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        let mut edge_count = 0usize;
        for list in &mut adjacency {
            list.sort_unstable();
            edge_count += list.len();
        }
        let edge_count = edge_count / 2;
        let mut label_ids = HashMap::with_capacity(labels.len());
        for (id, label) in labels.iter().enumerate() {
            if label_ids.insert(label.clone(), id as u32).is_some() {
                return Err(Error::contract(format!("duplicate vertex label {label:?}")));
            }
        }
        Ok((
            Graph {
                adjacency,
                edge_count,
                labels,
                label_ids,
            },
            duplicates,
        ))
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#` starts
    /// a comment line, blank lines are allowed. Labels are arbitrary
    /// non-whitespace tokens and get ids in first-appearance order.
    /// Duplicate edges are collapsed and counted; self-loops are errors.
    pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
        let mut labels: Vec<String> = Vec::new();
        let mut label_ids: HashMap<String, u32> = HashMap::new();
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut intern = |token: &str, labels: &mut Vec<String>| -> u32 {
            if let Some(&id) = label_ids.get(token) {
                return id;
            }
            let id = labels.len() as u32;
            labels.push(token.to_string());
            label_ids.insert(token.to_string(), id);
            id
        };
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected 2 tokens, found {}", tokens.len()),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("self-loop at vertex {:?}", tokens[0]),
                });
            }
            let u = intern(tokens[0], &mut labels);
            let v = intern(tokens[1], &mut labels);
            edges.push((u, v));
        }
        let (graph, duplicate_edges) = Self::build(labels, edges.into_iter())?;
        Ok(ParsedEdgeList {
            graph,
            duplicate_edges,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.adjacency.len() as u32
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<u32> {
        self.label_ids.get(label).copied()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Renders the graph in the edge-list text format. Isolated vertices
    /// cannot be expressed in that format; they are listed in a comment.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let isolated: Vec<&str> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 0)
            .map(|v| self.label(v))
            .collect();
        if !isolated.is_empty() {
            out.push_str(&format!(
                "# isolated vertices omitted by the edge-list format: {}\n",
                isolated.join(" ")
            ));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.label(u), self.label(v)));
        }
        out
    }

    /// Checks that every id in `s` exists in this graph.
    pub fn validate_set(&self, s: &VertexSet) -> Result<()> {
        let n = self.vertex_count();
        match s.ids().last() {
            Some(&max) if max >= n => Err(Error::contract(format!(
                "vertex {max} out of range for a graph on {n} vertices"
            ))),
            _ => Ok(()),
        }
    }

    pub fn validate_collection(&self, w: &SubgraphCollection) -> Result<()> {
        for s in w.members() {
            self.validate_set(s)?;
        }
        Ok(())
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        let mut count = 0usize;
        for &v in s.ids() {
            let nbrs = &self.adjacency[v as usize];
            if nbrs.len() <= s.len() {
                count += nbrs.iter().filter(|&&u| u > v && s.contains(u)).count();
            } else {
                count += s
                    .ids()
                    .iter()
                    .filter(|&&u| u > v && nbrs.binary_search(&u).is_ok())
                    .count();
            }
        }
        count
    }

    /// Density of the induced subgraph: edges inside `s` over `|s|`.
    pub fn density(&self, s: &VertexSet) -> Rational {
        Rational::new(
            BigInt::from(self.induced_edge_count(s)),
            BigInt::from(s.len()),
        )
    }
}

/// Canonical non-empty set of vertex ids: strictly increasing sequence, so
/// set equality is sequence equality and `Ord` is deterministic
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    ids: Vec<u32>,
}

impl VertexSet {
    /// Canonicalizes (sorts, deduplicates) the given ids. Empty input is a
    /// contract violation: subgraphs in solutions have at least one vertex.
    pub fn new(mut ids: Vec<u32>) -> Result<VertexSet> {
        ids.sort_unstable();
        ids.dedup();
        if ids.is_empty() {
            return Err(Error::contract("a vertex set must be non-empty"));
        }
        Ok(VertexSet { ids })
    }

    /// Builds from ids that are already strictly increasing.
    pub(crate) fn from_sorted(ids: Vec<u32>) -> VertexSet {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!ids.is_empty());
        VertexSet { ids }
    }

    pub fn singleton(v: u32) -> VertexSet {
        VertexSet { ids: vec![v] }
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: u32) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        let (mut i, mut j, mut count) = (0usize, 0usize, 0usize);
        while i < self.ids.len() && j < other.ids.len() {
            match self.ids[i].cmp(&other.ids[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn intersection(&self, other: &VertexSet) -> Vec<u32> {
        self.ids
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.intersection_size(other) == self.len()
    }

    /// Union with one extra vertex; returns `None` when `v` is already in.
    pub fn with_vertex(&self, v: u32) -> Option<VertexSet> {
        match self.ids.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut ids = self.ids.clone();
                ids.insert(pos, v);
                Some(VertexSet { ids })
            }
        }
    }

    /// Set minus one vertex; returns `None` when absent or when removal
    /// would empty the set.
    pub fn without_vertex(&self, v: u32) -> Option<VertexSet> {
        if self.ids.len() == 1 {
            return None;
        }
        match self.ids.binary_search(&v) {
            Ok(pos) => {
                let mut ids = self.ids.clone();
                ids.remove(pos);
                Some(VertexSet { ids })
            }
            Err(_) => None,
        }
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.ids.iter().map(|&v| g.label(v)).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Distance between two induced subgraphs:
/// `0` when the vertex sets are equal, otherwise `2 − |U∩Z|²/(|U||Z|)`.
///
/// For distinct sets the value always lies in `(1, 2]`: the subtracted term
/// reaches 1 only when the sets coincide.
pub fn distance(u: &VertexSet, z: &VertexSet) -> Rational {
    if u == z {
        return Rational::zero();
    }
    let inter = BigInt::from(u.intersection_size(z));
    let prod = BigInt::from(u.len()) * BigInt::from(z.len());
    rat_int(2) - Rational::new(&inter * &inter, prod)
}

/// Two sets cross when they overlap and neither contains the other.
pub fn are_crossing(u: &VertexSet, z: &VertexSet) -> bool {
    let inter = u.intersection_size(z);
    inter > 0 && inter < u.len() && inter < z.len()
}

/// Ordered sequence of pairwise-distinct vertex sets: a candidate solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCollection {
    members: Vec<VertexSet>,
}

impl SubgraphCollection {
    /// Rejects empty collections and repeated sets.
    pub fn new(members: Vec<VertexSet>) -> Result<SubgraphCollection> {
        if members.is_empty() {
            return Err(Error::contract("a collection must contain at least one subgraph"));
        }
        let mut seen = members.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::contract(
                "collection members must be pairwise distinct as sets",
            ));
        }
        Ok(SubgraphCollection { members })
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_set(&self, s: &VertexSet) -> bool {
        self.members.iter().any(|m| m == s)
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.members[i]
    }
}

/// The top-k objective `r(W)`: total density plus `λ` times the sum of all
/// pairwise distances. Exact, so summation order never matters.
pub fn objective(g: &Graph, w: &SubgraphCollection, lambda: &Rational) -> Result<Rational> {
    if lambda <= &Rational::zero() {
        return Err(Error::contract("lambda must be positive"));
    }
    g.validate_collection(w)?;
    let mut total = Rational::zero();
    for s in w.members() {
        total += g.density(s);
    }
    let mut dist_sum = Rational::zero();
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            dist_sum += distance(w.get(i), w.get(j));
        }
    }
    Ok(total + lambda * dist_sum)
}
