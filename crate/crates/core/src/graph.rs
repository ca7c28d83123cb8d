//! Simple undirected graphs over dense integer vertices `0..n`.
//!
//! Graphs are immutable values: the mutating operations return new graphs,
//! so instances can be shared freely across threads.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// An undirected edge with endpoints stored in sorted order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop (`a == b`).
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "loop edge at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn lo(self) -> usize {
        self.u
    }

    pub fn hi(self) -> usize {
        self.v
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// The endpoint that is not `w`. Panics if `w` is not an endpoint.
    pub fn other(self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            assert_eq!(self.v, w, "vertex {w} is not an endpoint of {self}");
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("deleting the last vertex would leave an empty graph")]
    WouldBeEmpty,
}

/// A simple undirected graph: no loops, no parallel edges.
///
/// The edge list is kept sorted, so equal graphs compare equal regardless
/// of construction order.
#[derive(Clone, Debug)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an order and an edge list.
    ///
    /// The input order of the edge list does not affect the result. Each
    /// violation (loop, duplicate, out-of-range endpoint) is reported with
    /// the offending pair.
    pub fn build(order: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for w in [a, b] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }
        let mut adj = vec![Vec::new(); order];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { order, edges, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order; the position of an edge is its stable id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Maximum degree; 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// Stable id of edge `{a, b}`: its index in the sorted edge list.
    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        if a == b || a >= self.order || b >= self.order {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edge_id(e.u, e.v).is_some()
    }

    /// FNV-1a hash of the sorted edge set, stable across runs and platforms.
    /// Together with the order it identifies the graph for host checks.
    pub fn edge_set_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: usize| {
            for byte in (x as u64).to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.order);
        for e in &self.edges {
            eat(e.u);
            eat(e.v);
        }
        h
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        let max_degree = degrees.last().copied().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
        }
    }

    /// Removes `v` and its incident edges. Vertices above `v` shift down by
    /// one, so the relabeling is stable and documented for drawing remaps.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        if self.order == 1 {
            return Err(GraphError::WouldBeEmpty);
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !e.touches(v))
            .map(|e| (shift(e.u), shift(e.v)))
            .collect();
        Graph::build(self.order - 1, &pairs)
    }

    /// Returns a graph with edge `{a, b}` added.
    pub fn add_edge(&self, a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        for w in [a, b] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
        }
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.push((a, b));
        Graph::build(self.order, &pairs)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Graph::build(n, &pairs).expect("complete graph is valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).expect("cycle is valid")
    }

    /// Path on `n >= 1` vertices.
    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &pairs).expect("path is valid")
    }

    /// The Petersen graph: 3-regular on 10 vertices.
    pub fn petersen() -> Self {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5)); // outer 5-cycle
            pairs.push((i, i + 5)); // spokes
            pairs.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::build(10, &pairs).expect("petersen is valid")
    }

    /// The cube graph `Q3`: 3-regular on 8 vertices (bit i flips axis i).
    pub fn cube() -> Self {
        let mut pairs = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                let w = v ^ bit;
                if v < w {
                    pairs.push((v, w));
                }
            }
        }
        Graph::build(8, &pairs).expect("cube is valid")
    }

    /// Erdos-Renyi random graph `G(n, p)` with a fixed seed.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::build(n, &pairs).expect("random graph is valid")
    }
}

/// The multiset of vertex degrees together with the maximum degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
    max_degree: usize,
}

impl DegreeProfile {
    /// Degrees in ascending order; one entry per vertex.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.degrees.iter().filter(|&&d| d == degree).count()
    }

    /// Degree -> multiplicity, ascending by degree.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.degrees {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        match self.degrees.as_slice() {
            [] => None,
            [first, rest @ ..] => rest.iter().all(|d| d == first).then_some(*first),
        }
    }

    /// Compact rendering such as `24 x 6, 1 x 2` (descending by degree).
    pub fn summary(&self) -> String {
        let counts = self.counts();
        let parts: Vec<String> = counts
            .iter()
            .rev()
            .map(|(d, c)| format!("{c} x {d}"))
            .collect();
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_builds_with_expected_degrees() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g.degree_profile().max_degree(), 2);
    }

    #[test]
    fn loop_edge_is_rejected() {
        assert_eq!(
            Graph::build(2, &[(0, 0)]).unwrap_err(),
            GraphError::Loop(0)
        );
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn out_of_range_endpoint_is_rejected() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            }
        );
    }

    #[test]
    fn zero_order_is_rejected() {
        assert_eq!(Graph::build(0, &[]).unwrap_err(), GraphError::ZeroOrder);
    }

    #[test]
    fn edge_list_order_does_not_matter() {
        let a = Graph::build(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let b = Graph::build(4, &[(1, 0), (1, 2), (3, 2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_set_hash(), b.edge_set_hash());
    }

    #[test]
    fn star_degree_profile() {
        let g = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.degrees(), &[1, 1, 1, 1, 4]);
        assert_eq!(p.max_degree(), 4);
        assert_eq!(p.summary(), "1 x 4, 4 x 1");
    }

    #[test]
    fn delete_vertex_from_triangle_leaves_one_edge() {
        let g = Graph::complete(3);
        let h = g.delete_vertex(0).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.size(), 1);
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn delete_middle_of_path_isolates_endpoints() {
        let g = Graph::path(3);
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.size(), 0);
    }

    #[test]
    fn deleting_the_last_vertex_is_an_error() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.delete_vertex(0).unwrap_err(), GraphError::WouldBeEmpty);
        assert_eq!(
            g.delete_vertex(1).unwrap_err(),
            GraphError::VertexOutOfRange {
                vertex: 1,
                order: 1
            }
        );
    }

    #[test]
    fn delete_vertex_relabels_by_shifting_down() {
        let g = Graph::build(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let h = g.delete_vertex(1).unwrap();
        // old 2 -> 1, old 3 -> 2
        assert_eq!(h.edges(), &[Edge::new(0, 2), Edge::new(1, 2)]);
    }

    #[test]
    fn add_edge_completes_triangle() {
        let g = Graph::path(3);
        let h = g.add_edge(0, 2).unwrap();
        assert_eq!(h, Graph::complete(3));
    }

    #[test]
    fn add_duplicate_edge_fails() {
        let g = Graph::complete(2);
        assert_eq!(
            g.add_edge(0, 1).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(g.add_edge(1, 1).unwrap_err(), GraphError::Loop(1));
    }

    #[test]
    fn handshake_holds_on_random_graphs() {
        for seed in 0..50 {
            let g = Graph::random(1 + (seed as usize % 13), 0.4, seed);
            let sum: usize = g.degrees().iter().sum();
            assert_eq!(sum, 2 * g.size());
            assert!(g.max_degree() < g.order());
        }
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::petersen();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert_eq!(g.degree_profile().regular_degree(), Some(3));
        assert!(g.is_connected());
    }

    #[test]
    fn cube_is_cubic_and_connected() {
        let g = Graph::cube();
        assert_eq!((g.order(), g.size()), (8, 12));
        assert_eq!(g.degree_profile().regular_degree(), Some(3));
        assert!(g.is_connected());
    }
}
