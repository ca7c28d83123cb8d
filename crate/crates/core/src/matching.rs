//! Maximum matchings and the edge independence number `alpha'(G)`.
//!
//! [`maximum_matching`] is an augmenting-path search with blossom
//! contraction; [`oracle_matching_number`] is an independent exhaustive
//! branch-and-bound used to cross-check it on small instances.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise non-adjacent edges of a host graph.
///
/// The value records the host's order and edge-set hash so that use against
/// a different graph is detectable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    host_order: usize,
    host_hash: u64,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when this matching was computed for `g`.
    pub fn matches_host(&self, g: &Graph) -> bool {
        self.host_order == g.order() && self.host_hash == g.edge_set_hash()
    }

    /// Full check: right host and both matching invariants.
    pub fn verify(&self, g: &Graph) -> bool {
        self.matches_host(g) && is_matching(g, &self.edges)
    }
}

/// True iff every edge exists in `g` and no two edges share an endpoint.
pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut used = vec![false; g.order()];
    for e in edges {
        if !g.contains(*e) {
            return false;
        }
        let (u, v) = e.endpoints();
        if used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

/// Computes a maximum matching.
///
/// Deterministic: vertices are scanned lowest-index-first, both in the
/// greedy seeding pass and when growing alternating trees.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];

    // Greedy seed: pairs off most vertices cheaply.
    for v in 0..n {
        if mate[v] != NONE {
            continue;
        }
        for &w in g.neighbors(v) {
            if mate[w] == NONE {
                mate[v] = w;
                mate[w] = v;
                break;
            }
        }
    }

    let mut parent = vec![NONE; n];
    let mut base = vec![0usize; n];
    for start in 0..n {
        if mate[start] != NONE {
            continue;
        }
        if let Some(end) = find_augmenting_path(g, &mate, &mut parent, &mut base, start) {
            augment(&mut mate, &parent, end);
        }
    }

    let mut edges = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if m != NONE && v < m {
            edges.push(Edge::new(v, m));
        }
    }
    edges.sort_unstable();
    let m = Matching {
        edges,
        host_order: g.order(),
        host_hash: g.edge_set_hash(),
    };
    debug_assert!(is_matching(g, m.edges()));
    m
}

/// The edge independence number `alpha'(g)`.
pub fn matching_number(g: &Graph) -> usize {
    let size = maximum_matching(g).len();
    // alpha'(G) <= floor(n/2) always; a violation means the search is broken.
    assert!(
        size <= g.order() / 2,
        "matching larger than floor(n/2): {} on order {}",
        size,
        g.order()
    );
    size
}

fn find_augmenting_path(
    g: &Graph,
    mate: &[usize],
    parent: &mut [usize],
    base: &mut [usize],
    start: usize,
) -> Option<usize> {
    let n = g.order();
    parent.fill(NONE);
    for (i, b) in base.iter_mut().enumerate() {
        *b = i;
    }
    let mut in_tree = vec![false; n];
    in_tree[start] = true;
    let mut queue = VecDeque::new();
    queue.push_back(start);

    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == start || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // Odd cycle: contract the blossom at the tree lca.
                let cur = lca(mate, parent, base, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(mate, parent, base, &mut in_blossom, v, cur, to);
                mark_path(mate, parent, base, &mut in_blossom, to, cur, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur;
                        if !in_tree[i] {
                            in_tree[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some(to);
                }
                in_tree[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn lca(mate: &[usize], parent: &[usize], base: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut seen = vec![false; base.len()];
    loop {
        a = base[a];
        seen[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    mate: &[usize],
    parent: &mut [usize],
    base: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    stem: usize,
    mut child: usize,
) {
    while base[v] != stem {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], parent: &[usize], mut v: usize) {
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

/// Cutoff guarding the exhaustive oracle. An instance is accepted when it
/// has at most `max_edges` edges or at most `max_order` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCutoff {
    pub max_edges: usize,
    pub max_order: usize,
}

impl Default for OracleCutoff {
    fn default() -> Self {
        OracleCutoff {
            max_edges: 16,
            max_order: 14,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error(
        "instance too large for the exhaustive matching oracle: {edges} edges on {order} \
         vertices (cutoff: {max_edges} edges or {max_order} vertices)"
    )]
    InstanceTooLarge {
        edges: usize,
        order: usize,
        max_edges: usize,
        max_order: usize,
    },
}

/// Exact `alpha'(g)` by exhaustive search: branch on each edge in/out with
/// disjointness pruning. Refuses instances beyond the cutoff instead of
/// approximating.
///
/// This is an independent code path from [`maximum_matching`] and exists to
/// cross-check it.
pub fn oracle_matching_number(g: &Graph, cutoff: OracleCutoff) -> Result<usize, MatchingError> {
    if g.size() > cutoff.max_edges && g.order() > cutoff.max_order {
        return Err(MatchingError::InstanceTooLarge {
            edges: g.size(),
            order: g.order(),
            max_edges: cutoff.max_edges,
            max_order: cutoff.max_order,
        });
    }
    let mut used = vec![false; g.order()];
    let mut best = 0;
    branch(g.edges(), &mut used, 0, g.order(), &mut best);
    Ok(best)
}

fn branch(rest: &[Edge], used: &mut [bool], picked: usize, free: usize, best: &mut usize) {
    if picked > *best {
        *best = picked;
    }
    let Some((e, tail)) = rest.split_first() else {
        return;
    };
    // Upper bound: every further edge uses two free vertices.
    if picked + (free / 2).min(rest.len()) <= *best {
        return;
    }
    let (u, v) = e.endpoints();
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        branch(tail, used, picked + 1, free - 2, best);
        used[u] = false;
        used[v] = false;
    }
    branch(tail, used, picked, free, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_matches() {
        let g = Graph::complete(2);
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 1);
        assert!(m.verify(&g));
    }

    #[test]
    fn triangle_and_square_by_parity() {
        assert_eq!(matching_number(&Graph::complete(3)), 1);
        assert_eq!(matching_number(&Graph::cycle(4)), 2);
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let g = Graph::petersen();
        assert_eq!(matching_number(&g), 5);
        assert_eq!(oracle_matching_number(&g, OracleCutoff::default()), Ok(5));
    }

    #[test]
    fn empty_graph_has_no_matching() {
        let g = Graph::build(5, &[]).unwrap();
        assert_eq!(matching_number(&g), 0);
        assert!(maximum_matching(&g).is_empty());
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(
            oracle_matching_number(&Graph::complete(4), OracleCutoff::default()),
            Ok(2)
        );
        assert_eq!(
            oracle_matching_number(&Graph::path(4), OracleCutoff::default()),
            Ok(2)
        );
    }

    #[test]
    fn oracle_refuses_large_instances() {
        let g = Graph::random(20, 0.5, 7);
        assert!(g.size() > 16);
        let err = oracle_matching_number(&g, OracleCutoff::default()).unwrap_err();
        assert!(matches!(err, MatchingError::InstanceTooLarge { .. }));
        // A raised cutoff accepts by order.
        let wide = OracleCutoff {
            max_edges: 16,
            max_order: 20,
        };
        assert!(oracle_matching_number(&g, wide).is_ok());
    }

    #[test]
    fn is_matching_detects_shared_endpoints() {
        let g = Graph::complete(3);
        assert!(is_matching(&g, &[Edge::new(0, 1)]));
        assert!(!is_matching(&g, &[Edge::new(0, 1), Edge::new(1, 2)]));
        let c4 = Graph::cycle(4);
        assert!(is_matching(&c4, &[Edge::new(0, 1), Edge::new(2, 3)]));
        // Edge not in host.
        assert!(!is_matching(&c4, &[Edge::new(0, 2)]));
    }

    #[test]
    fn matching_records_host_identity() {
        let g = Graph::cycle(4);
        let other = Graph::cycle(5);
        let m = maximum_matching(&g);
        assert!(m.matches_host(&g));
        assert!(!m.matches_host(&other));
        assert!(!m.verify(&other));
    }

    #[test]
    fn blossom_case_five_cycle_with_chord() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        assert_eq!(matching_number(&g), 2);
    }

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        let mut checked = 0;
        for seed in 0..120u64 {
            let n = 2 + (seed as usize * 7) % 11; // 2..=12
            let p = 0.15 + 0.07 * ((seed % 11) as f64);
            let g = Graph::random(n, p.min(0.95), seed);
            let fast = matching_number(&g);
            let slow = oracle_matching_number(&g, OracleCutoff::default()).unwrap();
            assert_eq!(fast, slow, "mismatch on seed {seed} (n={n})");
            checked += 1;
        }
        assert!(checked >= 100);
    }

    #[test]
    fn add_edge_monotone_delete_vertex_lipschitz() {
        for seed in 200..240u64 {
            let g = Graph::random(9, 0.35, seed);
            let base = matching_number(&g);
            for v in 0..g.order() {
                let h = g.delete_vertex(v).unwrap();
                let dropped = matching_number(&h);
                assert!(dropped + 1 >= base, "delete dropped alpha' by more than 1");
                assert!(dropped <= base);
            }
            for u in 0..g.order() {
                for v in (u + 1)..g.order() {
                    if !g.has_edge(u, v) {
                        let h = g.add_edge(u, v).unwrap();
                        assert!(matching_number(&h) >= base);
                    }
                }
            }
        }
    }
}
