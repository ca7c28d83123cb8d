//! Naive exhaustive reference implementations.
//!
//! These deliberately share no code with the fast paths: plain enumeration
//! in natural edge order with properness checks by adjacency scan. They
//! exist so tests can cross-check the production algorithms against an
//! independent route.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive coloring oracle needs a nonempty graph")]
    EmptyGraph,
    #[error("instance has {edges} edges, above the oracle cap of {max_edges}")]
    TooLarge { edges: usize, max_edges: usize },
}

/// Decides by plain enumeration whether `g` has a proper edge coloring with
/// at most `k` colors. Colors are tried in canonical order (a new color is
/// introduced only after all previously used ones), which prunes label
/// permutations but still enumerates every distinct coloring pattern.
pub fn has_proper_edge_coloring(g: &Graph, k: usize) -> bool {
    let m = g.size();
    if m == 0 {
        return true;
    }
    let mut colors = vec![0usize; m];

    fn conflicts(g: &Graph, colors: &[usize], idx: usize, c: usize) -> bool {
        let e = g.edges()[idx];
        for (j, f) in g.edges().iter().enumerate().take(idx) {
            if colors[j] == c && e.shares_endpoint(*f) {
                return true;
            }
        }
        false
    }

    fn enumerate(g: &Graph, colors: &mut [usize], idx: usize, used: usize, k: usize) -> bool {
        if idx == colors.len() {
            return true;
        }
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            if !conflicts(g, colors, idx, c) {
                colors[idx] = c;
                if enumerate(g, colors, idx + 1, used.max(c), k) {
                    return true;
                }
                colors[idx] = 0;
            }
        }
        false
    }

    enumerate(g, &mut colors, 0, 0, k)
}

/// Exact chromatic index by exhaustive enumeration: `Delta` if a proper
/// `Delta`-coloring exists, otherwise `Delta + 1`.
pub fn chromatic_index(g: &Graph, max_edges: usize) -> Result<usize, OracleError> {
    if g.size() == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if g.size() > max_edges {
        return Err(OracleError::TooLarge {
            edges: g.size(),
            max_edges,
        });
    }
    let delta = g.max_degree();
    Ok(if has_proper_edge_coloring(g, delta) {
        delta
    } else {
        delta + 1
    })
}
