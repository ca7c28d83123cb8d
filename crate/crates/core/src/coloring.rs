//! Proper edge colorings: the constructive `(Delta+1)` bound, an exact
//! chromatic-index decider at desk scale, and the Class-one/Class-two
//! classification pipeline.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::certify::{certify_exact, certify_half_order, ClassTwoCertificate};
use crate::graph::Graph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("edge coloring needs a nonempty graph (m >= 1)")]
    EmptyGraph,
    #[error("coloring has {got} entries for a graph with {expected} edges")]
    WrongLength { expected: usize, got: usize },
    #[error("edge colors are 1-based; found color 0")]
    ZeroColor,
    #[error(
        "search budget exceeded after {nodes} nodes: chromatic index is in \
         [{lower}, {upper}]"
    )]
    BudgetExceeded {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
    #[error("instance has {edges} edges, above the search cap of {max_edges}: \
             chromatic index is in [{lower}, {upper}]")]
    TooManyEdges {
        edges: usize,
        max_edges: usize,
        lower: usize,
        upper: usize,
    },
}

/// A per-edge color assignment over a host graph, colors `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    palette: usize,
    host_order: usize,
    host_hash: u64,
}

impl EdgeColoring {
    /// Wraps per-edge colors (indexed by edge id) for `g`. The palette is
    /// the largest color used. Properness is checked by [`is_proper`], not
    /// here, so invalid colorings can be represented and then rejected.
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self, ColoringError> {
        Self::with_palette_opt(g, colors, None)
    }

    /// Same as [`EdgeColoring::new`] with an explicitly declared palette,
    /// which must cover every used color.
    pub fn with_palette(g: &Graph, colors: Vec<usize>, k: usize) -> Result<Self, ColoringError> {
        Self::with_palette_opt(g, colors, Some(k))
    }

    fn with_palette_opt(
        g: &Graph,
        colors: Vec<usize>,
        k: Option<usize>,
    ) -> Result<Self, ColoringError> {
        if colors.len() != g.size() {
            return Err(ColoringError::WrongLength {
                expected: g.size(),
                got: colors.len(),
            });
        }
        if colors.contains(&0) {
            return Err(ColoringError::ZeroColor);
        }
        let max = colors.iter().copied().max().unwrap_or(0);
        let palette = match k {
            Some(k) if k >= max => k,
            Some(k) => {
                return Err(ColoringError::WrongLength {
                    expected: k,
                    got: max,
                })
            }
            None => max,
        };
        Ok(EdgeColoring {
            colors,
            palette,
            host_order: g.order(),
            host_hash: g.edge_set_hash(),
        })
    }

    /// Color of the edge with the given id.
    pub fn color(&self, edge_id: usize) -> usize {
        self.colors[edge_id]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn matches_host(&self, g: &Graph) -> bool {
        self.host_order == g.order() && self.host_hash == g.edge_set_hash()
    }

    /// Relabels colors by first occurrence in edge-id order, making the
    /// palette contiguous. Canonical form for golden comparisons.
    pub fn canonicalize(mut self) -> Self {
        let mut map = vec![0usize; self.palette + 1];
        let mut next = 0usize;
        for c in &mut self.colors {
            if map[*c] == 0 {
                next += 1;
                map[*c] = next;
            }
            *c = map[*c];
        }
        self.palette = next;
        self
    }
}

/// True iff `c` colors every edge of `g`, adjacent edges get distinct
/// colors, and the palette covers at least `Delta(g)` colors.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> bool {
    if !c.matches_host(g) || c.colors.len() != g.size() {
        return false;
    }
    if c.palette < g.max_degree() {
        return false;
    }
    if c.colors.iter().any(|&col| col == 0 || col > c.palette) {
        return false;
    }
    let mut seen = vec![0usize; g.order() * (c.palette + 1)];
    for (id, e) in g.edges().iter().enumerate() {
        let col = c.colors[id];
        for v in [e.lo(), e.hi()] {
            let slot = &mut seen[v * (c.palette + 1) + col];
            if *slot > 0 {
                return false;
            }
            *slot = 1;
        }
    }
    true
}

/// Working state for the fan/Kempe-chain construction: per-edge colors plus
/// a vertex-by-color index of which edge uses a color at a vertex.
struct FanState<'a> {
    g: &'a Graph,
    k_max: usize,
    colors: Vec<Option<usize>>,
    at: Vec<Vec<Option<usize>>>, // [vertex][color] -> edge id
    inc: Vec<Vec<(usize, usize)>>, // vertex -> (neighbor, edge id), sorted
}

impl<'a> FanState<'a> {
    fn new(g: &'a Graph) -> Self {
        let k_max = g.max_degree() + 1;
        let mut inc = vec![Vec::new(); g.order()];
        for (id, e) in g.edges().iter().enumerate() {
            inc[e.lo()].push((e.hi(), id));
            inc[e.hi()].push((e.lo(), id));
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        FanState {
            g,
            k_max,
            colors: vec![None; g.size()],
            at: vec![vec![None; k_max + 1]; g.order()],
            inc,
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    /// Smallest free color at `v`; one always exists in a `Delta+1` palette.
    fn free_color(&self, v: usize) -> usize {
        (1..=self.k_max)
            .find(|&c| self.is_free(v, c))
            .expect("Delta+1 colors cannot all be used at one vertex")
    }

    fn assign(&mut self, edge_id: usize, c: usize) {
        debug_assert!(self.colors[edge_id].is_none());
        let e = self.g.edges()[edge_id];
        for v in [e.lo(), e.hi()] {
            debug_assert!(self.at[v][c].is_none(), "color {c} clashes at {v}");
            self.at[v][c] = Some(edge_id);
        }
        self.colors[edge_id] = Some(c);
    }

    fn unassign(&mut self, edge_id: usize) -> usize {
        let c = self.colors[edge_id].take().expect("edge was colored");
        let e = self.g.edges()[edge_id];
        for v in [e.lo(), e.hi()] {
            self.at[v][c] = None;
        }
        c
    }

    /// Maximal fan at `u` starting from the uncolored edge to `v`: a list of
    /// distinct neighbors where each next edge's color is free at the
    /// previous fan vertex. Neighbors are scanned lowest-index-first.
    fn maximal_fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.g.order()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().expect("fan is nonempty");
            let mut extended = false;
            for &(w, eid) in &self.inc[u] {
                if in_fan[w] {
                    continue;
                }
                if let Some(c) = self.colors[eid] {
                    if self.is_free(last, c) {
                        fan.push(w);
                        in_fan[w] = true;
                        extended = true;
                        break;
                    }
                }
            }
            if !extended {
                return fan;
            }
        }
    }

    /// The maximal path from `u` along edges colored alternately `first`
    /// and `second`. Each vertex holds at most one edge of each color, so
    /// the walk is a simple path.
    fn alternating_path(&self, u: usize, first: usize, second: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = u;
        let mut want = first;
        while let Some(eid) = self.at[cur][want] {
            path.push(eid);
            cur = self.g.edges()[eid].other(cur);
            want = if want == first { second } else { first };
        }
        path
    }

    /// Swaps colors `c` and `d` along a path of edge ids.
    fn invert_path(&mut self, path: &[usize], c: usize, d: usize) {
        let flipped: Vec<usize> = path
            .iter()
            .map(|&eid| {
                let old = self.unassign(eid);
                debug_assert!(old == c || old == d);
                if old == c {
                    d
                } else {
                    c
                }
            })
            .collect();
        for (&eid, &col) in path.iter().zip(&flipped) {
            self.assign(eid, col);
        }
    }

    /// True when `fan[..=w]` is still a fan for the uncolored edge
    /// `(u, fan[0])` under the current colors.
    fn fan_prefix_valid(&self, u: usize, fan: &[usize], w: usize) -> bool {
        (1..=w).all(|i| {
            let edge_id = self
                .edge_to(u, fan[i])
                .expect("fan vertices are neighbors of u");
            match self.colors[edge_id] {
                Some(c) => self.is_free(fan[i - 1], c),
                None => false,
            }
        })
    }

    fn edge_to(&self, u: usize, w: usize) -> Option<usize> {
        self.inc[u]
            .binary_search_by_key(&w, |&(nbr, _)| nbr)
            .ok()
            .map(|i| self.inc[u][i].1)
    }

    /// Colors the edge `(u, v)` (uncolored), possibly recoloring a fan and
    /// inverting one alternating path. Tie-breaks are lowest-first.
    fn color_edge(&mut self, u: usize, v: usize) {
        let eid = self.edge_to(u, v).expect("edge exists");
        let fan = self.maximal_fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().expect("fan nonempty"));

        if !self.is_free(u, d) {
            // Invert the maximal (d, c) path from u; afterwards d is free
            // at u and the fan lemma guarantees a usable prefix.
            let path = self.alternating_path(u, d, c);
            self.invert_path(&path, c, d);
        }
        debug_assert!(self.is_free(u, d));

        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.fan_prefix_valid(u, &fan, i))
            .expect("fan rotation target exists");

        // Rotate: each fan edge takes the color of its successor; the last
        // prefix edge takes d.
        for i in 1..=w {
            let shifted = self
                .edge_to(u, fan[i])
                .expect("fan vertices are neighbors of u");
            let col = self.unassign(shifted);
            let receiver = self
                .edge_to(u, fan[i - 1])
                .expect("fan vertices are neighbors of u");
            if i == 1 {
                debug_assert_eq!(receiver, eid);
            }
            self.assign(receiver, col);
        }
        let last_edge = self.edge_to(u, fan[w]).expect("fan vertex is a neighbor");
        self.assign(last_edge, d);
    }
}

/// Constructs a proper edge coloring with at most `Delta(g) + 1` colors.
///
/// Deterministic: edges are inserted in lexicographic order and every
/// tie-break is lowest-first. The result is canonicalized, so colors are
/// labeled by first appearance.
pub fn vizing_color(g: &Graph) -> Result<EdgeColoring, ColoringError> {
    if g.size() == 0 {
        return Err(ColoringError::EmptyGraph);
    }
    let mut state = FanState::new(g);
    for (id, e) in g.edges().iter().enumerate() {
        debug_assert!(state.colors[id].is_none());
        state.color_edge(e.lo(), e.hi());
    }
    let colors: Vec<usize> = state
        .colors
        .iter()
        .map(|c| c.expect("all edges colored"))
        .collect();
    let coloring = EdgeColoring::new(g, colors)?.canonicalize();
    debug_assert!(is_proper(g, &coloring));
    debug_assert!(coloring.palette() <= g.max_degree() + 1);
    Ok(coloring)
}

/// Resource limits for the exact chromatic-index search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Hard cap on instance size; larger graphs are refused up front.
    pub max_edges: usize,
    /// Cap on explored search nodes (deterministic limit).
    pub max_nodes: u64,
    /// Wall-clock cap (safety net for pathological instances).
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 60,
            max_nodes: 50_000_000,
            time_limit: Duration::from_secs(10),
        }
    }
}

/// Evidence that an exhaustive search refuted a `Delta`-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTranscript {
    pub colors_searched: usize,
    pub nodes: u64,
}

/// Outcome of classification, with a validating witness either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    /// `chi' = Delta`; the witness is a proper Delta-edge-coloring.
    One(EdgeColoring),
    /// `chi' = Delta + 1`; the witness is a certificate or a search
    /// transcript.
    Two(ClassTwoWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassTwoWitness {
    Certificate(ClassTwoCertificate),
    Search(SearchTranscript),
}

struct DeltaSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>, // edge ids, forced prefix first
    forced: usize,
    free: Vec<u64>, // per-vertex bitmask of free colors (bit i = color i+1)
    assigned: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    out_of_budget: bool,
}

impl<'a> DeltaSearch<'a> {
    fn new(g: &'a Graph, budget: &SearchBudget) -> Self {
        let delta = g.max_degree();
        // Symmetry breaking: the incident edges of one maximum-degree
        // vertex can be pre-colored 1..=Delta in any proper Delta-coloring.
        let vstar = (0..g.order())
            .find(|&v| g.degree(v) == delta)
            .expect("some vertex has maximum degree");
        let forced_ids: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.touches(vstar))
            .map(|(id, _)| id)
            .collect();

        // Fail-first: remaining edges by descending endpoint degree sum.
        let mut rest: Vec<usize> = (0..g.size()).filter(|id| !forced_ids.contains(id)).collect();
        rest.sort_by_key(|&id| {
            let e = g.edges()[id];
            (
                std::cmp::Reverse(g.degree(e.lo()) + g.degree(e.hi())),
                id,
            )
        });

        let full: u64 = if delta == 64 {
            u64::MAX
        } else {
            (1u64 << delta) - 1
        };
        let mut search = DeltaSearch {
            g,
            forced: forced_ids.len(),
            order: forced_ids.iter().copied().chain(rest).collect(),
            free: vec![full; g.order()],
            assigned: vec![0; g.size()],
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: Instant::now() + budget.time_limit,
            out_of_budget: false,
        };
        for (i, &id) in forced_ids.iter().enumerate() {
            search.take(id, i + 1);
        }
        search
    }

    fn take(&mut self, edge_id: usize, color: usize) {
        let e = self.g.edges()[edge_id];
        let bit = 1u64 << (color - 1);
        self.free[e.lo()] &= !bit;
        self.free[e.hi()] &= !bit;
        self.assigned[edge_id] = color;
    }

    fn release(&mut self, edge_id: usize) {
        let e = self.g.edges()[edge_id];
        let bit = 1u64 << (self.assigned[edge_id] - 1);
        self.free[e.lo()] |= bit;
        self.free[e.hi()] |= bit;
        self.assigned[edge_id] = 0;
    }

    fn solve(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes & 0xFFF == 0 && Instant::now() > self.deadline)
        {
            self.out_of_budget = true;
            return false;
        }
        if pos == self.order.len() {
            return true;
        }
        let edge_id = self.order[pos];
        let e = self.g.edges()[edge_id];
        let mut avail = self.free[e.lo()] & self.free[e.hi()];
        while avail != 0 {
            let bit = avail & avail.wrapping_neg();
            avail ^= bit;
            let color = bit.trailing_zeros() as usize + 1;
            self.take(edge_id, color);
            if self.solve(pos + 1) {
                return true;
            }
            self.release(edge_id);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

fn search_delta_coloring(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<(Option<Vec<usize>>, u64), ColoringError> {
    let delta = g.max_degree();
    // The color mask is a u64; Delta > 64 needs m > 64 edges anyway, so
    // clamp the effective cap and refuse with the Vizing interval.
    let cap = budget.max_edges.min(64);
    if g.size() > cap {
        return Err(ColoringError::TooManyEdges {
            edges: g.size(),
            max_edges: cap,
            lower: delta,
            upper: delta + 1,
        });
    }
    // A proper Delta-coloring splits the edge set into Delta matchings of
    // size at most floor(n/2). More edges than that cannot be colored, and
    // dense odd-order instances would otherwise exhaust any node budget.
    if g.size() > delta * (g.order() / 2) {
        return Ok((None, 0));
    }
    let mut search = DeltaSearch::new(g, budget);
    // A vertex of degree Delta forces all Delta colors pairwise distinct;
    // if the forced prefix is inconsistent the graph has a Delta+... never:
    // pre-coloring a star is always proper, so start the search directly.
    let found = search.solve(search.forced);
    if search.out_of_budget {
        return Err(ColoringError::BudgetExceeded {
            lower: delta,
            upper: delta + 1,
            nodes: search.nodes,
        });
    }
    if found {
        Ok((Some(search.assigned.clone()), search.nodes))
    } else {
        Ok((None, search.nodes))
    }
}

/// Decides `chi'(g)` exactly: `Delta` when a proper `Delta`-coloring
/// exists, `Delta + 1` otherwise.
pub fn chromatic_index_exact(g: &Graph, budget: &SearchBudget) -> Result<usize, ColoringError> {
    if g.size() == 0 {
        return Err(ColoringError::EmptyGraph);
    }
    let (found, _) = search_delta_coloring(g, budget)?;
    Ok(if found.is_some() {
        g.max_degree()
    } else {
        g.max_degree() + 1
    })
}

/// Classification pipeline: certificates first, exhaustive search second.
///
/// A fired certificate settles Class two without any search. Otherwise the
/// exact decider either produces a witness `Delta`-coloring (Class one) or
/// a refutation transcript (Class two).
pub fn classify(g: &Graph, budget: &SearchBudget) -> Result<ClassLabel, ColoringError> {
    if g.size() == 0 {
        return Err(ColoringError::EmptyGraph);
    }
    let half = certify_half_order(g).expect("nonempty graph");
    if let Some(cert) = half {
        return Ok(ClassLabel::Two(ClassTwoWitness::Certificate(cert)));
    }
    let exact = certify_exact(g).expect("nonempty graph");
    if let Some(cert) = exact {
        return Ok(ClassLabel::Two(ClassTwoWitness::Certificate(cert)));
    }
    let (solution, nodes) = search_delta_coloring(g, budget)?;
    match solution {
        Some(colors) => {
            let witness = EdgeColoring::new(g, colors)?.canonicalize();
            debug_assert!(is_proper(g, &witness));
            debug_assert_eq!(witness.palette(), g.max_degree());
            Ok(ClassLabel::One(witness))
        }
        None => Ok(ClassLabel::Two(ClassTwoWitness::Search(SearchTranscript {
            colors_searched: g.max_degree(),
            nodes,
        }))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_needs_one_color() {
        let g = Graph::complete(2);
        let c = vizing_color(&g).unwrap();
        assert_eq!(c.palette(), 1);
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn triangle_needs_three_colors() {
        let g = Graph::complete(3);
        let c = vizing_color(&g).unwrap();
        assert_eq!(c.palette(), 3);
        assert!(is_proper(&g, &c));
        assert_eq!(chromatic_index_exact(&g, &SearchBudget::default()), Ok(3));
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = Graph::build(2, &[]).unwrap();
        assert_eq!(vizing_color(&g).unwrap_err(), ColoringError::EmptyGraph);
        assert_eq!(
            chromatic_index_exact(&g, &SearchBudget::default()).unwrap_err(),
            ColoringError::EmptyGraph
        );
    }

    #[test]
    fn is_proper_examples() {
        let k3 = Graph::complete(3);
        let good = EdgeColoring::new(&k3, vec![1, 2, 3]).unwrap();
        assert!(is_proper(&k3, &good));
        let bad = EdgeColoring::new(&k3, vec![1, 1, 2]).unwrap();
        assert!(!is_proper(&k3, &bad));

        let p3 = Graph::path(3);
        let ok = EdgeColoring::new(&p3, vec![1, 2]).unwrap();
        assert!(is_proper(&p3, &ok));
        // Host mismatch is improper.
        assert!(!is_proper(&k3, &ok));
    }

    #[test]
    fn known_chromatic_indices() {
        let budget = SearchBudget::default();
        assert_eq!(chromatic_index_exact(&Graph::complete(4), &budget), Ok(3));
        assert_eq!(chromatic_index_exact(&Graph::cycle(5), &budget), Ok(3));
        assert_eq!(chromatic_index_exact(&Graph::cycle(6), &budget), Ok(2));
        assert_eq!(chromatic_index_exact(&Graph::petersen(), &budget), Ok(4));
    }

    #[test]
    fn classify_k4_is_class_one_with_witness() {
        let g = Graph::complete(4);
        match classify(&g, &SearchBudget::default()).unwrap() {
            ClassLabel::One(witness) => {
                assert_eq!(witness.palette(), 3);
                assert!(is_proper(&g, &witness));
            }
            other => panic!("expected Class one, got {other:?}"),
        }
    }

    #[test]
    fn classify_c5_is_class_two_via_certificate() {
        // Odd cycles are overfull (m = n > (n-1)/2 * 2), so the pipeline
        // settles C5 before any search.
        match classify(&Graph::cycle(5), &SearchBudget::default()).unwrap() {
            ClassLabel::Two(ClassTwoWitness::Certificate(cert)) => {
                assert!(cert.holds());
                assert_eq!(cert.inequality(), "5 > 4 = 2 * 2");
            }
            other => panic!("expected certificate, got {other:?}"),
        }
        assert_eq!(
            chromatic_index_exact(&Graph::cycle(5), &SearchBudget::default()),
            Ok(3)
        );
    }

    #[test]
    fn classify_petersen_is_class_two_by_search() {
        // No certificate fires on Petersen (15 is not > 15), so the label
        // must come with an exhaustive refutation transcript.
        match classify(&Graph::petersen(), &SearchBudget::default()).unwrap() {
            ClassLabel::Two(ClassTwoWitness::Search(t)) => {
                assert_eq!(t.colors_searched, 3);
                assert!(t.nodes > 0);
            }
            other => panic!("expected search transcript, got {other:?}"),
        }
    }

    #[test]
    fn classify_triangle_uses_certificate_without_search() {
        match classify(&Graph::complete(3), &SearchBudget::default()).unwrap() {
            ClassLabel::Two(ClassTwoWitness::Certificate(cert)) => assert!(cert.holds()),
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn budget_cap_reports_interval() {
        let g = Graph::random(30, 0.5, 3);
        let tight = SearchBudget {
            max_edges: 10,
            ..SearchBudget::default()
        };
        match chromatic_index_exact(&g, &tight).unwrap_err() {
            ColoringError::TooManyEdges { lower, upper, .. } => {
                assert_eq!(upper, lower + 1);
                assert_eq!(lower, g.max_degree());
            }
            other => panic!("expected TooManyEdges, got {other:?}"),
        }
    }

    #[test]
    fn node_budget_is_enforced() {
        // Petersen's refutation needs more than a handful of nodes.
        let g = Graph::petersen();
        let tiny = SearchBudget {
            max_nodes: 5,
            ..SearchBudget::default()
        };
        match chromatic_index_exact(&g, &tiny).unwrap_err() {
            ColoringError::BudgetExceeded { lower, upper, .. } => {
                assert_eq!((lower, upper), (3, 4));
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn vizing_bound_on_random_graphs() {
        for seed in 0..150u64 {
            let n = 2 + (seed as usize % 20);
            let p = 0.1 + 0.08 * ((seed % 10) as f64);
            let g = Graph::random(n, p, seed ^ 0xabc);
            if g.size() == 0 {
                continue;
            }
            let c = vizing_color(&g).unwrap();
            assert!(is_proper(&g, &c), "improper coloring on seed {seed}");
            assert!(
                c.palette() <= g.max_degree() + 1,
                "palette {} exceeds Delta+1 on seed {seed}",
                c.palette()
            );
        }
    }

    #[test]
    fn canonical_colors_start_at_one_and_are_contiguous() {
        let g = Graph::random(12, 0.4, 99);
        let c = vizing_color(&g).unwrap();
        let mut seen = vec![false; c.palette() + 1];
        for &col in c.colors() {
            assert!(col >= 1 && col <= c.palette());
            seen[col] = true;
        }
        assert!(seen[1..].iter().all(|&b| b), "palette has gaps");
        // First occurrences are in increasing order.
        let mut next_new = 1;
        for &col in c.colors() {
            if col == next_new {
                next_new += 1;
            }
            assert!(col < next_new);
        }
    }

    #[test]
    fn classification_matches_exact_decider() {
        let budget = SearchBudget::default();
        for seed in 0..80u64 {
            let n = 3 + (seed as usize % 8);
            let g = Graph::random(n, 0.5, seed.wrapping_mul(31));
            if g.size() == 0 {
                continue;
            }
            let chi = chromatic_index_exact(&g, &budget).unwrap();
            let label = classify(&g, &budget).unwrap();
            match label {
                ClassLabel::One(w) => {
                    assert_eq!(chi, g.max_degree());
                    assert!(is_proper(&g, &w));
                    assert_eq!(w.palette(), g.max_degree());
                }
                ClassLabel::Two(_) => assert_eq!(chi, g.max_degree() + 1),
            }
        }
    }
}
