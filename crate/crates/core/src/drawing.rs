//! Combinatorial 1-planar drawings.
//!
//! A drawing is a set of crossing pairs plus a rotation system of the
//! planarization (the plane graph obtained by replacing each crossing with
//! a degree-4 dummy vertex). Drawings carry no coordinates: the claim being
//! verified is combinatorial, and Euler's formula `V - E + F = 2` on the
//! traced faces is the planarity arbiter.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::report::Report;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("crossing references edge {0} which is not in the host graph")]
    MissingEdge(Edge),
    #[error("edge {0} appears in more than one crossing pair")]
    EdgeCrossedTwice(Edge),
    #[error("crossing between adjacent edges {0} and {1} (drawings are normalized to cross independent edges only)")]
    AdjacentCrossing(Edge, Edge),
    #[error("rotation system lists {got} vertices, planarization has {expected}")]
    RotationCount { expected: usize, got: usize },
    #[error("rotation at planarization vertex {vertex} does not match its incident segments")]
    RotationMismatch { vertex: usize },
    #[error("twisted dummy vertex {dummy}: the two segments of each crossed edge must alternate")]
    TwistedDummy { dummy: usize },
    #[error("planarization is disconnected; the Euler check requires a connected drawing")]
    Disconnected,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RegularizeError {
    #[error("graph has no 2-vertex")]
    NoTwoVertex,
    #[error("graph has {0} 2-vertices, expected exactly one")]
    MultipleTwoVertices(usize),
    #[error("the neighbors {a} and {b} of the 2-vertex are adjacent; joining them would create a parallel edge")]
    NeighborsAdjacent { a: usize, b: usize },
    #[error("both edges at the 2-vertex are crossed; the joined edge cannot keep at most one crossing")]
    BothLegsCrossed,
    #[error("crossing partner {partner} touches neighbor {neighbor}; the joined edge would cross an adjacent edge")]
    CrossingPartnerBlocked { partner: Edge, neighbor: usize },
    #[error("drawing belongs to a different host graph")]
    HostMismatch,
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

/// Raw drawing data as read from a bundle: crossing pairs plus one rotation
/// list per planarization vertex. Validation happens in [`build_drawing`]
/// and, item by item, in [`verify_drawing_spec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawingSpec {
    pub crossings: Vec<(Edge, Edge)>,
    pub rotations: Vec<Vec<usize>>,
}

/// A structurally validated 1-planar drawing candidate.
///
/// Construction checks the crossing pairing, independence normalization,
/// and rotation well-formedness eagerly; connectivity and the Euler
/// identity are deferred to [`verify_drawing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePlanarDrawing {
    host: Graph,
    crossings: Vec<(Edge, Edge)>,
    rotations: Vec<Vec<usize>>,
}

/// The plane graph of a drawing: one dummy vertex per crossing, each host
/// edge mapped to one or two segments.
#[derive(Clone, Debug)]
pub struct Planarization {
    pub graph: Graph,
    pub rotations: Vec<Vec<usize>>,
    /// Host edge behind each planarization edge (indexed by edge id).
    pub origin: Vec<Edge>,
}

/// Normalizes crossing pairs: each pair ordered, the list sorted.
fn normalize_crossings(crossings: &[(Edge, Edge)]) -> Vec<(Edge, Edge)> {
    let mut out: Vec<(Edge, Edge)> = crossings
        .iter()
        .map(|&(e, f)| if e <= f { (e, f) } else { (f, e) })
        .collect();
    out.sort_unstable();
    out
}

/// Checks the crossing list alone: edges exist, none crossed twice, pairs
/// independent. Returns the normalized list.
fn check_crossings(g: &Graph, crossings: &[(Edge, Edge)]) -> Result<Vec<(Edge, Edge)>, DrawingError> {
    for &(e, f) in crossings {
        for edge in [e, f] {
            if !g.contains(edge) {
                return Err(DrawingError::MissingEdge(edge));
            }
        }
        if e == f {
            return Err(DrawingError::EdgeCrossedTwice(e));
        }
        if e.shares_endpoint(f) {
            return Err(DrawingError::AdjacentCrossing(e, f));
        }
    }
    let normalized = normalize_crossings(crossings);
    let mut seen: Vec<Edge> = Vec::with_capacity(2 * normalized.len());
    for &(e, f) in &normalized {
        seen.push(e);
        seen.push(f);
    }
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(DrawingError::EdgeCrossedTwice(w[0]));
    }
    Ok(normalized)
}

/// Expected neighbor list of every planarization vertex, given normalized
/// crossings. Dummy `i` sits at id `n + i`.
fn planar_adjacency(g: &Graph, crossings: &[(Edge, Edge)]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut crossed: HashMap<Edge, usize> = HashMap::new();
    for (i, &(e, f)) in crossings.iter().enumerate() {
        crossed.insert(e, i);
        crossed.insert(f, i);
    }
    let mut adj = vec![Vec::new(); n + crossings.len()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        match crossed.get(e) {
            Some(&i) => {
                let dummy = n + i;
                adj[u].push(dummy);
                adj[v].push(dummy);
                adj[dummy].push(u);
                adj[dummy].push(v);
            }
            None => {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    adj
}

fn rotation_matches(rotation: &[usize], expected: &[usize]) -> bool {
    let mut a = rotation.to_vec();
    let mut b = expected.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// True when the dummy's rotation alternates the two segments of `e` with
/// the two segments of `f` (endpoints at positions {0,2} vs {1,3}).
fn dummy_alternates(rotation: &[usize], e: Edge, f: Edge) -> bool {
    if rotation.len() != 4 {
        return false;
    }
    let is_e = |w: usize| e.touches(w);
    let is_f = |w: usize| f.touches(w);
    let all_belong = rotation.iter().all(|&w| is_e(w) || is_f(w));
    all_belong
        && ((is_e(rotation[0]) && is_e(rotation[2]) && is_f(rotation[1]) && is_f(rotation[3]))
            || (is_f(rotation[0]) && is_f(rotation[2]) && is_e(rotation[1]) && is_e(rotation[3])))
}

/// Rotates each cyclic list to start at its lowest-numbered neighbor.
fn canonicalize_rotations(rotations: &mut [Vec<usize>]) {
    for rot in rotations.iter_mut() {
        if let Some(min_pos) = rot
            .iter()
            .enumerate()
            .min_by_key(|&(_, &w)| w)
            .map(|(i, _)| i)
        {
            rot.rotate_left(min_pos);
        }
    }
}

/// Validates a drawing candidate. Structural invariants are checked
/// eagerly; the Euler identity is deferred to [`verify_drawing`].
pub fn build_drawing(g: &Graph, spec: DrawingSpec) -> Result<OnePlanarDrawing, DrawingError> {
    let crossings = check_crossings(g, &spec.crossings)?;
    let expected = planar_adjacency(g, &crossings);
    if spec.rotations.len() != expected.len() {
        return Err(DrawingError::RotationCount {
            expected: expected.len(),
            got: spec.rotations.len(),
        });
    }
    for (vertex, (rot, exp)) in spec.rotations.iter().zip(&expected).enumerate() {
        if !rotation_matches(rot, exp) {
            return Err(DrawingError::RotationMismatch { vertex });
        }
    }
    let n = g.order();
    for (i, &(e, f)) in crossings.iter().enumerate() {
        if !dummy_alternates(&spec.rotations[n + i], e, f) {
            return Err(DrawingError::TwistedDummy { dummy: n + i });
        }
    }
    let mut rotations = spec.rotations;
    canonicalize_rotations(&mut rotations);
    Ok(OnePlanarDrawing {
        host: g.clone(),
        crossings,
        rotations,
    })
}

impl OnePlanarDrawing {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn crossings(&self) -> &[(Edge, Edge)] {
        &self.crossings
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Index of the crossing pair containing `e`, if any.
    pub fn crossing_of(&self, e: Edge) -> Option<usize> {
        self.crossings
            .iter()
            .position(|&(a, b)| a == e || b == e)
    }

    pub fn spec(&self) -> DrawingSpec {
        DrawingSpec {
            crossings: self.crossings.clone(),
            rotations: self.rotations.clone(),
        }
    }

    /// Inserts the dummy vertices. The count identities
    /// `V = n + c` and `E = m + 2c` hold exactly.
    pub fn planarize(&self) -> Planarization {
        let n = self.host.order();
        let mut crossed: HashMap<Edge, usize> = HashMap::new();
        for (i, &(e, f)) in self.crossings.iter().enumerate() {
            crossed.insert(e, i);
            crossed.insert(f, i);
        }
        let mut segments: Vec<(Edge, Edge)> = Vec::new(); // (segment, origin)
        for e in self.host.edges() {
            let (u, v) = e.endpoints();
            match crossed.get(e) {
                Some(&i) => {
                    segments.push((Edge::new(u, n + i), *e));
                    segments.push((Edge::new(v, n + i), *e));
                }
                None => segments.push((*e, *e)),
            }
        }
        segments.sort_unstable();
        let pairs: Vec<(usize, usize)> = segments.iter().map(|(s, _)| s.endpoints()).collect();
        let origin: Vec<Edge> = segments.iter().map(|&(_, o)| o).collect();
        let graph = Graph::build(n + self.crossings.len(), &pairs)
            .expect("planarization of a valid drawing is a simple graph");
        debug_assert_eq!(graph.size(), self.host.size() + 2 * self.crossings.len());
        Planarization {
            graph,
            rotations: self.rotations.clone(),
            origin,
        }
    }
}

/// Counts the faces of a connected plane rotation system: the orbits of the
/// next-segment-in-rotation traversal. Deterministic.
pub fn trace_faces(p: &Planarization) -> Result<usize, DrawingError> {
    if !p.graph.is_connected() {
        return Err(DrawingError::Disconnected);
    }
    let order = p.graph.order();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); order];
    for (v, rot) in p.rotations.iter().enumerate() {
        for (i, &w) in rot.iter().enumerate() {
            pos[v].insert(w, i);
        }
    }
    // Darts (v, w) per edge direction, visited once each.
    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    for e in p.graph.edges() {
        let (u, v) = e.endpoints();
        visited.insert((u, v), false);
        visited.insert((v, u), false);
    }
    let mut faces = 0;
    let darts: Vec<(usize, usize)> = {
        let mut d: Vec<_> = visited.keys().copied().collect();
        d.sort_unstable();
        d
    };
    for start in darts {
        if visited[&start] {
            continue;
        }
        faces += 1;
        let mut dart = start;
        loop {
            *visited.get_mut(&dart).expect("dart exists") = true;
            let (v, w) = dart;
            let rot = &p.rotations[w];
            let i = pos[w][&v];
            let next = rot[(i + 1) % rot.len()];
            dart = (w, next);
            if dart == start {
                break;
            }
        }
    }
    Ok(faces)
}

/// Verifies a raw drawing candidate item by item. Later items that depend
/// on a failed structural item are reported as skipped, so a single defect
/// fails exactly its own item.
pub fn verify_drawing_spec(g: &Graph, spec: &DrawingSpec) -> Report {
    let mut report = Report::new("drawing verification");

    let crossings = match check_crossings(g, &spec.crossings) {
        Ok(normalized) => {
            let pairs = if normalized.len() == 1 { "pair" } else { "pairs" };
            report.pass(
                "edge crossing count",
                format!(
                    "{} crossing {pairs}; each edge crossed at most once",
                    normalized.len()
                ),
            );
            report.pass(
                "crossing independence",
                "no crossing pair shares an endpoint",
            );
            Some(normalized)
        }
        Err(err @ (DrawingError::MissingEdge(_) | DrawingError::EdgeCrossedTwice(_))) => {
            report.fail("edge crossing count", err.to_string());
            // Independence is still decidable on the pairs as given.
            let adjacent = spec
                .crossings
                .iter()
                .find(|&&(e, f)| e != f && e.shares_endpoint(f));
            match adjacent {
                Some(&(e, f)) => report.fail(
                    "crossing independence",
                    DrawingError::AdjacentCrossing(e, f).to_string(),
                ),
                None => report.pass(
                    "crossing independence",
                    "no crossing pair shares an endpoint",
                ),
            }
            None
        }
        Err(err @ DrawingError::AdjacentCrossing(..)) => {
            report.pass(
                "edge crossing count",
                "each edge is crossed at most once".to_string(),
            );
            report.fail("crossing independence", err.to_string());
            None
        }
        Err(other) => {
            report.fail("edge crossing count", other.to_string());
            report.skip("crossing independence", "crossing structure invalid");
            None
        }
    };

    let Some(crossings) = crossings else {
        report.skip("rotation structure", "crossing structure invalid");
        report.skip("dummy alternation", "crossing structure invalid");
        report.skip("planarization connectivity", "crossing structure invalid");
        report.skip("euler characteristic", "crossing structure invalid");
        return report;
    };

    let expected = planar_adjacency(g, &crossings);
    let structure_ok = if spec.rotations.len() != expected.len() {
        report.fail(
            "rotation structure",
            DrawingError::RotationCount {
                expected: expected.len(),
                got: spec.rotations.len(),
            }
            .to_string(),
        );
        false
    } else {
        match spec
            .rotations
            .iter()
            .zip(&expected)
            .position(|(rot, exp)| !rotation_matches(rot, exp))
        {
            Some(vertex) => {
                report.fail(
                    "rotation structure",
                    DrawingError::RotationMismatch { vertex }.to_string(),
                );
                false
            }
            None => {
                report.pass(
                    "rotation structure",
                    "every planarization vertex lists exactly its incident segments",
                );
                true
            }
        }
    };

    let alternation_ok = if structure_ok {
        let n = g.order();
        match crossings
            .iter()
            .enumerate()
            .find(|&(i, &(e, f))| !dummy_alternates(&spec.rotations[n + i], e, f))
        {
            Some((i, _)) => {
                report.fail(
                    "dummy alternation",
                    DrawingError::TwistedDummy { dummy: n + i }.to_string(),
                );
                false
            }
            None => {
                report.pass(
                    "dummy alternation",
                    "crossed edge segments alternate at every dummy vertex",
                );
                true
            }
        }
    } else {
        report.skip("dummy alternation", "rotation structure invalid");
        false
    };

    // Connectivity depends only on the graph and crossings.
    let drawing_for_counts = OnePlanarDrawing {
        host: g.clone(),
        crossings: crossings.clone(),
        rotations: if structure_ok {
            spec.rotations.clone()
        } else {
            planar_adjacency(g, &crossings)
        },
    };
    let planarization = drawing_for_counts.planarize();
    let connected = planarization.graph.is_connected();
    if connected {
        report.pass(
            "planarization connectivity",
            format!(
                "connected on {} vertices, {} edges",
                planarization.graph.order(),
                planarization.graph.size()
            ),
        );
    } else {
        report.fail(
            "planarization connectivity",
            DrawingError::Disconnected.to_string(),
        );
    }

    if structure_ok && alternation_ok && connected {
        let v = planarization.graph.order() as i64;
        let e = planarization.graph.size() as i64;
        let f = trace_faces(&planarization).expect("connected planarization") as i64;
        let detail = format!("V - E + F = {v} - {e} + {f} = {}", v - e + f);
        if v - e + f == 2 {
            report.pass("euler characteristic", detail);
        } else {
            report.fail("euler characteristic", detail);
        }
    } else {
        report.skip("euler characteristic", "structural failure upstream");
    }

    report
}

/// Verifies a validated drawing; structural items always pass here, so the
/// report effectively decides connectivity and the Euler identity.
pub fn verify_drawing(d: &OnePlanarDrawing) -> Report {
    verify_drawing_spec(&d.host, &d.spec())
}

/// Deletes the unique 2-vertex and joins its two neighbors.
///
/// If every other vertex has degree `d`, the result is `d`-regular. With a
/// drawing, the joined edge follows the removed two-edge route and inherits
/// its crossing (at most one leg may be crossed), and the rotation system
/// is spliced accordingly.
pub fn regularize(
    g: &Graph,
    d: Option<&OnePlanarDrawing>,
) -> Result<(Graph, Option<OnePlanarDrawing>), RegularizeError> {
    let twos: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 2).collect();
    let v = match twos.as_slice() {
        [] => return Err(RegularizeError::NoTwoVertex),
        [v] => *v,
        many => return Err(RegularizeError::MultipleTwoVertices(many.len())),
    };
    let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    if g.has_edge(a, b) {
        return Err(RegularizeError::NeighborsAdjacent { a, b });
    }

    let shift = |w: usize| if w > v { w - 1 } else { w };
    let reduced = g
        .delete_vertex(v)
        .expect("2-vertex exists")
        .add_edge(shift(a), shift(b))
        .expect("neighbors are distinct and non-adjacent");

    let Some(drawing) = d else {
        return Ok((reduced, None));
    };
    if drawing.host() != g {
        return Err(RegularizeError::HostMismatch);
    }

    let leg_a = Edge::new(v, a);
    let leg_b = Edge::new(v, b);
    let cross_a = drawing.crossing_of(leg_a);
    let cross_b = drawing.crossing_of(leg_b);
    if cross_a.is_some() && cross_b.is_some() {
        return Err(RegularizeError::BothLegsCrossed);
    }
    // The inherited crossing partner must stay independent of the new edge.
    let inherited = cross_a.or(cross_b).map(|ci| {
        let (e, f) = drawing.crossings()[ci];
        (ci, if e == leg_a || e == leg_b { f } else { e })
    });
    if let Some((_, partner)) = inherited {
        for w in [a, b] {
            if partner.touches(w) {
                return Err(RegularizeError::CrossingPartnerBlocked {
                    partner,
                    neighbor: w,
                });
            }
        }
    }

    let n = g.order();
    // New crossing list in old labels: the crossed leg's pair is rerouted
    // onto the joined edge.
    let new_edge_old = Edge::new(a, b);
    let mut new_crossings_old: Vec<(Edge, Edge)> = Vec::new();
    for (i, &(e, f)) in drawing.crossings().iter().enumerate() {
        if Some(i) == cross_a.or(cross_b) {
            let (_, partner) = inherited.expect("inherited crossing recorded");
            new_crossings_old.push((new_edge_old, partner));
        } else {
            new_crossings_old.push((e, f));
        }
    }

    // Splice the rotation system in old planarization ids: the two segment
    // ends next to v become each other's neighbors, v disappears.
    let s_a = cross_a.map_or(a, |ci| n + ci);
    let s_b = cross_b.map_or(b, |ci| n + ci);

    let mut old_rotations = drawing.rotations().to_vec();
    let replace = |rot: &mut Vec<usize>, from: usize, to: usize| {
        let i = rot
            .iter()
            .position(|&w| w == from)
            .expect("segment end borders v");
        rot[i] = to;
    };
    replace(&mut old_rotations[s_a], v, s_b);
    replace(&mut old_rotations[s_b], v, s_a);

    // Relabel into the reduced graph: originals shift past v, dummies take
    // their index in the re-sorted crossing list.
    let renamed_pair = |e: Edge| -> Edge {
        debug_assert!(!e.touches(v));
        Edge::new(shift(e.lo()), shift(e.hi()))
    };
    let new_crossings: Vec<(Edge, Edge)> = normalize_crossings(
        &new_crossings_old
            .iter()
            .map(|&(e, f)| (renamed_pair(e), renamed_pair(f)))
            .collect::<Vec<_>>(),
    );
    let dummy_new_id = |old_index: usize| -> usize {
        let (e, f) = new_crossings_old[old_index];
        let pair = {
            let (e, f) = (renamed_pair(e), renamed_pair(f));
            if e <= f {
                (e, f)
            } else {
                (f, e)
            }
        };
        let j = new_crossings
            .binary_search(&pair)
            .expect("renamed pair is in the sorted list");
        (n - 1) + j
    };
    let map_pid = |p: usize| -> usize {
        if p < n {
            shift(p)
        } else {
            dummy_new_id(p - n)
        }
    };

    let mut new_rotations = vec![Vec::new(); (n - 1) + new_crossings.len()];
    for (p, rot) in old_rotations.iter().enumerate() {
        if p == v {
            continue;
        }
        new_rotations[map_pid(p)] = rot.iter().map(|&w| map_pid(w)).collect();
    }

    let new_drawing = build_drawing(
        &reduced,
        DrawingSpec {
            crossings: new_crossings,
            rotations: new_rotations,
        },
    )?;
    Ok((reduced, Some(new_drawing)))
}
