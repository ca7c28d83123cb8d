//! Built-in sample graphs, drawings, and candidate bundles.
//!
//! The two shipped parameter candidates are reconstructions built from a
//! cantellated cube (rhombicuboctahedron): a 4-regular planar graph on 24
//! vertices whose squares can host crossed diagonals.
//!
//! * Crossing the diagonals of the 12 edge-squares adds 2 to every degree:
//!   a 6-regular 1-planar graph with 72 edges.
//! * Crossing all 18 squares (the 6 axial ones too) adds 3: a 7-regular
//!   1-planar graph with 84 edges.
//!
//! Subdividing one uncrossed edge then yields 25-vertex graphs with degree
//! multisets `{6 x 24, 2 x 1}` (73 edges) and `{7 x 24, 2 x 1}` (85
//! edges). The shipped bundles are labeled as candidates: they match the
//! published parameters, not any particular figure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::{Bundle, BUNDLE_VERSION};
use crate::certify::ParameterSpec;
use crate::coloring::vizing_color;
use crate::drawing::{build_drawing, DrawingSpec, OnePlanarDrawing};
use crate::graph::{Edge, Graph};

/// Cube face cycles, counterclockwise as seen from outside.
/// Corner bits: x = 1, y = 2, z = 4.
const CUBE_FACES: [[usize; 4]; 6] = [
    [0, 2, 3, 1], // z = 0
    [4, 5, 7, 6], // z = 1
    [0, 1, 5, 4], // y = 0
    [2, 6, 7, 3], // y = 1
    [0, 4, 6, 2], // x = 0
    [1, 3, 7, 5], // x = 1
];

fn face_contains(f: usize, w: usize) -> bool {
    CUBE_FACES[f].contains(&w)
}

fn next_in_face(f: usize, w: usize) -> usize {
    let cycle = &CUBE_FACES[f];
    let i = cycle.iter().position(|&x| x == w).expect("corner on face");
    cycle[(i + 1) % 4]
}

fn prev_in_face(f: usize, w: usize) -> usize {
    let cycle = &CUBE_FACES[f];
    let i = cycle.iter().position(|&x| x == w).expect("corner on face");
    cycle[(i + 3) % 4]
}

/// The face other than `f` containing cube edge `{a, b}`.
fn other_face(a: usize, b: usize, f: usize) -> usize {
    (0..6)
        .find(|&g| g != f && face_contains(g, a) && face_contains(g, b))
        .expect("every cube edge lies on two faces")
}

/// The cantellated cube: each flag (corner, incident face) becomes a
/// vertex. Returns the vertex indexing, the adjacency-building edge list,
/// the rotation system (ccw from outside), and the square face cycles
/// (12 edge-squares first, then the 6 axial squares).
struct Cantellation {
    edges: Vec<(usize, usize)>,
    rotations: Vec<Vec<usize>>,
    edge_squares: Vec<[usize; 4]>,
    axial_squares: Vec<[usize; 4]>,
}

fn cantellated_cube() -> Cantellation {
    let mut rco_vertex = vec![vec![None; 6]; 8];
    let mut id = 0;
    for (w, faces) in rco_vertex.iter_mut().enumerate() {
        for (f, slot) in faces.iter_mut().enumerate() {
            if face_contains(f, w) {
                *slot = Some(id);
                id += 1;
            }
        }
    }
    let v = |w: usize, f: usize| rco_vertex[w][f].expect("face incident to corner");

    let mut edges = Vec::new();
    let mut rotations = vec![Vec::new(); 24];
    for w in 0..8 {
        for f in 0..6 {
            if !face_contains(f, w) {
                continue;
            }
            let here = v(w, f);
            let nxt = next_in_face(f, w);
            let prv = prev_in_face(f, w);
            // Rotation ccw from outside: axial next, axial prev, then the
            // two triangle mates across the prev- and next-edge squares.
            rotations[here] = vec![
                v(nxt, f),
                v(prv, f),
                v(w, other_face(w, prv, f)),
                v(w, other_face(w, nxt, f)),
            ];
            for mate in &rotations[here] {
                if here < *mate {
                    edges.push((here, *mate));
                }
            }
        }
    }

    // Edge squares: one per cube edge {a, b}, oriented ccw from outside.
    let mut edge_squares = Vec::new();
    for a in 0..8usize {
        for bit in [1, 2, 4] {
            let b = a ^ bit;
            if a > b {
                continue;
            }
            let f = (0..6)
                .find(|&f| face_contains(f, a) && next_in_face(f, a) == b)
                .expect("directed edge appears in one face");
            let g = other_face(a, b, f);
            edge_squares.push([v(a, g), v(b, g), v(b, f), v(a, f)]);
        }
    }

    // Axial squares: the expanded cube faces keep their orientation.
    let axial_squares: Vec<[usize; 4]> = (0..6)
        .map(|f| {
            let c = CUBE_FACES[f];
            [v(c[0], f), v(c[1], f), v(c[2], f), v(c[3], f)]
        })
        .collect();

    Cantellation {
        edges,
        rotations,
        edge_squares,
        axial_squares,
    }
}

/// Inserts `value` into the cyclic list directly after `after`, which must
/// currently be followed by `before`.
fn insert_between(rot: &mut Vec<usize>, after: usize, before: usize, value: usize) {
    let pos = rot
        .iter()
        .position(|&w| w == after)
        .expect("sector start present in rotation");
    debug_assert_eq!(
        rot[(pos + 1) % rot.len()],
        before,
        "face sector is not intact"
    );
    rot.insert(pos + 1, value);
}

/// Builds a drawing from the cantellation with crossed diagonals inserted
/// into the given square faces.
fn crossed_square_drawing(squares: &[[usize; 4]]) -> OnePlanarDrawing {
    let cant = cantellated_cube();
    let mut pairs: Vec<(usize, usize)> = cant.edges.clone();
    for sq in squares {
        pairs.push((sq[0], sq[2]));
        pairs.push((sq[1], sq[3]));
    }
    let host = Graph::build(24, &pairs).expect("cantellation with diagonals is simple");

    // Dummy ids follow the sorted order of the crossing pairs.
    let mut keyed: Vec<((Edge, Edge), [usize; 4])> = squares
        .iter()
        .map(|sq| {
            let e = Edge::new(sq[0], sq[2]);
            let f = Edge::new(sq[1], sq[3]);
            (if e <= f { (e, f) } else { (f, e) }, *sq)
        })
        .collect();
    keyed.sort_by_key(|&(pair, _)| pair);

    let mut rotations = cant.rotations;
    rotations.resize(24 + keyed.len(), Vec::new());
    for (i, (_, sq)) in keyed.iter().enumerate() {
        let dummy = 24 + i;
        for corner in 0..4 {
            let here = sq[corner];
            let to_next = sq[(corner + 1) % 4];
            let to_prev = sq[(corner + 3) % 4];
            insert_between(&mut rotations[here], to_next, to_prev, dummy);
        }
        rotations[dummy] = sq.to_vec();
    }

    let crossings: Vec<(Edge, Edge)> = keyed.into_iter().map(|(pair, _)| pair).collect();
    build_drawing(
        &host,
        DrawingSpec {
            crossings,
            rotations,
        },
    )
    .expect("cantellation drawing is structurally valid")
}

/// 6-regular 1-planar graph on 24 vertices (72 edges) with its drawing:
/// the cantellated cube with crossed diagonals in the 12 edge-squares.
pub fn six_regular_candidate() -> OnePlanarDrawing {
    let cant = cantellated_cube();
    crossed_square_drawing(&cant.edge_squares)
}

/// 7-regular 1-planar graph on 24 vertices (84 edges) with its drawing:
/// crossed diagonals in all 18 squares of the cantellated cube.
pub fn seven_regular_candidate() -> OnePlanarDrawing {
    let cant = cantellated_cube();
    let mut squares = cant.edge_squares.clone();
    squares.extend_from_slice(&cant.axial_squares);
    crossed_square_drawing(&squares)
}

/// Subdivides an uncrossed edge of a drawing: the new vertex takes the next
/// free index, dummy ids shift up by one.
fn subdivide_uncrossed_edge(d: &OnePlanarDrawing, target: Edge) -> OnePlanarDrawing {
    assert!(
        d.crossing_of(target).is_none(),
        "subdivision target must be uncrossed"
    );
    let host = d.host();
    let n = host.order();
    let mid = n;
    let remap = |p: usize| if p >= n { p + 1 } else { p };

    let mut pairs: Vec<(usize, usize)> = host
        .edges()
        .iter()
        .filter(|&&e| e != target)
        .map(|e| e.endpoints())
        .collect();
    pairs.push((target.lo(), mid));
    pairs.push((target.hi(), mid));
    let new_host = Graph::build(n + 1, &pairs).expect("subdivision keeps the graph simple");

    let mut rotations: Vec<Vec<usize>> = d
        .rotations()
        .iter()
        .map(|rot| rot.iter().map(|&w| remap(w)).collect())
        .collect();
    rotations.insert(mid, vec![target.lo(), target.hi()]);
    for (endpoint, other) in [
        (target.lo(), target.hi()),
        (target.hi(), target.lo()),
    ] {
        let rot = &mut rotations[endpoint];
        let i = rot
            .iter()
            .position(|&w| w == other)
            .expect("uncrossed edge appears directly in the rotation");
        rot[i] = mid;
    }

    let crossings = d.crossings().to_vec();
    build_drawing(
        &new_host,
        DrawingSpec {
            crossings,
            rotations,
        },
    )
    .expect("subdivision preserves structural validity")
}

fn candidate_bundle(
    base: OnePlanarDrawing,
    expect: ParameterSpec,
    provenance: &str,
) -> Bundle {
    let lowest_uncrossed = base
        .host()
        .edges()
        .iter()
        .copied()
        .find(|&e| base.crossing_of(e).is_none())
        .expect("the cantellation keeps its original edges uncrossed");
    let drawing = subdivide_uncrossed_edge(&base, lowest_uncrossed);
    Bundle {
        version: BUNDLE_VERSION,
        provenance: Some(provenance.to_string()),
        meta: vec![(
            "construction".to_string(),
            "cantellated cube, crossed square diagonals, one edge subdivided".to_string(),
        )],
        graph: drawing.host().clone(),
        names: Vec::new(),
        drawing: Some(drawing),
        expect: Some(expect),
        coloring: None,
    }
}

/// Candidate bundle matching the maximum-degree-6 parameter profile:
/// 25 vertices, 73 edges, degree multiset `{6 x 24, 2 x 1}`, with drawing.
pub fn g1_candidate() -> Bundle {
    candidate_bundle(
        six_regular_candidate(),
        ParameterSpec::new(25, 73, 6, 1).expect("handshake-consistent"),
        "paper-parameter candidate: degree-6 reconstruction, not figure data",
    )
}

/// Candidate bundle for the maximum-degree-7 profile: 85 edges, degree
/// multiset `{7 x 24, 2 x 1}`; the expected order 25 is derived by
/// handshake rather than stated directly.
pub fn g2_candidate() -> Bundle {
    candidate_bundle(
        seven_regular_candidate(),
        ParameterSpec::new(25, 85, 7, 1)
            .expect("handshake-consistent")
            .with_derived_order(),
        "paper-parameter candidate: degree-7 reconstruction, not figure data",
    )
}

/// A plane drawing of `K4`: outer triangle 0, 1, 2 with 3 in the middle.
pub fn plane_k4() -> OnePlanarDrawing {
    build_drawing(
        &Graph::complete(4),
        DrawingSpec {
            crossings: vec![],
            rotations: vec![
                vec![1, 3, 2],
                vec![2, 3, 0],
                vec![0, 3, 1],
                vec![2, 0, 1],
            ],
        },
    )
    .expect("plane K4 is valid")
}

/// `K5` drawn with its single unavoidable crossing: edge {0,1} crosses
/// {3,4} at dummy vertex 5.
pub fn one_crossing_k5() -> OnePlanarDrawing {
    build_drawing(
        &Graph::complete(5),
        DrawingSpec {
            crossings: vec![(Edge::new(0, 1), Edge::new(3, 4))],
            rotations: vec![
                vec![5, 3, 2, 4],
                vec![2, 3, 5, 4],
                vec![4, 0, 3, 1],
                vec![2, 0, 5, 1],
                vec![1, 5, 0, 2],
                vec![1, 3, 0, 4],
            ],
        },
    )
    .expect("one-crossing K5 is valid")
}

/// The cube graph in its standard plane embedding.
pub fn cube_drawing() -> OnePlanarDrawing {
    let rotations: Vec<Vec<usize>> = (0..8usize)
        .map(|w| {
            let (x, y, z) = (w ^ 1, w ^ 2, w ^ 4);
            if w.count_ones() % 2 == 0 {
                vec![y, x, z]
            } else {
                vec![x, y, z]
            }
        })
        .collect();
    build_drawing(
        &Graph::cube(),
        DrawingSpec {
            crossings: vec![],
            rotations,
        },
    )
    .expect("cube embedding is valid")
}

/// A pseudo-random but structurally valid bundle: random graph, sometimes
/// names, metadata, a coloring, a consistent expect block, or a drawing
/// with a structurally valid (not necessarily plane) rotation system.
/// Deterministic in the seed; used by the round-trip suites.
pub fn random_bundle(seed: u64) -> Bundle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=16);
    let p = rng.gen_range(0.1..0.8);
    let graph = Graph::random(n, p, rng.gen());
    let mut bundle = Bundle::from_graph(graph.clone());

    if rng.gen_bool(0.5) {
        bundle.provenance = Some(format!("fuzz sample {seed}"));
    }
    if rng.gen_bool(0.3) {
        bundle.meta.push(("seed".into(), seed.to_string()));
        bundle.meta.push(("kind".into(), "random".into()));
        bundle.meta.sort();
    }
    if rng.gen_bool(0.3) {
        let v = rng.gen_range(0..n);
        bundle.names.push((v, format!("v{v}")));
    }
    if rng.gen_bool(0.4) && graph.size() > 0 {
        bundle.coloring = Some(vizing_color(&graph).expect("nonempty graph colors"));
    }
    if rng.gen_bool(0.3) {
        // Any handshake-consistent profile round-trips, whether or not the
        // graph matches it.
        let order = rng.gen_range(3..30usize);
        let d = if (order - 1) % 2 == 0 {
            rng.gen_range(1..8)
        } else {
            2 * rng.gen_range(1..4)
        };
        let size = (d * (order - 1) + 2) / 2;
        let spec = ParameterSpec::new(order, size, d, 1).expect("profile is consistent");
        bundle.expect = Some(if rng.gen_bool(0.5) {
            spec.with_derived_order()
        } else {
            spec
        });
    }
    if rng.gen_bool(0.4) {
        // Drawing: up to two disjoint independent crossing pairs, rotations
        // shuffled per vertex, dummies alternating.
        let mut crossings: Vec<(Edge, Edge)> = Vec::new();
        let mut used: Vec<usize> = Vec::new();
        for _ in 0..2 {
            let candidates: Vec<(Edge, Edge)> = graph
                .edges()
                .iter()
                .flat_map(|&e| {
                    graph
                        .edges()
                        .iter()
                        .filter(move |&&f| e < f && !e.shares_endpoint(f))
                        .map(move |&f| (e, f))
                })
                .filter(|(e, f)| {
                    [e.lo(), e.hi(), f.lo(), f.hi()]
                        .iter()
                        .all(|w| !used.contains(w))
                })
                .collect();
            if candidates.is_empty() {
                break;
            }
            let pick = candidates[rng.gen_range(0..candidates.len())];
            used.extend([pick.0.lo(), pick.0.hi(), pick.1.lo(), pick.1.hi()]);
            crossings.push(pick);
        }
        // Dummy ids follow the sorted pair order; fix it before wiring
        // rotations to them.
        crossings.sort_unstable();
        let mut rotations: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut rot: Vec<usize> = graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| {
                        let e = Edge::new(v, w);
                        match crossings.iter().position(|&(a, b)| a == e || b == e) {
                            Some(i) => n + i,
                            None => w,
                        }
                    })
                    .collect();
                rot.shuffle(&mut rng);
                rot
            })
            .collect();
        for (e, f) in &crossings {
            rotations.push(vec![e.lo(), f.lo(), e.hi(), f.hi()]);
        }
        bundle.drawing = Some(
            build_drawing(
                &graph,
                DrawingSpec {
                    crossings,
                    rotations,
                },
            )
            .expect("generated drawing is structurally valid"),
        );
    }
    bundle
}

/// All bundles shipped under `bundles/`, keyed by file name. Tests keep the
/// files in sync with these constructors.
pub fn shipped_bundles() -> Vec<(&'static str, Bundle)> {
    let mut k4 = Bundle::from_graph(Graph::complete(4))
        .with_provenance("sample data: plane drawing of K4");
    k4.drawing = Some(plane_k4());
    let mut k5 = Bundle::from_graph(Graph::complete(5))
        .with_provenance("sample data: K5 with one crossing");
    k5.drawing = Some(one_crossing_k5());
    let petersen = Bundle::from_graph(Graph::petersen())
        .with_provenance("sample data: Petersen graph");
    let c5 = Bundle::from_graph(Graph::cycle(5)).with_provenance("sample data: 5-cycle");
    vec![
        ("g1-candidate.bundle", g1_candidate()),
        ("g2-candidate.bundle", g2_candidate()),
        ("k4-plane.bundle", k4),
        ("k5-one-crossing.bundle", k5),
        ("petersen.bundle", petersen),
        ("c5.bundle", c5),
    ]
}
