//! The line-oriented bundle file format.
//!
//! One fact per line, `#` starts a comment, sections in a fixed canonical
//! order. The grammar (documented in the README) covers a graph, an
//! optional drawing (crossings + rotation system), an optional expected
//! parameter profile, an optional edge coloring, vertex names, and
//! free-form metadata with a provenance label.
//!
//! Parsing is total: malformed input produces a line-numbered diagnostic,
//! never a panic. Serialization is canonical (sorted edges, normalized
//! whitespace, rotations starting at their lowest neighbor), and
//! `parse(serialize(b)) == b` for every valid bundle.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::certify::{CertifyError, ParameterSpec};
use crate::coloring::{is_proper, EdgeColoring};
use crate::drawing::{build_drawing, DrawingError, DrawingSpec, OnePlanarDrawing};
use crate::graph::{Edge, Graph, GraphError};

/// Current bundle format version.
pub const BUNDLE_VERSION: u32 = 1;

/// Largest graph order a bundle file may declare. The toolkit targets desk
/// scale; the cap keeps a typo in a `graph` line from allocating wildly.
pub const MAX_BUNDLE_ORDER: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Bundle {
    pub version: u32,
    /// Free-form provenance label. Shipped samples always carry one that
    /// distinguishes a paper-parameter candidate from arbitrary data.
    pub provenance: Option<String>,
    /// Sorted key/value metadata.
    pub meta: Vec<(String, String)>,
    pub graph: Graph,
    /// Sorted vertex-name table.
    pub names: Vec<(usize, String)>,
    pub drawing: Option<OnePlanarDrawing>,
    pub expect: Option<ParameterSpec>,
    pub coloring: Option<EdgeColoring>,
}

impl Bundle {
    /// A bundle holding just a graph.
    pub fn from_graph(graph: Graph) -> Self {
        Bundle {
            version: BUNDLE_VERSION,
            provenance: None,
            meta: Vec::new(),
            graph,
            names: Vec::new(),
            drawing: None,
            expect: None,
            coloring: None,
        }
    }

    pub fn with_provenance(mut self, label: impl Into<String>) -> Self {
        self.provenance = Some(label.into());
        self
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum BundleErrorKind {
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("{0}")]
    Malformed(String),
    #[error("statement `{0}` out of canonical section order")]
    OutOfOrder(String),
    #[error("duplicate `{0}` statement")]
    Duplicate(String),
    #[error("unsupported bundle version {0}")]
    UnsupportedVersion(u32),
    #[error("bundle has no `graph` line")]
    MissingGraph,
    #[error(transparent)]
    Graph(GraphError),
    #[error(transparent)]
    Drawing(DrawingError),
    #[error("crossings given without a rotation system")]
    MissingRotations,
    #[error("missing rotation for planarization vertex {0}")]
    MissingRotation(usize),
    #[error("duplicate rotation for planarization vertex {0}")]
    DuplicateRotation(usize),
    #[error("rotation vertex {vertex} out of range for planarization order {order}")]
    RotationVertexOutOfRange { vertex: usize, order: usize },
    #[error("expect section needs `order`, `size` and `degree` lines")]
    ExpectIncomplete,
    #[error(transparent)]
    Spec(CertifyError),
    #[error("vertex {vertex} out of range for order {order}")]
    NameOutOfRange { vertex: usize, order: usize },
    #[error("duplicate name for vertex {0}")]
    DuplicateName(usize),
    #[error("color line for edge {{{0}, {1}}} which is not in the graph")]
    ColorUnknownEdge(usize, usize),
    #[error("duplicate color line for edge {{{0}, {1}}}")]
    ColorDuplicate(usize, usize),
    #[error("missing color for edge {{{0}, {1}}}")]
    ColorMissing(usize, usize),
    #[error("color {color} outside declared palette 1..={palette}")]
    ColorOutOfPalette { color: usize, palette: usize },
    #[error("coloring is not proper against the graph")]
    ImproperColoring,
}

/// A line-numbered bundle diagnostic.
#[derive(Error, Debug, Clone, PartialEq)]
pub struct BundleError {
    pub line: usize,
    pub kind: BundleErrorKind,
}

impl fmt::Display for BundleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

fn err<T>(line: usize, kind: BundleErrorKind) -> Result<T, BundleError> {
    Err(BundleError { line, kind })
}

fn parse_int(line: usize, token: &str, what: &str) -> Result<usize, BundleError> {
    token.parse::<usize>().map_err(|_| BundleError {
        line,
        kind: BundleErrorKind::Malformed(format!("{what}: `{token}` is not a number")),
    })
}

/// Section ranks enforcing the canonical statement order.
fn rank(keyword: &str) -> Option<u8> {
    Some(match keyword {
        "bundle" => 0,
        "provenance" | "meta" => 1,
        "graph" => 2,
        "name" => 3,
        "edge" => 4,
        "crossing" => 5,
        "rotation" => 6,
        "expect" => 7,
        "coloring" => 8,
        "color" => 9,
        _ => return None,
    })
}

pub fn parse_bundle(text: &str) -> Result<Bundle, BundleError> {
    let mut version: Option<u32> = None;
    let mut provenance: Option<String> = None;
    let mut meta: Vec<(String, String)> = Vec::new();
    let mut order: Option<(usize, usize)> = None; // (n, line)
    let mut names: Vec<(usize, String)> = Vec::new();
    let mut name_seen: HashSet<usize> = HashSet::new();
    let mut edge_pairs: Vec<(usize, usize)> = Vec::new();
    let mut edge_seen: HashSet<Edge> = HashSet::new();
    let mut crossings: Vec<(Edge, Edge)> = Vec::new();
    let mut crossed_edges: HashSet<Edge> = HashSet::new();
    let mut first_crossing_line = 0usize;
    let mut rotations: HashMap<usize, (Vec<usize>, usize)> = HashMap::new(); // vertex -> (cycle, line)
    let mut last_rotation_line = 0usize;
    let mut expect_fields: HashMap<&'static str, usize> = HashMap::new();
    let mut expect_derived = false;
    let mut expect_line = 0usize;
    let mut palette: Option<(usize, usize)> = None; // (k, line)
    let mut color_lines: Vec<(usize, usize, usize, usize)> = Vec::new(); // u, v, c, line
    let mut max_rank = 0u8;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("nonempty line has a first token");
        let args: Vec<&str> = tokens.collect();

        let Some(r) = rank(keyword) else {
            return err(line, BundleErrorKind::UnknownStatement(keyword.to_string()));
        };
        if r < max_rank {
            return err(line, BundleErrorKind::OutOfOrder(keyword.to_string()));
        }
        max_rank = r.max(if keyword == "bundle" { 1 } else { r });

        match keyword {
            "bundle" => {
                if version.is_some() {
                    return err(line, BundleErrorKind::Duplicate("bundle".into()));
                }
                let [v] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("bundle takes one version number".into()),
                    );
                };
                let v = parse_int(line, v, "bundle version")? as u32;
                if v != BUNDLE_VERSION {
                    return err(line, BundleErrorKind::UnsupportedVersion(v));
                }
                version = Some(v);
            }
            "provenance" => {
                if provenance.is_some() {
                    return err(line, BundleErrorKind::Duplicate("provenance".into()));
                }
                if args.is_empty() {
                    return err(
                        line,
                        BundleErrorKind::Malformed("provenance needs a label".into()),
                    );
                }
                provenance = Some(args.join(" "));
            }
            "meta" => {
                let [key, rest @ ..] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("meta needs a key and a value".into()),
                    );
                };
                if rest.is_empty() {
                    return err(
                        line,
                        BundleErrorKind::Malformed("meta needs a key and a value".into()),
                    );
                }
                meta.push((key.to_string(), rest.join(" ")));
            }
            "graph" => {
                if order.is_some() {
                    return err(line, BundleErrorKind::Duplicate("graph".into()));
                }
                let [n] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("graph takes one order number".into()),
                    );
                };
                let n = parse_int(line, n, "graph order")?;
                if n == 0 {
                    return err(line, BundleErrorKind::Graph(GraphError::ZeroOrder));
                }
                if n > MAX_BUNDLE_ORDER {
                    return err(
                        line,
                        BundleErrorKind::Malformed(format!(
                            "graph order {n} exceeds the bundle cap of {MAX_BUNDLE_ORDER}"
                        )),
                    );
                }
                order = Some((n, line));
            }
            "name" => {
                let (n, _) = order.ok_or(BundleError {
                    line,
                    kind: BundleErrorKind::MissingGraph,
                })?;
                let [v, name] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("name takes a vertex and one token".into()),
                    );
                };
                let v = parse_int(line, v, "name vertex")?;
                if v >= n {
                    return err(line, BundleErrorKind::NameOutOfRange { vertex: v, order: n });
                }
                if !name_seen.insert(v) {
                    return err(line, BundleErrorKind::DuplicateName(v));
                }
                names.push((v, name.to_string()));
            }
            "edge" => {
                let (n, _) = order.ok_or(BundleError {
                    line,
                    kind: BundleErrorKind::MissingGraph,
                })?;
                let [u, v] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("edge takes two endpoints".into()),
                    );
                };
                let u = parse_int(line, u, "edge endpoint")?;
                let v = parse_int(line, v, "edge endpoint")?;
                if u == v {
                    return err(line, BundleErrorKind::Graph(GraphError::Loop(u)));
                }
                for w in [u, v] {
                    if w >= n {
                        return err(
                            line,
                            BundleErrorKind::Graph(GraphError::VertexOutOfRange {
                                vertex: w,
                                order: n,
                            }),
                        );
                    }
                }
                if !edge_seen.insert(Edge::new(u, v)) {
                    return err(
                        line,
                        BundleErrorKind::Graph(GraphError::DuplicateEdge(u.min(v), u.max(v))),
                    );
                }
                edge_pairs.push((u, v));
            }
            "crossing" => {
                if order.is_none() {
                    return err(line, BundleErrorKind::MissingGraph);
                }
                let [a, b, c, d] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("crossing takes four endpoints".into()),
                    );
                };
                let a = parse_int(line, a, "crossing endpoint")?;
                let b = parse_int(line, b, "crossing endpoint")?;
                let c = parse_int(line, c, "crossing endpoint")?;
                let d = parse_int(line, d, "crossing endpoint")?;
                if a == b || c == d {
                    return err(line, BundleErrorKind::Graph(GraphError::Loop(a)));
                }
                let e = Edge::new(a, b);
                let f = Edge::new(c, d);
                for edge in [e, f] {
                    if !edge_seen.contains(&edge) {
                        return err(line, BundleErrorKind::Drawing(DrawingError::MissingEdge(edge)));
                    }
                }
                if e == f {
                    return err(
                        line,
                        BundleErrorKind::Drawing(DrawingError::EdgeCrossedTwice(e)),
                    );
                }
                if e.shares_endpoint(f) {
                    return err(
                        line,
                        BundleErrorKind::Drawing(DrawingError::AdjacentCrossing(e, f)),
                    );
                }
                for edge in [e, f] {
                    if !crossed_edges.insert(edge) {
                        return err(
                            line,
                            BundleErrorKind::Drawing(DrawingError::EdgeCrossedTwice(edge)),
                        );
                    }
                }
                if crossings.is_empty() {
                    first_crossing_line = line;
                }
                crossings.push((e, f));
            }
            "rotation" => {
                let (n, _) = order.ok_or(BundleError {
                    line,
                    kind: BundleErrorKind::MissingGraph,
                })?;
                let planar_order = n + crossings.len();
                let [v, colon, rest @ ..] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed(
                            "rotation takes a vertex, `:` and its cyclic neighbors".into(),
                        ),
                    );
                };
                if *colon != ":" {
                    return err(
                        line,
                        BundleErrorKind::Malformed("rotation separator must be `:`".into()),
                    );
                }
                let v = parse_int(line, v, "rotation vertex")?;
                if v >= planar_order {
                    return err(
                        line,
                        BundleErrorKind::RotationVertexOutOfRange {
                            vertex: v,
                            order: planar_order,
                        },
                    );
                }
                let mut cycle = Vec::with_capacity(rest.len());
                for t in rest {
                    let w = parse_int(line, t, "rotation neighbor")?;
                    if w >= planar_order {
                        return err(
                            line,
                            BundleErrorKind::RotationVertexOutOfRange {
                                vertex: w,
                                order: planar_order,
                            },
                        );
                    }
                    cycle.push(w);
                }
                if rotations.insert(v, (cycle, line)).is_some() {
                    return err(line, BundleErrorKind::DuplicateRotation(v));
                }
                last_rotation_line = line;
            }
            "expect" => {
                if order.is_none() {
                    return err(line, BundleErrorKind::MissingGraph);
                }
                if expect_line == 0 {
                    expect_line = line;
                }
                match args.as_slice() {
                    ["order", n] => {
                        expect_fields.insert("order", parse_int(line, n, "expected order")?);
                    }
                    ["order", n, "derived"] => {
                        expect_fields.insert("order", parse_int(line, n, "expected order")?);
                        expect_derived = true;
                    }
                    ["size", m] => {
                        expect_fields.insert("size", parse_int(line, m, "expected size")?);
                    }
                    ["degree", d] => {
                        expect_fields.insert("degree", parse_int(line, d, "expected degree")?);
                    }
                    ["two-vertices", t] => {
                        expect_fields
                            .insert("two-vertices", parse_int(line, t, "expected 2-vertices")?);
                    }
                    _ => {
                        return err(
                            line,
                            BundleErrorKind::Malformed(
                                "expect takes `order N [derived]`, `size M`, `degree D` or \
                                 `two-vertices T`"
                                    .into(),
                            ),
                        )
                    }
                }
            }
            "coloring" => {
                if order.is_none() {
                    return err(line, BundleErrorKind::MissingGraph);
                }
                if palette.is_some() {
                    return err(line, BundleErrorKind::Duplicate("coloring".into()));
                }
                let [k] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("coloring takes one palette size".into()),
                    );
                };
                palette = Some((parse_int(line, k, "palette size")?, line));
            }
            "color" => {
                let Some((k, _)) = palette else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("color lines need a `coloring` line first".into()),
                    );
                };
                let [u, v, c] = args.as_slice() else {
                    return err(
                        line,
                        BundleErrorKind::Malformed("color takes two endpoints and a color".into()),
                    );
                };
                let u = parse_int(line, u, "color endpoint")?;
                let v = parse_int(line, v, "color endpoint")?;
                let c = parse_int(line, c, "color value")?;
                if u == v {
                    return err(line, BundleErrorKind::Graph(GraphError::Loop(u)));
                }
                if !edge_seen.contains(&Edge::new(u, v)) {
                    return err(line, BundleErrorKind::ColorUnknownEdge(u.min(v), u.max(v)));
                }
                if c == 0 || c > k {
                    return err(line, BundleErrorKind::ColorOutOfPalette { color: c, palette: k });
                }
                color_lines.push((u, v, c, line));
            }
            _ => unreachable!("rank() filtered unknown keywords"),
        }
    }

    let Some((n, graph_line)) = order else {
        return err(text.lines().count().max(1), BundleErrorKind::MissingGraph);
    };
    let graph = Graph::build(n, &edge_pairs).map_err(|e| BundleError {
        line: graph_line,
        kind: BundleErrorKind::Graph(e),
    })?;

    let drawing = if rotations.is_empty() && crossings.is_empty() {
        None
    } else if rotations.is_empty() {
        return err(first_crossing_line, BundleErrorKind::MissingRotations);
    } else {
        let planar_order = n + crossings.len();
        let mut dense = vec![Vec::new(); planar_order];
        let mut lines = vec![last_rotation_line; planar_order];
        for (v, (cycle, line)) in &rotations {
            dense[*v] = cycle.clone();
            lines[*v] = *line;
        }
        for p in 0..planar_order {
            if !rotations.contains_key(&p) {
                return err(last_rotation_line, BundleErrorKind::MissingRotation(p));
            }
        }
        let spec = DrawingSpec {
            crossings,
            rotations: dense,
        };
        let built = build_drawing(&graph, spec).map_err(|e| {
            let line = match e {
                DrawingError::RotationMismatch { vertex } => lines[vertex],
                DrawingError::TwistedDummy { dummy } => lines[dummy],
                _ => last_rotation_line,
            };
            BundleError {
                line,
                kind: BundleErrorKind::Drawing(e),
            }
        })?;
        Some(built)
    };

    let expect = if expect_fields.is_empty() {
        None
    } else {
        let (Some(&o), Some(&s), Some(&d)) = (
            expect_fields.get("order"),
            expect_fields.get("size"),
            expect_fields.get("degree"),
        ) else {
            return err(expect_line, BundleErrorKind::ExpectIncomplete);
        };
        let t = expect_fields.get("two-vertices").copied().unwrap_or(1);
        let spec = ParameterSpec::new(o, s, d, t).map_err(|e| BundleError {
            line: expect_line,
            kind: BundleErrorKind::Spec(e),
        })?;
        Some(if expect_derived {
            spec.with_derived_order()
        } else {
            spec
        })
    };

    let coloring = match palette {
        None => None,
        Some((k, coloring_line)) => {
            let mut colors = vec![0usize; graph.size()];
            for &(u, v, c, line) in &color_lines {
                let id = graph.edge_id(u, v).expect("edge presence checked");
                if colors[id] != 0 {
                    return err(line, BundleErrorKind::ColorDuplicate(u.min(v), u.max(v)));
                }
                colors[id] = c;
            }
            if let Some(id) = colors.iter().position(|&c| c == 0) {
                let e = graph.edges()[id];
                return err(
                    coloring_line,
                    BundleErrorKind::ColorMissing(e.lo(), e.hi()),
                );
            }
            let coloring = EdgeColoring::with_palette(&graph, colors, k).map_err(|_| {
                BundleError {
                    line: coloring_line,
                    kind: BundleErrorKind::ImproperColoring,
                }
            })?;
            if !is_proper(&graph, &coloring) {
                return err(coloring_line, BundleErrorKind::ImproperColoring);
            }
            Some(coloring)
        }
    };

    names.sort();
    meta.sort();

    Ok(Bundle {
        version: version.unwrap_or(BUNDLE_VERSION),
        provenance,
        meta,
        graph,
        names,
        drawing,
        expect,
        coloring,
    })
}

/// Canonical text form: fixed section order, sorted edge and crossing
/// lists, rotations starting at their lowest neighbor. A fixed point of
/// `serialize(parse(serialize(b)))`.
pub fn serialize_bundle(b: &Bundle) -> String {
    let mut out = String::new();
    out.push_str(&format!("bundle {}\n", b.version));
    if let Some(p) = &b.provenance {
        out.push_str(&format!("provenance {p}\n"));
    }
    for (k, v) in &b.meta {
        out.push_str(&format!("meta {k} {v}\n"));
    }
    out.push_str(&format!("graph {}\n", b.graph.order()));
    for (v, name) in &b.names {
        out.push_str(&format!("name {v} {name}\n"));
    }
    for e in b.graph.edges() {
        out.push_str(&format!("edge {} {}\n", e.lo(), e.hi()));
    }
    if let Some(d) = &b.drawing {
        for (e, f) in d.crossings() {
            out.push_str(&format!(
                "crossing {} {} {} {}\n",
                e.lo(),
                e.hi(),
                f.lo(),
                f.hi()
            ));
        }
        for (v, rot) in d.rotations().iter().enumerate() {
            let cycle: Vec<String> = rot.iter().map(usize::to_string).collect();
            out.push_str(&format!("rotation {v} : {}\n", cycle.join(" ")));
        }
    }
    if let Some(spec) = &b.expect {
        if spec.order_derived {
            out.push_str(&format!("expect order {} derived\n", spec.order));
        } else {
            out.push_str(&format!("expect order {}\n", spec.order));
        }
        out.push_str(&format!("expect size {}\n", spec.size));
        out.push_str(&format!("expect degree {}\n", spec.base_degree));
        out.push_str(&format!("expect two-vertices {}\n", spec.exceptional));
    }
    if let Some(c) = &b.coloring {
        out.push_str(&format!("coloring {}\n", c.palette()));
        for (id, e) in b.graph.edges().iter().enumerate() {
            out.push_str(&format!("color {} {} {}\n", e.lo(), e.hi(), c.color(id)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_bundle_parses() {
        let b = parse_bundle("graph 2\nedge 0 1\n").unwrap();
        assert_eq!(b.graph, Graph::complete(2));
        assert_eq!(b.version, BUNDLE_VERSION);
        assert!(b.drawing.is_none());
    }

    #[test]
    fn loop_edge_diagnostic_names_the_line() {
        let e = parse_bundle("graph 2\n# comment\nedge 0 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, BundleErrorKind::Graph(GraphError::Loop(0)));
        assert_eq!(e.to_string(), "line 3: loop edge at vertex 0");
    }

    #[test]
    fn duplicate_edge_diagnostic() {
        let e = parse_bundle("graph 3\nedge 0 1\nedge 1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(
            e.kind,
            BundleErrorKind::Graph(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn out_of_order_statement_is_rejected() {
        let e = parse_bundle("graph 2\nedge 0 1\ngraph 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, BundleErrorKind::OutOfOrder("graph".into()));
    }

    #[test]
    fn parse_never_panics_on_garbage() {
        for text in [
            "",
            "nonsense",
            "graph",
            "graph x",
            "graph 0",
            "edge 0 1",
            "graph 2\nedge 0 1 2",
            "graph 2\nedge 0 9",
            "bundle 2\ngraph 1",
            "graph 2\nedge 0 1\ncrossing 0 1 0 1",
            "graph 2\nedge 0 1\nrotation 0 1",
            "graph 2\nedge 0 1\ncoloring 1\ncolor 0 1 5",
            "graph 2\nedge 0 1\ncolor 0 1 1",
            "graph 3\nedge 0 1\nexpect order 3",
            "graph 184467440737095516",
        ] {
            assert!(parse_bundle(text).is_err(), "accepted: {text:?}");
        }
    }

    #[test]
    fn roundtrip_graph_bundle() {
        let g = Graph::random(9, 0.4, 5);
        let b = Bundle::from_graph(g).with_provenance("test data");
        let text = serialize_bundle(&b);
        let parsed = parse_bundle(&text).unwrap();
        assert_eq!(parsed, b);
        assert_eq!(serialize_bundle(&parsed), text);
    }

    #[test]
    fn roundtrip_with_coloring_and_expect() {
        let g = Graph::path(4); // degrees 1,2,2,1 -> no consistent one-2-vertex spec
        let coloring = crate::coloring::vizing_color(&g).unwrap();
        let mut b = Bundle::from_graph(g);
        b.coloring = Some(coloring);
        b.meta.push(("kind".into(), "demo path".into()));
        let parsed = parse_bundle(&serialize_bundle(&b)).unwrap();
        assert_eq!(parsed, b);

        // A handshake-consistent expect block survives the roundtrip too.
        let mut b2 = Bundle::from_graph(Graph::cycle(5));
        b2.expect = Some(ParameterSpec::new(5, 5, 2, 5).unwrap().with_derived_order());
        let parsed2 = parse_bundle(&serialize_bundle(&b2)).unwrap();
        assert_eq!(parsed2, b2);
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let text = "graph 3\nedge 0 1\nedge 0 2\nedge 1 2\ncoloring 3\n\
                    color 0 1 1\ncolor 0 2 1\ncolor 1 2 2\n";
        let e = parse_bundle(text).unwrap_err();
        assert_eq!(e.kind, BundleErrorKind::ImproperColoring);
        assert_eq!(e.line, 5);
    }

    #[test]
    fn drawing_roundtrip() {
        let d = crate::samples::one_crossing_k5();
        let mut b = Bundle::from_graph(d.host().clone());
        b.drawing = Some(d);
        let text = serialize_bundle(&b);
        let parsed = parse_bundle(&text).unwrap();
        assert_eq!(parsed, b);
        assert_eq!(serialize_bundle(&parsed), text);
    }
}
