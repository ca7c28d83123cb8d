//! Edge-coloring classification toolkit.
//!
//! The crate decides where a simple graph sits in the two-class world of
//! edge colorings: `chi'(G)` is either `Delta(G)` (Class one) or
//! `Delta(G) + 1` (Class two). It provides
//!
//! * a canonical immutable [`Graph`] value with degree machinery,
//! * maximum matchings and the edge independence number `alpha'(G)`
//!   ([`matching`]), with an exhaustive oracle for cross-checking,
//! * overfull-style Class-two certificates from the inequality
//!   `m > alpha'(G) * Delta(G)` ([`certify`]),
//! * constructive `(Delta+1)`-edge-colorings and an exact chromatic-index
//!   decider at desk scale ([`coloring`]),
//! * combinatorial 1-planar drawings, planarization, face tracing, and the
//!   2-vertex regularization construction ([`drawing`]),
//! * a line-oriented bundle file format and structured reports
//!   ([`bundle`], [`report`]),
//! * batch drivers that run independent instances in parallel when the
//!   `parallel` feature (default) is enabled ([`batch`]).

pub mod batch;
pub mod bundle;
pub mod certify;
pub mod coloring;
pub mod drawing;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod report;
pub mod samples;

pub use bundle::{parse_bundle, serialize_bundle, Bundle, BundleError};
pub use certify::{
    certify_exact, certify_half_order, verify_paper_parameters, BoundKind, CertifyError,
    ClassTwoCertificate, ParameterSpec,
};
pub use coloring::{
    chromatic_index_exact, classify, is_proper, vizing_color, ClassLabel, ClassTwoWitness,
    ColoringError, EdgeColoring, SearchBudget, SearchTranscript,
};
pub use drawing::{
    build_drawing, regularize, trace_faces, verify_drawing, verify_drawing_spec, DrawingError,
    DrawingSpec, OnePlanarDrawing, Planarization, RegularizeError,
};
pub use graph::{DegreeProfile, Edge, Graph, GraphError};
pub use matching::{
    is_matching, matching_number, maximum_matching, oracle_matching_number, Matching,
    MatchingError, OracleCutoff,
};
pub use report::{ItemStatus, Report, ReportItem};
