//! The files under `bundles/` stay in sync with the constructors and pass
//! every module invariant.

use std::fs;
use std::path::PathBuf;

use edgeclass::bundle::{parse_bundle, serialize_bundle};
use edgeclass::drawing::verify_drawing;
use edgeclass::samples;

fn bundles_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../bundles")
}

#[test]
fn shipped_files_match_their_constructors() {
    for (name, bundle) in samples::shipped_bundles() {
        let path = bundles_dir().join(name);
        let text = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}; run the regen_bundles example", path.display()));
        assert_eq!(
            text,
            serialize_bundle(&bundle),
            "{name} is stale; run `cargo run -p edgeclass --example regen_bundles`"
        );
    }
}

#[test]
fn shipped_files_parse_and_hold_their_invariants() {
    for (name, _) in samples::shipped_bundles() {
        let path = bundles_dir().join(name);
        let text = fs::read_to_string(&path).expect("bundle file exists");
        let bundle = parse_bundle(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(
            bundle.provenance.is_some(),
            "{name}: shipped samples must carry a provenance label"
        );
        if let Some(d) = &bundle.drawing {
            let report = verify_drawing(d);
            assert!(report.all_pass(), "{name}:\n{}", report.render_text());
        }
        if let Some(spec) = &bundle.expect {
            assert_eq!(bundle.graph.order(), spec.order, "{name}: order drifted");
            assert_eq!(bundle.graph.size(), spec.size, "{name}: size drifted");
        }
    }
}

#[test]
fn candidate_labels_mark_them_as_reconstructions() {
    for name in ["g1-candidate.bundle", "g2-candidate.bundle"] {
        let text = fs::read_to_string(bundles_dir().join(name)).expect("candidate exists");
        let bundle = parse_bundle(&text).unwrap();
        let label = bundle.provenance.expect("candidates are labeled");
        assert!(
            label.contains("paper-parameter candidate"),
            "{name}: label must distinguish candidates from arbitrary data, got `{label}`"
        );
        assert!(
            label.contains("not figure data"),
            "{name}: label must not claim figure fidelity, got `{label}`"
        );
    }
}
