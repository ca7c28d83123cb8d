//! Regenerates the shipped sample bundles under `bundles/`.
//!
//! Run from the workspace root:
//! `cargo run -p edgeclass --example regen_bundles`
//!
//! A test keeps the files byte-identical to the constructors in
//! `edgeclass::samples`, so rerun this after changing them.

use std::fs;
use std::path::Path;

use edgeclass::bundle::serialize_bundle;
use edgeclass::samples::shipped_bundles;

fn main() {
    let dir = Path::new("bundles");
    fs::create_dir_all(dir).expect("create bundles directory");
    for (name, bundle) in shipped_bundles() {
        let path = dir.join(name);
        fs::write(&path, serialize_bundle(&bundle)).expect("write bundle");
        println!("wrote {}", path.display());
    }
}
