//! Regenerates the `.deg` witness data files from the builtin
//! constructions. Run from the crate root: the files land in `witnesses/`.

use alglev::degeneration::{serialize_witness, verify_witness};
use alglev::witnesses::builtin;
use std::path::PathBuf;

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("witnesses");
    std::fs::create_dir_all(&dir).expect("create witnesses dir");
    let mut failures = 0;
    for (name, w) in builtin() {
        let verdict = verify_witness(&w);
        if !verdict.is_verified() {
            eprintln!("{name}: {verdict}");
            failures += 1;
            continue;
        }
        std::fs::write(dir.join(name), serialize_witness(&w)).expect("write witness file");
        println!("wrote {name}");
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
