//! End-to-end checks of the command-line surface: exit codes, determinism,
//! and the documented text formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_alglev"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn partition_commands() {
    let out = run(&["partition", "level", "3,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");

    let out = run(&["partition", "preceding", "3,1"]);
    assert_eq!(stdout(&out), "(2,2)\n");

    let out = run(&["partition", "dominates", "3,1", "2,2"]);
    assert_eq!(stdout(&out), "true\n");

    let out = run(&["partition", "dominates", "3,1", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_command() {
    let dir = tempdir();
    let path = dir.join("m.txt");
    std::fs::write(&path, "0 0\n1 0\n").unwrap();
    let out = run(&["spectrum", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(0, (2))"));

    std::fs::write(&path, "0 -1\n1 0\n").unwrap();
    let out = run(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_degeneration_exit_codes() {
    let dir = tempdir();
    let good = dir.join("good.deg");
    std::fs::write(
        &good,
        "label: t\nsource:\ndim 2\ne1*e1 = e2\nbasis:\nE1 = t e1\nE2 = t^2 e2\ntarget:\ndim 2\ne1*e1 = e2\n",
    )
    .unwrap();
    let out = run(&["check-degeneration", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "VERIFIED\n");

    let bad = dir.join("bad.deg");
    std::fs::write(
        &bad,
        "label: t\nsource:\ndim 2\ne1*e1 = e2\nbasis:\nE1 = t e1\nE2 = t^2 e2\ntarget:\ndim 2\ne1*e2 = e2\n",
    )
    .unwrap();
    let out = run(&["check-degeneration", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAILED"));
}

#[test]
fn gen_type_and_g2_commands() {
    let dir = tempdir();
    let eta = dir.join("eta2.alg");
    std::fs::write(
        &eta,
        "dim 5\ne1*e2 = e5\ne2*e1 = -1 e5\ne3*e4 = e5\ne4*e3 = -1 e5\n",
    )
    .unwrap();
    let out = run(&["gen-type", eta.to_str().unwrap()]);
    assert_eq!(stdout(&out), "1\n");

    // k^2 x| A3 satisfies the criterion; S^3 != 0 fails it.
    let ext = dir.join("ext.alg");
    std::fs::write(
        &ext,
        "dim 4\ne1*e1 = e2\ne1*e3 = e3\ne3*e1 = -1 e3\ne1*e4 = e4\ne4*e1 = -1 e4\n",
    )
    .unwrap();
    let out = run(&["g2-check", ext.to_str().unwrap()]);
    assert_eq!(stdout(&out), "true\n");

    std::fs::write(
        &ext,
        "dim 4\ne1*e1 = e2\ne1*e3 = e3\ne1*e4 = e4\n",
    )
    .unwrap();
    let out = run(&["g2-check", ext.to_str().unwrap()]);
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn table_output_is_deterministic_and_machine_readable() {
    let a = stdout(&run(&["emit-table", "2", "--n", "4", "--max-level", "3"]));
    let b = stdout(&run(&["emit-table", "2", "--n", "4", "--max-level", "3"]));
    assert_eq!(a, b);
    assert!(!a.is_empty());

    let m = stdout(&run(&["--format", "machine", "emit-table", "1", "--n", "4", "--max-level", "2"]));
    for line in m.lines() {
        assert!(line.starts_with("table=1 "), "bad machine line: {line}");
        assert!(line.contains(" products="));
    }

    let sampled = stdout(&run(&[
        "emit-table", "3", "--n", "4", "--max-level", "2", "--sample", "1,2",
    ]));
    assert!(sampled.contains("sampled a=1"));
}

#[test]
fn classify_commands() {
    let out = stdout(&run(&["classify", "level2", "--n", "4"]));
    assert!(out.contains("T_0^{3}"));
    assert!(out.contains("x|t_0 D2^{a,b}"));
    let out = stdout(&run(&["classify", "filter", "--n", "4", "--predicate", "jordan"]));
    assert!(out.contains("D2^{0,0}"));
    let out = run(&["classify", "filter", "--n", "4", "--predicate", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shipped_witness_files_verify_through_the_cli() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("witnesses");
    let mut checked = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().map_or(false, |e| e == "deg") {
            let out = run(&["check-degeneration", path.to_str().unwrap()]);
            assert!(out.status.success(), "{path:?} failed");
            checked += 1;
        }
    }
    assert_eq!(checked, 35);
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("alglev-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
