//! End-to-end checks of the command-line surface: flags, exit codes, and
//! the stability of the JSON envelope.

use std::process::{Command, Output};

fn piclat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_piclat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn compute_gcd_obstruction_for_gl4() {
    let out = piclat(&[
        "compute", "--group", "GL:4", "--g", "2", "--n", "0", "--delta", "1", "--quantity",
        "coker-ev-tilde",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["cokernel"]["pretty"], "0");
    let out = piclat(&[
        "compute", "--group", "GL:4", "--g", "2", "--n", "0", "--delta", "2", "--quantity",
        "coker-ev-tilde",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["cokernel"]["pretty"], "Z/2");
}

#[test]
fn compute_spin8_weight_cokernel() {
    let out = piclat(&[
        "compute", "--group", "Spin:8", "--g", "1", "--n", "1", "--delta", "0", "--quantity",
        "coker-omega",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["cokernel"]["pretty"], "Z/2 x Z/2");
    assert_eq!(v["result"]["cokernel"]["invariant_factors"], serde_json::json!([2, 2]));
    assert_eq!(v["result"]["cokernel"]["free_rank"], 0);
}

#[test]
fn compute_torus_boundary_cokernel() {
    let out = piclat(&[
        "compute", "--group", "torus:1", "--g", "3", "--n", "0", "--delta", "0", "--quantity",
        "coker-gamma-bar",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["pretty"], "Z/2");
}

#[test]
fn delta_vec_lift() {
    let out = piclat(&[
        "compute", "--group", "SO:10", "--g", "2", "--delta-vec", "1,0,0,0,0", "--quantity",
        "pi1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["pretty"], "Z/2");
    assert_eq!(v["input"]["delta_lift"], serde_json::json!([1, 0, 0, 0, 0]));
}

#[test]
fn exit_codes() {
    // Parse error: 2.
    let out = piclat(&["compute", "--group", "Nope:1", "--quantity", "pi1"]);
    assert_eq!(out.status.code(), Some(2));
    // Bad isogeny: 2.
    let out = piclat(&["compute", "--group", "SL:5/mu:2", "--quantity", "pi1"]);
    assert_eq!(out.status.code(), Some(2));
    // Applicability: genus 0 with a positive-genus quantity: 3.
    let out = piclat(&[
        "compute", "--group", "SL:2", "--g", "0", "--quantity", "coker-omega",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // The genus-zero presentation needs a marked point: 3.
    let out = piclat(&[
        "compute", "--group", "SL:2", "--g", "0", "--n", "0", "--quantity", "genus0-report",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // Unknown family: 2.
    let out = piclat(&["table", "--family", "H"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn genus0_report_runs() {
    let out = piclat(&[
        "compute", "--group", "SL:2", "--g", "0", "--n", "1", "--quantity", "genus0-report",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["free_rank"], 1);
    assert_eq!(v["result"]["coker_omega"]["pretty"], "Z/2");
}

#[test]
fn table_families_agree() {
    for args in [
        vec!["table", "--family", "A", "--nmax", "4"],
        vec!["table", "--family", "FG"],
        vec!["table", "--family", "tori", "--dim", "1", "--g", "3", "--dmax", "4"],
    ] {
        let out = piclat(&args);
        assert!(out.status.success(), "args {:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    }
    // JSON rows carry both columns and the verdict.
    let out = piclat(&["table", "--family", "FG", "--format", "json"]);
    let v = stdout_json(&out);
    assert!(v.as_array().unwrap().iter().all(|r| r["ok"] == true));
}

#[test]
fn verify_named_suites() {
    for suite in ["weyl-bruteforce", "rank-bookkeeping"] {
        let out = piclat(&["verify", "--suite", suite]);
        assert!(out.status.success());
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("all passed"), "{}", text);
    }
    let out = piclat(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn datum_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("piclat-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gl2.datum");
    std::fs::write(
        &path,
        "# a GL2-shaped datum\nabelian_rank = 1\nfactors = [A:1]\ncochar = [\n  [1, 0],\n  [1/2, 1],\n]\n",
    )
    .unwrap();
    let out = piclat(&[
        "compute",
        "--datum-file",
        path.to_str().unwrap(),
        "--g",
        "2",
        "--delta-vec",
        "1/2,1",
        "--quantity",
        "coker-ev-tilde",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["cokernel"]["pretty"], "0");
    // Broken datum: projection outside the coweight lattice.
    let bad = dir.join("bad.datum");
    std::fs::write(&bad, "abelian_rank = 0\nfactors = [A:1]\ncochar = [[1/3]]\n").unwrap();
    let out = piclat(&[
        "compute", "--datum-file", bad.to_str().unwrap(), "--quantity", "pi1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_envelope_is_deterministic() {
    let args = [
        "compute", "--group", "C[mu:2](SL:4/mu:2)", "--g", "2", "--delta", "3", "--quantity",
        "rpic-report",
    ];
    let a = piclat(&args);
    let b = piclat(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["result"]["free_rank"], 3);
}
