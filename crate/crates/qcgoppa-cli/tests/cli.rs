//! End-to-end tests of the installed binary: exit-code contract, output
//! determinism across thread counts, and JSON well-formedness.

use std::process::Command;

fn qcgoppa(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcgoppa"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let (code, stdout, stderr) = qcgoppa(args);
    assert_eq!(code, 0, "{args:?} exited {code}: {stderr}");
    serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("{args:?} produced invalid JSON ({e}): {stdout}"))
}

#[test]
fn determinism_across_thread_counts() {
    let build = |threads: &str| {
        qcgoppa(&[
            "--field",
            "f64",
            "--matrix",
            "[[1,0],[1,g^21]]",
            "--threads",
            threads,
            "build",
            "--goppa",
            "x^3 + g^28*x^2 + g^7*x + g^49",
            "--support",
            "orbits:size=3",
            "--variant",
            "extended-subcode",
        ])
    };
    let (c1, out1, _) = build("1");
    let (c4, out4, _) = build("4");
    assert_eq!(c1, 0);
    assert_eq!(c4, 0);
    assert_eq!(out1, out4, "stdout must be byte-identical across thread counts");
    // And across repeated runs.
    let (_, again, _) = build("4");
    assert_eq!(out4, again, "stdout must be byte-identical across runs");
}

#[test]
fn exit_code_contract() {
    // Precondition failure: enum needs a matrix and a compatible degree.
    let (code, _, stderr) = qcgoppa(&["--field", "f8", "enum", "--deg", "7"]);
    assert_eq!(code, 2, "stderr: {stderr}");

    // A support containing a root of the Goppa polynomial is its own class.
    let (code, _, stderr) = qcgoppa(&[
        "--field", "f8", "build", "--goppa", "x + 1", "--support", "explicit:0;1",
        "--variant", "goppa",
    ]);
    assert_eq!(code, 3, "stderr: {stderr}");

    // A map-closed but non-blockwise support: the automorphism check passes,
    // the quasi-cyclic check fails, the report still prints first.
    let (code, stdout, stderr) = qcgoppa(&[
        "--field",
        "f64",
        "--matrix",
        "[[1,0],[1,g^21]]",
        "build",
        "--goppa",
        "x^3 + g^28*x^2 + g^7*x + g^49",
        "--support",
        "explicit:g^1;g^2;g^6;g^15;g^29;g^37",
        "--variant",
        "subcode",
    ]);
    assert_eq!(code, 4, "stderr: {stderr}");
    assert!(stdout.contains("automorphism   verified"), "stdout: {stdout}");
    assert!(
        stderr.contains("quasi-cyclic verification failed"),
        "stderr: {stderr}"
    );

    // Unknown fixture ids are usage errors.
    let (code, _, _) = qcgoppa(&["verify", "nonsense"]);
    assert_eq!(code, 2);

    // Help is not an error.
    let (code, stdout, _) = qcgoppa(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("qcgoppa"));
}

#[test]
fn generic_unit_group_build_succeeds() {
    let (code, stdout, stderr) = qcgoppa(&[
        "--field",
        "f32",
        "--matrix",
        "[[0,1],[1,0]]",
        "build",
        "--goppa",
        "x^2 + g^800*x + 1",
        "--support",
        "unit-group:31",
        "--variant",
        "subcode",
        "--min-distance",
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    for needle in [
        "length         30",
        "dimension      9",
        "qc             15-quasi-cyclic: 15 blocks of size 2",
        "automorphism   verified",
        "min distance   10",
    ] {
        assert!(stdout.contains(needle), "missing `{needle}` in: {stdout}");
    }
}

#[test]
fn verify_subcommand_passes_both_modes() {
    let (code, stdout, _) = qcgoppa(&["verify", "all"]);
    assert_eq!(code, 0, "plain verify all failed:\n{stdout}");
    assert!(stdout.contains("verify: PASS - 7 fixtures"), "{stdout}");

    let (code, stdout, _) = qcgoppa(&["--strict", "verify", "all"]);
    assert_eq!(code, 0, "strict verify all failed:\n{stdout}");
    assert!(stdout.contains("verify: PASS - 7 fixtures"), "{stdout}");
}

#[test]
fn json_outputs_are_well_formed() {
    let v = json_of(&[
        "--json", "--field", "f8", "--matrix", "[[1,0],[1,1]]", "enum", "--deg", "2",
    ]);
    assert_eq!(v["command"], "enum");
    assert_eq!(v["count"], 4);
    assert_eq!(v["polynomials"].as_array().map(Vec::len), Some(4));

    let v = json_of(&[
        "--json",
        "--field",
        "f32",
        "--matrix",
        "[[0,1],[1,0]]",
        "build",
        "--goppa",
        "x^2 + g^800*x + 1",
        "--support",
        "unit-group:31",
        "--variant",
        "subcode",
        "--min-distance",
    ]);
    assert_eq!(v["length"], 30);
    assert_eq!(v["dimension"], 9);
    assert_eq!(v["min_distance"], 10);
    assert_eq!(v["qc"]["l"], 2);
    assert_eq!(v["qc"]["tau"], 15);
    assert_eq!(v["automorphism_verified"], true);

    let v = json_of(&["--json", "--field", "f8", "--matrix", "[[1,0],[1,1]]", "orbits"]);
    assert_eq!(v["command"], "orbits");
    assert!(v["orbit_count"].is_u64());
    assert!(v["orbits"].is_array());

    let v = json_of(&[
        "--json", "--field", "f8", "--matrix", "[[1,0],[1,1]]", "factor-h", "--s", "1",
    ]);
    assert_eq!(v["command"], "factor-h");
    assert!(v["h"].is_string());
    assert!(v["invariant_factors"].is_array());

    let v = json_of(&["--json", "--field", "f16", "nl-count"]);
    assert_eq!(v["order2"]["count"], 240);
    assert_eq!(v["order3"]["count"], 240);
    assert_eq!(v["order3"]["b_zero"], 30);

    let v = json_of(&["--json", "verify", "ex3_10"]);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["pass"], true);
    assert_eq!(v["failures"], 0);
}
