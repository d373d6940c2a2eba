use hocalg::cli::bundle::Bundle;
use hocalg::cli::run::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn hoc(args: &[&str]) -> (String, i32) {
    let mut all = vec!["hocalg"];
    all.extend_from_slice(args);
    all.push("--no-timestamps");
    let o = run(all);
    (o.output, o.exit)
}

#[test]
fn validate_nerve_exits_zero() {
    let (out, code) = hoc(&["validate", "fixture:nerve"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("verdict validation: pass"));
}

#[test]
fn pairings_at_two_assert_the_product_decomposition() {
    for fx in ["fixture:nerve", "fixture:dk"] {
        let (out, code) = hoc(&["pairings", fx, "--n", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("E_n = D_n: true"), "{out}");
        assert!(out.contains("[ok] d(NE_n) = sum K_I K_J"), "{out}");
        assert!(out.contains("P(2) = {((0),(1))}"), "{out}");
    }
}

#[test]
fn lambda_on_a_corrupted_bundle_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let (_, code) = hoc(&["fixtures", "trunc-2x", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["payload"]["lifting"]["entries"][0][3] = serde_json::json!("5");
    std::fs::write(&path, v.to_string()).unwrap();
    let (out, code) = hoc(&["functor", "lambda", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    assert!(out.contains("[FAIL] 2CM"), "{out}");
    assert!(out.contains("witness:"), "{out}");
}

#[test]
fn functor_writes_bundle_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("q.json");
    let (out, code) = hoc(&["functor", "psi", "fixture:idealsq", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    let q = Bundle::parse(&std::fs::read_to_string(&out_path).unwrap(), false).unwrap();
    assert_eq!(q.kind(), "quadratic");
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("q.json.cert.json")).unwrap()).unwrap();
    assert_eq!(cert["functor"], "psi");
    assert_eq!(cert["output_digest"], q.digest());

    // The written output certifies against the input.
    let (out, code) = hoc(&["certify", "fixture:idealsq", out_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (out, code) = hoc(&["validate", out_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn failed_homotopy_verdict_exits_one() {
    let (out, code) = hoc(&["functor", "delta", "fixture:dk-f3"]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    assert!(out.contains("pi_3: before 1 after 0 MISMATCH"), "{out}");
    let (_, code) = hoc(&["certify", "fixture:const", "fixture:nerve"]);
    assert_eq!(code, EXIT_FAILED);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(hoc(&["bogus"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["validate"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["validate", "fixture:nope"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["validate", "/no/such/file.json"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["moore", "fixture:idealsq"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["functor", "delta", "fixture:idealsq"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["validate", "fixture:nerve", "--field", "Fp:2"]).1, EXIT_USAGE);
    assert_eq!(hoc(&["validate", "fixture:nerve", "--field", "Fp:2", "--allow-char2"]).1, EXIT_OK);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"kind":"algebra","field":"Q","payload":{"dim":2,"mul":[[0,0,7,"1"]]}}"#).unwrap();
    let (out, code) = hoc(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("$.payload.mul"), "{out}");
    std::fs::write(&path, "{").unwrap();
    assert_eq!(hoc(&["validate", path.to_str().unwrap()]).1, EXIT_USAGE);
}

#[test]
fn reports_are_deterministic_without_timestamps() {
    for format in ["text", "machine"] {
        let a = hoc(&["functor", "lambda", "fixture:trunc-2x", "--format", format]);
        let b = hoc(&["functor", "lambda", "fixture:trunc-2x", "--format", format]);
        assert_eq!(a, b);
    }
    let stamped = run(["hocalg", "fixtures"]).output;
    assert!(stamped.lines().nth(1).unwrap().starts_with("time "));
}

#[test]
fn machine_format_mirrors_text() {
    let (text, _) = hoc(&["homotopy", "fixture:trunc-2x"]);
    let (machine, _) = hoc(&["homotopy", "fixture:trunc-2x", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_str(&machine).unwrap();
    for line in v["lines"].as_array().unwrap() {
        assert!(text.contains(line.as_str().unwrap()));
    }
    assert_eq!(v["exit"], 0);
}

#[test]
fn field_and_truncation_flags() {
    let (out, code) = hoc(&["moore", "fixture:nerve", "--truncation", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim NE_2 = 0") && !out.contains("NE_3"), "{out}");

    // Files are reread over the requested field and can be cut down.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.json");
    hoc(&["fixtures", "nerve", "--out", path.to_str().unwrap()]);
    let (out, code) = hoc(&["validate", path.to_str().unwrap(), "--field", "Fp:5", "--truncation", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("field Fp:5"), "{out}");
}

#[test]
fn every_fixture_validates_through_the_cli() {
    for name in hocalg::cli::catalog::names() {
        let (out, code) = hoc(&["fixtures", name]);
        assert_eq!(code, EXIT_OK, "{name}: {out}");
    }
}
