use std::process::{Command, Output};

fn seqcm(args: &[&str]) -> Output {
    seqcm_with(args, &[])
}

fn seqcm_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_seqcm"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = seqcm(&full);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (value, out.status.code().unwrap())
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("seqcm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn projective_plane_is_sequentially_cm_relative_to_q() {
    let (v, code) = json(&["classify", "rp2", "--wrt", "Q", "--char", "0"]);
    assert_eq!(code, 0);
    let rel = &v["classifications"][0]["relative"];
    assert_eq!(rel["torsion"], "Q");
    assert_eq!(rel["seq_cm"], true);
    assert_eq!(rel["grade_certificates"], serde_json::json!([1, 2, 3]));
    assert_eq!(rel["cd_values"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["classifications"][0]["classical"]["cm"], true);
}

#[test]
fn projective_plane_loses_depth_in_characteristic_two() {
    let (v, code) = json(&["profile", "rp2", "--wrt", "m", "--char", "2"]);
    assert_eq!(code, 0);
    let p = &v["profiles"][0];
    assert_eq!(p["field"], 2);
    assert_eq!(p["grade"], 2);
    assert_eq!(p["cd"], 3);
    let (v, _) = json(&["profile", "rp2", "--wrt", "m", "--char", "0"]);
    assert_eq!(v["profiles"][0]["grade"], 3);
}

#[test]
fn moebius_band_is_approximately_cm_only_relative_to_q() {
    let (v, code) = json(&["classify", "moebius", "--wrt", "m"]);
    assert_eq!(code, 0);
    assert_eq!(v["classifications"][0]["relative"]["approx_cm"], false);
    let (v, _) = json(&["classify", "moebius", "--wrt", "Q"]);
    assert_eq!(v["classifications"][0]["relative"]["approx_cm"], true);
    assert_eq!(v["classifications"][0]["relative"]["seq_cm"], true);
}

#[test]
fn filtration_of_the_projective_plane() {
    let (v, code) = json(&["filtration", "rp2"]);
    assert_eq!(code, 0);
    let f = &v["filtrations"][0];
    assert_eq!(f["length"], 3);
    let sizes: Vec<usize> = f["rows"].as_array().unwrap().iter().map(|r| r["primes"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [6, 3, 1]);
    assert_eq!(f["unmixed_component"], serde_json::json!(["x1", "x2", "x3"]));
}

#[test]
fn parse_errors_name_the_token_and_position() {
    let path = write_temp("bad.ideal", "ring 2 2\ngen x1  x5\n");
    let out = seqcm(&["profile", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 9"), "{err}");
    assert!(err.contains("'x5'"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_inputs_and_bad_fields_are_input_errors() {
    assert_eq!(seqcm(&["profile", "no-such-ideal"]).status.code(), Some(2));
    assert_eq!(seqcm(&["profile", "rp2", "--char", "4"]).status.code(), Some(2));
    assert_eq!(seqcm(&["profile", "rp2", "--wrt", "Z"]).status.code(), Some(2));
    assert_eq!(seqcm_with(&["examples"], &[("SEQCM_THREADS", "zero")]).status.code(), Some(2));
}

#[test]
fn unsupported_requests_are_declined() {
    // not squarefree
    let (v, code) = json(&["classify", "product"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "declined");
    assert!(v["declined"][0]["reason"].as_str().unwrap().contains("squarefree"));
    // not Cohen-Macaulay
    let (v, code) = json(&["invariants", "moebius"]);
    assert_eq!(code, 1);
    assert!(v["declined"][0]["reason"].as_str().unwrap().contains("not Cohen-Macaulay"));
    // zero ideal has no minimal primes
    let path = write_temp("zero.ideal", "ring 1 1\n");
    let (_, code) = json(&["filtration", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    // too many variables to search
    let (v, code) = json(&["search", "--max-x", "5", "--max-y", "4"]);
    assert_eq!(code, 1);
    assert!(v.get("search").is_none());
}

#[test]
fn search_reports_wide_instances_without_counterexamples() {
    let (v, code) = json(&["search", "--max-x", "2", "--max-y", "2"]);
    assert_eq!(code, 0);
    let s = &v["search"];
    assert_eq!(s["exhaustive"], true);
    assert!(s["summary"].as_str().unwrap().starts_with("no counterexample"));
    let findings = s["findings"].as_array().unwrap();
    assert_eq!(findings.len() as u64, s["width_histogram"][3].as_u64().unwrap());
    assert!(findings.iter().all(|f| f["counterexample"] == false));
}

#[test]
fn reports_are_byte_stable_across_runs_and_thread_counts() {
    let args = ["profile", "moebius", "--wrt", "P", "--wrt", "Q", "--wrt", "m", "--strands", "--format", "json"];
    let one = seqcm_with(&args, &[("SEQCM_THREADS", "1")]);
    let again = seqcm_with(&args, &[("SEQCM_THREADS", "1")]);
    let many = seqcm_with(&args, &[("SEQCM_THREADS", "4")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, many.stdout);
    let text = ["search", "--max-x", "2", "--max-y", "1", "--budget", "20", "--seed", "3"];
    assert_eq!(seqcm_with(&text, &[("SEQCM_THREADS", "1")]).stdout, seqcm_with(&text, &[("SEQCM_THREADS", "3")]).stdout);
}

#[test]
fn json_reports_carry_schema_and_canonical_input() {
    let (v, _) = json(&["profile", "rp2"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "profile");
    assert_eq!(v["input"]["source"], "builtin:rp2");
    assert_eq!(v["input"]["generators"].as_array().unwrap().len(), 10);
    // the file's characteristics are used when --char is absent
    let fields: Vec<u64> = v["profiles"].as_array().unwrap().iter().map(|p| p["field"].as_u64().unwrap()).collect();
    assert_eq!(fields, [0, 2]);
    let doc = v["input"]["document"].as_str().unwrap();
    let path = write_temp("echo.ideal", doc);
    let (w, _) = json(&["profile", path.to_str().unwrap()]);
    assert_eq!(w["profiles"], v["profiles"]);
}
