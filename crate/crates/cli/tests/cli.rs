use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use okounkov_core::exactgeom::Polytope;
use serde_json::Value;

fn jobs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("jobs")
}

fn run(job: &Path, out: &Path, extra: &[&str], env: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_okounkov"));
    cmd.arg("run").arg("--job").arg(job).arg("--out").arg(out).args(extra);
    match env {
        Some(dir) => cmd.env("OKOUNKOV_FIXTURES", dir),
        None => cmd.env_remove("OKOUNKOV_FIXTURES"),
    };
    cmd.output().expect("binary runs")
}

fn result(out: &Path, stem: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(out.join(format!("{stem}.json"))).unwrap()).unwrap()
}

fn expected_exit(stem: &str) -> i32 {
    match stem {
        "bad-rational" => 1,
        "eps-xi-mismatch" => 2,
        _ => 0,
    }
}

/// Every polytope-shaped value (an object with `ambient_dim` and `vertices`).
fn polytopes(v: &Value, acc: &mut Vec<Value>) {
    match v {
        Value::Object(m) => {
            if m.contains_key("ambient_dim") && m.contains_key("vertices") {
                acc.push(v.clone());
            }
            m.values().for_each(|x| polytopes(x, acc));
        }
        Value::Array(a) => a.iter().for_each(|x| polytopes(x, acc)),
        _ => {}
    }
}

#[test]
fn exit_codes_determinism_and_round_trip_over_the_job_corpus() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let mut jobs: Vec<PathBuf> = std::fs::read_dir(jobs_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    jobs.sort();
    assert!(jobs.len() >= 14);
    let mut kinds = std::collections::BTreeSet::new();
    for job in &jobs {
        let stem = job.file_stem().unwrap().to_str().unwrap();
        let first = run(job, a.path(), &[], None);
        let second = run(job, b.path(), &[], None);
        assert_eq!(first.status.code(), Some(expected_exit(stem)), "{stem}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.status.code(), second.status.code());
        if expected_exit(stem) == 1 {
            continue;
        }
        let ja = std::fs::read(a.path().join(format!("{stem}.json"))).unwrap();
        let jb = std::fs::read(b.path().join(format!("{stem}.json"))).unwrap();
        assert_eq!(ja, jb, "{stem} output is not byte-identical");
        let doc: Value = serde_json::from_slice(&ja).unwrap();
        assert_eq!(doc["schema"], 1);
        kinds.insert(doc["kind"].as_str().unwrap().to_string());
        let mut found = Vec::new();
        polytopes(&doc, &mut found);
        for p in found {
            let parsed: Polytope = serde_json::from_value(p.clone()).unwrap();
            assert_eq!(serde_json::to_value(&parsed).unwrap(), p, "{stem}: polytope does not round-trip");
        }
    }
    assert_eq!(kinds.len(), 14, "{kinds:?}");
}

#[test]
fn toric_body_of_the_plane_is_a_triangle_and_renders() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("toric-body-p2.json"), out.path(), &[], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = result(out.path(), "toric-body-p2");
    assert_eq!(doc["result"]["polytope"]["vertices"].as_array().unwrap().len(), 3);
    let svg = std::fs::read_to_string(out.path().join("toric-body-p2.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 3);
}

#[test]
fn eps_xi_check_on_bl2_agrees() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("eps-xi-check-bl2.json"), out.path(), &[], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = result(out.path(), "eps-xi-check-bl2");
    let first = &doc["result"]["reports"][0];
    assert_eq!(first["xi"], "1/2");
    assert_eq!(first["epsilon"]["coeff"], "1/2");
    assert_eq!(doc["pass"], true);
}

#[test]
fn failing_check_exits_two_and_still_writes_the_report() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("eps-xi-mismatch.json"), out.path(), &[], None);
    assert_eq!(o.status.code(), Some(2));
    let doc = result(out.path(), "eps-xi-mismatch");
    assert_eq!(doc["pass"], false);
    assert_eq!(doc["checks"][0]["pass"], false);
}

#[test]
fn zero_denominator_is_an_input_error_with_a_path() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("bad-rational.json"), out.path(), &[], None);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("$.input.d") && err.contains("1/0"), "{err}");
    assert!(!out.path().join("bad-rational.json").exists());
}

#[test]
fn schema_errors_list_every_path() {
    let dir = tempfile::tempdir().unwrap();
    let job = dir.path().join("job.json");
    std::fs::write(&job, r#"{ "schema": 3, "kind": "homogeneous", "input": { "s": "x", "d": [1], "c": "1/0" }, "colour": 1 }"#).unwrap();
    let o = run(&job, dir.path(), &[], None);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    for path in ["$.schema:", "$.colour:", "$.input.s:", "$.input.d:", "$.input.c:"] {
        assert!(err.contains(path), "{path} missing in\n{err}");
    }
}

#[test]
fn flags_override_job_parameters() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("surface-body-bl2.json"), out.path(), &["--grid-step", "1/4"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result(out.path(), "surface-body-bl2")["result"]["meta"]["grid_step"], "1/4");
    let o = run(&jobs_dir().join("semigroup-sample-bl2.json"), out.path(), &["--m-max", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result(out.path(), "semigroup-sample-bl2")["result"]["m_max"], 3);
    let o = run(&jobs_dir().join("nagata-r9.json"), out.path(), &["--grid-step", "0"], None);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn shipped_fixture_files_match_the_library() {
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let empty = tempfile::tempdir().unwrap();
    for job in ["toric-body-p2.json", "eps-xi-check-bl2.json", "slice-volume-bl2.json"] {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        assert_eq!(run(&jobs_dir().join(job), a.path(), &[], Some(&shipped)).status.code(), Some(0));
        assert_eq!(run(&jobs_dir().join(job), b.path(), &[], Some(empty.path())).status.code(), Some(0));
        let stem = job.trim_end_matches(".json");
        assert_eq!(result(a.path(), stem), result(b.path(), stem), "{job}");
    }
}

#[test]
fn fixture_directory_can_be_overridden() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("toric")).unwrap();
    // O(2) on the plane under the name of the O(1) fixture.
    std::fs::write(
        dir.path().join("toric/p2.json"),
        r#"{ "fan": { "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]] },
             "divisor": { "coeffs": ["0", "0", "2"] }, "flags": { "flags": [[0, 1]] } }"#,
    )
    .unwrap();
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("toric-body-p2.json"), out.path(), &[], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(result(out.path(), "toric-body-p2")["result"]["volume"]["coeff"], "2");
}

#[test]
fn rendering_a_solid_body_is_an_input_error() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&jobs_dir().join("semigroup-sample-bl2.json"), out.path(), &["--render"], None);
    assert_eq!(o.status.code(), Some(0), "the bl2 body is a segment and renders");
    let dir = tempfile::tempdir().unwrap();
    let job = dir.path().join("solid.json");
    std::fs::write(
        &job,
        r#"{ "schema": 1, "kind": "surface-body", "input": { "model": { "s": 2, "mode": "delpezzo-general" }, "class": { "d": 1, "m": [0, 0] }, "points": [0, 1] }, "render": true }"#,
    )
    .unwrap();
    let o = run(&job, dir.path(), &[], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot render"));
}
