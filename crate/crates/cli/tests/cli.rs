//! End-to-end checks of the `qga` binary: exit statuses, output formats,
//! determinism, and the documented file interface.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn qga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qga"))
        .args(args)
        .output()
        .expect("spawn qga")
}

fn write_state(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(body.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

const SINGLET: &str = r#"{"amplitudes": [[0.0, 0.0], [0.7071067811865476, 0.0], [-0.7071067811865476, 0.0], [0.0, 0.0]]}"#;

fn field(stdout: &str, key: &str) -> f64 {
    for line in stdout.lines() {
        if let Some(rest) = line.strip_prefix(&format!("{key} = ")) {
            return rest.parse().unwrap();
        }
    }
    panic!("missing field {key} in output:\n{stdout}");
}

#[test]
fn decompose_singlet_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(dir.path(), "singlet.json", SINGLET);
    let out = qga(&["decompose", &path]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!((field(&stdout, "alpha") - std::f64::consts::FRAC_PI_2).abs() < 1e-11);
    assert!(field(&stdout, "reconstruction_residual") < 1e-10);
}

#[test]
fn malformed_document_is_a_parse_diagnostic_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(dir.path(), "broken.json", "{not json");
    let out = qga(&["decompose", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("cannot parse state document"), "stderr: {stderr}");
}

#[test]
fn zero_state_is_a_domain_error() {
    let out = qga(&["decompose", "--amps", "0,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no nonzero amplitude"), "stderr: {stderr}");
}

#[test]
fn missing_state_is_a_usage_error() {
    let out = qga(&["decompose"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qga(&["overlap", "--amps-a", "1,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn file_and_inline_together_are_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(dir.path(), "s.json", SINGLET);
    let out = qga(&["decompose", &path, "--amps", "1,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = qga(&["decompose", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_format_is_reserved_for_bell_curve() {
    let out = qga(&["decompose", "--amps", "1,0,0,0,0,0,0,0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bell_curve_rejects_too_few_samples() {
    let out = qga(&["bell-curve", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let args = ["observables", "--amps", "0.6,0,0,0.48,0,0.4,0.2,0.46", "--normalize", "--xcheck"];
    let a = qga(&args);
    let b = qga(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn xcheck_only_appends_fields() {
    let base = qga(&["decompose", "--amps", "1,0,0,0,0,0,0,0"]);
    let with = qga(&["decompose", "--amps", "1,0,0,0,0,0,0,0", "--xcheck"]);
    let base_txt = String::from_utf8(base.stdout).unwrap();
    let with_txt = String::from_utf8(with.stdout).unwrap();
    assert!(with_txt.starts_with(&base_txt));
    assert!(with_txt.contains("xcheck_m1_residual"));
}

#[test]
fn structured_output_is_json() {
    let out = qga(&["decompose", "--amps", "1,0,0,0,0,0,0,0", "--format", "structured"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "decompose");
    assert_eq!(v["alpha"], 0.0);
}

#[test]
fn normalize_field_in_the_document_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(
        dir.path(),
        "big.json",
        r#"{"amplitudes": [[2.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]], "normalize": true}"#,
    );
    let out = qga(&["observables", &path]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // reduced polarization of |00> is (0, 0, 1) for both particles
    assert!(stdout.contains("reduced_polarization_1"));
    for line in stdout.lines() {
        if line.starts_with("reduced_polarization_") {
            let values: Vec<f64> = line
                .split(" = ")
                .nth(1)
                .unwrap()
                .split(", ")
                .map(|v| v.parse().unwrap())
                .collect();
            assert!(values[0].abs() < 1e-12 && values[1].abs() < 1e-12);
            assert!((values[2] - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn unnormalized_observables_fail_without_the_flag() {
    let out = qga(&["observables", "--amps", "2,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qga(&["observables", "--amps", "2,0,0,0,0,0,0,0", "--normalize"]);
    assert!(out.status.success());
}

#[test]
fn overlap_between_files_and_inline() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(dir.path(), "singlet.json", SINGLET);
    // singlet against the aligned product state: probability 0
    let out = qga(&["overlap", &path, "--amps-b", "1,0,0,0,0,0,0,0", "--xcheck"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(field(&stdout, "probability").abs() < 1e-12);
    assert!(field(&stdout, "xcheck_residual") < 1e-12);
    // and against the anti-aligned product state: one half
    let out = qga(&["overlap", &path, "--amps-b", "0,0,1,0,0,0,0,0"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!((field(&stdout, "probability") - 0.5).abs() < 1e-12);
}

#[test]
fn bell_curve_xcheck_appends_a_residual_column() {
    let out = qga(&["bell-curve", "--samples", "3", "--xcheck"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("theta,probability,residual"));
    for line in lines {
        let residual: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!(residual < 1e-10);
    }
}
