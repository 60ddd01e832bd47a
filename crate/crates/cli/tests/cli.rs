//! End-to-end tests of the installed binary: every subcommand is driven
//! through a real process, and the documented outputs are byte-stable.

use std::path::Path;
use std::process::{Command, Output};

fn tilecalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilecalc"))
        .args(args)
        .env_remove("TILECALC_MAX_STEPS")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = tilecalc(args);
    assert!(
        out.status.success(),
        "`{args:?}` failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn failure_of(args: &[&str]) -> String {
    let out = tilecalc(args);
    assert!(!out.status.success(), "`{args:?}` unexpectedly succeeded");
    let err = String::from_utf8(out.stderr).expect("utf-8 diagnostics");
    assert_eq!(err.lines().count(), 1, "one-line diagnostic, got: {err}");
    err
}

#[test]
fn divides_in_decimal_form() {
    assert_eq!(
        stdout_of(&["divide", "23.5", "6", "--frac-bits", "4"]),
        "11.1110b (3.875) steps=180\n"
    );
}

#[test]
fn accepts_binary_literals() {
    assert_eq!(
        stdout_of(&["divide", "0b10111.1", "0b110", "--frac-bits", "4"]),
        "11.1110b (3.875) steps=180\n"
    );
}

#[test]
fn takes_square_roots() {
    assert_eq!(
        stdout_of(&["sqrt", "42.25", "--frac-bits", "1"]),
        "110.1b (6.5) steps=120\n"
    );
}

#[test]
fn expands_rationals_with_period() {
    assert_eq!(
        stdout_of(&["rational", "1", "3", "--max-bits", "8"]),
        "0.01010101b period=2 steps=208\n"
    );
    assert_eq!(
        stdout_of(&["rational", "1", "2", "--max-bits", "8"]),
        "0.10000000b terminates steps=208\n"
    );
}

#[test]
fn approximates_pi() {
    assert_eq!(
        stdout_of(&["pi", "--terms", "2", "--frac-bits", "8"]),
        "10.101011b (2.671875) steps=449\n"
    );
}

#[test]
fn exports_validates_and_renders_documents() {
    let dir = tempfile::tempdir().unwrap();
    let tiles = dir.path().join("compare.tiles");
    let tiles_str = tiles.to_str().unwrap();

    let msg = stdout_of(&["tiles", "compare", "--export", tiles_str]);
    assert!(msg.contains("24 tiles"), "unexpected: {msg}");
    let doc = std::fs::read_to_string(&tiles).unwrap();
    let compare_records = doc
        .lines()
        .filter(|l| l.starts_with("tile ") && l.contains(" compare "))
        .count();
    assert_eq!(compare_records, 12);
    assert!(stdout_of(&["validate", tiles_str]).starts_with("ok:"));

    let trace = dir.path().join("div.trace");
    let trace_str = trace.to_str().unwrap();
    stdout_of(&["divide", "23.5", "6", "--frac-bits", "4", "--trace", trace_str]);
    let report = stdout_of(&["validate", trace_str]);
    assert!(report.contains("180 steps"), "unexpected: {report}");

    let ascii = stdout_of(&["render", trace_str, "--format", "ascii"]);
    assert!(ascii.contains("C:"), "compare rows drawn:\n{ascii}");
    assert!(ascii.contains("D:"), "input row drawn:\n{ascii}");
    let svg = stdout_of(&["render", trace_str, "--format", "svg"]);
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn exports_the_simulator_layout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sqrt.xgrow");
    stdout_of(&["tiles", "sqrt", "--export", path.to_str().unwrap(), "--xgrow"]);
    let doc = std::fs::read_to_string(&path).unwrap();
    assert!(doc.starts_with("num tile types="));
    assert!(doc.contains("binding strengths={"));
}

#[test]
fn rejects_division_by_zero() {
    let err = failure_of(&["divide", "5", "0"]);
    assert!(err.contains("division by zero"), "got: {err}");
}

#[test]
fn rejects_malformed_operands() {
    let err = failure_of(&["divide", "5..2", "3"]);
    assert!(err.contains("5..2"), "got: {err}");
    let err = failure_of(&["sqrt", "0.1"]);
    assert!(err.contains("binary"), "suggests binary input: {err}");
}

#[test]
fn step_cap_flag_and_environment_are_honored() {
    let err = failure_of(&["divide", "23.5", "6", "--max-steps", "10"]);
    assert!(err.contains("growth limit"), "got: {err}");
    let out = Command::new(env!("CARGO_BIN_EXE_tilecalc"))
        .args(["sqrt", "42.25"])
        .env("TILECALC_MAX_STEPS", "10")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("growth limit"));
}

#[test]
fn validate_rejects_ambiguous_documents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ambiguous.tiles");
    std::fs::write(
        &path,
        "tilecalc tileset v1\ntau 2\n\nglue s 2\n\n\
         tile first boundary solo N=0 E=0 S=s W=0\n\
         tile second boundary solo N=0 E=0 S=s W=0\n",
    )
    .unwrap();
    let err = failure_of(&["validate", path.to_str().unwrap()]);
    assert!(err.contains("determinism"), "got: {err}");
}

#[test]
fn render_requires_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi.tiles");
    stdout_of(&["tiles", "pi", "--export", path.to_str().unwrap(), "--frac-bits", "4"]);
    let err = failure_of(&["render", path.to_str().unwrap()]);
    assert!(err.contains("seed"), "got: {err}");
}

#[test]
fn outputs_are_byte_stable_across_runs() {
    let first = stdout_of(&["divide", "199", "7", "--frac-bits", "6"]);
    let second = stdout_of(&["divide", "199", "7", "--frac-bits", "6"]);
    assert_eq!(first, second);
    assert!(Path::new(env!("CARGO_BIN_EXE_tilecalc")).exists());
}
