use std::path::PathBuf;

use chroma::cli::{parse_scalar, run, run_on, Command, Format, JobSpec};
use chroma::datum::DatumJson;
use chroma::scalars::{Rational01, Scalar};
use serde_json::Value;

fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn job(command: Command, format: Format) -> JobSpec {
    JobSpec { format, ..JobSpec::new(command) }
}

fn json_report(command: Command, input: &str) -> (i32, Value) {
    let out = run_on(&job(command, Format::Json), input);
    let v = serde_json::from_str(out.report.as_deref().expect("report written")).unwrap();
    (out.code, v)
}

#[test]
fn scalar_grammar() {
    let s = parse_scalar("-1*q^-1").unwrap();
    assert_eq!(s.root(), Rational01::HALF);
    assert_eq!(s.exponents().get("q"), Some(&-1));
    assert_eq!(s.to_string(), "-1*q^-1");
    assert_eq!(parse_scalar("zeta(3,1)").unwrap(), Scalar::zeta(3, 1));
    assert!(parse_scalar("q^2*q^-2").unwrap().is_one());
    assert!(parse_scalar("q^").is_err());
}

#[test]
fn diagram_text_uses_glyphs() {
    let out = run_on(&job(Command::Diagram, Format::Text), &data("c3_rank2.json"));
    assert_eq!(out.code, 0);
    let text = out.report.unwrap();
    assert_eq!(text.lines().next(), Some("○^ω —q^-1— ○^q"));
    assert!(text.contains("legend: ○=(0) ●=(1) ⊗=(2)"));
}

#[test]
fn rank_one_orbit_is_one_node() {
    let input = r#"{"q": [["q"]], "group": {"orders": [2]}, "beta": [["1/2"]], "t": [[1]]}"#;
    let (code, v) = json_report(Command::Orbit, input);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(v["truncated"], false);
}

#[test]
fn orbit_nodes_round_trip() {
    let (code, v) = json_report(Command::Orbit, &data("c3_rank2.json"));
    assert_eq!(code, 0);
    assert_eq!(v["diagram_classes"].as_array().unwrap().len(), 2);
    for node in v["nodes"].as_array().unwrap() {
        let parsed: DatumJson = serde_json::from_value(node.clone()).unwrap();
        let d = parsed.build().unwrap();
        assert_eq!(serde_json::to_value(d.to_json()).unwrap(), *node);
    }
}

#[test]
fn truncation_flag() {
    let mut j = job(Command::Orbit, Format::Json);
    j.max_nodes = 3;
    let out = run_on(&j, &data("klein4.json"));
    let v: Value = serde_json::from_str(&out.report.unwrap()).unwrap();
    assert_eq!(v["truncated"], true);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
}

#[test]
fn extension_examples_pass() {
    for name in ["c12_by_c3_color.json", "v4_swap_c4.json", "v4_swap_c2c4.json", "sommer.json", "c7_by_c3.json"] {
        let (code, v) = json_report(Command::CheckExtension, &data(name));
        assert_eq!(code, 0, "{name}: {v}");
        if let Some(c) = v.get("color") {
            assert_eq!(c["is_color"], true);
            assert_eq!(c["definition_holds"], true);
        }
    }
}

#[test]
fn failing_checks_exit_one_with_report() {
    let mut input: Value = serde_json::from_str(&data("c12_by_c3_color.json")).unwrap();
    input["color"]["beta"] = serde_json::json!([["1/2", "0"], ["0", "0"]]);
    let (code, v) = json_report(Command::CheckExtension, &input.to_string());
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    assert_eq!(v["color"]["is_color"], false);

    let mut verify: Value = serde_json::from_str(&data("super_line.json")).unwrap();
    verify["mode"] = "plain".into();
    let (code, v) = json_report(Command::Verify, &verify.to_string());
    assert_eq!(code, 1);
    assert_eq!(v["mode"], "plain");
}

#[test]
fn input_errors_exit_two() {
    let bad = [
        (Command::Orbit, "{not json"),
        (Command::Diagram, r#"{"group": {"orders": [3]}, "beta": [["1/3"]], "t": [[1]]}"#),
        (Command::Triangular, r#"{"group": {"orders": [3]}, "beta": [["1/3"]]}"#),
        (Command::CheckExtension, r#"{"l": {"cyclic": 2}}"#),
    ];
    for (cmd, input) in bad {
        let out = run_on(&job(cmd, Format::Json), input);
        assert_eq!(out.code, 2, "{}", cmd.name());
        assert!(out.report.is_none());
        assert!(out.error.is_some());
    }
    let out = run_on(&job(Command::Verify, Format::Dot), &data("super_line.json"));
    assert_eq!(out.code, 2);
}

#[test]
fn reports_are_byte_deterministic() {
    let cases = [
        (Command::Orbit, "klein4.json", Format::Json),
        (Command::Orbit, "c3_rank2.json", Format::Dot),
        (Command::Diagram, "klein4.json", Format::Dot),
        (Command::CheckDouble, "c3_symmetric.json", Format::Json),
        (Command::CheckExtension, "c12_by_c3.json", Format::Json),
        (Command::AutExt, "c7_by_c3.json", Format::Text),
        (Command::Triangular, "hyperbolic.json", Format::Json),
    ];
    for (cmd, file, fmt) in cases {
        let a = run_on(&job(cmd, fmt), &data(file));
        let b = run_on(&job(cmd, fmt), &data(file));
        assert_eq!(a.code, 0, "{} {file}", cmd.name());
        assert_eq!(a.report, b.report);
    }
}

#[test]
fn output_file_matches_stdout_report() {
    let dir = std::env::temp_dir().join(format!("chroma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let mut j = job(Command::CheckDouble, Format::Json);
    j.input = Some(data_path("c3_symmetric.json"));
    j.output = Some(target.clone());
    let out = run(&j);
    assert_eq!(out.code, 0);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), out.report.unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_chroma");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    let ok = status(&["diagram", "--format", "text", "--input", data_path("c3_rank2.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().starts_with("○^ω —q^-1— ○^q"));
    let missing = status(&["orbit", "--input", "/nonexistent/input.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let threads = std::process::Command::new(bin)
        .env("CHROMA_THREADS", "1")
        .args(["check-extension", "--input", data_path("v4_swap_c4.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(0));
    let bad_threads = std::process::Command::new(bin)
        .env("CHROMA_THREADS", "zero")
        .args(["triangular", "--input", data_path("hyperbolic.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}
