use std::process::Command;

use shifted_rgf::cli::{run, PolyReport, EXIT_CLAIM_FAILED, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE};
use shifted_rgf::explore::ScanReport;
use shifted_rgf::ClaimVerdict;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shifted-rgf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn rgf_text_output() {
    let (code, out, _) = call(&["rgf", "--shape", "4,2,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "coefficients"), "1,1,1,2,2,2,2,1");
    assert_eq!(field(&out, "peak_degrees"), "3,4,5,6");
    assert_eq!(field(&out, "first_dip"), "none");
}

#[test]
fn rgf_json_agrees_with_text() {
    for shape in ["9,7,5,3", "8,8,4,4", "arith:n=19,t=2,b=4", "qanalog:a=10,b=4"] {
        let kind = if shape == "8,8,4,4" { "straight" } else { "shifted" };
        let (c1, text, _) = call(&["rgf", "--shape", shape, "--kind", kind]);
        let (c2, json, _) = call(&["rgf", "--shape", shape, "--kind", kind, "--json"]);
        assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
        let report: PolyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report.poly.coeff_strings().join(","), field(&text, "coefficients"));
        assert_eq!(report.diagnostics.unimodal.to_string(), field(&text, "unimodal"));
        assert_eq!(report.diagnostics.peak_count.to_string(), field(&text, "peak_count"));
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(again.trim(), json.trim());
    }
}

#[test]
fn ten_four_golden_diagnostics() {
    let (_, out, _) = call(&["qanalog", "10", "4"]);
    assert_eq!(field(&out, "unimodal"), "false");
    assert_eq!(field(&out, "peak_count"), "2");
    assert_eq!(field(&out, "first_dip"), "17");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = call(&["rgf", "--shape", "2,2", "--kind", "shifted"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("strictly decreasing"), "{err}");
    assert_eq!(call(&["rgf", "--shape", "3,x"]).0, EXIT_USAGE);
    assert_eq!(call(&["rgf", "--shape", "arith:n=5,t=2,b=4"]).0, EXIT_USAGE);
    assert_eq!(call(&["qbinom", "3", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["qanalog", "5", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["check", "nope"]).0, EXIT_USAGE);
}

#[test]
fn help_and_version() {
    let (code, out, _) = call(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
    let (code, out, _) = call(&["scan", "--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("open-b5-b7"));
}

#[test]
fn checks_report_and_exit() {
    let (code, out, _) = call(&["check", "eq4", "--nmax", "30", "--jobs", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("eq4 [4 <= n <= 30]: holds"), "{out}");

    let (code, out, _) = call(&["check", "named", "--json"]);
    assert_eq!(code, EXIT_OK);
    let vs: Vec<ClaimVerdict> = serde_json::from_str(&out).unwrap();
    assert_eq!(vs.len(), 7);

    let (code, out, _) = call(&["check", "ohara", "--amax", "5"]);
    assert_eq!(code, EXIT_CLAIM_FAILED);
    assert!(out.contains("a=3"), "{out}");

    assert_eq!(call(&["check", "fac-c-monotone", "--amax", "20"]).0, EXIT_CLAIM_FAILED);
    assert_eq!(call(&["check", "fac-c", "--amax", "100"]).0, EXIT_OK);
}

#[test]
fn ftable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    let (code, _, _) = call(&["ftable", "--amax", "6", "--csv", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<(usize, usize, i64)> = rdr.deserialize().map(Result::unwrap).collect();
    assert!(rows.contains(&(4, 3, 0)));
    assert!(rows.contains(&(6, 0, 2)));
    assert!(rows.iter().all(|&(a, c, f)| f >= 0 && c <= 2 * a));

    let (_, stdout_csv, _) = call(&["ftable", "--amax", "6"]);
    assert_eq!(stdout_csv, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn bijection_command() {
    let (code, out, _) = call(&["bijection", "--a", "9", "--b", "4", "--verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("partitions inside shape: 126"));
    assert!(out.contains("bijection verified: true"));
}

#[test]
fn scan_counterexample_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let (code, _, _) = call(&[
        "scan",
        "arith",
        "--budget",
        "10",
        "--complement",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    let report: ScanReport = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let first = &report.counterexamples[0];
    assert_eq!(first.shape.to_string(), "<9,7,5,3>");
    assert_eq!(first.oracle_confirmed, Some(true));

    let (code, out, _) = call(&["scan", "centr", "--budget", "8", "--json"]);
    assert_eq!(code, EXIT_OK);
    let report: ScanReport = serde_json::from_str(&out).unwrap();
    assert!(report.finished && report.counterexamples.is_empty());
}

#[test]
fn binary_exit_codes_and_checkpoint_dir() {
    let bin = env!("CARGO_BIN_EXE_shifted-rgf");
    let dir = tempfile::tempdir().unwrap();
    let status = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("SHIFTED_RGF_CHECKPOINT_DIR", dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(status(&["qbinom", "6", "2"]).status.code(), Some(EXIT_OK));
    assert_eq!(status(&["rgf", "--shape", "2,2"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(
        status(&["check", "ohara", "--amax", "4"]).status.code(),
        Some(EXIT_CLAIM_FAILED)
    );

    let out = status(&["scan", "truncated", "--bmax", "5", "--budget", "12"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let saved = dir.path().join("truncated_staircase.json");
    let report: ScanReport = serde_json::from_str(&std::fs::read_to_string(saved).unwrap()).unwrap();
    assert!(report.finished);
}
