use std::process::{Command, Output};

fn fcgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcgf")).args(args).env_remove("FCGF_FORMAT").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn series_prints_bracket_lists() {
    let o = fcgf(&["series", "--family", "A", "--all", "--n", "3", "--qmax", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[1, 3, 5, 4, 1]");
    let o = fcgf(&["series", "--special", "J", "--xdeg", "0", "--qmax", "5"]);
    assert_eq!(stdout(&o).trim(), "[1]");
}

#[test]
fn series_json_matches_text() {
    let args = ["series", "--family", "Dtilde", "--inv", "--n", "3", "--qmax", "30"];
    let text = stdout(&fcgf(&args));
    let json: serde_json::Value = serde_json::from_str(&stdout(&fcgf(&[&args[..], &["--format", "json"]].concat()))).unwrap();
    let from_json: Vec<String> = json[0]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().trim_end_matches("/1").to_string())
        .collect();
    assert_eq!(text.trim(), format!("[{}]", from_json.join(", ")));
    assert_eq!(json[0]["x_degree"], 3);
}

#[test]
fn format_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fcgf"))
        .args(["oracle", "--family", "A", "--n", "3", "--lmax", "4"])
        .env("FCGF_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!([1, 3, 5, 4, 1]));
}

#[test]
fn oracle_counts() {
    let o = fcgf(&["oracle", "--family", "A", "--n", "3", "--lmax", "4"]);
    assert_eq!(stdout(&o).trim(), "[1, 3, 5, 4, 1]");
    let o = fcgf(&["oracle", "--alternating", "path", "--n", "2", "--lmax", "5"]);
    assert_eq!(stdout(&o).trim(), "[1, 2, 2, 2, 2, 2]");
    let o = fcgf(&["oracle", "--family", "B", "--n", "3", "--lmax", "6", "--involutions"]);
    assert_eq!(stdout(&o).trim(), "[1, 3, 1, 2, 1, 1, 1]");
    let o = fcgf(&["oracle", "--family", "A", "--n", "3", "--lmax", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "length,count\n0,1\n1,3\n2,5\n3,4\n");
}

#[test]
fn oracle_refuses_large_searches_without_force() {
    let o = fcgf(&["oracle", "--family", "A", "--n", "9", "--lmax", "3"]);
    assert_eq!(code(&o), 3);
    let o = fcgf(&["oracle", "--family", "A", "--n", "9", "--lmax", "3", "--force"]);
    assert_eq!(code(&o), 0);
    let closed_form = fcgf(&["series", "--family", "A", "--n", "9", "--qmax", "3"]);
    assert_eq!(stdout(&o), stdout(&closed_form));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&fcgf(&["series", "--family", "Q", "--n", "3"])), 2);
    assert_eq!(code(&fcgf(&["series", "--n", "3"])), 2);
    assert_eq!(code(&fcgf(&["verify", "--check", "I99"])), 2);
    assert_eq!(code(&fcgf(&["table", "nope"])), 2);
    assert_eq!(code(&fcgf(&["oracle", "--family", "A", "--n", "3", "--lmax", "3", "--first", "odd"])), 2);
}

#[test]
fn verify_single_check() {
    let o = fcgf(&["verify", "--check", "I16"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("I16"));
    assert!(out.contains("1 checks: 1 pass"));
}

#[test]
fn verify_identity_suite_passes() {
    let o = fcgf(&["verify", "--suite", "identities", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 34);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn injected_fault_is_reported() {
    let o = fcgf(&["verify", "--suite", "oracle", "--inject-fault", "R3B"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("X:Btilde:3  "));
}

#[test]
fn verify_writes_a_report_file() {
    let dir = std::env::temp_dir().join(format!("fcgf-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = fcgf(&["verify", "--suite", "agreements", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn finite_tables_reproduce() {
    for which in ["finite", "finite-inv", "affine"] {
        let o = fcgf(&["table", which]);
        assert_eq!(code(&o), 0, "{which}");
    }
    let o = fcgf(&["table", "finite"]);
    assert!(stdout(&o).contains("A_4  [1, 4, 9, 12, 10, 4, 2]"));
}

#[test]
fn table_formats_agree() {
    let text = stdout(&fcgf(&["table", "affine"]));
    let csv = stdout(&fcgf(&["table", "affine", "--format", "csv"]));
    let mut rows = csv::Reader::from_reader(csv.as_bytes());
    let mut n = 0;
    for r in rows.records() {
        let r = r.unwrap();
        assert!(text.contains(&r[4]), "{}", &r[4]);
        n += 1;
    }
    assert_eq!(n, 8);
}

#[test]
fn misprinted_involution_rows_are_flagged() {
    let o = fcgf(&["table", "affine-inv"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(failing.len(), 2);
    assert!(failing[0].starts_with("Ctilde_2") && failing[0].contains("at q^5"));
    assert!(failing[1].starts_with("Ctilde_3") && failing[1].contains("at q^7"));
}
