use clebsch_binom::cli;
use clebsch_binom::exact::{parse_decimal, parse_rational, ratio, BigRational};
use clebsch_binom::prob::{hypergeom_pmf, HypergeomParams};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("clebsch-binom").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}: {out}")))
}

fn exact_rational(v: &Value) -> BigRational {
    let r = &v["exact"]["rational"];
    parse_rational(&format!("{}/{}", r["num"].as_str().unwrap(), r["den"].as_str().unwrap())).unwrap()
}

#[test]
fn cg_backends_all_agree() {
    let (code, v) = json(&["cg", "1/2", "1/2", "1/2", "-1/2", "1", "0", "--backend", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["agreement"], true);
    assert_eq!(v["backends"].as_array().unwrap().len(), 3);
    assert_eq!(v["exact"]["sign"], 1);
    assert_eq!(v["decimal"], "0.707106781186548");
}

#[test]
fn ladder_outside_stretched_slice_is_usage_error() {
    let (code, v) = json(&["cg", "1/2", "1/2", "1/2", "-1/2", "0", "0", "--backend", "ladder"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
}

#[test]
fn three_jm_reports_converted_value() {
    let (code, v) = json(&["3jm", "1", "1", "1", "-1", "0", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"]["radicand"]["num"], "1");
    assert_eq!(v["exact"]["radicand"]["den"], "3");
}

#[test]
fn triangle_violation_is_zero_not_error() {
    let (code, v) = json(&["cg", "1/2", "1/2", "1/2", "-1/2", "2", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "zero");
}

#[test]
fn malformed_label_is_usage_error() {
    let (code, _, _) = run(&["cg", "1/3", "1/2", "1/2", "-1/2", "1", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn hypergeom_pmf_matches_library() {
    for x in 0..=2 {
        let xs = x.to_string();
        let (code, v) = json(&["dist", "hypergeom-pmf", "--n1", "5", "--n2", "2", "--n3", "10", "--x", &xs]);
        assert_eq!(code, 0);
        assert_eq!(exact_rational(&v), hypergeom_pmf(&HypergeomParams::new(5, 2, 10).unwrap(), x));
    }
}

#[test]
fn mgf_is_approximate_only() {
    let (code, v) = json(&["dist", "mgf", "--n1", "1", "--n2", "1", "--n3", "2", "--t", "0.6931471805599453"]);
    assert_eq!(code, 0);
    assert!(v.get("exact").is_none());
    let d = parse_decimal(v["decimal"].as_str().unwrap()).unwrap();
    assert!((d - ratio(3, 2)) < parse_decimal("1e-12").unwrap());
}

#[test]
fn convolve_table_sums_to_one() {
    let (code, v) = json(&["dist", "convolve", "--trials-a", "2", "--trials-b", "3", "--p", "1/3"]);
    assert_eq!(code, 0);
    let total: BigRational = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| parse_rational(&format!("{}/{}", e["num"].as_str().unwrap(), e["den"].as_str().unwrap())).unwrap())
        .sum();
    assert_eq!(total, ratio(1, 1));
}

#[test]
fn conditional_rejects_p_outside_open_interval() {
    let (code, _, _) = run(&["dist", "conditional", "--l1", "2", "--k1", "1", "--l2", "2", "--k2", "1", "--p", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn limit_emits_one_record_per_population() {
    let (code, v) = json(&["limit", "--p", "1/2", "--n2", "2", "--n3", "10,20,40"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn text_format_is_human_readable() {
    let (code, out, _) = run(&["--format", "text", "dist", "mean", "--n1", "5", "--n2", "4", "--n3", "10"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: ok"));
    assert!(out.contains("exact: 2/1"));
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("clebsch-binom-verify-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["verify", "--suite", "degenerate", "--max-l", "3", "--output", p]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let a: Value = serde_json::from_str(&out).unwrap();
    let b: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
    assert_eq!(a["suites"][0]["failure_count"], 0);
}
