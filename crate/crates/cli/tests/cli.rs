use detlct_cli::report::{RunReport, Status};
use detlct_cli::run;
use serde_json::Value;

fn cli(args: &[&str]) -> detlct_cli::Outcome {
    run(std::iter::once("detlct").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, RunReport) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = cli(&full);
    let rep = RunReport::from_json(&out.stdout).expect("valid JSON report");
    (out.code, rep)
}

#[test]
fn determinantal_threshold() {
    let (code, rep) = json(&["lct-det", "--spec", "3", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rep.status, Status::Ok);
    assert_eq!(rep.result["value"], "2/1");
    assert_eq!(rep.result["minimizing_t"], 1);
    assert_eq!(rep.result["method"], "determinantal-formula");
    let stage = &rep.result["stages"][0];
    for key in ["i", "m_i", "n_i", "r_i", "a_i", "k_i", "q_i", "predicted", "computed"] {
        assert!(stage.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn monomial_threshold_with_certificates() {
    let (code, rep) = json(&["lct-monomial", "--ideal", "x1^2*x2, x3^3", "--vars", "x1", "x2", "x3"]);
    assert_eq!(code, 0);
    assert_eq!(rep.result["value"], "5/6");
    let lp = &rep.certificates["lp"];
    assert_eq!(lp["validated"], true);
    assert_eq!(lp["objective"], "5/6");
    assert_eq!(lp["dual"], serde_json::json!(["1/2", "0/1", "1/3"]));
}

#[test]
fn theorem1_sweep_counts_every_triple() {
    let (code, rep) = json(&["verify", "theorem1", "--max", "30"]);
    assert_eq!(code, 0);
    assert_eq!(rep.result["all_pass"], true);
    let expected: usize = (1..=30).map(|m| m * (m + 1) / 2).sum();
    assert_eq!(rep.result["case_count"], expected);
    assert_eq!(rep.result["cases"].as_array().unwrap().len(), expected);
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    let out = cli(&["lct-monomial", "--ideal", "x +* y", "--vars", "x", "y"]);
    assert_eq!(out.code, 2);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stderr.contains("column 4") && out.stderr.contains('*'), "{}", out.stderr);

    let out = cli(&["gb", "--frobnicate"]);
    assert_eq!(out.code, 2);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stderr.contains("--frobnicate"));

    let out = cli(&["lct-monomial", "--ideal", "x + y", "--vars", "x", "y"]);
    assert_eq!(out.code, 2);
    let out = cli(&["lct-det", "--spec", "2", "2", "3"]);
    assert_eq!(out.code, 2);
}

#[test]
fn resource_limits_exit_three() {
    let (code, rep) = json(&["ord", "--spec", "4", "4", "2", "--stage", "1"]);
    assert_eq!(code, 3);
    assert_eq!(rep.status, Status::ResourceLimit);
    let (code, rep) = json(&["gb", "--ideal", "x^2*y - 1, x*y^2 - x", "--vars", "x", "y", "--max-steps", "1"]);
    assert_eq!(code, 3);
    assert_eq!(rep.inputs["args"]["max_steps"], 1);
}

#[test]
fn verifier_exit_codes() {
    let (code, _) = json(&["verify", "corollary", "--spec", "3", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(Status::Fail.exit_code(), 1);
    assert_eq!(Status::Inconclusive.exit_code(), 1);
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let cases: &[&[&str]] = &[
        &["lct-det", "--spec", "4", "4", "2"],
        &["ord", "--spec", "4", "3", "3", "--stage", "1", "--mode", "specialized", "--seed", "0", "1", "2"],
        &["link", "--ideal", "x1^2*x2, x3^3", "--vars", "x1", "x2", "x3", "--mode", "specialized", "--seed", "5"],
        &["verify", "codim2"],
        &["quotient", "--ideal", "x*y, x*z", "--vars", "x", "y", "z", "--by", "x"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let a = cli(&full);
        let b = cli(&full);
        let mut ra = RunReport::from_json(&a.stdout).unwrap();
        let mut rb = RunReport::from_json(&b.stdout).unwrap();
        assert_eq!(RunReport::from_json(&ra.to_json()).unwrap(), ra);
        ra.timing_ms = 0;
        rb.timing_ms = 0;
        assert_eq!(ra.to_json(), rb.to_json(), "{args:?}");
    }
}

fn numbers(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars().chain([' ']) {
        if ch.is_ascii_digit() || (ch == '/' && !cur.is_empty()) {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.push(cur.trim_end_matches('/').to_string());
            cur.clear();
        }
    }
    out
}

#[test]
fn text_numbers_appear_in_json() {
    let cases: &[&[&str]] = &[
        &["lct-det", "--spec", "5", "3", "2"],
        &["lct-monomial", "--ideal", "x1*x2, x2*x3, x3*x1", "--vars", "x1", "x2", "x3"],
        &["ord", "--spec", "3", "2", "2"],
        &["verify", "qibound", "--max", "5"],
    ];
    for args in cases {
        let text = cli(args).stdout;
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let js = cli(&full).stdout;
        let compact: String = js.split_whitespace().collect();
        for line in text.lines().filter(|l| !l.starts_with("timing_ms")) {
            let value = line.split_once(": ").map_or(line, |(_, v)| v);
            for n in numbers(value) {
                assert!(compact.contains(&n), "{n} from `{line}` missing in JSON");
            }
        }
    }
}

#[test]
fn rationals_are_fraction_strings() {
    let (_, rep) = json(&["lct-monomial", "--ideal", "x1*x2, x2*x3, x3*x1", "--vars", "x1", "x2", "x3"]);
    fn walk(v: &Value) {
        match v {
            Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "non-integer number {n}"),
            Value::Array(a) => a.iter().for_each(walk),
            Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&rep.result);
    walk(&rep.certificates);
    assert_eq!(rep.result["value"], "3/2");
    assert_eq!(rep.certificates["lp"]["primal"], serde_json::json!(["1/2", "1/2", "1/2"]));
}

#[test]
fn ideal_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.txt");
    std::fs::write(&path, "# principal\nvars: x y\nx*y\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, rep) = json(&["lct-monomial", "--file", p]);
    assert_eq!(code, 0);
    assert_eq!(rep.result["value"], "1/1");
    let (_, rep) = json(&["ord", "--file", p, "--block", "x"]);
    assert_eq!(rep.result["order"], "1");

    std::fs::write(&path, "vars: x y\nx +* y\n").unwrap();
    let out = cli(&["gb", "--file", p]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2, column 4"), "{}", out.stderr);
}

#[test]
fn gb_and_quotient() {
    let (code, rep) = json(&["gb", "--ideal", "x^2 - y, x*y - 1", "--vars", "x", "y"]);
    assert_eq!(code, 0);
    assert!(rep.result["basis"].as_array().unwrap().len() >= 2);
    assert!(rep.certificates["gb"]["pairs_processed"].as_u64().unwrap() >= 1);
    let (_, rep) = json(&["quotient", "--ideal", "x*y, x*z", "--vars", "x", "y", "z", "--by", "y, z"]);
    assert_eq!(rep.result["generators"], serde_json::json!(["x"]));
}

#[test]
fn link_reports_orders() {
    let (code, rep) = json(&["link", "--spec", "3", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rep.result["ord_x_base"], "2");
    assert_eq!(rep.result["ord_x_link"], "1");
    assert_eq!(rep.certificates["product_in_iv"], true);
}
