use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use detlct::detlink::{OrderReport, StageData};
use detlct::groebner::GbStats;
use detlct::lct::VerifierReport;
use detlct::polyring::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Inconclusive,
    /// A verifier or consistency check returned false.
    Fail,
    ResourceLimit,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Inconclusive | Status::Fail | Status::Error => 1,
            Status::ResourceLimit => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
            Status::ResourceLimit => "resource-limit",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub status: Status,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(s)
    }

    /// Key-per-line rendering. Every number shown also appears in the JSON.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nstatus: {}\n", self.command, self.status.as_str());
        flatten("result", &self.result, &mut out);
        flatten("certificates", &self.certificates, &mut out);
        out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if k == "cases" {
                    if let Value::Array(cases) = x {
                        let failing: Vec<&Value> =
                            cases.iter().filter(|c| c["pass"] == Value::Bool(false)).collect();
                        out.push_str(&format!("{path}.failing_cases: {}\n", failing.len()));
                        for (i, c) in failing.iter().enumerate() {
                            flatten(&format!("{path}.failing[{i}]"), c, out);
                        }
                        continue;
                    }
                }
                flatten(&format!("{path}.{k}"), x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), x, out);
            }
        }
        other => out.push_str(&format!("{path}: {}\n", scalar(other).expect("scalar"))),
    }
}

/// Exact rational as `"p/q"`.
pub fn q(r: &Rational) -> Value {
    Value::String(r.to_fraction_string())
}

pub fn qs(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(q).collect())
}

pub fn digest(inputs: &Value) -> String {
    let bytes = serde_json::to_vec(inputs).expect("serializable");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// `{"args": …, "digest": sha256(args)}`.
pub fn inputs(args: Value) -> Value {
    let d = digest(&args);
    json!({ "args": args, "digest": d })
}

pub fn stage_object(s: &StageData, computed: Option<u64>) -> Value {
    json!({
        "i": s.i,
        "m_i": s.m_i,
        "n_i": s.n_i,
        "r_i": s.r_i,
        "a_i": s.a_i,
        "k_i": s.k_i,
        "q_i": s.q_i,
        "predicted": s.predicted_link_order(),
        "computed": computed,
    })
}

pub fn order_report(rep: &OrderReport) -> Value {
    let mut obj = stage_object(&rep.stage, rep.computed);
    let map = obj.as_object_mut().expect("object");
    map.insert("status".into(), json!(rep.status.as_str()));
    map.insert("mode".into(), json!(rep.mode.name()));
    map.insert(
        "samples".into(),
        Value::Array(
            rep.samples
                .iter()
                .map(|(seed, o)| json!({ "seed": seed, "order": o }))
                .collect(),
        ),
    );
    obj
}

pub fn gb_stats(s: &GbStats) -> Value {
    json!({
        "pairs_processed": s.pairs_processed,
        "zero_reductions": s.zero_reductions,
        "pairs_pruned": s.pairs_pruned,
        "basis_size": s.basis_size,
        "pairs_remaining": s.pairs_remaining,
    })
}

pub fn verifier(kind: &str, rep: &VerifierReport) -> Value {
    let cases: Vec<Value> = rep
        .cases
        .iter()
        .map(|c| {
            let params: Map<String, Value> =
                c.parameters.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({
                "parameters": params,
                "expected": c.expected,
                "observed": c.observed,
                "pass": c.pass,
                "note": c.note,
            })
        })
        .collect();
    json!({
        "kind": kind,
        "scope": rep.scope,
        "all_pass": rep.all_pass(),
        "case_count": rep.cases.len(),
        "cases": cases,
        "notes": rep.notes,
    })
}
