//! Report emission: UTF-8 text, JSON, CSV and a LaTeX table rendering, plus
//! a structural validator for the JSON schema the reports publish.

use super::{Status, VerdictReport};

pub fn render_text(report: &VerdictReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "suite {}  (W={}, exponents<={}, p,q<={}, seed={})\n",
        report.suite,
        report.config.max_weight,
        report.config.param_bound,
        report.config.pq_bound,
        report.config.seed
    ));
    for r in &report.records {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        };
        out.push_str(&format!(
            "{status:8} {}  [{}]  {}\n",
            r.id, r.params, r.detail
        ));
        if r.status != Status::Pass {
            out.push_str(&format!("         identity: {}\n", r.anchor));
        }
    }
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} finding\n",
        report.summary.pass, report.summary.fail, report.summary.finding
    ));
    out
}

pub fn render_json(report: &VerdictReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn render_csv(report: &VerdictReport) -> String {
    let mut out = String::from("suite,id,anchor,params,status,detail\n");
    let esc = |s: &str| {
        let mut q = String::from("\"");
        q.push_str(&s.replace('"', "\"\""));
        q.push('"');
        q
    };
    for r in &report.records {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            esc(&report.suite),
            esc(&r.id),
            esc(&r.anchor),
            esc(&r.params),
            status,
            esc(&r.detail)
        ));
    }
    out
}

/// LaTeX rendering of the verified identity tables, for side-by-side
/// comparison with their sources.
pub fn render_latex(report: &VerdictReport) -> String {
    let esc = |s: &str| {
        s.replace('_', "\\_")
            .replace('^', "\\^{}")
            .replace('&', "\\&")
    };
    let mut out = String::new();
    out.push_str("\\begin{longtable}{l l l}\n");
    out.push_str(&format!(
        "\\multicolumn{{3}}{{l}}{{\\texttt{{{}}} suite}}\\\\\n\\hline\n",
        esc(&report.suite)
    ));
    out.push_str("identity & parameters & status\\\\\n\\hline\n");
    for r in &report.records {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "\\textbf{fail}",
            Status::Finding => "\\emph{finding}",
        };
        out.push_str(&format!(
            "\\texttt{{{}}} & {} & {}\\\\\n",
            esc(&r.id),
            esc(&r.params),
            status
        ));
    }
    out.push_str("\\hline\n\\end{longtable}\n");
    out
}

/// Structural validation of a serialized report against the published
/// schema (`docs/report-schema.json`): required keys, types, status values.
pub fn validate_report_value(value: &serde_json::Value) -> Result<(), String> {
    let obj = value.as_object().ok_or("report must be an object")?;
    for key in ["suite", "config", "records", "summary"] {
        if !obj.contains_key(key) {
            return Err(format!("missing key '{key}'"));
        }
    }
    if !obj["suite"].is_string() {
        return Err("'suite' must be a string".into());
    }
    let config = obj["config"]
        .as_object()
        .ok_or("'config' must be an object")?;
    for key in [
        "max_weight",
        "param_bound",
        "pq_bound",
        "seed",
        "solve_budget",
    ] {
        if !config.get(key).is_some_and(|v| v.is_number()) {
            return Err(format!("config key '{key}' must be a number"));
        }
    }
    let records = obj["records"]
        .as_array()
        .ok_or("'records' must be an array")?;
    for r in records {
        let r = r.as_object().ok_or("record must be an object")?;
        for key in ["id", "anchor", "params", "status", "detail"] {
            if !r.get(key).is_some_and(|v| v.is_string()) {
                return Err(format!("record key '{key}' must be a string"));
            }
        }
        let status = r["status"].as_str().unwrap();
        if !["PASS", "FAIL", "FINDING"].contains(&status) {
            return Err(format!("invalid status '{status}'"));
        }
    }
    let summary = obj["summary"]
        .as_object()
        .ok_or("'summary' must be an object")?;
    for key in ["pass", "fail", "finding"] {
        if !summary.get(key).is_some_and(|v| v.is_number()) {
            return Err(format!("summary key '{key}' must be a number"));
        }
    }
    Ok(())
}
