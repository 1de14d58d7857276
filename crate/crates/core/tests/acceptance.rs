//! Acceptance suite: every exit criterion, executed at its stated bounds,
//! one pass/fail line per criterion.
//!
//! The verification work is shared across criteria through a lazily
//! initialized run at the default configuration (W = 10, exponents <= 3,
//! p,q <= 2, Connes rows at exponents <= 4).

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ttcalc::verify::{run_suite, Config, Record, Status, VerdictReport};

struct SharedRun {
    reports: HashMap<&'static str, VerdictReport>,
    rewriting_time: Duration,
    total_time: Duration,
}

fn shared() -> &'static SharedRun {
    static RUN: OnceLock<SharedRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let config = Config::default();
        let mut reports = HashMap::new();
        let t0 = Instant::now();
        let mut rewriting_time = Duration::ZERO;
        for suite in ttcalc::verify::SUITE_NAMES {
            let t = Instant::now();
            let report = run_suite(suite, &config).expect("known suite");
            if suite == "rewriting" {
                rewriting_time = t.elapsed();
            }
            reports.insert(suite, report);
        }
        SharedRun {
            reports,
            rewriting_time,
            total_time: t0.elapsed(),
        }
    })
}

fn failures<'a>(records: &'a [Record], prefix: &str) -> Vec<&'a Record> {
    records
        .iter()
        .filter(|r| r.id.starts_with(prefix) && r.status != Status::Pass)
        .collect()
}

fn criterion(number: u8, description: &str, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {number:2}: {verdict}  {description}  [{detail}]");
    assert!(ok, "criterion {number} failed: {detail}");
}

#[test]
fn criterion_01_rewriting_soundness() {
    let run = shared();
    let report = &run.reports["rewriting"];
    let bad = failures(&report.records, "rewriting/");
    let in_time = run.rewriting_time <= Duration::from_secs(10);
    criterion(
        1,
        "strategy agreement, idempotence and multiplicativity of reduction on 1000 random words",
        bad.is_empty() && in_time,
        format!("{} records, {:?}", report.records.len(), run.rewriting_time),
    );
}

#[test]
fn criterion_02_dimensions_three_ways() {
    let report = &shared().reports["dims"];
    let bad = failures(&report.records, "dims/");
    criterion(
        2,
        "dim A_w agrees across three independent counts for w <= 12, pinned to 1, 3, 6, 11",
        bad.is_empty(),
        format!("{} weights", report.records.len()),
    );
}

#[test]
fn criterion_03_differentials_square_to_zero() {
    let report = &shared().reports["complexes"];
    let bad = failures(&report.records, "complexes/");
    criterion(
        3,
        "d . d = 0 for the resolution, chain and cochain complexes at every weight <= 10",
        bad.is_empty(),
        format!("{} weight components", report.records.len()),
    );
}

#[test]
fn criterion_04_one_sided_kernel_identities() {
    let report = &shared().reports["koszulness"];
    let bad = failures(&report.records, "koszulness/");
    criterion(
        4,
        "the four multiplication-kernel identities hold exactly at every weight <= 10",
        bad.is_empty(),
        format!("{} records", report.records.len()),
    );
}

#[test]
fn criterion_05_vanishing_degrees() {
    let run = shared();
    let mut bad = failures(&run.reports["homology"].records, "homology/vanish/");
    bad.extend(failures(
        &run.reports["cohomology"].records,
        "cohomology/vanish/",
    ));
    bad.extend(failures(
        &run.reports["cohomology"].records,
        "cohomology/hh0/",
    ));
    let counted = run.reports["homology"]
        .records
        .iter()
        .filter(|r| r.id.starts_with("homology/vanish/"))
        .count()
        + run.reports["cohomology"]
            .records
            .iter()
            .filter(|r| !r.id.starts_with("cohomology/span/"))
            .count();
    criterion(
        5,
        "HH_2 = HH_3 = HH_4 = 0 and HH^-3 = 0 at w <= 10; HH^0 has total dimension 1",
        bad.is_empty(),
        format!("{counted} records"),
    );
}

#[test]
fn criterion_06_named_bases_span() {
    let run = shared();
    let mut bad = failures(&run.reports["homology"].records, "homology/span/");
    bad.extend(failures(
        &run.reports["cohomology"].records,
        "cohomology/span/",
    ));
    let counted = run.reports["homology"]
        .records
        .iter()
        .chain(run.reports["cohomology"].records.iter())
        .filter(|r| r.id.contains("/span/"))
        .count();
    criterion(
        6,
        "named families are cycles, independent modulo boundaries, and exactly span in degrees 0, 1, -1, -2, -4 at w <= 10",
        bad.is_empty(),
        format!("{counted} (degree, weight) slices"),
    );
}

#[test]
fn criterion_07_comparison_morphisms() {
    let report = &shared().reports["comparison"];
    let bad = failures(&report.records, "comparison/");
    criterion(
        7,
        "both comparison morphisms are chain maps at weight <= 10 and one retracts the other",
        bad.is_empty(),
        format!("{} records", report.records.len()),
    );
}

#[test]
fn criterion_08_appendix_images_verbatim() {
    let report = &shared().reports["appendix"];
    let bad = failures(&report.records, "appendix/");
    criterion(
        8,
        "all seven image lemmas reproduce verbatim at exponents <= 3, p <= 2",
        bad.is_empty(),
        format!("{} lemmas", report.records.len()),
    );
}

#[test]
fn criterion_09_cup_products_vanish() {
    let report = &shared().reports["cup"];
    let bad = failures(&report.records, "cup/");
    criterion(
        9,
        "every positive-codegree cup is a coboundary; unit cups are the identity",
        bad.is_empty(),
        format!("{} records", report.records.len()),
    );
}

#[test]
fn criterion_10_cap_table() {
    let report = &shared().reports["cap"];
    let bad = failures(&report.records, "cap/");
    criterion(
        10,
        "every cap-table identity holds as HH_0 class equality at exponents <= 3, p,q <= 2",
        bad.is_empty(),
        format!("{} family pairs", report.records.len()),
    );
}

#[test]
fn criterion_11_connes_table() {
    let report = &shared().reports["connes"];
    let bad = failures(&report.records, "connes/");
    criterion(
        11,
        "every Connes-differential row holds as HH_1 class equality at exponents <= 4",
        bad.is_empty(),
        format!("{} families", report.records.len()),
    );
}

#[test]
fn criterion_12_gerstenhaber_tables() {
    let report = &shared().reports["bracket"];
    let bad = failures(&report.records, "bracket/");
    // at least 50 identities across the family pairs, 10 Jacobi triples,
    // 5 compatibility pairs
    let sampled: usize = report
        .records
        .iter()
        .filter(|r| r.id.starts_with("bracket/") && r.detail.contains("identities"))
        .filter_map(|r| {
            r.detail
                .split_whitespace()
                .next()
                .and_then(|n| n.parse::<usize>().ok())
        })
        .sum();
    let jacobi = report
        .records
        .iter()
        .find(|r| r.id == "bracket/jacobi")
        .map(|r| r.params.clone())
        .unwrap_or_default();
    let jacobi_count: usize = jacobi
        .split_whitespace()
        .next()
        .and_then(|n| n.parse().ok())
        .unwrap_or(0);
    let compat = report
        .records
        .iter()
        .find(|r| r.id == "bracket/connes-cap-compatibility")
        .map(|r| (r.status == Status::Pass, r.params.clone(), r.detail.clone()))
        .unwrap_or((false, String::new(), String::new()));
    let compat_count: usize = compat
        .1
        .split_whitespace()
        .next()
        .and_then(|n| n.parse().ok())
        .unwrap_or(0);
    let ok = bad.is_empty() && sampled >= 50 && jacobi_count >= 10 && compat.0 && compat_count >= 5;
    criterion(
        12,
        "bracket tables, antisymmetry, Jacobi, and Connes-cap compatibility",
        ok,
        format!(
            "{sampled} table identities, {jacobi_count} Jacobi triples, compatibility {}",
            compat.2
        ),
    );
}

#[test]
fn criterion_13_determinism_and_time() {
    let run = shared();
    let config = Config::default();
    let in_time = run.total_time <= Duration::from_secs(300);
    // byte-determinism of the full report across two runs
    let t = Instant::now();
    let again = run_suite("all", &config).unwrap();
    let second_time = t.elapsed();
    let first = {
        // reassemble the shared run as the `all` report for comparison
        let mut records = Vec::new();
        for suite in ttcalc::verify::SUITE_NAMES {
            records.extend(run.reports[suite].records.clone());
        }
        let mut sorted = records.clone();
        sorted.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));
        sorted
    };
    let first_json = serde_json::to_string(&first).unwrap();
    let again_json = serde_json::to_string(&again.records).unwrap();
    let deterministic = first_json == again_json;
    // the serialized report conforms to the published schema
    let value: serde_json::Value =
        serde_json::from_str(&ttcalc::verify::render_json(&again)).unwrap();
    let schema_ok = ttcalc::verify::validate_report_value(&value).is_ok();
    criterion(
        13,
        "full verification is byte-deterministic, schema-valid, and completes within 5 minutes",
        in_time && deterministic && schema_ok,
        format!(
            "first run {:?}, second run {:?}, deterministic: {deterministic}, schema: {schema_ok}",
            run.total_time, second_time
        ),
    );
}
