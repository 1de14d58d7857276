//! Verification suites: each closed-form identity and structural property
//! is executed at configurable bounds and reported as a machine-readable
//! verdict record.

mod basic;
mod compare;
mod emit;
mod ops;
mod spaces;

pub use emit::{render_csv, render_json, render_latex, render_text, validate_report_value};

use serde::Serialize;

/// Bounds every suite runs at; reports embed the full configuration so runs
/// are reproducible from flags alone.
#[derive(Debug, Clone, Serialize)]
pub struct Config {
    /// Weight bound W for the per-weight sweeps.
    pub max_weight: u32,
    /// Bound on each family exponent when instantiating classes.
    pub param_bound: i64,
    /// Bound on the block counts p, q.
    pub pq_bound: usize,
    /// Seed for the randomized rewriting checks.
    pub seed: u64,
    /// Ambient-dimension budget for linear solves in class-equality tests.
    pub solve_budget: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            max_weight: 10,
            param_bound: 3,
            pq_bound: 2,
            seed: 2024,
            solve_budget: crate::homology::DEFAULT_SOLVE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

/// One verified identity (or aggregated identity family).
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    /// Stable identifier, `suite/...` namespaced.
    pub id: String,
    /// The closed-form identity or property this record checks, written out.
    pub anchor: String,
    /// Parameter instantiation summary.
    pub params: String,
    pub status: Status,
    /// Witness payload: counts on success, both sides on disagreement.
    pub detail: String,
}

impl Record {
    pub fn pass(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        detail: impl Into<String>,
    ) -> Record {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        detail: impl Into<String>,
    ) -> Record {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn finding(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        detail: impl Into<String>,
    ) -> Record {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            status: Status::Finding,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub suite: String,
    pub config: Config,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerdictReport {
    fn assemble(suite: &str, config: &Config, mut records: Vec<Record>) -> VerdictReport {
        // order-independent assembly: suites may fan out in parallel
        records.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));
        let summary = Summary {
            pass: records.iter().filter(|r| r.status == Status::Pass).count(),
            fail: records.iter().filter(|r| r.status == Status::Fail).count(),
            finding: records
                .iter()
                .filter(|r| r.status == Status::Finding)
                .count(),
        };
        VerdictReport {
            suite: suite.to_string(),
            config: config.clone(),
            records,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Suite names accepted by [`run_suite`], in execution order of `all`.
pub const SUITE_NAMES: [&str; 12] = [
    "rewriting",
    "dims",
    "complexes",
    "koszulness",
    "homology",
    "cohomology",
    "comparison",
    "appendix",
    "cup",
    "cap",
    "connes",
    "bracket",
];

/// Run one suite (or `all`) and assemble its report.
pub fn run_suite(name: &str, config: &Config) -> Option<VerdictReport> {
    let records = match name {
        "rewriting" => basic::rewriting(config),
        "dims" => basic::dims(config),
        "complexes" => basic::complexes(config),
        "koszulness" => basic::koszulness(config),
        "homology" => spaces::homology(config),
        "cohomology" => spaces::cohomology(config),
        "comparison" => compare::comparison(config),
        "appendix" => ops::appendix(config),
        "cup" => ops::cup(config),
        "cap" => ops::cap(config),
        "connes" => ops::connes(config),
        "bracket" => ops::bracket(config),
        "all" => {
            let mut all = Vec::new();
            for suite in SUITE_NAMES {
                all.extend(run_suite(suite, config)?.records);
            }
            all
        }
        _ => return None,
    };
    Some(VerdictReport::assemble(name, config, records))
}
