//! Homology and cohomology dimension and span suites: vanishing in the
//! predicted degrees, and exact spans by the named families elsewhere.

use rayon::prelude::*;

use super::{Config, Record};
use crate::exactla::SparseVec;
use crate::homology::{cohomology_space, homology_space};
use crate::koszul::{chain_diff, chain_to_vec, cochain_diff, cochain_to_vec};
use crate::paperdata::{instantiate, labels_at, ClassDegree};

/// Spans for one homological degree and weight: every named class is a
/// cycle, the set is independent modulo boundaries, and it exhausts the
/// computed dimension.
fn span_record(suite: &str, degree: i8, weight: i64, _config: &Config) -> Record {
    let id = format!("{suite}/span/deg{degree}/w={weight:+03}");
    let anchor = match degree {
        0 => "HH_0 basis: zeta0, alpha0, beta0, gamma0, delta0, ebar0".to_string(),
        1 => "HH_1 basis: alpha1 ... theta1".to_string(),
        -1 => "HH^-1 basis: A-1 ... K-1".to_string(),
        -2 => "HH^-2 basis: A-2, B-2".to_string(),
        -4 => "HH^-4 basis: A-4 ... H-4".to_string(),
        _ => unreachable!(),
    };
    let params = format!("weight {weight}");
    let cd = ClassDegree::from_degree(degree).unwrap();
    let labels = labels_at(cd, weight);
    let mut vectors: Vec<SparseVec> = Vec::with_capacity(labels.len());
    let mut failures = Vec::new();
    let slice;
    if degree >= 0 {
        slice = homology_space(degree as u8, weight as u32);
        for l in &labels {
            let c = instantiate(l).unwrap().chain();
            if c.degree >= 1 && !chain_diff(&c).is_zero() {
                failures.push(format!("{l} is not a cycle"));
            }
            vectors.push(chain_to_vec(&c, weight as u32));
        }
    } else {
        slice = cohomology_space((-degree) as u8, weight);
        for l in &labels {
            let f = instantiate(l).unwrap().cochain();
            if !cochain_diff(&f).is_zero() {
                failures.push(format!("{l} is not a cocycle"));
            }
            vectors.push(cochain_to_vec(&f, weight));
        }
    }
    // independence modulo boundaries and exact span
    let rank_with = slice.boundaries.dim_with(&vectors);
    let independent = rank_with == slice.boundaries.dim() + labels.len();
    let spanning = slice.dim == labels.len();
    if !independent {
        failures.push(format!(
            "classes dependent modulo boundaries: rank {} vs {} + {}",
            rank_with,
            slice.boundaries.dim(),
            labels.len()
        ));
    }
    if !spanning {
        failures.push(format!(
            "computed dimension {} but {} named classes",
            slice.dim,
            labels.len()
        ));
    }
    if failures.is_empty() {
        Record::pass(
            id,
            anchor,
            params,
            format!("dimension {} = named classes", slice.dim),
        )
    } else {
        Record::fail(id, anchor, params, failures.join("; "))
    }
}

/// Criterion: HH_n = 0 for n = 2, 3, 4 at w <= W; exact spans in degrees 0
/// and 1.
pub fn homology(config: &Config) -> Vec<Record> {
    let w_max = config.max_weight;
    let mut jobs: Vec<Box<dyn Fn() -> Record + Send + Sync>> = Vec::new();
    for n in 2u8..=4 {
        for w in 0..=w_max {
            jobs.push(Box::new(move || {
                let dim = homology_space(n, w).dim;
                let id = format!("homology/vanish/deg{n}/w={w:02}");
                let anchor = "HH_n = 0 for n = 2, 3, 4";
                if dim == 0 {
                    Record::pass(
                        id,
                        anchor,
                        format!("n={n}, w={w}"),
                        "dimension 0".to_string(),
                    )
                } else {
                    Record::fail(
                        id,
                        anchor,
                        format!("n={n}, w={w}"),
                        format!("dimension {dim}"),
                    )
                }
            }));
        }
    }
    let config2 = config.clone();
    for w in 0..=w_max {
        let c = config2.clone();
        jobs.push(Box::new(move || {
            span_record("homology", 0, i64::from(w), &c)
        }));
        let c = config2.clone();
        jobs.push(Box::new(move || {
            span_record("homology", 1, i64::from(w), &c)
        }));
    }
    let mut records: Vec<Record> = jobs.par_iter().map(|j| j()).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// Criterion: HH^0 has total dimension 1, HH^-3 vanishes, and exact spans
/// in degrees -1, -2, -4.
pub fn cohomology(config: &Config) -> Vec<Record> {
    let w_max = config.max_weight as i64;
    let mut jobs: Vec<Box<dyn Fn() -> Record + Send + Sync>> = Vec::new();
    for w in 0..=w_max {
        jobs.push(Box::new(move || {
            let dim = cohomology_space(0, w).dim;
            let want = usize::from(w == 0);
            let id = format!("cohomology/hh0/w={w:02}");
            let anchor = "HH^0 = k, concentrated in weight 0";
            if dim == want {
                Record::pass(id, anchor, format!("w={w}"), format!("dimension {dim}"))
            } else {
                Record::fail(
                    id,
                    anchor,
                    format!("w={w}"),
                    format!("dimension {dim}, expected {want}"),
                )
            }
        }));
    }
    for w in -3..=w_max {
        jobs.push(Box::new(move || {
            let dim = cohomology_space(3, w).dim;
            let id = format!("cohomology/vanish/deg-3/w={w:+03}");
            let anchor = "HH^-3 = 0";
            if dim == 0 {
                Record::pass(id, anchor, format!("w={w}"), "dimension 0".to_string())
            } else {
                Record::fail(id, anchor, format!("w={w}"), format!("dimension {dim}"))
            }
        }));
    }
    let config2 = config.clone();
    for w in 0..=w_max {
        let c = config2.clone();
        jobs.push(Box::new(move || span_record("cohomology", -1, w, &c)));
    }
    for w in -2..=w_max {
        let c = config2.clone();
        jobs.push(Box::new(move || span_record("cohomology", -2, w, &c)));
    }
    for w in -4..=w_max {
        let c = config2.clone();
        jobs.push(Box::new(move || span_record("cohomology", -4, w, &c)));
    }
    let mut records: Vec<Record> = jobs.par_iter().map(|j| j()).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}
