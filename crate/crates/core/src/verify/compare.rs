//! Comparison-morphism suite: the maps between the Koszul and bar
//! resolutions are chain maps, and one retracts the other.

use rayon::prelude::*;

use super::{Config, Record};
use crate::barbridge::{bar_diff, iota, iota_elem, pi, BarElem};
use crate::freealg::{weight_basis, Scalar, Word};
use crate::koszul::{resolution_diff, BimodElem, KoszulGen, MAX_DEGREE};

/// All reduced bar tensors `1 (x) u_1 (x) ... (x) u_n (x) 1` of the given
/// arity and total interior weight.
fn tensors_of(arity: usize, weight: u32) -> Vec<Vec<Word>> {
    fn go(parts: usize, weight: u32, acc: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if parts == 0 {
            if weight == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let reserve = (parts as u32) - 1;
        for w in 1..=weight.saturating_sub(reserve) {
            for word in &weight_basis(w).words {
                acc.push(word.clone());
                go(parts - 1, weight - w, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(arity, weight, &mut Vec::new(), &mut out);
    out
}

pub fn comparison(config: &Config) -> Vec<Record> {
    let mut records = Vec::new();

    // retraction pi . iota = id on every generator
    let mut bad = Vec::new();
    for deg in 0..=MAX_DEGREE {
        for g in KoszulGen::all(deg) {
            if pi(&iota(g)) != BimodElem::generator(g) {
                bad.push(g.to_string());
            }
        }
    }
    records.push(if bad.is_empty() {
        Record::pass(
            "comparison/retraction",
            "pi . iota = id on K_0 ... K_4",
            "all 10 generators",
            "identity on every generator".to_string(),
        )
    } else {
        Record::fail(
            "comparison/retraction",
            "pi . iota = id on K_0 ... K_4",
            "all 10 generators",
            format!("fails at {}", bad.join(", ")),
        )
    });

    // iota is a chain map; bilinearity reduces this to generators, checked
    // here with outer coefficients up to weight 2 on both sides as well
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for deg in 1..=MAX_DEGREE {
        for g in KoszulGen::all(deg) {
            for lw in 0..=2u32 {
                for rw in 0..=2u32 {
                    for l in &weight_basis(lw).words {
                        for r in &weight_basis(rw).words {
                            let mut e = BimodElem::zero(deg);
                            e.add_words(
                                l.clone(),
                                g.index,
                                r.clone(),
                                Scalar::from_integer(1.into()),
                            );
                            let lhs = bar_diff(&iota_elem(&e));
                            let rhs = iota_elem(&resolution_diff(&e));
                            checked += 1;
                            if lhs != rhs {
                                bad.push(format!("{l} (x) {g} (x) {r}"));
                            }
                        }
                    }
                }
            }
        }
    }
    records.push(if bad.is_empty() {
        Record::pass(
            "comparison/iota-chain-map",
            "d . iota = iota . d",
            "all generators, outer coefficients of weight <= 2",
            format!("{checked} elements"),
        )
    } else {
        Record::fail(
            "comparison/iota-chain-map",
            "d . iota = iota . d",
            "all generators, outer coefficients of weight <= 2",
            bad.join("; "),
        )
    });

    // pi is a chain map on every reduced tensor of weight <= W, arity <= 5
    let w_max = config.max_weight;
    let arity_records: Vec<Record> = (1..=5usize)
        .into_par_iter()
        .map(|arity| {
            let counts: Vec<(usize, Vec<String>)> = (arity as u32..=w_max)
                .into_par_iter()
                .map(|w| {
                    let mut bad = Vec::new();
                    let mut count = 0usize;
                    for interior in tensors_of(arity, w) {
                        let e = BarElem::tensor(interior.clone());
                        let lhs = pi(&bar_diff(&e));
                        let rhs = if arity <= 4 {
                            resolution_diff(&pi(&e))
                        } else {
                            // K_5 = 0: pi of the differential must vanish
                            BimodElem::zero(4)
                        };
                        count += 1;
                        if lhs != rhs {
                            bad.push(format!("{interior:?}"));
                            if bad.len() > 4 {
                                break;
                            }
                        }
                    }
                    (count, bad)
                })
                .collect();
            let total: usize = counts.iter().map(|(c, _)| c).sum();
            let bad: Vec<String> = counts.into_iter().flat_map(|(_, b)| b).collect();
            if bad.is_empty() {
                Record::pass(
                    format!("comparison/pi-chain-map/arity={arity}"),
                    "d . pi = pi . d on reduced tensors",
                    format!("arity {arity}, weight <= {w_max}"),
                    format!("{total} tensors"),
                )
            } else {
                Record::fail(
                    format!("comparison/pi-chain-map/arity={arity}"),
                    "d . pi = pi . d on reduced tensors",
                    format!("arity {arity}, weight <= {w_max}"),
                    bad.join("; "),
                )
            }
        })
        .collect();
    records.extend(arity_records);
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}
