//! Rewriting, dimension and complex-structure suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Config, Record};
use crate::exactla::{RatMatrix, SparseVec};
use crate::freealg::{
    count_by_rewriting, count_by_types, multiply, normal_form, weight_basis, words_of_weight,
    FreePoly, Letter, NormalPoly, Scalar, Word,
};
use crate::koszul::{
    augmentation, chain_diff, cochain_diff, resolution_diff, BimodElem, KoszulChain, KoszulCochain,
    KoszulGen, MAX_DEGREE, V_DIMS,
};

fn random_word(rng: &mut impl Rng, max_weight: u32) -> Word {
    let len = rng.gen_range(0..=max_weight);
    let mut w = Word::one();
    for _ in 0..len {
        w.push(Letter::ALL[rng.gen_range(0..3)], 1);
    }
    w
}

/// Criterion: two reduction strategies agree on 1000 random words, reduction
/// is idempotent, and reduction is compatible with concatenation.
pub fn rewriting(config: &Config) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut records = Vec::new();

    let mut confluent = 0usize;
    let mut idempotent = 0usize;
    let mut bad = Vec::new();
    for _ in 0..1000 {
        let w = random_word(&mut rng, 12);
        let p = FreePoly::monomial(w.clone(), Scalar::from_integer(1.into()));
        let left = p.reduce_with_strategy(false);
        let right = p.reduce_with_strategy(true);
        let worklist = normal_form(&p);
        if left == right && left == worklist {
            confluent += 1;
        } else {
            bad.push(w.to_string());
        }
        let again = normal_form(&left.to_free());
        if again == left {
            idempotent += 1;
        } else {
            bad.push(format!("nf not idempotent at {w}"));
        }
    }
    records.push(if bad.is_empty() {
        Record::pass(
            "rewriting/confluence",
            "leftmost and rightmost reduction strategies agree with worklist reduction",
            "1000 random words, weight <= 12",
            format!("{confluent} words agree"),
        )
    } else {
        Record::fail(
            "rewriting/confluence",
            "leftmost and rightmost reduction strategies agree with worklist reduction",
            "1000 random words, weight <= 12",
            bad.join("; "),
        )
    });
    records.push(Record::pass(
        "rewriting/idempotence",
        "normal_form . normal_form = normal_form",
        "1000 random words, weight <= 12",
        format!("{idempotent} words idempotent"),
    ));

    let mut compatible = 0usize;
    let mut bad = Vec::new();
    for _ in 0..1000 {
        let u = random_word(&mut rng, 6);
        let v = random_word(&mut rng, 6);
        let whole = crate::freealg::normal_form_word(&u.concat(&v));
        let parts = multiply(
            &crate::freealg::normal_form_word(&u),
            &crate::freealg::normal_form_word(&v),
        );
        if whole == parts {
            compatible += 1;
        } else {
            bad.push(format!("{u} . {v}"));
        }
    }
    records.push(if bad.is_empty() {
        Record::pass(
            "rewriting/compatibility",
            "normal_form(u v) = normal_form(u) * normal_form(v)",
            "1000 random pairs, weight <= 6 each",
            format!("{compatible} pairs agree"),
        )
    } else {
        Record::fail(
            "rewriting/compatibility",
            "normal_form(u v) = normal_form(u) * normal_form(v)",
            "1000 random pairs, weight <= 6 each",
            bad.join("; "),
        )
    });
    records
}

/// Criterion: dim A_w computed three independent ways for w <= 12, pinned to
/// 1, 3, 6, 11 at the start.
pub fn dims(_config: &Config) -> Vec<Record> {
    let expected_low = [1u64, 3, 6, 11];
    (0..=12u32)
        .into_par_iter()
        .map(|w| {
            let by_generation = words_of_weight(w).len() as u64;
            let by_types = count_by_types(w);
            let by_rewriting = count_by_rewriting(w);
            let pinned_ok = w >= 4 || by_generation == expected_low[w as usize];
            let detail = format!(
                "factor-avoidance {by_generation}, type enumeration {by_types}, rewriting closure {by_rewriting}"
            );
            if by_generation == by_types && by_types == by_rewriting && pinned_ok {
                Record::pass(
                    format!("dims/w={w:02}"),
                    "dim A_w agrees across type enumeration, factor-avoidance generation and rewriting closure",
                    format!("w={w}"),
                    detail,
                )
            } else {
                Record::fail(
                    format!("dims/w={w:02}"),
                    "dim A_w agrees across type enumeration, factor-avoidance generation and rewriting closure",
                    format!("w={w}"),
                    detail,
                )
            }
        })
        .collect()
}

/// Criterion: d . d = 0 for the bimodule, chain and cochain complexes at
/// every degree and weight <= W.
pub fn complexes(config: &Config) -> Vec<Record> {
    let w_max = config.max_weight;
    let mut records: Vec<Record> = (0..=w_max)
        .into_par_iter()
        .map(|w| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            // chain complex on basis elements
            for n in 2..=MAX_DEGREE {
                if w < u32::from(n) {
                    continue;
                }
                for word in &weight_basis(w - u32::from(n)).words {
                    for g in KoszulGen::all(n) {
                        let c = KoszulChain::from_poly(&NormalPoly::word(word.clone()), g);
                        if !chain_diff(&chain_diff(&c)).is_zero() {
                            failures.push(format!("chain d.d != 0 at {word} (x) {g}"));
                        }
                        checked += 1;
                    }
                }
            }
            // cochain complex on basis cochains at internal weight w - offset
            for n in 0..MAX_DEGREE - 1 {
                let val_weight = w; // value weight; internal weight w - n
                for word in &weight_basis(val_weight).words {
                    for g in 0..V_DIMS[n as usize] as u8 {
                        let mut f = KoszulCochain::zero(n);
                        f.set_value(g, NormalPoly::word(word.clone()));
                        if !cochain_diff(&cochain_diff(&f)).is_zero() {
                            failures.push(format!("cochain d.d != 0 at gen {g} -> {word}"));
                        }
                        checked += 1;
                    }
                }
            }
            // bimodule resolution on basis triples of total weight w
            for n in 2..=MAX_DEGREE {
                if w < u32::from(n) {
                    continue;
                }
                let rem = w - u32::from(n);
                for lw in 0..=rem {
                    for l in &weight_basis(lw).words {
                        for r in &weight_basis(rem - lw).words {
                            for g in 0..V_DIMS[n as usize] as u8 {
                                let mut e = BimodElem::zero(n);
                                e.add_words(
                                    l.clone(),
                                    g,
                                    r.clone(),
                                    Scalar::from_integer(1.into()),
                                );
                                if !resolution_diff(&resolution_diff(&e)).is_zero() {
                                    failures
                                        .push(format!("resolution d.d != 0 at {l}(x){g}(x){r}"));
                                }
                                checked += 1;
                            }
                        }
                    }
                }
            }
            // augmentation kills d1 at this weight
            if w >= 1 {
                let rem = w - 1;
                for lw in 0..=rem {
                    for l in &weight_basis(lw).words {
                        for r in &weight_basis(rem - lw).words {
                            for g in 0..3u8 {
                                let mut e = BimodElem::zero(1);
                                e.add_words(
                                    l.clone(),
                                    g,
                                    r.clone(),
                                    Scalar::from_integer(1.into()),
                                );
                                if !augmentation(&resolution_diff(&e)).is_zero() {
                                    failures.push(format!("mu . d1 != 0 at {l}(x)gen{g}(x){r}"));
                                }
                                checked += 1;
                            }
                        }
                    }
                }
            }
            if failures.is_empty() {
                Record::pass(
                    format!("complexes/w={w:02}"),
                    "d . d = 0 for the resolution, chain and cochain complexes",
                    format!("w={w}"),
                    format!("{checked} basis elements"),
                )
            } else {
                Record::fail(
                    format!("complexes/w={w:02}"),
                    "d . d = 0 for the resolution, chain and cochain complexes",
                    format!("w={w}"),
                    failures.join("; "),
                )
            }
        })
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// Matrix of left/right multiplication by a fixed element `A_w -> A_{w+k}`.
fn mult_matrix(w: u32, by: &NormalPoly, left: bool) -> RatMatrix {
    let k = by.homogeneous_weight().expect("homogeneous multiplier");
    let src = weight_basis(w);
    let dst = weight_basis(w + k);
    let mut cols: Vec<SparseVec> = Vec::with_capacity(src.dim());
    for u in &src.words {
        let prod = if left {
            multiply(by, &NormalPoly::word(u.clone()))
        } else {
            multiply(&NormalPoly::word(u.clone()), by)
        };
        let mut col: SparseVec = prod
            .terms()
            .map(|(v, c)| (dst.position(v), c.clone()))
            .collect();
        col.sort_by_key(|&(i, _)| i);
        cols.push(col);
    }
    RatMatrix::from_sparse_rows(dst.dim(), cols).transpose()
}

/// Criterion: the four exactness identities of the one-sided Koszul
/// complexes, stated as kernel identities on each A_w.
pub fn koszulness(config: &Config) -> Vec<Record> {
    let xpy = crate::koszul::xpy();
    let x = NormalPoly::word(Word::letter(Letter::X));
    let y = NormalPoly::word(Word::letter(Letter::Y));
    let z = NormalPoly::word(Word::letter(Letter::Z));
    let mut records: Vec<Record> = (0..=config.max_weight)
        .into_par_iter()
        .flat_map(|w| {
            let mut out = Vec::new();
            // (i) right multiplication by (x+y) is injective
            let m = mult_matrix(w, &xpy, false);
            let dim = m.kernel_basis().dim();
            out.push(if dim == 0 {
                Record::pass(
                    format!("koszulness/right-x+y/w={w:02}"),
                    "a (x+y) = 0 implies a = 0",
                    format!("w={w}"),
                    "kernel dimension 0".to_string(),
                )
            } else {
                Record::fail(
                    format!("koszulness/right-x+y/w={w:02}"),
                    "a (x+y) = 0 implies a = 0",
                    format!("w={w}"),
                    format!("kernel dimension {dim}"),
                )
            });
            // (ii) left multiplication by y is injective
            let m = mult_matrix(w, &y, true);
            let dim = m.kernel_basis().dim();
            out.push(if dim == 0 {
                Record::pass(
                    format!("koszulness/left-y/w={w:02}"),
                    "y a = 0 implies a = 0",
                    format!("w={w}"),
                    "kernel dimension 0".to_string(),
                )
            } else {
                Record::fail(
                    format!("koszulness/left-y/w={w:02}"),
                    "y a = 0 implies a = 0",
                    format!("w={w}"),
                    format!("kernel dimension {dim}"),
                )
            });
            // (iii) ker(right x) = A_{w-1} (x+y)
            let ker = mult_matrix(w, &x, false).kernel_basis();
            let img = if w >= 1 {
                mult_matrix(w - 1, &xpy, false).image_basis()
            } else {
                crate::exactla::RatMatrix::zero(weight_basis(w).dim(), 0).image_basis()
            };
            let contained = ker.vectors().iter().all(|v| img.contains(v));
            let ok = contained && ker.dim() == img.dim();
            out.push(if ok {
                Record::pass(
                    format!("koszulness/right-x/w={w:02}"),
                    "a x = 0 iff a = a' (x+y)",
                    format!("w={w}"),
                    format!("kernel = image, dimension {}", ker.dim()),
                )
            } else {
                Record::fail(
                    format!("koszulness/right-x/w={w:02}"),
                    "a x = 0 iff a = a' (x+y)",
                    format!("w={w}"),
                    format!(
                        "kernel dim {}, image dim {}, contained: {contained}",
                        ker.dim(),
                        img.dim()
                    ),
                )
            });
            // (iv) ker(left x) = z A_{w-1}
            let ker = mult_matrix(w, &x, true).kernel_basis();
            let img = if w >= 1 {
                mult_matrix(w - 1, &z, true).image_basis()
            } else {
                crate::exactla::RatMatrix::zero(weight_basis(w).dim(), 0).image_basis()
            };
            let contained = ker.vectors().iter().all(|v| img.contains(v));
            let ok = contained && ker.dim() == img.dim();
            out.push(if ok {
                Record::pass(
                    format!("koszulness/left-x/w={w:02}"),
                    "x a = 0 iff a = z a'",
                    format!("w={w}"),
                    format!("kernel = image, dimension {}", ker.dim()),
                )
            } else {
                Record::fail(
                    format!("koszulness/left-x/w={w:02}"),
                    "x a = 0 iff a = z a'",
                    format!("w={w}"),
                    format!(
                        "kernel dim {}, image dim {}, contained: {contained}",
                        ker.dim(),
                        img.dim()
                    ),
                )
            });
            out
        })
        .collect();
    // spot-check the exactla contract once per run: kernel vectors solve
    // M v = 0 on the nose
    let m = mult_matrix(3, &x, false);
    for v in m.kernel_basis().vectors() {
        assert!(m.mul_vec(v).is_empty());
    }
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}
