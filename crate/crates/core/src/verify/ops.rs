//! Operation-table suites: appendix images, cup vanishing, the cap and
//! Connes tables, and the Gerstenhaber bracket tables with their
//! compatibility identities.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Config, Record};
use crate::barbridge::bar_bracket_on_koszul;
use crate::calculus::{cap as cap_op, connes_b0, cup as cup_op, cup_with_unit_is_identity};
use crate::homology::{
    express_in_paper_basis, hh0_express, is_boundary_chain, is_boundary_cochain, BoundaryVerdict,
};
use crate::koszul::{chain_diff, cochain_diff, KoszulChain, KoszulCochain};
use crate::paperdata::{
    appendix_pairs, bracket_predicted, cap_predicted, combination_chain, combination_cochain,
    connes_predicted, instantiate, AppendixLemma, AppendixPair, ClassLabel, Family,
    FormalCombination, Instantiated, VanishReading,
};

/// Cartesian parameter tuples with entries in `1..=bound`.
fn bounded_tuples(arity: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * bound as usize);
        for t in &out {
            for v in 1..=bound {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Every label of one family with exponents `<= bound` and `p <= pq`.
fn family_instances(f: Family, bound: i64, pq: usize) -> Vec<ClassLabel> {
    use Family::*;
    let mut out = Vec::new();
    let block = |na_of_p: fn(usize) -> usize, f: Family, out: &mut Vec<ClassLabel>| {
        for p in 1..=pq {
            for ms in bounded_tuples(p, bound) {
                for ns in bounded_tuples(na_of_p(p), bound) {
                    let ms = ms.clone();
                    let l = ClassLabel::new(f, ns, ms).canonical();
                    if l.in_range() && !out.contains(&l) {
                        out.push(l);
                    }
                }
            }
        }
    };
    match f {
        Zeta0 | Alpha0 | Alpha1 | Beta1 | Delta1 | Zeta1 | Am1 | Am2 | Am4 => {
            out.push(ClassLabel::plain(f))
        }
        Beta0 | Gamma0 | Delta0 | Gamma1 | Epsilon1 | Eta1 | Bm1 | Em1 | Bm4 => {
            for n in 1..=bound {
                out.push(ClassLabel::with_ns(f, vec![n]));
            }
        }
        Cm1 => {
            for k in 2..=bound.max(2) {
                out.push(ClassLabel::with_ns(f, vec![k]));
            }
        }
        Dm1 => {
            for n in 3..=bound.max(3) {
                for i in 1..=(n - 2) {
                    out.push(ClassLabel::with_ns(f, vec![n, i]));
                }
            }
        }
        EBar0 | Theta1 | Gm1 | Em4 | Fm4 => block(|p| p, f, &mut out),
        Fm1 | Im1 | Jm1 | Cm4 | Dm4 => block(|p| p + 1, f, &mut out),
        Hm1 => block(|p| p + 2, f, &mut out),
        Km1 | Bm2 | Gm4 | Hm4 => block(|p| p - 1, f, &mut out),
    }
    out
}

const DEG1_FAMILIES: [Family; 11] = [
    Family::Am1,
    Family::Bm1,
    Family::Cm1,
    Family::Dm1,
    Family::Em1,
    Family::Fm1,
    Family::Gm1,
    Family::Hm1,
    Family::Im1,
    Family::Jm1,
    Family::Km1,
];

const H1_FAMILIES: [Family; 8] = [
    Family::Alpha1,
    Family::Beta1,
    Family::Gamma1,
    Family::Delta1,
    Family::Epsilon1,
    Family::Zeta1,
    Family::Eta1,
    Family::Theta1,
];

const H0_FAMILIES: [Family; 6] = [
    Family::Zeta0,
    Family::Alpha0,
    Family::Beta0,
    Family::Gamma0,
    Family::Delta0,
    Family::EBar0,
];

/// Criterion: every listed appendix image reproduces under the implemented
/// differential, verbatim.
pub fn appendix(config: &Config) -> Vec<Record> {
    AppendixLemma::ALL
        .into_par_iter()
        .map(|lemma| {
            let mut failures = Vec::new();
            let pairs = appendix_pairs(lemma, config.param_bound, config.pq_bound);
            let count = pairs.len();
            for (case, pair) in pairs {
                match pair {
                    AppendixPair::Chain(p) => {
                        let got = chain_diff(&p.input);
                        if got != p.stated {
                            failures.push(format!("{case}: computed {got}, stated {}", p.stated));
                        }
                    }
                    AppendixPair::Cochain(p) => {
                        let got = cochain_diff(&p.input);
                        if got != p.stated {
                            failures.push(format!("{case}: computed {got}, stated {}", p.stated));
                        }
                    }
                }
            }
            let id = format!("appendix/{}", lemma.name().replace('*', "s"));
            let anchor = format!(
                "hand-computed {} images on every monomial family",
                lemma.name()
            );
            let params = format!(
                "exponents <= {}, p <= {}",
                config.param_bound, config.pq_bound
            );
            if failures.is_empty() {
                Record::pass(id, anchor, params, format!("{count} rows verbatim"))
            } else {
                failures.truncate(6);
                Record::fail(id, anchor, params, failures.join("; "))
            }
        })
        .collect()
}

/// Class-level equality of a computed cochain against a predicted formal
/// combination; tries exact equality, then a coboundary witness.
fn cochain_class_matches(
    computed: &KoszulCochain,
    predicted: &FormalCombination,
    budget: usize,
) -> Result<(), String> {
    let inst = combination_cochain(predicted, computed.degree);
    let diff = computed.sub(&inst);
    if diff.is_zero() {
        return Ok(());
    }
    if diff.internal_weight().is_none() {
        return Err("sides have different weights".into());
    }
    if !cochain_diff(&diff).is_zero() {
        return Err("difference is not a cocycle".into());
    }
    match is_boundary_cochain(&diff, budget) {
        BoundaryVerdict::Boundary(_) => Ok(()),
        BoundaryVerdict::NotBoundary => Err("difference is a nonzero class".into()),
        BoundaryVerdict::Unknown => Err("difference undecided within solve budget".into()),
    }
}

/// Criterion: all positive-codegree cups vanish in cohomology; unit cups
/// act as the identity.
pub fn cup(config: &Config) -> Vec<Record> {
    let mut records = Vec::new();
    let deg1: Vec<(ClassLabel, KoszulCochain)> = DEG1_FAMILIES
        .iter()
        .flat_map(|&f| family_instances(f, config.param_bound, config.pq_bound))
        .map(|l| {
            let c = instantiate(&l).unwrap().cochain();
            (l, c)
        })
        .collect();

    // unit cups act as the identity
    let mut bad = Vec::new();
    for (l, c) in deg1.iter().take(50) {
        if !cup_with_unit_is_identity(c) {
            bad.push(l.to_string());
        }
    }
    let a2 = instantiate(&ClassLabel::plain(Family::Am2))
        .unwrap()
        .cochain();
    let a4 = instantiate(&ClassLabel::plain(Family::Am4))
        .unwrap()
        .cochain();
    if !cup_with_unit_is_identity(&a2) || !cup_with_unit_is_identity(&a4) {
        bad.push("degree -2/-4 unit cups".into());
    }
    records.push(if bad.is_empty() {
        Record::pass(
            "cup/unit-identity",
            "f u 1 = f = 1 u f",
            "sampled cochains of degrees -1, -2, -4",
            "identity on the nose".to_string(),
        )
    } else {
        Record::fail(
            "cup/unit-identity",
            "f u 1 = f = 1 u f",
            "sampled cochains of degrees -1, -2, -4",
            bad.join("; "),
        )
    });

    // group the (-1,-1) pairs by family pair so the sweep aggregates
    let by_family: Vec<((Family, Family), Record)> = DEG1_FAMILIES
        .par_iter()
        .flat_map(|&ff| {
            DEG1_FAMILIES.par_iter().map(move |&gf| (ff, gf))
        })
        .map(|(ff, gf)| {
            let fs: Vec<&(ClassLabel, KoszulCochain)> =
                deg1.iter().filter(|(l, _)| l.family == ff).collect();
            let gs: Vec<&(ClassLabel, KoszulCochain)> =
                deg1.iter().filter(|(l, _)| l.family == gf).collect();
            let mut zero_identically = 0usize;
            let mut coboundary = 0usize;
            let mut failures = Vec::new();
            for (fl, fc) in &fs {
                for (gl, gc) in &gs {
                    let c = cup_op(fc, gc);
                    if c.is_zero() {
                        zero_identically += 1;
                        continue;
                    }
                    match is_boundary_cochain(&c, config.solve_budget) {
                        BoundaryVerdict::Boundary(_) => coboundary += 1,
                        BoundaryVerdict::NotBoundary => {
                            failures.push(format!("{fl} u {gl} is a nonzero class"));
                        }
                        BoundaryVerdict::Unknown => {
                            failures.push(format!("{fl} u {gl} undecided within budget"));
                        }
                    }
                    if failures.len() > 4 {
                        break;
                    }
                }
            }
            let id = format!("cup/{}x{}", ff.name(), gf.name());
            let anchor = "every cup of positive-codegree classes is a coboundary";
            let params = format!(
                "exponents <= {}, p,q <= {}",
                config.param_bound, config.pq_bound
            );
            let record = if failures.is_empty() {
                Record::pass(
                    id,
                    anchor,
                    params,
                    format!("{zero_identically} vanish identically, {coboundary} are explicit coboundaries"),
                )
            } else {
                Record::fail(id, anchor, params, failures.join("; "))
            };
            ((ff, gf), record)
        })
        .collect();
    records.extend(by_family.into_iter().map(|(_, r)| r));

    // degree (-2,-2) cups into HH^-4
    let deg2: Vec<(ClassLabel, KoszulCochain)> = [Family::Am2, Family::Bm2]
        .iter()
        .flat_map(|&f| family_instances(f, config.param_bound, config.pq_bound))
        .map(|l| {
            let c = instantiate(&l).unwrap().cochain();
            (l, c)
        })
        .collect();
    let mut zero_identically = 0usize;
    let mut failures = Vec::new();
    for (fl, fc) in &deg2 {
        for (gl, gc) in &deg2 {
            let c = cup_op(fc, gc);
            if c.is_zero() {
                zero_identically += 1;
            } else {
                failures.push(format!("{fl} u {gl} nonzero at cochain level"));
            }
        }
    }
    records.push(if failures.is_empty() {
        Record::pass(
            "cup/deg-2-pairs",
            "cups of degree -2 classes vanish identically",
            format!(
                "exponents <= {}, p,q <= {}",
                config.param_bound, config.pq_bound
            ),
            format!("{zero_identically} pairs vanish"),
        )
    } else {
        Record::fail(
            "cup/deg-2-pairs",
            "cups of degree -2 classes vanish identically",
            format!(
                "exponents <= {}, p,q <= {}",
                config.param_bound, config.pq_bound
            ),
            failures.join("; "),
        )
    });
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// Module axiom `(f u g) cap z = f cap (g cap z)` on the instances where
/// the degrees give a nonzero operation (unit factors); for two
/// positive-codegree factors both sides vanish for degree reasons.
fn module_axiom_record(config: &Config) -> Record {
    let unit = KoszulCochain::unit();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for ff in DEG1_FAMILIES.iter().take(4) {
        for fl in family_instances(*ff, config.param_bound.min(2), 1) {
            let f = instantiate(&fl).unwrap().cochain();
            for zl in ["alpha1", "delta1", "zeta1", "epsilon1(2)", "theta1((1,1))"] {
                let z = instantiate(&ClassLabel::parse(zl).unwrap())
                    .unwrap()
                    .chain();
                // (f u 1) cap z = f cap (1 cap z) and (1 u f) cap z likewise
                let lhs = cap_op(&cup_op(&f, &unit), &z);
                let rhs = cap_op(&f, &cap_op(&unit, &z));
                checked += 1;
                if lhs != rhs {
                    failures.push(format!("({fl} u 1) cap {zl}"));
                }
                let lhs = cap_op(&cup_op(&unit, &f), &z);
                if lhs != rhs {
                    failures.push(format!("(1 u {fl}) cap {zl}"));
                }
            }
        }
    }
    let anchor = "(f u g) cap z = f cap (g cap z); for two degree -1 factors both sides vanish in negative homological degree";
    if failures.is_empty() {
        Record::pass(
            "cap/module-axiom",
            anchor,
            "unit-factor instances (other degree combinations vanish identically)",
            format!("{checked} instances exact"),
        )
    } else {
        Record::fail(
            "cap/module-axiom",
            anchor,
            "unit-factor instances",
            failures.join("; "),
        )
    }
}

/// Criterion: every cap-table identity holds as HH_0 class equality.
pub fn cap(config: &Config) -> Vec<Record> {
    let chains: Vec<(ClassLabel, KoszulChain)> = H1_FAMILIES
        .iter()
        .flat_map(|&f| family_instances(f, config.param_bound, config.pq_bound))
        .map(|l| {
            let c = instantiate(&l).unwrap().chain();
            (l, c)
        })
        .collect();
    let mut records = vec![module_axiom_record(config)];
    let table_records: Vec<Record> = DEG1_FAMILIES
        .par_iter()
        .flat_map(|&ff| H1_FAMILIES.par_iter().map(move |&zf| (ff, zf)))
        .map(|(ff, zf)| {
            let mut count = 0usize;
            let mut derived_rows = false;
            let mut failures = Vec::new();
            for fl in family_instances(ff, config.param_bound, config.pq_bound) {
                let fc = instantiate(&fl).unwrap().cochain();
                for (zl, zc) in chains.iter().filter(|(l, _)| l.family == zf) {
                    let Some((predicted, derived)) = cap_predicted(&fl, zl) else {
                        continue;
                    };
                    derived_rows |= derived;
                    let computed = hh0_express(&cap_op(&fc, zc).into_poly());
                    count += 1;
                    if computed != predicted {
                        failures.push(format!(
                            "{fl} cap {zl}: computed {computed}, table {predicted}"
                        ));
                        if failures.len() > 4 {
                            break;
                        }
                    }
                }
            }
            let id = format!("cap/{}x{}", ff.name(), zf.name());
            let anchor = "cap table rows for this family pair";
            let params = format!(
                "exponents <= {}, p,q <= {}{}",
                config.param_bound,
                config.pq_bound,
                if derived_rows {
                    "; includes derived single-block rows"
                } else {
                    ""
                }
            );
            if failures.is_empty() {
                Record::pass(id, anchor, params, format!("{count} identities"))
            } else {
                Record::fail(id, anchor, params, failures.join("; "))
            }
        })
        .collect();
    records.extend(table_records);
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// Criterion: every Connes-differential table row holds as HH_1 class
/// equality at exponents <= 4.
pub fn connes(config: &Config) -> Vec<Record> {
    let bound = config.param_bound.max(4);
    let mut records: Vec<Record> = H0_FAMILIES
        .par_iter()
        .map(|&f| {
            let mut count = 0usize;
            let mut failures = Vec::new();
            for l in family_instances(f, bound, config.pq_bound) {
                let a = instantiate(&l).unwrap().chain().into_poly();
                let computed = connes_b0(&a);
                let predicted = connes_predicted(&l).unwrap();
                let inst = combination_chain(&predicted, 1);
                count += 1;
                let diff = computed.sub(&inst);
                if diff.is_zero() {
                    continue;
                }
                match is_boundary_chain(&diff, config.solve_budget) {
                    BoundaryVerdict::Boundary(_) => {}
                    BoundaryVerdict::NotBoundary => {
                        failures.push(format!(
                            "b0({l}) differs from {predicted} by a nonzero class"
                        ));
                    }
                    BoundaryVerdict::Unknown => {
                        failures.push(format!("b0({l}) vs {predicted} undecided within budget"));
                    }
                }
            }
            let id = format!("connes/{}", f.name());
            let anchor = match f {
                Family::Zeta0 => "b0(zeta0) = 0",
                Family::Alpha0 => "b0(alpha0) = alpha1",
                Family::Beta0 => "b0(beta0(n)) = -(n+1) gamma1(n-1), b0(beta0(1)) = -2 beta1",
                Family::Gamma0 => "b0(gamma0(n)) = n epsilon1(n-1), b0(gamma0(1)) = delta1",
                Family::Delta0 => "b0(delta0(m)) = m eta1(m-1), b0(delta0(1)) = zeta1",
                Family::EBar0 => "b0(ebar0(n;m)) = theta1(n;m)",
                _ => unreachable!(),
            };
            let params = format!("exponents <= {bound}, p <= {}", config.pq_bound);
            if failures.is_empty() {
                Record::pass(id, anchor, params, format!("{count} identities"))
            } else {
                Record::fail(id, anchor, params, failures.join("; "))
            }
        })
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// The Gerstenhaber suite: table rows for every family pair, graded
/// antisymmetry, the Jacobi identity, and compatibility with the Connes
/// differential through the cap action.
pub fn bracket(config: &Config) -> Vec<Record> {
    let mut records = Vec::new();
    let weight_cap = i64::from(config.max_weight.min(9));
    let samples_per_pair = 4usize;

    // instance pools, smallest weights first for cheap sampling
    let mut pool: BTreeMap<Family, Vec<ClassLabel>> = BTreeMap::new();
    for f in DEG1_FAMILIES
        .iter()
        .chain([Family::Am2, Family::Bm2].iter())
        .chain(
            [
                Family::Am4,
                Family::Bm4,
                Family::Cm4,
                Family::Dm4,
                Family::Em4,
                Family::Fm4,
                Family::Gm4,
                Family::Hm4,
            ]
            .iter(),
        )
    {
        let mut v = family_instances(*f, config.param_bound, config.pq_bound);
        v.sort_by_key(|l| (l.weight(), l.clone()));
        pool.insert(*f, v);
    }

    // all ordered family pairs covered by the tables
    let mut pairs: Vec<(Family, Family)> = Vec::new();
    for &f in DEG1_FAMILIES.iter() {
        for &g in DEG1_FAMILIES.iter() {
            if f <= g {
                pairs.push((f, g));
            }
        }
    }
    for &f in [Family::Am2, Family::Bm2].iter() {
        for &g in DEG1_FAMILIES.iter() {
            pairs.push((f, g));
        }
    }
    for &f in [
        Family::Am4,
        Family::Bm4,
        Family::Cm4,
        Family::Dm4,
        Family::Em4,
        Family::Fm4,
        Family::Gm4,
        Family::Hm4,
    ]
    .iter()
    {
        for &g in DEG1_FAMILIES.iter() {
            pairs.push((f, g));
        }
    }

    let row_records: Vec<Record> = pairs
        .par_iter()
        .map(|&(ff, gf)| {
            let mut sampled = 0usize;
            let mut antisym_ok = 0usize;
            let mut failures = Vec::new();
            let mut used_degenerate = false;
            'outer: for fl in &pool[&ff] {
                for gl in &pool[&gf] {
                    if fl.weight() + gl.weight() > weight_cap {
                        continue;
                    }
                    if sampled >= samples_per_pair {
                        break 'outer;
                    }
                    sampled += 1;
                    let fc = instantiate(fl).unwrap().cochain();
                    let gc = instantiate(gl).unwrap().cochain();
                    let computed = bar_bracket_on_koszul(&fc, &gc);
                    // graded antisymmetry holds on the nose for the
                    // commutator; verify rather than assume
                    let reversed = bar_bracket_on_koszul(&gc, &fc);
                    let sign_even =
                        ((i64::from(fc.degree) - 1) * (i64::from(gc.degree) - 1)) % 2 == 0;
                    let anti = if sign_even {
                        computed.sub(&reversed.scale(&-crate::freealg::scalar_int(1)))
                    } else {
                        computed.sub(&reversed)
                    };
                    if anti.is_zero() {
                        antisym_ok += 1;
                    } else {
                        failures.push(format!("antisymmetry fails for [{fl}, {gl}]"));
                    }
                    let strict = bracket_predicted(fl, gl, VanishReading::Strict).unwrap();
                    if let Ok(()) = cochain_class_matches(&computed, &strict, config.solve_budget) {
                        continue;
                    }
                    let degenerate = bracket_predicted(fl, gl, VanishReading::Degenerate).unwrap();
                    match cochain_class_matches(&computed, &degenerate, config.solve_budget) {
                        Ok(()) => {
                            used_degenerate = true;
                            continue;
                        }
                        Err(e) => {
                            let shown = express_in_paper_basis(
                                &Instantiated::Cochain(computed.clone()),
                                config.solve_budget,
                            )
                            .map(|c| c.to_combination().to_string())
                            .unwrap_or_else(|| "<unexpressed>".into());
                            failures.push(format!(
                                "[{fl}, {gl}]: table {strict}, computed {shown} ({e})"
                            ));
                        }
                    }
                }
            }
            let id = format!("bracket/{}x{}", ff.name(), gf.name());
            let anchor = "bracket table rows for this family pair";
            let params = format!(
                "{} sampled instances, pair weight <= {}{}",
                sampled,
                weight_cap,
                if used_degenerate {
                    "; matched under the degenerate boundary-index reading"
                } else {
                    ""
                }
            );
            if failures.is_empty() {
                Record::pass(
                    id,
                    anchor,
                    params,
                    format!("{sampled} identities, antisymmetry exact on {antisym_ok}"),
                )
            } else {
                // rows that fail under both readings are findings with
                // witnesses, per the ambiguity of the vanishing convention
                Record::finding(id, anchor, params, failures.join("; "))
            }
        })
        .collect();
    records.extend(row_records);

    // graded Jacobi identity on sampled degree -1 triples
    let jacobi_pool: Vec<ClassLabel> = [
        "A-1", "B-1(1)", "B-1(2)", "E-1(1)", "C-1(2)", "K-1(;1)", "G-1(1;1)", "E-1(2)", "B-1(3)",
        "K-1(;2)", "D-1(3,1)", "C-1(3)",
    ]
    .iter()
    .map(|s| ClassLabel::parse(s).unwrap())
    .collect();
    let triples: Vec<(usize, usize, usize)> = (0..jacobi_pool.len())
        .flat_map(|i| {
            let n = jacobi_pool.len();
            [(i, (i + 1) % n, (i + 2) % n), (i, (i + 3) % n, (i + 5) % n)]
        })
        .take(14)
        .collect();
    let jacobi_failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let f = instantiate(&jacobi_pool[i]).unwrap().cochain();
            let g = instantiate(&jacobi_pool[j]).unwrap().cochain();
            let h = instantiate(&jacobi_pool[k]).unwrap().cochain();
            // degree -1 throughout: [f,[g,h]] - [[f,g],h] - [g,[f,h]]
            let mut jac = bar_bracket_on_koszul(&f, &bar_bracket_on_koszul(&g, &h));
            jac = jac.sub(&bar_bracket_on_koszul(&bar_bracket_on_koszul(&f, &g), &h));
            jac = jac.sub(&bar_bracket_on_koszul(&g, &bar_bracket_on_koszul(&f, &h)));
            if jac.is_zero() {
                return None;
            }
            match is_boundary_cochain(&jac, config.solve_budget) {
                BoundaryVerdict::Boundary(_) => None,
                _ => Some(format!(
                    "jacobiator of ({}, {}, {}) is not a coboundary",
                    jacobi_pool[i], jacobi_pool[j], jacobi_pool[k]
                )),
            }
        })
        .collect();
    records.push(if jacobi_failures.is_empty() {
        Record::pass(
            "bracket/jacobi",
            "[f,[g,h]] = [[f,g],h] + [g,[f,h]] in cohomology",
            format!("{} degree -1 triples", triples.len()),
            "jacobiator is a coboundary on every triple".to_string(),
        )
    } else {
        Record::fail(
            "bracket/jacobi",
            "[f,[g,h]] = [[f,g],h] + [g,[f,h]] in cohomology",
            format!("{} degree -1 triples", triples.len()),
            jacobi_failures.join("; "),
        )
    });

    // compatibility of the Connes differential with the cap action:
    // s1 i_f(b0(i_g z)) + s2 i_g(b0(i_f z)) = i_[f,g](z) in HH_0 for one
    // fixed sign convention (s1, s2)
    let tt_pairs: Vec<(ClassLabel, ClassLabel)> = [
        ("A-1", "B-1(1)"),
        ("B-1(1)", "E-1(1)"),
        ("A-1", "C-1(2)"),
        ("B-1(1)", "B-1(2)"),
        ("C-1(2)", "E-1(1)"),
        ("K-1(;1)", "B-1(1)"),
        ("E-1(1)", "E-1(2)"),
    ]
    .iter()
    .map(|(a, b)| (ClassLabel::parse(a).unwrap(), ClassLabel::parse(b).unwrap()))
    .collect();
    let zs: Vec<KoszulChain> = (1..=config.max_weight.min(6))
        .flat_map(|w| crate::paperdata::labels_at(crate::paperdata::ClassDegree::H1, i64::from(w)))
        .map(|l| instantiate(&l).unwrap().chain())
        .collect();
    let mut convention: Option<(i64, i64)> = None;
    let mut tt_failures = Vec::new();
    for (fl, gl) in &tt_pairs {
        let f = instantiate(fl).unwrap().cochain();
        let g = instantiate(gl).unwrap().cochain();
        let fg = bar_bracket_on_koszul(&f, &g);
        let mut works = [true; 4];
        let signs = [(1i64, -1i64), (-1, 1), (1, 1), (-1, -1)];
        for z in &zs {
            let t1 = hh0_express(&cap_op(&f, &connes_b0(&cap_op(&g, z).into_poly())).into_poly());
            let t2 = hh0_express(&cap_op(&g, &connes_b0(&cap_op(&f, z).into_poly())).into_poly());
            let rhs = hh0_express(&cap_op(&fg, z).into_poly());
            for (k, &(s1, s2)) in signs.iter().enumerate() {
                let mut lhs = t1.scaled(&crate::freealg::scalar_int(s1));
                lhs.add_assign(&t2.scaled(&crate::freealg::scalar_int(s2)));
                if lhs != rhs {
                    works[k] = false;
                }
            }
        }
        match signs.iter().zip(works).find(|(_, ok)| *ok) {
            Some((&sgn, _)) => match convention {
                None => convention = Some(sgn),
                Some(prev) if prev == sgn => {}
                Some(prev) => tt_failures.push(format!(
                    "({fl}, {gl}) needs signs {sgn:?} but earlier pairs fixed {prev:?}"
                )),
            },
            None => tt_failures.push(format!("({fl}, {gl}) satisfies no sign convention")),
        }
    }
    records.push(if tt_failures.is_empty() {
        Record::pass(
            "bracket/connes-cap-compatibility",
            "[[B, i_f], i_g] = i_[f,g] on HH_1",
            format!(
                "{} pairs, weight <= {}",
                tt_pairs.len(),
                config.max_weight.min(6)
            ),
            format!(
                "holds with signs {:?} in s1 i_f(B(i_g z)) + s2 i_g(B(i_f z)) = i_[f,g](z)",
                convention.unwrap_or((0, 0))
            ),
        )
    } else {
        Record::fail(
            "bracket/connes-cap-compatibility",
            "[[B, i_f], i_g] = i_[f,g] on HH_1",
            format!(
                "{} pairs, weight <= {}",
                tt_pairs.len(),
                config.max_weight.min(6)
            ),
            tt_failures.join("; "),
        )
    });

    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}
