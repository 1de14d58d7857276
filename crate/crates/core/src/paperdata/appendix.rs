//! Hand-computed images of the chain and cochain differentials on
//! basis-monomial slots, one row per monomial family, instantiated at
//! bounded parameters.
//!
//! Every stated value is written out from its closed-form display (sign,
//! exponent arithmetic and all) and compared verbatim against the
//! implemented differential; this cross-checks the rewriting engine against
//! the by-hand reductions.

use crate::freealg::{Letter, NormalPoly, Scalar, TypedMonomial, Word};
use crate::koszul::{
    KoszulChain, KoszulCochain, GEN_X, GEN_XX, GEN_XXZ, GEN_XZ, GEN_XZY, GEN_Y, GEN_Z, GEN_ZY,
};

/// Which differential's image generators a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppendixLemma {
    D1,
    D2,
    D3,
    D1Star,
    D2Star,
    D3Star,
    D4Star,
}

impl AppendixLemma {
    pub const ALL: [AppendixLemma; 7] = [
        AppendixLemma::D1,
        AppendixLemma::D2,
        AppendixLemma::D3,
        AppendixLemma::D1Star,
        AppendixLemma::D2Star,
        AppendixLemma::D3Star,
        AppendixLemma::D4Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AppendixLemma::D1 => "d1",
            AppendixLemma::D2 => "d2",
            AppendixLemma::D3 => "d3",
            AppendixLemma::D1Star => "d1*",
            AppendixLemma::D2Star => "d2*",
            AppendixLemma::D3Star => "d3*",
            AppendixLemma::D4Star => "d4*",
        }
    }
}

/// A preimage together with its stated image.
#[derive(Debug, Clone)]
pub enum AppendixPair {
    Chain(ChainAppendixPair),
    Cochain(CochainAppendixPair),
}

#[derive(Debug, Clone)]
pub struct ChainAppendixPair {
    pub input: KoszulChain,
    pub stated: KoszulChain,
}

#[derive(Debug, Clone)]
pub struct CochainAppendixPair {
    pub input: KoszulCochain,
    pub stated: KoszulCochain,
}

/// Word builder atoms mirroring the displayed monomial shapes.
#[derive(Debug, Clone, Copy)]
enum Part<'a> {
    Y(i64),
    X,
    Z(i64),
    /// `z^{m_1} x y^{n_2} ... x y^{n_p} z^{m_p}` with the given m-list and
    /// inner n-list (empty m-list yields the empty word).
    Blk(&'a [i64], &'a [i64]),
}

fn build(parts: &[Part]) -> Word {
    let mut w = Word::one();
    for part in parts {
        match part {
            Part::Y(n) => w.push(Letter::Y, *n as u32),
            Part::X => w.push(Letter::X, 1),
            Part::Z(m) => w.push(Letter::Z, *m as u32),
            Part::Blk(ms, inner) => {
                debug_assert!(ms.is_empty() || inner.len() + 1 == ms.len());
                for (j, m) in ms.iter().enumerate() {
                    if j > 0 {
                        w.push(Letter::X, 1);
                        w.push(Letter::Y, inner[j - 1] as u32);
                    }
                    w.push(Letter::Z, *m as u32);
                }
            }
        }
    }
    w
}

/// Signed sum of built words as a polynomial.
fn poly(terms: &[(i64, &[Part])]) -> NormalPoly {
    let mut out = NormalPoly::zero();
    for (c, parts) in terms {
        out.add_monomial(build(parts), Scalar::from_integer((*c).into()));
    }
    out
}

/// Typed-monomial parameters in paper form: `n0` (when present), `n1`,
/// inner exponents, trailing exponent, and the m-list.
struct Shape {
    type_id: u8,
    ns: Vec<i64>,
    ms: Vec<i64>,
}

impl Shape {
    fn of(t: &TypedMonomial) -> Shape {
        Shape {
            type_id: t.type_id,
            ns: t.ns.iter().map(|&v| i64::from(v)).collect(),
            ms: t.ms.iter().map(|&v| i64::from(v)).collect(),
        }
    }

    fn p(&self) -> usize {
        self.ms.len()
    }
}

/// The eighteen monomial families instantiated at exponents `<= exp_bound`
/// and block count `<= p_bound`.
fn monomial_cases(exp_bound: i64, p_bound: usize) -> Vec<TypedMonomial> {
    let mut out = Vec::new();
    let exps = 1..=(exp_bound as u32);
    out.push(TypedMonomial {
        type_id: 0,
        ns: vec![],
        ms: vec![],
    });
    for n0 in exps.clone() {
        for t in [1u8, 2] {
            out.push(TypedMonomial {
                type_id: t,
                ns: vec![n0],
                ms: vec![],
            });
        }
        for n1 in exps.clone() {
            out.push(TypedMonomial {
                type_id: 3,
                ns: vec![n0, n1],
                ms: vec![],
            });
        }
    }
    out.push(TypedMonomial {
        type_id: 7,
        ns: vec![],
        ms: vec![],
    });
    for n1 in exps.clone() {
        out.push(TypedMonomial {
            type_id: 8,
            ns: vec![n1],
            ms: vec![],
        });
    }
    // block families
    let tuple_lists = |arity: usize| -> Vec<Vec<u32>> {
        let mut lists = vec![vec![]];
        for _ in 0..arity {
            let mut next = Vec::new();
            for l in &lists {
                for v in 1..=(exp_bound as u32) {
                    let mut l2 = l.clone();
                    l2.push(v);
                    next.push(l2);
                }
            }
            lists = next;
        }
        lists
    };
    for p in 1..=p_bound {
        for ms in tuple_lists(p) {
            for inner in tuple_lists(p - 1) {
                let blocks = |lead: &[u32], tail: &[u32]| -> (Vec<u32>, Vec<u32>) {
                    let mut ns = lead.to_vec();
                    ns.extend_from_slice(&inner);
                    ns.extend_from_slice(tail);
                    (ns, ms.clone())
                };
                for lead in tuple_lists(1) {
                    // types 12,13 and 14 (leading y-run)
                    let (ns, ms2) = blocks(&lead, &[]);
                    out.push(TypedMonomial {
                        type_id: 12,
                        ns: ns.clone(),
                        ms: ms2.clone(),
                    });
                    out.push(TypedMonomial {
                        type_id: 13,
                        ns,
                        ms: ms2,
                    });
                    for t in tuple_lists(1) {
                        let (ns, ms2) = blocks(&lead, &t);
                        out.push(TypedMonomial {
                            type_id: 14,
                            ns,
                            ms: ms2,
                        });
                    }
                    // types 9,10,11 (x then y-run)
                    let (ns, ms2) = blocks(&lead, &[]);
                    out.push(TypedMonomial {
                        type_id: 9,
                        ns: ns.clone(),
                        ms: ms2.clone(),
                    });
                    out.push(TypedMonomial {
                        type_id: 10,
                        ns,
                        ms: ms2,
                    });
                    for t in tuple_lists(1) {
                        let (ns, ms2) = blocks(&lead, &t);
                        out.push(TypedMonomial {
                            type_id: 11,
                            ns,
                            ms: ms2,
                        });
                    }
                    // types 4,5,6 (two leading runs)
                    for n0 in tuple_lists(1) {
                        let mut lead2 = n0.clone();
                        lead2.extend_from_slice(&lead);
                        let (ns, ms2) = blocks(&lead2, &[]);
                        out.push(TypedMonomial {
                            type_id: 4,
                            ns: ns.clone(),
                            ms: ms2.clone(),
                        });
                        out.push(TypedMonomial {
                            type_id: 5,
                            ns,
                            ms: ms2,
                        });
                        for t in tuple_lists(1) {
                            let (ns, ms2) = blocks(&lead2, &t);
                            out.push(TypedMonomial {
                                type_id: 6,
                                ns,
                                ms: ms2,
                            });
                        }
                    }
                }
                // types 15,16,17 (no leading run)
                let (ns, ms2) = blocks(&[], &[]);
                out.push(TypedMonomial {
                    type_id: 15,
                    ns: ns.clone(),
                    ms: ms2.clone(),
                });
                out.push(TypedMonomial {
                    type_id: 16,
                    ns,
                    ms: ms2,
                });
                for t in tuple_lists(1) {
                    let (ns, ms2) = blocks(&[], &t);
                    out.push(TypedMonomial {
                        type_id: 17,
                        ns,
                        ms: ms2,
                    });
                }
            }
        }
    }
    out
}

/// Every (preimage, stated image) row of the chosen lemma at the given
/// bounds, with case labels.
pub fn appendix_pairs(
    lemma: AppendixLemma,
    exp_bound: i64,
    p_bound: usize,
) -> Vec<(String, AppendixPair)> {
    let cases = monomial_cases(exp_bound, p_bound);
    let mut out = Vec::new();
    for t in &cases {
        let word = t.expand();
        debug_assert_eq!(TypedMonomial::classify(&word), *t);
        match lemma {
            AppendixLemma::D1 => {
                for (slot, gen) in [("a", GEN_X), ("b", GEN_Y), ("c", GEN_Z)] {
                    if let Some(stated) = d1_stated(&Shape::of(t), gen.index) {
                        let input = KoszulChain::from_poly(&NormalPoly::word(word.clone()), gen);
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Chain(ChainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
            AppendixLemma::D2 => {
                for (slot, gen) in [("e", GEN_XX), ("c", GEN_XZ), ("d", GEN_ZY)] {
                    if let Some(stated) = d2_stated(&Shape::of(t), gen.index) {
                        let input = KoszulChain::from_poly(&NormalPoly::word(word.clone()), gen);
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Chain(ChainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
            AppendixLemma::D3 => {
                for (slot, gen) in [("b", GEN_XXZ), ("a", GEN_XZY)] {
                    if let Some(stated) = d3_stated(&Shape::of(t), gen.index) {
                        let input = KoszulChain::from_poly(&NormalPoly::word(word.clone()), gen);
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Chain(ChainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
            AppendixLemma::D1Star => {
                if let Some(stated) = d1s_stated(&Shape::of(t)) {
                    let mut input = KoszulCochain::zero(0);
                    input.set_value(0, NormalPoly::word(word.clone()));
                    out.push((
                        format!("a={word}"),
                        AppendixPair::Cochain(CochainAppendixPair { input, stated }),
                    ));
                }
            }
            AppendixLemma::D2Star => {
                for (slot, gen) in [("a", GEN_X), ("b", GEN_Y), ("c", GEN_Z)] {
                    if let Some(stated) = d2s_stated(&Shape::of(t), gen.index) {
                        let mut input = KoszulCochain::zero(1);
                        input.set_value(gen.index, NormalPoly::word(word.clone()));
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Cochain(CochainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
            AppendixLemma::D3Star => {
                for (slot, gen) in [("a", GEN_XX), ("b", GEN_XZ), ("c", GEN_ZY)] {
                    if let Some(stated) = d3s_stated(&Shape::of(t), gen.index) {
                        let mut input = KoszulCochain::zero(2);
                        input.set_value(gen.index, NormalPoly::word(word.clone()));
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Cochain(CochainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
            AppendixLemma::D4Star => {
                for (slot, gen) in [("a", GEN_XXZ), ("b", GEN_XZY)] {
                    if let Some(stated) = d4s_stated(&Shape::of(t), gen.index) {
                        let mut input = KoszulCochain::zero(3);
                        input.set_value(gen.index, NormalPoly::word(word.clone()));
                        out.push((
                            format!("{slot}={word}"),
                            AppendixPair::Cochain(CochainAppendixPair { input, stated }),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Stated image of `d_1` on `w (x) slot` for each monomial family of `w`.
fn d1_stated(s: &Shape, slot: u8) -> Option<KoszulChain> {
    let mut out = KoszulChain::zero(0);
    let add = |out: &mut KoszulChain, c: i64, parts: &[Part]| {
        out.add_word(build(parts), 0, Scalar::from_integer(c.into()));
    };
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    use Part::*;
    if slot == GEN_X.index {
        // d1(a (x) x) = ax - xa
        match s.type_id {
            0 | 7 => {}
            2 => {} // y^{n0} x commutes into zero difference
            1 => {
                add(&mut out, 1, &[Y(ns[0]), X]);
                add(&mut out, -1, &[X, Y(ns[0])]);
            }
            3 => {
                add(&mut out, -1, &[Y(ns[0] + ns[1] + 1), X]);
                add(&mut out, 1, &[Y(ns[0] + 1), X, Y(ns[1])]);
            }
            4 => {
                add(&mut out, 1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X]);
                add(&mut out, 1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])]);
            }
            5 => add(
                &mut out,
                1,
                &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
            ),
            6 => add(
                &mut out,
                1,
                &[
                    Y(ns[0] + 1),
                    X,
                    Y(ns[1]),
                    Blk(ms, &ns[2..p + 1]),
                    X,
                    Y(ns[p + 1]),
                ],
            ),
            8 => {
                add(&mut out, -1, &[Y(ns[0] + 1), X]);
                add(&mut out, 1, &[Y(1), X, Y(ns[0])]);
            }
            9 => {
                add(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]);
                add(&mut out, 1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])]);
            }
            10 => add(&mut out, 1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
            11 => add(
                &mut out,
                1,
                &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
            ),
            12 => {
                add(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X]);
                add(&mut out, -1, &[X, Y(ns[0]), Blk(ms, &ns[1..])]);
            }
            13 => add(&mut out, -1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
            // the display omits the minus; a.x dies on x y^n x then zy, so
            // only -xa survives, as in the type-13 row above it
            14 => add(
                &mut out,
                -1,
                &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
            ),
            15 => add(&mut out, 1, &[Blk(ms, ns), X]),
            16 | 17 => {}
            _ => unreachable!(),
        }
    } else if slot == GEN_Y.index {
        // d1(b (x) y) = by - yb
        match s.type_id {
            0 | 1 => {}
            2 => {
                add(&mut out, 1, &[Y(ns[0]), X, Y(1)]);
                add(&mut out, -1, &[Y(ns[0] + 1), X]);
            }
            3 => {
                add(&mut out, 1, &[Y(ns[0]), X, Y(ns[1] + 1)]);
                add(&mut out, -1, &[Y(ns[0] + 1), X, Y(ns[1])]);
            }
            4 => add(
                &mut out,
                -1,
                &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])],
            ),
            5 => {
                add(
                    &mut out,
                    1,
                    &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)],
                );
                add(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                );
            }
            6 => {
                add(
                    &mut out,
                    1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1] + 1),
                    ],
                );
                add(
                    &mut out,
                    -1,
                    &[
                        Y(ns[0] + 1),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                    ],
                );
            }
            7 => {
                add(&mut out, 1, &[X, Y(1)]);
                add(&mut out, -1, &[Y(1), X]);
            }
            8 => {
                add(&mut out, 1, &[X, Y(ns[0] + 1)]);
                add(&mut out, -1, &[Y(1), X, Y(ns[0])]);
            }
            9 => add(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])]),
            10 => {
                add(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)]);
                add(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X]);
            }
            11 => {
                add(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                );
                add(
                    &mut out,
                    -1,
                    &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                );
            }
            12 => add(&mut out, -1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])]),
            13 => {
                add(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)]);
                add(&mut out, -1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X]);
            }
            14 => {
                add(
                    &mut out,
                    1,
                    &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                );
                add(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                );
            }
            15 => add(&mut out, -1, &[Y(1), Blk(ms, ns)]),
            16 => {
                add(&mut out, 1, &[Blk(ms, ns), X, Y(1)]);
                add(&mut out, -1, &[Y(1), Blk(ms, ns), X]);
            }
            17 => {
                add(&mut out, 1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)]);
                add(
                    &mut out,
                    -1,
                    &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])],
                );
            }
            _ => unreachable!(),
        }
    } else {
        // d1(c (x) z) = cz - zc
        match s.type_id {
            0 | 2 => {}
            1 => add(&mut out, 1, &[Y(ns[0]), Z(1)]),
            3 => add(&mut out, 1, &[Y(ns[0]), X, Y(ns[1]), Z(1)]),
            4 => {
                // appending z deepens the final block
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                add(&mut out, 1, &[Y(ns[0]), X, Y(ns[1]), Blk(&ms2, &ns[2..])]);
            }
            5 => {}
            6 => add(
                &mut out,
                1,
                &[
                    Y(ns[0]),
                    X,
                    Y(ns[1]),
                    Blk(ms, &ns[2..p + 1]),
                    X,
                    Y(ns[p + 1]),
                    Z(1),
                ],
            ),
            7 => add(&mut out, -1, &[Z(1), X]),
            8 => {
                add(&mut out, 1, &[X, Y(ns[0]), Z(1)]);
                add(&mut out, -1, &[Z(1), X, Y(ns[0])]);
            }
            9 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                add(&mut out, 1, &[X, Y(ns[0]), Blk(&ms2, &ns[1..])]);
                add(&mut out, -1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..])]);
            }
            10 => add(&mut out, -1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
            11 => {
                add(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)],
                );
                add(
                    &mut out,
                    -1,
                    &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                );
            }
            12 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                add(&mut out, 1, &[Y(ns[0]), Blk(&ms2, &ns[1..])]);
            }
            13 => {}
            14 => add(
                &mut out,
                1,
                &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)],
            ),
            15 => {
                let mut tail = ms.clone();
                *tail.last_mut().unwrap() += 1;
                add(&mut out, 1, &[Blk(&tail, ns)]);
                let mut head = ms.clone();
                head[0] += 1;
                add(&mut out, -1, &[Blk(&head, ns)]);
            }
            16 => {
                let mut head = ms.clone();
                head[0] += 1;
                add(&mut out, -1, &[Blk(&head, ns), X]);
            }
            17 => {
                add(&mut out, 1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1]), Z(1)]);
                let mut head = ms.clone();
                head[0] += 1;
                add(&mut out, -1, &[Blk(&head, &ns[..p - 1]), X, Y(ns[p - 1])]);
            }
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Stated image of `d_2` on `w (x) slot`.
fn d2_stated(s: &Shape, slot: u8) -> Option<KoszulChain> {
    let mut out = KoszulChain::zero(1);
    let adds = |out: &mut KoszulChain, c: i64, parts: &[Part], gen: u8| {
        out.add_word(build(parts), gen, Scalar::from_integer(c.into()));
    };
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    let (gx, gy, gz) = (GEN_X.index, GEN_Y.index, GEN_Z.index);
    use Part::*;
    if slot == GEN_XX.index {
        // e (x) (x^2 + yx) -> (e(x+y) + xe) (x) x + xe (x) y
        match s.type_id {
            0 => {
                adds(&mut out, 2, &[X], gx);
                adds(&mut out, 1, &[Y(1)], gx);
                adds(&mut out, 1, &[X], gy);
            }
            1 => {
                adds(&mut out, 1, &[Y(ns[0]), X], gx);
                adds(&mut out, 1, &[Y(ns[0] + 1)], gx);
                adds(&mut out, 1, &[X, Y(ns[0])], gx);
                adds(&mut out, 1, &[X, Y(ns[0])], gy);
            }
            2 => {
                adds(&mut out, -2, &[Y(ns[0] + 1), X], gx);
                adds(&mut out, 1, &[Y(ns[0]), X, Y(1)], gx);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gy);
            }
            3 => {
                adds(&mut out, -1, &[Y(ns[0] + ns[1] + 1), X], gx);
                adds(&mut out, 1, &[Y(ns[0]), X, Y(ns[1] + 1)], gx);
                adds(&mut out, -1, &[Y(ns[0] + 1), X, Y(ns[1])], gx);
                adds(&mut out, -1, &[Y(ns[0] + 1), X, Y(ns[1])], gy);
            }
            4 => {
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])],
                    gy,
                );
            }
            5 => {
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                    gy,
                );
            }
            6 => {
                adds(
                    &mut out,
                    1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1] + 1),
                    ],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[
                        Y(ns[0] + 1),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                    ],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[
                        Y(ns[0] + 1),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                    ],
                    gy,
                );
            }
            7 => {
                adds(&mut out, 1, &[X, Y(1)], gx);
                adds(&mut out, -2, &[Y(1), X], gx);
                adds(&mut out, -1, &[Y(1), X], gy);
            }
            8 => {
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gx);
                adds(&mut out, 1, &[X, Y(ns[0] + 1)], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0])], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0])], gy);
            }
            9 => {
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gy);
            }
            10 => {
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X], gx);
                adds(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X], gy);
            }
            11 => {
                adds(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gx,
                );
                adds(
                    &mut out,
                    -1,
                    &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gy,
                );
            }
            12 => {
                adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X], gx);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..])], gx);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..])], gy);
            }
            13 => {
                adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)], gx);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gx);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gy);
            }
            14 => {
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                    gx,
                );
                adds(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gx,
                );
                adds(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gy,
                );
            }
            15 => adds(&mut out, 1, &[Blk(ms, ns), X], gx),
            16 => adds(&mut out, 1, &[Blk(ms, ns), X, Y(1)], gx),
            17 => adds(
                &mut out,
                1,
                &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)],
                gx,
            ),
            _ => unreachable!(),
        }
    } else if slot == GEN_ZY.index {
        // d (x) zy -> dz (x) y + yd (x) z
        match s.type_id {
            0 => {
                adds(&mut out, 1, &[Z(1)], gy);
                adds(&mut out, 1, &[Y(1)], gz);
            }
            1 => {
                adds(&mut out, 1, &[Y(ns[0]), Z(1)], gy);
                adds(&mut out, 1, &[Y(ns[0] + 1)], gz);
            }
            2 => adds(&mut out, 1, &[Y(ns[0] + 1), X], gz),
            3 => {
                adds(&mut out, 1, &[Y(ns[0]), X, Y(ns[1]), Z(1)], gy);
                adds(&mut out, 1, &[Y(ns[0] + 1), X, Y(ns[1])], gz);
            }
            4 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), X, Y(ns[1]), Blk(&ms2, &ns[2..])],
                    gy,
                );
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])],
                    gz,
                );
            }
            5 => adds(
                &mut out,
                1,
                &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                gz,
            ),
            6 => {
                adds(
                    &mut out,
                    1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                        Z(1),
                    ],
                    gy,
                );
                adds(
                    &mut out,
                    1,
                    &[
                        Y(ns[0] + 1),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                    ],
                    gz,
                );
            }
            7 => adds(&mut out, 1, &[Y(1), X], gz),
            8 => {
                adds(&mut out, 1, &[X, Y(ns[0]), Z(1)], gy);
                adds(&mut out, 1, &[Y(1), X, Y(ns[0])], gz);
            }
            9 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(&ms2, &ns[1..])], gy);
                adds(&mut out, 1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gz);
            }
            10 => adds(&mut out, 1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X], gz),
            11 => {
                adds(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)],
                    gy,
                );
                adds(
                    &mut out,
                    1,
                    &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gz,
                );
            }
            12 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                adds(&mut out, 1, &[Y(ns[0]), Blk(&ms2, &ns[1..])], gy);
                adds(&mut out, 1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])], gz);
            }
            13 => adds(&mut out, 1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X], gz),
            14 => {
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)],
                    gy,
                );
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gz,
                );
            }
            15 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                adds(&mut out, 1, &[Blk(&ms2, ns)], gy);
                adds(&mut out, 1, &[Y(1), Blk(ms, ns)], gz);
            }
            16 => adds(&mut out, 1, &[Y(1), Blk(ms, ns), X], gz),
            17 => {
                adds(
                    &mut out,
                    1,
                    &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1]), Z(1)],
                    gy,
                );
                adds(
                    &mut out,
                    1,
                    &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])],
                    gz,
                );
            }
            _ => unreachable!(),
        }
    } else {
        // c (x) xz -> cx (x) z + zc (x) x
        match s.type_id {
            0 => {
                adds(&mut out, 1, &[Z(1)], gx);
                adds(&mut out, 1, &[X], gz);
            }
            1 => adds(&mut out, 1, &[Y(ns[0]), X], gz),
            2 => adds(&mut out, -1, &[Y(ns[0] + 1), X], gz),
            3 => adds(&mut out, -1, &[Y(ns[0] + ns[1] + 1), X], gz),
            4 => adds(
                &mut out,
                1,
                &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                gz,
            ),
            5 | 6 => {}
            7 => {
                adds(&mut out, 1, &[Z(1), X], gx);
                adds(&mut out, -1, &[Y(1), X], gz);
            }
            8 => {
                adds(&mut out, 1, &[Z(1), X, Y(ns[0])], gx);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gz);
            }
            9 => {
                adds(&mut out, 1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gx);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gz);
            }
            10 => adds(&mut out, 1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X], gx),
            11 => adds(
                &mut out,
                1,
                &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                gx,
            ),
            12 => adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X], gz),
            13 | 14 => {}
            15 => {
                let mut head = ms.clone();
                head[0] += 1;
                adds(&mut out, 1, &[Blk(&head, ns)], gx);
                adds(&mut out, 1, &[Blk(ms, ns), X], gz);
            }
            16 => {
                let mut head = ms.clone();
                head[0] += 1;
                adds(&mut out, 1, &[Blk(&head, ns), X], gx);
            }
            17 => {
                let mut head = ms.clone();
                head[0] += 1;
                adds(
                    &mut out,
                    1,
                    &[Blk(&head, &ns[..p - 1]), X, Y(ns[p - 1])],
                    gx,
                );
            }
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Stated image of `d_3` on `w (x) slot`.
fn d3_stated(s: &Shape, slot: u8) -> Option<KoszulChain> {
    let mut out = KoszulChain::zero(2);
    let adds = |out: &mut KoszulChain, c: i64, parts: &[Part], gen: u8| {
        out.add_word(build(parts), gen, Scalar::from_integer(c.into()));
    };
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    let (gxx, gxz, gzy) = (GEN_XX.index, GEN_XZ.index, GEN_ZY.index);
    use Part::*;
    if slot == GEN_XZY.index {
        // a (x) xzy -> ax (x) zy - ya (x) xz
        match s.type_id {
            0 => {
                adds(&mut out, -1, &[Y(1)], gxz);
                adds(&mut out, 1, &[X], gzy);
            }
            1 => {
                adds(&mut out, -1, &[Y(ns[0] + 1)], gxz);
                adds(&mut out, 1, &[Y(ns[0]), X], gzy);
            }
            2 => {
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gxz);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gzy);
            }
            3 => {
                adds(&mut out, -1, &[Y(ns[0] + 1), X, Y(ns[1])], gxz);
                adds(&mut out, -1, &[Y(ns[0] + ns[1] + 1), X], gzy);
            }
            4 => {
                adds(
                    &mut out,
                    -1,
                    &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])],
                    gxz,
                );
                adds(
                    &mut out,
                    1,
                    &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                    gzy,
                );
            }
            5 => adds(
                &mut out,
                -1,
                &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                gxz,
            ),
            6 => adds(
                &mut out,
                -1,
                &[
                    Y(ns[0] + 1),
                    X,
                    Y(ns[1]),
                    Blk(ms, &ns[2..p + 1]),
                    X,
                    Y(ns[p + 1]),
                ],
                gxz,
            ),
            7 => {
                adds(&mut out, -1, &[Y(1), X], gxz);
                adds(&mut out, -1, &[Y(1), X], gzy);
            }
            8 => {
                adds(&mut out, -1, &[Y(1), X, Y(ns[0])], gxz);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gzy);
            }
            9 => {
                adds(&mut out, -1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gxz);
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gzy);
            }
            10 => adds(
                &mut out,
                -1,
                &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X],
                gxz,
            ),
            11 => adds(
                &mut out,
                -1,
                &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                gxz,
            ),
            12 => {
                adds(&mut out, -1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])], gxz);
                adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X], gzy);
            }
            13 => adds(&mut out, -1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X], gxz),
            14 => adds(
                &mut out,
                -1,
                &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                gxz,
            ),
            15 => {
                adds(&mut out, -1, &[Y(1), Blk(ms, ns)], gxz);
                adds(&mut out, 1, &[Blk(ms, ns), X], gzy);
            }
            16 => adds(&mut out, -1, &[Y(1), Blk(ms, ns), X], gxz),
            17 => adds(
                &mut out,
                -1,
                &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])],
                gxz,
            ),
            _ => unreachable!(),
        }
    } else {
        // b (x) (x+y)xz -> b(x+y) (x) xz - zb (x) (x+y)x
        match s.type_id {
            0 => {
                adds(&mut out, 1, &[X], gxz);
                adds(&mut out, 1, &[Y(1)], gxz);
                adds(&mut out, -1, &[Z(1)], gxx);
            }
            1 => {
                adds(&mut out, 1, &[Y(ns[0]), X], gxz);
                adds(&mut out, 1, &[Y(ns[0] + 1)], gxz);
            }
            2 => {
                adds(&mut out, 1, &[Y(ns[0]), X, Y(1)], gxz);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gxz);
            }
            3 => {
                adds(&mut out, 1, &[Y(ns[0]), X, Y(ns[1] + 1)], gxz);
                adds(&mut out, -1, &[Y(ns[0] + ns[1] + 1), X], gxz);
            }
            4 => adds(
                &mut out,
                1,
                &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X],
                gxz,
            ),
            5 => adds(
                &mut out,
                1,
                &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)],
                gxz,
            ),
            6 => adds(
                &mut out,
                1,
                &[
                    Y(ns[0]),
                    X,
                    Y(ns[1]),
                    Blk(ms, &ns[2..p + 1]),
                    X,
                    Y(ns[p + 1] + 1),
                ],
                gxz,
            ),
            7 => {
                adds(&mut out, 1, &[X, Y(1)], gxz);
                adds(&mut out, -1, &[Y(1), X], gxz);
                adds(&mut out, -1, &[Z(1), X], gxx);
            }
            8 => {
                adds(&mut out, 1, &[X, Y(ns[0] + 1)], gxz);
                adds(&mut out, -1, &[Y(ns[0] + 1), X], gxz);
                adds(&mut out, -1, &[Z(1), X, Y(ns[0])], gxx);
            }
            9 => {
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X], gxz);
                adds(&mut out, -1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..])], gxx);
            }
            10 => {
                adds(&mut out, 1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)], gxz);
                adds(
                    &mut out,
                    -1,
                    &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X],
                    gxx,
                );
            }
            11 => {
                adds(
                    &mut out,
                    1,
                    &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                    gxz,
                );
                adds(
                    &mut out,
                    -1,
                    &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])],
                    gxx,
                );
            }
            12 => adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X], gxz),
            13 => adds(&mut out, 1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)], gxz),
            14 => adds(
                &mut out,
                1,
                &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)],
                gxz,
            ),
            15 => {
                adds(&mut out, 1, &[Blk(ms, ns), X], gxz);
                let mut head = ms.clone();
                head[0] += 1;
                adds(&mut out, -1, &[Blk(&head, ns)], gxx);
            }
            16 => {
                adds(&mut out, 1, &[Blk(ms, ns), X, Y(1)], gxz);
                let mut head = ms.clone();
                head[0] += 1;
                adds(&mut out, -1, &[Blk(&head, ns), X], gxx);
            }
            17 => {
                adds(
                    &mut out,
                    1,
                    &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)],
                    gxz,
                );
                let mut head = ms.clone();
                head[0] += 1;
                adds(
                    &mut out,
                    -1,
                    &[Blk(&head, &ns[..p - 1]), X, Y(ns[p - 1])],
                    gxx,
                );
            }
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Stated value of `d_1^*` on a basis element of `Hom(V_0, A) = A`.
fn d1s_stated(s: &Shape) -> Option<KoszulCochain> {
    let mut out = KoszulCochain::zero(1);
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    use Part::*;
    let setv = |out: &mut KoszulCochain, gen: u8, terms: &[(i64, &[Part])]| {
        out.set_value(gen, poly(terms));
    };
    let (gx, gy, gz) = (GEN_X.index, GEN_Y.index, GEN_Z.index);
    match s.type_id {
        0 => {}
        1 => {
            setv(&mut out, gx, &[(1, &[X, Y(ns[0])]), (-1, &[Y(ns[0]), X])]);
            setv(&mut out, gz, &[(-1, &[Y(ns[0]), Z(1)])]);
        }
        2 => {
            setv(
                &mut out,
                gy,
                &[(1, &[Y(ns[0] + 1), X]), (-1, &[Y(ns[0]), X, Y(1)])],
            );
        }
        3 => {
            setv(
                &mut out,
                gx,
                &[
                    (-1, &[Y(ns[0] + 1), X, Y(ns[1])]),
                    (1, &[Y(ns[0] + ns[1] + 1), X]),
                ],
            );
            setv(
                &mut out,
                gy,
                &[
                    (1, &[Y(ns[0] + 1), X, Y(ns[1])]),
                    (-1, &[Y(ns[0]), X, Y(ns[1] + 1)]),
                ],
            );
            setv(&mut out, gz, &[(-1, &[Y(ns[0]), X, Y(ns[1]), Z(1)])]);
        }
        4 => {
            setv(
                &mut out,
                gx,
                &[
                    (-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])]),
                    (-1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X]),
                ],
            );
            setv(
                &mut out,
                gy,
                &[(1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])])],
            );
            let mut ms2 = ms.clone();
            *ms2.last_mut().unwrap() += 1;
            setv(
                &mut out,
                gz,
                &[(-1, &[Y(ns[0]), X, Y(ns[1]), Blk(&ms2, &ns[2..])])],
            );
        }
        5 => {
            setv(
                &mut out,
                gx,
                &[(-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X])],
            );
            setv(
                &mut out,
                gy,
                &[
                    (1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X]),
                    (-1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)]),
                ],
            );
        }
        6 => {
            let core: &[Part] = &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..p + 1]), X];
            let up: &[Part] = &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..p + 1]), X];
            setv(&mut out, gx, &[(-1, &cat_parts(up, &[Y(ns[p + 1])]))]);
            setv(
                &mut out,
                gy,
                &[
                    (1, &cat_parts(up, &[Y(ns[p + 1])])),
                    (-1, &cat_parts(core, &[Y(ns[p + 1] + 1)])),
                ],
            );
            setv(
                &mut out,
                gz,
                &[(-1, &cat_parts(core, &[Y(ns[p + 1]), Z(1)]))],
            );
        }
        7 => {
            setv(&mut out, gy, &[(1, &[Y(1), X]), (-1, &[X, Y(1)])]);
            setv(&mut out, gz, &[(1, &[Z(1), X])]);
        }
        8 => {
            setv(
                &mut out,
                gx,
                &[(-1, &[Y(1), X, Y(ns[0])]), (1, &[Y(ns[0] + 1), X])],
            );
            setv(
                &mut out,
                gy,
                &[(1, &[Y(1), X, Y(ns[0])]), (-1, &[X, Y(ns[0] + 1)])],
            );
            setv(
                &mut out,
                gz,
                &[(1, &[Z(1), X, Y(ns[0])]), (-1, &[X, Y(ns[0]), Z(1)])],
            );
        }
        9 => {
            setv(
                &mut out,
                gx,
                &[
                    (-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])]),
                    (-1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
                ],
            );
            setv(
                &mut out,
                gy,
                &[(1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])])],
            );
            let mut ms2 = ms.clone();
            *ms2.last_mut().unwrap() += 1;
            setv(
                &mut out,
                gz,
                &[
                    (1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..])]),
                    (-1, &[X, Y(ns[0]), Blk(&ms2, &ns[1..])]),
                ],
            );
        }
        10 => {
            setv(
                &mut out,
                gx,
                &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X])],
            );
            setv(
                &mut out,
                gy,
                &[
                    (1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
                    (-1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)]),
                ],
            );
            setv(
                &mut out,
                gz,
                &[(1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X])],
            );
        }
        11 => {
            let head: &[Part] = &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X];
            setv(
                &mut out,
                gx,
                &[(-1, &cat_parts(&[Y(1)], &cat_parts(head, &[Y(ns[p])])))],
            );
            setv(
                &mut out,
                gy,
                &[
                    (1, &cat_parts(&[Y(1)], &cat_parts(head, &[Y(ns[p])]))),
                    (-1, &cat_parts(head, &[Y(ns[p] + 1)])),
                ],
            );
            setv(
                &mut out,
                gz,
                &[
                    (1, &cat_parts(&[Z(1)], &cat_parts(head, &[Y(ns[p])]))),
                    (-1, &cat_parts(head, &[Y(ns[p]), Z(1)])),
                ],
            );
        }
        12 => {
            setv(
                &mut out,
                gx,
                &[
                    (1, &[X, Y(ns[0]), Blk(ms, &ns[1..])]),
                    (-1, &[Y(ns[0]), Blk(ms, &ns[1..]), X]),
                ],
            );
            setv(&mut out, gy, &[(1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])])]);
            let mut ms2 = ms.clone();
            *ms2.last_mut().unwrap() += 1;
            // za dies on zy, so the az term carries a minus (the display
            // drops it; compare the type-4 row)
            setv(&mut out, gz, &[(-1, &[Y(ns[0]), Blk(&ms2, &ns[1..])])]);
        }
        13 => {
            setv(&mut out, gx, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X])]);
            setv(
                &mut out,
                gy,
                &[
                    (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X]),
                    (-1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)]),
                ],
            );
        }
        14 => {
            let head: &[Part] = &[Y(ns[0]), Blk(ms, &ns[1..p]), X];
            setv(
                &mut out,
                gx,
                &[(1, &cat_parts(&[X], &cat_parts(head, &[Y(ns[p])])))],
            );
            setv(
                &mut out,
                gy,
                &[
                    (1, &cat_parts(&[Y(1)], &cat_parts(head, &[Y(ns[p])]))),
                    (-1, &cat_parts(head, &[Y(ns[p] + 1)])),
                ],
            );
            setv(&mut out, gz, &[(-1, &cat_parts(head, &[Y(ns[p]), Z(1)]))]);
        }
        15 => {
            setv(&mut out, gx, &[(-1, &[Blk(ms, ns), X])]);
            setv(&mut out, gy, &[(1, &[Y(1), Blk(ms, ns)])]);
            let mut head = ms.clone();
            head[0] += 1;
            let mut tail = ms.clone();
            *tail.last_mut().unwrap() += 1;
            setv(
                &mut out,
                gz,
                &[(1, &[Blk(&head, ns)]), (-1, &[Blk(&tail, ns)])],
            );
        }
        16 => {
            setv(
                &mut out,
                gy,
                &[(1, &[Y(1), Blk(ms, ns), X]), (-1, &[Blk(ms, ns), X, Y(1)])],
            );
            let mut head = ms.clone();
            head[0] += 1;
            setv(&mut out, gz, &[(1, &[Blk(&head, ns), X])]);
        }
        17 => {
            let blkn = &ns[..p - 1];
            let t = ns[p - 1];
            setv(
                &mut out,
                gy,
                &[
                    (1, &[Y(1), Blk(ms, blkn), X, Y(t)]),
                    (-1, &[Blk(ms, blkn), X, Y(t + 1)]),
                ],
            );
            let mut head = ms.clone();
            head[0] += 1;
            setv(
                &mut out,
                gz,
                &[
                    (1, &[Blk(&head, blkn), X, Y(t)]),
                    (-1, &[Blk(ms, blkn), X, Y(t), Z(1)]),
                ],
            );
        }
        _ => unreachable!(),
    }
    Some(out)
}

fn cat_parts<'a>(a: &[Part<'a>], b: &[Part<'a>]) -> Vec<Part<'a>> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Stated value of `d_2^*` on single-slot cochains in `Hom(V_1, A)`.
fn d2s_stated(s: &Shape, slot: u8) -> Option<KoszulCochain> {
    let mut out = KoszulCochain::zero(2);
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    use Part::*;
    let setv = |out: &mut KoszulCochain, gen: u8, terms: &[(i64, &[Part])]| {
        out.set_value(gen, poly(terms));
    };
    let (gxx, gxz, gzy) = (GEN_XX.index, GEN_XZ.index, GEN_ZY.index);
    if slot == GEN_X.index {
        match s.type_id {
            0 => {
                setv(&mut out, gxx, &[(2, &[X]), (1, &[Y(1)])]);
                setv(&mut out, gxz, &[(1, &[Z(1)])]);
            }
            1 => {
                setv(
                    &mut out,
                    gxx,
                    &[
                        (1, &[X, Y(ns[0])]),
                        (1, &[Y(ns[0] + 1)]),
                        (1, &[Y(ns[0]), X]),
                    ],
                );
                setv(&mut out, gxz, &[(1, &[Y(ns[0]), Z(1)])]);
            }
            2 => setv(&mut out, gxx, &[(-1, &[Y(ns[0] + 1), X])]),
            3 => {
                setv(&mut out, gxx, &[(-1, &[Y(ns[0] + ns[1] + 1), X])]);
                setv(&mut out, gxz, &[(1, &[Y(ns[0]), X, Y(ns[1]), Z(1)])]);
            }
            4 => {
                setv(
                    &mut out,
                    gxx,
                    &[(1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X])],
                );
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(
                    &mut out,
                    gxz,
                    &[(1, &[Y(ns[0]), X, Y(ns[1]), Blk(&ms2, &ns[2..])])],
                );
            }
            5 => {}
            6 => {
                setv(
                    &mut out,
                    gxz,
                    &[(
                        1,
                        &[
                            Y(ns[0]),
                            X,
                            Y(ns[1]),
                            Blk(ms, &ns[2..p + 1]),
                            X,
                            Y(ns[p + 1]),
                            Z(1),
                        ],
                    )],
                );
            }
            7 => setv(&mut out, gxx, &[(-1, &[Y(1), X])]),
            8 => {
                setv(&mut out, gxx, &[(-1, &[Y(ns[0] + 1), X])]);
                setv(&mut out, gxz, &[(1, &[X, Y(ns[0]), Z(1)])]);
            }
            9 => {
                setv(&mut out, gxx, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X])]);
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(&mut out, gxz, &[(1, &[X, Y(ns[0]), Blk(&ms2, &ns[1..])])]);
            }
            10 => {}
            11 => setv(
                &mut out,
                gxz,
                &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)])],
            ),
            12 => {
                setv(
                    &mut out,
                    gxx,
                    &[
                        (1, &[X, Y(ns[0]), Blk(ms, &ns[1..])]),
                        (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])]),
                        (1, &[Y(ns[0]), Blk(ms, &ns[1..]), X]),
                    ],
                );
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(&mut out, gxz, &[(1, &[Y(ns[0]), Blk(&ms2, &ns[1..])])]);
            }
            13 => {
                setv(
                    &mut out,
                    gxx,
                    &[
                        (1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
                        (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X]),
                    ],
                );
            }
            14 => {
                setv(
                    &mut out,
                    gxx,
                    &[
                        (1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                        (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                    ],
                );
                setv(
                    &mut out,
                    gxz,
                    &[(1, &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)])],
                );
            }
            15 => {
                setv(
                    &mut out,
                    gxx,
                    &[(1, &[Y(1), Blk(ms, ns)]), (1, &[Blk(ms, ns), X])],
                );
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(&mut out, gxz, &[(1, &[Blk(&ms2, ns)])]);
            }
            16 => setv(&mut out, gxx, &[(1, &[Y(1), Blk(ms, ns), X])]),
            17 => {
                setv(
                    &mut out,
                    gxx,
                    &[(1, &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])])],
                );
                setv(
                    &mut out,
                    gxz,
                    &[(1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1]), Z(1)])],
                );
            }
            _ => unreachable!(),
        }
    } else if slot == GEN_Y.index {
        match s.type_id {
            0 => {
                setv(&mut out, gxx, &[(1, &[X])]);
                setv(&mut out, gzy, &[(1, &[Z(1)])]);
            }
            1 => setv(&mut out, gxx, &[(1, &[Y(ns[0]), X])]),
            2 => setv(&mut out, gxx, &[(-1, &[Y(ns[0] + 1), X])]),
            3 => setv(&mut out, gxx, &[(-1, &[Y(ns[0] + ns[1] + 1), X])]),
            4 => setv(
                &mut out,
                gxx,
                &[(1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X])],
            ),
            5 => {}
            6 => {}
            7 => {
                setv(&mut out, gxx, &[(-1, &[Y(1), X])]);
                setv(&mut out, gzy, &[(1, &[Z(1), X])]);
            }
            8 => {
                setv(&mut out, gxx, &[(-1, &[Y(ns[0] + 1), X])]);
                setv(&mut out, gzy, &[(1, &[Z(1), X, Y(ns[0])])]);
            }
            9 => {
                setv(&mut out, gxx, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X])]);
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..])])],
                );
            }
            10 => setv(
                &mut out,
                gzy,
                &[(1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X])],
            ),
            11 => setv(
                &mut out,
                gzy,
                &[(1, &[Z(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])])],
            ),
            12 => setv(&mut out, gxx, &[(1, &[Y(ns[0]), Blk(ms, &ns[1..]), X])]),
            13 | 14 => {}
            15 => {
                setv(&mut out, gxx, &[(1, &[Blk(ms, ns), X])]);
                let mut head = ms.clone();
                head[0] += 1;
                setv(&mut out, gzy, &[(1, &[Blk(&head, ns)])]);
            }
            16 => {
                let mut head = ms.clone();
                head[0] += 1;
                setv(&mut out, gzy, &[(1, &[Blk(&head, ns), X])]);
            }
            17 => {
                let mut head = ms.clone();
                head[0] += 1;
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[Blk(&head, &ns[..p - 1]), X, Y(ns[p - 1])])],
                );
            }
            _ => unreachable!(),
        }
    } else {
        // slot z
        match s.type_id {
            0 => {
                setv(&mut out, gxz, &[(1, &[X])]);
                setv(&mut out, gzy, &[(1, &[Y(1)])]);
            }
            1 => {
                setv(&mut out, gxz, &[(1, &[X, Y(ns[0])])]);
                setv(&mut out, gzy, &[(1, &[Y(ns[0] + 1)])]);
            }
            2 => {
                setv(&mut out, gxz, &[(-1, &[Y(ns[0] + 1), X])]);
                setv(&mut out, gzy, &[(1, &[Y(ns[0]), X, Y(1)])]);
            }
            3 => {
                setv(&mut out, gxz, &[(-1, &[Y(ns[0] + 1), X, Y(ns[1])])]);
                setv(&mut out, gzy, &[(1, &[Y(ns[0]), X, Y(ns[1] + 1)])]);
            }
            4 => setv(
                &mut out,
                gxz,
                &[(-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])])],
            ),
            5 => {
                setv(
                    &mut out,
                    gxz,
                    &[(-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X])],
                );
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)])],
                );
            }
            6 => {
                setv(
                    &mut out,
                    gxz,
                    &[(
                        -1,
                        &[
                            Y(ns[0] + 1),
                            X,
                            Y(ns[1]),
                            Blk(ms, &ns[2..p + 1]),
                            X,
                            Y(ns[p + 1]),
                        ],
                    )],
                );
                setv(
                    &mut out,
                    gzy,
                    &[(
                        1,
                        &[
                            Y(ns[0]),
                            X,
                            Y(ns[1]),
                            Blk(ms, &ns[2..p + 1]),
                            X,
                            Y(ns[p + 1] + 1),
                        ],
                    )],
                );
            }
            7 => {
                setv(&mut out, gxz, &[(-1, &[Y(1), X])]);
                setv(&mut out, gzy, &[(1, &[X, Y(1)])]);
            }
            8 => {
                setv(&mut out, gxz, &[(-1, &[Y(1), X, Y(ns[0])])]);
                setv(&mut out, gzy, &[(1, &[X, Y(ns[0] + 1)])]);
            }
            9 => setv(
                &mut out,
                gxz,
                &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])])],
            ),
            10 => {
                setv(
                    &mut out,
                    gxz,
                    &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X])],
                );
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])],
                );
            }
            11 => {
                setv(
                    &mut out,
                    gxz,
                    &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])])],
                );
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
                );
            }
            12 => setv(&mut out, gxz, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..])])]),
            13 => {
                setv(&mut out, gxz, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X])]);
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])],
                );
            }
            14 => {
                setv(
                    &mut out,
                    gxz,
                    &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])])],
                );
                setv(
                    &mut out,
                    gzy,
                    &[(1, &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
                );
            }
            15 => {}
            16 => setv(&mut out, gzy, &[(1, &[Blk(ms, ns), X, Y(1)])]),
            17 => setv(
                &mut out,
                gzy,
                &[(1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)])],
            ),
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Stated value of `d_3^*` on single-slot cochains in `Hom(V_2, A)`.
fn d3s_stated(s: &Shape, slot: u8) -> Option<KoszulCochain> {
    let mut out = KoszulCochain::zero(3);
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    use Part::*;
    let setv = |out: &mut KoszulCochain, gen: u8, terms: &[(i64, &[Part])]| {
        out.set_value(gen, poly(terms));
    };
    let (gxxz, gxzy) = (GEN_XXZ.index, GEN_XZY.index);
    if slot == GEN_XX.index {
        // f((x+y)x) = w: d3*(f)((x+y)xz) = -wz, (xzy) = 0
        match s.type_id {
            0 => setv(&mut out, gxxz, &[(-1, &[Z(1)])]),
            1 => setv(&mut out, gxxz, &[(-1, &[Y(ns[0]), Z(1)])]),
            2 => {}
            3 => setv(&mut out, gxxz, &[(-1, &[Y(ns[0]), X, Y(ns[1]), Z(1)])]),
            4 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(
                    &mut out,
                    gxxz,
                    &[(-1, &[Y(ns[0]), X, Y(ns[1]), Blk(&ms2, &ns[2..])])],
                );
            }
            5 => {}
            6 => setv(
                &mut out,
                gxxz,
                &[(
                    -1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                        Z(1),
                    ],
                )],
            ),
            7 => {}
            8 => setv(&mut out, gxxz, &[(-1, &[X, Y(ns[0]), Z(1)])]),
            9 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(&mut out, gxxz, &[(-1, &[X, Y(ns[0]), Blk(&ms2, &ns[1..])])]);
            }
            10 => {}
            11 => setv(
                &mut out,
                gxxz,
                &[(-1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)])],
            ),
            12 => {
                let mut ms2 = ms.clone();
                *ms2.last_mut().unwrap() += 1;
                setv(&mut out, gxxz, &[(-1, &[Y(ns[0]), Blk(&ms2, &ns[1..])])]);
            }
            13 => {}
            14 => setv(
                &mut out,
                gxxz,
                &[(-1, &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p]), Z(1)])],
            ),
            15 => {
                let mut tail = ms.clone();
                *tail.last_mut().unwrap() += 1;
                setv(&mut out, gxxz, &[(-1, &[Blk(&tail, ns)])]);
            }
            16 => {}
            17 => setv(
                &mut out,
                gxxz,
                &[(-1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1]), Z(1)])],
            ),
            _ => unreachable!(),
        }
    } else if slot == GEN_XZ.index {
        // f(xz) = w: (x+y)xz -> (x+y)w, xzy -> -wy
        match s.type_id {
            0 => {
                setv(&mut out, gxxz, &[(1, &[X]), (1, &[Y(1)])]);
                setv(&mut out, gxzy, &[(-1, &[Y(1)])]);
            }
            1 => {
                setv(&mut out, gxxz, &[(1, &[X, Y(ns[0])]), (1, &[Y(ns[0] + 1)])]);
                setv(&mut out, gxzy, &[(-1, &[Y(ns[0] + 1)])]);
            }
            2 => {
                setv(&mut out, gxzy, &[(-1, &[Y(ns[0]), X, Y(1)])]);
            }
            3 => setv(&mut out, gxzy, &[(-1, &[Y(ns[0]), X, Y(ns[1] + 1)])]),
            4 => {}
            5 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)])],
            ),
            6 => setv(
                &mut out,
                gxzy,
                &[(
                    -1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1] + 1),
                    ],
                )],
            ),
            7 => setv(&mut out, gxzy, &[(-1, &[X, Y(1)])]),
            8 => setv(&mut out, gxzy, &[(-1, &[X, Y(ns[0] + 1)])]),
            9 => {}
            10 => setv(
                &mut out,
                gxzy,
                &[(-1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])],
            ),
            11 => setv(
                &mut out,
                gxzy,
                &[(-1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
            ),
            12 => setv(
                &mut out,
                gxxz,
                &[
                    (1, &[X, Y(ns[0]), Blk(ms, &ns[1..])]),
                    (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])]),
                ],
            ),
            13 => {
                setv(
                    &mut out,
                    gxxz,
                    &[
                        (1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
                        (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X]),
                    ],
                );
                setv(
                    &mut out,
                    gxzy,
                    &[(-1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])],
                );
            }
            14 => {
                setv(
                    &mut out,
                    gxxz,
                    &[
                        (1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                        (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                    ],
                );
                setv(
                    &mut out,
                    gxzy,
                    &[(-1, &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
                );
            }
            15 => setv(&mut out, gxxz, &[(1, &[Y(1), Blk(ms, ns)])]),
            16 => {
                setv(&mut out, gxxz, &[(1, &[Y(1), Blk(ms, ns), X])]);
                setv(&mut out, gxzy, &[(-1, &[Blk(ms, ns), X, Y(1)])]);
            }
            17 => {
                setv(
                    &mut out,
                    gxxz,
                    &[(1, &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])])],
                );
                setv(
                    &mut out,
                    gxzy,
                    &[(-1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)])],
                );
            }
            _ => unreachable!(),
        }
    } else {
        // f(zy) = w: (x+y)xz -> 0, xzy -> xw
        match s.type_id {
            0 => setv(&mut out, gxzy, &[(1, &[X])]),
            1 => setv(&mut out, gxzy, &[(1, &[X, Y(ns[0])])]),
            2 => setv(&mut out, gxzy, &[(-1, &[Y(ns[0] + 1), X])]),
            3 => setv(&mut out, gxzy, &[(-1, &[Y(ns[0] + 1), X, Y(ns[1])])]),
            4 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..])])],
            ),
            5 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(ns[0] + 1), X, Y(ns[1]), Blk(ms, &ns[2..]), X])],
            ),
            6 => setv(
                &mut out,
                gxzy,
                &[(
                    -1,
                    &[
                        Y(ns[0] + 1),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1]),
                    ],
                )],
            ),
            7 => setv(&mut out, gxzy, &[(-1, &[Y(1), X])]),
            8 => setv(&mut out, gxzy, &[(-1, &[Y(1), X, Y(ns[0])])]),
            9 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..])])],
            ),
            10 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..]), X])],
            ),
            11 => setv(
                &mut out,
                gxzy,
                &[(-1, &[Y(1), X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])])],
            ),
            12 => setv(&mut out, gxzy, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..])])]),
            13 => setv(&mut out, gxzy, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X])]),
            14 => setv(
                &mut out,
                gxzy,
                &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])])],
            ),
            15..=17 => {}
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Stated value of `d_4^*` on single-slot cochains in `Hom(V_3, A)`.
fn d4s_stated(s: &Shape, slot: u8) -> Option<KoszulCochain> {
    let mut out = KoszulCochain::zero(4);
    let ns = &s.ns;
    let ms = &s.ms;
    let p = s.p();
    use Part::*;
    let setv = |out: &mut KoszulCochain, terms: &[(i64, &[Part])]| {
        out.set_value(0, poly(terms));
    };
    if slot == GEN_XXZ.index {
        // f((x+y)xz) = w: (x+y)xzy -> wy
        match s.type_id {
            0 => setv(&mut out, &[(1, &[Y(1)])]),
            1 => setv(&mut out, &[(1, &[Y(ns[0] + 1)])]),
            2 => setv(&mut out, &[(1, &[Y(ns[0]), X, Y(1)])]),
            3 => setv(&mut out, &[(1, &[Y(ns[0]), X, Y(ns[1] + 1)])]),
            4 => {}
            5 => setv(
                &mut out,
                &[(1, &[Y(ns[0]), X, Y(ns[1]), Blk(ms, &ns[2..]), X, Y(1)])],
            ),
            6 => setv(
                &mut out,
                &[(
                    1,
                    &[
                        Y(ns[0]),
                        X,
                        Y(ns[1]),
                        Blk(ms, &ns[2..p + 1]),
                        X,
                        Y(ns[p + 1] + 1),
                    ],
                )],
            ),
            7 => setv(&mut out, &[(1, &[X, Y(1)])]),
            8 => setv(&mut out, &[(1, &[X, Y(ns[0] + 1)])]),
            9 => {}
            10 => setv(&mut out, &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])]),
            11 => setv(
                &mut out,
                &[(1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
            ),
            12 => {}
            13 => setv(&mut out, &[(1, &[Y(ns[0]), Blk(ms, &ns[1..]), X, Y(1)])]),
            14 => setv(
                &mut out,
                &[(1, &[Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p] + 1)])],
            ),
            15 => {}
            16 => setv(&mut out, &[(1, &[Blk(ms, ns), X, Y(1)])]),
            17 => setv(
                &mut out,
                &[(1, &[Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1] + 1)])],
            ),
            _ => unreachable!(),
        }
    } else {
        // f(xzy) = w: (x+y)xzy -> (x+y)w
        match s.type_id {
            0 => setv(&mut out, &[(1, &[X]), (1, &[Y(1)])]),
            1 => setv(&mut out, &[(1, &[X, Y(ns[0])]), (1, &[Y(ns[0] + 1)])]),
            2..=11 => {
                // all products start with x or land on forbidden factors
                if matches!(s.type_id, 2..=11) {
                    // stated zero
                }
            }
            12 => setv(
                &mut out,
                &[
                    (1, &[X, Y(ns[0]), Blk(ms, &ns[1..])]),
                    (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..])]),
                ],
            ),
            13 => setv(
                &mut out,
                &[
                    (1, &[X, Y(ns[0]), Blk(ms, &ns[1..]), X]),
                    (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..]), X]),
                ],
            ),
            14 => setv(
                &mut out,
                &[
                    (1, &[X, Y(ns[0]), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                    (1, &[Y(ns[0] + 1), Blk(ms, &ns[1..p]), X, Y(ns[p])]),
                ],
            ),
            15 => setv(&mut out, &[(1, &[Y(1), Blk(ms, ns)])]),
            16 => setv(&mut out, &[(1, &[Y(1), Blk(ms, ns), X])]),
            17 => setv(
                &mut out,
                &[(1, &[Y(1), Blk(ms, &ns[..p - 1]), X, Y(ns[p - 1])])],
            ),
            _ => unreachable!(),
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::{chain_diff, cochain_diff};

    #[test]
    fn monomial_cases_round_trip() {
        for t in monomial_cases(2, 2) {
            let w = t.expand();
            assert_eq!(TypedMonomial::classify(&w), t, "{w}");
        }
    }

    #[test]
    fn all_lemmas_verify_at_small_bounds() {
        for lemma in AppendixLemma::ALL {
            for (case, pair) in appendix_pairs(lemma, 2, 2) {
                match pair {
                    AppendixPair::Chain(p) => {
                        let got = chain_diff(&p.input);
                        assert_eq!(
                            got,
                            p.stated,
                            "{} case {case}: computed {got} vs stated {}",
                            lemma.name(),
                            p.stated
                        );
                    }
                    AppendixPair::Cochain(p) => {
                        let got = cochain_diff(&p.input);
                        assert_eq!(
                            got,
                            p.stated,
                            "{} case {case}: computed {got} vs stated {}",
                            lemma.name(),
                            p.stated
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spec_examples() {
        use crate::freealg::scalar_int as si;
        // d3 on 1 (x) xzy: stated -y (x) xz + x (x) zy
        let shape = Shape {
            type_id: 0,
            ns: vec![],
            ms: vec![],
        };
        let stated = d3_stated(&shape, GEN_XZY.index).unwrap();
        let mut expect = KoszulChain::zero(2);
        expect.add_word(Word::letter(Letter::Y), GEN_XZ.index, si(-1));
        expect.add_word(Word::letter(Letter::X), GEN_ZY.index, si(1));
        assert_eq!(stated, expect);
        // d2 on 1 (x) xz: stated z (x) x + x (x) z
        let stated = d2_stated(&shape, GEN_XZ.index).unwrap();
        let mut expect = KoszulChain::zero(1);
        expect.add_word(Word::letter(Letter::Z), GEN_X.index, si(1));
        expect.add_word(Word::letter(Letter::X), GEN_Z.index, si(1));
        assert_eq!(stated, expect);
        // d1* on a = y^{n0} with n0 = 1: x -> xy - yx, y -> 0, z -> -yz
        let shape = Shape {
            type_id: 1,
            ns: vec![1],
            ms: vec![],
        };
        let stated = d1s_stated(&shape).unwrap();
        let mut x_val = NormalPoly::word(Word::from_str_letters("xy").unwrap());
        x_val.add_monomial(Word::from_str_letters("yx").unwrap(), si(-1));
        assert_eq!(stated.value(GEN_X.index), &x_val);
        assert!(stated.value(GEN_Y.index).is_zero());
        let z_val = NormalPoly::word(Word::from_str_letters("yz").unwrap()).neg();
        assert_eq!(stated.value(GEN_Z.index), &z_val);
    }
}
