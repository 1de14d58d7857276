//! The reduced two-sided bar resolution, the comparison morphisms between it
//! and the Koszul resolution, transported cochains with their circle
//! product, and the induced map on Hochschild chains.
//!
//! Interior tensor factors are positive-weight basis monomials; any tensor
//! with a unit interior factor is identically zero (reduced convention), and
//! transported cochains extend by zero on such tensors (normalized
//! convention).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::freealg::{
    mul_word_left, mul_word_right, multiply, normal_form_word, Letter, NormalPoly, Scalar, Word,
};
use crate::koszul::{
    xpy, BimodElem, KoszulChain, KoszulCochain, KoszulGen, GEN_ONE, GEN_X, GEN_XX, GEN_XXZ,
    GEN_XXZY, GEN_XZ, GEN_XZY, GEN_Y, GEN_Z, GEN_ZY,
};

/// Element of the reduced two-sided bar resolution `A (x) Abar^n (x) A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarElem {
    pub degree: usize,
    terms: BTreeMap<(Word, Vec<Word>, Word), Scalar>,
}

impl BarElem {
    pub fn zero(degree: usize) -> BarElem {
        BarElem {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) u_1 (x) ... (x) u_n (x) 1`; zero if any factor has weight 0.
    pub fn tensor(interior: Vec<Word>) -> BarElem {
        let mut e = BarElem::zero(interior.len());
        e.add_words(Word::one(), interior, Word::one(), Scalar::one());
        e
    }

    pub fn add_words(&mut self, l: Word, interior: Vec<Word>, r: Word, c: Scalar) {
        debug_assert_eq!(interior.len(), self.degree);
        debug_assert!(interior.iter().all(|u| u.is_normal()));
        if c.is_zero() || interior.iter().any(|u| u.is_one()) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((l, interior, r)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Add with polynomial outer coefficients, expanding multilinearly.
    pub fn add(&mut self, l: &NormalPoly, interior: &[Word], r: &NormalPoly, c: &Scalar) {
        for (lw, lc) in l.terms() {
            for (rw, rc) in r.terms() {
                self.add_words(lw.clone(), interior.to_vec(), rw.clone(), lc * rc * c);
            }
        }
    }

    /// Add expanding one interior slot given as a polynomial.
    fn add_interior_poly(
        &mut self,
        l: &Word,
        before: &[Word],
        slot: &NormalPoly,
        after: &[Word],
        r: &Word,
        c: &Scalar,
    ) {
        for (w, wc) in slot.terms() {
            let mut interior = Vec::with_capacity(before.len() + 1 + after.len());
            interior.extend_from_slice(before);
            interior.push(w.clone());
            interior.extend_from_slice(after);
            self.add_words(l.clone(), interior, r.clone(), wc * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Vec<Word>, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn sub(&self, other: &BarElem) -> BarElem {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for ((l, u, r), c) in &other.terms {
            out.add_words(l.clone(), u.clone(), r.clone(), -c.clone());
        }
        out
    }
}

/// Bar differential `B_n -> B_{n-1}`,
/// `sum_i (-1)^i a_0 (x) ... (x) u_i u_{i+1} (x) ... (x) a_{n+1}`.
pub fn bar_diff(e: &BarElem) -> BarElem {
    assert!(e.degree >= 1);
    let n = e.degree;
    let mut out = BarElem::zero(n - 1);
    for ((l, u, r), c) in e.terms() {
        // i = 0: merge into the left coefficient
        let lm = mul_word_right(&NormalPoly::word(l.clone()), &u[0]);
        out.add(&lm, &u[1..], &NormalPoly::word(r.clone()), c);
        // interior merges
        for i in 1..n {
            let prod = normal_form_word(&u[i - 1].concat(&u[i]));
            let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_interior_poly(l, &u[..i - 1], &prod, &u[i + 1..], r, &sign);
        }
        // i = n: merge into the right coefficient
        let rm = mul_word_left(&u[n - 1], &NormalPoly::word(r.clone()));
        let sign = if n.is_multiple_of(2) {
            c.clone()
        } else {
            -c.clone()
        };
        out.add(&NormalPoly::word(l.clone()), &u[..n - 1], &rm, &sign);
    }
    out
}

/// Comparison morphism `iota : K_n -> B_n`; the generator expands into its
/// letter words with unit outer coefficients.
pub fn iota(g: KoszulGen) -> BarElem {
    let mut out = BarElem::zero(g.degree as usize);
    for lw in g.letter_words() {
        let interior: Vec<Word> = lw.into_iter().map(Word::letter).collect();
        out.add_words(Word::one(), interior, Word::one(), Scalar::one());
    }
    out
}

/// `iota` applied to a full bimodule element.
pub fn iota_elem(e: &BimodElem) -> BarElem {
    let mut out = BarElem::zero(e.degree as usize);
    for ((l, g, r), c) in e.terms() {
        for ((il, u, ir), ic) in iota(KoszulGen::new(e.degree, *g)).terms() {
            let nl = mul_word_right(&NormalPoly::word(l.clone()), il);
            let nr = mul_word_left(ir, &NormalPoly::word(r.clone()));
            out.add(&nl, u, &nr, &(c * ic));
        }
    }
    out
}

// ---- word-shape helpers for the pattern rules of pi ----

/// `u = y^k x rest` with the shown `x` the first non-`y` letter.
fn split_yx_prefix(u: &Word) -> Option<(u32, Word)> {
    let runs = u.runs();
    match runs.first() {
        Some(&(Letter::Y, k)) => match runs.get(1) {
            Some(&(Letter::X, _)) => Some((k, u.slice(k + 1, u.weight()))),
            _ => None,
        },
        Some(&(Letter::X, _)) => Some((0, u.slice(1, u.weight()))),
        _ => None,
    }
}

/// `u = prefix x y^j` with the shown `y^j` the trailing y-run (possibly
/// empty) and `x` the last non-`y` letter.
fn split_xy_suffix(u: &Word) -> Option<(Word, u32)> {
    let runs = u.runs();
    let (last, j) = match runs.last() {
        Some(&(Letter::Y, j)) => (runs.len().checked_sub(2)?, j),
        Some(_) => (runs.len() - 1, 0),
        None => return None,
    };
    match runs.get(last) {
        Some(&(Letter::X, _)) => {
            let cut = u.weight() - j - 1;
            Some((u.slice(0, cut), j))
        }
        _ => None,
    }
}

/// `u = y^{k0} x y^{j1}` exactly (a single x, no z).
fn pure_yxy(u: &Word) -> Option<(u32, u32)> {
    let (prefix, j1) = split_xy_suffix(u)?;
    match prefix.runs() {
        [] => Some((0, j1)),
        [(Letter::Y, k)] => Some((*k, j1)),
        _ => None,
    }
}

/// `u = a' z x y^{j1}` with the shown `z` the last z of `u`.
fn ends_zxy(u: &Word) -> Option<(Word, u32)> {
    let (prefix, j1) = split_xy_suffix(u)?;
    if prefix.last_letter() == Some(Letter::Z) {
        Some((prefix.slice(0, prefix.weight() - 1), j1))
    } else {
        None
    }
}

/// `u = z x y^j` exactly.
fn is_zxy(u: &Word) -> Option<u32> {
    let (a, j) = ends_zxy(u)?;
    a.is_one().then_some(j)
}

/// `u = y^l x` exactly.
fn is_yx(u: &Word) -> Option<u32> {
    let (k, rest) = split_yx_prefix(u)?;
    rest.is_one().then_some(k)
}

fn poly_pow(base: &NormalPoly, k: u32) -> NormalPoly {
    let mut acc = NormalPoly::one();
    for _ in 0..k {
        acc = multiply(&acc, base);
    }
    acc
}

/// Comparison morphism `pi : B_n -> K_n` on a single reduced tensor
/// `1 (x) u_1 (x) ... (x) u_n (x) 1`; tensors matching no pattern map to 0.
pub fn pi_tensor(interior: &[Word]) -> BimodElem {
    let n = interior.len();
    let mut out = BimodElem::zero(n as u8);
    match interior {
        [] => {
            out.add_words(Word::one(), GEN_ONE.index, Word::one(), Scalar::one());
        }
        [u] => {
            // split at every letter
            let w = u.weight();
            for i in 0..w {
                let prefix = u.slice(0, i);
                let letter = u.slice(i, i + 1);
                let suffix = u.slice(i + 1, w);
                let gen = match letter.first_letter().unwrap() {
                    Letter::X => GEN_X,
                    Letter::Y => GEN_Y,
                    Letter::Z => GEN_Z,
                };
                out.add_words(prefix, gen.index, suffix, Scalar::one());
            }
        }
        [u1, u2] => {
            if u2.first_letter() == Some(Letter::Z) && u1.last_letter() == Some(Letter::X) {
                // a x (x) z b -> a (x) xz (x) b
                out.add_words(
                    u1.slice(0, u1.weight() - 1),
                    GEN_XZ.index,
                    u2.slice(1, u2.weight()),
                    Scalar::one(),
                );
            } else if u2.first_letter() == Some(Letter::Y) && u1.last_letter() == Some(Letter::Z) {
                // a' z (x) y b' -> a' (x) zy (x) b'
                out.add_words(
                    u1.slice(0, u1.weight() - 1),
                    GEN_ZY.index,
                    u2.slice(1, u2.weight()),
                    Scalar::one(),
                );
            } else if let Some((l, b2)) = split_yx_prefix(u2) {
                let k1_from = |j1: u32| j1 + l;
                if let Some((k0, j1)) = pure_yxy(u1) {
                    // y^{k0} x y^{j1} (x) y^{l} x b''
                    let k1 = k1_from(j1);
                    let ypow = Word::power(Letter::Y, k0);
                    let lead = mul_word_left(&ypow, &poly_pow(&xpy(), k1));
                    out.add(
                        &lead,
                        GEN_XX.index,
                        &NormalPoly::word(b2.clone()),
                        &Scalar::one(),
                    );
                    for i in 0..k1 {
                        let li = mul_word_left(&ypow, &poly_pow(&xpy(), i));
                        let tail = Word::power(Letter::Y, k1 - i - 1)
                            .concat(&Word::letter(Letter::X))
                            .concat(&b2);
                        out.add(
                            &li,
                            GEN_XX.index,
                            &NormalPoly::word(tail),
                            &(-Scalar::one()),
                        );
                    }
                } else if let Some((aprime, j1)) = ends_zxy(u1) {
                    // a' z x y^{j1} (x) y^{l} x b''
                    let k1 = k1_from(j1);
                    let tail0 = Word::power(Letter::Y, k1)
                        .concat(&Word::letter(Letter::X))
                        .concat(&b2);
                    out.add_words(aprime.clone(), GEN_ZY.index, tail0, -Scalar::one());
                    let az = aprime.concat(&Word::letter(Letter::Z));
                    let lead = mul_word_left(&az, &poly_pow(&xpy(), k1));
                    out.add(
                        &lead,
                        GEN_XX.index,
                        &NormalPoly::word(b2.clone()),
                        &Scalar::one(),
                    );
                    for i in 0..k1 {
                        let li = mul_word_left(&az, &poly_pow(&xpy(), i));
                        let tail = Word::power(Letter::Y, k1 - i - 1)
                            .concat(&Word::letter(Letter::X))
                            .concat(&b2);
                        out.add(
                            &li,
                            GEN_XX.index,
                            &NormalPoly::word(tail),
                            &(-Scalar::one()),
                        );
                    }
                }
            }
        }
        [u1, u2, u3] => {
            if u3.first_letter() == Some(Letter::Z) {
                // a x y^{j1} (x) y^{k1-j1} x (x) z b -> a (x+y)^{k1} (x) (x+y)xz (x) b
                if let (Some((a, j1)), Some(l)) = (split_xy_suffix(u1), is_yx(u2)) {
                    let k1 = j1 + l;
                    let lead = mul_word_left(&a, &poly_pow(&xpy(), k1));
                    out.add(
                        &lead,
                        GEN_XXZ.index,
                        &NormalPoly::word(u3.slice(1, u3.weight())),
                        &Scalar::one(),
                    );
                }
            } else if u1.last_letter() == Some(Letter::X) {
                let a = u1.slice(0, u1.weight() - 1);
                if u2.weight() == 1 && u2.first_letter() == Some(Letter::Z) {
                    // a x (x) z (x) y b' -> a (x) xzy (x) b'
                    if u3.first_letter() == Some(Letter::Y) {
                        out.add_words(a, GEN_XZY.index, u3.slice(1, u3.weight()), Scalar::one());
                    }
                } else if let Some(j1) = is_zxy(u2) {
                    // a x (x) z x y^{j1} (x) y^{k1-j1} x b'' -> -a (x) xzy (x) y^{k1} x b''
                    if let Some((l, b2)) = split_yx_prefix(u3) {
                        let tail = Word::power(Letter::Y, j1 + l)
                            .concat(&Word::letter(Letter::X))
                            .concat(&b2);
                        out.add_words(a, GEN_XZY.index, tail, -Scalar::one());
                    }
                }
            }
        }
        [u1, u2, u3, u4] => {
            if let (Some((a, j1)), Some(l)) = (split_xy_suffix(u1), is_yx(u2)) {
                let k1 = j1 + l;
                if u3.weight() == 1 && u3.first_letter() == Some(Letter::Z) {
                    // ... (x) z (x) y b
                    if u4.first_letter() == Some(Letter::Y) {
                        let lead = mul_word_left(&a, &poly_pow(&xpy(), k1));
                        out.add(
                            &lead,
                            GEN_XXZY.index,
                            &NormalPoly::word(u4.slice(1, u4.weight())),
                            &Scalar::one(),
                        );
                    }
                } else if let Some(j2) = is_zxy(u3) {
                    // ... (x) z x y^{j2} (x) y^{k2-j2} x b'; the sign is
                    // negative like the arity-3 z x y rule (the chain-map
                    // property forces it, the displayed rule drops it)
                    if let Some((l2, b2)) = split_yx_prefix(u4) {
                        let lead = mul_word_left(&a, &poly_pow(&xpy(), k1));
                        let tail = Word::power(Letter::Y, j2 + l2)
                            .concat(&Word::letter(Letter::X))
                            .concat(&b2);
                        out.add(
                            &lead,
                            GEN_XXZY.index,
                            &NormalPoly::word(tail),
                            &(-Scalar::one()),
                        );
                    }
                }
            }
        }
        _ => {} // K_n = 0 for n >= 5
    }
    out
}

/// `pi` on a full bar element (A-bilinear extension).
pub fn pi(e: &BarElem) -> BimodElem {
    let n = e.degree.min(5) as u8;
    let mut out = BimodElem::zero(if e.degree <= 4 { n } else { 0 });
    if e.degree > 4 {
        return out;
    }
    for ((l, u, r), c) in e.terms() {
        let base = pi_tensor(u);
        for ((bl, g, br), bc) in base.terms() {
            let nl = mul_word_left(l, &NormalPoly::word(bl.clone()));
            let nr = mul_word_right(&NormalPoly::word(br.clone()), r);
            out.add(&nl, *g, &nr, &(c * bc));
        }
    }
    out
}

/// A Koszul cochain transported to the bar complex: evaluation is
/// `u_1 (x) ... (x) u_m -> (f . pi_m)(1 (x) u .. (x) 1)` with the bimodule
/// action folded in.
#[derive(Debug, Clone)]
pub struct BarCochain {
    pub base: KoszulCochain,
}

impl BarCochain {
    pub fn degree(&self) -> usize {
        self.base.degree as usize
    }

    /// Evaluate on a tensor of basis monomials; tensors with a unit factor
    /// give 0 (normalized convention).
    pub fn eval(&self, args: &[Word]) -> NormalPoly {
        assert_eq!(args.len(), self.degree(), "arity mismatch");
        if args.iter().any(|u| u.is_one()) {
            return NormalPoly::zero();
        }
        let mut out = NormalPoly::zero();
        for ((l, g, r), c) in pi_tensor(args).terms() {
            let v = mul_word_right(&mul_word_left(l, self.base.value(*g)), r);
            out.add_assign(&v.scale(c));
        }
        out
    }

    /// Evaluate multilinearly with one polynomial slot inserted.
    fn eval_with_insert(&self, before: &[Word], mid: &NormalPoly, after: &[Word]) -> NormalPoly {
        let mut out = NormalPoly::zero();
        for (w, c) in mid.terms() {
            if w.is_one() {
                continue; // normalized extension drops unit factors
            }
            let mut args = Vec::with_capacity(before.len() + 1 + after.len());
            args.extend_from_slice(before);
            args.push(w.clone());
            args.extend_from_slice(after);
            out.add_assign(&self.eval(&args).scale(c));
        }
        out
    }
}

/// Transport a Koszul cochain to the bar side.
pub fn transport(f: &KoszulCochain) -> BarCochain {
    BarCochain { base: f.clone() }
}

/// Circle product `(f o g)(a_1 .. a_{m+n-1}) =
/// sum_i (-1)^{(n-1)(i-1)} f(.. g(a_i .. a_{i+n-1}) ..)`.
pub fn circle_eval(f: &BarCochain, g: &BarCochain, args: &[Word]) -> NormalPoly {
    let m = f.degree();
    let n = g.degree();
    assert!(m >= 1, "circle product needs arity at least 1 on the left");
    assert_eq!(args.len(), m + n - 1, "arity mismatch");
    let mut out = NormalPoly::zero();
    for i in 0..m {
        let inner = g.eval(&args[i..i + n]);
        if inner.is_zero() {
            continue;
        }
        let v = f.eval_with_insert(&args[..i], &inner, &args[i + n..]);
        let sign_neg = (n as i64 - 1) * (i as i64) % 2 != 0;
        out.add_assign(&if sign_neg { v.neg() } else { v });
    }
    out
}

/// Graded commutator `[F, G] = F o G - (-1)^{(m-1)(n-1)} G o F` evaluated on
/// one tensor.
pub fn commutator_eval(f: &BarCochain, g: &BarCochain, args: &[Word]) -> NormalPoly {
    let m = f.degree();
    let n = g.degree();
    let mut out = circle_eval(f, g, args);
    let gf = circle_eval(g, f, args);
    let sign_neg = ((m as i64 - 1) * (n as i64 - 1)) % 2 != 0;
    out.add_assign(&if sign_neg { gf } else { gf.neg() });
    out
}

/// The Gerstenhaber bracket transported back to Koszul cochains:
/// `[f, g] = iota^*([pi^* f, pi^* g])`.
pub fn bar_bracket_on_koszul(f: &KoszulCochain, g: &KoszulCochain) -> KoszulCochain {
    let m = f.degree as usize;
    let n = g.degree as usize;
    let target = m + n - 1;
    assert!(target <= 4, "bracket target degree exceeds 4");
    let tf = transport(f);
    let tg = transport(g);
    let mut out = KoszulCochain::zero(target as u8);
    for gen in KoszulGen::all(target as u8) {
        let mut val = NormalPoly::zero();
        for lw in gen.letter_words() {
            let args: Vec<Word> = lw.into_iter().map(Word::letter).collect();
            val.add_assign(&commutator_eval(&tf, &tg, &args));
        }
        out.set_value(gen.index, val);
    }
    out
}

/// Hochschild chain of the bar complex, `a_0 (x) u_1 (x) ... (x) u_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochBarChain {
    pub degree: usize,
    terms: BTreeMap<(Word, Vec<Word>), Scalar>,
}

impl HochBarChain {
    pub fn zero(degree: usize) -> HochBarChain {
        HochBarChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_words(&mut self, a0: Word, interior: Vec<Word>, c: Scalar) {
        debug_assert_eq!(interior.len(), self.degree);
        if c.is_zero() || interior.iter().any(|u| u.is_one()) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a0, interior)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Vec<Word>), &Scalar)> {
        self.terms.iter()
    }
}

/// Induced map `p` on Hochschild chains in degrees 0 and 1: `p_0 = id` and
/// `p_1(a (x) a_1..a_n) = sum_i a_{i+1,n} a a_{1,i-1} (x) a_i`.
pub fn induced_p_on_chains(c: &HochBarChain) -> KoszulChain {
    match c.degree {
        0 => {
            let mut out = KoszulChain::zero(0);
            for ((a0, _), coef) in c.terms() {
                out.add_word(a0.clone(), 0, coef.clone());
            }
            out
        }
        1 => {
            let mut out = KoszulChain::zero(1);
            for ((a0, u), coef) in c.terms() {
                let w = &u[0];
                let len = w.weight();
                for i in 0..len {
                    let prefix = w.slice(0, i);
                    let letter = w.slice(i, i + 1);
                    let suffix = w.slice(i + 1, len);
                    let gen = match letter.first_letter().unwrap() {
                        Letter::X => GEN_X,
                        Letter::Y => GEN_Y,
                        Letter::Z => GEN_Z,
                    };
                    // a_{i+1,n} . a . a_{1,i-1}
                    let coeff_word = mul_word_left(
                        &suffix,
                        &mul_word_right(&NormalPoly::word(a0.clone()), &prefix),
                    );
                    out.add(&coeff_word, gen.index, coef);
                }
            }
            out
        }
        d => panic!("p_{d} is not part of the calculus (only degrees 0 and 1)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar_int as si;

    fn word(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    #[test]
    fn iota_examples() {
        // iota_2(1 (x) xz (x) 1) = 1 | x | z | 1
        let e = iota(GEN_XZ);
        let mut expect = BarElem::zero(2);
        expect.add_words(Word::one(), vec![word("x"), word("z")], Word::one(), si(1));
        assert_eq!(e, expect);
        // iota_4 expands (x+y) into two tensors
        let e = iota(GEN_XXZY);
        assert_eq!(e.terms().count(), 2);
        // iota_1 is the identity-like inclusion
        let e = iota(GEN_Y);
        let mut expect = BarElem::zero(1);
        expect.add_words(Word::one(), vec![word("y")], Word::one(), si(1));
        assert_eq!(e, expect);
    }

    #[test]
    fn pi_degree1_splits_letters() {
        // pi_1(1 | yx | 1) = y (x) x (x) 1 + 1 (x) y (x) x
        let d = pi_tensor(&[word("yx")]);
        let mut expect = BimodElem::zero(1);
        expect.add_words(word("y"), GEN_X.index, Word::one(), si(1));
        expect.add_words(Word::one(), GEN_Y.index, word("x"), si(1));
        assert_eq!(d, expect);
    }

    #[test]
    fn pi_degree2_patterns() {
        // pi_2(1 | x | z | 1) = 1 (x) xz (x) 1
        let d = pi_tensor(&[word("x"), word("z")]);
        let mut expect = BimodElem::zero(2);
        expect.add_words(Word::one(), GEN_XZ.index, Word::one(), si(1));
        assert_eq!(d, expect);
        // pi_2(1 | x | x | 1) = 1 (x) (x+y)x (x) 1
        let d = pi_tensor(&[word("x"), word("x")]);
        let mut expect = BimodElem::zero(2);
        expect.add_words(Word::one(), GEN_XX.index, Word::one(), si(1));
        assert_eq!(d, expect);
        // unmatched: pi_2(1 | y | y | 1) = 0
        assert!(pi_tensor(&[word("y"), word("y")]).is_zero());
    }

    #[test]
    fn pi_degree3_unmatched_vanishes() {
        assert!(pi_tensor(&[word("y"), word("y"), word("y")]).is_zero());
    }

    #[test]
    fn retraction_on_generators() {
        use crate::koszul::MAX_DEGREE;
        for deg in 0..=MAX_DEGREE {
            for g in KoszulGen::all(deg) {
                let back = pi(&iota(g));
                assert_eq!(back, BimodElem::generator(g), "pi . iota != id at {g}");
            }
        }
    }

    #[test]
    fn transport_examples() {
        use crate::paperdata::{instantiate, ClassLabel, Family};
        // transport(A^{-1}) at x -> x; at yx -> 2yx
        let a = instantiate(&ClassLabel::plain(Family::Am1))
            .unwrap()
            .cochain();
        let t = transport(&a);
        assert_eq!(t.eval(&[word("x")]), NormalPoly::word(word("x")));
        assert_eq!(
            t.eval(&[word("yx")]),
            NormalPoly::word(word("yx")).scale(&si(2))
        );
    }

    #[test]
    fn bracket_simple_rows() {
        use crate::paperdata::{instantiate, ClassLabel, Family};
        let a = instantiate(&ClassLabel::plain(Family::Am1))
            .unwrap()
            .cochain();
        // [A, A] = 0 identically
        let br = bar_bracket_on_koszul(&a, &a);
        assert!(br.is_zero());
        // [A, B(n)] = n B(n) exactly
        for n in 1..=3 {
            let b = instantiate(&ClassLabel::with_ns(Family::Bm1, vec![n]))
                .unwrap()
                .cochain();
            let br = bar_bracket_on_koszul(&a, &b);
            assert_eq!(br, b.scale(&si(n)), "n = {n}");
        }
    }

    #[test]
    fn p1_examples() {
        // p1(1 | yx) = x (x) y + y (x) x
        let mut c = HochBarChain::zero(1);
        c.add_words(Word::one(), vec![word("yx")], si(1));
        let p = induced_p_on_chains(&c);
        let mut expect = KoszulChain::zero(1);
        expect.add_word(word("x"), GEN_Y.index, si(1));
        expect.add_word(word("y"), GEN_X.index, si(1));
        assert_eq!(p, expect);
        // p1(1 | x) = 1 (x) x
        let mut c = HochBarChain::zero(1);
        c.add_words(Word::one(), vec![word("x")], si(1));
        let p = induced_p_on_chains(&c);
        let mut expect = KoszulChain::zero(1);
        expect.add_word(Word::one(), GEN_X.index, si(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn bar_differential_squares_to_zero() {
        for interior in [
            vec![word("x"), word("z"), word("y")],
            vec![word("yx"), word("zx"), word("y")],
            vec![word("xy"), word("yz"), word("zz"), word("x")],
        ] {
            let e = BarElem::tensor(interior);
            let dd = bar_diff(&bar_diff(&e));
            assert!(dd.is_zero());
        }
    }

    #[test]
    fn pi_is_chain_map_spot_checks() {
        use crate::koszul::resolution_diff;
        // d . pi = pi . d on a sample of 2- and 3-tensors
        for interior in [
            vec![word("yx"), word("x")],
            vec![word("x"), word("zx")],
            vec![word("xy"), word("yx")],
            vec![word("zz"), word("y")],
            vec![word("x"), word("z"), word("yy")],
            vec![word("yx"), word("x"), word("z")],
            vec![word("x"), word("zxy"), word("yxy")],
        ] {
            let e = BarElem::tensor(interior.clone());
            let lhs = resolution_diff(&pi(&e));
            let rhs = pi(&bar_diff(&e));
            assert_eq!(lhs, rhs, "chain map fails at {interior:?}");
        }
    }
}
