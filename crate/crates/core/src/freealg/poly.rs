//! Linear combinations of words and reduction to normal form modulo the
//! relations `x^2 + yx`, `xz`, `zy`.
//!
//! The Groebner basis for the graded-lex order with `z < y < x` is
//! `{x y^n x + y^{n+1} x, xz, zy}`, so reduction replaces `x y^n x` by
//! `-y^{n+1} x` and kills `xz`, `zy`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::word::Word;

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub fn scalar_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn scalar_ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formal linear combination of arbitrary words, prior to reduction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, Scalar>,
}

/// Linear combination of normal-form monomials; the canonical representation
/// of an element of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord)]
pub struct NormalPoly {
    terms: BTreeMap<Word, Scalar>,
}

fn add_term(terms: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(w) {
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

impl FreePoly {
    pub fn zero() -> FreePoly {
        FreePoly::default()
    }

    pub fn monomial(w: Word, c: Scalar) -> FreePoly {
        let mut p = FreePoly::zero();
        p.add(w, c);
        p
    }

    pub fn add(&mut self, w: Word, c: Scalar) {
        add_term(&mut self.terms, w, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// One reduction step on the leftmost forbidden factor of the chosen
    /// monomial; `None` when every monomial is already normal.
    fn reduce_once(&self, rightmost: bool) -> Option<FreePoly> {
        // reduce the graded-lex-greatest reducible monomial
        let target = self
            .terms
            .iter()
            .rev()
            .find(|(w, _)| !w.is_normal())
            .map(|(w, c)| (w.clone(), c.clone()))?;
        let (w, c) = target;
        let run = if rightmost {
            w.last_reducible_run().unwrap()
        } else {
            w.first_reducible_run().unwrap()
        };
        let mut out = self.clone();
        out.terms.remove(&w);
        if let Some((repl, neg)) = w.reduce_at_run(run) {
            out.add(repl, if neg { -c } else { c });
        }
        Some(out)
    }

    /// Full reduction, choosing the leftmost or rightmost factor in each step.
    pub fn reduce_with_strategy(&self, rightmost: bool) -> NormalPoly {
        let mut p = self.clone();
        while let Some(next) = p.reduce_once(rightmost) {
            p = next;
        }
        NormalPoly { terms: p.terms }
    }
}

impl NormalPoly {
    pub fn zero() -> NormalPoly {
        NormalPoly::default()
    }

    pub fn one() -> NormalPoly {
        NormalPoly::monomial(Word::one(), Scalar::one())
    }

    /// Wrap a monomial known to be normal.
    pub fn monomial(w: Word, c: Scalar) -> NormalPoly {
        debug_assert!(w.is_normal(), "{w} is not a normal word");
        let mut terms = BTreeMap::new();
        add_term(&mut terms, w, c);
        NormalPoly { terms }
    }

    pub fn word(w: Word) -> NormalPoly {
        NormalPoly::monomial(w, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_assign(&mut self, other: &NormalPoly) {
        for (w, c) in other.terms() {
            add_term(&mut self.terms, w.clone(), c.clone());
        }
    }

    pub fn add_monomial(&mut self, w: Word, c: Scalar) {
        debug_assert!(w.is_normal(), "{w} is not a normal word");
        add_term(&mut self.terms, w, c);
    }

    pub fn sub(&self, other: &NormalPoly) -> NormalPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            add_term(&mut out.terms, w.clone(), -c.clone());
        }
        out
    }

    pub fn sum(&self, other: &NormalPoly) -> NormalPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> NormalPoly {
        if c.is_zero() {
            return NormalPoly::zero();
        }
        NormalPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> NormalPoly {
        NormalPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), -a)).collect(),
        }
    }

    pub fn to_free(&self) -> FreePoly {
        FreePoly {
            terms: self.terms.clone(),
        }
    }

    /// Weight shared by every monomial, when homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|v| v.weight() == w).then_some(w)
    }

    /// The weight-`w` part.
    pub fn weight_component(&self, w: u32) -> NormalPoly {
        NormalPoly {
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| v.weight() == w)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|w| w.weight()).max()
    }
}

/// Normal form of a free-algebra element; total, linear, idempotent.
///
/// Worklist reduction: each word rewrites to at most one signed word, so the
/// queue never grows, and every step strictly decreases the graded-lex order
/// at fixed weight.
pub fn normal_form(p: &FreePoly) -> NormalPoly {
    let mut out = BTreeMap::new();
    let mut work: Vec<(Word, Scalar)> = p
        .terms
        .iter()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    while let Some((w, c)) = work.pop() {
        match w.first_reducible_run() {
            None => add_term(&mut out, w, c),
            Some(i) => {
                if let Some((repl, neg)) = w.reduce_at_run(i) {
                    work.push((repl, if neg { -c } else { c }));
                }
            }
        }
    }
    NormalPoly { terms: out }
}

/// Normal form of a single word (coefficient 1).
pub fn normal_form_word(w: &Word) -> NormalPoly {
    normal_form(&FreePoly::monomial(w.clone(), Scalar::one()))
}

/// Product in `A`: concatenate and reduce.
pub fn multiply(a: &NormalPoly, b: &NormalPoly) -> NormalPoly {
    let mut acc = FreePoly::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            acc.add(wa.concat(wb), ca * cb);
        }
    }
    normal_form(&acc)
}

/// Product of a normal word with a polynomial on the chosen side.
pub fn mul_word_left(w: &Word, p: &NormalPoly) -> NormalPoly {
    let mut acc = FreePoly::zero();
    for (v, c) in p.terms() {
        acc.add(w.concat(v), c.clone());
    }
    normal_form(&acc)
}

pub fn mul_word_right(p: &NormalPoly, w: &Word) -> NormalPoly {
    let mut acc = FreePoly::zero();
    for (v, c) in p.terms() {
        acc.add(v.concat(w), c.clone());
    }
    normal_form(&acc)
}

fn fmt_terms(terms: &BTreeMap<Word, Scalar>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    // print graded-lex descending, matching the tables' leading-term-first style
    for (i, (w, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if abs.is_one() && !w.is_one() {
            write!(f, "{w}")?;
        } else if w.is_one() {
            write!(f, "{abs}")?;
        } else {
            write!(f, "{abs}*{w}")?;
        }
    }
    Ok(())
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.terms, f)
    }
}

impl fmt::Display for NormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.terms, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::word::Letter;
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    fn nf(s: &str) -> NormalPoly {
        normal_form_word(&w(s))
    }

    #[test]
    fn relation_rewrites() {
        assert!(nf("xz").is_zero());
        assert!(nf("zy").is_zero());
        assert_eq!(nf("xx"), NormalPoly::monomial(w("yx"), scalar_int(-1)));
        assert_eq!(nf("xyx"), NormalPoly::monomial(w("yyx"), scalar_int(-1)));
        assert_eq!(nf("yx"), NormalPoly::word(w("yx")));
    }

    #[test]
    fn products() {
        let x = NormalPoly::word(Word::letter(Letter::X));
        let z = NormalPoly::word(Word::letter(Letter::Z));
        let y = NormalPoly::word(Word::letter(Letter::Y));
        assert!(multiply(&x, &z).is_zero());
        assert_eq!(multiply(&y, &x), NormalPoly::word(w("yx")));
        let yx = NormalPoly::word(w("yx"));
        assert_eq!(
            multiply(&x, &yx),
            NormalPoly::monomial(w("yyx"), scalar_int(-1))
        );
        // (x+y)x = 0 in A
        let xpy = x.sum(&y);
        assert!(multiply(&xpy, &x).is_zero());
    }

    #[test]
    fn nested_reduction() {
        // x y x y x: reduce leftmost -> -y^2 x y x -> +y^2 y^2 x = y^4 x
        assert_eq!(nf("xyxyx"), NormalPoly::word(w("yyyyx")));
        // z x y^2 x -> -z y^3 x -> 0 (zy)
        assert!(nf("zxyyx").is_zero());
        // x^4 = (x^2)^2 = (yx)(yx) = y(xyx) = -y^3 x
        assert_eq!(nf("xxxx"), NormalPoly::monomial(w("yyyx"), scalar_int(-1)));
    }

    #[test]
    fn strategies_agree() {
        for s in ["xyxyx", "xxzyx", "xyzxx", "zzyxy", "xyxzx", "xxxx"] {
            let p = FreePoly::monomial(w(s), scalar_int(1));
            assert_eq!(
                p.reduce_with_strategy(false),
                p.reduce_with_strategy(true),
                "{s}"
            );
            assert_eq!(p.reduce_with_strategy(false), normal_form(&p), "{s}");
        }
    }
}
