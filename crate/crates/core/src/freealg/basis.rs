//! Enumeration of the monomial basis of `A` by weight, and the
//! classification of basis monomials into the eighteen parametric families.
//!
//! A normal word decomposes uniquely as
//!
//! ```text
//!   prefix  ( z^{m_1} x y^{n_2} z^{m_2} ... x y^{n_p} z^{m_p} )  suffix
//! ```
//!
//! with prefix one of `y^{n0} x y^{n1}`, `x y^{n1}`, `y^{n1}`, `1` and suffix
//! one of `1`, `x`, `x y^{n_{p+1}}`; words without `z` have at most one `x`.

use std::fmt;

use super::word::{Letter, Word};

/// A basis monomial together with its family id and exponent parameters.
///
/// `ns` and `ms` hold the `n_i` and `m_j` exponents in reading order; which
/// indices are populated depends on the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedMonomial {
    pub type_id: u8,
    pub ns: Vec<u32>,
    pub ms: Vec<u32>,
}

impl TypedMonomial {
    /// Rebuild the word this classification describes.
    pub fn expand(&self) -> Word {
        let mut w = Word::one();
        let ns = &self.ns;
        let ms = &self.ms;
        let p = ms.len();
        // interior z-block run: z^{m_1} x y^{n_2} ... x y^{n_p} z^{m_p},
        // where the leading y-exponents of ns occupy positions before n_2.
        let push_zblocks = |w: &mut Word, ns_inner: &[u32]| {
            debug_assert_eq!(ns_inner.len() + 1, p);
            for i in 0..p {
                if i > 0 {
                    w.push(Letter::X, 1);
                    w.push(Letter::Y, ns_inner[i - 1]);
                }
                w.push(Letter::Z, ms[i]);
            }
        };
        match self.type_id {
            0 => {}
            1 => w.push(Letter::Y, ns[0]),
            2 => {
                w.push(Letter::Y, ns[0]);
                w.push(Letter::X, 1);
            }
            3 => {
                w.push(Letter::Y, ns[0]);
                w.push(Letter::X, 1);
                w.push(Letter::Y, ns[1]);
            }
            7 => w.push(Letter::X, 1),
            8 => {
                w.push(Letter::X, 1);
                w.push(Letter::Y, ns[0]);
            }
            4..=6 => {
                w.push(Letter::Y, ns[0]);
                w.push(Letter::X, 1);
                w.push(Letter::Y, ns[1]);
                push_zblocks(&mut w, &ns[2..p + 1]);
                if self.type_id >= 5 {
                    w.push(Letter::X, 1);
                }
                if self.type_id == 6 {
                    w.push(Letter::Y, ns[p + 1]);
                }
            }
            9..=11 => {
                w.push(Letter::X, 1);
                w.push(Letter::Y, ns[0]);
                push_zblocks(&mut w, &ns[1..p]);
                if self.type_id >= 10 {
                    w.push(Letter::X, 1);
                }
                if self.type_id == 11 {
                    w.push(Letter::Y, ns[p]);
                }
            }
            12..=14 => {
                w.push(Letter::Y, ns[0]);
                push_zblocks(&mut w, &ns[1..p]);
                if self.type_id >= 13 {
                    w.push(Letter::X, 1);
                }
                if self.type_id == 14 {
                    w.push(Letter::Y, ns[p]);
                }
            }
            15..=17 => {
                push_zblocks(&mut w, &ns[..p - 1]);
                if self.type_id >= 16 {
                    w.push(Letter::X, 1);
                }
                if self.type_id == 17 {
                    w.push(Letter::Y, ns[p - 1]);
                }
            }
            t => panic!("invalid type id {t}"),
        }
        w
    }

    /// Classify a normal word.
    pub fn classify(w: &Word) -> TypedMonomial {
        assert!(w.is_normal(), "{w} is not a basis monomial");
        let runs = w.runs();
        if runs.is_empty() {
            return TypedMonomial {
                type_id: 0,
                ns: vec![],
                ms: vec![],
            };
        }
        let has_z = runs.iter().any(|&(l, _)| l == Letter::Z);
        if !has_z {
            // at most one x: patterns y^a, y^a x, y^a x y^b, x, x y^b
            let mut ns = Vec::new();
            let mut has_x = false;
            let mut leading_y = 0;
            let mut trailing_y = 0;
            for &(l, k) in runs {
                match l {
                    Letter::Y => {
                        if has_x {
                            trailing_y = k;
                        } else {
                            leading_y = k;
                        }
                    }
                    Letter::X => has_x = true,
                    Letter::Z => unreachable!(),
                }
            }
            let type_id = match (leading_y > 0, has_x, trailing_y > 0) {
                (true, false, _) => {
                    ns.push(leading_y);
                    1
                }
                (true, true, false) => {
                    ns.push(leading_y);
                    2
                }
                (true, true, true) => {
                    ns.push(leading_y);
                    ns.push(trailing_y);
                    3
                }
                (false, true, false) => 7,
                (false, true, true) => {
                    ns.push(trailing_y);
                    8
                }
                (false, false, _) => unreachable!("empty word handled above"),
            };
            return TypedMonomial {
                type_id,
                ns,
                ms: vec![],
            };
        }

        // With z present: [y^{n0}] [x y^{n1}] z-blocks [x [y^{n_{p+1}}]]
        let mut idx = 0;
        let mut leading_y = 0;
        if runs[idx].0 == Letter::Y {
            leading_y = runs[idx].1;
            idx += 1;
        }
        let mut prefix_x = false;
        let mut prefix_x_y = 0;
        if runs[idx].0 == Letter::X {
            prefix_x = true;
            idx += 1;
            if runs[idx].0 == Letter::Y {
                prefix_x_y = runs[idx].1;
                idx += 1;
            }
        }
        // interior: z^{m_1} (x y^{n} z^{m})* then optional suffix
        let mut ms = Vec::new();
        let mut inner_ns = Vec::new();
        debug_assert_eq!(runs[idx].0, Letter::Z);
        ms.push(runs[idx].1);
        idx += 1;
        let mut suffix_x = false;
        let mut suffix_y = 0;
        while idx < runs.len() {
            debug_assert_eq!(runs[idx].0, Letter::X);
            idx += 1;
            let ny = if idx < runs.len() && runs[idx].0 == Letter::Y {
                let k = runs[idx].1;
                idx += 1;
                k
            } else {
                0
            };
            if idx < runs.len() && runs[idx].0 == Letter::Z {
                inner_ns.push(ny);
                ms.push(runs[idx].1);
                idx += 1;
            } else {
                suffix_x = true;
                suffix_y = ny;
                break;
            }
        }
        debug_assert_eq!(idx, runs.len());

        let mut ns = Vec::new();
        let base = match (leading_y > 0, prefix_x) {
            (true, true) => {
                ns.push(leading_y);
                ns.push(prefix_x_y);
                4
            }
            (false, true) => {
                ns.push(prefix_x_y);
                9
            }
            (true, false) => {
                ns.push(leading_y);
                12
            }
            (false, false) => 15,
        };
        ns.extend_from_slice(&inner_ns);
        let type_id = if !suffix_x {
            base
        } else if suffix_y == 0 {
            base + 1
        } else {
            ns.push(suffix_y);
            base + 2
        };
        TypedMonomial { type_id, ns, ms }
    }
}

impl fmt::Display for TypedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.type_id)?;
        if !self.ns.is_empty() || !self.ms.is_empty() {
            let ns: Vec<String> = self.ns.iter().map(|n| n.to_string()).collect();
            let ms: Vec<String> = self.ms.iter().map(|m| m.to_string()).collect();
            write!(f, "(n={}; m={})", ns.join(","), ms.join(","))?;
        }
        Ok(())
    }
}

/// Basis words of one weight with a position lookup.
#[derive(Debug)]
pub struct WeightBasis {
    pub words: Vec<Word>,
    pub index: std::collections::HashMap<Word, u32>,
}

impl WeightBasis {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn position(&self, w: &Word) -> u32 {
        *self
            .index
            .get(w)
            .unwrap_or_else(|| panic!("{w} is not a basis word of weight {}", w.weight()))
    }
}

/// Shared per-weight basis tables; enumeration is deterministic, so the
/// cache is transparent to callers.
pub fn weight_basis(weight: u32) -> std::sync::Arc<WeightBasis> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<WeightBasis>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    let idx = weight as usize;
    if guard.len() <= idx {
        guard.resize(idx + 1, None);
    }
    if let Some(b) = &guard[idx] {
        return Arc::clone(b);
    }
    let words = words_of_weight(weight);
    let index = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i as u32))
        .collect();
    let b = Arc::new(WeightBasis { words, index });
    guard[idx] = Some(Arc::clone(&b));
    b
}

/// All normal words of the given weight, in graded-lex order, with their
/// classifications.
pub fn basis_words(weight: u32) -> Vec<TypedMonomial> {
    words_of_weight(weight)
        .into_iter()
        .map(|w| TypedMonomial::classify(&w))
        .collect()
}

/// All normal words of the given weight in ascending graded-lex order.
pub fn words_of_weight(weight: u32) -> Vec<Word> {
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Start,   // empty or ends in y with no pending x
        AfterZ,  // ends in z
        AfterX,  // ends in x (pending: only y may follow)
        AfterXY, // ends in x y^k, k >= 1 (y or z may follow)
    }
    fn go(state: State, remaining: u32, acc: &mut Word, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let next: &[(Letter, State)] = match state {
            State::Start => &[
                (Letter::X, State::AfterX),
                (Letter::Y, State::Start),
                (Letter::Z, State::AfterZ),
            ],
            State::AfterZ => &[(Letter::X, State::AfterX), (Letter::Z, State::AfterZ)],
            State::AfterX => &[(Letter::Y, State::AfterXY)],
            State::AfterXY => &[(Letter::Y, State::AfterXY), (Letter::Z, State::AfterZ)],
        };
        for &(l, s) in next {
            acc.push(l, 1);
            go(s, remaining - 1, acc, out);
            // pop one letter
            let runs_len = acc.runs().len();
            let mut w = Word::one();
            for (i, &(rl, rk)) in acc.runs().iter().enumerate() {
                if i + 1 == runs_len {
                    w.push(rl, rk - 1);
                } else {
                    w.push(rl, rk);
                }
            }
            *acc = w;
        }
    }
    let mut out = Vec::new();
    let mut acc = Word::one();
    go(State::Start, weight, &mut acc, &mut out);
    out.sort();
    out
}

/// Number of weight-`w` parameter tuples over all eighteen families,
/// enumerated independently of the word generator.
pub fn count_by_types(weight: u32) -> u64 {
    let w = weight as u64;
    if weight == 0 {
        return 1; // type 0
    }
    // compositions of `total` into `parts` positive integers: C(total-1, parts-1)
    fn comps(total: u64, parts: u64) -> u64 {
        if parts == 0 {
            return u64::from(total == 0);
        }
        if total < parts {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..(parts - 1) {
            acc = acc * (total - 1 - i) / (i + 1);
        }
        acc
    }
    let mut count = 0u64;
    // families without z
    count += 1; // type 1: y^w
    count += u64::from(w == 1); // type 7: x
    count += 2 * u64::from(w >= 2); // types 2, 8: y^n x and x y^n
    count += comps(w.saturating_sub(1), 2); // type 3: y^a x y^b

    // z-block core with p blocks: z^{m_1} x y^{n_2} ... x y^{n_p} z^{m_p};
    // 2p-1 positive parameters plus p-1 interior x letters
    let core = |p: u64, c: u64| -> u64 {
        if c + 1 < p {
            0
        } else {
            comps(c - (p - 1), 2 * p - 1)
        }
    };
    // prefix tuple counts by weight: type-4/5/6 shape, 9/10/11, 12/13/14, 15/16/17
    let prefix = |a: u64| -> u64 {
        comps(a.saturating_sub(1), 2)            // y^{n0} x y^{n1}
            + u64::from(a >= 2)                  // x y^{n1}
            + u64::from(a >= 1)                  // y^{n1}
            + u64::from(a == 0) // empty
    };
    // suffix: empty, x, x y^{n_{p+1}}
    let suffix = |b: u64| -> u64 { u64::from(b == 0) + u64::from(b == 1) + u64::from(b >= 2) };
    for p in 1..=w {
        for a in 0..=w {
            for c in 0..=(w - a) {
                let b = w - a - c;
                count += prefix(a) * core(p, c) * suffix(b);
            }
        }
    }
    count
}

/// dim `A_w` by brute-force rewriting: reduce all `3^w` length-`w` words and
/// count the distinct normal monomials that appear.
pub fn count_by_rewriting(weight: u32) -> u64 {
    use super::poly::normal_form_word;
    use std::collections::BTreeSet;
    let mut seen = BTreeSet::new();
    let mut stack = vec![Word::one()];
    while let Some(w) = stack.pop() {
        if w.weight() == weight {
            let nf = normal_form_word(&w);
            for (m, _) in nf.terms() {
                seen.insert(m.clone());
            }
            continue;
        }
        for l in Letter::ALL {
            let mut v = w.clone();
            v.push(l, 1);
            stack.push(v);
        }
    }
    seen.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        // 1, 3, 6, 11 frozen from brute-force enumeration of factor-avoiding words
        let dims: Vec<usize> = (0..=6).map(|w| words_of_weight(w).len()).collect();
        assert_eq!(&dims[..4], &[1, 3, 6, 11]);
        // Hilbert series recurrence a_w = 3a_{w-1} - 3a_{w-2} + 2a_{w-3} - a_{w-4}
        for w in 4..=6 {
            let a = |i: usize| dims[i] as i64;
            assert_eq!(a(w), 3 * a(w - 1) - 3 * a(w - 2) + 2 * a(w - 3) - a(w - 4));
        }
    }

    #[test]
    fn weight_one_types() {
        let b = basis_words(1);
        // ascending graded-lex: z < y < x
        let shown: Vec<(String, u8)> = b
            .iter()
            .map(|t| (t.expand().to_string(), t.type_id))
            .collect();
        assert_eq!(
            shown,
            vec![
                ("z".to_string(), 15),
                ("y".to_string(), 1),
                ("x".to_string(), 7)
            ]
        );
    }

    #[test]
    fn classify_round_trip() {
        for w in 0..=8 {
            for word in words_of_weight(w) {
                let t = TypedMonomial::classify(&word);
                assert_eq!(t.expand(), word, "round trip failed for {word}");
            }
        }
    }

    #[test]
    fn counts_agree_small() {
        for w in 0..=9 {
            let by_words = words_of_weight(w).len() as u64;
            assert_eq!(count_by_types(w), by_words, "weight {w}");
        }
    }
}
