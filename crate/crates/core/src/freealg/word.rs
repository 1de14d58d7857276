//! Words in the free monoid on `{x, y, z}`, run-length encoded, with the
//! graded lexicographic order induced by `z < y < x`.

use std::cmp::Ordering;
use std::fmt;

/// Generator of the free algebra. The derived order is `Z < Y < X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Z = 0,
    Y = 1,
    X = 2,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    pub fn symbol(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            'z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// A monomial of the free algebra, stored as maximal runs `(letter, exponent)`.
///
/// Adjacent runs always carry distinct letters and every exponent is
/// positive; the empty word is the unit of the monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    runs: Vec<(Letter, u32)>,
}

impl Word {
    pub fn one() -> Word {
        Word { runs: Vec::new() }
    }

    pub fn letter(l: Letter) -> Word {
        Word { runs: vec![(l, 1)] }
    }

    /// Single run `l^k`; `k = 0` yields the unit.
    pub fn power(l: Letter, k: u32) -> Word {
        if k == 0 {
            Word::one()
        } else {
            Word { runs: vec![(l, k)] }
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        let mut w = Word::one();
        for &l in letters {
            w.push(l, 1);
        }
        w
    }

    /// Parse a plain letter string such as `"xyyzx"`.
    pub fn from_str_letters(s: &str) -> Option<Word> {
        let mut w = Word::one();
        for c in s.chars() {
            w.push(Letter::from_char(c)?, 1);
        }
        Some(w)
    }

    pub fn runs(&self) -> &[(Letter, u32)] {
        &self.runs
    }

    pub fn is_one(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total letter count.
    pub fn weight(&self) -> u32 {
        self.runs.iter().map(|&(_, k)| k).sum()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.runs
            .iter()
            .flat_map(|&(l, k)| std::iter::repeat_n(l, k as usize))
    }

    pub fn first_letter(&self) -> Option<Letter> {
        self.runs.first().map(|&(l, _)| l)
    }

    pub fn last_letter(&self) -> Option<Letter> {
        self.runs.last().map(|&(l, _)| l)
    }

    /// Append `l^k`, merging with the final run when letters coincide.
    pub fn push(&mut self, l: Letter, k: u32) {
        if k == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((last, e)) if *last == l => *e += k,
            _ => self.runs.push((l, k)),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(l, k) in &other.runs {
            w.push(l, k);
        }
        w
    }

    /// Subword spanning letter positions `start..end`.
    pub fn slice(&self, start: u32, end: u32) -> Word {
        debug_assert!(start <= end && end <= self.weight());
        let mut w = Word::one();
        let mut pos = 0u32;
        for &(l, k) in &self.runs {
            let lo = pos.max(start);
            let hi = (pos + k).min(end);
            if hi > lo {
                w.push(l, hi - lo);
            }
            pos += k;
            if pos >= end {
                break;
            }
        }
        w
    }

    /// Whether the word avoids the leading monomials `x y^n x`, `xz`, `zy`.
    pub fn is_normal(&self) -> bool {
        self.first_reducible_run().is_none()
    }

    /// Index (into `runs`) of the leftmost run starting a forbidden factor.
    pub(crate) fn first_reducible_run(&self) -> Option<usize> {
        for (i, &(l, k)) in self.runs.iter().enumerate() {
            match l {
                Letter::X => {
                    if k >= 2 {
                        return Some(i); // contains xx
                    }
                    match self.runs.get(i + 1) {
                        Some(&(Letter::Z, _)) => return Some(i), // xz
                        Some(&(Letter::Y, _)) => {
                            if let Some(&(Letter::X, _)) = self.runs.get(i + 2) {
                                return Some(i); // x y^n x
                            }
                        }
                        _ => {}
                    }
                }
                Letter::Z => {
                    if let Some(&(Letter::Y, _)) = self.runs.get(i + 1) {
                        return Some(i); // zy
                    }
                }
                Letter::Y => {}
            }
        }
        None
    }

    /// Like [`first_reducible_run`], scanning from the right.
    pub(crate) fn last_reducible_run(&self) -> Option<usize> {
        (0..self.runs.len())
            .rev()
            .find(|&i| self.run_starts_reducible(i))
    }

    fn run_starts_reducible(&self, i: usize) -> bool {
        let (l, k) = self.runs[i];
        match l {
            Letter::X => {
                k >= 2
                    || matches!(self.runs.get(i + 1), Some(&(Letter::Z, _)))
                    || (matches!(self.runs.get(i + 1), Some(&(Letter::Y, _)))
                        && matches!(self.runs.get(i + 2), Some(&(Letter::X, _))))
            }
            Letter::Z => matches!(self.runs.get(i + 1), Some(&(Letter::Y, _))),
            Letter::Y => false,
        }
    }

    /// Rewrite the forbidden factor starting at run `i` once.
    ///
    /// Returns `None` when the factor maps to zero (`xz` or `zy`), otherwise
    /// the signed replacement (`x y^n x -> -y^{n+1} x`).
    pub(crate) fn reduce_at_run(&self, i: usize) -> Option<(Word, bool)> {
        let (l, k) = self.runs[i];
        match l {
            Letter::X => {
                if k >= 2 {
                    // split one xx out of the run: x^k = x^(k-2) . xx
                    // rewrite the leftmost xx inside the run: xx -> -yx
                    let mut w = Word::one();
                    for &(l2, k2) in &self.runs[..i] {
                        w.push(l2, k2);
                    }
                    w.push(Letter::Y, 1);
                    w.push(Letter::X, k - 1);
                    for &(l2, k2) in &self.runs[i + 1..] {
                        w.push(l2, k2);
                    }
                    return Some((w, true));
                }
                match self.runs.get(i + 1) {
                    Some(&(Letter::Z, _)) => None,
                    Some(&(Letter::Y, n)) => {
                        // x y^n x^k2 ... -> -y^{n+1} x^k2 ...
                        let mut w = Word::one();
                        for &(l2, k2) in &self.runs[..i] {
                            w.push(l2, k2);
                        }
                        w.push(Letter::Y, n + 1);
                        for &(l2, k2) in &self.runs[i + 2..] {
                            w.push(l2, k2);
                        }
                        Some((w, true))
                    }
                    _ => unreachable!("run {i} is not reducible"),
                }
            }
            Letter::Z => None,
            Letter::Y => unreachable!("run {i} is not reducible"),
        }
    }
}

/// Graded lexicographic order: weight first, then left-to-right letter
/// comparison with `z < y < x`.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut ia, mut oa) = (0usize, 0u32);
        let (mut ib, mut ob) = (0usize, 0u32);
        loop {
            match (self.runs.get(ia), other.runs.get(ib)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(la, ka)), Some(&(lb, kb))) => match la.cmp(&lb) {
                    Ordering::Equal => {
                        let step = (ka - oa).min(kb - ob);
                        oa += step;
                        ob += step;
                        if oa == ka {
                            ia += 1;
                            oa = 0;
                        }
                        if ob == kb {
                            ib += 1;
                            ob = 0;
                        }
                    }
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(l, k)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if k == 1 {
                write!(f, "{}", l.symbol())?;
            } else {
                write!(f, "{}^{}", l.symbol(), k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    #[test]
    fn graded_lex_order() {
        assert!(w("x") > w("y"));
        assert!(w("y") > w("z"));
        assert!(w("zz") > w("x")); // degree dominates
        assert!(w("xyx") > w("yyx"));
        assert!(w("xy") > w("xz") || w("xy") < w("xz"));
        assert!(w("xy") > w("xz")); // same prefix, y > z
        assert_eq!(w("xyz").cmp(&w("xyz")), Ordering::Equal);
        // prefix of a longer run: yyx vs yxy -> second letter y vs x
        assert!(w("yxy") > w("yyx"));
    }

    #[test]
    fn normal_detection() {
        assert!(w("yx").is_normal());
        assert!(w("zxy").is_normal());
        assert!(!w("xx").is_normal());
        assert!(!w("xyx").is_normal());
        assert!(!w("xyyyx").is_normal());
        assert!(!w("xz").is_normal());
        assert!(!w("zy").is_normal());
        assert!(w("yzx").is_normal());
        assert!(Word::one().is_normal());
    }

    #[test]
    fn slicing() {
        let v = w("xyyzx");
        assert_eq!(v.slice(0, 2), w("xy"));
        assert_eq!(v.slice(1, 4), w("yyz"));
        assert_eq!(v.slice(0, 0), Word::one());
        assert_eq!(v.slice(0, 5), v);
    }

    #[test]
    fn reduce_steps() {
        // xyx -> -yyx
        let v = w("xyx");
        let i = v.first_reducible_run().unwrap();
        let (r, neg) = v.reduce_at_run(i).unwrap();
        assert_eq!(r, w("yyx"));
        assert!(neg);
        // xz -> 0
        assert!(w("xz").reduce_at_run(0).is_none());
        // xx -> -yx
        let (r, neg) = w("xx").reduce_at_run(0).unwrap();
        assert_eq!(r, w("yx"));
        assert!(neg);
    }
}
