//! The named (co)homology class families, their parametric instantiation,
//! and the closed-form operation tables they satisfy.
//!
//! Every family carries the exact representative its defining display gives;
//! the verification suites treat these as the oracle side of each check.

mod appendix;
mod tables;

pub use appendix::{
    appendix_pairs, AppendixLemma, AppendixPair, ChainAppendixPair, CochainAppendixPair,
};
pub use tables::{
    bracket_predicted, cap_predicted, connes_predicted, cup_predicted, VanishReading,
};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::freealg::{NormalPoly, Scalar, Word};
use crate::koszul::{KoszulChain, KoszulCochain, GEN_X, GEN_XX, GEN_XXZY, GEN_Y, GEN_Z};

/// All class families appearing in the closed-form bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    // HH_0
    Zeta0,
    Alpha0,
    Beta0,
    Gamma0,
    Delta0,
    EBar0,
    // HH_1
    Alpha1,
    Beta1,
    Gamma1,
    Delta1,
    Epsilon1,
    Zeta1,
    Eta1,
    Theta1,
    // HH^{-1}
    Am1,
    Bm1,
    Cm1,
    Dm1,
    Em1,
    Fm1,
    Gm1,
    Hm1,
    Im1,
    Jm1,
    Km1,
    // HH^{-2}
    Am2,
    Bm2,
    // HH^{-4}
    Am4,
    Bm4,
    Cm4,
    Dm4,
    Em4,
    Fm4,
    Gm4,
    Hm4,
}

impl Family {
    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            Zeta0 => "zeta0",
            Alpha0 => "alpha0",
            Beta0 => "beta0",
            Gamma0 => "gamma0",
            Delta0 => "delta0",
            EBar0 => "ebar0",
            Alpha1 => "alpha1",
            Beta1 => "beta1",
            Gamma1 => "gamma1",
            Delta1 => "delta1",
            Epsilon1 => "epsilon1",
            Zeta1 => "zeta1",
            Eta1 => "eta1",
            Theta1 => "theta1",
            Am1 => "A-1",
            Bm1 => "B-1",
            Cm1 => "C-1",
            Dm1 => "D-1",
            Em1 => "E-1",
            Fm1 => "F-1",
            Gm1 => "G-1",
            Hm1 => "H-1",
            Im1 => "I-1",
            Jm1 => "J-1",
            Km1 => "K-1",
            Am2 => "A-2",
            Bm2 => "B-2",
            Am4 => "A-4",
            Bm4 => "B-4",
            Cm4 => "C-4",
            Dm4 => "D-4",
            Em4 => "E-4",
            Fm4 => "F-4",
            Gm4 => "G-4",
            Hm4 => "H-4",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        use Family::*;
        Some(match name {
            "zeta0" => Zeta0,
            "alpha0" => Alpha0,
            "beta0" => Beta0,
            "gamma0" => Gamma0,
            "delta0" => Delta0,
            "ebar0" => EBar0,
            "alpha1" => Alpha1,
            "beta1" => Beta1,
            "gamma1" => Gamma1,
            "delta1" => Delta1,
            "epsilon1" => Epsilon1,
            "zeta1" => Zeta1,
            "eta1" => Eta1,
            "theta1" => Theta1,
            "A-1" => Am1,
            "B-1" => Bm1,
            "C-1" => Cm1,
            "D-1" => Dm1,
            "E-1" => Em1,
            "F-1" => Fm1,
            "G-1" => Gm1,
            "H-1" => Hm1,
            "I-1" => Im1,
            "J-1" => Jm1,
            "K-1" => Km1,
            "A-2" => Am2,
            "B-2" => Bm2,
            "A-4" => Am4,
            "B-4" => Bm4,
            "C-4" => Cm4,
            "D-4" => Dm4,
            "E-4" => Em4,
            "F-4" => Fm4,
            "G-4" => Gm4,
            "H-4" => Hm4,
            _ => return None,
        })
    }

    /// Where the family lives. Positive values are homological degrees,
    /// negative values cohomological.
    pub fn degree(self) -> i8 {
        use Family::*;
        match self {
            Zeta0 | Alpha0 | Beta0 | Gamma0 | Delta0 | EBar0 => 0,
            Alpha1 | Beta1 | Gamma1 | Delta1 | Epsilon1 | Zeta1 | Eta1 | Theta1 => 1,
            Am1 | Bm1 | Cm1 | Dm1 | Em1 | Fm1 | Gm1 | Hm1 | Im1 | Jm1 | Km1 => -1,
            Am2 | Bm2 => -2,
            Am4 | Bm4 | Cm4 | Dm4 | Em4 | Fm4 | Gm4 | Hm4 => -4,
        }
    }
}

/// A named class: family tag plus exponent parameters in reading order.
///
/// Parameters are signed so the operation tables can form labels with shifted
/// indices; any index `<= 0` (or a range violation) denotes the zero class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub family: Family,
    pub ns: Vec<i64>,
    pub ms: Vec<i64>,
}

/// Least-rotation canonical form of a cyclic pair tuple.
fn canonical_rotation(ns: &[i64], ms: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let p = ns.len();
    let pairs: Vec<(i64, i64)> = ns.iter().cloned().zip(ms.iter().cloned()).collect();
    let mut best: Option<Vec<(i64, i64)>> = None;
    for r in 0..p {
        let rot: Vec<(i64, i64)> = (0..p).map(|i| pairs[(r + i) % p]).collect();
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    let best = best.unwrap();
    (
        best.iter().map(|&(n, _)| n).collect(),
        best.iter().map(|&(_, m)| m).collect(),
    )
}

impl ClassLabel {
    pub fn new(family: Family, ns: Vec<i64>, ms: Vec<i64>) -> ClassLabel {
        ClassLabel { family, ns, ms }
    }

    pub fn plain(family: Family) -> ClassLabel {
        ClassLabel::new(family, vec![], vec![])
    }

    pub fn with_ns(family: Family, ns: Vec<i64>) -> ClassLabel {
        ClassLabel::new(family, ns, vec![])
    }

    /// The expected parameter arities `(ns, ms)` as a function of the block
    /// count `p`, or a fixed shape. Returns whether the given arity is valid
    /// for some `p >= 1`.
    pub fn arity_ok(&self) -> bool {
        use Family::*;
        let (a, b) = (self.ns.len(), self.ms.len());
        match self.family {
            Zeta0 | Alpha0 | Alpha1 | Beta1 | Delta1 | Zeta1 | Am1 | Am2 | Am4 => a == 0 && b == 0,
            Beta0 | Gamma0 | Delta0 | Gamma1 | Epsilon1 | Eta1 | Bm1 | Cm1 | Em1 | Bm4 => {
                a == 1 && b == 0
            }
            Dm1 => a == 2 && b == 0,
            EBar0 | Theta1 | Gm1 | Em4 | Fm4 => a == b && b >= 1,
            Fm1 | Im1 | Jm1 | Cm4 | Dm4 => a == b + 1 && b >= 1,
            Hm1 => a == b + 2 && b >= 1,
            Km1 | Bm2 | Gm4 | Hm4 => a + 1 == b && b >= 1,
        }
    }

    /// Positivity plus family-specific range checks; labels failing them are
    /// the zero class under the vanishing conventions.
    pub fn in_range(&self) -> bool {
        if !self.arity_ok() {
            return false;
        }
        if self.ns.iter().chain(self.ms.iter()).any(|&v| v <= 0) {
            return false;
        }
        match self.family {
            Family::Cm1 => self.ns[0] >= 2,
            Family::Dm1 => self.ns[1] >= 1 && self.ns[1] <= self.ns[0] - 2,
            _ => true,
        }
    }

    /// Canonicalize the cyclic families; other labels pass through.
    pub fn canonical(mut self) -> ClassLabel {
        if matches!(self.family, Family::EBar0 | Family::Theta1) && !self.ns.is_empty() {
            let (ns, ms) = canonical_rotation(&self.ns, &self.ms);
            self.ns = ns;
            self.ms = ms;
        }
        self
    }

    /// Total weight of the instantiated class: homological weight for chain
    /// families, internal weight for cochain families.
    pub fn weight(&self) -> i64 {
        use Family::*;
        let sn: i64 = self.ns.iter().sum();
        let sm: i64 = self.ms.iter().sum();
        let p = self.ms.len() as i64;
        match self.family {
            Zeta0 => 0,
            Alpha0 => 1,
            Beta0 => self.ns[0] + 1,
            Gamma0 | Delta0 => self.ns[0],
            EBar0 => sn + sm + p,
            Alpha1 => 1,
            Beta1 => 2,
            Gamma1 => self.ns[0] + 2,
            Delta1 => 1,
            Epsilon1 | Eta1 => self.ns[0] + 1,
            Zeta1 => 1,
            Theta1 => sn + sm + p,
            Am1 => 0,
            Bm1 | Cm1 | Dm1 | Em1 => self.ns[0],
            Fm1 | Hm1 | Jm1 => sn + sm + p,
            Gm1 | Im1 => sn + sm + p - 1,
            Km1 => sn + sm + p - 2,
            Am2 => -1,
            Bm2 => sn + sm + p - 2,
            Am4 => -4,
            Bm4 => self.ns[0] - 3,
            Cm4 => sn + sm + p - 4,
            Dm4 => sn + sm + p - 3,
            Em4 => sn + sm + p - 4,
            Fm4 => sn + sm + p - 3,
            Gm4 => sn + sm + p - 5,
            Hm4 => sn + sm + p - 4,
        }
    }

    pub fn parse(text: &str) -> Result<ClassLabel, String> {
        let text = text.trim();
        let (name, args) = match text.find('(') {
            None => (text, ""),
            Some(i) => {
                if !text.ends_with(')') {
                    return Err(format!("malformed label '{text}'"));
                }
                (&text[..i], &text[i + 1..text.len() - 1])
            }
        };
        let family = Family::from_name(name).ok_or_else(|| format!("unknown family '{name}'"))?;
        let mut ns = Vec::new();
        let mut ms = Vec::new();
        if matches!(family, Family::EBar0 | Family::Theta1) && args.contains("(") {
            // pair syntax: ebar0((n1,m1),(n2,m2))
            let mut rest = args;
            while !rest.is_empty() {
                let open = rest
                    .find('(')
                    .ok_or_else(|| format!("expected '(' in '{args}'"))?;
                let close = rest[open..]
                    .find(')')
                    .ok_or_else(|| format!("expected ')' in '{args}'"))?
                    + open;
                let pair = &rest[open + 1..close];
                let mut it = pair.split(',');
                let n = it.next().ok_or("missing n")?.trim();
                let m = it.next().ok_or("missing m")?.trim();
                if it.next().is_some() {
                    return Err(format!("pair '{pair}' has too many entries"));
                }
                ns.push(n.parse::<i64>().map_err(|e| e.to_string())?);
                ms.push(m.parse::<i64>().map_err(|e| e.to_string())?);
                rest = &rest[close + 1..];
                if let Some(stripped) = rest.trim_start().strip_prefix(',') {
                    rest = stripped;
                }
            }
        } else if !args.is_empty() {
            let mut groups = args.split(';');
            let ngroup = groups.next().unwrap_or("");
            let mgroup = groups.next();
            if groups.next().is_some() {
                return Err(format!("too many ';' groups in '{args}'"));
            }
            for piece in ngroup.split(',') {
                let piece = piece.trim();
                if !piece.is_empty() {
                    ns.push(piece.parse::<i64>().map_err(|e| e.to_string())?);
                }
            }
            if let Some(mgroup) = mgroup {
                for piece in mgroup.split(',') {
                    let piece = piece.trim();
                    if !piece.is_empty() {
                        ms.push(piece.parse::<i64>().map_err(|e| e.to_string())?);
                    }
                }
            }
        }
        let label = ClassLabel { family, ns, ms }.canonical();
        if !label.arity_ok() {
            return Err(format!(
                "family {} does not accept {} n- and {} m-parameters",
                family.name(),
                label.ns.len(),
                label.ms.len()
            ));
        }
        if !label.in_range() {
            return Err(format!("parameters of '{text}' are out of range"));
        }
        Ok(label)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if self.ns.is_empty() && self.ms.is_empty() {
            return Ok(());
        }
        if matches!(self.family, Family::EBar0 | Family::Theta1) {
            // pair syntax keeps the cyclic structure visible
            write!(f, "(")?;
            for (i, (n, m)) in self.ns.iter().zip(self.ms.iter()).enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "({n},{m})")?;
            }
            return write!(f, ")");
        }
        write!(f, "(")?;
        for (i, n) in self.ns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        if !self.ms.is_empty() {
            write!(f, ";")?;
            for (i, m) in self.ms.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// A finite rational combination of class labels of one degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCombination {
    terms: BTreeMap<ClassLabel, Scalar>,
}

impl FormalCombination {
    pub fn zero() -> FormalCombination {
        FormalCombination::default()
    }

    pub fn single(label: ClassLabel) -> FormalCombination {
        let mut c = FormalCombination::zero();
        c.add(label, Scalar::one());
        c
    }

    /// Add `c * label`, dropping labels that vanish by convention.
    pub fn add(&mut self, label: ClassLabel, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let label = label.canonical();
        if !label.in_range() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(label) {
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

    pub fn add_int(&mut self, label: ClassLabel, c: i64) {
        self.add(label, Scalar::from_integer(c.into()));
    }

    pub fn scaled(&self, c: &Scalar) -> FormalCombination {
        let mut out = FormalCombination::zero();
        for (l, a) in &self.terms {
            out.add(l.clone(), a * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &FormalCombination) {
        for (l, c) in &other.terms {
            self.add(l.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &FormalCombination) -> FormalCombination {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add(l.clone(), -c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassLabel, &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for FormalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
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
            if abs.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{abs}*{l}")?;
            }
        }
        Ok(())
    }
}

/// Either side of the calculus: a chain (degrees 0, 1) or a cochain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instantiated {
    Chain(KoszulChain),
    Cochain(KoszulCochain),
}

impl Instantiated {
    pub fn chain(self) -> KoszulChain {
        match self {
            Instantiated::Chain(c) => c,
            Instantiated::Cochain(_) => panic!("expected a chain"),
        }
    }

    pub fn cochain(self) -> KoszulCochain {
        match self {
            Instantiated::Cochain(c) => c,
            Instantiated::Chain(_) => panic!("expected a cochain"),
        }
    }
}

/// `y^a`, with `a = 0` allowed.
fn yp(a: i64) -> Word {
    Word::power(crate::freealg::Letter::Y, a as u32)
}

fn zp(a: i64) -> Word {
    Word::power(crate::freealg::Letter::Z, a as u32)
}

fn xw() -> Word {
    Word::letter(crate::freealg::Letter::X)
}

/// `z^{m_1} x y^{n_2} z^{m_2} ... x y^{n_p} z^{m_p}` (the alternating block
/// convention); `inner` holds `n_2..n_p`.
fn zblocks(ms: &[i64], inner: &[i64]) -> Word {
    debug_assert_eq!(inner.len() + 1, ms.len());
    let mut w = zp(ms[0]);
    for (j, &m) in ms[1..].iter().enumerate() {
        w = w.concat(&xw());
        w = w.concat(&yp(inner[j]));
        w = w.concat(&zp(m));
    }
    w
}

/// The cyclic word `y^{n_1} z^{m_1} x y^{n_2} z^{m_2} x ... y^{n_p} z^{m_p} x`.
pub fn ebar_word(ns: &[i64], ms: &[i64]) -> Word {
    let mut w = Word::one();
    for (n, m) in ns.iter().zip(ms.iter()) {
        w = w.concat(&yp(*n));
        w = w.concat(&zp(*m));
        w = w.concat(&xw());
    }
    w
}

/// The literal representative from the defining display, reduced.
///
/// Fails on arity errors or out-of-range parameters.
pub fn instantiate(label: &ClassLabel) -> Result<Instantiated, String> {
    if !label.arity_ok() {
        return Err(format!("wrong parameter arity for {label}"));
    }
    if !label.in_range() {
        return Err(format!("parameters out of range for {label}"));
    }
    let ns = &label.ns;
    let ms = &label.ms;
    let p = ms.len();
    use Family::*;
    let word_chain0 =
        |w: Word| Instantiated::Chain(KoszulChain::poly_as_chain(&NormalPoly::word(w)));
    let chain1 = |w: Word, g: crate::koszul::KoszulGen| {
        Instantiated::Chain(KoszulChain::from_poly(&NormalPoly::word(w), g))
    };
    Ok(match label.family {
        Zeta0 => word_chain0(Word::one()),
        Alpha0 => word_chain0(xw()),
        Beta0 => word_chain0(yp(ns[0]).concat(&xw())),
        Gamma0 => word_chain0(yp(ns[0])),
        Delta0 => word_chain0(zp(ns[0])),
        EBar0 => word_chain0(ebar_word(ns, ms)),
        Alpha1 => chain1(Word::one(), GEN_X),
        Beta1 => chain1(xw(), GEN_X),
        Gamma1 => chain1(yp(ns[0]).concat(&xw()), GEN_X),
        Delta1 => chain1(Word::one(), GEN_Y),
        Epsilon1 => chain1(yp(ns[0]), GEN_Y),
        Zeta1 => chain1(Word::one(), GEN_Z),
        Eta1 => chain1(zp(ns[0]), GEN_Z),
        Theta1 => Instantiated::Chain(theta1_chain(ns, ms)),
        Am1 => {
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_X.index, NormalPoly::word(xw()));
            f.set_value(GEN_Y.index, NormalPoly::word(yp(1)));
            Instantiated::Cochain(f)
        }
        Bm1 => {
            let v = yp(ns[0]).concat(&xw());
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_X.index, NormalPoly::word(v.clone()));
            f.set_value(GEN_Y.index, NormalPoly::word(v).neg());
            Instantiated::Cochain(f)
        }
        Cm1 => {
            let k = ns[0];
            let mut yv = NormalPoly::word(yp(k).concat(&xw()));
            yv.add_monomial(xw().concat(&yp(k)), -Scalar::one());
            let zv = Word::letter(crate::freealg::Letter::Z)
                .concat(&xw())
                .concat(&yp(k - 1));
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Y.index, yv);
            f.set_value(GEN_Z.index, NormalPoly::word(zv));
            Instantiated::Cochain(f)
        }
        Dm1 => {
            let (n, i) = (ns[0], ns[1]);
            let mut yv = NormalPoly::word(yp(n).concat(&xw()));
            yv.add_monomial(yp(i).concat(&xw()).concat(&yp(n - i)), -Scalar::one());
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Y.index, yv);
            Instantiated::Cochain(f)
        }
        Em1 => {
            let n = ns[0];
            let mut yv = NormalPoly::word(yp(n).concat(&xw()));
            yv.add_monomial(yp(n + 1), Scalar::one());
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Y.index, yv);
            Instantiated::Cochain(f)
        }
        Fm1 | Gm1 | Hm1 | Im1 => {
            let v = match label.family {
                Fm1 => yp(ns[0])
                    .concat(&xw())
                    .concat(&yp(ns[1]))
                    .concat(&zblocks(ms, &ns[2..]))
                    .concat(&xw()),
                Gm1 => yp(ns[0]).concat(&zblocks(ms, &ns[1..p])).concat(&xw()),
                Hm1 => yp(ns[0])
                    .concat(&xw())
                    .concat(&yp(ns[1]))
                    .concat(&zblocks(ms, &ns[2..p + 1]))
                    .concat(&xw())
                    .concat(&yp(ns[p + 1])),
                Im1 => yp(ns[0])
                    .concat(&zblocks(ms, &ns[1..p]))
                    .concat(&xw())
                    .concat(&yp(ns[p])),
                _ => unreachable!(),
            };
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Y.index, NormalPoly::word(v));
            Instantiated::Cochain(f)
        }
        Jm1 => {
            let base = xw()
                .concat(&yp(ns[0]))
                .concat(&zblocks(ms, &ns[1..p]))
                .concat(&xw());
            let yv = base.concat(&yp(ns[p]));
            let zv = Word::letter(crate::freealg::Letter::Z)
                .concat(&base)
                .concat(&yp(ns[p] - 1));
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Y.index, NormalPoly::word(yv));
            f.set_value(GEN_Z.index, NormalPoly::word(zv).neg());
            Instantiated::Cochain(f)
        }
        Km1 => {
            let mut f = KoszulCochain::zero(1);
            f.set_value(GEN_Z.index, NormalPoly::word(zblocks(ms, ns)));
            Instantiated::Cochain(f)
        }
        Am2 => {
            let mut f = KoszulCochain::zero(2);
            f.set_value(GEN_XX.index, NormalPoly::word(xw()));
            Instantiated::Cochain(f)
        }
        Bm2 => {
            let mut f = KoszulCochain::zero(2);
            f.set_value(
                GEN_XX.index,
                NormalPoly::word(zblocks(ms, ns).concat(&xw())),
            );
            Instantiated::Cochain(f)
        }
        Am4 | Bm4 | Cm4 | Dm4 | Em4 | Fm4 | Gm4 | Hm4 => {
            let v = match label.family {
                Am4 => Word::one(),
                Bm4 => yp(ns[0]).concat(&xw()),
                Cm4 => yp(ns[0])
                    .concat(&xw())
                    .concat(&yp(ns[1]))
                    .concat(&zblocks(ms, &ns[2..])),
                Dm4 => yp(ns[0])
                    .concat(&xw())
                    .concat(&yp(ns[1]))
                    .concat(&zblocks(ms, &ns[2..]))
                    .concat(&xw()),
                Em4 => xw().concat(&yp(ns[0])).concat(&zblocks(ms, &ns[1..])),
                Fm4 => xw()
                    .concat(&yp(ns[0]))
                    .concat(&zblocks(ms, &ns[1..]))
                    .concat(&xw()),
                Gm4 => zblocks(ms, ns),
                Hm4 => zblocks(ms, ns).concat(&xw()),
                _ => unreachable!(),
            };
            let mut f = KoszulCochain::zero(4);
            f.set_value(GEN_XXZY.index, NormalPoly::word(v));
            Instantiated::Cochain(f)
        }
    })
}

/// The degree-1 cycle `theta_1` from its defining triple sum.
fn theta1_chain(ns: &[i64], ms: &[i64]) -> KoszulChain {
    let p = ns.len();
    let mut out = KoszulChain::zero(1);
    let block = |j: usize| (ns[j % p], ms[j % p]);
    #[allow(clippy::needless_range_loop)]
    for i in 0..p {
        // x-slot: y^{n_i} z^{m_i} ... z^{m_p} x y^{n_1} z^{m_1} ... z^{m_{i-1}}
        let mut w = Word::one();
        for j in 0..p {
            let (n, m) = block(i + j);
            if j > 0 {
                w = w.concat(&xw());
            }
            w = w.concat(&yp(n)).concat(&zp(m));
        }
        out.add_word(w, GEN_X.index, Scalar::one());
        // y-slots: cut inside the y-run of block i
        let (ni, _) = block(i);
        for t in 1..=ni {
            let mut w = yp(ni - t);
            for j in 0..p {
                let (n, m) = block(i + j);
                if j > 0 {
                    w = w.concat(&xw()).concat(&yp(n));
                }
                w = w.concat(&zp(m));
            }
            w = w.concat(&xw()).concat(&yp(t - 1));
            out.add_word(w, GEN_Y.index, Scalar::one());
        }
        // z-slots: cut inside the z-run of block i
        let (_, mi) = block(i);
        for s in 1..=mi {
            let mut w = zp(mi - s);
            for j in 1..p {
                let (n, m) = block(i + j);
                w = w.concat(&xw()).concat(&yp(n)).concat(&zp(m));
            }
            w = w.concat(&xw()).concat(&yp(ns[i])).concat(&zp(s - 1));
            out.add_word(w, GEN_Z.index, Scalar::one());
        }
    }
    out
}

/// Degrees at which a family enumeration is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassDegree {
    H0,
    H1,
    Cm1,
    Cm2,
    Cm4,
}

impl ClassDegree {
    pub fn from_degree(d: i8) -> Option<ClassDegree> {
        match d {
            0 => Some(ClassDegree::H0),
            1 => Some(ClassDegree::H1),
            -1 => Some(ClassDegree::Cm1),
            -2 => Some(ClassDegree::Cm2),
            -4 => Some(ClassDegree::Cm4),
            _ => None,
        }
    }
}

/// All compositions of `total` into `parts` positive integers.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    fn go(total: i64, parts: usize, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 1 {
            if total >= 1 {
                acc.push(total);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for v in 1..=(total - (parts as i64 - 1)) {
            acc.push(v);
            go(total - v, parts - 1, acc, out);
            acc.pop();
        }
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Parameter tuples `(ns, ms)` with the given arities and `sum = s`.
fn tuples(s: i64, na: usize, ma: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for split in 0..=s {
        for ns in compositions(split, na) {
            for ms in compositions(s - split, ma) {
                out.push((ns.clone(), ms));
            }
        }
    }
    out
}

/// Cyclic tuples in canonical rotation with `sum(n) + sum(m) = s`, `p` blocks.
fn cyclic_tuples(s: i64, p: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    tuples(s, p, p)
        .into_iter()
        .filter(|(ns, ms)| {
            let (cn, cm) = canonical_rotation(ns, ms);
            cn == *ns && cm == *ms
        })
        .collect()
}

/// Every valid label of the given degree whose weight equals `weight`
/// (homological weight for chains, internal weight for cochains).
pub fn labels_at(degree: ClassDegree, weight: i64) -> Vec<ClassLabel> {
    let mut out: Vec<ClassLabel> = Vec::new();
    let mut push = |f: Family, ns: Vec<i64>, ms: Vec<i64>| {
        let l = ClassLabel::new(f, ns, ms);
        debug_assert!(l.in_range(), "{l}");
        debug_assert_eq!(l.weight(), weight, "{l}");
        out.push(l);
    };
    use Family::*;
    let w = weight;
    match degree {
        ClassDegree::H0 => {
            if w == 0 {
                push(Zeta0, vec![], vec![]);
            }
            if w == 1 {
                push(Alpha0, vec![], vec![]);
            }
            if w >= 2 {
                push(Beta0, vec![w - 1], vec![]);
            }
            if w >= 1 {
                push(Gamma0, vec![w], vec![]);
                push(Delta0, vec![w], vec![]);
            }
            for p in 1.. {
                if 3 * p > w {
                    break;
                }
                for (ns, ms) in cyclic_tuples(w - p, p as usize) {
                    push(EBar0, ns, ms);
                }
            }
        }
        ClassDegree::H1 => {
            if w == 1 {
                push(Alpha1, vec![], vec![]);
                push(Delta1, vec![], vec![]);
                push(Zeta1, vec![], vec![]);
            }
            if w == 2 {
                push(Beta1, vec![], vec![]);
            }
            if w >= 3 {
                push(Gamma1, vec![w - 2], vec![]);
            }
            if w >= 2 {
                push(Epsilon1, vec![w - 1], vec![]);
                push(Eta1, vec![w - 1], vec![]);
            }
            for p in 1.. {
                if 3 * p > w {
                    break;
                }
                for (ns, ms) in cyclic_tuples(w - p, p as usize) {
                    push(Theta1, ns, ms);
                }
            }
        }
        ClassDegree::Cm1 => {
            if w == 0 {
                push(Am1, vec![], vec![]);
            }
            if w >= 1 {
                push(Bm1, vec![w], vec![]);
                push(Em1, vec![w], vec![]);
            }
            if w >= 2 {
                push(Cm1, vec![w], vec![]);
            }
            if w >= 3 {
                for i in 1..=(w - 2) {
                    push(Dm1, vec![w, i], vec![]);
                }
            }
            for p in 1usize..=(w.max(0) as usize + 6) {
                let pi = p as i64;
                // F, J: sum = w - p over (p+1, p); G, I: w + 1 - p;
                // H: w - p over (p+2, p); K: w + 2 - p over (p-1, p)
                for (ns, ms) in tuples(w - pi, p + 1, p) {
                    push(Fm1, ns.clone(), ms.clone());
                    push(Jm1, ns, ms);
                }
                for (ns, ms) in tuples(w + 1 - pi, p, p) {
                    push(Gm1, ns, ms);
                }
                for (ns, ms) in tuples(w + 1 - pi, p + 1, p) {
                    push(Im1, ns, ms);
                }
                for (ns, ms) in tuples(w - pi, p + 2, p) {
                    push(Hm1, ns, ms);
                }
                for (ns, ms) in tuples(w + 2 - pi, p - 1, p) {
                    push(Km1, ns, ms);
                }
            }
        }
        ClassDegree::Cm2 => {
            if w == -1 {
                push(Am2, vec![], vec![]);
            }
            for p in 1usize..=(w.max(0) as usize + 6) {
                let pi = p as i64;
                for (ns, ms) in tuples(w + 2 - pi, p - 1, p) {
                    push(Bm2, ns, ms);
                }
            }
        }
        ClassDegree::Cm4 => {
            if w == -4 {
                push(Am4, vec![], vec![]);
            }
            if w >= -2 {
                push(Bm4, vec![w + 3], vec![]);
            }
            for p in 1usize..=(w.max(0) as usize + 8) {
                let pi = p as i64;
                for (ns, ms) in tuples(w + 4 - pi, p + 1, p) {
                    push(Cm4, ns, ms);
                }
                for (ns, ms) in tuples(w + 3 - pi, p + 1, p) {
                    push(Dm4, ns, ms);
                }
                for (ns, ms) in tuples(w + 4 - pi, p, p) {
                    push(Em4, ns, ms);
                }
                for (ns, ms) in tuples(w + 3 - pi, p, p) {
                    push(Fm4, ns, ms);
                }
                for (ns, ms) in tuples(w + 5 - pi, p - 1, p) {
                    push(Gm4, ns, ms);
                }
                for (ns, ms) in tuples(w + 4 - pi, p - 1, p) {
                    push(Hm4, ns, ms);
                }
            }
        }
    }
    out.sort();
    out
}

/// Instantiate a formal combination of cochain classes of one degree.
pub fn combination_cochain(fc: &FormalCombination, degree: u8) -> KoszulCochain {
    let mut out = KoszulCochain::zero(degree);
    for (l, c) in fc.terms() {
        out.add_scaled(&instantiate(l).expect("valid label").cochain(), c);
    }
    out
}

/// Instantiate a formal combination of chain classes of one degree.
pub fn combination_chain(fc: &FormalCombination, degree: u8) -> KoszulChain {
    let mut out = KoszulChain::zero(degree);
    for (l, c) in fc.terms() {
        out.add_assign(&instantiate(l).expect("valid label").chain().scale(c));
    }
    out
}

impl ClassLabel {
    /// JSON form: `{"family": "B-1", "n": [2], "m": []}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.name(),
            "n": self.ns,
            "m": self.ms,
        })
    }
}

impl FormalCombination {
    /// JSON form: a list of `{"class": ..., "coeff": "p/q"}` terms.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(l, c)| {
                serde_json::json!({
                    "class": l.to_json(),
                    "coeff": format!("{}/{}", c.numer(), c.denom()),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar_int as si;
    use crate::koszul::{chain_diff, cochain_diff};

    fn lab(s: &str) -> ClassLabel {
        ClassLabel::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "A-1",
            "B-1(2)",
            "D-1(4,1)",
            "F-1(1,2;1)",
            "K-1(;2)",
            "theta1((1,2),(2,1))",
            "ebar0((1,1),(2,1))",
            "A-4",
            "H-4(1;1,1)",
        ] {
            let l = lab(s);
            assert_eq!(lab(&l.to_string()), l, "{s}");
        }
        // semicolon form for cyclic families is accepted too
        assert_eq!(lab("theta1(1,2;1,1)"), lab("theta1((1,1),(2,1))"));
        assert!(ClassLabel::parse("Q-1(2)").is_err());
        assert!(ClassLabel::parse("B-1(0)").is_err());
        assert!(ClassLabel::parse("D-1(2,1)").is_err());
    }

    #[test]
    fn canonical_rotation_of_cyclic_labels() {
        let a = lab("ebar0((2,1),(1,1))");
        let b = lab("ebar0((1,1),(2,1))");
        assert_eq!(a, b);
    }

    #[test]
    fn simple_instances() {
        // alpha1 = 1 (x) x
        let c = instantiate(&lab("alpha1")).unwrap().chain();
        let mut expect = KoszulChain::zero(1);
        expect.add_word(Word::one(), GEN_X.index, si(1));
        assert_eq!(c, expect);
        // K-1 with p = 1, m1 = 2: z -> z^2
        let f = instantiate(&lab("K-1(;2)")).unwrap().cochain();
        assert_eq!(
            f.value(GEN_Z.index),
            &NormalPoly::word(Word::from_str_letters("zz").unwrap())
        );
        // A-4: (x+y)xzy -> 1
        let f = instantiate(&lab("A-4")).unwrap().cochain();
        assert_eq!(f.value(0), &NormalPoly::one());
    }

    #[test]
    fn instances_are_cycles_and_cocycles() {
        for (deg, wmax) in [
            (ClassDegree::H0, 8),
            (ClassDegree::H1, 8),
            (ClassDegree::Cm1, 7),
            (ClassDegree::Cm2, 7),
            (ClassDegree::Cm4, 5),
        ] {
            for w in -5..=wmax {
                for l in labels_at(deg, w) {
                    match instantiate(&l).unwrap() {
                        Instantiated::Chain(c) => {
                            if c.degree > 0 {
                                assert!(chain_diff(&c).is_zero(), "{l} is not a cycle");
                            }
                            if !c.is_zero() {
                                assert_eq!(
                                    i64::from(c.homogeneous_weight().unwrap()),
                                    l.weight(),
                                    "{l} weight"
                                );
                            }
                        }
                        Instantiated::Cochain(f) => {
                            assert!(cochain_diff(&f).is_zero(), "{l} is not a cocycle");
                            assert_eq!(f.internal_weight(), Some(l.weight()), "{l} weight");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_rotation_invariant() {
        let a = theta1_chain(&[1, 2], &[2, 1]);
        let b = theta1_chain(&[2, 1], &[1, 2]);
        assert_eq!(a, b);
    }

    #[test]
    fn label_weights_match_instances() {
        let l = lab("H-1(1,1,1,1;1,1)");
        let f = instantiate(&l).unwrap().cochain();
        assert_eq!(f.internal_weight(), Some(l.weight()));
    }
}
