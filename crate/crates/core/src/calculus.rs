//! The four calculus operations at the Koszul level: cup and cap products,
//! the degree-0 Connes differential, and the Gerstenhaber bracket.

use crate::barbridge::{bar_bracket_on_koszul, induced_p_on_chains, HochBarChain};
use crate::freealg::{multiply, NormalPoly, Scalar};
use crate::homology::{
    express_in_paper_basis, is_boundary_cochain, BoundaryVerdict, CohClassCoords,
};
use crate::koszul::{KoszulChain, KoszulCochain, KoszulGen, MAX_DEGREE};
use crate::paperdata::Instantiated;

/// Koszul cup product `Hom(V_m, A) (x) Hom(V_n, A) -> Hom(V_{m+n}, A)`:
/// `(f u g)(a_1..a_{m+n}) = (-1)^{mn} f(a_1..a_m) g(a_{m+1}..a_{m+n})`,
/// evaluated through the generator splittings.
pub fn cup(f: &KoszulCochain, g: &KoszulCochain) -> KoszulCochain {
    let m = f.degree;
    let n = g.degree;
    assert!(m + n <= MAX_DEGREE, "V_{} = 0", m + n);
    let mut out = KoszulCochain::zero(m + n);
    let sign_neg = (u32::from(m) * u32::from(n)) % 2 != 0;
    for gen in KoszulGen::all(m + n) {
        let mut val = NormalPoly::zero();
        for (l, r) in gen.split(m) {
            val.add_assign(&multiply(f.value(l.index), g.value(r.index)));
        }
        out.set_value(gen.index, if sign_neg { val.neg() } else { val });
    }
    out
}

/// Koszul cap product `Hom(V_m, A) (x) (A (x) V_n) -> A (x) V_{n-m}`:
/// apply the cochain to the leading factor of each generator and multiply.
pub fn cap(f: &KoszulCochain, z: &KoszulChain) -> KoszulChain {
    let m = f.degree;
    let n = z.degree;
    assert!(n >= m, "cap needs chain degree >= cochain degree");
    let mut out = KoszulChain::zero(n - m);
    for ((w, g), c) in z.terms() {
        let a = NormalPoly::word(w.clone());
        for (l, r) in KoszulGen::new(n, *g).split(m) {
            let coeff = multiply(&a, f.value(l.index));
            out.add(&coeff, r.index, c);
        }
    }
    out
}

/// Connes differential at degree 0, `b_0 = p_1 . bbar_0 . i_0`: every
/// element of `A` maps to a degree-1 cycle.
pub fn connes_b0(a: &NormalPoly) -> KoszulChain {
    // bbar_0(a) = 1 (x) a in the reduced Hochschild chain complex
    let mut bar = HochBarChain::zero(1);
    for (w, c) in a.terms() {
        // weight-0 components die in the reduced complex
        bar.add_words(crate::freealg::Word::one(), vec![w.clone()], c.clone());
    }
    induced_p_on_chains(&bar)
}

/// Result of a calculus operation: the raw cochain, its expansion in the
/// named basis when one exists, and a witness when the class is zero.
#[derive(Debug, Clone)]
pub struct OpResult {
    pub cochain: KoszulCochain,
    pub coords: Option<CohClassCoords>,
    pub boundary_witness: Option<KoszulCochain>,
}

/// Gerstenhaber bracket via the transport path, with the class expressed in
/// the named basis of its degree.
pub fn gerstenhaber(f: &KoszulCochain, g: &KoszulCochain, budget: usize) -> OpResult {
    let cochain = bar_bracket_on_koszul(f, g);
    let boundary_witness = match is_boundary_cochain(&cochain, budget) {
        BoundaryVerdict::Boundary(w) => Some(w),
        _ => None,
    };
    let coords = if boundary_witness.is_some() {
        Some(CohClassCoords {
            degree: -(cochain.degree as i8),
            weight: cochain.internal_weight().unwrap_or(0),
            coords: vec![],
        })
    } else {
        express_in_paper_basis(&Instantiated::Cochain(cochain.clone()), budget)
    };
    OpResult {
        cochain,
        coords,
        boundary_witness,
    }
}

/// `f u unit = f` and `unit u f = f` hold on the nose; exposed for the
/// identity checks.
pub fn cup_with_unit_is_identity(f: &KoszulCochain) -> bool {
    let u = KoszulCochain::unit();
    cup(f, &u) == *f && cup(&u, f) == *f
}

/// `unit cap z = z` on the nose.
pub fn cap_with_unit_is_identity(z: &KoszulChain) -> bool {
    cap(&KoszulCochain::unit(), z) == *z
}

/// Iterated-cap operator `i_f` on a chain, `i_f(z) = f cap z`.
pub fn cap_operator(f: &KoszulCochain, z: &KoszulChain) -> KoszulChain {
    cap(f, z)
}

/// One ad-hoc scale helper used by verification sweeps.
pub fn scale_chain(z: &KoszulChain, k: i64) -> KoszulChain {
    z.scale(&Scalar::from_integer(k.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{normal_form_word, scalar_int as si, Word};
    use crate::homology::{hh0_express, DEFAULT_SOLVE_BUDGET};
    use crate::koszul::{chain_diff, GEN_X};
    use crate::paperdata::{instantiate, ClassLabel, Family, FormalCombination};

    fn word(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    fn inst_cochain(s: &str) -> KoszulCochain {
        instantiate(&ClassLabel::parse(s).unwrap())
            .unwrap()
            .cochain()
    }

    fn inst_chain(s: &str) -> KoszulChain {
        instantiate(&ClassLabel::parse(s).unwrap()).unwrap().chain()
    }

    #[test]
    fn cup_unit_identity() {
        for s in ["A-1", "B-1(2)", "A-2", "A-4", "K-1(;2)"] {
            assert!(cup_with_unit_is_identity(&inst_cochain(s)), "{s}");
        }
    }

    #[test]
    fn cup_of_degree2_classes_vanishes_identically() {
        // A^{-2} u A^{-2} sends the V_4 generator to x . 0 = 0
        let a = inst_cochain("A-2");
        assert!(cup(&a, &a).is_zero());
        let b = inst_cochain("B-2(;1)");
        assert!(cup(&a, &b).is_zero());
        assert!(cup(&b, &a).is_zero());
        assert!(cup(&b, &b).is_zero());
    }

    #[test]
    fn cup_am1_dm1_vanishes_identically() {
        let a = inst_cochain("A-1");
        let d = inst_cochain("D-1(3,1)");
        assert!(cup(&a, &d).is_zero());
    }

    #[test]
    fn cap_table_first_rows() {
        // A^{-1} cap alpha_1 = alpha_0
        let a = inst_cochain("A-1");
        let alpha1 = inst_chain("alpha1");
        let r = cap(&a, &alpha1);
        assert_eq!(r.into_poly(), NormalPoly::word(word("x")));
        // B^{-1}(1) cap beta_1 = -beta_0(2): x B(x) = x y x = -y^2 x
        let b = inst_cochain("B-1(1)");
        let beta1 = inst_chain("beta1");
        let r = cap(&b, &beta1).into_poly();
        let mut expect = FormalCombination::zero();
        expect.add_int(ClassLabel::with_ns(Family::Beta0, vec![2]), -1);
        assert_eq!(hh0_express(&r), expect);
        // unit cap z = z
        assert!(cap_with_unit_is_identity(&alpha1));
    }

    #[test]
    fn connes_examples() {
        // b_0(x) = 1 (x) x = alpha_1
        let b = connes_b0(&NormalPoly::word(word("x")));
        let mut expect = KoszulChain::zero(1);
        expect.add_word(Word::one(), GEN_X.index, si(1));
        assert_eq!(b, expect);
        // b_0(1) = 0
        assert!(connes_b0(&NormalPoly::one()).is_zero());
        // results are cycles
        let c = connes_b0(&normal_form_word(&word("yzx")));
        assert!(chain_diff(&c).is_zero());
    }

    #[test]
    fn bracket_with_class_expression() {
        // [A^{-1}, B^{-1}(2)] = 2 B^{-1}(2)
        let a = inst_cochain("A-1");
        let b = inst_cochain("B-1(2)");
        let r = gerstenhaber(&a, &b, DEFAULT_SOLVE_BUDGET);
        let coords = r.coords.unwrap();
        assert_eq!(
            coords.coords,
            vec![(ClassLabel::parse("B-1(2)").unwrap(), si(2))]
        );
    }
}
