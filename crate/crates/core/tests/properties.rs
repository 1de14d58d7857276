//! Property-based invariants of the rewriting engine and the exact linear
//! algebra kernel.

use proptest::prelude::*;

use ttcalc::exactla::{sv_from_dense, RatMatrix};
use ttcalc::freealg::{
    multiply, normal_form, normal_form_word, scalar_int, FreePoly, Letter, Word,
};

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..3, 0..=max_len).prop_map(|ls| {
        let letters: Vec<Letter> = ls
            .into_iter()
            .map(|i| [Letter::X, Letter::Y, Letter::Z][i as usize])
            .collect();
        Word::from_letters(&letters)
    })
}

fn arb_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = FreePoly> {
    proptest::collection::vec((arb_word(max_len), -4i64..=4), 1..=max_terms).prop_map(|terms| {
        let mut p = FreePoly::zero();
        for (w, c) in terms {
            p.add(w, scalar_int(c));
        }
        p
    })
}

proptest! {
    /// Leftmost-first and rightmost-first rewriting reach the same normal form.
    #[test]
    fn reduction_is_confluent(p in arb_poly(5, 12)) {
        let left = p.reduce_with_strategy(false);
        let right = p.reduce_with_strategy(true);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &normal_form(&p));
    }

    /// Normal form is idempotent.
    #[test]
    fn reduction_is_idempotent(p in arb_poly(5, 12)) {
        let once = normal_form(&p);
        prop_assert_eq!(&normal_form(&once.to_free()), &once);
    }

    /// Reduction is compatible with the product of `A`.
    #[test]
    fn reduction_is_multiplicative(u in arb_word(7), v in arb_word(7)) {
        let whole = normal_form_word(&u.concat(&v));
        let parts = multiply(&normal_form_word(&u), &normal_form_word(&v));
        prop_assert_eq!(whole, parts);
    }

    /// Every stored monomial of a normal form avoids the leading factors.
    #[test]
    fn normal_forms_are_normal(p in arb_poly(5, 10)) {
        for (w, _) in normal_form(&p).terms() {
            prop_assert!(w.is_normal());
        }
    }

    /// rank + kernel dimension = column count, and kernel vectors solve
    /// M v = 0 exactly.
    #[test]
    fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
        let rows: Vec<Vec<_>> = entries
            .chunks(4)
            .map(|r| r.iter().map(|&x| scalar_int(x)).collect())
            .collect();
        let m = RatMatrix::from_rows(rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.dim(), m.ncols());
        for v in kernel.vectors() {
            prop_assert!(m.mul_vec(v).is_empty());
        }
    }

    /// Membership in the column space agrees with solvability.
    #[test]
    fn membership_matches_solvability(
        entries in proptest::collection::vec(-3i64..=3, 9),
        rhs in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let rows: Vec<Vec<_>> = entries
            .chunks(3)
            .map(|r| r.iter().map(|&x| scalar_int(x)).collect())
            .collect();
        let m = RatMatrix::from_rows(rows);
        let b: Vec<_> = rhs.into_iter().map(scalar_int).collect();
        let b = sv_from_dense(&b);
        let solvable = m.solve(&b).is_some();
        let member = m.image_basis().contains(&b);
        prop_assert_eq!(solvable, member);
    }
}
