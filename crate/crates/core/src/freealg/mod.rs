//! Words and polynomials of the free algebra on `{x, y, z}`, reduction to
//! normal form modulo `(x^2 + yx, xz, zy)`, and the weight-graded monomial
//! basis of the quotient algebra `A`.

mod basis;
mod parse;
mod poly;
mod word;

pub use basis::{
    basis_words, count_by_rewriting, count_by_types, weight_basis, words_of_weight, TypedMonomial,
    WeightBasis,
};
pub use parse::{parse_poly, ParseError};
pub use poly::{
    mul_word_left, mul_word_right, multiply, normal_form, normal_form_word, scalar_int,
    scalar_ratio, FreePoly, NormalPoly, Scalar,
};
pub use word::{Letter, Word};
