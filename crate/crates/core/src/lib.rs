//! Exact symbolic engine for the Hochschild homology, cohomology and
//! Tamarkin-Tsygan calculus of the algebra `A = k<x,y,z>/(x^2+yx, xz, zy)`.
//!
//! All arithmetic is over arbitrary-precision rationals; every check the
//! verification suites perform is an exact identity, never a numeric
//! approximation.

pub mod exactla;
pub mod freealg;
pub mod koszul;

pub mod barbridge;
pub mod calculus;
pub mod homology;
pub mod paperdata;
pub mod verify;

pub use freealg::{basis_words, multiply, normal_form, parse_poly, FreePoly, NormalPoly, Word};
