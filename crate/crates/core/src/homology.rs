//! Per-weight Hochschild homology and cohomology, boundary tests, class
//! arithmetic, and expression of classes in the named bases.
//!
//! Class equality is always decided on representatives: two cycles are equal
//! in homology iff their difference is an exact boundary. Degree 0 also has
//! a combinatorial route (`hh0_canonical`) that works at any weight; the
//! linear-algebra route validates it at bounded weight.

use crate::exactla::{RatMatrix, SubspaceBasis};
use crate::freealg::{NormalPoly, Scalar, Word};
use crate::koszul::{
    chain_basis_len, chain_diff, chain_to_vec, cochain_basis_len, cochain_diff, cochain_to_vec,
    vec_to_chain, vec_to_cochain, weight_matrix, KoszulChain, KoszulCochain, MapId, MAX_DEGREE,
};
use crate::paperdata::{
    instantiate, labels_at, ClassDegree, ClassLabel, Family, FormalCombination, Instantiated,
};

/// One weight-homogeneous piece of a (co)homology group.
#[derive(Debug)]
pub struct HomologySlice {
    /// Homological degree (chain side) or `-n` (cochain side).
    pub degree: i8,
    pub weight: i64,
    pub dim: usize,
    pub cycles: SubspaceBasis,
    pub boundaries: SubspaceBasis,
}

/// `HH_n(A)` at total weight `w`: kernel and image data of the chain complex.
pub fn homology_space(degree: u8, weight: u32) -> HomologySlice {
    assert!(degree <= 5);
    let here = if degree <= MAX_DEGREE {
        chain_basis_len(degree, weight)
    } else {
        0
    };
    let cycles = if degree == 0 {
        // d_0 = 0: every degree-0 element is a cycle
        RatMatrix::zero(0, here).kernel_basis()
    } else if degree > MAX_DEGREE {
        SubspaceBasis::empty(0)
    } else {
        weight_matrix(MapId::ChainDiff, degree, i64::from(weight)).kernel_basis()
    };
    let boundaries = if degree >= MAX_DEGREE {
        SubspaceBasis::empty(here)
    } else {
        weight_matrix(MapId::ChainDiff, degree + 1, i64::from(weight)).image_basis()
    };
    HomologySlice {
        degree: degree as i8,
        weight: i64::from(weight),
        dim: cycles.dim() - boundaries.dim(),
        cycles,
        boundaries,
    }
}

/// `HH^{-n}(A)` at internal weight `w`: kernel and image of the cochain
/// complex.
pub fn cohomology_space(degree: u8, internal_weight: i64) -> HomologySlice {
    assert!(degree <= MAX_DEGREE);
    let here = cochain_basis_len(degree, internal_weight);
    let cycles = if degree == MAX_DEGREE {
        RatMatrix::zero(0, here).kernel_basis()
    } else {
        weight_matrix(MapId::CochainDiff, degree, internal_weight).kernel_basis()
    };
    let boundaries = if degree == 0 {
        SubspaceBasis::empty(here)
    } else {
        weight_matrix(MapId::CochainDiff, degree - 1, internal_weight).image_basis()
    };
    HomologySlice {
        degree: -(degree as i8),
        weight: internal_weight,
        dim: cycles.dim() - boundaries.dim(),
        cycles,
        boundaries,
    }
}

/// Outcome of a boundary test; `Unknown` means the ambient dimension
/// exceeded the budget and no structural witness applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryVerdict<T> {
    Boundary(T),
    NotBoundary,
    Unknown,
}

impl<T> BoundaryVerdict<T> {
    pub fn is_boundary(&self) -> bool {
        matches!(self, BoundaryVerdict::Boundary(_))
    }
}

/// Ambient-dimension budget above which linear solves are not attempted.
pub const DEFAULT_SOLVE_BUDGET: usize = 60_000;

/// Preimage of a degree-`n` cycle under `d_{n+1}`, when one exists.
///
/// The input must be a cycle; passing a non-cycle is a logic error upstream.
pub fn is_boundary_chain(c: &KoszulChain, budget: usize) -> BoundaryVerdict<KoszulChain> {
    if c.is_zero() {
        return BoundaryVerdict::Boundary(KoszulChain::zero(c.degree + 1));
    }
    let n = c.degree;
    if n >= 1 {
        assert!(chain_diff(c).is_zero(), "is_boundary on a non-cycle");
    }
    if n >= MAX_DEGREE {
        return BoundaryVerdict::NotBoundary; // nothing above degree 4
    }
    let w = c
        .homogeneous_weight()
        .expect("weight-homogeneous chains only");
    let src = chain_basis_len(n + 1, w);
    let dst = chain_basis_len(n, w);
    if src.max(dst) > budget {
        return BoundaryVerdict::Unknown;
    }
    let m = weight_matrix(MapId::ChainDiff, n + 1, i64::from(w));
    match m.solve(&chain_to_vec(c, w)) {
        Some(h) => BoundaryVerdict::Boundary(vec_to_chain(&h, n + 1, w)),
        None => BoundaryVerdict::NotBoundary,
    }
}

/// Preimage of a degree-`-n` cocycle under `d_n^*`, when one exists.
pub fn is_boundary_cochain(f: &KoszulCochain, budget: usize) -> BoundaryVerdict<KoszulCochain> {
    let n = f.degree;
    if f.is_zero() {
        return BoundaryVerdict::Boundary(KoszulCochain::zero(n.saturating_sub(1)));
    }
    if n < MAX_DEGREE {
        assert!(cochain_diff(f).is_zero(), "is_boundary on a non-cocycle");
    }
    if n == 0 {
        return BoundaryVerdict::NotBoundary; // nothing below degree 0
    }
    let iw = f
        .internal_weight()
        .expect("weight-homogeneous cochains only");
    if let Some(w) = coboundary_witness_by_pattern(f) {
        return BoundaryVerdict::Boundary(w);
    }
    let src = cochain_basis_len(n - 1, iw);
    let dst = cochain_basis_len(n, iw);
    if src.max(dst) > budget {
        return BoundaryVerdict::Unknown;
    }
    let m = weight_matrix(MapId::CochainDiff, n - 1, iw);
    match m.solve(&cochain_to_vec(f, iw)) {
        Some(h) => BoundaryVerdict::Boundary(vec_to_cochain(&h, n - 1, iw)),
        None => BoundaryVerdict::NotBoundary,
    }
}

/// Structural coboundary witnesses for degree `-2` cocycles supported on the
/// `zy` generator, the shape every nonzero cup product of two degree `-1`
/// classes takes. Candidates are verified exactly before being returned.
fn coboundary_witness_by_pattern(f: &KoszulCochain) -> Option<KoszulCochain> {
    use crate::freealg::Letter;
    use crate::koszul::{GEN_XX, GEN_XZ, GEN_Y, GEN_Z, GEN_ZY};
    if f.degree != 2 {
        return None;
    }
    if !f.value(GEN_XX.index).is_zero() || !f.value(GEN_XZ.index).is_zero() {
        return None;
    }
    let v = f.value(GEN_ZY.index);
    // candidate 1: h = (z -> w) with w = v with one trailing y removed
    let strip_right_y = |p: &NormalPoly| -> Option<NormalPoly> {
        let mut out = NormalPoly::zero();
        for (word, c) in p.terms() {
            if word.last_letter() != Some(Letter::Y) {
                return None;
            }
            out.add_monomial(word.slice(0, word.weight() - 1), c.clone());
        }
        Some(out)
    };
    if let Some(w) = strip_right_y(v) {
        let mut h = KoszulCochain::zero(1);
        h.set_value(GEN_Z.index, w);
        if &cochain_diff(&h) == f {
            return Some(h);
        }
    }
    // candidate 2: h = (y -> u) with u = v with one leading z removed
    let strip_left_z = |p: &NormalPoly| -> Option<NormalPoly> {
        let mut out = NormalPoly::zero();
        for (word, c) in p.terms() {
            if word.first_letter() != Some(Letter::Z) {
                return None;
            }
            out.add_monomial(word.slice(1, word.weight()), c.clone());
        }
        Some(out)
    };
    if let Some(u) = strip_left_z(v) {
        let mut h = KoszulCochain::zero(1);
        h.set_value(GEN_Y.index, u);
        if &cochain_diff(&h) == f {
            return Some(h);
        }
    }
    None
}

/// The class a basis monomial represents in `HH_0(A) = A/[A,A]`, or `None`
/// for the zero class. Follows the letter-moving reductions of the
/// commutator quotient; cyclic families come out in canonical rotation.
pub fn hh0_canonical(w: &Word) -> Option<ClassLabel> {
    let t = crate::freealg::TypedMonomial::classify(w);
    let ns: Vec<i64> = t.ns.iter().map(|&v| i64::from(v)).collect();
    let ms: Vec<i64> = t.ms.iter().map(|&v| i64::from(v)).collect();
    let p = ms.len();
    let label =
        |f: Family, ns: Vec<i64>, ms: Vec<i64>| Some(ClassLabel::new(f, ns, ms).canonical());
    match t.type_id {
        0 => label(Family::Zeta0, vec![], vec![]),
        1 => label(Family::Gamma0, ns, vec![]),
        2 => label(Family::Beta0, ns, vec![]),
        3 => label(Family::Beta0, vec![ns[0] + ns[1]], vec![]),
        7 => label(Family::Alpha0, vec![], vec![]),
        8 => label(Family::Beta0, ns, vec![]),
        // a z-block word with a y-run on both sides of every x survives
        // exactly when it is a cyclic product of y^n z^m x blocks
        9 | 13 => label(Family::EBar0, ns, ms),
        14 => {
            let mut v = ns[..p].to_vec();
            v[0] += ns[p];
            label(Family::EBar0, v, ms)
        }
        15 => {
            if p == 1 {
                label(Family::Delta0, vec![ms[0]], vec![])
            } else {
                // rotate the leading z-run onto the final block
                let mut mv = ms[1..].to_vec();
                *mv.last_mut().unwrap() += ms[0];
                label(Family::EBar0, ns, mv)
            }
        }
        17 => {
            // trailing y-run wraps to the front: pairs ((n_{p+1}, m_1), (n_2, m_2), ...)
            let mut v = vec![ns[p - 1]];
            v.extend_from_slice(&ns[..p - 1]);
            label(Family::EBar0, v, ms)
        }
        4 | 5 | 6 | 10 | 11 | 12 | 16 => None,
        t => panic!("invalid type id {t}"),
    }
}

/// Expression of a degree-0 element in the `HH_0` basis, via the
/// combinatorial canonical form (valid at every weight).
pub fn hh0_express(p: &NormalPoly) -> FormalCombination {
    let mut out = FormalCombination::zero();
    for (w, c) in p.terms() {
        if let Some(l) = hh0_canonical(w) {
            out.add(l, c.clone());
        }
    }
    out
}

/// Coordinates of a class over the instantiated families of its degree and
/// weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClassCoords {
    pub degree: i8,
    pub weight: i64,
    pub coords: Vec<(ClassLabel, Scalar)>,
}

impl CohClassCoords {
    pub fn to_combination(&self) -> FormalCombination {
        let mut out = FormalCombination::zero();
        for (l, c) in &self.coords {
            out.add(l.clone(), c.clone());
        }
        out
    }
}

/// Express a cycle or cocycle in the named basis of its degree.
///
/// Tries the exact hyperplane first (the named classes alone), then modulo
/// boundaries when the weight is small enough for linear algebra. `None`
/// signals a span failure, which callers record as a finding.
pub fn express_in_paper_basis(c: &Instantiated, budget: usize) -> Option<CohClassCoords> {
    match c {
        Instantiated::Chain(c) if c.degree == 0 => {
            // combinatorial route, valid at every weight
            let comb = hh0_express(&c.clone().into_poly());
            Some(CohClassCoords {
                degree: 0,
                weight: c.homogeneous_weight().map_or(0, i64::from),
                coords: comb.terms().map(|(l, s)| (l.clone(), s.clone())).collect(),
            })
        }
        Instantiated::Chain(c) => {
            let degree = c.degree;
            if c.is_zero() {
                return Some(CohClassCoords {
                    degree: degree as i8,
                    weight: 0,
                    coords: vec![],
                });
            }
            let w = i64::from(c.homogeneous_weight().expect("homogeneous chains only"));
            let cd = ClassDegree::from_degree(degree as i8)?;
            let labels = labels_at(cd, w);
            let cols: Vec<_> = labels
                .iter()
                .map(|l| chain_to_vec(&instantiate(l).unwrap().chain(), w as u32))
                .collect();
            let target = chain_to_vec(c, w as u32);
            let ambient = chain_basis_len(degree, w as u32);
            solve_over(&cols, ambient, &target, || {
                (chain_basis_len(degree + 1, w as u32) <= budget).then(|| {
                    weight_matrix(MapId::ChainDiff, degree + 1, w)
                        .image_basis()
                        .vectors()
                        .to_vec()
                })
            })
            .map(|coords| CohClassCoords {
                degree: degree as i8,
                weight: w,
                coords: pair_up(labels, coords),
            })
        }
        Instantiated::Cochain(f) => {
            let n = f.degree;
            if f.is_zero() {
                return Some(CohClassCoords {
                    degree: -(n as i8),
                    weight: 0,
                    coords: vec![],
                });
            }
            let w = f.internal_weight().expect("homogeneous cochains only");
            let cd = ClassDegree::from_degree(-(n as i8))?;
            let labels = labels_at(cd, w);
            let cols: Vec<_> = labels
                .iter()
                .map(|l| cochain_to_vec(&instantiate(l).unwrap().cochain(), w))
                .collect();
            let target = cochain_to_vec(f, w);
            let ambient = cochain_basis_len(n, w);
            solve_over(&cols, ambient, &target, || {
                (n >= 1 && cochain_basis_len(n - 1, w) <= budget).then(|| {
                    weight_matrix(MapId::CochainDiff, n - 1, w)
                        .image_basis()
                        .vectors()
                        .to_vec()
                })
            })
            .map(|coords| CohClassCoords {
                degree: -(n as i8),
                weight: w,
                coords: pair_up(labels, coords),
            })
        }
    }
}

fn pair_up(labels: Vec<ClassLabel>, coords: Vec<Scalar>) -> Vec<(ClassLabel, Scalar)> {
    use num_traits::Zero;
    labels
        .into_iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Solve `sum_i coords_i col_i = target`, first exactly, then modulo the
/// lazily supplied boundary vectors. Coordinates refer to `cols` only.
fn solve_over(
    cols: &[crate::exactla::SparseVec],
    ambient: usize,
    target: &crate::exactla::SparseVec,
    boundaries: impl FnOnce() -> Option<Vec<crate::exactla::SparseVec>>,
) -> Option<Vec<Scalar>> {
    use num_traits::Zero;
    let class_matrix = RatMatrix::from_sparse_rows(ambient, cols.to_vec()).transpose();
    if let Some(sol) = class_matrix.solve(target) {
        let mut coords = vec![Scalar::zero(); cols.len()];
        for (i, c) in sol {
            coords[i as usize] = c;
        }
        return Some(coords);
    }
    let bvecs = boundaries()?;
    let mut all = cols.to_vec();
    all.extend(bvecs);
    let full = RatMatrix::from_sparse_rows(ambient, all).transpose();
    let sol = full.solve(target)?;
    let mut coords = vec![Scalar::zero(); cols.len()];
    for (i, c) in sol {
        if (i as usize) < cols.len() {
            coords[i as usize] = c;
        }
    }
    Some(coords)
}

/// Class equality of two degree-0 chains (elements of `A`) in `HH_0`.
pub fn hh0_equal(a: &NormalPoly, b: &NormalPoly) -> bool {
    hh0_express(a) == hh0_express(b)
}

/// Class equality of homogeneous cycles: exact equality, else boundary test
/// of the difference.
pub fn chains_cohomologous(
    a: &KoszulChain,
    b: &KoszulChain,
    budget: usize,
) -> BoundaryVerdict<KoszulChain> {
    is_boundary_chain(&a.sub(b), budget)
}

pub fn cochains_cohomologous(
    a: &KoszulCochain,
    b: &KoszulCochain,
    budget: usize,
) -> BoundaryVerdict<KoszulCochain> {
    is_boundary_cochain(&a.sub(b), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{scalar_int as si, weight_basis};
    use crate::koszul::{GEN_X, GEN_XZ};

    fn word(s: &str) -> Word {
        Word::from_str_letters(s).unwrap()
    }

    #[test]
    fn hh2_vanishes_small() {
        for w in 2..=8 {
            assert_eq!(homology_space(2, w).dim, 0, "weight {w}");
        }
    }

    #[test]
    fn hh1_weight1_dimension() {
        // alpha_1, delta_1, zeta_1
        assert_eq!(homology_space(1, 1).dim, 3);
    }

    #[test]
    fn hh0_weight2_dimension() {
        // yx, y^2, z^2
        assert_eq!(homology_space(0, 2).dim, 3);
    }

    #[test]
    fn hh0_total_dimension_small() {
        // HH^0(A) = k: only weight 0 contributes
        assert_eq!(cohomology_space(0, 0).dim, 1);
        for w in 1..=8 {
            assert_eq!(cohomology_space(0, w).dim, 0, "weight {w}");
        }
    }

    #[test]
    fn hh_minus3_vanishes_small() {
        for w in -1..=6 {
            assert_eq!(cohomology_space(3, w).dim, 0, "weight {w}");
        }
    }

    #[test]
    fn hh_minus2_weight_minus1() {
        // only A^{-2} lives at internal weight -1
        assert_eq!(cohomology_space(2, -1).dim, 1);
    }

    #[test]
    fn boundary_witness_round_trip() {
        // d2(1 (x) xz) is a boundary with witness 1 (x) xz
        let c = KoszulChain::from_poly(&NormalPoly::one(), GEN_XZ);
        let d = chain_diff(&c);
        match is_boundary_chain(&d, DEFAULT_SOLVE_BUDGET) {
            BoundaryVerdict::Boundary(h) => assert_eq!(chain_diff(&h), d),
            v => panic!("expected boundary, got {v:?}"),
        }
        // alpha_1 = 1 (x) x is not a boundary
        let a = KoszulChain::from_poly(&NormalPoly::one(), GEN_X);
        assert_eq!(
            is_boundary_chain(&a, DEFAULT_SOLVE_BUDGET),
            BoundaryVerdict::NotBoundary
        );
    }

    #[test]
    fn hh0_canonical_examples() {
        // x y^3 (type 8) -> beta0(3)
        assert_eq!(
            hh0_canonical(&word("xyyy")),
            Some(ClassLabel::with_ns(Family::Beta0, vec![3]))
        );
        // z^m x (type 16) -> zero
        assert_eq!(hh0_canonical(&word("zzx")), None);
        // y z^3 x y^2 z x -> ebar0 canonicalized to least rotation ((1,3),(2,1))
        let l = hh0_canonical(&word("yzzzxyyzx")).unwrap();
        assert_eq!(l, ClassLabel::new(Family::EBar0, vec![1, 2], vec![3, 1]));
        // the rotated word gives the same class
        let l2 = hh0_canonical(&word("yyzxyzzzx")).unwrap();
        assert_eq!(l, l2);
    }

    #[test]
    fn hh0_canonical_agrees_with_boundaries() {
        // dual route: w - rep(w) must be a boundary; zero classes must be
        // boundaries outright
        for w in 0..=7u32 {
            let basis = weight_basis(w);
            for m in &basis.words {
                let poly = NormalPoly::word(m.clone());
                let reduced = match hh0_canonical(m) {
                    None => poly,
                    Some(l) => {
                        let rep = instantiate(&l).unwrap().chain().into_poly();
                        poly.sub(&rep)
                    }
                };
                let c = KoszulChain::poly_as_chain(&reduced);
                assert!(
                    is_boundary_chain(&c, usize::MAX).is_boundary(),
                    "monomial {m} disagrees with its canonical class"
                );
            }
        }
    }

    #[test]
    fn express_alpha1() {
        let a = instantiate(&ClassLabel::plain(Family::Alpha1)).unwrap();
        let coords = express_in_paper_basis(&a, DEFAULT_SOLVE_BUDGET).unwrap();
        assert_eq!(
            coords.coords,
            vec![(ClassLabel::plain(Family::Alpha1), si(1))]
        );
    }

    #[test]
    fn express_x_squared_in_hh0() {
        // x^2 = -yx -> coordinate -1 on beta0(1)
        let p = crate::freealg::normal_form_word(&word("xx"));
        let c = Instantiated::Chain(KoszulChain::poly_as_chain(&p));
        let coords = express_in_paper_basis(&c, DEFAULT_SOLVE_BUDGET).unwrap();
        assert_eq!(
            coords.coords,
            vec![(ClassLabel::with_ns(Family::Beta0, vec![1]), si(-1))]
        );
    }

    #[test]
    fn coboundary_patterns() {
        use crate::koszul::GEN_ZY;
        // (zy -> -zxy^3) = d2*(z -> -zxy^2)
        let mut f = KoszulCochain::zero(2);
        f.set_value(GEN_ZY.index, NormalPoly::word(word("zxyyy")).neg());
        match is_boundary_cochain(&f, 0) {
            BoundaryVerdict::Boundary(h) => assert_eq!(cochain_diff(&h), f),
            v => panic!("pattern witness not found: {v:?}"),
        }
    }
}
