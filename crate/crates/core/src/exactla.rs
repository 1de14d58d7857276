//! Exact rational linear algebra: reduced row echelon form, rank, kernel and
//! image bases, membership tests and linear solves.
//!
//! Rows are stored sparsely (sorted `(column, coefficient)` pairs); the
//! differential matrices of the weight-truncated complexes have a handful of
//! entries per column, and the largest ones (several thousand rows and
//! columns) would not fit comfortably as dense rational arrays.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::freealg::Scalar;

/// Sparse vector: strictly ascending column indices, nonzero coefficients.
pub type SparseVec = Vec<(u32, Scalar)>;

/// `a + c * b` for sorted sparse vectors.
pub fn sv_add_scaled(a: &SparseVec, b: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (Some((ca, _)), Some((cb, vb))) if cb < ca => {
                out.push((*cb, vb * c));
                j += 1;
            }
            (Some((ca, va)), Some((_, vb))) => {
                let v = va + vb * c;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, vb * c));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sv_scale(a: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

pub fn sv_get(a: &SparseVec, col: u32) -> Option<&Scalar> {
    a.binary_search_by_key(&col, |&(i, _)| i)
        .ok()
        .map(|k| &a[k].1)
}

pub fn sv_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c.clone()))
        .collect()
}

pub fn sv_to_dense(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, c) in v {
        out[*i as usize] = c.clone();
    }
    out
}

/// Dimension-checked sparse rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

/// Reduced row echelon form: rows sorted by ascending pivot column, pivot
/// coefficients equal to one, pivot columns cleared everywhere else.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<u32>,
}

impl RatMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> RatMatrix {
        RatMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.rows[i].push((i as u32, Scalar::one()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> RatMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged rows");
                sv_from_dense(r)
            })
            .collect();
        RatMatrix { nrows, ncols, rows }
    }

    pub fn from_sparse_rows(ncols: usize, rows: Vec<SparseVec>) -> RatMatrix {
        for r in &rows {
            debug_assert!(r.iter().all(|&(c, _)| (c as usize) < ncols));
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
        }
        RatMatrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        sv_get(&self.rows[i], j as u32)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&(j as u32), |&(c, _)| c) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j as u32, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r {
                rows[*j as usize].push((i as u32, c.clone()));
            }
        }
        RatMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    /// Matrix-vector product `M v` with `v` given as column vector.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = Scalar::zero();
            let (mut a, mut b) = (0, 0);
            while a < row.len() && b < v.len() {
                match row[a].0.cmp(&v[b].0) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        acc += &row[a].1 * &v[b].1;
                        a += 1;
                        b += 1;
                    }
                }
            }
            if !acc.is_zero() {
                out.push((i as u32, acc));
            }
        }
        out
    }

    /// `self * other` (sparse product, for d∘d style checks).
    pub fn mat_mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
            for (k, c) in r {
                for (j, v) in &other.rows[*k as usize] {
                    let e = acc.entry(*j).or_insert_with(Scalar::zero);
                    *e += c * v;
                }
            }
            rows.push(
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect::<SparseVec>(),
            );
        }
        RatMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    /// Reduced row echelon form of the row space.
    pub fn rref(&self) -> Echelon {
        echelonize(self.rows.clone(), self.ncols as u32, true)
    }

    pub fn rank(&self) -> usize {
        echelonize(self.rows.clone(), self.ncols as u32, false)
            .pivots
            .len()
    }

    /// Basis of the null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let ech = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &ech.pivots {
            is_pivot[p as usize] = true;
        }
        // row index by pivot column for lookups
        let mut vectors = Vec::new();
        for free in 0..self.ncols as u32 {
            if is_pivot[free as usize] {
                continue;
            }
            let mut v: SparseVec = Vec::new();
            for (i, row) in ech.rows.iter().enumerate() {
                if let Some(c) = sv_get(row, free) {
                    v.push((ech.pivots[i], -c.clone()));
                }
            }
            v.push((free, Scalar::one()));
            v.sort_by_key(|&(c, _)| c);
            vectors.push(v);
        }
        // columns ascend with `free`, and each vector leads at a distinct
        // free column, so the set is already independent; echelonize for the
        // canonical representation
        SubspaceBasis::from_sparse_vectors(self.ncols, vectors)
    }

    /// Echelonized basis of the column space.
    pub fn image_basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_sparse_vectors(self.nrows, self.transpose().rows.clone())
    }

    /// One exact solution of `M x = b`, if the system is consistent.
    ///
    /// Row-reduces the augmented system `[M | b]` with `b` as an extra
    /// column barred from pivoting.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let aug = self.ncols as u32;
        let mut rows = self.rows.clone();
        for (i, c) in b {
            rows[*i as usize].push((aug, c.clone()));
        }
        let ech = echelonize(rows, aug, true);
        // a row supported only on the augmented column signals inconsistency
        // (echelonize keeps such rows with pivot >= aug out of `pivots`)
        if ech.rows.len() > ech.pivots.len() {
            return None;
        }
        let mut x: SparseVec = Vec::new();
        for (i, row) in ech.rows.iter().enumerate() {
            if let Some(c) = sv_get(row, aug) {
                x.push((ech.pivots[i], c.clone()));
            }
        }
        x.sort_by_key(|&(c, _)| c);
        debug_assert_eq!(self.mul_vec(&x), *b);
        Some(x)
    }
}

/// Forward elimination with sparse-favoring pivot choice; optionally
/// back-substitutes to full reduced form.
///
/// Columns `>= pivot_limit` never become pivots; rows whose leading entry
/// falls there are retained at the end of `rows` (after all pivot rows).
fn echelonize(rows: Vec<SparseVec>, pivot_limit: u32, reduce: bool) -> Echelon {
    let mut buckets: BTreeMap<u32, Vec<SparseVec>> = BTreeMap::new();
    let mut ncols = pivot_limit;
    for r in rows {
        if let Some(&(lead, _)) = r.first() {
            ncols = ncols.max(lead + 1);
            buckets.entry(lead).or_default().push(r);
        }
    }
    let mut pivot_rows: Vec<SparseVec> = Vec::new();
    let mut pivots: Vec<u32> = Vec::new();
    let mut rest: Vec<SparseVec> = Vec::new();
    while let Some((&col, _)) = buckets.iter().next() {
        let mut rows_here = buckets.remove(&col).unwrap();
        if col >= pivot_limit {
            rest.extend(rows_here);
            continue;
        }
        // fewest nonzeros first keeps fill-in down; ties keep insertion order
        let best = rows_here
            .iter()
            .enumerate()
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let mut pivot = rows_here.swap_remove(best);
        let inv = {
            let lead = &pivot[0].1;
            Scalar::one() / lead
        };
        if !inv.is_one() {
            pivot = sv_scale(&pivot, &inv);
        }
        for r in rows_here {
            let factor = -r[0].1.clone();
            let reduced = sv_add_scaled(&r, &pivot, &factor);
            if let Some(&(lead, _)) = reduced.first() {
                debug_assert!(lead > col);
                buckets.entry(lead).or_default().push(reduced);
            }
        }
        pivot_rows.push(pivot);
        pivots.push(col);
    }
    if reduce {
        // clear pivot columns above the pivots, working right to left
        for i in (0..pivot_rows.len()).rev() {
            let col = pivots[i];
            let piv = pivot_rows[i].clone();
            #[allow(clippy::needless_range_loop)]
            for j in 0..i {
                if let Some(c) = sv_get(&pivot_rows[j], col) {
                    let factor = -c.clone();
                    pivot_rows[j] = sv_add_scaled(&pivot_rows[j], &piv, &factor);
                }
            }
            for r in rest.iter_mut() {
                if let Some(c) = sv_get(r, col) {
                    let factor = -c.clone();
                    *r = sv_add_scaled(r, &piv, &factor);
                }
            }
        }
    }
    pivot_rows.extend(rest);
    Echelon {
        ncols: ncols as usize,
        rows: pivot_rows,
        pivots,
    }
}

/// A linear subspace, held as the reduced row echelon form of a spanning set.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    ambient: usize,
    ech: Echelon,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> SubspaceBasis {
        SubspaceBasis {
            ambient,
            ech: Echelon {
                ncols: ambient,
                rows: Vec::new(),
                pivots: Vec::new(),
            },
        }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> SubspaceBasis {
        SubspaceBasis::from_sparse_vectors(
            ambient,
            vectors.iter().map(|v| sv_from_dense(v)).collect(),
        )
    }

    pub fn from_sparse_vectors(ambient: usize, vectors: Vec<SparseVec>) -> SubspaceBasis {
        let ech = echelonize(vectors, ambient as u32, true);
        SubspaceBasis { ambient, ech }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ech.pivots.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.ech.rows
    }

    /// Remainder of `v` after reduction against the echelon rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (i, &p) in self.ech.pivots.iter().enumerate() {
            if let Some(c) = sv_get(&r, p) {
                let factor = -c.clone();
                r = sv_add_scaled(&r, &self.ech.rows[i], &factor);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the echelonized basis, or `None` if outside.
    pub fn membership(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if let Some(&(c, _)) = v.last() {
            assert!(
                (c as usize) < self.ambient,
                "vector dimension exceeds ambient dimension"
            );
        }
        let mut coords = vec![Scalar::zero(); self.dim()];
        let mut r = v.clone();
        for (i, &p) in self.ech.pivots.iter().enumerate() {
            if let Some(c) = sv_get(&r, p) {
                coords[i] = c.clone();
                let factor = -c.clone();
                r = sv_add_scaled(&r, &self.ech.rows[i], &factor);
            }
        }
        r.is_empty().then_some(coords)
    }

    /// Dimension of the span of this subspace together with extra vectors.
    pub fn dim_with(&self, extra: &[SparseVec]) -> usize {
        let mut all = self.ech.rows.clone();
        all.extend(extra.iter().cloned());
        let ech = echelonize(all, self.ambient as u32, false);
        ech.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::scalar_int as si;

    fn dense(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| si(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(dense(&[&[0, 0], &[0, 0]]).kernel_basis().dim(), 2);
        assert_eq!(dense(&[&[1, 0], &[0, 1]]).kernel_basis().dim(), 0);
        // [[1,2],[2,4]] has kernel spanned by (-2, 1)
        let k = dense(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        let v = sv_from_dense(&[si(-2), si(1)]);
        assert!(k.contains(&v));
        assert!(k.membership(&sv_from_dense(&[si(1), si(0)])).is_none());
    }

    #[test]
    fn rank_nullity() {
        let m = dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank() + m.kernel_basis().dim(), m.ncols());
        for v in m.kernel_basis().vectors() {
            assert!(m.mul_vec(v).is_empty());
        }
    }

    #[test]
    fn membership_basics() {
        let s = SubspaceBasis::from_vectors(2, vec![vec![si(1), si(0)]]);
        assert_eq!(
            s.membership(&sv_from_dense(&[si(0), si(0)])),
            Some(vec![si(0)])
        );
        assert_eq!(
            s.membership(&sv_from_dense(&[si(1), si(0)])),
            Some(vec![si(1)])
        );
        assert!(s.membership(&sv_from_dense(&[si(0), si(1)])).is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = dense(&[&[1, 2], &[3, 4]]);
        let b = sv_from_dense(&[si(5), si(11)]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let sing = dense(&[&[1, 2], &[2, 4]]);
        assert!(sing.solve(&sv_from_dense(&[si(1), si(3)])).is_none());
        let b2 = sv_from_dense(&[si(1), si(2)]);
        let x2 = sing.solve(&b2).unwrap();
        assert_eq!(sing.mul_vec(&x2), b2);
    }

    #[test]
    fn image_and_solvability_agree() {
        // membership(v, image_basis(m)) iff m x = v solvable
        let m = dense(&[&[1, 0], &[0, 0], &[2, 0]]);
        let img = m.image_basis();
        let inside = sv_from_dense(&[si(3), si(0), si(6)]);
        let outside = sv_from_dense(&[si(1), si(1), si(2)]);
        assert!(img.contains(&inside) && m.solve(&inside).is_some());
        assert!(!img.contains(&outside) && m.solve(&outside).is_none());
    }
}
