//! Dense matrices over `Q` with rank and kernel computation.
//!
//! Rows are cleared to integers, reduced to echelon form by fraction-free
//! (Bareiss) elimination, and only then back-substituted over the rationals.
//! Pivots are always the first nonzero entry of a column, so every result is
//! deterministic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{common_denominator, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form: nonzero rows only, with their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Column count is taken from the first row; an empty list gives 0x0.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let entries: Vec<Scalar> = rows.into_iter().inspect(|r| assert_eq!(r.len(), cols)).flatten().collect();
        Self::new(nrows, cols, entries)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Scalar>], height: usize) -> Self {
        let mut m = Self::zeros(height, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| crate::arith::int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).fold(Scalar::zero(), |x, y| x + y))
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let v = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .fold(Scalar::zero(), |x, y| x + y);
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let (echelon, pivots) = bareiss_echelon(self);
        back_substitute(echelon, &pivots, self.cols)
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(self).1.len()
    }

    /// Basis of the right kernel in reduced echelon form: each vector's first
    /// nonzero coordinate is 1, pivots strictly increase, and every other
    /// vector vanishes at each pivot. Empty for a trivial kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let r = self.rref();
        let raw = nullspace_from_rref(&r, self.cols);
        if raw.is_empty() {
            return raw;
        }
        ExactMatrix::from_rows(raw).rref().rows
    }

    /// Determinant by fraction-free elimination over `Z`.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let den = common_denominator(row);
                let out = row.iter().map(|q| (q * Scalar::from_integer(den.clone())).to_integer()).collect();
                scale *= den;
                out
            })
            .collect();
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { Scalar::one() } else { Scalar::new(prev, scale) };
        if negate { -det } else { det }
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.rows[i][n + j].clone());
            }
        }
        Some(inv)
    }
}

/// Coefficients `c` with `sum c_i vectors[i] = target`, if any.
pub fn solve_combination(vectors: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let height = target.len();
    let mut cols: Vec<Vec<Scalar>> = vectors.to_vec();
    cols.push(target.iter().map(|v| -v).collect());
    let m = ExactMatrix::from_columns(&cols, height);
    let last = vectors.len();
    m.kernel_basis().into_iter().find(|v| !v[last].is_zero()).map(|v| {
        let scale = v[last].recip();
        v[..last].iter().map(|x| x * &scale).collect()
    })
}

/// Echelon form over `Z` (rows cleared of denominators) plus pivot columns.
fn bareiss_echelon(m: &ExactMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let den = common_denominator(row);
            row.iter().map(|q| (q * Scalar::from_integer(den.clone())).to_integer()).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m.rows {
            for j in c + 1..m.cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn back_substitute(echelon: Vec<Vec<BigInt>>, pivots: &[usize], cols: usize) -> Rref {
    let mut rows: Vec<Vec<Scalar>> = echelon
        .into_iter()
        .zip(pivots)
        .map(|(row, &pc)| {
            let inv = Scalar::from_integer(row[pc].clone()).recip();
            row.into_iter().map(|v| Scalar::from_integer(v) * &inv).collect()
        })
        .collect();
    for i in (0..rows.len()).rev() {
        let pc = pivots[i];
        for k in 0..i {
            let factor = rows[k][pc].clone();
            if factor.is_zero() {
                continue;
            }
            let (upper, lower) = rows.split_at_mut(i);
            for (a, b) in upper[k][pc..cols].iter_mut().zip(&lower[0][pc..cols]) {
                *a -= &factor * b;
            }
        }
    }
    Rref { rows, pivots: pivots.to_vec() }
}

fn nullspace_from_rref(r: &Rref, cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in r.rows.iter().zip(&r.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn determinant_of_small_matrices() {
        let m = ExactMatrix::from_i64(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        assert_eq!(m.determinant(), int(-5));
        let half = ExactMatrix::from_rows(vec![vec![ratio(1, 2), int(1)], vec![int(1), int(4)]]);
        assert_eq!(half.determinant(), int(1));
        assert_eq!(ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).determinant(), int(0));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(ExactMatrix::identity(2).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_one_kernel_is_canonical() {
        let m = ExactMatrix::from_i64(&[&[1, 1, 0], &[0, 0, 0]]);
        assert_eq!(m.kernel_basis(), vec![v(&[1, -1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn proportional_rows() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis(), vec![vec![int(1), ratio(-1, 2)]]);
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(ExactMatrix::zeros(3, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn rational_entries_and_inverse() {
        let m = ExactMatrix::from_rows(vec![vec![ratio(1, 2), int(1)], vec![int(3), ratio(-1, 3)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(2));
        assert!(ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn combination_solver() {
        let vs = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        assert_eq!(solve_combination(&vs, &v(&[2, -3, -1])), Some(v(&[2, -3])));
        assert_eq!(solve_combination(&vs, &v(&[0, 0, 1])), None);
    }

    fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c)
                .prop_map(move |e| ExactMatrix::new(r, c, e.into_iter().map(int).collect()))
        })
    }

    fn arb_square_pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
        (1usize..5).prop_flat_map(|n| {
            let entries = || prop::collection::vec(-4i64..=4, n * n);
            (entries(), entries()).prop_map(move |(a, b)| {
                (ExactMatrix::new(n, n, a.into_iter().map(int).collect()), ExactMatrix::new(n, n, b.into_iter().map(int).collect()))
            })
        })
    }

    proptest! {
        #[test]
        fn determinant_is_multiplicative((a, b) in arb_square_pair()) {
            prop_assert_eq!(a.mul(&b).determinant(), a.determinant() * b.determinant());
            prop_assert_eq!(a.determinant().is_zero(), a.rank() < a.rows());
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilate(m in arb_matrix()) {
            for k in m.kernel_basis() {
                prop_assert!(m.mul_vec(&k).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn kernel_is_deterministic_echelon(m in arb_matrix()) {
            let a = m.kernel_basis();
            prop_assert_eq!(&a, &m.kernel_basis());
            let mut last = None;
            for vec in &a {
                let p = vec.iter().position(|x| !x.is_zero()).unwrap();
                prop_assert!(vec[p].is_one());
                prop_assert!(last.is_none_or(|l| p > l));
                for other in &a {
                    if other != vec {
                        prop_assert!(other[p].is_zero());
                    }
                }
                last = Some(p);
            }
        }
    }
}
