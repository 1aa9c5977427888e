use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{MovingLine, Scalar, TernaryPoly};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Determinant strategy for the Sylvester matrix over `Q[x0, x1, x2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    /// Cofactor for size up to 6, fraction-free elimination above.
    Auto,
    /// Memoized Laplace expansion with polynomial entries.
    Cofactor,
    /// Fraction-free elimination on integer specializations of the matrix,
    /// followed by interpolation.
    Bareiss,
}

const COFACTOR_MAX: usize = 6;

/// Sylvester matrix of `p` (degree `k`) and `q` (degree `m`) in `(s, t)`,
/// entries linear in `x`: `m` shifted rows of `p` then `k` shifted rows of `q`.
pub fn sylvester_matrix(p: &MovingLine, q: &MovingLine) -> Vec<Vec<TernaryPoly>> {
    let (k, m) = (p.degree(), q.degree());
    let n = k + m;
    let mut rows = Vec::with_capacity(n);
    for r in 0..m {
        let mut row = vec![TernaryPoly::zero(1); n];
        for i in 0..=k {
            row[r + i] = p.coefficient_line(i);
        }
        rows.push(row);
    }
    for r in 0..k {
        let mut row = vec![TernaryPoly::zero(1); n];
        for i in 0..=m {
            row[r + i] = q.coefficient_line(i);
        }
        rows.push(row);
    }
    rows
}

/// Resultant in `(s, t)` of two moving lines, a form of degree `deg p + deg q`
/// in `x`. Errors with `ZeroResultant` when it vanishes identically.
pub fn resultant_moving_lines(p: &MovingLine, q: &MovingLine) -> Result<TernaryPoly> {
    resultant_with(p, q, DetMethod::Auto)
}

pub fn resultant_with(p: &MovingLine, q: &MovingLine, method: DetMethod) -> Result<TernaryPoly> {
    if p.degree() == 0 || q.degree() == 0 {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    let m = sylvester_matrix(p, q);
    let n = m.len();
    let det = match method {
        DetMethod::Cofactor => det_cofactor(&m),
        DetMethod::Bareiss => det_interpolated(&m),
        DetMethod::Auto if n <= COFACTOR_MAX => det_cofactor(&m),
        DetMethod::Auto => det_interpolated(&m),
    };
    if det.is_zero() {
        Err(Error::ZeroResultant)
    } else {
        Ok(det)
    }
}

/// Laplace expansion along rows, memoized on the set of columns still free.
fn det_cofactor(m: &[Vec<TernaryPoly>]) -> TernaryPoly {
    let n = m.len();
    assert!(n < 31);
    let mut memo: HashMap<u32, TernaryPoly> = HashMap::new();
    fn minor(
        m: &[Vec<TernaryPoly>],
        row: usize,
        cols: u32,
        memo: &mut HashMap<u32, TernaryPoly>,
    ) -> TernaryPoly {
        let n = m.len();
        if row == n {
            return TernaryPoly::constant(Scalar::one());
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = TernaryPoly::zero(n - row);
        let mut sign_neg = false;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << c), memo);
                let term = entry * &sub;
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(m, 0, (1u32 << n) - 1, &mut memo)
}

/// The determinant is a form of degree `n` in `x`, so it is fixed by its
/// values on the `(n + 1) x (n + 1)` grid `x = (a, b, 1)`. Each value is an
/// integer determinant computed by fraction-free elimination; the form is
/// recovered by interpolating first in `a`, then in `b`.
fn det_interpolated(m: &[Vec<TernaryPoly>]) -> TernaryPoly {
    let n = m.len();
    let nodes: Vec<Scalar> = (0..=n as i64).map(|v| Scalar::from_integer(v.into())).collect();
    let vandermonde = ExactMatrix::from_rows(
        nodes
            .iter()
            .map(|x| (0..=n).scan(Scalar::one(), |p, _| Some(std::mem::replace(p, &*p * x))).collect())
            .collect(),
    );
    let inv = vandermonde.inverse().expect("distinct nodes");
    let one = Scalar::one();
    // by_b[b][j]: coefficient of a^j in det(M(a, b, 1)).
    let by_b: Vec<Vec<Scalar>> = nodes
        .iter()
        .map(|b| {
            let values: Vec<Scalar> = nodes
                .iter()
                .map(|a| {
                    let point = [a.clone(), b.clone(), one.clone()];
                    let entries = m.iter().flat_map(|row| row.iter().map(|e| e.eval(&point))).collect();
                    ExactMatrix::new(n, n, entries).determinant()
                })
                .collect();
            inv.mul_vec(&values)
        })
        .collect();
    let mut terms = Vec::new();
    for j in 0..=n {
        let column: Vec<Scalar> = by_b.iter().map(|row| row[j].clone()).collect();
        for (l, c) in inv.mul_vec(&column).into_iter().enumerate() {
            if j + l <= n {
                terms.push(([j as u32, l as u32, (n - j - l) as u32], c));
            } else {
                debug_assert!(c.is_zero(), "determinant exceeds degree {n}");
            }
        }
    }
    TernaryPoly::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, BinaryForm};

    fn ml(a: &[i64], b: &[i64], c: &[i64]) -> MovingLine {
        MovingLine::new(BinaryForm::from_ints(a), BinaryForm::from_ints(b), BinaryForm::from_ints(c)).unwrap()
    }

    fn tp(terms: &[([u32; 3], i64)]) -> TernaryPoly {
        TernaryPoly::from_terms(terms.iter().map(|(e, c)| (*e, int(*c))))
    }

    #[test]
    fn conic_resultant() {
        // p = t x0 - s x1, q = t x1 - s x2
        let p = ml(&[0, 1], &[-1, 0], &[0, 0]);
        let q = ml(&[0, 0], &[0, 1], &[-1, 0]);
        let r = resultant_moving_lines(&p, &q).unwrap();
        assert_eq!(r.primitive(), tp(&[([1, 0, 1], 1), ([0, 2, 0], -1)]));
    }

    #[test]
    fn equal_lines_give_zero_resultant() {
        let p = ml(&[0, 1], &[-1, 0], &[0, 0]);
        assert_eq!(resultant_moving_lines(&p, &p), Err(Error::ZeroResultant));
    }

    #[test]
    fn cuspidal_cubic_resultant() {
        // p = t x1 - s x2, q = t^2 x0 - s^2 x1
        let p = ml(&[0, 0], &[0, 1], &[-1, 0]);
        let q = ml(&[0, 0, 1], &[-1, 0, 0], &[0, 0, 0]);
        let r = resultant_moving_lines(&p, &q).unwrap();
        assert_eq!(r.degree(), 3);
        // Substitution oracle: the result vanishes on (s^3, s t^2, t^3).
        let forms = [
            BinaryForm::from_ints(&[1, 0, 0, 0]),
            BinaryForm::from_ints(&[0, 0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 0, 1]),
        ];
        assert!(r.substitute(&forms).is_zero());
        let prim = r.primitive();
        let target = tp(&[([0, 3, 0], 1), ([1, 0, 2], -1)]);
        assert!(prim == target || prim == -&target);
    }

    #[test]
    fn cofactor_and_bareiss_agree() {
        let p = ml(&[1, -2, 0, 3], &[0, 1, 1, -1], &[2, 0, -1, 1]);
        let q = ml(&[1, 0, 2, -1, 1], &[3, 1, 0, 0, -2], &[0, -1, 1, 2, 1]);
        let a = resultant_with(&p, &q, DetMethod::Cofactor).unwrap();
        let b = resultant_with(&p, &q, DetMethod::Bareiss).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degree(), 7);
    }
}
