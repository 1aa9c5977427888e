//! Graded syzygies of three binary forms of a common degree, the μ-basis of
//! the syzygy module and the Hilbert–Burch check on its minors.

use num_traits::Zero;

use crate::arith::{forms_proportional, BinaryForm, MovingLine, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{solve_combination, ExactMatrix};

/// Generators `(p, q)` of the syzygy module of `(f0, f1, f2)`, of degrees
/// `k <= d - k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasis {
    pub k: usize,
    pub d: usize,
    pub p: MovingLine,
    pub q: MovingLine,
    pub balanced: bool,
}

impl MuBasis {
    pub fn splitting(&self) -> (usize, usize) {
        (self.k, self.d - self.k)
    }
}

/// Coefficient matrix of `A0 f0 + A1 f1 + A2 f2` for `A_i` of degree `n`:
/// rows index the monomials of degree `n + d`, column `c*(n+1) + i` is the
/// coefficient `i` of `A_c`.
pub fn syzygy_matrix(forms: &[BinaryForm; 3], n: usize) -> ExactMatrix {
    let d = forms[0].degree();
    let w = n + 1;
    let mut m = ExactMatrix::zeros(n + d + 1, 3 * w);
    for (c, f) in forms.iter().enumerate() {
        for i in 0..=n {
            for (l, v) in f.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    m.set(i + l, c * w + i, v.clone());
                }
            }
        }
    }
    m
}

/// Basis of the degree-`n` syzygies, in echelon order of the stacked
/// coefficient vectors `(A0 | A1 | A2)`.
pub fn syzygy_space(forms: &[BinaryForm; 3], n: usize) -> Vec<MovingLine> {
    assert!(
        forms.iter().all(|f| f.degree() == forms[0].degree()),
        "forms must share a degree"
    );
    syzygy_matrix(forms, n)
        .kernel_basis()
        .iter()
        .map(|v| MovingLine::from_vector(n, v).expect("kernel vectors are nonzero"))
        .collect()
}

/// μ-basis of a primitive triple spanning a 3-dimensional space.
pub fn mu_basis(forms: &[BinaryForm; 3]) -> Result<MuBasis> {
    check_degrees(forms)?;
    if forms.iter().all(BinaryForm::is_zero) {
        return Err(Error::ZeroInput);
    }
    if BinaryForm::gcd_all(forms.iter())?.degree() > 0 {
        return Err(Error::NotPrimitive);
    }
    if coefficient_rank(forms) < 3 {
        return Err(Error::DegenerateLine);
    }
    mu_basis_of_triple(forms)
}

/// μ-basis without the independence requirement. A triple spanning only a
/// plane yields `k = 0` with a constant `p`; the forms must still be coprime.
pub fn mu_basis_of_triple(forms: &[BinaryForm; 3]) -> Result<MuBasis> {
    check_degrees(forms)?;
    let d = forms[0].degree();
    let (k, first) = (0..=d)
        .find_map(|n| {
            let space = syzygy_space(forms, n);
            (!space.is_empty()).then_some((n, space))
        })
        .ok_or(Error::NotPrimitive)?;
    if 2 * k > d {
        return Err(Error::NotPrimitive);
    }
    let p = first[0].clone();
    if 2 * k == d {
        let q = first.get(1).cloned().ok_or(Error::MinorMismatch)?;
        return Ok(MuBasis { k, d, p, q, balanced: true });
    }
    let q = complement_syzygy(forms, &p, d - k)?;
    Ok(MuBasis { k, d, p, q, balanced: false })
}

/// Canonical degree-`n` syzygy outside the span of `{lambda * p}`: the
/// first echelon vector of the syzygy space reduced modulo that span.
fn complement_syzygy(forms: &[BinaryForm; 3], p: &MovingLine, n: usize) -> Result<MovingLine> {
    let multiples = multiples_of(p, n);
    let span = ExactMatrix::from_rows(multiples).rref();
    let reduced: Vec<Vec<Scalar>> = syzygy_space(forms, n)
        .iter()
        .map(|s| reduce_modulo(s.to_vector(), &span.rows, &span.pivots))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let rows = ExactMatrix::from_rows(reduced).rref().rows;
    let v = rows.first().ok_or(Error::MinorMismatch)?;
    MovingLine::from_vector(n, v)
}

/// Stacked vectors of `m * p` for every monomial `m` of degree `n - deg p`.
pub(crate) fn multiples_of(p: &MovingLine, n: usize) -> Vec<Vec<Scalar>> {
    let e = n - p.degree();
    (0..=e).map(|i| p.times(&BinaryForm::monomial(e, i)).to_vector()).collect()
}

/// Subtracts the reduced echelon rows so `v` vanishes on every pivot.
pub(crate) fn reduce_modulo(mut v: Vec<Scalar>, rows: &[Vec<Scalar>], pivots: &[usize]) -> Vec<Scalar> {
    for (row, &pc) in rows.iter().zip(pivots) {
        let c = v[pc].clone();
        if c.is_zero() {
            continue;
        }
        for (x, r) in v.iter_mut().zip(row) {
            *x -= &c * r;
        }
    }
    v
}

/// The constant `lambda` with `p x q = lambda * (f0, f1, f2)`.
pub fn hilbert_burch_check(forms: &[BinaryForm; 3], m: &MuBasis) -> Result<Scalar> {
    forms_proportional(&m.p.cross(&m.q), forms).ok_or(Error::MinorMismatch)
}

/// Coefficients of a syzygy in the μ-basis. A coefficient whose degree
/// would be negative is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub lambda: Option<BinaryForm>,
    pub mu: Option<BinaryForm>,
}

/// Writes `syz = lambda * p + mu * q` by an exact linear solve.
pub fn decompose(syz: &MovingLine, p: &MovingLine, q: &MovingLine) -> Option<Decomposition> {
    let n = syz.degree();
    let lam_deg = n.checked_sub(p.degree());
    let mu_deg = n.checked_sub(q.degree());
    let mut cols = Vec::new();
    if lam_deg.is_some() {
        cols.extend(multiples_of(p, n));
    }
    if mu_deg.is_some() {
        cols.extend(multiples_of(q, n));
    }
    let target = syz.to_vector();
    if cols.is_empty() {
        return target.iter().all(Zero::is_zero).then_some(Decomposition { lambda: None, mu: None });
    }
    let coeffs = solve_combination(&cols, &target)?;
    let split = lam_deg.map_or(0, |e| e + 1);
    Some(Decomposition {
        lambda: lam_deg.map(|_| BinaryForm::new(coeffs[..split].to_vec())),
        mu: mu_deg.map(|_| BinaryForm::new(coeffs[split..].to_vec())),
    })
}

/// Rank of the 3 x (d+1) coefficient matrix of the triple.
pub fn coefficient_rank(forms: &[BinaryForm; 3]) -> usize {
    ExactMatrix::from_rows(forms.iter().map(|f| f.coeffs().to_vec()).collect()).rank()
}

fn check_degrees(forms: &[BinaryForm; 3]) -> Result<()> {
    let d = forms[0].degree();
    for f in &forms[1..] {
        if f.degree() != d {
            return Err(Error::DegreeMismatch(d, f.degree()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn forms(a: &[i64], b: &[i64], c: &[i64]) -> [BinaryForm; 3] {
        [BinaryForm::from_ints(a), BinaryForm::from_ints(b), BinaryForm::from_ints(c)]
    }

    fn ml(a: &[i64], b: &[i64], c: &[i64]) -> MovingLine {
        let [a, b, c] = forms(a, b, c);
        MovingLine::new(a, b, c).unwrap()
    }

    fn conic() -> [BinaryForm; 3] {
        forms(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1])
    }

    fn cusp() -> [BinaryForm; 3] {
        forms(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1])
    }

    #[test]
    fn conic_syzygy_spaces() {
        assert!(syzygy_space(&conic(), 0).is_empty());
        let s1 = syzygy_space(&conic(), 1);
        assert_eq!(s1.len(), 2);
        for target in [ml(&[0, 1], &[-1, 0], &[0, 0]), ml(&[0, 0], &[0, 1], &[-1, 0])] {
            let vs: Vec<Vec<Scalar>> = s1.iter().map(MovingLine::to_vector).collect();
            assert!(solve_combination(&vs, &target.to_vector()).is_some());
        }
    }

    #[test]
    fn conic_mu_basis_is_balanced() {
        let m = mu_basis(&conic()).unwrap();
        assert_eq!((m.k, m.d - m.k, m.balanced), (1, 1, true));
        assert!(!hilbert_burch_check(&conic(), &m).unwrap().is_zero());
    }

    #[test]
    fn cusp_mu_basis() {
        let m = mu_basis(&cusp()).unwrap();
        assert_eq!(m.k, 1);
        assert_eq!(m.q.degree(), 2);
        assert!(m.p.is_syzygy_of(&cusp()) && m.q.is_syzygy_of(&cusp()));
        assert_eq!(m.p, ml(&[0, 0], &[0, 1], &[-1, 0]).normalized());
    }

    #[test]
    fn hand_expanded_hilbert_burch_constants() {
        let p = ml(&[0, 1], &[-1, 0], &[0, 0]);
        let q = ml(&[0, 0], &[0, 1], &[-1, 0]);
        let m = MuBasis { k: 1, d: 2, p, q, balanced: true };
        assert_eq!(hilbert_burch_check(&conic(), &m), Ok(int(1)));

        let p = ml(&[0, 0], &[0, 1], &[-1, 0]);
        let q = ml(&[0, 0, 1], &[-1, 0, 0], &[0, 0, 0]);
        let m = MuBasis { k: 1, d: 3, p, q, balanced: false };
        assert_eq!(hilbert_burch_check(&cusp(), &m), Ok(int(-1)));
    }

    #[test]
    fn rejects_bad_triples() {
        assert_eq!(mu_basis(&forms(&[1, 0, 0], &[0, 0, 1], &[1, 0, 1])), Err(Error::DegenerateLine));
        assert_eq!(mu_basis(&forms(&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0])), Err(Error::NotPrimitive));
    }

    #[test]
    fn dependent_triple_has_constant_syzygy() {
        let m = mu_basis_of_triple(&forms(&[0, 1], &[-1, 0], &[0, 0])).unwrap();
        assert_eq!(m.k, 0);
        assert_eq!(m.p, ml(&[0], &[0], &[1]));
    }

    #[test]
    fn decomposition_of_higher_syzygies() {
        let f = cusp();
        let m = mu_basis(&f).unwrap();
        for n in 0..6 {
            for s in syzygy_space(&f, n) {
                let dec = decompose(&s, &m.p, &m.q).expect("generated by the mu-basis");
                let mut sum = vec![int(0); 3 * (n + 1)];
                let parts = [dec.lambda.map(|l| m.p.times(&l)), dec.mu.map(|u| m.q.times(&u))];
                for part in parts.into_iter().flatten() {
                    for (x, y) in sum.iter_mut().zip(part.to_vector()) {
                        *x += y;
                    }
                }
                assert_eq!(sum, s.to_vector());
            }
        }
    }
}
