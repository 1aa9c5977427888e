use std::fmt;

use num_traits::Zero;

use super::{BinaryForm, Scalar, TernaryPoly};
use crate::error::{Error, Result};

/// `A0 x0 + A1 x1 + A2 x2` with `A_i` binary forms of a common degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MovingLine {
    comps: [BinaryForm; 3],
}

impl MovingLine {
    pub fn new(a0: BinaryForm, a1: BinaryForm, a2: BinaryForm) -> Result<Self> {
        let n = a0.degree();
        for other in [&a1, &a2] {
            if other.degree() != n {
                return Err(Error::DegreeMismatch(n, other.degree()));
            }
        }
        if a0.is_zero() && a1.is_zero() && a2.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Self { comps: [a0, a1, a2] })
    }

    pub fn degree(&self) -> usize {
        self.comps[0].degree()
    }

    pub fn comps(&self) -> &[BinaryForm; 3] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &BinaryForm {
        &self.comps[i]
    }

    /// `A0 f0 + A1 f1 + A2 f2`.
    pub fn apply(&self, forms: &[BinaryForm; 3]) -> BinaryForm {
        let terms: Vec<BinaryForm> = self.comps.iter().zip(forms).map(|(a, f)| a * f).collect();
        &(&terms[0] + &terms[1]) + &terms[2]
    }

    /// Coefficients stacked as `(A0 | A1 | A2)`, each block highest `s` power first.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.comps.iter().flat_map(|c| c.coeffs().iter().cloned()).collect()
    }

    pub fn from_vector(degree: usize, v: &[Scalar]) -> Result<Self> {
        let w = degree + 1;
        assert_eq!(v.len(), 3 * w, "vector length does not match degree");
        Self::new(
            BinaryForm::new(v[..w].to_vec()),
            BinaryForm::new(v[w..2 * w].to_vec()),
            BinaryForm::new(v[2 * w..].to_vec()),
        )
    }

    /// `lambda * self`.
    pub fn times(&self, lambda: &BinaryForm) -> Self {
        Self { comps: [lambda * &self.comps[0], lambda * &self.comps[1], lambda * &self.comps[2]] }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { comps: [self.comps[0].scale(c), self.comps[1].scale(c), self.comps[2].scale(c)] }
    }

    /// Scaled so the first nonzero entry of the stacked vector is 1.
    pub fn normalized(&self) -> Self {
        let v = self.to_vector();
        match v.iter().find(|c| !c.is_zero()) {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Componentwise cross product `self x other`: the 2x2 minors
    /// `(a1 b2 - a2 b1, a2 b0 - a0 b2, a0 b1 - a1 b0)`.
    pub fn cross(&self, other: &Self) -> [BinaryForm; 3] {
        let (a, b) = (&self.comps, &other.comps);
        [
            &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
            &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
            &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
        ]
    }

    /// Coefficient of `s^(n-i) t^i` as a linear form in `x`.
    pub fn coefficient_line(&self, i: usize) -> TernaryPoly {
        TernaryPoly::linear([self.comps[0].coeff(i), self.comps[1].coeff(i), self.comps[2].coeff(i)])
    }

    /// Linear dependence of the three components over the constants.
    pub fn components_dependent(&self) -> bool {
        let rows: Vec<Vec<Scalar>> = self.comps.iter().map(|c| c.coeffs().to_vec()).collect();
        crate::linalg::ExactMatrix::from_rows(rows).rank() < 3
    }

    pub fn is_syzygy_of(&self, forms: &[BinaryForm; 3]) -> bool {
        self.apply(forms).is_zero()
    }

    pub fn has_zero_component(&self) -> bool {
        self.comps.iter().any(|c| c.coeffs().iter().all(Zero::is_zero))
    }
}

impl fmt::Display for MovingLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.comps[0], self.comps[1], self.comps[2])
    }
}

impl fmt::Debug for MovingLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MovingLine<{}>{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mixed_degrees_and_zero() {
        let a = BinaryForm::from_ints(&[1, 0]);
        let b = BinaryForm::from_ints(&[1, 0, 0]);
        assert_eq!(MovingLine::new(a.clone(), b, a.clone()), Err(Error::DegreeMismatch(1, 2)));
        let z = BinaryForm::zero(1);
        assert_eq!(MovingLine::new(z.clone(), z.clone(), z), Err(Error::ZeroInput));
    }

    #[test]
    fn conic_syzygy_and_vector_layout() {
        let forms = [
            BinaryForm::from_ints(&[1, 0, 0]),
            BinaryForm::from_ints(&[0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 1]),
        ];
        // (t, -s, 0)
        let p = MovingLine::new(BinaryForm::t(), -BinaryForm::s(), BinaryForm::zero(1)).unwrap();
        assert!(p.is_syzygy_of(&forms));
        let v = p.to_vector();
        assert_eq!(MovingLine::from_vector(1, &v).unwrap(), p);
        assert_eq!(p.to_string(), "(t, -s, 0)");
    }
}
