use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, format_scalar, primitive_integer_vector, BinaryForm, Scalar};
use crate::error::{Error, Result};

pub type Exponent = [u32; 3];

/// Sparse homogeneous polynomial in `x0, x1, x2`.
///
/// Terms are keyed by exponent triple; the map order is lexicographic with
/// `x0 > x1 > x2`, so the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryPoly {
    degree: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

impl TernaryPoly {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero(0);
        p.insert([0, 0, 0], c);
        p
    }

    /// `c0 x0 + c1 x1 + c2 x2`.
    pub fn linear(c: [&Scalar; 3]) -> Self {
        let mut p = Self::zero(1);
        p.insert([1, 0, 0], c[0].clone());
        p.insert([0, 1, 0], c[1].clone());
        p.insert([0, 0, 1], c[2].clone());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> Self {
        let mut degree = None;
        let mut p = Self::zero(0);
        for (e, c) in terms {
            let d = (e[0] + e[1] + e[2]) as usize;
            assert!(degree.is_none_or(|dd| dd == d), "terms of mixed degree");
            degree = Some(d);
            let acc = p.terms.remove(&e).unwrap_or_else(Scalar::zero) + c;
            p.insert(e, acc);
        }
        p.degree = degree.unwrap_or(0);
        p
    }

    fn insert(&mut self, e: Exponent, c: Scalar) {
        if !c.is_zero() {
            self.terms.insert(e, c);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponent) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self { degree: self.degree, terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn pow(&self, r: usize) -> Self {
        let mut out = Self::constant(Scalar::one());
        for _ in 0..r {
            out = &out * self;
        }
        out
    }

    /// Exact quotient by `b` in `Q[x0, x1, x2]`, by repeated leading-term
    /// division.
    pub fn div_exact(&self, b: &Self) -> Result<Self> {
        let (be, bc) = b.leading_term().ok_or(Error::DivideByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.degree.saturating_sub(b.degree)));
        }
        if self.degree < b.degree {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.degree - b.degree);
        while let Some((re, rc)) = rem.leading_term() {
            let qe = [
                re[0].checked_sub(be[0]).ok_or(Error::NotDivisible)?,
                re[1].checked_sub(be[1]).ok_or(Error::NotDivisible)?,
                re[2].checked_sub(be[2]).ok_or(Error::NotDivisible)?,
            ];
            let qc = rc / bc;
            let term = Self::from_terms([(qe, qc.clone())]);
            rem = &rem - &(&term * b);
            let acc = quot.coeff(&qe) + qc;
            quot.terms.remove(&qe);
            quot.insert(qe, acc);
        }
        Ok(quot)
    }

    /// Substitutes `x_i = forms[i]`. The forms must share a degree `n`; the
    /// result has degree `n * deg(self)`.
    pub fn substitute(&self, forms: &[BinaryForm; 3]) -> BinaryForm {
        let n = forms[0].degree();
        let mut cache: [Vec<BinaryForm>; 3] = [vec![BinaryForm::one()], vec![BinaryForm::one()], vec![BinaryForm::one()]];
        let mut out = BinaryForm::zero(n * self.degree);
        for (e, c) in &self.terms {
            let mut term = BinaryForm::constant(c.clone());
            for v in 0..3 {
                while cache[v].len() <= e[v] as usize {
                    let next = cache[v].last().map(|p| p * &forms[v]).expect("cache seeded");
                    cache[v].push(next);
                }
                term = &term * &cache[v][e[v] as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Whether `self(forms)` is identically zero. The composite has degree
    /// `D = n * deg(self)`, so it suffices to test the `D + 1` parameters
    /// `(1 : i)`, `i = 0..=D`. Denominators are cleared first (the forms by a
    /// common factor, which only scales the composite) so the evaluation runs
    /// over `Z`.
    pub fn vanishes_on(&self, forms: &[BinaryForm; 3]) -> bool {
        let den = common_denominator(forms.iter().flat_map(|f| f.coeffs()));
        let int_forms: Vec<Vec<BigInt>> = forms
            .iter()
            .map(|f| f.coeffs().iter().map(|c| (c * Scalar::from_integer(den.clone())).to_integer()).collect())
            .collect();
        let cden = common_denominator(self.terms.values());
        let terms: Vec<(Exponent, BigInt)> =
            self.terms.iter().map(|(e, c)| (*e, (c * Scalar::from_integer(cden.clone())).to_integer())).collect();
        let total = forms[0].degree() * self.degree;
        (0..=total as i64).all(|i| {
            let t = BigInt::from(i);
            // Coefficients run from s^n down to t^n, so Horner in t at s = 1
            // starts from the last entry.
            let values: Vec<BigInt> =
                int_forms.iter().map(|c| c.iter().rev().fold(BigInt::zero(), |acc, x| acc * &t + x)).collect();
            let powers: Vec<Vec<BigInt>> = values
                .iter()
                .map(|v| {
                    std::iter::successors(Some(BigInt::one()), |p| Some(p * v)).take(self.degree + 1).collect()
                })
                .collect();
            terms
                .iter()
                .map(|(e, c)| c * &powers[0][e[0] as usize] * &powers[1][e[1] as usize] * &powers[2][e[2] as usize])
                .sum::<BigInt>()
                .is_zero()
        })
    }

    pub fn eval(&self, point: &[Scalar; 3]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for i in 0..3 {
                    for _ in 0..e[i] {
                        v *= &point[i];
                    }
                }
                v
            })
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Integer coefficients with content 1 and a positive leading term.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // Reverse so the leading (lex-largest) term decides the sign.
        let exps: Vec<Exponent> = self.terms.keys().rev().copied().collect();
        let vals: Vec<Scalar> = exps.iter().map(|e| self.terms[e].clone()).collect();
        let ints = primitive_integer_vector(&vals);
        Self::from_terms(exps.into_iter().zip(ints).map(|(e, v)| (e, Scalar::from_integer(v))))
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Monic `F` with `F^r = self / lc(self)`, recovered term by term in
    /// decreasing lexicographic order. `None` when no such `F` exists.
    pub fn nth_root(&self, r: usize) -> Option<Self> {
        assert!(r >= 1);
        if self.is_zero() || !self.degree.is_multiple_of(r) {
            return None;
        }
        let target = self.monic();
        if r == 1 {
            return Some(target);
        }
        let (le, _) = target.leading_term()?;
        if le.iter().any(|e| e % r as u32 != 0) {
            return None;
        }
        let lead = [le[0] / r as u32, le[1] / r as u32, le[2] / r as u32];
        let mut root = Self::from_terms([(lead, Scalar::one())]);
        // r * LM(F)^(r-1), the divisor that isolates each new term.
        let lead_pow = Self::from_terms([(lead, Scalar::one())]).pow(r - 1).scale(&Scalar::from_integer((r as i64).into()));
        let (lpe, lpc) = {
            let (e, c) = lead_pow.leading_term()?;
            (*e, c.clone())
        };
        let max_terms = (self.degree / r + 1) * (self.degree / r + 2) / 2;
        for _ in 0..=max_terms {
            let residual = &target - &root.pow(r);
            let Some((re, rc)) = residual.leading_term() else {
                return Some(root);
            };
            let ne = [
                re[0].checked_sub(lpe[0])?,
                re[1].checked_sub(lpe[1])?,
                re[2].checked_sub(lpe[2])?,
            ];
            if ne >= lead {
                return None;
            }
            root = &root + &Self::from_terms([(ne, rc / &lpc)]);
        }
        None
    }
}

impl Add for &TernaryPoly {
    type Output = TernaryPoly;
    fn add(self, rhs: &TernaryPoly) -> TernaryPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        debug_assert_eq!(self.degree, rhs.degree, "adding ternary forms of different degrees");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let acc = out.terms.remove(e).unwrap_or_else(Scalar::zero) + c;
            out.insert(*e, acc);
        }
        out
    }
}

impl Neg for &TernaryPoly {
    type Output = TernaryPoly;
    fn neg(self) -> TernaryPoly {
        TernaryPoly { degree: self.degree, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &TernaryPoly {
    type Output = TernaryPoly;
    fn sub(self, rhs: &TernaryPoly) -> TernaryPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        self + &(-rhs)
    }
}

impl Mul for &TernaryPoly {
    type Output = TernaryPoly;
    fn mul(self, rhs: &TernaryPoly) -> TernaryPoly {
        let mut out = TernaryPoly::zero(self.degree + rhs.degree);
        let mut acc: BTreeMap<Exponent, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *acc.entry(e).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        for (e, c) in acc {
            out.insert(e, c);
        }
        out
    }
}

impl fmt::Display for TernaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = (0..3)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { format!("x{i}") } else { format!("x{i}^{}", e[i]) })
                .collect();
            let mono = mono.join("*");
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryPoly<{}>({})", self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use proptest::prelude::*;

    fn tp(terms: &[([u32; 3], i64)]) -> TernaryPoly {
        TernaryPoly::from_terms(terms.iter().map(|(e, c)| (*e, int(*c))))
    }

    #[test]
    fn display_and_primitive() {
        let p = tp(&[([1, 0, 1], -2), ([0, 2, 0], 2)]);
        assert_eq!(p.primitive().to_string(), "x0*x2 - x1^2");
        assert_eq!(p.to_string(), "-2*x0*x2 + 2*x1^2");
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = tp(&[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        let b = tp(&[([1, 0, 0], 3), ([0, 1, 0], 1), ([0, 0, 1], -2)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let c = tp(&[([1, 0, 0], 1), ([0, 0, 1], 1)]);
        assert_eq!((&a * &c).div_exact(&b), Err(Error::NotDivisible));
    }

    #[test]
    fn perfect_power_root() {
        let f = tp(&[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        let sq = f.pow(2).scale(&int(-7));
        assert_eq!(sq.nth_root(2).unwrap(), f);
        let cube = tp(&[([0, 3, 0], 1), ([1, 0, 2], -1)]).pow(3);
        assert_eq!(cube.nth_root(3).unwrap(), tp(&[([0, 3, 0], -1), ([1, 0, 2], 1)]));
        assert!(f.nth_root(2).is_none());
        assert!((&f * &tp(&[([1, 1, 0], 1)])).nth_root(2).is_none());
    }

    #[test]
    fn substitution_on_conic() {
        let f = tp(&[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        let forms = [
            BinaryForm::from_ints(&[1, 0, 0]),
            BinaryForm::from_ints(&[0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 1]),
        ];
        let v = f.substitute(&forms);
        assert!(v.is_zero());
        assert_eq!(v.degree(), 4);
    }

    #[test]
    fn vanishing_check_matches_substitution() {
        let forms = [
            BinaryForm::new(vec![ratio(1, 2), int(0), int(0)]),
            BinaryForm::from_ints(&[0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 2]),
        ];
        let on = tp(&[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        let off = tp(&[([1, 0, 1], 1), ([0, 2, 0], 1)]);
        assert!(on.vanishes_on(&forms) && on.substitute(&forms).is_zero());
        assert!(!off.vanishes_on(&forms) && !off.substitute(&forms).is_zero());
    }

    proptest! {
        #[test]
        fn vanishing_check_agrees(cs in prop::collection::vec(-3i64..=3, 6), fs in prop::collection::vec(-2i64..=2, 9)) {
            let exps = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]];
            let f = TernaryPoly::from_terms(exps.iter().zip(&cs).map(|(e, c)| (*e, int(*c))));
            let forms = [BinaryForm::from_ints(&fs[0..3]), BinaryForm::from_ints(&fs[3..6]), BinaryForm::from_ints(&fs[6..9])];
            prop_assert_eq!(f.vanishes_on(&forms), f.substitute(&forms).is_zero());
        }
    }
}
