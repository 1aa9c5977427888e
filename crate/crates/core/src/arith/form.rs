use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_scalar, int, parse_scalar, primitive_integer_vector, Scalar};
use crate::error::{Error, Result};

/// Homogeneous polynomial in `(s, t)` with an explicit degree.
///
/// `coeffs[i]` is the coefficient of `s^(n-i) t^i`. The zero form keeps its
/// declared degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![Scalar::zero(); degree + 1] }
    }

    pub fn constant(c: Scalar) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// `s^(degree-i) t^i`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = Scalar::one();
        f
    }

    pub fn s() -> Self {
        Self::from_ints(&[1, 0])
    }

    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// The linear form `a s + b t`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        Self::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index and value of the first nonzero coefficient.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Scaled so that the first nonzero coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Power of `t` dividing the form (number of leading zero coefficients).
    fn t_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Power of `s` dividing the form (number of trailing zero coefficients).
    fn s_valuation(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, s0: &Scalar, t0: &Scalar) -> Scalar {
        // Horner in two variables: sum c_i s^(n-i) t^i.
        let mut acc = Scalar::zero();
        let mut tpow = Scalar::one();
        let n = self.degree();
        let mut spows = vec![Scalar::one(); n + 1];
        for i in 1..=n {
            spows[i] = &spows[i - 1] * s0;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &spows[n - i] * &tpow;
            }
            tpow = &tpow * t0;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative in `s`; the derivative of a constant is the zero constant.
    pub fn partial_s(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((0..n).map(|i| &self.coeffs[i] * int((n - i) as i64)).collect())
    }

    pub fn partial_t(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((0..n).map(|i| &self.coeffs[i + 1] * int(i as i64 + 1)).collect())
    }

    /// `f(m00 s + m01 t, m10 s + m11 t)`.
    pub fn substitute(&self, m: &[[Scalar; 2]; 2]) -> Self {
        let n = self.degree();
        let new_s = Self::linear(m[0][0].clone(), m[0][1].clone());
        let new_t = Self::linear(m[1][0].clone(), m[1][1].clone());
        let mut spows = vec![Self::one()];
        let mut tpows = vec![Self::one()];
        for i in 1..=n {
            spows.push(&spows[i - 1] * &new_s);
            tpows.push(&tpows[i - 1] * &new_t);
        }
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(&spows[n - i] * &tpows[i]).scale(c);
            }
        }
        out
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => Err(Error::BothZero),
            (true, false) => Ok(b.monic()),
            (false, true) => Ok(a.monic()),
            (false, false) => {
                let (ta, sa) = (a.t_valuation(), a.s_valuation());
                let (tb, sb) = (b.t_valuation(), b.s_valuation());
                // With the s- and t-powers stripped, the coefficient list is the
                // dehomogenized polynomial in s/t with nonzero ends.
                let ua = &a.coeffs[ta..a.coeffs.len() - sa];
                let ub = &b.coeffs[tb..b.coeffs.len() - sb];
                let g = upoly_gcd(ua, ub);
                let mut coeffs = vec![Scalar::zero(); ta.min(tb)];
                coeffs.extend(g);
                coeffs.extend(std::iter::repeat_n(Scalar::zero(), sa.min(sb)));
                Ok(Self::new(coeffs))
            }
        }
    }

    /// Monic gcd of a list of forms; zero forms are skipped.
    pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut acc: Option<Self> = None;
        for f in forms {
            if f.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => f.monic(),
                Some(g) if g.degree() == 0 => return Ok(g),
                Some(g) => Self::gcd(&g, f)?,
            });
        }
        acc.ok_or(Error::BothZero)
    }

    /// Quotient `q` with `a = q * b`.
    pub fn div_exact(a: &Self, b: &Self) -> Result<Self> {
        let (z, bz) = b.leading().ok_or(Error::DivideByZero)?;
        if a.degree() < b.degree() {
            return Err(Error::NotDivisible);
        }
        let qdeg = a.degree() - b.degree();
        let mut q: Vec<Scalar> = Vec::with_capacity(qdeg + 1);
        for j in 0..=qdeg {
            // a_{j+z} = sum_{l<=j} q_l b_{j+z-l}
            let mut acc = a.coeffs[j + z].clone();
            for (l, ql) in q.iter().enumerate() {
                let bi = j + z - l;
                if bi < b.coeffs.len() {
                    acc -= ql * &b.coeffs[bi];
                }
            }
            q.push(acc / bz);
        }
        let q = Self::new(q);
        if &q * b == *a {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Bracketed text syntax: `[c0,c1,...]`, highest `s` power first.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed coefficient list, got '{}'", text.trim())))?;
        let coeffs = inner
            .split(',')
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_bracket_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(format_scalar).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_scalar).collect()
    }
}

/// Monic gcd of dense polynomials with coefficients listed from the highest
/// power down, via the primitive remainder sequence over `Z`.
fn upoly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = upoly_primitive(&primitive_integer_vector(a));
    let mut b = upoly_primitive(&primitive_integer_vector(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = upoly_pseudo_rem(&a, &b);
        a = b;
        b = upoly_primitive(&r);
    }
    match a.first() {
        None => Vec::new(),
        Some(lead) => {
            let lead = Scalar::from_integer(lead.clone());
            a.into_iter().map(|c| Scalar::from_integer(c) / &lead).collect()
        }
    }
}

/// Leading zeros stripped and content divided out.
fn upoly_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    let p = &p[start..];
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c / &content).collect()
}

/// Remainder of `lc(b)^e a` by `b`, leading zeros stripped.
fn upoly_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() >= b.len() {
        let c = r[0].clone();
        if !c.is_zero() {
            for v in r.iter_mut() {
                *v *= &b[0];
            }
            for (ri, bi) in r.iter_mut().zip(b) {
                *ri -= &c * bi;
            }
        }
        r.remove(0);
    }
    let lead = r.iter().position(|c| !c.is_zero()).unwrap_or(r.len());
    r.drain(..lead);
    r
}

impl Add for &BinaryForm {
    type Output = BinaryForm;
    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degrees");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &BinaryForm {
    type Output = BinaryForm;
    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), rhs.degree(), "subtracting forms of different degrees");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BinaryForm { coeffs: out }
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BinaryForm {
            type Output = BinaryForm;
            fn $m(self, rhs: BinaryForm) -> BinaryForm {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        -&self
    }
}

fn monomial_text(n: usize, i: usize) -> String {
    let var = |name: &str, e: usize| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [var("s", n - i), var("t", i)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = monomial_text(n, i);
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm<{}>({})", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn gcd_common_monomial() {
        // gcd(s^3, s t^2) = s
        let g = BinaryForm::gcd(&bf(&[1, 0, 0, 0]), &bf(&[0, 0, 1, 0])).unwrap();
        assert_eq!(g, bf(&[1, 0]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let f = bf(&[2, 4, -6]);
        let g = BinaryForm::gcd(&f, &BinaryForm::zero(5)).unwrap();
        assert_eq!(g, bf(&[1, 2, -3]));
    }

    #[test]
    fn gcd_coprime() {
        // s^2 + t^2 and s + t: remainder of s^2+1 by s+1 is 2
        let g = BinaryForm::gcd(&bf(&[1, 0, 1]), &bf(&[1, 1])).unwrap();
        assert_eq!(g, BinaryForm::one());
    }

    #[test]
    fn gcd_both_zero() {
        assert_eq!(BinaryForm::gcd(&BinaryForm::zero(2), &BinaryForm::zero(1)), Err(Error::BothZero));
    }

    #[test]
    fn gcd_mixed_factors() {
        // s t (s - t) and t^2 (s - t)(s + 2t) -> t (s - t)
        let a = &(&bf(&[0, 1, 0]) * &bf(&[1, -1])) * &BinaryForm::one();
        let b = &(&bf(&[0, 0, 1]) * &bf(&[1, -1])) * &bf(&[1, 2]);
        let g = BinaryForm::gcd(&a, &b).unwrap();
        assert_eq!(g, bf(&[0, 1, -1]));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(BinaryForm::div_exact(&bf(&[1, 0, -1]), &bf(&[1, -1])).unwrap(), bf(&[1, 1]));
        let f = bf(&[3, -1, 2]);
        assert_eq!(BinaryForm::div_exact(&f, &BinaryForm::one()).unwrap(), f);
        // (s^3 t^2 + s^2 t^3) / (s t) = s^2 t + s t^2
        let a = bf(&[0, 0, 1, 1, 0, 0]);
        assert_eq!(BinaryForm::div_exact(&a, &bf(&[0, 1, 0])).unwrap(), bf(&[0, 1, 1, 0]));
    }

    #[test]
    fn exact_division_errors() {
        assert_eq!(BinaryForm::div_exact(&bf(&[1, 0, 1]), &bf(&[1, 1])), Err(Error::NotDivisible));
        assert_eq!(BinaryForm::div_exact(&bf(&[1, 0, 1]), &BinaryForm::zero(1)), Err(Error::DivideByZero));
    }

    #[test]
    fn evaluation_examples() {
        let one = Scalar::one();
        let zero = Scalar::zero();
        assert_eq!(bf(&[1, 1, 0]).eval(&one, &one), int(2));
        assert_eq!(bf(&[0, 0, 0, 1]).eval(&one, &zero), int(0));
        // s^5 + 3 s^2 t^3
        assert_eq!(bf(&[1, 0, 0, 3, 0, 0]).eval(&one, &one), int(4));
        assert_eq!(bf(&[1, 0, -2]).eval(&ratio(1, 2), &int(3)), ratio(-71, 4));
    }

    #[test]
    fn derivatives_satisfy_euler() {
        let f = bf(&[2, -1, 0, 5, 3]);
        let lhs = &(&BinaryForm::s() * &f.partial_s()) + &(&BinaryForm::t() * &f.partial_t());
        assert_eq!(lhs, f.scale(&int(4)));
    }

    #[test]
    fn substitution_swaps_variables() {
        let f = bf(&[1, 2, 3]);
        let swap = [[int(0), int(1)], [int(1), int(0)]];
        assert_eq!(f.substitute(&swap), bf(&[3, 2, 1]));
    }

    #[test]
    fn text_syntax() {
        let f = BinaryForm::parse("[1, 0, 0, -2]").unwrap();
        assert_eq!(f, bf(&[1, 0, 0, -2]));
        assert_eq!(f.to_bracket_string(), "[1,0,0,-2]");
        assert_eq!(f.to_string(), "s^3 - 2*t^3");
        assert_eq!(BinaryForm::parse("[1/2,-3]").unwrap().to_string(), "1/2*s - 3*t");
        assert!(BinaryForm::parse("1,2").is_err());
        assert!(BinaryForm::parse("[1,x]").is_err());
    }

    fn arb_form(max_deg: usize) -> impl Strategy<Value = BinaryForm> {
        (0..=max_deg).prop_flat_map(|d| {
            prop::collection::vec(-6i64..=6, d + 1).prop_map(|c| BinaryForm::from_ints(&c))
        })
    }

    fn arb_nonzero(max_deg: usize) -> impl Strategy<Value = BinaryForm> {
        arb_form(max_deg).prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #[test]
        fn gcd_is_multiplicative_in_common_factor(a in arb_nonzero(4), b in arb_nonzero(4), c in arb_nonzero(3)) {
            let lhs = BinaryForm::gcd(&(&a * &c), &(&b * &c)).unwrap();
            let rhs = &c.monic() * &BinaryForm::gcd(&a, &b).unwrap();
            prop_assert_eq!(lhs, rhs.monic());
        }

        #[test]
        fn div_exact_inverts_mul(a in arb_form(5), b in arb_nonzero(4)) {
            prop_assert_eq!(BinaryForm::div_exact(&(&a * &b), &b).unwrap(), a);
        }

        #[test]
        fn eval_is_a_ring_morphism(a in arb_form(4), b in arb_form(4), s0 in -5i64..5, t0 in -5i64..5) {
            let (s0, t0) = (int(s0), int(t0));
            let prod = &a * &b;
            prop_assert_eq!(prod.eval(&s0, &t0), a.eval(&s0, &t0) * b.eval(&s0, &t0));
            if a.degree() == b.degree() {
                prop_assert_eq!((&a + &b).eval(&s0, &t0), a.eval(&s0, &t0) + b.eval(&s0, &t0));
            }
        }
    }
}
