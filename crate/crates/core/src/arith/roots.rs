use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{primitive_integer_vector, BinaryForm, Scalar};
use crate::error::{Error, Result};

/// A rational zero `(a : b)` of a binary form, scaled so that the first nonzero
/// coordinate is 1, together with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveZero {
    pub a: Scalar,
    pub b: Scalar,
    pub multiplicity: usize,
}

/// Trial division stops here; larger cofactors are not enumerated.
const TRIAL_LIMIT: u64 = 2_000_000;

/// All zeros of `f` in `P^1(Q)`, ordered by the affine coordinate `b/a`
/// ascending with `(0 : 1)` last.
///
/// Uses the rational root theorem on the integer-scaled dehomogenization, so
/// it errors out on coefficients whose divisors cannot be enumerated by trial
/// division.
pub fn rational_zeros(f: &BinaryForm) -> Result<Vec<ProjectiveZero>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let coeffs = f.coeffs();
    let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let trail_zeros = coeffs.iter().rev().take_while(|c| c.is_zero()).count();

    let mut zeros = Vec::new();
    // Leading zero coefficients: t divides f, zero at (1 : 0).
    if lead_zeros > 0 {
        zeros.push(ProjectiveZero { a: Scalar::one(), b: Scalar::zero(), multiplicity: lead_zeros });
    }

    // Remaining part as a polynomial in x = b/a: the coefficient of s^(n-i) t^i
    // contributes x^i when evaluated at (1, x).
    let core: Vec<Scalar> = coeffs[lead_zeros..coeffs.len() - trail_zeros].to_vec();
    let mut poly = primitive_integer_vector(&core); // ascending powers of x
    let mut affine: Vec<(Scalar, usize)> = Vec::new();
    if poly.len() > 1 {
        let constant = poly[0].abs();
        let leading = poly[poly.len() - 1].abs();
        let ps = divisors(&constant)?;
        let qs = divisors(&leading)?;
        let mut candidates: Vec<Scalar> = Vec::new();
        for p in &ps {
            for q in &qs {
                for sign in [1i32, -1] {
                    let r = Scalar::new(p * BigInt::from(sign), q.clone());
                    if !candidates.contains(&r) {
                        candidates.push(r);
                    }
                }
            }
        }
        candidates.sort();
        for r in candidates {
            let mut mult = 0;
            while poly.len() > 1 && eval_int_poly(&poly, &r).is_zero() {
                poly = deflate(&poly, &r);
                mult += 1;
            }
            if mult > 0 {
                affine.push((r, mult));
            }
        }
    }
    for (r, m) in affine {
        zeros.push(ProjectiveZero { a: Scalar::one(), b: r, multiplicity: m });
    }
    // Trailing zero coefficients: s divides f, zero at (0 : 1).
    if trail_zeros > 0 {
        zeros.push(ProjectiveZero { a: Scalar::zero(), b: Scalar::one(), multiplicity: trail_zeros });
    }
    // (1:0) sorts as affine value 0; keep the documented order.
    zeros.sort_by(|x, y| match (x.a.is_zero(), y.a.is_zero()) {
        (true, true) => std::cmp::Ordering::Equal,
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        (false, false) => x.b.cmp(&y.b),
    });
    Ok(zeros)
}

impl ProjectiveZero {
    /// The linear form `a s + b t`, whose cube (or power) the zero describes
    /// when `f` is an apolarity condition.
    pub fn linear_form(&self) -> BinaryForm {
        BinaryForm::linear(self.a.clone(), self.b.clone())
    }
}

fn eval_int_poly(ascending: &[BigInt], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in ascending.iter().rev() {
        acc = acc * x + Scalar::from_integer(c.clone());
    }
    acc
}

/// Divides the ascending integer polynomial by `(x - r)` and rescales to a
/// primitive integer polynomial.
fn deflate(ascending: &[BigInt], r: &Scalar) -> Vec<BigInt> {
    let n = ascending.len() - 1;
    let mut quotient = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for i in (1..=n).rev() {
        carry = carry * r + Scalar::from_integer(ascending[i].clone());
        quotient[i - 1] = carry.clone();
    }
    primitive_integer_vector(&quotient)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.abs();
    if rest.is_zero() {
        return Err(Error::IrrationalNormalization("zero coefficient in root search".into()));
    }
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(&bp) {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        // Loop exit by the square test certifies `rest` prime; exit by the
        // trial limit does not.
        let bp = BigInt::from(p);
        if &bp * &bp <= rest {
            return Err(Error::IrrationalNormalization(
                "coefficient too large for rational root enumeration".into(),
            ));
        }
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn zero(a: Scalar, b: Scalar, m: usize) -> ProjectiveZero {
        ProjectiveZero { a, b, multiplicity: m }
    }

    #[test]
    fn zeros_of_st_times_s_minus_t() {
        // 3 s^2 t - 3 s t^2 = 3 s t (s - t): zeros (0:1), (1:0), (1:1).
        let f = BinaryForm::from_ints(&[0, 3, -3, 0]);
        let z = rational_zeros(&f).unwrap();
        assert_eq!(
            z,
            vec![zero(int(1), int(0), 1), zero(int(1), int(1), 1), zero(int(0), int(1), 1)]
        );
    }

    #[test]
    fn zeros_with_multiplicity_and_fractions() {
        // (2s + t)^2 (s - 3t) zeros where f(1, x) = 0: x = -2 (double), x = 1/3.
        let l1 = BinaryForm::from_ints(&[2, 1]);
        let l2 = BinaryForm::from_ints(&[1, -3]);
        let f = &(&l1 * &l1) * &l2;
        let z = rational_zeros(&f).unwrap();
        assert_eq!(z, vec![zero(int(1), int(-2), 2), zero(int(1), ratio(1, 3), 1)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_zeros() {
        let f = BinaryForm::from_ints(&[1, 0, 1]);
        assert!(rational_zeros(&f).unwrap().is_empty());
    }

    #[test]
    fn divisor_enumeration() {
        let d = divisors(&BigInt::from(12)).unwrap();
        let want: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(d, want);
    }
}
