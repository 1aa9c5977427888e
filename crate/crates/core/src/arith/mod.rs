//! Exact scalars, binary forms in `(s, t)`, ternary forms in `(x0, x1, x2)`,
//! moving lines and their resultants.

mod form;
mod moving_line;
mod resultant;
mod roots;
mod ternary;

pub use form::BinaryForm;
pub use moving_line::MovingLine;
pub use resultant::{resultant_moving_lines, resultant_with, sylvester_matrix, DetMethod};
pub use roots::{rational_zeros, ProjectiveZero};
pub use ternary::TernaryPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    text.parse::<Scalar>()
        .map_err(|_| Error::Parse(format!("invalid rational '{text}'")))
        .and_then(|q| {
            if q.denom().is_zero() {
                Err(Error::Parse(format!("zero denominator in '{text}'")))
            } else {
                Ok(q)
            }
        })
}

/// `p` or `p/q`, matching the bracketed text syntax.
pub fn format_scalar(q: &Scalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive. Zero vectors come back unchanged.
pub(crate) fn primitive_integer_vector(values: &[Scalar]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|q| (q * Scalar::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v /= &g;
        }
    }
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in ints.iter_mut() {
            *v = -v.clone();
        }
    }
    ints
}

/// If `a = c * b` for a single scalar `c` (entrywise over the slices), returns
/// `c`. Both sides must be nonzero somewhere for a match.
pub fn proportionality(a: &[Scalar], b: &[Scalar]) -> Option<Scalar> {
    if a.len() != b.len() {
        return None;
    }
    let pos = b.iter().position(|v| !v.is_zero())?;
    let c = &a[pos] / &b[pos];
    if c.is_zero() {
        return None;
    }
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

/// Projective equality of two lists of forms: one global nonzero scalar `c`
/// with `a[i] = c * b[i]` for every `i`.
pub fn forms_proportional(a: &[BinaryForm], b: &[BinaryForm]) -> Option<Scalar> {
    if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.degree() != y.degree()) {
        return None;
    }
    let flat = |fs: &[BinaryForm]| -> Vec<Scalar> {
        fs.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
    };
    proportionality(&flat(a), &flat(b))
}
