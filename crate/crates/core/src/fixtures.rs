//! Named curves and random curve generators used by the tests, the battery
//! and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{BinaryForm, MovingLine, Scalar};
use crate::curve::{curve_from_matrix, make_curve, preimage_degree, random_form, ParamCurve};
use crate::linalg::ExactMatrix;
use crate::scroll::{apply_linear, QuadricForm};

const ATTEMPTS: usize = 10_000;

fn curve(a: &[i64], b: &[i64], c: &[i64]) -> ParamCurve {
    ParamCurve::new([BinaryForm::from_ints(a), BinaryForm::from_ints(b), BinaryForm::from_ints(c)])
        .expect("fixture is a valid curve")
}

/// `(s^2, s t, t^2)`.
pub fn conic() -> ParamCurve {
    curve(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1])
}

/// `(s^3, s t^2, t^3)`, with a cusp at `(1:0:0)`.
pub fn cusp3() -> ParamCurve {
    curve(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1])
}

/// `(s^4, s^2 t^2, t^4)`, a conic traced twice.
pub fn sq4() -> ParamCurve {
    curve(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1])
}

/// Rows of the degree-8 syzygy matrix: `alpha = (s^3, s^2 t + s t^2, t^3)`,
/// `beta = (s^5 + 3 s^2 t^3, t^5 + 3 s^3 t^2, s^5 + t^5 + s t^4)`.
pub fn octic_matrix() -> (MovingLine, MovingLine) {
    let f = BinaryForm::from_ints;
    let alpha = MovingLine::new(f(&[1, 0, 0, 0]), f(&[0, 1, 1, 0]), f(&[0, 0, 0, 1])).expect("nonzero");
    let beta = MovingLine::new(f(&[1, 0, 0, 3, 0, 0]), f(&[0, 0, 3, 0, 0, 1]), f(&[1, 0, 0, 0, 1, 1]))
        .expect("nonzero");
    (alpha, beta)
}

/// Degree-8 curve with only double points and splitting type `(3, 5)`.
pub fn octic() -> ParamCurve {
    let (a, b) = octic_matrix();
    curve_from_matrix(&a, &b).expect("minors are primitive").curve
}

/// The three quadrics stated for the normal-form scroll
/// `x0 x3 - x1 x2`, `x2 x3 - x2 x4 + x3 x4 + x0 x3`, `x0 x1 + x0 x4 - x1 x4 - x1 x3`.
pub fn stated_scroll_quadrics() -> [QuadricForm; 3] {
    [
        QuadricForm::from_ints(5, &[((0, 3), 1), ((1, 2), -1)]),
        QuadricForm::from_ints(5, &[((2, 3), 1), ((2, 4), -1), ((3, 4), 1), ((0, 3), 1)]),
        QuadricForm::from_ints(5, &[((0, 1), 1), ((0, 4), 1), ((1, 4), -1), ((1, 3), -1)]),
    ]
}

/// Curve of degree `d` with a point of multiplicity `m` at `(0:0:1)`:
/// `f0 = g u`, `f1 = g v` with `deg g = m` and random `f2`. Retries until the
/// curve keeps degree `d`, is birational, and `(0:0:1)` has exactly `m`
/// preimages.
pub fn plant_multiplicity(d: usize, m: usize, seed: u64) -> ParamCurve {
    assert!(m >= 1 && m < d, "multiplicity must lie in 1..d");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let apex = [Scalar::from_integer(0.into()), Scalar::from_integer(0.into()), Scalar::from_integer(1.into())];
    for _ in 0..ATTEMPTS {
        let g = random_form(&mut rng, m, 4);
        let u = random_form(&mut rng, d - m, 4);
        let v = random_form(&mut rng, d - m, 4);
        let f2 = random_form(&mut rng, d, 4);
        let Ok(made) = make_curve([&g * &u, &g * &v, f2]) else { continue };
        let c = made.curve;
        if c.degree() == d && c.map_degree() == 1 && c.multiplicity_at_point(&apex) == m {
            return c;
        }
    }
    panic!("no planted curve found for d = {d}, m = {m}");
}

/// Random birational curve of degree `d` with small integer coefficients.
pub fn random_curve(d: usize, seed: u64) -> ParamCurve {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let forms = [random_form(&mut rng, d, 6), random_form(&mut rng, d, 6), random_form(&mut rng, d, 6)];
        if let Ok(made) = make_curve(forms) {
            if made.curve.degree() == d && made.curve.map_degree() == 1 {
                return made.curve;
            }
        }
    }
    panic!("no random curve found for d = {d}");
}

/// `C` composed with the parameter change `(s, t) -> (m00 s + m01 t, m10 s + m11 t)`.
pub fn reparameterize(c: &ParamCurve, m: &[[Scalar; 2]; 2]) -> ParamCurve {
    let [a, b, d] = c.forms();
    ParamCurve::new([a.substitute(m), b.substitute(m), d.substitute(m)]).expect("invertible change keeps the curve valid")
}

/// Plane sextic obtained from `(u s, u t, v s, v t)` with coprime quintics
/// `u, v`, a curve of bidegree `(1, 5)` on the quadric `x0 x3 = x1 x2`,
/// projected from a random rational point off the curve.
pub fn quadric_sextic(seed: u64) -> ParamCurve {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (s, t) = (BinaryForm::s(), BinaryForm::t());
    for _ in 0..ATTEMPTS {
        let u = random_form(&mut rng, 5, 5);
        let v = random_form(&mut rng, 5, 5);
        if u.is_zero() || v.is_zero() || BinaryForm::gcd(&u, &v).map_or(true, |g| g.degree() > 0) {
            continue;
        }
        let space_curve = [&u * &s, &u * &t, &v * &s, &v * &t];
        let center: Vec<Scalar> = (0..4).map(|_| Scalar::from_integer(rng.gen_range(-7i64..=7).into())).collect();
        if center.iter().all(num_traits::Zero::is_zero) || preimage_degree(&space_curve, &center) > 0 {
            continue;
        }
        let rows = ExactMatrix::from_rows(vec![center]).kernel_basis();
        let [a, b, c]: [BinaryForm; 3] = apply_linear(&rows, &space_curve).try_into().expect("three rows");
        let Ok(made) = make_curve([a, b, c]) else { continue };
        if made.curve.degree() == 6 && made.curve.map_degree() == 1 {
            return made.curve;
        }
    }
    panic!("no projected sextic found");
}

/// Named corpus: the four fixed curves plus planted and random curves of
/// degree up to 10.
pub fn corpus(seed: u64) -> Vec<(String, ParamCurve)> {
    let mut out = vec![
        ("CONIC".to_string(), conic()),
        ("CUSP3".to_string(), cusp3()),
        ("SQ4".to_string(), sq4()),
        ("OCTIC".to_string(), octic()),
    ];
    let planted = [(4, 2), (5, 2), (5, 3), (6, 2), (6, 4), (7, 3), (7, 5), (8, 3), (9, 4), (10, 5), (10, 7)];
    for (i, &(d, m)) in planted.iter().enumerate() {
        out.push((format!("PLANTED_d{d}_m{m}"), plant_multiplicity(d, m, seed.wrapping_add(i as u64))));
    }
    for (i, d) in [3, 4, 5, 6, 7, 8, 9, 10].into_iter().enumerate() {
        out.push((format!("RANDOM_d{d}"), random_curve(d, seed.wrapping_add(100 + i as u64))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octic_has_degree_eight() {
        let c = octic();
        assert_eq!(c.degree(), 8);
        let (a, b) = octic_matrix();
        assert_eq!(c.forms(), &a.cross(&b));
    }

    #[test]
    fn planted_point_has_requested_multiplicity() {
        let c = plant_multiplicity(6, 3, 7);
        let apex = [Scalar::from_integer(0.into()), Scalar::from_integer(0.into()), Scalar::from_integer(1.into())];
        assert_eq!(c.multiplicity_at_point(&apex), 3);
        assert_eq!(c.degree(), 6);
    }
}
