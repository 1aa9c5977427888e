//! Explicit lift to `P^4` for splitting type `(3, d-3)`, built from a normal
//! form of `alpha` instead of the general syzygy-basis construction.
//!
//! Without a point of multiplicity `d-3`, the span of `alpha` meets the
//! twisted cubic of cubes `l^3`. A reparameterization and a change of frame
//! bring `alpha` to `(s^3, s^2 t + s t^2, t^3)` when the meeting points are
//! three distinct points, or to `(s^3, s^2 t, t^3)` when the span is tangent.
//! With a point of multiplicity `d-3` the components of `alpha` are dependent
//! and the normal form is `(s^2 (a s + b t), t^2 (c s + d t), 0)`.
//!
//! Only rational normal forms are reached; irrational meeting points raise
//! `IrrationalNormalization`.

use num_traits::{One, Zero};

use super::project::apply_linear;
use super::quadrics::{quadrics_through, QuadricSpace};
use crate::arith::{forms_proportional, rational_zeros, BinaryForm, MovingLine, Scalar};
use crate::curve::{preimage_degree, ParamCurve};
use crate::error::{Error, Result};
use crate::linalg::{solve_combination, ExactMatrix};
use crate::syzygy::{coefficient_rank, mu_basis_of_triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicBranch {
    /// `alpha ~ (s^3, s^2 t + s t^2, t^3)`.
    General,
    /// `alpha ~ (s^3, s^2 t, t^3)`.
    Tangent,
    /// Dependent `alpha`; `D` lies on a cone.
    Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLift {
    pub branch: CubicBranch,
    /// Five forms of degree `d` in the original parameters.
    pub coords: Vec<BinaryForm>,
    /// `N` with `(u, v) = N (s, t)`, the normal-form parameters.
    pub reparam: [[Scalar; 2]; 2],
    /// Change of frame `P` acting on the columns of the syzygy matrix.
    pub frame: ExactMatrix,
    /// Three linear forms on `P^4` whose kernel is spanned by the centers.
    pub projection: Vec<Vec<Scalar>>,
    pub centers: Vec<Vec<Scalar>>,
    /// `M` with `M (projection . D)` proportional to the input curve.
    pub plane_map: ExactMatrix,
    pub quadrics: QuadricSpace,
    pub vertex: Option<Vec<Scalar>>,
}

/// Explicit lift of a curve with splitting type `(3, d-3)` from its μ-basis.
pub fn explicit_cubic_lift(curve: &ParamCurve) -> Result<CubicLift> {
    let mu = curve.mu_basis()?;
    if mu.k != 3 {
        return Err(Error::WrongSplitting(mu.k));
    }
    explicit_cubic_lift_from_rows(mu.p.comps(), mu.q.comps(), curve.forms())
}

/// Same construction from an explicit Hilbert–Burch matrix `(alpha; beta)`
/// whose minors parameterize `forms`.
pub fn explicit_cubic_lift_from_rows(
    alpha: &[BinaryForm; 3],
    beta: &[BinaryForm; 3],
    forms: &[BinaryForm; 3],
) -> Result<CubicLift> {
    if alpha[0].degree() != 3 {
        return Err(Error::WrongSplitting(alpha[0].degree()));
    }
    let d = forms[0].degree();
    let built = if coefficient_rank(alpha) == 3 { independent_branch(alpha, beta)? } else { cone_branch(alpha, beta)? };
    let n_mat = built.reparam.clone();
    let coords: Vec<BinaryForm> = built.coords_normal.iter().map(|c| c.substitute(&n_mat)).collect();

    let image = apply_linear(&built.projection, &coords);
    let plane = apply_linear(&matrix_rows(&built.plane_map), &image);
    if forms_proportional(&plane, forms).is_none() {
        return Err(Error::ConstructionCheckFailed("projection does not return the input curve".into()));
    }
    let vertex = match built.branch {
        CubicBranch::Cone => {
            let v: Vec<Scalar> = (0..5).map(|i| if i == 4 { Scalar::one() } else { Scalar::zero() }).collect();
            let mult = preimage_degree(&coords, &v);
            if mult != d - 3 {
                return Err(Error::ConstructionCheckFailed(format!(
                    "vertex has multiplicity {mult}, expected {}",
                    d - 3
                )));
            }
            Some(v)
        }
        _ => None,
    };
    let centers = ExactMatrix::from_rows(built.projection.clone()).kernel_basis();
    let quadrics = quadrics_through(&coords);
    Ok(CubicLift {
        branch: built.branch,
        coords,
        reparam: n_mat,
        frame: built.frame,
        projection: built.projection,
        centers,
        plane_map: built.plane_map,
        quadrics,
        vertex,
    })
}

struct Built {
    branch: CubicBranch,
    coords_normal: Vec<BinaryForm>,
    reparam: [[Scalar; 2]; 2],
    frame: ExactMatrix,
    projection: Vec<Vec<Scalar>>,
    plane_map: ExactMatrix,
}

fn independent_branch(alpha: &[BinaryForm; 3], beta: &[BinaryForm; 3]) -> Result<Built> {
    // Cubes (a s + b t)^3 = [a^3, 3a^2 b, 3a b^2, b^3] in the span of alpha are
    // the zeros of the apolar cubic w0 a^3 + 3 w1 a^2 b + 3 w2 a b^2 + w3 b^3.
    let rows: Vec<Vec<Scalar>> = alpha.iter().map(|f| f.coeffs().to_vec()).collect();
    let w = ExactMatrix::from_rows(rows).kernel_basis().remove(0);
    let three = Scalar::from_integer(3.into());
    let apolar = BinaryForm::new(vec![w[0].clone(), &w[1] * &three, &w[2] * &three, w[3].clone()]);
    let zeros = rational_zeros(&apolar)?;
    if zeros.iter().map(|z| z.multiplicity).sum::<usize>() != 3 {
        return Err(Error::IrrationalNormalization(format!(
            "the span of alpha meets the cubes of linear forms at irrational points ({apolar})"
        )));
    }
    let (branch, u, v, target) = match zeros.as_slice() {
        [z1, z2, z3] => {
            let (l1, l2, l3) = (z1.linear_form(), z2.linear_form(), z3.linear_form());
            let mu = solve_combination(&[l1.coeffs().to_vec(), l3.coeffs().to_vec()], l2.coeffs())
                .ok_or_else(|| Error::ConstructionCheckFailed("cube directions are dependent".into()))?;
            let target = [
                BinaryForm::from_ints(&[1, 0, 0, 0]),
                BinaryForm::from_ints(&[0, 1, 1, 0]),
                BinaryForm::from_ints(&[0, 0, 0, 1]),
            ];
            (CubicBranch::General, l1.scale(&mu[0]), l3.scale(&mu[1]), target)
        }
        [z1, z2] => {
            let (double, simple) = if z1.multiplicity == 2 { (z1, z2) } else { (z2, z1) };
            let target = [
                BinaryForm::from_ints(&[1, 0, 0, 0]),
                BinaryForm::from_ints(&[0, 1, 0, 0]),
                BinaryForm::from_ints(&[0, 0, 0, 1]),
            ];
            (CubicBranch::Tangent, double.linear_form(), simple.linear_form(), target)
        }
        _ => {
            return Err(Error::ConstructionCheckFailed(
                "span of alpha is an osculating plane, so alpha has a common factor".into(),
            ))
        }
    };
    let (n_mat, n_inv) = reparam_pair(&u, &v)?;
    let alpha_t: Vec<BinaryForm> = alpha.iter().map(|f| f.substitute(&n_inv)).collect();
    let alpha_vecs: Vec<Vec<Scalar>> = alpha_t.iter().map(|f| f.coeffs().to_vec()).collect();
    let mut frame = ExactMatrix::zeros(3, 3);
    for (j, t) in target.iter().enumerate() {
        let col = solve_combination(&alpha_vecs, t.coeffs())
            .ok_or_else(|| Error::ConstructionCheckFailed("normal form is not in the span of alpha".into()))?;
        for (i, c) in col.into_iter().enumerate() {
            frame.set(i, j, c);
        }
    }
    let beta_t: Vec<BinaryForm> = beta.iter().map(|f| f.substitute(&n_inv)).collect();
    let a_n = combine_columns(&alpha_t, &frame);
    let b_n = combine_columns(&beta_t, &frame);
    let m = cross(&a_n, &b_n);
    let not_divisible = |_| Error::ConstructionCheckFailed("normal-form minors lost their s or t factor".into());
    let phi0 = BinaryForm::div_exact(&m[2], &BinaryForm::s()).map_err(not_divisible)?;
    let phi1 = BinaryForm::div_exact(&m[0], &BinaryForm::t()).map_err(not_divisible)?;
    let (s, t) = (BinaryForm::s(), BinaryForm::t());
    let phi = &(&m[1] + &(&t * &phi0)) + &(&s * &phi1);
    let coords_normal = vec![&s * &phi0, -(&t * &phi0), -(&s * &phi1), &t * &phi1, phi];
    let projection = int_rows(&[&[1, 0, 0, 0, 0], &[0, 1, 1, 0, 1], &[0, 0, 0, 1, 0]]);
    // The projection yields (m2, m1, m0); reverse before undoing the frame.
    let reverse = ExactMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    let plane_map = frame.mul(&reverse);
    Ok(Built { branch, coords_normal, reparam: n_mat, frame, projection, plane_map })
}

fn cone_branch(alpha: &[BinaryForm; 3], beta: &[BinaryForm; 3]) -> Result<Built> {
    let inner = mu_basis_of_triple(alpha)?;
    if inner.k != 0 {
        return Err(Error::ConstructionCheckFailed("dependent alpha without a constant syzygy".into()));
    }
    let gamma: Vec<Scalar> = inner.p.comps().iter().map(|c| c.coeff(0).clone()).collect();
    let c_idx = gamma.iter().position(|g| !g.is_zero()).expect("nonzero syzygy");
    let others: Vec<usize> = (0..3).filter(|&i| i != c_idx).collect();
    let mut frame0 = ExactMatrix::zeros(3, 3);
    frame0.set(others[0], 0, Scalar::one());
    frame0.set(others[1], 1, Scalar::one());
    for (i, g) in gamma.iter().enumerate() {
        frame0.set(i, 2, g.clone());
    }
    let (fa, fb) = (&alpha[others[0]], &alpha[others[1]]);

    // Members mu fa + lambda fb with a repeated root are zeros of the
    // discriminant, a quartic in (mu : lambda).
    let lin: Vec<BinaryForm> = (0..4).map(|i| BinaryForm::linear(fa.coeff(i).clone(), fb.coeff(i).clone())).collect();
    let disc = cubic_discriminant(&lin[0], &lin[1], &lin[2], &lin[3]);
    if disc.is_zero() {
        return Err(Error::ConstructionCheckFailed("every member of the pencil has a repeated root".into()));
    }
    let mut picks: Vec<(Scalar, Scalar, BinaryForm)> = Vec::new();
    for z in rational_zeros(&disc)? {
        let member = &fa.scale(&z.a) + &fb.scale(&z.b);
        let line = repeated_line(&member)?;
        if picks.iter().all(|(_, _, l)| forms_proportional(std::slice::from_ref(l), std::slice::from_ref(&line)).is_none()) {
            picks.push((z.a, z.b, line));
        }
        if picks.len() == 2 {
            break;
        }
    }
    if picks.len() < 2 {
        return Err(Error::IrrationalNormalization(format!(
            "the pencil spanned by alpha has fewer than two rational members with a double root ({disc})"
        )));
    }
    let pencil = ExactMatrix::new(
        3,
        3,
        vec![
            picks[0].0.clone(),
            picks[1].0.clone(),
            Scalar::zero(),
            picks[0].1.clone(),
            picks[1].1.clone(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
        ],
    );
    let frame = frame0.mul(&pencil);
    let (n_mat, n_inv) = reparam_pair(&picks[0].2, &picks[1].2)?;
    let alpha_t: Vec<BinaryForm> = alpha.iter().map(|f| f.substitute(&n_inv)).collect();
    let beta_t: Vec<BinaryForm> = beta.iter().map(|f| f.substitute(&n_inv)).collect();
    let a_n = combine_columns(&alpha_t, &frame);
    let b_n = combine_columns(&beta_t, &frame);
    let (a, b) = (a_n[0].coeff(0).clone(), a_n[0].coeff(1).clone());
    let (c, dd) = (a_n[1].coeff(2).clone(), a_n[1].coeff(3).clone());
    let shape = BinaryForm::new(vec![a.clone(), b.clone(), Scalar::zero(), Scalar::zero()]) == a_n[0]
        && BinaryForm::new(vec![Scalar::zero(), Scalar::zero(), c.clone(), dd.clone()]) == a_n[1]
        && a_n[2].is_zero()
        && !a.is_zero()
        && !dd.is_zero();
    if !shape {
        return Err(Error::ConstructionCheckFailed("alpha did not reach the cone normal form".into()));
    }
    let a1 = if b.is_zero() { a.clone() } else { Scalar::zero() };
    let d1 = if c.is_zero() { dd.clone() } else { Scalar::zero() };
    let m = cross(&a_n, &b_n);
    let b2 = &b_n[2];
    let (s3, s2t, st2, t3) = (
        BinaryForm::monomial(3, 0),
        BinaryForm::monomial(3, 1),
        BinaryForm::monomial(3, 2),
        BinaryForm::monomial(3, 3),
    );
    let ab = &a1 + &b;
    let cd = &c + &d1;
    let x4 = &(&m[2] - &(b2 * &s2t).scale(&a1)) - &(b2 * &st2).scale(&d1);
    let coords_normal = vec![
        (b2 * &t3).scale(&dd),
        (b2 * &s3).scale(&a),
        (b2 * &s2t).scale(&ab),
        (b2 * &st2).scale(&cd),
        x4,
    ];
    let z = Scalar::zero();
    let projection = vec![
        vec![Scalar::one(), z.clone(), z.clone(), &c / &cd, z.clone()],
        vec![z.clone(), -Scalar::one(), -(&b / &ab), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), &a1 / &ab, &d1 / &cd, Scalar::one()],
    ];
    if apply_linear(&projection, &coords_normal) != m.to_vec() {
        return Err(Error::ConstructionCheckFailed("cone projection does not return the normal-form minors".into()));
    }
    Ok(Built { branch: CubicBranch::Cone, coords_normal, reparam: n_mat, frame: frame.clone(), projection, plane_map: frame })
}

/// `(N, N^{-1})` with rows the coefficients of `u` and `v`.
type Mat2 = [[Scalar; 2]; 2];

fn reparam_pair(u: &BinaryForm, v: &BinaryForm) -> Result<(Mat2, Mat2)> {
    let n = [[u.coeff(0).clone(), u.coeff(1).clone()], [v.coeff(0).clone(), v.coeff(1).clone()]];
    let m = ExactMatrix::new(2, 2, n.iter().flatten().cloned().collect());
    let inv = m
        .inverse()
        .ok_or_else(|| Error::ConstructionCheckFailed("normal-form parameters are dependent".into()))?;
    let ni = [[inv.get(0, 0).clone(), inv.get(0, 1).clone()], [inv.get(1, 0).clone(), inv.get(1, 1).clone()]];
    Ok((n, ni))
}

/// Row vector of forms times a matrix: entry `j` is `sum_i f_i P_ij`.
fn combine_columns(f: &[BinaryForm], p: &ExactMatrix) -> [BinaryForm; 3] {
    let deg = f[0].degree();
    std::array::from_fn(|j| (0..3).fold(BinaryForm::zero(deg), |acc, i| &acc + &f[i].scale(p.get(i, j))))
}

fn cross(a: &[BinaryForm; 3], b: &[BinaryForm; 3]) -> [BinaryForm; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn cubic_discriminant(a: &BinaryForm, b: &BinaryForm, c: &BinaryForm, d: &BinaryForm) -> BinaryForm {
    let k = |n: i64| Scalar::from_integer(n.into());
    let t1 = &(b * b) * &(c * c);
    let t2 = (&(a * c) * &(c * c)).scale(&k(-4));
    let t3 = (&(b * b) * &(b * d)).scale(&k(-4));
    let t4 = (&(a * a) * &(d * d)).scale(&k(-27));
    let t5 = (&(a * b) * &(c * d)).scale(&k(18));
    &(&(&(&t1 + &t2) + &t3) + &t4) + &t5
}

/// The linear form whose square divides `f`.
fn repeated_line(f: &BinaryForm) -> Result<BinaryForm> {
    let mut g = f.clone();
    loop {
        let next = BinaryForm::gcd_all([&g, &g.partial_s(), &g.partial_t()])?;
        if next.degree() <= 1 {
            return if next.degree() == 1 {
                Ok(next)
            } else {
                Err(Error::ConstructionCheckFailed("pencil member has no repeated root".into()))
            };
        }
        g = next;
    }
}

fn int_rows(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
    rows.iter().map(|r| r.iter().map(|&v| Scalar::from_integer(v.into())).collect()).collect()
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Helper for callers holding the matrix rows as moving lines.
pub fn explicit_cubic_lift_from_lines(alpha: &MovingLine, beta: &MovingLine) -> Result<CubicLift> {
    let forms = alpha.cross(beta);
    explicit_cubic_lift_from_rows(alpha.comps(), beta.comps(), &forms)
}
