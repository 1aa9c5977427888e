use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LiftedCurve;
use crate::arith::{BinaryForm, Scalar};
use crate::curve::{make_curve, preimage_degree, ParamCurve};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Image of a parameterization under the linear map with the given rows.
pub fn apply_linear(rows: &[Vec<Scalar>], coords: &[BinaryForm]) -> Vec<BinaryForm> {
    let d = coords[0].degree();
    rows.iter()
        .map(|row| {
            assert_eq!(row.len(), coords.len());
            row.iter()
                .zip(coords)
                .filter(|(c, _)| !c.is_zero())
                .fold(BinaryForm::zero(d), |acc, (c, h)| &acc + &h.scale(c))
        })
        .collect()
}

/// Rows of the projection onto the plane of the Koszul syzygies,
/// `(x_{k-1}, -x_k, x_{k+1})`. The sign on the middle coordinate undoes the
/// orientation of `(alpha2, 0, -alpha0)`, so the image is the input curve
/// itself rather than a reflection of it.
pub fn default_projection(n: usize) -> Vec<Vec<Scalar>> {
    let mut rows = vec![vec![Scalar::zero(); n]; 3];
    rows[0][n - 3] = Scalar::from_integer(1.into());
    rows[1][n - 2] = Scalar::from_integer((-1).into());
    rows[2][n - 1] = Scalar::from_integer(1.into());
    rows
}

/// Projects `D` to the plane, either onto the Koszul plane or from `k - 1`
/// independent centers off the curve.
pub fn project_from_points(lift: &LiftedCurve, centers: Option<&[Vec<Scalar>]>) -> Result<ParamCurve> {
    let n = lift.coords.len();
    let rows = match centers {
        None => default_projection(n),
        Some(cs) => projection_rows(&lift.coords, cs)?,
    };
    let forms = apply_linear(&rows, &lift.coords);
    let [a, b, c]: [BinaryForm; 3] = forms.try_into().expect("three rows");
    Ok(make_curve([a, b, c])?.curve)
}

/// Three linear forms vanishing on the centers.
fn projection_rows(coords: &[BinaryForm], centers: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = coords.len();
    if centers.len() + 3 != n {
        return Err(Error::InvalidCenters(format!("expected {} centers, got {}", n - 3, centers.len())));
    }
    if let Some(bad) = centers.iter().find(|c| c.len() != n) {
        return Err(Error::InvalidCenters(format!("center has {} coordinates, expected {n}", bad.len())));
    }
    if centers.is_empty() {
        return Ok(ExactMatrix::identity(3).rref().rows);
    }
    let m = ExactMatrix::from_rows(centers.to_vec());
    if m.rank() != centers.len() {
        return Err(Error::InvalidCenters("centers are linearly dependent".into()));
    }
    for (i, c) in centers.iter().enumerate() {
        if preimage_degree(coords, c) > 0 {
            return Err(Error::CenterOnCurve(i));
        }
    }
    Ok(m.kernel_basis())
}

/// `count` random integer points of `P^{n-1}`, independent and off the curve.
pub fn random_centers(lift: &LiftedCurve, count: usize, seed: u64) -> Vec<Vec<Scalar>> {
    let n = lift.coords.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let cs: Vec<Vec<Scalar>> = (0..count)
            .map(|_| (0..n).map(|_| Scalar::from_integer(rng.gen_range(-9i64..=9).into())).collect())
            .collect();
        if projection_rows(&lift.coords, &cs).is_ok() {
            return cs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{forms_proportional, int};
    use crate::scroll::lift;

    fn cusp() -> ParamCurve {
        ParamCurve::new([
            BinaryForm::from_ints(&[1, 0, 0, 0]),
            BinaryForm::from_ints(&[0, 0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 0, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn default_projection_returns_the_curve() {
        let c = cusp();
        let back = project_from_points(&lift(&c).unwrap(), None).unwrap();
        assert!(forms_proportional(back.forms(), c.forms()).is_some());
    }

    #[test]
    fn center_validation() {
        let l = lift(&cusp()).unwrap();
        assert!(matches!(project_from_points(&l, Some(&[vec![int(1), int(0), int(0)]])), Err(Error::InvalidCenters(_))));
        let empty: Vec<Vec<Scalar>> = Vec::new();
        assert!(project_from_points(&l, Some(&empty)).is_ok());
    }
}
