use num_traits::Zero;

use super::{LiftedCurve, ScrollData};
use crate::arith::{forms_proportional, BinaryForm, MovingLine, Scalar};
use crate::curve::{generic_map_degree, preimage_degree, DEFAULT_SEED, MAP_DEGREE_TRIALS};

/// Smoothness and injectivity checks on a lift, plus the cone vertex when the
/// scroll is a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftDiagnostics {
    /// Degree of the gcd of the 2x2 minors of the derivative matrix; zero
    /// means the parameterization is an immersion.
    pub immersion_gcd_degree: usize,
    /// Generic number of preimages of a point of `D`.
    pub map_degree: usize,
    pub vertex: Option<Vec<Scalar>>,
    pub vertex_preimage_degree: Option<usize>,
    /// `d - k`, the expected multiplicity of `D` at the vertex.
    pub expected_vertex_multiplicity: usize,
    /// Immersion for `h > 0`, vertex multiplicity for `h = 0`, and
    /// injectivity in both cases.
    pub passed: bool,
}

pub fn lift_diagnostics(lift: &LiftedCurve, scroll: &ScrollData) -> LiftDiagnostics {
    let immersion_gcd_degree = immersion_defect(&lift.coords);
    let map_degree = generic_map_degree(&lift.coords, DEFAULT_SEED, MAP_DEGREE_TRIALS);
    let expected = scroll.d - scroll.k;
    let (vertex, vertex_preimage_degree) = if scroll.ascenzi {
        match vertex_of_cone(lift, &scroll.gamma) {
            Some(v) => {
                let deg = preimage_degree(&lift.coords, &v);
                (Some(v), Some(deg))
            }
            None => (None, None),
        }
    } else {
        (None, None)
    };
    let shape_ok = if scroll.ascenzi { vertex_preimage_degree == Some(expected) } else { immersion_gcd_degree == 0 };
    LiftDiagnostics {
        immersion_gcd_degree,
        map_degree,
        vertex,
        vertex_preimage_degree,
        expected_vertex_multiplicity: expected,
        passed: shape_ok && map_degree == 1,
    }
}

/// Degree of the gcd of all 2x2 minors of `(dh/ds ; dh/dt)`.
pub fn immersion_defect(coords: &[BinaryForm]) -> usize {
    let ds: Vec<BinaryForm> = coords.iter().map(BinaryForm::partial_s).collect();
    let dt: Vec<BinaryForm> = coords.iter().map(BinaryForm::partial_t).collect();
    let mut minors = Vec::new();
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            let m = &(&ds[i] * &dt[j]) - &(&ds[j] * &dt[i]);
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    BinaryForm::gcd_all(minors.iter()).map_or(ds[0].degree() * 2, |g| g.degree())
}

/// Vertex of the cone for a constant `gamma`: coordinate `i` is the scalar `c`
/// with `gamma x A_i = c alpha`, the value every lift coordinate takes on the
/// contracted section.
pub fn vertex_of_cone(lift: &LiftedCurve, gamma: &MovingLine) -> Option<Vec<Scalar>> {
    if gamma.degree() != 0 {
        return None;
    }
    let alpha = lift.alpha();
    let g: Vec<Scalar> = gamma.comps().iter().map(|c| c.coeff(0).clone()).collect();
    let v: Option<Vec<Scalar>> = lift
        .syzygy_basis
        .iter()
        .map(|a| {
            let a = a.comps();
            let cross = [
                &a[2].scale(&g[1]) - &a[1].scale(&g[2]),
                &a[0].scale(&g[2]) - &a[2].scale(&g[0]),
                &a[1].scale(&g[0]) - &a[0].scale(&g[1]),
            ];
            if cross.iter().all(BinaryForm::is_zero) {
                Some(Scalar::zero())
            } else {
                forms_proportional(&cross, &alpha)
            }
        })
        .collect();
    v.filter(|v| v.iter().any(|c| !c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::curve::ParamCurve;
    use crate::scroll::{lift, second_level};

    #[test]
    fn cusp_vertex_is_the_cusp() {
        let c = ParamCurve::new([
            BinaryForm::from_ints(&[1, 0, 0, 0]),
            BinaryForm::from_ints(&[0, 0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 0, 1]),
        ])
        .unwrap();
        let l = lift(&c).unwrap();
        let s = second_level(&c).unwrap();
        let diag = lift_diagnostics(&l, &s);
        assert_eq!(diag.vertex, Some(vec![int(1), int(0), int(0)]));
        assert_eq!(diag.vertex_preimage_degree, Some(2));
        assert!(diag.passed);
    }
}
