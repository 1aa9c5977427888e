//! Lifting a plane curve of splitting type `(k, d-k)` to a curve `D` of degree
//! `d` on a rational normal scroll in `P^{k+1}`.
//!
//! The degree-`k` syzygies of `alpha = p` form a `(k+2)`-dimensional space.
//! Each basis syzygy `A_i` gives one coordinate: in a chart `(a, b)`, the form
//! `f_a A_{b,i} - f_b A_{a,i}` equals the complementary component of
//! `f x A_i`, which is `c_i alpha_j` for a degree-`d` form `c_i`. Dividing out
//! the common factor `alpha_j` leaves `h_i = c_i`.

mod cubic;
mod diagnostics;
mod project;
mod quadrics;

pub use cubic::{
    explicit_cubic_lift, explicit_cubic_lift_from_lines, explicit_cubic_lift_from_rows, CubicBranch, CubicLift,
};
pub use diagnostics::{lift_diagnostics, vertex_of_cone, LiftDiagnostics};
pub use project::{apply_linear, default_projection, project_from_points, random_centers};
pub use quadrics::{quadrics_through, QuadricForm, QuadricSpace};

use std::fmt;
use std::str::FromStr;

use crate::arith::{BinaryForm, MovingLine, Scalar};
use crate::curve::ParamCurve;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::syzygy::{coefficient_rank, mu_basis_of_triple, reduce_modulo, syzygy_space};

/// Second-level μ-basis `(gamma, delta)` of `alpha` and the scroll invariants
/// it determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollData {
    pub k: usize,
    pub d: usize,
    pub h: usize,
    pub e: usize,
    pub gamma: MovingLine,
    pub delta: MovingLine,
    pub ascenzi: bool,
    /// The components of `alpha` span only a plane. Recorded alongside `h`.
    pub alpha_dependent: bool,
}

impl ScrollData {
    /// Self-intersection of the minimal section, `-e`.
    pub fn c0_squared(&self) -> i64 {
        -(self.e as i64)
    }

    /// `H^2 = C0^2 + 2(k - h)`, the degree of the embedded scroll.
    pub fn scroll_degree(&self) -> i64 {
        self.c0_squared() + 2 * (self.k - self.h) as i64
    }

    /// `D ~ C0 + (d - h) f`, returned as the fibre coefficient.
    pub fn curve_class_fibres(&self) -> usize {
        self.d - self.h
    }

    /// `D . C0 = -e + d - h = d - k`.
    pub fn curve_meets_section(&self) -> i64 {
        self.c0_squared() + self.curve_class_fibres() as i64
    }
}

/// μ-basis of `alpha`, the minimal syzygy of the curve.
pub fn second_level(curve: &ParamCurve) -> Result<ScrollData> {
    let mu = curve.mu_basis()?;
    let alpha = mu.p.comps().clone();
    let inner = mu_basis_of_triple(&alpha)?;
    let h = inner.k;
    Ok(ScrollData {
        k: mu.k,
        d: mu.d,
        h,
        e: mu.k - 2 * h,
        gamma: inner.p,
        delta: inner.q,
        ascenzi: h == 0,
        alpha_dependent: coefficient_rank(&alpha) < 3,
    })
}

/// Pair of parameterization indices `(a, b)` used to write the lift locally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    C01,
    C02,
    C12,
}

impl Chart {
    pub const ORDER: [Chart; 3] = [Chart::C01, Chart::C02, Chart::C12];

    pub fn indices(self) -> (usize, usize) {
        match self {
            Chart::C01 => (0, 1),
            Chart::C02 => (0, 2),
            Chart::C12 => (1, 2),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.indices();
        write!(f, "{a}{b}")
    }
}

impl FromStr for Chart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "01" => Ok(Chart::C01),
            "02" => Ok(Chart::C02),
            "12" => Ok(Chart::C12),
            other => Err(Error::Parse(format!("unknown chart '{other}', expected 01, 02 or 12"))),
        }
    }
}

/// The curve `D` in `P^{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCurve {
    pub k: usize,
    pub coords: Vec<BinaryForm>,
    pub chart: Chart,
    pub removed_gcd: BinaryForm,
    /// Degree-`k` syzygies of `alpha`; the Koszul triples fill the last three
    /// slots.
    pub syzygy_basis: Vec<MovingLine>,
}

impl LiftedCurve {
    pub fn degree(&self) -> usize {
        self.coords[0].degree()
    }

    pub fn alpha(&self) -> [BinaryForm; 3] {
        // The last basis vector is (alpha1, -alpha0, 0) and the one before is
        // (alpha2, 0, -alpha0).
        let n = self.syzygy_basis.len();
        let last = &self.syzygy_basis[n - 1];
        let mid = &self.syzygy_basis[n - 2];
        [-last.comp(1), last.comp(0).clone(), mid.comp(0).clone()]
    }
}

/// `(0, a2, -a1)`, `(a2, 0, -a0)`, `(a1, -a0, 0)`.
pub fn koszul_syzygies(alpha: &[BinaryForm; 3]) -> Result<[MovingLine; 3]> {
    let z = BinaryForm::zero(alpha[0].degree());
    Ok([
        MovingLine::new(z.clone(), alpha[2].clone(), -&alpha[1])?,
        MovingLine::new(alpha[2].clone(), z.clone(), -&alpha[0])?,
        MovingLine::new(alpha[1].clone(), -&alpha[0], z)?,
    ])
}

/// Basis of the degree-`k` syzygies of `alpha`: an echelon complement of the
/// Koszul span followed by the three Koszul triples.
pub fn scroll_syzygy_basis(alpha: &[BinaryForm; 3]) -> Result<Vec<MovingLine>> {
    let k = alpha[0].degree();
    let koszul = koszul_syzygies(alpha)?;
    let span = ExactMatrix::from_rows(koszul.iter().map(MovingLine::to_vector).collect()).rref();
    if span.pivots.len() != 3 {
        return Err(Error::ConstructionCheckFailed("Koszul syzygies are dependent".into()));
    }
    let reduced: Vec<Vec<Scalar>> = syzygy_space(alpha, k)
        .iter()
        .map(|s| reduce_modulo(s.to_vector(), &span.rows, &span.pivots))
        .filter(|v| v.iter().any(|x| !num_traits::Zero::is_zero(x)))
        .collect();
    let complement = if reduced.is_empty() { Vec::new() } else { ExactMatrix::from_rows(reduced).rref().rows };
    if complement.len() + 3 != k + 2 {
        return Err(Error::ConstructionCheckFailed(format!(
            "degree-{k} syzygy space has dimension {}, expected {}",
            complement.len() + 3,
            k + 2
        )));
    }
    let mut basis: Vec<MovingLine> =
        complement.iter().map(|v| MovingLine::from_vector(k, v)).collect::<Result<_>>()?;
    basis.extend(koszul);
    Ok(basis)
}

/// Lift in the first chart, in the order `01, 02, 12`, whose forms do not all
/// vanish.
pub fn lift(curve: &ParamCurve) -> Result<LiftedCurve> {
    for chart in Chart::ORDER {
        match lift_in_chart(curve, chart) {
            Err(Error::ChartDegenerate(_)) => continue,
            other => return other,
        }
    }
    Err(Error::ChartExhausted)
}

pub fn lift_in_chart(curve: &ParamCurve, chart: Chart) -> Result<LiftedCurve> {
    let mu = curve.mu_basis()?;
    let k = mu.k;
    let basis = scroll_syzygy_basis(mu.p.comps())?;
    let f = curve.forms();
    let (a, b) = chart.indices();
    let g: Vec<BinaryForm> = basis.iter().map(|s| &(&f[a] * s.comp(b)) - &(&f[b] * s.comp(a))).collect();
    if g.iter().all(BinaryForm::is_zero) {
        return Err(Error::ChartDegenerate(chart.to_string()));
    }
    let common = BinaryForm::gcd_all(g.iter())?;
    if common.degree() != k {
        return Err(Error::GcdDegreeMismatch { expected: k, found: common.degree() });
    }
    let coords = g.iter().map(|gi| BinaryForm::div_exact(gi, &common)).collect::<Result<Vec<_>>>()?;
    Ok(LiftedCurve { k, coords, chart, removed_gcd: common, syzygy_basis: basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::forms_proportional;

    fn curve(a: &[i64], b: &[i64], c: &[i64]) -> ParamCurve {
        ParamCurve::new([BinaryForm::from_ints(a), BinaryForm::from_ints(b), BinaryForm::from_ints(c)]).unwrap()
    }

    #[test]
    fn conic_lift_matches_hand_computation() {
        let c = curve(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]);
        assert!(matches!(lift_in_chart(&c, Chart::C01), Err(Error::ChartDegenerate(_))));
        let l = lift(&c).unwrap();
        assert_eq!(l.chart, Chart::C02);
        let want = [BinaryForm::from_ints(&[1, 0, 0]), BinaryForm::from_ints(&[0, -1, 0]), BinaryForm::from_ints(&[0, 0, 1])];
        assert!(forms_proportional(&l.coords, &want).is_some());
        assert_eq!(l.removed_gcd.degree(), 1);
    }

    #[test]
    fn conic_and_cusp_are_cones() {
        let s = second_level(&curve(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1])).unwrap();
        assert_eq!((s.h, s.ascenzi), (0, true));
        assert_eq!(s.gamma, MovingLine::new(BinaryForm::zero(0), BinaryForm::zero(0), BinaryForm::one()).unwrap());
        let s = second_level(&curve(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1])).unwrap();
        assert_eq!((s.h, s.e, s.ascenzi), (0, 1, true));
        assert_eq!(s.gamma, MovingLine::new(BinaryForm::one(), BinaryForm::zero(0), BinaryForm::zero(0)).unwrap());
    }

    #[test]
    fn chart_text() {
        assert_eq!("12".parse::<Chart>().unwrap(), Chart::C12);
        assert!("21".parse::<Chart>().unwrap_err().is_parse());
        assert_eq!(Chart::C02.to_string(), "02");
    }
}
