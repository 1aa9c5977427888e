//! Parameterized rational plane curves: normalization, splitting type, map
//! degree, point multiplicities and implicit equations.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{resultant_moving_lines, BinaryForm, MovingLine, Scalar, TernaryPoly};
use crate::error::{Error, Result};
use crate::syzygy::{coefficient_rank, mu_basis, MuBasis};

/// Seed used whenever the caller does not pick one.
pub const DEFAULT_SEED: u64 = 1729;
/// Random parameter values tried by [`ParamCurve::map_degree`].
pub const MAP_DEGREE_TRIALS: usize = 5;

/// A primitive, linearly independent triple `(f0, f1, f2)` of degree `d >= 2`.
#[derive(Clone)]
pub struct ParamCurve {
    forms: [BinaryForm; 3],
    mu: OnceLock<std::result::Result<MuBasis, Error>>,
}

impl PartialEq for ParamCurve {
    fn eq(&self, other: &Self) -> bool {
        self.forms == other.forms
    }
}

impl Eq for ParamCurve {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitResult {
    /// Primitive integer equation with positive leading coefficient.
    pub f: TernaryPoly,
    pub r: usize,
    pub resultant_raw: TernaryPoly,
}

/// Curve obtained after dividing out the common factor of the input triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MadeCurve {
    pub curve: ParamCurve,
    pub removed_factor: BinaryForm,
}

/// Where a hypothetical multiplicity-`m` point puts the splitting type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscenziVerdict {
    pub a: usize,
    pub m: usize,
    pub lower: usize,
    pub upper: usize,
    pub consistent: bool,
    /// `2m + 1 >= d`, in which case `a` must equal `min(m, d - m)`.
    pub forced: bool,
}

/// Divides out `gcd(g0, g1, g2)` and checks that the reduced forms span a plane
/// curve.
pub fn make_curve(g: [BinaryForm; 3]) -> Result<MadeCurve> {
    let d = g[0].degree();
    for f in &g[1..] {
        if f.degree() != d {
            return Err(Error::DegreeMismatch(d, f.degree()));
        }
    }
    if g.iter().all(BinaryForm::is_zero) {
        return Err(Error::ZeroInput);
    }
    let common = BinaryForm::gcd_all(g.iter())?;
    let forms = if common.degree() == 0 {
        g
    } else {
        let [a, b, c] = &g;
        [
            BinaryForm::div_exact(a, &common)?,
            BinaryForm::div_exact(b, &common)?,
            BinaryForm::div_exact(c, &common)?,
        ]
    };
    let curve = ParamCurve::new(forms)?;
    Ok(MadeCurve { curve, removed_factor: common })
}

/// Curve given by the 2x2 minors of a 2x3 matrix of forms.
pub fn curve_from_matrix(top: &MovingLine, bottom: &MovingLine) -> Result<MadeCurve> {
    make_curve(top.cross(bottom))
}

impl ParamCurve {
    pub fn new(forms: [BinaryForm; 3]) -> Result<Self> {
        let d = forms[0].degree();
        if forms.iter().any(|f| f.degree() != d) {
            return Err(Error::DegreeMismatch(d, forms.iter().map(BinaryForm::degree).max().unwrap_or(d)));
        }
        if forms.iter().all(BinaryForm::is_zero) {
            return Err(Error::ZeroInput);
        }
        if BinaryForm::gcd_all(forms.iter())?.degree() > 0 {
            return Err(Error::NotPrimitive);
        }
        if coefficient_rank(&forms) < 3 {
            return Err(Error::DegenerateLine);
        }
        Ok(Self { forms, mu: OnceLock::new() })
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn forms(&self) -> &[BinaryForm; 3] {
        &self.forms
    }

    /// μ-basis, computed on first use.
    pub fn mu_basis(&self) -> Result<&MuBasis> {
        self.mu.get_or_init(|| mu_basis(&self.forms)).as_ref().map_err(Clone::clone)
    }

    pub fn splitting_type(&self) -> Result<SplittingType> {
        let m = self.mu_basis()?;
        Ok(SplittingType { a: m.k, b: m.d - m.k })
    }

    pub fn map_degree(&self) -> usize {
        self.map_degree_seeded(DEFAULT_SEED, MAP_DEGREE_TRIALS)
    }

    pub fn map_degree_seeded(&self, seed: u64, trials: usize) -> usize {
        generic_map_degree(&self.forms, seed, trials)
    }

    /// Number of parameter preimages of `point`, with multiplicity; 0 off the
    /// curve. Equals the multiplicity of the point when the map is birational.
    pub fn multiplicity_at_point(&self, point: &[Scalar; 3]) -> usize {
        preimage_degree(&self.forms, point)
    }

    pub fn implicitize(&self) -> Result<ImplicitResult> {
        self.implicitize_seeded(DEFAULT_SEED)
    }

    /// `F` with `Res(p, q) = c F^r`. A failed root extraction is retried with
    /// a larger sample for `r` before giving up.
    pub fn implicitize_seeded(&self, seed: u64) -> Result<ImplicitResult> {
        let mu = self.mu_basis()?;
        let raw = resultant_moving_lines(&mu.p, &mu.q)?;
        let d = self.degree();
        let first = self.map_degree_seeded(seed, MAP_DEGREE_TRIALS);
        let mut attempts = vec![first];
        let second = self.map_degree_seeded(seed.wrapping_add(1), 5 * MAP_DEGREE_TRIALS);
        if second != first {
            attempts.push(second);
        }
        for r in attempts.iter().copied() {
            if r == 0 || !d.is_multiple_of(r) {
                continue;
            }
            let Some(root) = raw.nth_root(r) else { continue };
            let f = root.primitive();
            if f.degree() * r == d && f.vanishes_on(&self.forms) {
                return Ok(ImplicitResult { f, r, resultant_raw: raw });
            }
        }
        Err(Error::PowerExtractionFailed(*attempts.last().unwrap_or(&first)))
    }

    pub fn ascenzi_bounds_check(&self, m: usize) -> Result<AscenziVerdict> {
        let a = self.splitting_type()?.a;
        let d = self.degree();
        let (lower, upper) = ascenzi_interval(d, m);
        Ok(AscenziVerdict { a, m, lower, upper, consistent: lower <= a && a <= upper, forced: 2 * m + 1 >= d })
    }
}

impl fmt::Debug for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamCurve<{}>({}; {}; {})", self.degree(), self.forms[0], self.forms[1], self.forms[2])
    }
}

/// `[min(m, d-m), min(d-m, floor(d/2))]`, the range of `a` allowed by a point
/// of multiplicity `m` on a degree-`d` curve.
pub fn ascenzi_interval(d: usize, m: usize) -> (usize, usize) {
    assert!(m >= 1 && m < d, "multiplicity must lie in 1..d");
    (m.min(d - m), (d - m).min(d / 2))
}

/// Degree of the gcd of the 2x2 minors of the matrix with rows `forms` and
/// `point`: the number of parameters, with multiplicity, mapping to `point`.
pub fn preimage_degree(forms: &[BinaryForm], point: &[Scalar]) -> usize {
    assert_eq!(forms.len(), point.len());
    assert!(point.iter().any(|c| !num_traits::Zero::is_zero(c)), "point must be nonzero");
    let mut minors = Vec::new();
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = &forms[i].scale(&point[j]) - &forms[j].scale(&point[i]);
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    match BinaryForm::gcd_all(minors.iter()) {
        Ok(g) => g.degree(),
        // Every minor vanishes: the whole curve sits at `point`.
        Err(_) => forms[0].degree(),
    }
}

/// Degree of the map `P^1 -> image` for any number of coordinates, as the
/// least preimage count over random parameter values.
pub fn generic_map_degree(forms: &[BinaryForm], seed: u64, trials: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = forms[0].degree();
    let mut done = 0;
    while done < trials.max(1) {
        let s0 = Scalar::from_integer(rng.gen_range(-40i64..=40).into());
        let t0 = Scalar::from_integer(rng.gen_range(-40i64..=40).into());
        let point: Vec<Scalar> = forms.iter().map(|f| f.eval(&s0, &t0)).collect();
        if point.iter().all(num_traits::Zero::is_zero) {
            continue;
        }
        best = best.min(preimage_degree(forms, &point));
        done += 1;
    }
    best
}

/// Random form with integer coefficients in `-range..=range`.
pub fn random_form(rng: &mut impl Rng, degree: usize, range: i64) -> BinaryForm {
    BinaryForm::new((0..=degree).map(|_| Scalar::from_integer(rng.gen_range(-range..=range).into())).collect())
}
