//! Serializable reports. Rationals are written as strings (`"3"`, `"-5/7"`)
//! so that a parsed report reproduces the exact values.

use serde::{Deserialize, Serialize};

use crate::arith::{format_scalar, parse_scalar, BinaryForm, MovingLine};
use crate::curve::ParamCurve;
use crate::error::{Error, Result};
use crate::scroll::{lift_diagnostics, second_level, LiftDiagnostics, LiftedCurve, ScrollData};
use crate::syzygy::hilbert_burch_check;

pub type FormJson = Vec<String>;
pub type LineJson = [FormJson; 3];

pub fn form_json(f: &BinaryForm) -> FormJson {
    f.coeff_strings()
}

pub fn line_json(l: &MovingLine) -> LineJson {
    l.comps().clone().map(|f| f.coeff_strings())
}

pub fn form_from_json(f: &[String]) -> Result<BinaryForm> {
    Ok(BinaryForm::new(f.iter().map(|c| parse_scalar(c)).collect::<Result<_>>()?))
}

pub fn line_from_json(l: &LineJson) -> Result<MovingLine> {
    MovingLine::new(form_from_json(&l[0])?, form_from_json(&l[1])?, form_from_json(&l[2])?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondLevelJson {
    pub h: usize,
    pub e: usize,
    pub ascenzi: bool,
    pub alpha_dependent: bool,
    pub gamma: LineJson,
    pub delta: LineJson,
}

impl From<&ScrollData> for SecondLevelJson {
    fn from(s: &ScrollData) -> Self {
        Self {
            h: s.h,
            e: s.e,
            ascenzi: s.ascenzi,
            alpha_dependent: s.alpha_dependent,
            gamma: line_json(&s.gamma),
            delta: line_json(&s.delta),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub immersion_gcd_degree: usize,
    pub map_degree: usize,
    pub vertex: Option<Vec<String>>,
    pub vertex_preimage_degree: Option<usize>,
    pub expected_vertex_multiplicity: usize,
    pub passed: bool,
}

impl From<&LiftDiagnostics> for DiagnosticsJson {
    fn from(d: &LiftDiagnostics) -> Self {
        Self {
            immersion_gcd_degree: d.immersion_gcd_degree,
            map_degree: d.map_degree,
            vertex: d.vertex.as_ref().map(|v| v.iter().map(format_scalar).collect()),
            vertex_preimage_degree: d.vertex_preimage_degree,
            expected_vertex_multiplicity: d.expected_vertex_multiplicity,
            passed: d.passed,
        }
    }
}

/// Lift of a curve with its scroll invariants and diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftJson {
    pub degree: usize,
    pub k: usize,
    pub h: usize,
    pub e: usize,
    pub chart: String,
    pub coords: Vec<FormJson>,
    pub removed_gcd: FormJson,
    pub syzygy_basis: Vec<LineJson>,
    pub diagnostics: DiagnosticsJson,
}

impl LiftJson {
    pub fn new(lift: &LiftedCurve, scroll: &ScrollData) -> Self {
        Self {
            degree: lift.degree(),
            k: lift.k,
            h: scroll.h,
            e: scroll.e,
            chart: lift.chart.to_string(),
            coords: lift.coords.iter().map(form_json).collect(),
            removed_gcd: form_json(&lift.removed_gcd),
            syzygy_basis: lift.syzygy_basis.iter().map(line_json).collect(),
            diagnostics: DiagnosticsJson::from(&lift_diagnostics(lift, scroll)),
        }
    }

    /// Rebuilds the lifted curve from the serialized fields.
    pub fn to_lifted(&self) -> Result<LiftedCurve> {
        let coords = self.coords.iter().map(|c| form_from_json(c)).collect::<Result<Vec<_>>>()?;
        if coords.len() != self.k + 2 || coords.iter().any(|c| c.degree() != self.degree) {
            return Err(Error::Parse(format!("expected {} coordinates of degree {}", self.k + 2, self.degree)));
        }
        Ok(LiftedCurve {
            k: self.k,
            coords,
            chart: self.chart.parse()?,
            removed_gcd: form_from_json(&self.removed_gcd)?,
            syzygy_basis: self.syzygy_basis.iter().map(line_from_json).collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitJson {
    pub equation: String,
    pub r: usize,
    pub degree: usize,
    pub terms: Vec<([u32; 3], String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: [FormJson; 3],
    pub degree: usize,
    pub splitting: (usize, usize),
    pub balanced: bool,
    pub p: LineJson,
    pub q: LineJson,
    pub hilbert_burch_lambda: String,
    pub map_degree: usize,
    pub second_level: SecondLevelJson,
    pub implicit: Option<ImplicitJson>,
    pub lift: Option<LiftJson>,
    pub diagnostics: Vec<String>,
}

impl AnalysisReport {
    /// μ-basis, Hilbert–Burch constant, map degree and second-level data.
    pub fn analyze(c: &ParamCurve, seed: u64) -> Result<Self> {
        let mu = c.mu_basis()?;
        let lambda = hilbert_burch_check(c.forms(), mu)?;
        let scroll = second_level(c)?;
        let mut diagnostics = Vec::new();
        if c.degree() % 2 == 1 && 2 * mu.k + 1 == c.degree() {
            diagnostics.push(format!(
                "2k+1 = d: a point of multiplicity k = {} would make the curve Ascenzi; that case is read off from h = 0",
                mu.k
            ));
        }
        if mu.balanced {
            diagnostics.push(
                "balanced splitting: p is the first echelon syzygy of degree d/2; h refers to this choice".into(),
            );
        }
        Ok(Self {
            input: c.forms().clone().map(|f| f.coeff_strings()),
            degree: c.degree(),
            splitting: mu.splitting(),
            balanced: mu.balanced,
            p: line_json(&mu.p),
            q: line_json(&mu.q),
            hilbert_burch_lambda: format_scalar(&lambda),
            map_degree: c.map_degree_seeded(seed, crate::curve::MAP_DEGREE_TRIALS),
            second_level: SecondLevelJson::from(&scroll),
            implicit: None,
            lift: None,
            diagnostics,
        })
    }

    pub fn with_implicit(mut self, c: &ParamCurve, seed: u64) -> Result<Self> {
        let imp = c.implicitize_seeded(seed)?;
        self.implicit = Some(ImplicitJson {
            equation: imp.f.to_string(),
            r: imp.r,
            degree: imp.f.degree(),
            terms: imp.f.terms().map(|(e, v)| (*e, format_scalar(v))).collect(),
        });
        Ok(self)
    }

    pub fn with_lift(mut self, c: &ParamCurve, lift: &LiftedCurve) -> Result<Self> {
        let scroll = second_level(c)?;
        let json = LiftJson::new(lift, &scroll);
        if !json.diagnostics.passed {
            self.diagnostics.push("lift diagnostics failed".into());
        }
        self.lift = Some(json);
        Ok(self)
    }
}
