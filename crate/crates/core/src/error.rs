use thiserror::Error;

/// Errors raised by the algebra, curve and scroll routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero forms is undefined")]
    BothZero,
    #[error("division by the zero form")]
    DivideByZero,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("forms have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("resultant vanishes identically; the moving lines share a common factor")]
    ZeroResultant,
    #[error("input forms have a nontrivial common factor")]
    NotPrimitive,
    #[error("forms are linearly dependent; the image is a point or a line")]
    DegenerateLine,
    #[error("all input forms are zero")]
    ZeroInput,
    #[error("2x2 minors of the mu-basis are not a constant multiple of the parameterization")]
    MinorMismatch,
    #[error("raw resultant is not a perfect {0}-th power")]
    PowerExtractionFailed(usize),
    #[error("every lift chart vanishes identically")]
    ChartExhausted,
    #[error("requested lift chart {0} vanishes identically")]
    ChartDegenerate(String),
    #[error("common factor of the chart forms has degree {found}, expected {expected}")]
    GcdDegreeMismatch { expected: usize, found: usize },
    #[error("projection center {0} lies on the lifted curve")]
    CenterOnCurve(usize),
    #[error("invalid projection centers: {0}")]
    InvalidCenters(String),
    #[error("explicit construction needs splitting type (3, d-3), found k = {0}")]
    WrongSplitting(usize),
    #[error("normal form needs irrational data: {0}")]
    IrrationalNormalization(String),
    #[error("construction self-check failed: {0}")]
    ConstructionCheckFailed(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Variant name as printed on the diagnostic stream by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::BothZero => "BothZero",
            Error::DivideByZero => "DivideByZero",
            Error::NotDivisible => "NotDivisible",
            Error::DegreeMismatch(..) => "DegreeMismatch",
            Error::ZeroResultant => "ZeroResultant",
            Error::NotPrimitive => "NotPrimitive",
            Error::DegenerateLine => "DegenerateLine",
            Error::ZeroInput => "ZeroInput",
            Error::MinorMismatch => "MinorMismatch",
            Error::PowerExtractionFailed(_) => "PowerExtractionFailed",
            Error::ChartExhausted => "ChartExhausted",
            Error::ChartDegenerate(_) => "ChartDegenerate",
            Error::GcdDegreeMismatch { .. } => "GcdDegreeMismatch",
            Error::CenterOnCurve(_) => "CenterOnCurve",
            Error::InvalidCenters(_) => "InvalidCenters",
            Error::WrongSplitting(_) => "WrongSplitting",
            Error::IrrationalNormalization(_) => "IrrationalNormalization",
            Error::ConstructionCheckFailed(_) => "ConstructionCheckFailed",
            Error::Parse(_) => "ParseError",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
