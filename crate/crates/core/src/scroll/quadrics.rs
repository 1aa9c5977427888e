use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{format_scalar, BinaryForm, Scalar};
use crate::linalg::ExactMatrix;

/// Quadratic form `sum c_ij x_i x_j` (`i <= j`) in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricForm {
    pub nvars: usize,
    pub terms: BTreeMap<(usize, usize), Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSpace {
    pub dimension: usize,
    pub basis: Vec<QuadricForm>,
}

impl QuadricForm {
    /// Terms with zero coefficients are dropped; `(j, i)` is folded onto `(i, j)`.
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = ((usize, usize), Scalar)>) -> Self {
        let mut map: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((i, j), c) in terms {
            assert!(i < nvars && j < nvars);
            *map.entry((i.min(j), i.max(j))).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { nvars, terms: map }
    }

    pub fn from_ints(nvars: usize, terms: &[((usize, usize), i64)]) -> Self {
        Self::new(nvars, terms.iter().map(|&(e, c)| (e, Scalar::from_integer(c.into()))))
    }

    /// `Q(h_0, ..., h_{n-1})`, of degree `2 deg h`.
    pub fn eval_forms(&self, coords: &[BinaryForm]) -> BinaryForm {
        assert_eq!(coords.len(), self.nvars);
        let d = coords[0].degree();
        self.terms
            .iter()
            .fold(BinaryForm::zero(2 * d), |acc, (&(i, j), c)| &acc + &(&coords[i] * &coords[j]).scale(c))
    }

    pub fn vanishes_on(&self, coords: &[BinaryForm]) -> bool {
        self.eval_forms(coords).is_zero()
    }
}

impl fmt::Display for QuadricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            let mono = if i == j { format!("x{i}^2") } else { format!("x{i}*x{j}") };
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&mag))?;
            }
        }
        Ok(())
    }
}

/// All quadrics vanishing on the parameterized curve, as a reduced echelon
/// basis over the monomials `x_i x_j`, `i <= j`, in lexicographic order.
pub fn quadrics_through(coords: &[BinaryForm]) -> QuadricSpace {
    let n = coords.len();
    let d = coords[0].degree();
    let monomials: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let columns: Vec<Vec<Scalar>> =
        monomials.iter().map(|&(i, j)| (&coords[i] * &coords[j]).coeffs().to_vec()).collect();
    let m = ExactMatrix::from_columns(&columns, 2 * d + 1);
    let basis: Vec<QuadricForm> = m
        .kernel_basis()
        .into_iter()
        .map(|v| QuadricForm::new(n, monomials.iter().copied().zip(v)))
        .collect();
    QuadricSpace { dimension: basis.len(), basis }
}
