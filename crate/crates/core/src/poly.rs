//! Unilateral quaternionic polynomials.
//!
//! Coefficients are stored ascending by degree. The side records where the
//! coefficients sit relative to the powers of the variable:
//! left `f(q) = Σ aₖ qᵏ`, right `g(q) = Σ qᵏ aₖ`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quat::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientSide {
    /// `Σ aₖ qᵏ`
    Left,
    /// `Σ qᵏ aₖ`
    Right,
}

impl CoefficientSide {
    pub fn opposite(self) -> Self {
        match self {
            Self::Left => Self::Right,
            Self::Right => Self::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Left => "left",
            Self::Right => "right",
        }
    }
}

impl fmt::Display for CoefficientSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Index of the highest nonzero coefficient below the leading one.
///
/// `None` means the polynomial is `qⁿ`. Index 0 is accepted (only `a₀`
/// nonzero) even though the lacunary definition starts at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LacunaryProfile(pub Option<usize>);

impl LacunaryProfile {
    pub fn r(&self) -> Option<usize> {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyFile", into = "PolyFile")]
pub struct QPolynomial {
    coeffs: Vec<Quaternion>,
    side: CoefficientSide,
}

/// On-disk layout: `{"side": "left", "coeffs": [[w,x,y,z], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyFile {
    side: CoefficientSide,
    coeffs: Vec<[f64; 4]>,
}

impl TryFrom<PolyFile> for QPolynomial {
    type Error = Error;
    fn try_from(file: PolyFile) -> Result<Self> {
        if file.coeffs.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Parse("non-finite coefficient".into()));
        }
        QPolynomial::new(file.coeffs.into_iter().map(Quaternion::from).collect(), file.side)
    }
}

impl From<QPolynomial> for PolyFile {
    fn from(p: QPolynomial) -> Self {
        PolyFile {
            side: p.side,
            coeffs: p.coeffs.into_iter().map(Quaternion::to_array).collect(),
        }
    }
}

impl QPolynomial {
    /// Builds a polynomial from ascending coefficients `a₀ … aₙ`.
    pub fn new(coeffs: Vec<Quaternion>, side: CoefficientSide) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::InvalidParameter("empty coefficient list".into())),
            Some(lead) if lead.is_zero() => Err(Error::ZeroLeading),
            Some(_) if coeffs.iter().any(|c| !c.is_finite()) => {
                Err(Error::InvalidParameter("non-finite coefficient".into()))
            }
            Some(_) => Ok(Self { coeffs, side }),
        }
    }

    /// Monic polynomial from its lower coefficients `a₀ … aₙ₋₁`.
    pub fn monic(lower: &[Quaternion], side: CoefficientSide) -> Self {
        let mut coeffs = lower.to_vec();
        coeffs.push(Quaternion::ONE);
        Self::new(coeffs, side).expect("monic leading coefficient is nonzero")
    }

    /// `qⁿ`.
    pub fn monomial(n: usize, side: CoefficientSide) -> Self {
        Self::monic(&vec![Quaternion::ZERO; n], side)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn side(&self) -> CoefficientSide {
        self.side
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Quaternion {
        *self.coeffs.last().expect("non-empty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Quaternion::ONE
    }

    /// Largest norm among `a₀ … aₙ₋₁`.
    pub fn max_lower_norm(&self) -> f64 {
        self.coeffs[..self.degree()].iter().map(Quaternion::norm).fold(0.0, f64::max)
    }

    /// `1 + max |aₖ|` over all coefficients, the scale used by residual contracts.
    pub fn scale(&self) -> f64 {
        1.0 + self.coeffs.iter().map(Quaternion::norm).fold(0.0, f64::max)
    }

    /// Evaluates at `q`. Powers are built by repeated multiplication.
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        let mut power = Quaternion::ONE;
        let mut acc = Quaternion::ZERO;
        for (k, &a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power *= q;
            }
            acc += match self.side {
                CoefficientSide::Left => a * power,
                CoefficientSide::Right => power * a,
            };
        }
        acc
    }

    /// Product with the indeterminate commuting with coefficients:
    /// `c_γ = Σ_{α+β=γ} a_α b_β`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::MixedSides);
        }
        let mut coeffs = vec![Quaternion::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs, self.side)
    }

    /// Divides out the leading coefficient on the side the coefficients live
    /// on, which leaves the zero set unchanged.
    pub fn normalize_monic(&self) -> Result<Self> {
        let lead = self.leading();
        if lead == Quaternion::ONE {
            return Ok(self.clone());
        }
        let inv = lead.inv().map_err(|_| Error::ZeroLeading)?;
        let mut coeffs: Vec<Quaternion> = self
            .coeffs
            .iter()
            .map(|&a| match self.side {
                CoefficientSide::Left => inv * a,
                CoefficientSide::Right => a * inv,
            })
            .collect();
        *coeffs.last_mut().unwrap() = Quaternion::ONE;
        Self::new(coeffs, self.side)
    }

    /// Highest index `j < n` with an exactly nonzero coefficient.
    pub fn lacunary_profile(&self) -> LacunaryProfile {
        let n = self.degree();
        LacunaryProfile(self.coeffs[..n].iter().rposition(|c| !c.is_zero()))
    }

    /// Opposite-side polynomial with conjugated coefficients. Since
    /// conjugation reverses products, `q` is a zero of `self` iff `q̄` is a
    /// zero of the mirror.
    pub fn mirror(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Quaternion::conj).collect(),
            side: self.side.opposite(),
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            match (k, self.side) {
                (0, _) => write!(f, "({a})")?,
                _ if *a == Quaternion::ONE => f.write_str(&power)?,
                (_, CoefficientSide::Left) => write!(f, "({a}){power}")?,
                (_, CoefficientSide::Right) => write!(f, "{power}({a})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
