//! Origin-centered inclusion radii for the zeros of monic polynomials.
//!
//! Each bound is a closed ball `|q| ≤ radius` obtained by applying the
//! Geršgorin balls to a companion matrix after a positive diagonal
//! similarity. The formulas depend only on coefficient norms, and
//! `|q̄| = |q|`, so a bound stated for one coefficient side also holds on
//! the other side through [`QPolynomial::mirror`]; when that happens the
//! result carries a note.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{CoefficientSide, QPolynomial};

/// Tolerance on `Σλⱼ = 1`.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundMethod {
    /// `1 + max |aᵥ|`
    Cauchy,
    /// `max (αᵢ + |aᵢ|) / αᵢ₊₁` with `α₀ = 0`, `αₙ = 1`; holds `α₁ … αₙ₋₁`.
    Weighted(Vec<f64>),
    /// Weighted bound at `αᵢ = |aᵢ|`.
    Ratio,
    /// `max (|aₙ₋ⱼ| / λⱼ)^{1/j}`; holds `λ₁ … λₙ`, summing to one.
    Fujiwara(Vec<f64>),
    /// `λ + λ² + … + λ^{r+1}` with `λ = (max_{j≤r} |aⱼ|)^{1/n}`.
    LacunarySum,
    /// `λ + max(λ², λ^{r+1})`.
    LacunaryMax,
}

impl BoundMethod {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Cauchy => "cauchy",
            Self::Weighted(_) => "weighted",
            Self::Ratio => "ratio",
            Self::Fujiwara(_) => "fujiwara",
            Self::LacunarySum => "lacunary-sum",
            Self::LacunaryMax => "lacunary-max",
        }
    }

    /// Parameters as `key=v1;v2;…`, empty when the method has none.
    pub fn params(&self) -> String {
        let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";");
        match self {
            Self::Weighted(alpha) => format!("alpha={}", join(alpha)),
            Self::Fujiwara(lambda) => format!("lambda={}", join(lambda)),
            _ => String::new(),
        }
    }

    /// Side the bound is derived for.
    pub fn native_side(&self) -> CoefficientSide {
        match self {
            Self::Cauchy | Self::Weighted(_) | Self::Ratio | Self::LacunaryMax => CoefficientSide::Right,
            Self::Fujiwara(_) | Self::LacunarySum => CoefficientSide::Left,
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            f.write_str(self.name())
        } else {
            write!(f, "{}({params})", self.name())
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub method: BoundMethod,
    /// Meaningful only when `applicable`; zero otherwise.
    pub radius: f64,
    pub applicable: bool,
    pub note: String,
}

impl BoundResult {
    fn ok(method: BoundMethod, radius: f64) -> Self {
        Self {
            method,
            radius,
            applicable: true,
            note: String::new(),
        }
    }

    fn inapplicable(method: BoundMethod, note: &str) -> Self {
        Self {
            method,
            radius: 0.0,
            applicable: false,
            note: note.to_string(),
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(note);
        self
    }
}

/// Checks monic, degree ≥ 1, and switches to the mirror when `p` is on the
/// other side. Returns the polynomial to use and whether it was mirrored.
fn prepare(p: &QPolynomial, side: CoefficientSide) -> Result<(QPolynomial, bool)> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(if p.side() == side {
        (p.clone(), false)
    } else {
        (p.mirror(), true)
    })
}

fn finish(result: BoundResult, mirrored: bool) -> BoundResult {
    if mirrored {
        result.with_note("evaluated on the mirrored polynomial")
    } else {
        result
    }
}

fn norms(p: &QPolynomial) -> Vec<f64> {
    p.coeffs().iter().map(|a| a.norm()).collect()
}

pub fn cauchy_bound(p: &QPolynomial) -> Result<BoundResult> {
    let (p, mirrored) = prepare(p, CoefficientSide::Right)?;
    Ok(finish(BoundResult::ok(BoundMethod::Cauchy, 1.0 + p.max_lower_norm()), mirrored))
}

pub fn weighted_bound(p: &QPolynomial, alpha: &[f64]) -> Result<BoundResult> {
    let (p, mirrored) = prepare(p, CoefficientSide::Right)?;
    let n = p.degree();
    if alpha.len() != n - 1 {
        return Err(Error::InvalidParameter(format!(
            "weighted bound needs {} weights for degree {n}, got {}",
            n - 1,
            alpha.len()
        )));
    }
    if let Some(bad) = alpha.iter().find(|&&a| !(a > 0.0 && a.is_finite())) {
        return Err(Error::InvalidParameter(format!("weight {bad} must be positive")));
    }
    let mut full = Vec::with_capacity(n + 1);
    full.push(0.0);
    full.extend_from_slice(alpha);
    full.push(1.0);
    let a = norms(&p);
    let radius = (0..n)
        .map(|i| (full[i] + a[i]) / full[i + 1])
        .fold(0.0, f64::max);
    Ok(finish(BoundResult::ok(BoundMethod::Weighted(alpha.to_vec()), radius), mirrored))
}

/// The weighted bound with `αᵢ = |aᵢ|`:
/// `max{ |a₀|/|a₁|, 2|a₁|/|a₂|, …, 2|aₙ₋₂|/|aₙ₋₁|, 2|aₙ₋₁| }`.
///
/// At degree one there are no interior coefficients and only the last term,
/// `2|a₀|`, is kept.
pub fn ratio_bound(p: &QPolynomial) -> Result<BoundResult> {
    let (p, mirrored) = prepare(p, CoefficientSide::Right)?;
    let n = p.degree();
    let a = norms(&p);
    if n == 1 {
        let r = BoundResult::ok(BoundMethod::Ratio, 2.0 * a[0])
            .with_note("degree one: only the 2|a0| term applies");
        return Ok(finish(r, mirrored));
    }
    if a[1..n].contains(&0.0) {
        return Ok(finish(
            BoundResult::inapplicable(BoundMethod::Ratio, "zero interior coefficient"),
            mirrored,
        ));
    }
    let mut radius = a[0] / a[1];
    for i in 1..n - 1 {
        radius = radius.max(2.0 * a[i] / a[i + 1]);
    }
    radius = radius.max(2.0 * a[n - 1]);
    Ok(finish(BoundResult::ok(BoundMethod::Ratio, radius), mirrored))
}

pub fn fujiwara_bound(p: &QPolynomial, lambda: &[f64]) -> Result<BoundResult> {
    let (p, mirrored) = prepare(p, CoefficientSide::Left)?;
    let n = p.degree();
    if lambda.len() != n {
        return Err(Error::InvalidParameter(format!(
            "Fujiwara bound needs {n} weights, got {}",
            lambda.len()
        )));
    }
    if let Some(bad) = lambda.iter().find(|&&l| !(l > 0.0 && l.is_finite())) {
        return Err(Error::InvalidParameter(format!("weight {bad} must be positive")));
    }
    let sum: f64 = lambda.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
        return Err(Error::InvalidParameter(format!("weights sum to {sum}, not 1")));
    }
    let a = norms(&p);
    let radius = (1..=n)
        .map(|j| (a[n - j] / lambda[j - 1]).powf(1.0 / j as f64))
        .fold(0.0, f64::max);
    Ok(finish(BoundResult::ok(BoundMethod::Fujiwara(lambda.to_vec()), radius), mirrored))
}

/// `λⱼ = 2⁻ʲ` for `j < n` and `λₙ = 2^{-(n-1)}`; sums to one exactly.
pub fn dyadic_weights(n: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (1..n).map(|j| 0.5f64.powi(j as i32)).collect();
    w.push(if n == 1 { 1.0 } else { 0.5f64.powi(n as i32 - 1) });
    w
}

/// `(r, λ)` for the lacunary bounds, or `None` for `qⁿ`.
fn lacunary_lambda(p: &QPolynomial) -> Option<(usize, f64)> {
    let r = p.lacunary_profile().r()?;
    let max = p.coeffs()[..=r].iter().map(|a| a.norm()).fold(0.0, f64::max);
    Some((r, max.powf(1.0 / p.degree() as f64)))
}

fn lacunary(
    p: &QPolynomial,
    method: BoundMethod,
    radius: impl Fn(usize, f64) -> f64,
) -> Result<BoundResult> {
    let (p, mirrored) = prepare(p, method.native_side())?;
    let result = match lacunary_lambda(&p) {
        None => BoundResult::ok(method, 0.0).with_note("q^n: every zero is 0"),
        Some((0, lambda)) => BoundResult::ok(method, radius(0, lambda)).with_note("r = 0"),
        Some((r, lambda)) => BoundResult::ok(method, radius(r, lambda)),
    };
    Ok(finish(result, mirrored))
}

pub fn lacunary_sum_bound(p: &QPolynomial) -> Result<BoundResult> {
    lacunary(p, BoundMethod::LacunarySum, |r, lambda| {
        (1..=r as i32 + 1).map(|k| lambda.powi(k)).sum()
    })
}

pub fn lacunary_max_bound(p: &QPolynomial) -> Result<BoundResult> {
    lacunary(p, BoundMethod::LacunaryMax, |r, lambda| {
        lambda + lambda.powi(2).max(lambda.powi(r as i32 + 1))
    })
}

/// Bound families selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodKind {
    Cauchy,
    Weighted,
    Ratio,
    Fujiwara,
    LacunarySum,
    LacunaryMax,
}

impl MethodKind {
    pub const ALL: [MethodKind; 6] = [
        Self::Cauchy,
        Self::Weighted,
        Self::Ratio,
        Self::Fujiwara,
        Self::LacunarySum,
        Self::LacunaryMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cauchy => "cauchy",
            Self::Weighted => "weighted",
            Self::Ratio => "ratio",
            Self::Fujiwara => "fujiwara",
            Self::LacunarySum => "lacunary-sum",
            Self::LacunaryMax => "lacunary-max",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// Which bounds to evaluate, with optional explicit parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundPresets {
    pub methods: Vec<MethodKind>,
    /// Replaces the default weighted presets.
    pub alpha: Option<Vec<f64>>,
    /// Replaces the dyadic Fujiwara weights.
    pub lambda: Option<Vec<f64>>,
}

impl Default for BoundPresets {
    fn default() -> Self {
        Self {
            methods: MethodKind::ALL.to_vec(),
            alpha: None,
            lambda: None,
        }
    }
}

/// Evaluates every requested method.
///
/// Without explicit weights the weighted method runs twice: all ones, and
/// `αᵢ = |aᵢ|` when every interior coefficient is nonzero. Errors from
/// explicit parameters are reported as inapplicable rows.
pub fn all_bounds(p: &QPolynomial, presets: &BoundPresets) -> Result<Vec<BoundResult>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let p = p.normalize_monic()?;
    let mut out = Vec::new();
    let or_row = |r: Result<BoundResult>, method: BoundMethod| match r {
        Ok(r) => r,
        Err(e) => BoundResult::inapplicable(method, &e.to_string()),
    };
    for &kind in &presets.methods {
        match kind {
            MethodKind::Cauchy => out.push(cauchy_bound(&p)?),
            MethodKind::Weighted => match &presets.alpha {
                Some(alpha) => out.push(or_row(
                    weighted_bound(&p, alpha),
                    BoundMethod::Weighted(alpha.clone()),
                )),
                None => {
                    out.push(weighted_bound(&p, &vec![1.0; n - 1])?);
                    let interior: Vec<f64> = p.coeffs()[1..n].iter().map(|a| a.norm()).collect();
                    if n > 1 && interior.iter().all(|&v| v > 0.0) {
                        out.push(weighted_bound(&p, &interior)?);
                    }
                }
            },
            MethodKind::Ratio => out.push(ratio_bound(&p)?),
            MethodKind::Fujiwara => {
                let lambda = presets.lambda.clone().unwrap_or_else(|| dyadic_weights(n));
                out.push(or_row(fujiwara_bound(&p, &lambda), BoundMethod::Fujiwara(lambda)));
            }
            MethodKind::LacunarySum => out.push(lacunary_sum_bound(&p)?),
            MethodKind::LacunaryMax => out.push(lacunary_max_bound(&p)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion as Q;
    use CoefficientSide::{Left, Right};

    const I: Q = Q::I;
    const J: Q = Q::J;
    const K: Q = Q::K;
    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn example(side: CoefficientSide) -> QPolynomial {
        QPolynomial::monic(&[K, -(I + J)], side)
    }

    fn lacunary(n: usize, r: usize, a: f64, side: CoefficientSide) -> QPolynomial {
        let mut lower = vec![Q::ZERO; n];
        lower[0] = Q::real(a);
        lower[r] = Q::real(a);
        QPolynomial::monic(&lower, side)
    }

    #[test]
    fn cauchy_examples() {
        let r = cauchy_bound(&example(Left)).unwrap();
        assert!((r.radius - (1.0 + SQRT2)).abs() < 1e-12);
        assert!(r.note.contains("mirrored"));
        assert_eq!(cauchy_bound(&QPolynomial::monomial(5, Right)).unwrap().radius, 1.0);
        assert_eq!(cauchy_bound(&QPolynomial::monic(&[Q::real(5.0)], Right)).unwrap().radius, 6.0);
        let nm = QPolynomial::new(vec![Q::ONE, Q::real(2.0)], Right).unwrap();
        assert!(matches!(cauchy_bound(&nm), Err(Error::NotMonic)));
    }

    #[test]
    fn weighted_examples() {
        let g = example(Right);
        let r = weighted_bound(&g, &[1.0]).unwrap();
        assert!((r.radius - (1.0 + SQRT2)).abs() < 1e-12);
        assert!(r.note.is_empty());
        for alpha in [0.3, 1.0, 4.0] {
            let r = weighted_bound(&QPolynomial::monomial(2, Right), &[alpha]).unwrap();
            assert_eq!(r.radius, alpha);
        }
        assert!(weighted_bound(&g, &[0.0]).is_err());
        assert!(weighted_bound(&g, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn ratio_examples() {
        let r = ratio_bound(&example(Right)).unwrap();
        assert!((r.radius - 2.0 * SQRT2).abs() < 1e-12);
        let r = ratio_bound(&QPolynomial::monic(&[K, Q::ZERO], Right)).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.note, "zero interior coefficient");
        let a0 = Q::new(1.0, 2.0, 2.0, 0.0);
        let r = ratio_bound(&QPolynomial::monic(&[a0], Right)).unwrap();
        assert_eq!(r.radius, 6.0);
        assert!(r.note.contains("degree one"));
    }

    #[test]
    fn fujiwara_examples() {
        let r = fujiwara_bound(&example(Left), &[0.5, 0.5]).unwrap();
        assert!((r.radius - 2.0 * SQRT2).abs() < 1e-12);
        let a0 = Q::new(1.0, 2.0, 2.0, 0.0);
        assert_eq!(fujiwara_bound(&QPolynomial::monic(&[a0], Left), &[1.0]).unwrap().radius, 3.0);
        let r = fujiwara_bound(&QPolynomial::monomial(4, Left), &dyadic_weights(4)).unwrap();
        assert_eq!(r.radius, 0.0);
        assert!(fujiwara_bound(&example(Left), &[0.5, 0.4]).is_err());
        assert!(fujiwara_bound(&example(Left), &[1.5, -0.5]).is_err());
    }

    #[test]
    fn dyadic_weights_sum_to_one() {
        for n in 1..=64 {
            let w = dyadic_weights(n);
            assert_eq!(w.len(), n);
            assert_eq!(w.iter().sum::<f64>(), 1.0);
        }
        assert_eq!(dyadic_weights(3), vec![0.5, 0.25, 0.25]);
    }

    #[test]
    fn lacunary_sum_examples() {
        let p = QPolynomial::monic(&[J, I, Q::ZERO], Left);
        assert_eq!(lacunary_sum_bound(&p).unwrap().radius, 2.0);
        let r = lacunary_sum_bound(&QPolynomial::monomial(3, Left)).unwrap();
        assert_eq!(r.radius, 0.0);
        assert!(r.applicable);
        let r = lacunary_sum_bound(&lacunary(3, 1, 8.0, Left)).unwrap();
        assert!((r.radius - 6.0).abs() < 1e-12);
    }

    #[test]
    fn lacunary_max_examples() {
        let h = QPolynomial::monic(&[J, I, Q::ZERO], Right);
        assert_eq!(lacunary_max_bound(&h).unwrap().radius, 2.0);
        assert!((lacunary_max_bound(&lacunary(3, 1, 8.0, Right)).unwrap().radius - 6.0).abs() < 1e-12);
        assert!((lacunary_max_bound(&lacunary(5, 1, 32.0, Right)).unwrap().radius - 6.0).abs() < 1e-12);
        assert!((lacunary_sum_bound(&lacunary(5, 1, 32.0, Right)).unwrap().radius - 6.0).abs() < 1e-12);
        let mut lower = vec![Q::ZERO; 5];
        lower[2] = Q::real(32.0);
        let h = QPolynomial::monic(&lower, Right);
        assert!((lacunary_max_bound(&h).unwrap().radius - 10.0).abs() < 1e-12);
        assert!((lacunary_sum_bound(&h).unwrap().radius - 14.0).abs() < 1e-12);
    }

    #[test]
    fn lacunary_r_zero_is_flagged() {
        let p = QPolynomial::monic(&[Q::real(16.0), Q::ZERO, Q::ZERO, Q::ZERO], Left);
        let r = lacunary_sum_bound(&p).unwrap();
        assert_eq!(r.radius, 2.0);
        assert!(r.note.contains("r = 0"));
    }

    #[test]
    fn all_bounds_rows() {
        let rows = all_bounds(&example(Left), &BoundPresets::default()).unwrap();
        for name in ["cauchy", "fujiwara", "lacunary-sum"] {
            assert!(rows.iter().any(|r| r.method.name() == name));
        }
        // two weighted presets: all ones and |a_i|
        assert_eq!(rows.iter().filter(|r| r.method.name() == "weighted").count(), 2);

        let rows = all_bounds(&QPolynomial::monomial(4, Left), &BoundPresets::default()).unwrap();
        for r in &rows {
            assert!(r.radius == 0.0 || r.radius == 1.0, "{r:?}");
        }
        let ratio = rows.iter().find(|r| r.method == BoundMethod::Ratio).unwrap();
        assert!(!ratio.applicable);
    }

    #[test]
    fn explicit_bad_weights_become_inapplicable_rows() {
        let presets = BoundPresets {
            methods: vec![MethodKind::Fujiwara, MethodKind::Weighted],
            alpha: Some(vec![1.0, 2.0]),
            lambda: Some(vec![0.9, 0.9]),
        };
        let rows = all_bounds(&example(Left), &presets).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| !r.applicable));
    }

    #[test]
    fn method_names_roundtrip() {
        for m in MethodKind::ALL {
            assert_eq!(MethodKind::parse(m.name()), Some(m));
        }
        assert_eq!(MethodKind::parse("nope"), None);
    }
}
