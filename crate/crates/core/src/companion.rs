//! Companion matrices of monic polynomials and positive diagonal similarities.
//!
//! The left spectrum of each layout coincides with the zero set of the
//! polynomial it is built from, and is unchanged by `D⁻¹ C D` for any
//! positive real diagonal `D`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{CoefficientSide, QPolynomial};
use crate::quat::Quaternion;

/// Dense square quaternion matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Quaternion::ZERO; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix must be square and non-empty".into()));
        }
        let entries: Vec<Quaternion> = rows.into_iter().flatten().collect();
        if entries.iter().any(|q| !q.is_finite()) {
            return Err(Error::InvalidParameter("non-finite matrix entry".into()));
        }
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Quaternion {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Quaternion) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Quaternion] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `D⁻¹ A D` for `D = diag(d)`: entry `(i, j)` becomes `aᵢⱼ dⱼ / dᵢ`.
    /// Real scales commute with the quaternion entries.
    pub fn diagonal_similarity(&self, d: &[f64]) -> Result<Self> {
        if d.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "diagonal has {} entries for a {}x{} matrix",
                d.len(),
                self.n,
                self.n
            )));
        }
        if let Some(bad) = d.iter().find(|&&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidParameter(format!("non-positive scale {bad}")));
        }
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.set(i, j, a * (d[j] / d[i]));
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `A x`.
    pub fn apply(&self, x: &[Quaternion]) -> Vec<Quaternion> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Quaternion::ZERO, |acc, (&a, &v)| acc + a * v)
            })
            .collect()
    }
}

/// Aligned text grid, one row per line.
impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|q| q.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for row in cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// The four companion layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompanionKind {
    /// Left coefficients, superdiagonal ones, bottom row `-a₀ … -aₙ₋₁`.
    Cf,
    /// Right coefficients, subdiagonal ones, last column `-a₀ … -aₙ₋₁`.
    Cg,
    /// Lacunary left: bottom row `-a₀ … -a_r, 0 … 0`.
    Cp,
    /// Lacunary right: last column `-a₀ … -a_r, 0 … 0`.
    Ch,
}

impl CompanionKind {
    pub fn side(self) -> CoefficientSide {
        match self {
            Self::Cf | Self::Cp => CoefficientSide::Left,
            Self::Cg | Self::Ch => CoefficientSide::Right,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Cf => "CF",
            Self::Cg => "CG",
            Self::Cp => "CP",
            Self::Ch => "CH",
        }
    }

    /// Standard (non-lacunary) layout for a coefficient side.
    pub fn for_side(side: CoefficientSide) -> Self {
        match side {
            CoefficientSide::Left => Self::Cf,
            CoefficientSide::Right => Self::Cg,
        }
    }
}

/// Companion matrix of a monic polynomial.
///
/// The lacunary layouts write the coefficients up to the lacunary index and
/// zeros above it; those are exactly zero by definition of the index, so CP
/// and CH agree entrywise with CF and CG.
pub fn build_companion(p: &QPolynomial, kind: CompanionKind) -> Result<QMatrix> {
    if p.side() != kind.side() {
        return Err(Error::ConventionMismatch {
            kind: kind.name(),
            side: p.side().as_str(),
        });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = p.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let cutoff = match kind {
        CompanionKind::Cf | CompanionKind::Cg => n,
        CompanionKind::Cp | CompanionKind::Ch => p.lacunary_profile().r().map_or(0, |r| r + 1),
    };
    let mut m = QMatrix::zeros(n);
    for (idx, &a) in p.coeffs()[..cutoff].iter().enumerate() {
        match kind {
            CompanionKind::Cf | CompanionKind::Cp => m.set(n - 1, idx, -a),
            CompanionKind::Cg | CompanionKind::Ch => m.set(idx, n - 1, -a),
        }
    }
    for i in 0..n - 1 {
        match kind {
            CompanionKind::Cf | CompanionKind::Cp => m.set(i, i + 1, Quaternion::ONE),
            CompanionKind::Cg | CompanionKind::Ch => m.set(i + 1, i, Quaternion::ONE),
        }
    }
    Ok(m)
}

/// The diagonal scalings used to turn a companion matrix into each bound.
#[derive(Clone, Debug, PartialEq)]
pub enum PresetTransform {
    /// `diag(α₁, …, αₙ₋₁, 1)`
    Weighted(Vec<f64>),
    /// `diag(1/lⁿ⁻¹, …, 1/l, 1)` at dimension `n`
    Geometric { n: usize, l: f64 },
    /// `diag(1/λⁿ⁻¹, …, 1/λ, 1)` at dimension `n`
    LacunaryP { n: usize, lambda: f64 },
    /// `diag(λⁿ⁻¹, …, λ, 1)` at dimension `n`
    LacunaryH { n: usize, lambda: f64 },
}

impl PresetTransform {
    pub fn diagonal(&self) -> Result<Vec<f64>> {
        let check = |v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(Error::InvalidParameter(format!("transform parameter {v} must be positive")))
            }
        };
        let powers = |n: usize, base: f64| -> Vec<f64> {
            (0..n).map(|i| base.powi((n - 1 - i) as i32)).collect()
        };
        match *self {
            Self::Weighted(ref alpha) => {
                let mut d = alpha.iter().map(|&a| check(a)).collect::<Result<Vec<_>>>()?;
                d.push(1.0);
                Ok(d)
            }
            Self::Geometric { n, l } => Ok(powers(n, 1.0 / check(l)?)),
            Self::LacunaryP { n, lambda } => Ok(powers(n, 1.0 / check(lambda)?)),
            Self::LacunaryH { n, lambda } => Ok(powers(n, check(lambda)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::CoefficientSide::{Left, Right};
    use crate::quat::Quaternion as Q;

    fn a0() -> Q {
        Q::new(0.5, -1.0, 2.0, 0.25)
    }
    fn a1() -> Q {
        Q::new(-1.5, 0.0, 1.0, -3.0)
    }
    fn rows(m: &QMatrix) -> Vec<Vec<Q>> {
        (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
    }

    #[test]
    fn cg_layout() {
        let g = QPolynomial::monic(&[a0(), a1()], Right);
        let c = build_companion(&g, CompanionKind::Cg).unwrap();
        assert_eq!(rows(&c), vec![vec![Q::ZERO, -a0()], vec![Q::ONE, -a1()]]);
    }

    #[test]
    fn cf_layout() {
        let f = QPolynomial::monic(&[a0(), a1()], Left);
        let c = build_companion(&f, CompanionKind::Cf).unwrap();
        assert_eq!(rows(&c), vec![vec![Q::ZERO, Q::ONE], vec![-a0(), -a1()]]);
    }

    #[test]
    fn cp_layout() {
        let p = QPolynomial::monic(&[a0(), a1(), Q::ZERO], Left);
        let c = build_companion(&p, CompanionKind::Cp).unwrap();
        let z = Q::ZERO;
        assert_eq!(
            rows(&c),
            vec![vec![z, Q::ONE, z], vec![z, z, Q::ONE], vec![-a0(), -a1(), z]]
        );
        assert_eq!(c, build_companion(&p, CompanionKind::Cf).unwrap());
    }

    #[test]
    fn ch_layout_and_monomial() {
        let h = QPolynomial::monic(&[a0(), Q::ZERO, Q::ZERO], Right);
        let c = build_companion(&h, CompanionKind::Ch).unwrap();
        assert_eq!(c.get(0, 2), -a0());
        assert_eq!(c.get(1, 0), Q::ONE);
        assert_eq!(c.get(2, 1), Q::ONE);
        assert_eq!(c.get(2, 2), Q::ZERO);
        let m = QPolynomial::monomial(3, Right);
        let c = build_companion(&m, CompanionKind::Ch).unwrap();
        assert!((0..3).all(|i| c.get(i, 2).is_zero()));
    }

    #[test]
    fn cf_and_cg_are_transposes() {
        let lower = [a0(), a1(), Q::new(3.0, 1.0, -1.0, 0.0)];
        let cf = build_companion(&QPolynomial::monic(&lower, Left), CompanionKind::Cf).unwrap();
        let cg = build_companion(&QPolynomial::monic(&lower, Right), CompanionKind::Cg).unwrap();
        assert_eq!(cf.transpose(), cg);
    }

    #[test]
    fn construction_errors() {
        let f = QPolynomial::monic(&[a0()], Left);
        assert!(matches!(
            build_companion(&f, CompanionKind::Cg),
            Err(Error::ConventionMismatch { .. })
        ));
        let nm = QPolynomial::new(vec![a0(), Q::real(2.0)], Left).unwrap();
        assert!(matches!(build_companion(&nm, CompanionKind::Cf), Err(Error::NotMonic)));
        let c = QPolynomial::new(vec![Q::ONE], Left).unwrap();
        assert!(matches!(build_companion(&c, CompanionKind::Cf), Err(Error::DegreeZero)));
    }

    #[test]
    fn similarity_examples() {
        let g = QPolynomial::monic(&[a0(), a1()], Right);
        let c = build_companion(&g, CompanionKind::Cg).unwrap();
        assert_eq!(c.diagonal_similarity(&[1.0, 1.0]).unwrap(), c);

        let alpha = 2.5;
        let t = c.diagonal_similarity(&[alpha, 1.0]).unwrap();
        assert_eq!(rows(&t), vec![vec![Q::ZERO, -a0() / alpha], vec![Q::real(alpha), -a1()]]);

        let f = QPolynomial::monic(&[a0(), a1()], Left);
        let c = build_companion(&f, CompanionKind::Cf).unwrap();
        let l = 4.0;
        let t = c.diagonal_similarity(&[1.0 / l, 1.0]).unwrap();
        assert_eq!(rows(&t), vec![vec![Q::ZERO, Q::real(l)], vec![-a0() / l, -a1()]]);

        assert!(c.diagonal_similarity(&[1.0]).is_err());
        assert!(c.diagonal_similarity(&[1.0, 0.0]).is_err());
        assert!(c.diagonal_similarity(&[-1.0, 1.0]).is_err());
    }

    #[test]
    fn reciprocal_similarity_is_identity() {
        let c = build_companion(
            &QPolynomial::monic(&[a0(), a1(), Q::new(0.1, 0.2, 0.3, 0.4)], Right),
            CompanionKind::Cg,
        )
        .unwrap();
        let d = [0.3, 7.0, 1.9];
        let back = c
            .diagonal_similarity(&d)
            .unwrap()
            .diagonal_similarity(&d.map(|v| 1.0 / v))
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let (x, y) = (back.get(i, j), c.get(i, j));
                assert!((x - y).norm() <= 1e-15 * (1.0 + y.norm()));
            }
        }
    }

    #[test]
    fn preset_examples() {
        assert_eq!(PresetTransform::Weighted(vec![2.0, 3.0]).diagonal().unwrap(), vec![2.0, 3.0, 1.0]);
        assert_eq!(
            PresetTransform::Geometric { n: 3, l: 2.0 }.diagonal().unwrap(),
            vec![0.25, 0.5, 1.0]
        );
        assert_eq!(
            PresetTransform::LacunaryH { n: 3, lambda: 2.0 }.diagonal().unwrap(),
            vec![4.0, 2.0, 1.0]
        );
        assert_eq!(
            PresetTransform::LacunaryP { n: 3, lambda: 2.0 }.diagonal().unwrap(),
            vec![0.25, 0.5, 1.0]
        );
        assert!(PresetTransform::Weighted(vec![1.0, 0.0]).diagonal().is_err());
        assert!(PresetTransform::Geometric { n: 2, l: -1.0 }.diagonal().is_err());
    }

    #[test]
    fn render_grid() {
        let f = QPolynomial::monic(&[Q::K, -(Q::I + Q::J)], Left);
        let text = build_companion(&f, CompanionKind::Cf).unwrap().to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].len(), lines[1].len());
        assert!(lines[1].contains("0+0i+0j-1k"));
    }
}
