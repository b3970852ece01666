//! Geršgorin balls for the left eigenvalues of a quaternion matrix.
//!
//! If `A x = λ x` and `μ` indexes the largest `|x_μ|`, then
//! `(λ - a_μμ) x_μ = Σ_{ν≠μ} a_μν x_ν`, so `|λ - a_μμ| ≤ Σ_{ν≠μ} |a_μν|`.
//! Row sums only; a column-sum variant is not provided.

use std::fmt;

use crate::companion::QMatrix;
use crate::quat::Quaternion;
use crate::roots::{solve_quadratic, ZeroKind};

/// Closed ball `{q : |q - center| ≤ radius}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball {
    pub center: Quaternion,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Quaternion, radius: f64) -> Self {
        debug_assert!(radius >= 0.0 && center.is_finite());
        Self { center, radius }
    }

    pub fn contains(&self, q: Quaternion, tol: f64) -> bool {
        (q - self.center).norm() <= self.radius + tol
    }

    /// Signed distance outside the ball (negative inside).
    pub fn excess(&self, q: Quaternion) -> f64 {
        (q - self.center).norm() - self.radius
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "center={} radius={}", self.center, self.radius)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BallUnion {
    balls: Vec<Ball>,
}

impl BallUnion {
    pub fn new(balls: Vec<Ball>) -> Self {
        assert!(!balls.is_empty(), "a ball union needs at least one ball");
        Self { balls }
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn push(&mut self, ball: Ball) {
        self.balls.push(ball);
    }

    pub fn contains(&self, q: Quaternion, tol: f64) -> bool {
        self.balls.iter().any(|b| b.contains(q, tol))
    }

    /// Smallest excess over the balls; `≤ 0` means `q` is covered.
    pub fn excess(&self, q: Quaternion) -> f64 {
        self.balls.iter().map(|b| b.excess(q)).fold(f64::INFINITY, f64::min)
    }

    /// Radius of an origin-centered ball containing the whole union.
    pub fn enclosing_radius(&self) -> f64 {
        self.balls
            .iter()
            .map(|b| b.center.norm() + b.radius)
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for BallUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.balls {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

pub fn gershgorin_balls(a: &QMatrix) -> BallUnion {
    let n = a.dim();
    let balls = (0..n)
        .map(|mu| {
            let row = a.row(mu);
            let radius = row
                .iter()
                .enumerate()
                .filter(|&(nu, _)| nu != mu)
                .map(|(_, q)| q.norm())
                .sum();
            Ball::new(row[mu], radius)
        })
        .collect();
    BallUnion::new(balls)
}

/// Left eigenvalue of a 2×2 matrix: a point, or a 2-sphere
/// `{center + scale·u : u unit pure}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LeftEigenvalue {
    Point(Quaternion),
    Sphere { center: Quaternion, scale: Quaternion },
}

impl LeftEigenvalue {
    /// The point, or the sphere member along the unit pure direction `u`.
    pub fn sample(&self, u: Quaternion) -> Quaternion {
        match *self {
            Self::Point(q) => q,
            Self::Sphere { center, scale } => center + scale * u,
        }
    }
}

/// All left eigenvalues of a 2×2 matrix `[[a, b], [c, d]]`.
///
/// With `b ≠ 0` an eigenvector can be scaled to `(1, t)`, giving
/// `λ = a + b t` where `t² + b⁻¹(a - d) t - b⁻¹c = 0`. With `b = 0` the
/// matrix is lower triangular and the eigenvalues are `a` and `d`.
///
/// # Panics
/// If `m` is not 2×2.
pub fn left_eigenvalues_2x2(m: &QMatrix) -> Vec<LeftEigenvalue> {
    assert_eq!(m.dim(), 2, "left_eigenvalues_2x2 needs a 2x2 matrix");
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    if b.is_zero() {
        let mut out = vec![LeftEigenvalue::Point(a)];
        if d != a {
            out.push(LeftEigenvalue::Point(d));
        }
        return out;
    }
    let binv = b.inv().expect("nonzero");
    solve_quadratic(binv * (a - d), -(binv * c))
        .into_iter()
        .filter_map(|r| match r.kind {
            ZeroKind::Isolated(t) => Some(LeftEigenvalue::Point(a + b * t)),
            ZeroKind::Spherical(class) => Some(LeftEigenvalue::Sphere {
                center: a + b * class.real_part,
                scale: b * class.imag_norm,
            }),
            ZeroKind::Unresolved(_) => None,
        })
        .collect()
}
