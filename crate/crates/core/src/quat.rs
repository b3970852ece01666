//! Floating-point quaternions over `f64`.
//!
//! `q = w + x i + y j + z k` with the Hamilton rules `i² = j² = k² = ijk = -1`.
//! Every operation is a pure value function; non-finite components are a
//! contract violation and are caught by debug assertions.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A quaternion `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Similarity (conjugacy) class `{p⁻¹ q p}` of a quaternion, identified by
/// its real part and the norm of its imaginary part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimilarityClass {
    pub real_part: f64,
    pub imag_norm: f64,
}

impl SimilarityClass {
    pub fn new(real_part: f64, imag_norm: f64) -> Self {
        debug_assert!(imag_norm >= 0.0, "negative imaginary norm");
        Self {
            real_part,
            imag_norm,
        }
    }

    /// Norm shared by every member of the class.
    pub fn norm(&self) -> f64 {
        self.real_part.hypot(self.imag_norm)
    }

    /// The class member `real_part + imag_norm * u` for a unit pure `u`.
    pub fn member(&self, u: Quaternion) -> Quaternion {
        Quaternion::real(self.real_part) + u * self.imag_norm
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.real_part - other.real_part).abs() <= tol
            && (self.imag_norm - other.imag_norm).abs() <= tol
    }
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Pure quaternion `x i + y j + z k`.
    pub const fn pure(x: f64, y: f64, z: f64) -> Self {
        Self::new(0.0, x, y, z)
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn is_real(&self) -> bool {
        self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// Imaginary part as a pure quaternion.
    pub fn imag(&self) -> Self {
        Self::pure(self.x, self.y, self.z)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean norm `|q| = sqrt(q q̄)`, computed without intermediate overflow.
    pub fn norm(&self) -> f64 {
        self.w.hypot(self.x).hypot(self.y.hypot(self.z))
    }

    pub fn imag_norm(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// Four-dimensional Euclidean inner product.
    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// `q⁻¹ = q̄ / |q|²`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of the zero quaternion"));
        }
        // Rescale first so that |q|² neither overflows nor underflows.
        let s = self.w.abs().max(self.x.abs()).max(self.y.abs()).max(self.z.abs());
        let q = *self / s;
        Ok(q.conj() / (q.norm_sqr() * s))
    }

    pub fn similarity_invariants(&self) -> SimilarityClass {
        SimilarityClass::new(self.w, self.imag_norm())
    }

    /// Componentwise comparison with an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.w - other.w).abs() <= tol
            && (self.x - other.x).abs() <= tol
            && (self.y - other.y).abs() <= tol
            && (self.z - other.z).abs() <= tol
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// `self^k` by iterated right multiplication.
    pub fn powi(&self, k: usize) -> Self {
        (0..k).fold(Self::ONE, |acc, _| acc * *self)
    }
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.to_array()
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Self::real(w)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert!(self.is_finite() && rhs.is_finite(), "non-finite operand");
        let (a, b) = (self, rhs);
        Self::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

/// Renders as `a+bi+cj+dk`, with signs absorbed (`1-2i+0j+3k`).
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(f: &mut fmt::Formatter<'_>, v: f64, unit: &str) -> fmt::Result {
            // -0.0 renders as 0
            let v = if v == 0.0 { 0.0 } else { v };
            if v.is_sign_negative() {
                write!(f, "-{}{unit}", -v)
            } else {
                write!(f, "+{v}{unit}")
            }
        }
        let w = if self.w == 0.0 { 0.0 } else { self.w };
        write!(f, "{w}")?;
        part(f, self.x, "i")?;
        part(f, self.y, "j")?;
        part(f, self.z, "k")
    }
}

/// Parses a sum of signed terms, each a real number optionally followed by
/// `i`, `j` or `k`. A bare unit (`i`, `-k`) has coefficient one. Repeated
/// units accumulate. Whitespace is ignored.
impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse(format!("empty quaternion literal {s:?}")));
        }
        let mut q = Quaternion::ZERO;
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                pos += 1;
            }
            // Scan to the next sign that is not an exponent sign.
            while pos < bytes.len() {
                let c = bytes[pos];
                if (c == b'+' || c == b'-') && pos > start && !matches!(bytes[pos - 1], b'e' | b'E') {
                    break;
                }
                pos += 1;
            }
            let term = &text[start..pos];
            let (num, unit) = match term.chars().last() {
                Some(u @ ('i' | 'j' | 'k')) => (&term[..term.len() - 1], Some(u)),
                _ => (term, None),
            };
            let value = match num {
                "" | "+" => 1.0,
                "-" => -1.0,
                _ => num
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad quaternion term {term:?} in {s:?}")))?,
            };
            if !value.is_finite() {
                return Err(Error::Parse(format!("non-finite component in {s:?}")));
            }
            match unit {
                None => q.w += value,
                Some('i') => q.x += value,
                Some('j') => q.y += value,
                Some(_) => q.z += value,
            }
        }
        Ok(q)
    }
}
