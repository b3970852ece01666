//! Independent zero finder for unilateral quaternionic polynomials.
//!
//! For a monic left polynomial `p(q) = Σ aₖ qᵏ`, the product `F = p̄ · p`
//! (with `p̄` the polynomial of conjugated coefficients) has real
//! coefficients, so its zeros in ℍ are whole similarity classes, one per
//! complex root `α + βi` of `F` viewed as a real polynomial. Every zero of
//! `p` lies in one of these classes.
//!
//! Each class is then searched directly: on `q = α + βu` with `u` a unit
//! pure quaternion, `qᵏ = cₖ + dₖ u` where `cₖ + dₖ i = (α + βi)ᵏ`, so
//! `p(q) = P + Q u` with `P = Σ aₖ cₖ`, `Q = Σ aₖ dₖ`. If `Q ≠ 0` the only
//! candidate is `u = -Q⁻¹ P`; if `P = Q = 0` the whole class is a zero.
//!
//! Right polynomials are handled through [`QPolynomial::mirror`].

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{CoefficientSide, QPolynomial};
use crate::quat::{Quaternion, SimilarityClass};

/// Relative distance under which two complex roots are one cluster.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Acceptance window for `u` being a unit pure quaternion before projection.
pub const UNIT_PURE_TOL: f64 = 1e-6;
const MAX_ITERATIONS: usize = 1000;
const ANGLE_OFFSET: f64 = 0.4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZeroKind {
    Isolated(Quaternion),
    /// Every member of the class is a zero.
    Spherical(SimilarityClass),
    /// The class is a root of the companion polynomial but no zero could be
    /// recovered from it. Every zero in it would still have norm
    /// `class.norm()`.
    Unresolved(SimilarityClass),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroRecord {
    pub kind: ZeroKind,
    /// `|p(z)|` for isolated zeros; the largest sampled value for spherical ones.
    pub residual: f64,
    /// Multiplicity of the class as a root of the companion polynomial,
    /// halved for real classes (a real zero always enters `F` squared).
    pub class_multiplicity: usize,
    pub note: Option<String>,
}

impl ZeroRecord {
    pub fn class(&self) -> SimilarityClass {
        match self.kind {
            ZeroKind::Isolated(q) => q.similarity_invariants(),
            ZeroKind::Spherical(c) | ZeroKind::Unresolved(c) => c,
        }
    }

    /// Norm of the zero, or of every member of a spherical/unresolved class.
    pub fn norm(&self) -> f64 {
        match self.kind {
            ZeroKind::Isolated(q) => q.norm(),
            ZeroKind::Spherical(c) | ZeroKind::Unresolved(c) => c.norm(),
        }
    }

    pub fn isolated(&self) -> Option<Quaternion> {
        match self.kind {
            ZeroKind::Isolated(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_resolved(&self) -> bool {
        !matches!(self.kind, ZeroKind::Unresolved(_))
    }

    fn sort_key(&self) -> (f64, f64, [f64; 4]) {
        let c = self.class();
        let q = self.isolated().map_or([0.0; 4], Quaternion::to_array);
        (c.real_part, c.imag_norm, q)
    }
}

/// Line format: `isolated w x y z residual`, `spherical re imnorm residual`,
/// `unresolved re imnorm residual`.
impl fmt::Display for ZeroRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clean = |v: f64| if v == 0.0 { 0.0 } else { v };
        match self.kind {
            ZeroKind::Isolated(q) => write!(
                f,
                "isolated {} {} {} {} {:e}",
                clean(q.w),
                clean(q.x),
                clean(q.y),
                clean(q.z),
                self.residual
            ),
            ZeroKind::Spherical(c) => write!(
                f,
                "spherical {} {} {:e}",
                clean(c.real_part),
                c.imag_norm,
                self.residual
            ),
            ZeroKind::Unresolved(c) => write!(
                f,
                "unresolved {} {} {:e}",
                clean(c.real_part),
                c.imag_norm,
                self.residual
            ),
        }
    }
}

/// Real polynomial, coefficients ascending by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::InvalidParameter("empty coefficient list".into())),
            Some(0.0) => Err(Error::ZeroLeading),
            Some(_) => Ok(Self { coeffs }),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Value at `z` and a rounding-error bound for it.
    fn eval_with_bound(&self, z: Complex64) -> (Complex64, f64) {
        let az = z.norm();
        let mut v = Complex64::new(0.0, 0.0);
        let mut mag = 0.0;
        for &c in self.coeffs.iter().rev() {
            v = v * z + c;
            mag = mag * az + c.abs();
        }
        (v, mag * 8.0 * f64::EPSILON * self.coeffs.len() as f64)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_with_bound(z).0
    }

    pub fn derivative(&self) -> Option<Self> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect();
        Some(Self { coeffs })
    }
}

/// `F = p̄ · p` for a monic left polynomial: `b_m = Σ_k conj(aₖ) a_{m-k}`.
pub fn companion_polynomial(p: &QPolynomial) -> Result<RealPolynomial> {
    if p.side() != CoefficientSide::Left {
        return Err(Error::ConventionMismatch {
            kind: "companion polynomial",
            side: "right",
        });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let a = p.coeffs();
    let n = p.degree();
    let mut out = Vec::with_capacity(2 * n + 1);
    let mut worst = 0.0f64;
    for m in 0..=2 * n {
        let lo = m.saturating_sub(n);
        let hi = m.min(n);
        let mut b = Quaternion::ZERO;
        let mut mag = 0.0;
        for k in lo..=hi {
            b += a[k].conj() * a[m - k];
            mag += a[k].norm() * a[m - k].norm();
        }
        worst = worst.max(b.imag_norm() / (1.0 + mag));
        out.push(b.w);
    }
    if worst > 1e-12 {
        return Err(Error::ImaginaryResidue(worst));
    }
    RealPolynomial::new(out)
}

/// A complex root of a real polynomial, upper half plane representative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootClass {
    pub re: f64,
    /// Non-negative.
    pub im: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRoots {
    pub roots: Vec<RootClass>,
    pub converged: bool,
}

/// All complex roots by Aberth–Ehrlich iteration, conjugate pairs merged.
///
/// Starting points sit on the circle of radius `1 + max|bₘ/b_N|` at evenly
/// spaced angles with a fixed offset, so runs are reproducible. Roots within
/// [`CLUSTER_TOL`] (relative) are merged into one entry with multiplicity;
/// each merged root is refined by Newton steps on the derivative of order
/// `multiplicity - 1`.
pub fn complex_roots(poly: &RealPolynomial) -> Result<ComplexRoots> {
    let n = poly.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let lead = poly.coeffs[n];
    let monic = RealPolynomial {
        coeffs: poly.coeffs.iter().map(|c| c / lead).collect(),
    };
    let deriv = monic.derivative().expect("degree >= 1");

    // Exact zero roots first: they are common (qⁿ) and slow Aberth down.
    let zeros_at_origin = monic.coeffs.iter().take_while(|&&c| c == 0.0).count();
    let reduced = RealPolynomial {
        coeffs: monic.coeffs[zeros_at_origin..].to_vec(),
    };
    let (mut found, converged) = if reduced.degree() > 0 {
        aberth(&reduced)
    } else {
        (Vec::new(), true)
    };
    let mut radii = inclusion_radii(&reduced, &found);
    found.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros_at_origin));
    radii.extend(std::iter::repeat_n(0.0, zeros_at_origin));

    let mut roots = Vec::new();
    for (center, count, spread) in cluster(&found, &radii) {
        let tol = (CLUSTER_TOL * (1.0 + center.norm())).max(spread);
        if center.im < -tol {
            continue;
        }
        let mut z = if center.im.abs() <= tol {
            Complex64::new(center.re, 0.0)
        } else {
            center
        };
        z = refine(&monic, &deriv, z, count);
        if z.im.abs() <= tol {
            z.im = 0.0;
        }
        roots.push(RootClass {
            re: z.re,
            im: z.im.abs(),
            multiplicity: count,
        });
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ComplexRoots { roots, converged })
}

fn aberth(poly: &RealPolynomial) -> (Vec<Complex64>, bool) {
    let n = poly.degree();
    let deriv = poly.derivative().expect("degree >= 1");
    let radius = 1.0 + poly.coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + ANGLE_OFFSET))
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (f, bound) = poly.eval_with_bound(z[k]);
            if f.norm() <= bound {
                done[k] = true;
                continue;
            }
            let ratio = f / deriv.eval(z[k]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() <= 2.0 * f64::EPSILON * z[k].norm() {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return (z, true);
        }
    }
    (z, false)
}

/// Inclusion radii `N·|F(zₖ)/Πⱼ≠ₖ(zₖ - zⱼ)|`, doubled for safety. Each
/// connected union of these discs holds as many roots as it has centers.
fn inclusion_radii(poly: &RealPolynomial, z: &[Complex64]) -> Vec<f64> {
    let n = z.len() as f64;
    (0..z.len())
        .map(|k| {
            let denom: Complex64 = (0..z.len())
                .filter(|&j| j != k)
                .map(|j| z[k] - z[j])
                .product();
            let w = (poly.eval(z[k]) / denom).norm();
            if w.is_finite() {
                2.0 * n * w
            } else {
                0.0
            }
        })
        .collect()
}

/// Single-linkage clustering: two roots join when they lie within
/// [`CLUSTER_TOL`] (relative) or their inclusion discs overlap. Returns the
/// cluster mean, size and spread (largest member distance plus radius).
fn cluster(roots: &[Complex64], radii: &[f64]) -> Vec<(Complex64, usize, f64)> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1.0 + roots[i].norm().max(roots[j].norm());
            let gap = (roots[i] - roots[j]).norm();
            if gap <= CLUSTER_TOL * scale || gap <= radii[i] + radii[j] {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                if a != b {
                    label[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        if find(&mut label, i) != i {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&j| find(&mut label, j) == i).collect();
        let mean = members.iter().map(|&j| roots[j]).sum::<Complex64>() / members.len() as f64;
        let spread = members
            .iter()
            .map(|&j| (roots[j] - mean).norm() + radii[j])
            .fold(0.0, f64::max);
        out.push((mean, members.len(), spread));
    }
    out
}

/// Newton on the derivative of order `multiplicity - 1`, where the root is
/// simple. Steps are kept only while the residual improves.
fn refine(poly: &RealPolynomial, first: &RealPolynomial, z: Complex64, multiplicity: usize) -> Complex64 {
    let mut target = poly.clone();
    let mut slope = first.clone();
    for _ in 1..multiplicity {
        target = slope.clone();
        match slope.derivative() {
            Some(d) => slope = d,
            None => return z,
        }
    }
    let mut z = z;
    let mut best = target.eval(z).norm();
    for _ in 0..8 {
        if best == 0.0 {
            break;
        }
        let step = target.eval(z) / slope.eval(z);
        if !step.is_finite() {
            break;
        }
        let next = z - step;
        let value = target.eval(next).norm();
        if value >= best {
            break;
        }
        z = next;
        best = value;
    }
    z
}

/// Deterministic unit pure directions used to validate spherical classes.
pub fn sample_directions() -> [Quaternion; 8] {
    let s = 1.0 / 3f64.sqrt();
    let t = 1.0 / 2f64.sqrt();
    [
        Quaternion::I,
        Quaternion::J,
        Quaternion::K,
        Quaternion::pure(s, s, s),
        Quaternion::pure(-s, s, -s),
        Quaternion::pure(t, -t, 0.0),
        Quaternion::pure(0.0, t, t),
        Quaternion::pure(-0.6, 0.0, 0.8),
    ]
}

/// Recovers the zeros of a monic left polynomial inside each class.
pub fn recover_zeros(p: &QPolynomial, classes: &ComplexRoots) -> Vec<ZeroRecord> {
    let scale = p.scale();
    let mut out = Vec::new();
    for root in &classes.roots {
        let class = SimilarityClass::new(root.re, root.im);
        let mut record = if root.im == 0.0 {
            real_class(p, root.re, scale)
        } else {
            complex_class(p, class, scale)
        };
        record.class_multiplicity = if root.im == 0.0 {
            root.multiplicity.div_ceil(2)
        } else {
            root.multiplicity
        };
        if !classes.converged && record.note.is_none() {
            record.note = Some("root iteration hit its cap".into());
        }
        out.push(record);
    }
    out
}

fn residual_limit(scale: f64) -> f64 {
    1e-8 * scale
}

fn real_class(p: &QPolynomial, alpha: f64, scale: f64) -> ZeroRecord {
    let z = Quaternion::real(alpha);
    let residual = p.evaluate(z).norm();
    let note = (residual > residual_limit(scale))
        .then(|| format!("real class residual {residual:e} above limit"));
    let kind = if note.is_some() {
        ZeroKind::Unresolved(SimilarityClass::new(alpha, 0.0))
    } else {
        ZeroKind::Isolated(z)
    };
    ZeroRecord {
        kind,
        residual,
        class_multiplicity: 1,
        note,
    }
}

fn complex_class(p: &QPolynomial, class: SimilarityClass, scale: f64) -> ZeroRecord {
    let base = Complex64::new(class.real_part, class.imag_norm);
    let mut power = Complex64::new(1.0, 0.0);
    let (mut big_p, mut big_q) = (Quaternion::ZERO, Quaternion::ZERO);
    let mut magnitude = 0.0;
    for &a in p.coeffs() {
        big_p += a * power.re;
        big_q += a * power.im;
        magnitude += a.norm() * power.norm();
        power *= base;
    }
    let unresolved = |note: String, residual: f64| ZeroRecord {
        kind: ZeroKind::Unresolved(class),
        residual,
        class_multiplicity: 1,
        note: Some(note),
    };
    let degenerate = 1e-9 * magnitude.max(1.0);
    if big_q.norm() <= degenerate {
        if big_p.norm() > degenerate {
            return unresolved("class does not contain a zero".into(), big_p.norm());
        }
        let residual = sample_directions()
            .iter()
            .map(|&u| p.evaluate(class.member(u)).norm())
            .fold(0.0, f64::max);
        let note = (residual > residual_limit(scale))
            .then(|| format!("spherical samples residual {residual:e} above limit"));
        return ZeroRecord {
            kind: ZeroKind::Spherical(class),
            residual,
            class_multiplicity: 1,
            note,
        };
    }
    let u = -(big_q.inv().expect("nonzero") * big_p);
    let off_unit = (u.norm() - 1.0).abs();
    if off_unit > UNIT_PURE_TOL || u.w.abs() > UNIT_PURE_TOL {
        let residual = if u.imag_norm() > 0.0 {
            p.evaluate(class.member(u.imag() / u.imag_norm())).norm()
        } else {
            big_p.norm()
        };
        return unresolved(
            format!("recovered direction is not unit pure (|u|-1 = {off_unit:e}, Re u = {:e})", u.w),
            residual,
        );
    }
    let direction = u.imag() / u.imag_norm();
    let zero = class.member(direction);
    let residual = p.evaluate(zero).norm();
    let note = (residual > residual_limit(scale)).then(|| format!("residual {residual:e} above limit"));
    ZeroRecord {
        kind: ZeroKind::Isolated(zero),
        residual,
        class_multiplicity: 1,
        note,
    }
}

/// Complete zero set of a polynomial of either side.
pub fn find_zeros(p: &QPolynomial) -> Result<Vec<ZeroRecord>> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let monic = p.normalize_monic()?;
    let mut records = match monic.side() {
        CoefficientSide::Left => find_left(&monic)?,
        CoefficientSide::Right => {
            let mirror = monic.mirror();
            let mut recs = find_left(&mirror)?;
            for r in &mut recs {
                if let ZeroKind::Isolated(q) = r.kind {
                    r.kind = ZeroKind::Isolated(q.conj());
                    r.residual = monic.evaluate(q.conj()).norm();
                }
            }
            recs
        }
    };
    sort_records(&mut records);
    Ok(records)
}

fn find_left(p: &QPolynomial) -> Result<Vec<ZeroRecord>> {
    let f = companion_polynomial(p)?;
    let classes = complex_roots(&f)?;
    Ok(recover_zeros(p, &classes))
}

fn sort_records(records: &mut [ZeroRecord]) {
    records.sort_by(|a, b| {
        let (ka, kb) = (a.sort_key(), b.sort_key());
        ka.0.total_cmp(&kb.0)
            .then(ka.1.total_cmp(&kb.1))
            .then_with(|| {
                ka.2.iter()
                    .zip(kb.2.iter())
                    .map(|(x, y)| x.total_cmp(y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
}

/// Closed-form zeros of the left quadratic `q² + b q + c`.
///
/// Real coefficients reduce to the real quadratic formula (a negative
/// discriminant gives a spherical class). Otherwise, after shifting
/// `q = y - Re(b)/2` so that `b` is pure, any zero `y` with `Re y = t` and
/// `|y|² = n` obeys `y² = 2t y - n`, hence `(2t + b) y = n - c`. Matching
/// the real part and norm of `(2t + b)⁻¹(n - c)` against `t` and `n` gives
/// two real equations; eliminating `n` leaves the cubic
/// `S³ + (2β + 4c₀)S² + (β² + 4c₀β - 4γ)S - 4K² = 0` in `S = 4t²`, with
/// `β = |b|²`, `γ = |Im c|²`, `K = b·Im c`. The `t = 0` branch needs `K = 0`
/// and solves a quadratic in `n` instead.
pub fn solve_quadratic(b: Quaternion, c: Quaternion) -> Vec<ZeroRecord> {
    let poly = QPolynomial::monic(&[c, b], CoefficientSide::Left);
    if b.is_real() && c.is_real() {
        return real_quadratic(&poly, b.w, c.w);
    }
    let shift = b.w / 2.0;
    let bp = b.imag();
    let cp = c - Quaternion::real(shift * shift) - bp * shift;
    let (c0, cv) = (cp.w, cp.imag());
    let beta = bp.norm_sqr();
    let gamma = cv.norm_sqr();
    let kk = bp.dot(&cv);

    let mut candidates = Vec::new();
    let cubic = [-4.0 * kk * kk, beta * beta + 4.0 * c0 * beta - 4.0 * gamma, 2.0 * beta + 4.0 * c0, 1.0];
    for s in real_cubic_roots(cubic) {
        if s <= 0.0 {
            continue;
        }
        let t_abs = s.sqrt() / 2.0;
        for t in [t_abs, -t_abs] {
            let n = c0 + (s + beta) / 2.0 + kk / (2.0 * t);
            if let Ok(inv) = (bp + Quaternion::real(2.0 * t)).inv() {
                candidates.push(inv * (Quaternion::real(n) - cp));
            }
        }
    }
    if !bp.is_zero() {
        // t = 0: m² - β m + γ - c₀ β = 0 with m = n - c₀.
        let disc = beta * beta - 4.0 * (gamma - c0 * beta);
        let inv = bp.inv().expect("nonzero");
        for m in real_quadratic_roots(beta, disc) {
            let n = c0 + m;
            if n >= 0.0 {
                candidates.push(inv * (Quaternion::real(n) - cp));
            }
        }
    }

    // Near a double root of the cubic several candidates land on the same
    // zero; keep the one with the smallest residual.
    let mut zeros: Vec<(Quaternion, f64)> = Vec::new();
    for y in candidates {
        let q = y - Quaternion::real(shift);
        let residual = poly.evaluate(q).norm();
        let magnitude = 1.0 + q.norm_sqr() + b.norm() * q.norm() + c.norm();
        if residual > 1e-8 * magnitude {
            continue;
        }
        match zeros.iter_mut().find(|(z, _)| (*z - q).norm() <= 1e-8 * (1.0 + q.norm())) {
            Some(slot) if residual < slot.1 => *slot = (q, residual),
            Some(_) => {}
            None => zeros.push((q, residual)),
        }
    }
    let multiplicity = if zeros.len() == 1 { 2 } else { 1 };
    let mut records: Vec<ZeroRecord> = zeros
        .into_iter()
        .map(|(q, residual)| ZeroRecord {
            kind: ZeroKind::Isolated(q),
            residual,
            class_multiplicity: multiplicity,
            note: None,
        })
        .collect();
    sort_records(&mut records);
    records
}

fn real_quadratic(poly: &QPolynomial, b: f64, c: f64) -> Vec<ZeroRecord> {
    let half = -b / 2.0;
    let disc = half * half - c;
    let isolated = |x: f64, mult: usize| ZeroRecord {
        kind: ZeroKind::Isolated(Quaternion::real(x)),
        residual: poly.evaluate(Quaternion::real(x)).norm(),
        class_multiplicity: mult,
        note: None,
    };
    let mut records = match disc.partial_cmp(&0.0) {
        Some(Ordering::Greater) => {
            // Stable form: the larger-magnitude root first, the other via c / x₁.
            let x1 = half + half.signum() * disc.sqrt();
            let x1 = if x1 == 0.0 { disc.sqrt() } else { x1 };
            let x2 = if x1 != 0.0 { c / x1 } else { -x1 };
            vec![isolated(x1, 1), isolated(x2, 1)]
        }
        Some(Ordering::Equal) => vec![isolated(half, 2)],
        _ => {
            let class = SimilarityClass::new(half, (-disc).sqrt());
            let residual = sample_directions()
                .iter()
                .map(|&u| poly.evaluate(class.member(u)).norm())
                .fold(0.0, f64::max);
            vec![ZeroRecord {
                kind: ZeroKind::Spherical(class),
                residual,
                class_multiplicity: 2,
                note: None,
            }]
        }
    };
    sort_records(&mut records);
    records
}

/// Roots of `m² - β m + (const)` given its discriminant.
fn real_quadratic_roots(beta: f64, disc: f64) -> Vec<f64> {
    if disc < 0.0 {
        // Allow a hair of negative rounding for a double root.
        if disc > -1e-12 * (1.0 + beta * beta) {
            return vec![beta / 2.0];
        }
        return Vec::new();
    }
    let r = disc.sqrt();
    vec![(beta + r) / 2.0, (beta - r) / 2.0]
}

/// Real roots of `c₀ + c₁x + c₂x² + x³`, Newton-polished.
fn real_cubic_roots(c: [f64; 4]) -> Vec<f64> {
    let (a, b, d) = (c[2], c[1], c[0]);
    let eval = |x: f64| ((x + a) * x + b) * x + d;
    let slope = |x: f64| (3.0 * x + 2.0 * a) * x + b;
    // Depressed cubic x = y - a/3: y³ + py + q.
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let mut ys = Vec::new();
    if p == 0.0 && q == 0.0 {
        ys.push(0.0);
    } else if disc > 0.0 {
        let s = disc.sqrt();
        ys.push((-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt());
    } else {
        let r = (-p / 3.0).sqrt();
        let cos_arg = if r == 0.0 { 0.0 } else { (-q / (2.0 * r * r * r)).clamp(-1.0, 1.0) };
        let phi = cos_arg.acos();
        for k in 0..3 {
            ys.push(2.0 * r * ((phi - 2.0 * PI * k as f64) / 3.0).cos());
        }
    }
    ys.into_iter()
        .map(|y| {
            let mut x = y - a / 3.0;
            for _ in 0..6 {
                let s = slope(x);
                if s == 0.0 {
                    break;
                }
                let next = x - eval(x) / s;
                if !next.is_finite() || eval(next).abs() >= eval(x).abs() {
                    break;
                }
                x = next;
            }
            x
        })
        .collect()
}
