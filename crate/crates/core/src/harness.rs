//! Seeded sweeps over random polynomials: containment verification and
//! bound-tightness benchmarking.
//!
//! Each sample draws from its own generator, derived from the seed and the
//! sample index, so the output does not depend on how samples are spread
//! across threads.

use std::collections::BTreeMap;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bounds::{self, dyadic_weights, BoundResult, MethodKind};
use crate::companion::{build_companion, CompanionKind};
use crate::error::{Error, Result};
use crate::gershgorin::{gershgorin_balls, BallUnion};
use crate::poly::{CoefficientSide, QPolynomial};
use crate::quat::Quaternion;
use crate::roots::{find_zeros, sample_directions, ZeroKind, ZeroRecord};

/// Relative containment tolerance: a zero of norm `m` violates radius `R`
/// when `m > R + CONTAINMENT_TOL * (1 + R)`.
pub const CONTAINMENT_TOL: f64 = 1e-9;
/// Random diagonal similarities applied to each companion matrix.
pub const GERSHGORIN_TRANSFORMS: usize = 3;
pub const MAX_DEGREE: usize = 64;

/// A checked family: one of the bounds, or the Geršgorin union of the
/// companion matrix under random positive diagonal scalings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Bound(MethodKind),
    Gershgorin,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Bound(MethodKind::Cauchy),
        Check::Bound(MethodKind::Weighted),
        Check::Bound(MethodKind::Ratio),
        Check::Bound(MethodKind::Fujiwara),
        Check::Bound(MethodKind::LacunarySum),
        Check::Bound(MethodKind::LacunaryMax),
        Check::Gershgorin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bound(m) => m.name(),
            Check::Gershgorin => "gershgorin",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        if s == "gershgorin" {
            return Some(Check::Gershgorin);
        }
        MethodKind::parse(s).map(Check::Bound)
    }

    /// Parses a comma-separated list; `all` selects everything.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c = Self::parse(part).ok_or_else(|| Error::Config(format!("unknown method {part:?}")))?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        if out.is_empty() {
            return Err(Error::Config("no methods selected".into()));
        }
        Ok(out)
    }

    /// Row labels this check produces per sample.
    fn labels(self) -> Vec<String> {
        match self {
            Check::Gershgorin => (1..=GERSHGORIN_TRANSFORMS).map(|k| format!("gershgorin-{k}")).collect(),
            other => vec![other.name().to_string()],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub degrees: RangeInclusive<usize>,
    pub samples: usize,
    pub coeff_scale: f64,
    pub seed: u64,
    pub methods: Vec<Check>,
    pub output: Option<PathBuf>,
    /// Replace sample 0 by `qⁿ` at the lowest degree.
    pub smoke_monomial: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            degrees: 2..=8,
            samples: 100,
            coeff_scale: 5.0,
            seed: 42,
            methods: Check::ALL.to_vec(),
            output: None,
            smoke_monomial: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = (*self.degrees.start(), *self.degrees.end());
        if lo < 1 || hi > MAX_DEGREE || lo > hi {
            return Err(Error::Config(format!(
                "degree range {lo}..{hi} must lie within 1..{MAX_DEGREE}"
            )));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if !(self.coeff_scale > 0.0 && self.coeff_scale.is_finite()) {
            return Err(Error::Config(format!("scale {} must be positive", self.coeff_scale)));
        }
        if self.methods.is_empty() {
            return Err(Error::Config("no methods selected".into()));
        }
        Ok(())
    }
}

/// Parses `A..B` (or a single degree `A`).
pub fn parse_degree_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Config(format!("bad degree range {s:?}, expected A..B"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

/// Random sample `index`: degree uniform in the range; side alternates with
/// the index; indices `≡ 2, 3 (mod 4)` are lacunary with `r` uniform in
/// `0..=n-2`, the others full (`r = n - 1`). Components are uniform in
/// `[-scale, scale]`; `a_r` is redrawn until nonzero.
pub fn sample_polynomial(config: &BenchConfig, index: usize) -> QPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let side = if index.is_multiple_of(2) {
        CoefficientSide::Left
    } else {
        CoefficientSide::Right
    };
    let n = rng.gen_range(config.degrees.clone());
    if config.smoke_monomial && index == 0 {
        return QPolynomial::monomial(*config.degrees.start(), side);
    }
    let r = if index % 4 >= 2 && n >= 2 {
        rng.gen_range(0..=n - 2)
    } else {
        n - 1
    };
    let s = config.coeff_scale;
    let draw = |rng: &mut ChaCha8Rng| {
        Quaternion::new(
            rng.gen_range(-s..=s),
            rng.gen_range(-s..=s),
            rng.gen_range(-s..=s),
            rng.gen_range(-s..=s),
        )
    };
    let mut lower = vec![Quaternion::ZERO; n];
    for a in lower.iter_mut().take(r + 1) {
        *a = draw(&mut rng);
    }
    while lower[r].is_zero() {
        lower[r] = draw(&mut rng);
    }
    QPolynomial::monic(&lower, side)
}

/// Diagonal for Geršgorin transform `k` of a sample: `exp(U[-2, 2])` entries.
fn random_diagonal(config: &BenchConfig, index: usize, k: usize, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x9e37_79b9_7f4a_7c15);
    rng.set_stream(((index as u64) << 8) | k as u64);
    (0..n).map(|_| rng.gen_range(-2.0f64..=2.0).exp()).collect()
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlackRow {
    pub sample: usize,
    pub degree: usize,
    pub side: String,
    pub method: String,
    /// Empty when the method does not apply to the sample.
    pub radius: Option<f64>,
    #[serde(rename = "maxZeroNorm")]
    pub max_zero_norm: f64,
    /// `radius - maxZeroNorm` for bounds; for Geršgorin unions the enclosing
    /// radius minus `maxZeroNorm`, capped above by minus the worst excess.
    pub slack: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub digest: String,
    pub method: String,
    /// Offending zero, or the farthest sampled member of a spherical class.
    pub zero: Quaternion,
    pub excess: f64,
}

#[derive(Clone, Debug)]
pub struct SampleOutcome {
    pub index: usize,
    pub polynomial: QPolynomial,
    pub zeros: Vec<ZeroRecord>,
    pub rows: Vec<SlackRow>,
    pub failures: Vec<Failure>,
    pub unresolved: usize,
    pub error: Option<String>,
}

fn digest(p: &QPolynomial) -> String {
    let hash = Sha256::digest(p.to_json().as_bytes());
    hash[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Points to test against a ball union: isolated zeros, and the sampled
/// members of spherical classes.
fn test_points(zeros: &[ZeroRecord]) -> Vec<Quaternion> {
    let mut pts = Vec::new();
    for z in zeros {
        match z.kind {
            ZeroKind::Isolated(q) => pts.push(q),
            ZeroKind::Spherical(c) => pts.extend(sample_directions().iter().map(|&u| c.member(u))),
            ZeroKind::Unresolved(_) => {}
        }
    }
    pts
}

pub fn evaluate_sample(config: &BenchConfig, index: usize) -> SampleOutcome {
    let p = sample_polynomial(config, index);
    let mut outcome = SampleOutcome {
        index,
        polynomial: p.clone(),
        zeros: Vec::new(),
        rows: Vec::new(),
        failures: Vec::new(),
        unresolved: 0,
        error: None,
    };
    let zeros = match find_zeros(&p) {
        Ok(z) => z,
        Err(e) => {
            outcome.error = Some(e.to_string());
            return outcome;
        }
    };
    outcome.unresolved = zeros.iter().filter(|z| !z.is_resolved()).count();
    let max_norm = zeros.iter().map(ZeroRecord::norm).fold(0.0, f64::max);
    let farthest = zeros
        .iter()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .map(|z| match z.kind {
            ZeroKind::Isolated(q) => q,
            ZeroKind::Spherical(c) | ZeroKind::Unresolved(c) => c.member(Quaternion::I),
        })
        .unwrap_or(Quaternion::ZERO);
    let n = p.degree();
    let key = digest(&p);
    let row = |method: String, radius: Option<f64>, slack: Option<f64>| SlackRow {
        sample: index,
        degree: n,
        side: p.side().to_string(),
        method,
        radius,
        max_zero_norm: max_norm,
        slack,
    };

    for &check in &config.methods {
        match check {
            Check::Bound(kind) => {
                let result = bound_for(&p, kind);
                let label = check.name().to_string();
                match result {
                    Some(r) if r.applicable => {
                        let slack = r.radius - max_norm;
                        if max_norm > r.radius + CONTAINMENT_TOL * (1.0 + r.radius) {
                            outcome.failures.push(Failure {
                                digest: key.clone(),
                                method: label.clone(),
                                zero: farthest,
                                excess: -slack,
                            });
                        }
                        outcome.rows.push(row(label, Some(r.radius), Some(slack)));
                    }
                    _ => outcome.rows.push(row(label, None, None)),
                }
            }
            Check::Gershgorin => {
                let companion = build_companion(&p, CompanionKind::for_side(p.side()))
                    .expect("sampled polynomials are monic");
                let points = test_points(&zeros);
                for k in 0..GERSHGORIN_TRANSFORMS {
                    let label = format!("gershgorin-{}", k + 1);
                    let d = random_diagonal(config, index, k, n);
                    let union = gershgorin_balls(
                        &companion.diagonal_similarity(&d).expect("positive diagonal"),
                    );
                    let radius = union.enclosing_radius();
                    let (worst, worst_point) = worst_excess(&union, &points);
                    if worst > CONTAINMENT_TOL * (1.0 + radius) {
                        outcome.failures.push(Failure {
                            digest: key.clone(),
                            method: label.clone(),
                            zero: worst_point,
                            excess: worst,
                        });
                    }
                    let slack = (radius - max_norm).min(-worst);
                    outcome.rows.push(row(label, Some(radius), Some(slack)));
                }
            }
        }
    }
    outcome.zeros = zeros;
    outcome
}

fn worst_excess(union: &BallUnion, points: &[Quaternion]) -> (f64, Quaternion) {
    points
        .iter()
        .map(|&q| (union.excess(q), q))
        .fold((f64::NEG_INFINITY, Quaternion::ZERO), |acc, x| if x.0 > acc.0 { x } else { acc })
}

/// The single bound a check reports in sweeps: weighted uses all-ones
/// weights, Fujiwara the dyadic weights.
fn bound_for(p: &QPolynomial, kind: MethodKind) -> Option<BoundResult> {
    let n = p.degree();
    let r = match kind {
        MethodKind::Cauchy => bounds::cauchy_bound(p),
        MethodKind::Weighted => bounds::weighted_bound(p, &vec![1.0; n - 1]),
        MethodKind::Ratio => bounds::ratio_bound(p),
        MethodKind::Fujiwara => bounds::fujiwara_bound(p, &dyadic_weights(n)),
        MethodKind::LacunarySum => bounds::lacunary_sum_bound(p),
        MethodKind::LacunaryMax => bounds::lacunary_max_bound(p),
    };
    r.ok()
}

/// Evaluates every sample, in sample order.
pub fn run_sweep(config: &BenchConfig) -> Result<Vec<SampleOutcome>> {
    config.validate()?;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..config.samples)
            .into_par_iter()
            .map(|i| evaluate_sample(config, i))
            .collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(run_sweep_sequential(config))
    }
}

/// Single-threaded sweep; same output as [`run_sweep`].
pub fn run_sweep_sequential(config: &BenchConfig) -> Vec<SampleOutcome> {
    (0..config.samples).map(|i| evaluate_sample(config, i)).collect()
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct MethodStats {
    pub checked: usize,
    pub violations: usize,
    pub max_slack: f64,
    pub min_slack: f64,
    slacks: Vec<f64>,
}

impl MethodStats {
    fn add(&mut self, slack: f64) {
        if self.checked == 0 {
            self.max_slack = slack;
            self.min_slack = slack;
        }
        self.checked += 1;
        self.max_slack = self.max_slack.max(slack);
        self.min_slack = self.min_slack.min(slack);
        self.slacks.push(slack);
    }

    pub fn mean_slack(&self) -> f64 {
        if self.slacks.is_empty() {
            return 0.0;
        }
        self.slacks.iter().sum::<f64>() / self.slacks.len() as f64
    }

    pub fn median_slack(&self) -> f64 {
        if self.slacks.is_empty() {
            return 0.0;
        }
        let mut s = self.slacks.clone();
        s.sort_by(f64::total_cmp);
        let m = s.len() / 2;
        if s.len() % 2 == 1 {
            s[m]
        } else {
            (s[m - 1] + s[m]) / 2.0
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    /// Keyed by row label (`cauchy`, `gershgorin-2`, …).
    pub per_method: BTreeMap<String, MethodStats>,
    pub failures: Vec<Failure>,
    pub samples: usize,
    pub left_samples: usize,
    pub right_samples: usize,
    /// Sample counts by `(degree, r)`; `r = degree - 1` is a full polynomial.
    pub lacunary_coverage: BTreeMap<(usize, usize), usize>,
    pub unresolved_classes: usize,
    pub errors: Vec<(usize, String)>,
    /// Largest isolated-zero residual relative to `1 + max |aₖ|`.
    pub max_relative_residual: f64,
}

impl VerifyReport {
    pub fn violations(&self) -> usize {
        self.per_method.values().map(|s| s.violations).sum()
    }

    pub fn is_sound(&self) -> bool {
        self.violations() == 0 && self.errors.is_empty()
    }

    pub fn from_outcomes(outcomes: &[SampleOutcome]) -> Self {
        let mut report = VerifyReport {
            samples: outcomes.len(),
            ..Default::default()
        };
        for o in outcomes {
            match o.polynomial.side() {
                CoefficientSide::Left => report.left_samples += 1,
                CoefficientSide::Right => report.right_samples += 1,
            }
            let n = o.polynomial.degree();
            let r = o.polynomial.lacunary_profile().r().unwrap_or(n);
            *report.lacunary_coverage.entry((n, r)).or_default() += 1;
            report.unresolved_classes += o.unresolved;
            if let Some(e) = &o.error {
                report.errors.push((o.index, e.clone()));
            }
            let scale = o.polynomial.scale();
            for z in &o.zeros {
                if z.isolated().is_some() {
                    report.max_relative_residual = report.max_relative_residual.max(z.residual / scale);
                }
            }
            for row in &o.rows {
                let stats = report.per_method.entry(row.method.clone()).or_default();
                if let Some(s) = row.slack {
                    stats.add(s);
                }
            }
            for f in &o.failures {
                report.per_method.entry(f.method.clone()).or_default().violations += 1;
                report.failures.push(f.clone());
            }
        }
        report
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "samples {} (left {}, right {}), unresolved classes {}, max relative residual {:.3e}\n",
            self.samples, self.left_samples, self.right_samples, self.unresolved_classes, self.max_relative_residual
        ));
        s.push_str(&format!(
            "{:<14} {:>8} {:>10} {:>14} {:>14} {:>14}\n",
            "method", "checked", "violations", "min slack", "mean slack", "max slack"
        ));
        for (name, st) in &self.per_method {
            s.push_str(&format!(
                "{:<14} {:>8} {:>10} {:>14.6e} {:>14.6e} {:>14.6e}\n",
                name,
                st.checked,
                st.violations,
                st.min_slack,
                st.mean_slack(),
                st.max_slack
            ));
        }
        for f in &self.failures {
            s.push_str(&format!(
                "VIOLATION poly={} method={} zero={} excess={:e}\n",
                f.digest, f.method, f.zero, f.excess
            ));
        }
        for (i, e) in &self.errors {
            s.push_str(&format!("ERROR sample {i}: {e}\n"));
        }
        s.push_str(&format!("violations: {}\n", self.violations()));
        s
    }
}

/// Expected number of CSV rows for a configuration.
pub fn rows_per_sample(methods: &[Check]) -> usize {
    methods.iter().map(|c| c.labels().len()).sum()
}

pub fn write_csv<W: Write>(outcomes: &[SampleOutcome], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    // Header is written by serde on the first row; write it explicitly so an
    // empty sweep still yields one.
    if outcomes.iter().all(|o| o.rows.is_empty()) {
        w.write_record(["sample", "degree", "side", "method", "radius", "maxZeroNorm", "slack"])?;
    }
    for o in outcomes {
        for row in &o.rows {
            w.serialize(row)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<SlackRow>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

/// Per-method summary: `method,count,mean_slack,median_slack,min_slack`.
pub fn write_summary_csv<W: Write>(report: &VerifyReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method", "count", "mean_slack", "median_slack", "min_slack"])?;
    for (name, st) in &report.per_method {
        w.write_record([
            name.clone(),
            st.checked.to_string(),
            st.mean_slack().to_string(),
            st.median_slack().to_string(),
            st.min_slack.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
