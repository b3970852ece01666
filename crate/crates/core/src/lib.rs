//! Zero localization for unilateral quaternionic polynomials.
//!
//! The crate builds companion matrices of monic polynomials with
//! quaternion coefficients, bounds their left spectra with Geršgorin balls,
//! and derives closed-form inclusion radii (Cauchy, weighted, ratio,
//! Fujiwara and two lacunary bounds). An independent zero finder
//! ([`roots`]) checks every radius, and [`harness`] sweeps seeded random
//! polynomials through all of it.
//!
//! ```
//! use quatloc::{bounds, roots, CoefficientSide, QPolynomial, Quaternion};
//!
//! // q² - (i + j) q + k = (q - i)(q - j)
//! let f = QPolynomial::monic(
//!     &[Quaternion::K, -(Quaternion::I + Quaternion::J)],
//!     CoefficientSide::Left,
//! );
//! let zeros = roots::find_zeros(&f).unwrap();
//! assert_eq!(zeros.len(), 1);
//! let radius = bounds::cauchy_bound(&f).unwrap().radius;
//! assert!(zeros[0].norm() <= radius);
//! ```

pub mod bounds;
pub mod companion;
pub mod error;
pub mod gershgorin;
pub mod harness;
pub mod poly;
pub mod quat;
pub mod roots;

pub use companion::{build_companion, CompanionKind, PresetTransform, QMatrix};
pub use error::{Error, Result};
pub use gershgorin::{gershgorin_balls, Ball, BallUnion, LeftEigenvalue};
pub use poly::{CoefficientSide, LacunaryProfile, QPolynomial};
pub use quat::{Quaternion, SimilarityClass};
pub use roots::{ZeroKind, ZeroRecord};
