use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("polynomial sides differ: cannot combine a left and a right polynomial")]
    MixedSides,
    #[error("leading coefficient is zero")]
    ZeroLeading,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree ≥ 1 required")]
    DegreeZero,
    #[error("companion layout {kind} does not match a {side} polynomial")]
    ConventionMismatch { kind: &'static str, side: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("imaginary residue {0:e} in companion polynomial exceeds tolerance")]
    ImaginaryResidue(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
