use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the formula it feeds.
    #[error("invalid {name}: {reason}")]
    Domain { name: &'static str, reason: String },

    #[error("resonant trapping undefined: detuning must be non-zero")]
    ResonantTrapping,

    #[error("{n_atoms} atoms exceeds the dense-representation cap of {max}")]
    TooManyAtoms { n_atoms: usize, max: usize },

    #[error("time step {dt:e} s is too coarse; the trap period requires dt < {max_dt:e} s")]
    TimestepTooLarge { dt: f64, max_dt: f64 },

    #[error(
        "required peak acceleration {required:e} m/s^2 exceeds a_max = {available:e} m/s^2; \
         minimal feasible round-trip time is {min_tau:e} s"
    )]
    Unreachable { required: f64, available: f64, min_tau: f64 },

    #[error("csv: {0}")]
    Csv(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain { name, reason: reason.into() }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

/// Rejects NaN, infinities and negative values.
pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::domain(name, format!("must be finite and >= 0, got {value}")));
    }
    Ok(())
}

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::domain(name, format!("must be finite and > 0, got {value}")));
    }
    Ok(())
}
