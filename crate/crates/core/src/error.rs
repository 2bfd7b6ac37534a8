use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("root of unity {root} is not admissible for {series} (needs {required})")]
    WrongParity {
        series: &'static str,
        root: String,
        required: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature failed: estimated error {estimate:e} above target {target:e} after {panels} panels")]
    QuadratureFailure {
        estimate: f64,
        target: f64,
        panels: usize,
    },

    #[error("jet orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("Euler table holds E_0..E_{have}, need E_{need}")]
    TableTooSmall { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
