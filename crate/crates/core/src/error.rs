use thiserror::Error;

/// Errors raised by the engine. Configuration and domain problems are caller
/// mistakes; the remaining variants signal genuine numerical failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown unit tag `{0}`")]
    UnknownUnit(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error(
        "quadrature did not converge: estimate {estimate:e} with error {achieved:e} \
         (requested {requested:e})"
    )]
    Quadrature {
        estimate: f64,
        achieved: f64,
        requested: f64,
    },
    #[error("no sign change on bracket [{lo:e}, {hi:e}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("half-height crossing lies outside the sampled range on the {side} side")]
    RangeTooNarrow { side: &'static str },
    #[error("half-height width undefined at t = 0")]
    UndefinedWidth,
    #[error("spectral measure mass {total} deviates from 1 beyond tolerance {tol}")]
    Normalization { total: f64, tol: f64 },
    #[error("unitarity violated: |w + p - 1| = {gap:e} exceeds {tol:e}")]
    Consistency { gap: f64, tol: f64 },
    #[error("discrete level degenerate with a continuum support edge")]
    EdgeDegenerate,
}

impl Error {
    /// True for failures of the numerical machinery itself, as opposed to
    /// invalid configuration or out-of-domain arguments.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Quadrature { .. }
                | Error::Normalization { .. }
                | Error::Consistency { .. }
                | Error::EdgeDegenerate
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
