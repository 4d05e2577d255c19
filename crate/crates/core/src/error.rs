use thiserror::Error;

/// Errors surfaced by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// Disorder too strong: the critical-point condition has no root.
    #[error("no critical point exists for sigma = {sigma}")]
    NoCriticalPoint { sigma: f64 },

    /// The averaged-log integral did not converge to tolerance.
    #[error("quadrature failed to converge: estimated error {error:.3e} > tolerance {tol:.3e}")]
    QuadratureFailure { error: f64, tol: f64 },

    /// Smallest singular value of the overlap matrix U fell below threshold,
    /// i.e. the state has (numerically) vanishing overlap with the kink vacuum.
    #[error("singular Bogoliubov overlap: smin/smax = {smin:.3e}/{smax:.3e}")]
    SingularOverlap { smin: f64, smax: f64 },

    /// Mode normalization drifted beyond the abort threshold during integration.
    #[error("mode norm drift {drift:.3e} exceeded limit {limit:.3e} at t = {t}")]
    NormDriftExceeded { drift: f64, limit: f64, t: f64 },

    /// Fewer than the required number of points qualify for the exponential-tail fit.
    #[error("insufficient tail: only {found} qualifying points (need {need})")]
    InsufficientTail { found: usize, need: usize },

    /// A log-log slope fit received a non-positive value.
    #[error("non-positive value in log-space fit: {value}")]
    NonPositiveValue { value: f64 },

    /// Exact-diagonalization size limit exceeded.
    #[error("chain size {n} exceeds the exact-diagonalization limit {max}")]
    SizeExceeded { n: usize, max: usize },

    /// Site/separation indices fall outside the chain.
    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },

    /// Invalid argument combination.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Linear-algebra backend failure.
    #[error("linear algebra error: {0}")]
    Linalg(#[from] ndarray_linalg::error::LinalgError),
}

pub type Result<T> = std::result::Result<T, Error>;
