//! Error type shared across the crate.

use core::fmt;

/// Everything that can go wrong in this library.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An MZV index must start with a part `>= 2` to converge.
    InadmissibleIndex { m: u32 },
    /// The power of `-ln x` in the log integral must be `>= 1`; at `l = 0`
    /// the composition sum is empty and the integral diverges for `k >= 1`.
    ZeroLogExponent,
    /// A series exponential requires vanishing constant and linear parts.
    SeriesLowOrderTerms,
    /// The requested coefficient lies beyond the series truncation cap.
    SeriesCap { needed: u32, cap: u32 },
    /// `zeta(s)` is only defined here for integer `s >= 2`.
    ZetaArgument { s: u32 },
    /// Nested sums need at least one term: the limit must satisfy `N >= k + 2`.
    SumLimitTooSmall { limit: u64, k: u32 },
    /// Quadrature refinement hit the level cap before reaching the target.
    QuadratureNoConvergence { levels: u32, est_error: f64 },
    /// The integrand returned a non-finite value at a quadrature node.
    QuadratureNonFinite { t: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InadmissibleIndex { m } => {
                write!(f, "inadmissible index: leading part {m} must be >= 2")
            }
            Error::ZeroLogExponent => {
                write!(f, "the power of -ln(x) must be >= 1")
            }
            Error::SeriesLowOrderTerms => {
                write!(f, "series exponential needs zero constant and linear terms")
            }
            Error::SeriesCap { needed, cap } => {
                write!(f, "coefficient of degree {needed} exceeds series cap {cap}")
            }
            Error::ZetaArgument { s } => {
                write!(f, "zeta({s}) not supported: argument must be >= 2")
            }
            Error::SumLimitTooSmall { limit, k } => {
                write!(f, "sum limit {limit} too small for depth k = {k} (need N >= k + 2)")
            }
            Error::QuadratureNoConvergence { levels, est_error } => {
                write!(
                    f,
                    "quadrature did not converge after {levels} levels (est. error ~{est_error:.3e})"
                )
            }
            Error::QuadratureNonFinite { t } => {
                write!(f, "integrand non-finite at quadrature node t = {t}")
            }
        }
    }
}

impl core::error::Error for Error {}
