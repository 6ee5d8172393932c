//! Error types shared across the crate.

use thiserror::Error;

/// Configuration validation failures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("lattice period M must be at least 2, got {0}")]
    PeriodTooSmall(i64),
    #[error("deformation parameter tau must lie strictly inside (0, 1), got {0}")]
    TauOutOfRange(f64),
}

/// Failures in lattice-operator computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("function has unbounded support; a finite support window is required")]
    UnboundedSupport,
    #[error("support window [{lo}, {hi}] exceeds the requested bound {bound}")]
    SupportExceedsBound { lo: i64, hi: i64, bound: i64 },
    #[error("window too small to close the lower set of the solve order: index {missing} is required but unavailable")]
    WindowTooSmall { missing: i64 },
    #[error("triangular structure violated at row {row}, column {col}")]
    TriangularityViolated { row: i64, col: i64 },
}

/// Failures in spectral computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("mode index {m} out of range 0..={max}")]
    ModeOutOfRange { m: i64, max: i64 },
    #[error("root solve for mode {m} did not reach residual {target:e} (got {achieved:e})")]
    RootNotConverged { m: i64, target: f64, achieved: f64 },
    #[error("c-function has a pole at xi = {xi} (multiple of pi)")]
    CFunctionPole { xi: f64 },
    #[error("internal consistency check failed: {what} (deviation {dev:e})")]
    Inconsistent { what: String, dev: f64 },
}

/// Failures in the finite transform layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("signal length {got} does not match M+1 = {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("lattice index must be nonnegative, got {0}")]
    NegativeIndex(i64),
    #[error("quadrature did not converge below {target:e} within {max_points} points")]
    QuadratureNotConverged { target: f64, max_points: usize },
}
