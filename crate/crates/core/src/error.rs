//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while validating parameters or evaluating a design.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters outside the supported domain (n >= 1, a >= 2, r > 0 and finite).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// Multiplicative order is only defined for units, i.e. gcd(a, n) = 1.
    #[error("multiplicative order of {a} mod {n} is undefined: gcd({a}, {n}) != 1")]
    OrderUndefined { a: u64, n: u64 },
    /// Primitive roots are only looked up modulo a prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The closed-form sine sum has a pole where sin(theta/2) vanishes.
    #[error("partial sine sum is undefined at theta = {0} (multiple of 2*pi)")]
    ThetaAtPole(f64),
    /// Render style failed validation.
    #[error("invalid render style: {0}")]
    BadStyle(String),
}
