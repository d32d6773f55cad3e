//! Truncated formal power series over the integers in `{q, x, a, b, t}`.
//!
//! The ring is graded by the exponent of `q` only: a [`TruncatedSeries`] is
//! valid modulo `q^(T+1)` and the other four variables are never truncated.
//! Coefficients are arbitrary-precision integers, so every comparison made
//! by the verification harness is exact.

mod monomial;
mod pochhammer;
mod polynomial;
mod truncated;

pub use monomial::{Monomial, Var, VAR_COUNT};
pub use pochhammer::{
    pochhammer_finite, pochhammer_infinite, poch_finite, poch_infinite, poch_polynomial,
    q_binomial, q_binomial_top, Sign,
};
pub use polynomial::Polynomial;
pub(crate) use truncated::first_difference;
pub use truncated::{TruncatedSeries, Witness};

use thiserror::Error;

/// Errors raised by ring operations. All of these are usage errors: the
/// operations themselves are total on their stated domains.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    TruncMismatch(u32, u32),
    #[error("series is not invertible: its q^0 coefficient must be exactly 1")]
    NotInvertible,
    #[error("infinite product does not truncate: base and step need a positive q-exponent")]
    DivergentProduct,
    #[error("coefficient of q^{requested} is beyond the truncation order {trunc}")]
    CoeffOutOfRange { requested: u32, trunc: u32 },
    #[error("cannot raise a truncation order from {from} to {to}")]
    TruncationRaise { from: u32, to: u32 },
}
