//! Exact-arithmetic laboratory for elliptically weighted alternating
//! permutations.
//!
//! The crate enumerates alternating permutations under several peak
//! statistics, implements the split-at-maximum bijection, builds the
//! Entringer triangle and the secant-tangent numbers by several independent
//! routes, expands Jacobi elliptic functions and J-fraction convergents as
//! exact series, and turns every identity under test into a structured
//! [`ClaimVerdict`](verify::ClaimVerdict).
//!
//! Polynomial, series, Jacobi and quadrature code is generic over the
//! [`Scalar`] trait. The aliases below pin the exact rational instantiation
//! used by the verification harness.

pub mod andre;
pub mod bijection;
pub mod cfrac;
pub mod entringer;
mod error;
pub mod exact;
pub mod jacobi;
pub mod perm;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rat = num_rational::BigRational;
/// Polynomial in one weight variable over [`Rat`].
pub type WPoly = exact::Poly<Rat>;
/// Truncated EGF with [`WPoly`] coefficients.
pub type EgfSeries = exact::Egf<Rat>;
/// Truncated ordinary power series with [`WPoly`] coefficients.
pub type OgfSeries = exact::Ogf<Rat>;
/// Jacobi Taylor coefficients as exact polynomials in `m = k^2`.
pub type JacobiTaylor = jacobi::JacobiCoeffs<Rat>;

/// Floating-point instantiations, used for numeric cross-checks.
pub type FloatPoly = exact::Poly<f64>;
pub type FloatEgf = exact::Egf<f64>;
