//! Exact polynomial and truncated-series arithmetic.
//!
//! Everything is generic over [`Scalar`](crate::Scalar); the crate root
//! fixes the rational instantiations used throughout ([`WPoly`](crate::WPoly),
//! [`EgfSeries`](crate::EgfSeries), [`OgfSeries`](crate::OgfSeries)).

mod poly;
mod series;

pub use poly::{poly_arith, Poly, PolyOp};
pub use series::{series_agreement_order, series_derive, series_mul, Agreement, Egf, Ogf};

use num_bigint::BigInt;
use num_traits::One;

use crate::Rat;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Shorthand for `num / den`, normalized.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// True when `r` is in lowest terms with a positive denominator.
pub fn is_canonical(r: &Rat) -> bool {
    use num_integer::Integer;
    use num_traits::Signed;
    r.denom().is_positive() && r.numer().abs().gcd(r.denom()).is_one()
}
