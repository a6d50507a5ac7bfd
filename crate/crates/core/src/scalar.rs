//! The coefficient field shared by polynomials, series and the Jacobi engine.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};
use std::ops::Neg;

/// A field-like scalar: exact rationals in practice, `f32`/`f64` for quick
/// numeric cross-checks.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    /// Lift a small integer into the scalar type.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type represents small integers")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

/// Row `n` of Pascal's triangle computed by additions in `T`.
pub(crate) fn binomial_row<T: Scalar>(n: usize) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(T::one());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(T::one());
        row = next;
    }
    row
}
