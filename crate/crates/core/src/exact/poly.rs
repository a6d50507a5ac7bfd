use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::scalar::Scalar;

/// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
///
/// The variable is context dependent: the peak weight `k` for permutation
/// counts, the modulus square `m = k^2` for Jacobi coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Binary polynomial arithmetic selected at runtime.
pub fn poly_arith<T: Scalar>(a: &Poly<T>, b: &Poly<T>, op: PolyOp) -> Poly<T> {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * w^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The polynomial `w`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Self::new(ints.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `w^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Multiply by `w^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `p(w) -> p(w^2)`: rewrites a polynomial in `m` as one in `k` with `m = k^2`.
    pub fn substitute_square(&self) -> Self {
        let mut coeffs = vec![T::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| f(self.coeff(i), other.coeff(i))).collect())
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Self) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar + Signed + fmt::Display> Poly<T> {
    /// Render with an explicit variable name, e.g. `1 + 14m + m^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mag_text = mag.to_string();
            let needs_star = mag_text.contains('/') || mag_text.contains('.');
            match i {
                0 => out.push_str(&mag_text),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_text);
                        if needs_star {
                            out.push('*');
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("w"))
    }
}

impl<T: Scalar + Signed + fmt::Display> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn binomial_square() {
        let a = p(&[1, 1]);
        assert_eq!(poly_arith(&a, &a, PolyOp::Mul), p(&[1, 2, 1]));
    }

    #[test]
    fn zero_absorbs() {
        let a = p(&[3, -1, 4]);
        assert!(poly_arith(&a, &Poly::zero(), PolyOp::Mul).is_zero());
        assert!(poly_arith(&Poly::zero(), &a, PolyOp::Mul).is_zero());
    }

    #[test]
    fn self_cancellation_trims() {
        let a = p(&[1, 14, 1]);
        let d = poly_arith(&a, &a, PolyOp::Sub);
        assert!(d.is_zero());
        assert!(d.coeffs().is_empty());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn mul_degree_adds() {
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 5, 0, -1]);
        assert_eq!((&a * &b).degree(), Some(5));
    }

    #[test]
    fn horner() {
        let a = p(&[1, 14, 1]);
        assert_eq!(a.eval(&Rat::from_integer(0.into())), Rat::from_integer(1.into()));
        assert_eq!(a.eval(&Rat::from_integer(1.into())), Rat::from_integer(16.into()));
        let half = Rat::new(1.into(), 2.into());
        assert_eq!(Poly::<Rat>::var().eval(&half), half);
    }

    #[test]
    fn square_substitution() {
        assert_eq!(p(&[1, 14, 1]).substitute_square(), p(&[1, 0, 14, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 14, 1]).display_in("m"), "1 + 14m + m^2");
        assert_eq!(p(&[-1, -1]).display_in("m"), "-1 - m");
        assert_eq!(p(&[0, 2]).to_string(), "2w");
        assert_eq!(Poly::<Rat>::zero().to_string(), "0");
        let q = Poly::new(vec![Rat::new(1.into(), 3.into()), Rat::new((-1).into(), 2.into())]);
        assert_eq!(q.to_string(), "1/3 - 1/2*w");
    }

    #[test]
    fn works_over_floats() {
        let a = Poly::<f64>::from_ints(&[1, 1]);
        assert_eq!((&a * &a).coeffs(), &[1.0, 2.0, 1.0]);
        assert_eq!(a.eval(&0.5), 1.5);
    }
}
