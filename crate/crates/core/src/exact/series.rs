use serde::Serialize;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::{binomial_row, Scalar};

/// Truncated exponential generating function `sum_{i<=order} c_i u^i / i!`.
///
/// Coefficients are stored without the `1/i!` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Egf<T> {
    coeffs: Vec<Poly<T>>,
}

/// Truncated ordinary power series `sum_{i<=order} c_i u^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ogf<T> {
    coeffs: Vec<Poly<T>>,
}

/// Outcome of comparing two truncated series coefficient by coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    /// Smallest index where the coefficients differ.
    DiffersAt(usize),
    /// No difference up to and including this order.
    AgreesToOrder(usize),
}

impl Agreement {
    /// Number of leading coefficients that agree.
    pub fn agreeing_terms(self) -> usize {
        match self {
            Agreement::DiffersAt(n) => n,
            Agreement::AgreesToOrder(u) => u + 1,
        }
    }

    /// True when every coefficient with index `<= n` agrees.
    pub fn agrees_through(self, n: usize) -> bool {
        self.agreeing_terms() > n
    }
}

impl std::fmt::Display for Agreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Agreement::DiffersAt(n) => write!(f, "differs at {n}"),
            Agreement::AgreesToOrder(u) => write!(f, "agrees to order {u}"),
        }
    }
}

fn check_orders(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::OrderMismatch { left, right });
    }
    Ok(())
}

fn first_difference<T: Scalar>(a: &[Poly<T>], b: &[Poly<T>]) -> Agreement {
    match a.iter().zip(b).position(|(x, y)| x != y) {
        Some(n) => Agreement::DiffersAt(n),
        None => Agreement::AgreesToOrder(a.len() - 1),
    }
}

macro_rules! common_series_impl {
    ($ty:ident) => {
        impl<T: Scalar> $ty<T> {
            /// Build from `order + 1` coefficients; an empty input means order 0 zero series.
            pub fn new(mut coeffs: Vec<Poly<T>>) -> Self {
                if coeffs.is_empty() {
                    coeffs.push(Poly::zero());
                }
                $ty { coeffs }
            }

            pub fn from_scalars(values: Vec<T>) -> Self {
                Self::new(values.into_iter().map(Poly::constant).collect())
            }

            pub fn zero(order: usize) -> Self {
                $ty { coeffs: vec![Poly::zero(); order + 1] }
            }

            /// Multiplicative identity.
            pub fn one(order: usize) -> Self {
                let mut s = Self::zero(order);
                s.coeffs[0] = Poly::one();
                s
            }

            pub fn order(&self) -> usize {
                self.coeffs.len() - 1
            }

            pub fn coeffs(&self) -> &[Poly<T>] {
                &self.coeffs
            }

            pub fn coeff(&self, i: usize) -> &Poly<T> {
                &self.coeffs[i]
            }

            pub fn set_coeff(&mut self, i: usize, c: Poly<T>) {
                self.coeffs[i] = c;
            }

            /// Drop coefficients above `order`.
            pub fn truncate(&self, order: usize) -> Self {
                assert!(order <= self.order(), "cannot extend a truncated series");
                $ty { coeffs: self.coeffs[..=order].to_vec() }
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                check_orders(self.order(), other.order())?;
                Ok($ty { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                check_orders(self.order(), other.order())?;
                Ok($ty { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
            }

            /// Multiply every coefficient by a weight polynomial.
            pub fn scale(&self, p: &Poly<T>) -> Self {
                $ty { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
            }

            /// Evaluate every coefficient at a fixed weight value.
            pub fn specialize(&self, x: &T) -> Self {
                $ty { coeffs: self.coeffs.iter().map(|c| Poly::constant(c.eval(x))).collect() }
            }

            /// First differing coefficient against `other`.
            pub fn agreement_order(&self, other: &Self) -> Result<Agreement> {
                check_orders(self.order(), other.order())?;
                Ok(first_difference(&self.coeffs, &other.coeffs))
            }
        }
    };
}

common_series_impl!(Egf);
common_series_impl!(Ogf);

impl<T: Scalar> Egf<T> {
    /// `exp(u)`: every coefficient is 1.
    pub fn exp(order: usize) -> Self {
        Egf { coeffs: vec![Poly::one(); order + 1] }
    }

    /// Binomial convolution `sum_i C(n,i) f_i g_{n-i}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        let coeffs = (0..=self.order())
            .map(|n| {
                let binom = binomial_row::<T>(n);
                let mut acc = Poly::zero();
                for (i, b) in binom.iter().enumerate() {
                    let (f, g) = (&self.coeffs[i], &other.coeffs[n - i]);
                    if f.is_zero() || g.is_zero() {
                        continue;
                    }
                    acc = &acc + &(f * g).scale(b);
                }
                acc
            })
            .collect();
        Ok(Egf { coeffs })
    }

    /// Derivative: shifts coefficients down by one and lowers the order.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Egf { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Ordinary coefficients `c_n / n!`.
    pub fn to_ogf(&self) -> Ogf<T> {
        let mut fact = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * T::from_int(n as i64);
                }
                c.scale(&(T::one() / fact.clone()))
            })
            .collect();
        Ogf { coeffs }
    }
}

impl<T: Scalar> Ogf<T> {
    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        let coeffs = (0..=self.order())
            .map(|n| {
                (0..=n).fold(Poly::zero(), |acc, i| {
                    let (f, g) = (&self.coeffs[i], &other.coeffs[n - i]);
                    if f.is_zero() || g.is_zero() {
                        acc
                    } else {
                        &acc + &(f * g)
                    }
                })
            })
            .collect();
        Ok(Ogf { coeffs })
    }

    /// Multiply by `u^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for i in k..=self.order() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplicative inverse. The constant coefficient must be a nonzero
    /// constant polynomial; otherwise `None`.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_constant() || c0.is_zero() {
            return None;
        }
        let inv0 = T::one() / c0.coeff(0);
        let mut out: Vec<Poly<T>> = Vec::with_capacity(self.coeffs.len());
        out.push(Poly::constant(inv0.clone()));
        for n in 1..=self.order() {
            let mut acc = Poly::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() && !out[n - i].is_zero() {
                    acc = &acc + &(a * &out[n - i]);
                }
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Some(Ogf { coeffs: out })
    }

    /// Factorial-weighted coefficients `n! c_n`.
    pub fn to_egf(&self) -> Egf<T> {
        let mut fact = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * T::from_int(n as i64);
                }
                c.scale(&fact)
            })
            .collect();
        Egf { coeffs }
    }
}

/// Free-function form of [`Egf::mul`].
pub fn series_mul<T: Scalar>(f: &Egf<T>, g: &Egf<T>) -> Result<Egf<T>> {
    f.mul(g)
}

/// Free-function form of [`Egf::derive`].
pub fn series_derive<T: Scalar>(f: &Egf<T>) -> Result<Egf<T>> {
    f.derive()
}

/// Free-function form of [`Egf::agreement_order`].
pub fn series_agreement_order<T: Scalar>(f: &Egf<T>, g: &Egf<T>) -> Result<Agreement> {
    f.agreement_order(g)
}
