//! Secant-tangent numbers `A_n` computed along every available route:
//! the quadratic recurrence, enumeration, Bernoulli numbers, two printed
//! Stirling-number formulas, a real integral, and the ratio test.
//!
//! The formula routes evaluate the expressions exactly as written and never
//! correct them; agreement is judged only in [`appendix_a_verdicts`].

mod quadrature;

pub use quadrature::{andre_integral, integrate, Quadrature};

use std::f64::consts::FRAC_PI_2;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{ratio, Egf, Poly};
use crate::perm::{enumerate_class, ClassTag};
use crate::verify::{self, ClaimVerdict};
use crate::Rat;

/// Largest `n` for the float integral route.
pub const MAX_INTEGRAL_N: u32 = 12;

/// Tolerance used when comparing the integral route with `A_n`.
pub const INTEGRAL_TOLERANCE: f64 = 1e-6;

/// Binomial coefficients `C(n, 0..=n)`.
fn binomials(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = &row[k] * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(next);
    }
    row
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// One step of `2 A_{n+1} = sum_k C(n,k) A_k A_{n-k}`, returning `A_{n+1}`.
///
/// Refuses `n = 0`, where the formula would force `A_1 = 1/2`.
pub fn recurrence_step(a: &[BigUint], n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::RecurrenceAtZero);
    }
    if a.len() <= n {
        return Err(Error::OutOfRange { index: n, max: a.len().saturating_sub(1) });
    }
    let sum: BigUint = binomials(n)
        .iter()
        .enumerate()
        .map(|(k, c)| c * &a[k] * &a[n - k])
        .sum();
    let (half, rem) = sum.div_rem(&BigUint::from(2u32));
    assert!(rem.is_zero(), "sum_k C({n},k) A_k A_(n-k) must be even");
    Ok(half)
}

/// The value the recurrence would assign to `A_1` if applied at `n = 0`.
pub fn recurrence_at_zero() -> Rat {
    ratio(1, 2)
}

/// `A_0..=A_N` from the seeds `A_0 = A_1 = 1`.
pub fn a_recurrence(n_max: usize) -> Result<Vec<BigUint>> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("a_recurrence needs N >= 1".into()));
    }
    let mut a = vec![BigUint::one(), BigUint::one()];
    for n in 1..n_max {
        let next = recurrence_step(&a, n)?;
        a.push(next);
    }
    Ok(a)
}

/// `B_0..=B_m` with `B_1 = -1/2`, from `sum_{k<=n} C(n+1,k) B_k = 0`.
pub fn bernoulli(m: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = vec![Rat::one()];
    for n in 1..=m {
        let c = binomials(n + 1);
        let s: Rat = (0..n)
            .map(|k| Rat::from_integer(BigInt::from(c[k].clone())) * &b[k])
            .fold(Rat::zero(), |acc, t| acc + t);
        b.push(-s / Rat::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// `S(n, k)` for `0 <= k <= n <= n_max`.
pub fn stirling2(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut s: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let prev = &s[n - 1];
        let row = (0..=n)
            .map(|k| {
                let keep = if k < n { BigUint::from(k) * &prev[k] } else { BigUint::zero() };
                let grow = if k > 0 { prev[k - 1].clone() } else { BigUint::zero() };
                keep + grow
            })
            .collect();
        s.push(row);
    }
    s
}

/// Precomputed tables up to a common bound.
#[derive(Clone, Debug, PartialEq)]
pub struct AndreTable {
    pub a: Vec<BigUint>,
    pub bernoulli: Vec<Rat>,
    pub stirling2: Vec<Vec<BigUint>>,
}

impl AndreTable {
    pub fn build(n_max: usize) -> Result<Self> {
        Ok(AndreTable {
            a: a_recurrence(n_max)?,
            bernoulli: bernoulli(n_max + 1),
            stirling2: stirling2(n_max),
        })
    }
}

/// `(-1)^m 2^{2m+2} (2^{2m+2} - 1) / (2m+2) * B_{2m+2}` for `n = 2m+1`.
pub fn a_bernoulli(n: usize) -> Result<BigUint> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("the Bernoulli route needs odd n, got {n}")));
    }
    let m = (n - 1) / 2;
    let b = &bernoulli(2 * m + 2)[2 * m + 2];
    let p = BigInt::one() << (2 * m + 2);
    let sign = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let value = Rat::from_integer(sign * &p * (&p - 1u32)) / Rat::from_integer(BigInt::from(2 * m + 2)) * b;
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::NotAnInteger(value.to_string()));
    }
    Ok(value.to_integer().to_biguint().expect("positive"))
}

/// Which printed Stirling-number expression to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingVariant {
    /// `n! sum_k 1/(k+1) C(n,k) 2^{-(k+1)} S(n,k)`
    Main,
    /// `n! sum_k 2^{-(k+1)}/(k+1)! sum_j (-1)^{k-j} C(k,j) j^n`
    Alternative,
}

/// Exact value of the selected expression at `n`, uncorrected.
pub fn a_stirling_formula(n: usize, variant: StirlingVariant) -> Rat {
    let nf = Rat::from_integer(BigInt::from(factorial(n)));
    let two_pow = |e: usize| Rat::new(BigInt::one(), BigInt::one() << e);
    let mut total = Rat::zero();
    match variant {
        StirlingVariant::Main => {
            let s = stirling2(n);
            let c = binomials(n);
            for k in 0..=n {
                let term = Rat::from_integer(BigInt::from(&c[k] * &s[n][k]))
                    * two_pow(k + 1)
                    / Rat::from_integer(BigInt::from(k + 1));
                total += term;
            }
        }
        StirlingVariant::Alternative => {
            for k in 0..=n {
                let c = binomials(k);
                let inner: BigInt = (0..=k)
                    .map(|j| {
                        let power = BigInt::from(j).pow(n as u32);
                        let t = BigInt::from(c[j].clone()) * power;
                        if (k - j) % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum();
                total += Rat::from_integer(inner) * two_pow(k + 1) / Rat::from_integer(BigInt::from(factorial(k + 1)));
            }
        }
    }
    nf * total
}

/// Float value of the integral expression at `n <= 12`.
pub fn a_integral(n: u32, q: Quadrature) -> Result<f64> {
    if n > MAX_INTEGRAL_N {
        return Err(Error::CapExceeded { requested: n as usize, cap: MAX_INTEGRAL_N as usize });
    }
    andre_integral::<f64>(n, q)
}

/// Ratio-test terms `n A_{n-1} / A_n` for `n = 1..=N` (element `i` is `n = i + 1`).
///
/// Term `n` equals `(n'+1) A_{n'} / A_{n'+1}` at `n' = n - 1`; it tends to `pi/2`.
pub fn ratio_sequence(n_max: usize) -> Result<Vec<Rat>> {
    if n_max < 2 {
        return Err(Error::InvalidArgument("ratio_sequence needs N >= 2".into()));
    }
    let a = a_recurrence(n_max)?;
    Ok((1..=n_max)
        .map(|n| {
            Rat::new(BigInt::from(n) * BigInt::from(a[n - 1].clone()), BigInt::from(a[n].clone()))
        })
        .collect())
}

/// Truncated EGF `sum A_n u^n / n!` of order `n_max`.
pub fn andre_egf(n_max: usize) -> Result<Egf<Rat>> {
    let a = a_recurrence(n_max.max(1))?;
    Ok(Egf::new(
        a.into_iter()
            .take(n_max + 1)
            .map(|v| Poly::constant(Rat::from_integer(BigInt::from(v))))
            .collect(),
    ))
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Caps for [`appendix_a_verdicts`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AndreCaps {
    /// Largest index compared along the exact routes.
    pub max_n: usize,
    /// Largest size enumerated by brute force.
    pub enum_size: usize,
    pub quadrature: Quadrature,
}

impl Default for AndreCaps {
    fn default() -> Self {
        AndreCaps { max_n: 12, enum_size: 10, quadrature: Quadrature::default() }
    }
}

/// One verdict per route pair.
pub fn appendix_a_verdicts(caps: AndreCaps) -> Result<Vec<ClaimVerdict>> {
    let n_max = caps.max_n;
    if n_max > 12 {
        return Err(Error::CapExceeded { requested: n_max, cap: 12 });
    }
    let a = a_recurrence(n_max.max(2))?;
    let a_rat = |n: usize| Rat::from_integer(BigInt::from(a[n].clone()));
    let mut out = Vec::new();

    let enum_top = n_max.min(caps.enum_size);
    let mut b = verify::builder("AA-REC").param("max_n", enum_top);
    for (n, an) in a.iter().enumerate().take(enum_top + 1) {
        let count = enumerate_class(ClassTag::Ascending, n)?.count();
        b.compare(format!("n={n}"), &an.to_string(), &count.to_string());
    }
    b.measurement("n=0", "A_1 = 1", format!("recurrence applied at n=0 gives A_1 = {}", recurrence_at_zero()));
    out.push(b.finish());

    let mut b = verify::builder("AA-BERN").param("max_n", n_max);
    for n in (1..=n_max).step_by(2) {
        let observed = a_bernoulli(n).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
        b.compare(format!("n={n}"), &a[n].to_string(), &observed);
    }
    out.push(b.finish());

    for (id, variant) in [("AA-STIR-MAIN", StirlingVariant::Main), ("AA-STIR-ALT", StirlingVariant::Alternative)] {
        let mut b = verify::builder(id).param("max_n", n_max);
        for n in 0..=n_max {
            b.compare(format!("n={n}"), &a_rat(n), &a_stirling_formula(n, variant));
        }
        out.push(b.finish());
    }

    let mut b = verify::builder("AA-INT")
        .param("max_n", n_max)
        .param("tolerance", format!("{INTEGRAL_TOLERANCE:e} relative"))
        .param("quadrature", format!("{} panels, {:e}", caps.quadrature.intervals, caps.quadrature.tolerance));
    for (n, an) in a.iter().enumerate().take(n_max + 1) {
        b.checked(1);
        let target = rat_to_f64(&a_rat(n));
        match a_integral(n as u32, caps.quadrature) {
            Ok(v) if (v - target).abs() <= INTEGRAL_TOLERANCE * target.max(1.0) => {}
            Ok(v) => b.discrepancy(format!("n={n}"), an, format!("{v:.9}")),
            Err(e) => b.discrepancy(format!("n={n}"), an, e),
        }
    }
    out.push(b.finish());

    let ratio_top = n_max.max(2);
    let terms = ratio_sequence(ratio_top)?;
    let mut b = verify::builder("AA-RATIO").param("max_n", ratio_top);
    let errors: Vec<f64> = terms.iter().map(|t| (rat_to_f64(t) - FRAC_PI_2).abs()).collect();
    for n in 2..=ratio_top {
        b.checked(1);
        if errors[n - 1] >= errors[n - 2] {
            b.discrepancy(
                format!("n={n}"),
                format!("|r_n - pi/2| < {:.3e}", errors[n - 2]),
                format!("{:.3e}", errors[n - 1]),
            );
        }
    }
    if ratio_top >= 6 {
        b.compare("printed example n=6", &ratio(96, 61), &terms[5]);
        b.checked(1);
        let v = rat_to_f64(&terms[5]);
        let truncated = (v * 1000.0).trunc() / 1000.0;
        let rounded = (v * 1000.0).round() / 1000.0;
        if truncated != 1.573 && rounded != 1.573 {
            b.discrepancy("printed decimal n=6", "1.573", format!("{v:.6}"));
        }
        b.measurement("printed decimal n=6", "1.573", format!("{v:.6} (three digits truncated)"));
    }
    b.measurement(format!("n={ratio_top}"), "pi/2", format!("{} ~ {:.9}", terms[ratio_top - 1], rat_to_f64(&terms[ratio_top - 1])));
    out.push(b.finish());

    let f = andre_egf(n_max)?;
    let mut b = verify::builder("AA-EGF").param("order", n_max);
    let lhs = f.mul(&f)?.truncate(n_max - 1);
    let two = Poly::constant(Rat::from_integer(2.into()));
    let rhs = f.derive()?.scale(&two).sub(&Egf::one(n_max - 1))?;
    for n in 0..n_max {
        b.compare(format!("u^{n}"), rhs.coeff(n), lhs.coeff(n));
    }
    out.push(b.finish());

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn recurrence_values() {
        let a = a_recurrence(11).unwrap();
        let expect = [1u64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792];
        assert_eq!(a, expect.iter().map(|&v| big(v)).collect::<Vec<_>>());
    }

    #[test]
    fn recurrence_refuses_zero() {
        let seeds = [big(1), big(1)];
        assert_eq!(recurrence_step(&seeds, 0).unwrap_err(), Error::RecurrenceAtZero);
        assert_eq!(recurrence_step(&seeds, 1).unwrap(), big(1));
        assert!(a_recurrence(0).is_err());
        assert_eq!(recurrence_at_zero(), ratio(1, 2));
    }

    #[test]
    fn bernoulli_numbers() {
        let b = bernoulli(12);
        assert_eq!(b[1], ratio(-1, 2));
        assert_eq!(b[2], ratio(1, 6));
        assert_eq!(b[4], ratio(-1, 30));
        assert_eq!(b[12], ratio(-691, 2730));
        assert!(b[3].is_zero() && b[11].is_zero());
        for n in 1..12 {
            let c = binomials(n + 1);
            let s = (0..=n).fold(Rat::zero(), |acc, k| acc + Rat::from_integer(BigInt::from(c[k].clone())) * &b[k]);
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn bernoulli_route() {
        assert_eq!(a_bernoulli(1).unwrap(), big(1));
        assert_eq!(a_bernoulli(3).unwrap(), big(2));
        assert_eq!(a_bernoulli(5).unwrap(), big(16));
        assert_eq!(a_bernoulli(11).unwrap(), big(353792));
        assert!(a_bernoulli(4).is_err());
    }

    #[test]
    fn stirling_table() {
        let s = stirling2(5);
        assert_eq!(s[5].iter().map(|v| v.to_u64().unwrap()).collect::<Vec<_>>(), [0, 1, 15, 25, 10, 1]);
        assert_eq!(s[0][0], big(1));
    }

    #[test]
    fn printed_stirling_expressions() {
        assert_eq!(a_stirling_formula(1, StirlingVariant::Alternative), ratio(1, 8));
        assert_eq!(a_stirling_formula(0, StirlingVariant::Main), ratio(1, 2));
        assert_eq!(a_stirling_formula(0, StirlingVariant::Alternative), ratio(1, 2));
        assert_eq!(a_stirling_formula(1, StirlingVariant::Main), ratio(1, 8));
        // n = 2: main = 2 (1/8 * 2 + 1/24) = 7/12
        assert_eq!(a_stirling_formula(2, StirlingVariant::Main), ratio(7, 12));
        // n = 2: alternative = 2 (1/4 * 1/2 * 1 + 1/8 * 1/6 * 2) = 1/3
        assert_eq!(a_stirling_formula(2, StirlingVariant::Alternative), ratio(1, 3));
    }

    #[test]
    fn integral_route() {
        let q = Quadrature::default();
        assert!((a_integral(0, q).unwrap() - 1.0).abs() < 1e-9);
        let expect = 2.0 / std::f64::consts::PI * 2f64.ln();
        assert!((a_integral(1, q).unwrap() - expect).abs() < 1e-6);
        assert!(a_integral(13, q).is_err());
    }

    #[test]
    fn ratio_terms() {
        let r = ratio_sequence(20).unwrap();
        assert_eq!(r[0], rat(1));
        assert_eq!(r[1], rat(2));
        assert_eq!(r[5], ratio(96, 61));
        assert!((rat_to_f64(&r[19]) - FRAC_PI_2).abs() < 1e-3);
        assert!(ratio_sequence(1).is_err());
    }

    #[test]
    fn table_bundle() {
        let t = AndreTable::build(8).unwrap();
        assert_eq!(t.a[8], big(1385));
        assert_eq!(t.bernoulli.len(), 10);
        assert_eq!(t.stirling2.len(), 9);
        assert!(t.a[2..].windows(2).all(|w| w[0] < w[1]));
    }
}
