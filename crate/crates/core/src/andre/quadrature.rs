//! Adaptive Simpson quadrature on a truncated half line.

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};

/// Quadrature controls: initial subdivision count and absolute tolerance on
/// the raw integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub intervals: usize,
    pub tolerance: f64,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature { intervals: 16, tolerance: 1e-13 }
    }
}

const MAX_DEPTH: u32 = 48;

/// Point past which `y^n e^{-(n+1) y} 2^{n+1}` stays below `cutoff`.
pub(crate) fn tail_cut<F: Float>(n: i32, cutoff: f64) -> F {
    let n_f = n as f64;
    let target = cutoff.ln();
    let mut y = 1.0f64;
    while n_f * y.ln() - (n_f + 1.0) * y + (n_f + 1.0) * 2f64.ln() >= target {
        y += 0.5;
    }
    F::from(y).expect("finite cut point")
}

fn simpson<F: Float>(f: &impl Fn(F) -> F, a: F, fa: F, b: F, fb: F) -> (F, F, F) {
    let two = F::one() + F::one();
    let m = (a + b) / two;
    let fm = f(m);
    let six = F::from(6.0).unwrap();
    ((b - a) / six * (fa + two * two * fm + fb), m, fm)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Float>(
    f: &impl Fn(F) -> F,
    a: F,
    fa: F,
    b: F,
    fb: F,
    whole: F,
    m: F,
    fm: F,
    tol: F,
    depth: u32,
    worst: &mut F,
) -> F {
    let (left, lm, flm) = simpson(f, a, fa, m, fm);
    let (right, rm, frm) = simpson(f, m, fm, b, fb);
    let fifteen = F::from(15.0).unwrap();
    let delta = left + right - whole;
    let roundoff = F::epsilon() * fifteen * (left.abs() + right.abs());
    if depth == 0 || delta.abs() <= fifteen * tol || delta.abs() <= roundoff {
        if delta.abs() > fifteen * tol && delta.abs() > roundoff {
            *worst = worst.max(delta.abs() / fifteen);
        }
        return left + right + delta / fifteen;
    }
    let half = tol / (F::one() + F::one());
    adaptive(f, a, fa, m, fm, left, lm, flm, half, depth - 1, worst)
        + adaptive(f, m, fm, b, fb, right, rm, frm, half, depth - 1, worst)
}

/// Integrate `f` over `[a, b]` with `q.intervals` initial panels.
pub fn integrate<F: Float>(f: impl Fn(F) -> F, a: F, b: F, q: Quadrature) -> Result<F> {
    let panels = q.intervals.max(1);
    let width = (b - a) / F::from(panels).unwrap();
    let tol = F::from(q.tolerance).unwrap() / F::from(panels).unwrap();
    let mut worst = F::zero();
    let mut total = F::zero();
    for i in 0..panels {
        let lo = a + width * F::from(i).unwrap();
        let hi = if i + 1 == panels { b } else { lo + width };
        let (flo, fhi) = (f(lo), f(hi));
        let (whole, m, fm) = simpson(&f, lo, flo, hi, fhi);
        total = total + adaptive(&f, lo, flo, hi, fhi, whole, m, fm, tol, MAX_DEPTH, &mut worst);
    }
    if worst > F::zero() {
        return Err(Error::QuadratureDiverged {
            tolerance: q.tolerance,
            estimate: worst.to_f64().unwrap_or(f64::INFINITY),
        });
    }
    Ok(total)
}

/// `(2 n! / pi) * int_0^inf y^n / cosh(y)^(n+1) dy`, in any float type.
pub fn andre_integral<F: Float + FloatConst>(n: u32, q: Quadrature) -> Result<F> {
    let exponent = n as i32;
    let upper: F = tail_cut(exponent, q.tolerance * 1e-3);
    let integrand = |y: F| y.powi(exponent) / y.cosh().powi(exponent + 1);
    let raw = integrate(integrand, F::zero(), upper, q)?;
    let mut fact = F::one();
    for i in 2..=n {
        fact = fact * F::from(i).unwrap();
    }
    Ok((F::one() + F::one()) * fact / F::PI() * raw)
}
