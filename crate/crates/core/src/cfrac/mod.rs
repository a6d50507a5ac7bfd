//! J-fraction convergents as exact ordinary power series.
//!
//! A scheme with streams `alpha`, `beta` denotes
//!
//! ```text
//!              lead
//! ---------------------------------
//! alpha_1 - beta_1 u^2
//!           -----------------------
//!           alpha_2 - beta_2 u^2
//!                     -------------
//!                     alpha_3 - ...
//! ```
//!
//! with `lead` either `u` or `1`. The depth-`d` convergent keeps
//! `beta_1..beta_d` and `alpha_1..alpha_{d+1}`.

mod grammar;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use grammar::{parse_stream, StreamExpr};

use crate::error::{Error, Result};
use crate::exact::{Agreement, Ogf, Poly};
use crate::jacobi::jacobi_taylor;
use crate::verify::{self, ClaimVerdict};
use crate::{OgfSeries, Rat, WPoly};

/// Largest series order a convergent may be expanded to.
pub const MAX_ORDER: usize = 40;

/// Numerator of the outermost fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Leading {
    #[serde(rename = "u-over")]
    UOver,
    #[serde(rename = "one-over")]
    OneOver,
}

impl Leading {
    pub fn name(self) -> &'static str {
        match self {
            Leading::UOver => "u-over",
            Leading::OneOver => "one-over",
        }
    }
}

impl FromStr for Leading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u-over" | "u" => Ok(Leading::UOver),
            "one-over" | "1" => Ok(Leading::OneOver),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected u-over or one-over".into() }),
        }
    }
}

impl fmt::Display for Leading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfScheme {
    pub name: String,
    pub alpha: StreamExpr,
    pub beta: StreamExpr,
    pub leading: Leading,
}

impl CfScheme {
    pub fn new(name: &str, leading: Leading, alpha: &str, beta: &str) -> Result<Self> {
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_') {
            return Err(Error::InvalidArgument(format!("scheme name '{name}' is not an identifier")));
        }
        Ok(CfScheme { name: name.to_string(), alpha: parse_stream(alpha)?, beta: parse_stream(beta)?, leading })
    }

    /// Fix `m` in both streams.
    pub fn specialize(&self, m: &Rat) -> Self {
        CfScheme {
            name: format!("{}@m={}", self.name, m),
            alpha: self.alpha.specialize(m),
            beta: self.beta.specialize(m),
            leading: self.leading,
        }
    }
}

/// The fixed catalog.
pub fn builtin_schemes() -> Vec<CfScheme> {
    [
        ("elliptic-paper", "2*n-1", "n^2*m"),
        ("sine-paper", "2*n-1", "n^2"),
        ("tanh-paper", "2*n-1", "2*n"),
        ("tan-classical", "2*n-1", "1"),
    ]
    .into_iter()
    .map(|(name, a, b)| CfScheme::new(name, Leading::UOver, a, b).expect("builtin scheme parses"))
    .collect()
}

pub fn builtin_scheme(name: &str) -> Result<CfScheme> {
    builtin_schemes()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown scheme '{name}'")))
}

fn check_caps(depth: usize, order: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::CapExceeded { requested: order, cap: MAX_ORDER });
    }
    Ok(())
}

/// Depth-`depth` convergent expanded to `order`.
pub fn cf_convergent_series(scheme: &CfScheme, depth: usize, order: usize) -> Result<OgfSeries> {
    check_caps(depth, order)?;
    let constant = |p: WPoly| {
        let mut s = Ogf::zero(order);
        s.set_coeff(0, p);
        s
    };
    let mut tail = constant(scheme.alpha.at(depth + 1));
    for level in (1..=depth).rev() {
        let inv = tail.inverse().ok_or(Error::NonInvertibleDenominator { level: level + 1 })?;
        let step = inv.scale(&scheme.beta.at(level)).shift(2);
        tail = constant(scheme.alpha.at(level)).sub(&step)?;
    }
    let inv = tail.inverse().ok_or(Error::NonInvertibleDenominator { level: 1 })?;
    Ok(match scheme.leading {
        Leading::UOver => inv.shift(1),
        Leading::OneOver => inv,
    })
}

/// First coefficient where the convergent leaves `target`.
pub fn agreement_order(scheme: &CfScheme, depth: usize, target: &OgfSeries) -> Result<Agreement> {
    cf_convergent_series(scheme, depth, target.order())?.agreement_order(target)
}

/// `sin u` to `order`.
pub fn sin_series(order: usize) -> OgfSeries {
    odd_series(order, |n, fact| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        Rat::new(sign.into(), fact.clone())
    })
}

/// `tan u` to `order`, from the secant-tangent numbers.
pub fn tan_series(order: usize) -> Result<OgfSeries> {
    let f = crate::andre::andre_egf(order.max(1))?.to_ogf().truncate(order);
    let mut out = Ogf::zero(order);
    for i in (1..=order).step_by(2) {
        out.set_coeff(i, f.coeff(i).clone());
    }
    Ok(out)
}

/// `tanh u` to `order`.
pub fn tanh_series(order: usize) -> Result<OgfSeries> {
    let tan = tan_series(order)?;
    let mut out = Ogf::zero(order);
    for i in (1..=order).step_by(2) {
        let c = tan.coeff(i);
        out.set_coeff(i, if (i / 2) % 2 == 0 { c.clone() } else { -c });
    }
    Ok(out)
}

/// `sn(u, m)` to `order` with coefficients in `m`.
pub fn sn_series(order: usize) -> OgfSeries {
    jacobi_taylor::<Rat>(order / 2).sn_series().to_ogf().truncate(order)
}

fn odd_series(order: usize, coeff: impl Fn(usize, &num_bigint::BigInt) -> Rat) -> OgfSeries {
    let mut out = Ogf::zero(order);
    let mut fact = num_bigint::BigInt::from(1);
    for i in 1..=order {
        fact *= i;
        if i % 2 == 1 {
            out.set_coeff(i, Poly::constant(coeff(i / 2, &fact)));
        }
    }
    out
}

/// Caps for the continued fraction claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfCaps {
    pub max_depth: usize,
    pub order: usize,
}

impl Default for CfCaps {
    fn default() -> Self {
        CfCaps { max_depth: 6, order: 20 }
    }
}

impl CfCaps {
    fn check(self) -> Result<()> {
        check_caps(self.max_depth, self.order)?;
        if self.order < 2 * self.max_depth + 1 {
            return Err(Error::InvalidArgument(format!(
                "order {} is below 2*depth+1 = {}",
                self.order,
                2 * self.max_depth + 1
            )));
        }
        Ok(())
    }
}

/// Every depth up to the cap must agree with `target` through `2d + 1`,
/// and agreement may not shrink as the depth grows.
fn convergent_verdict(id: &str, scheme: &CfScheme, target: &OgfSeries, caps: CfCaps, var: &str) -> Result<ClaimVerdict> {
    let mut b = verify::builder(id)
        .param("scheme", &scheme.name)
        .param("alpha", scheme.alpha.source())
        .param("beta", scheme.beta.source())
        .param("max_depth", caps.max_depth)
        .param("order", caps.order)
        .param("required_agreement", "2*depth+1");
    let mut last = 0;
    for depth in 1..=caps.max_depth {
        let conv = cf_convergent_series(scheme, depth, caps.order)?;
        let agreement = conv.agreement_order(target)?;
        let needed = 2 * depth + 1;
        b.checked(1);
        if agreement.agreeing_terms() < last {
            b.discrepancy(format!("depth {depth}"), format!("at least {last} agreeing terms"), agreement);
        }
        last = agreement.agreeing_terms();
        if agreement.agrees_through(needed) {
            b.measurement(format!("depth {depth}"), format!("through u^{needed}"), agreement);
        } else {
            let Agreement::DiffersAt(i) = agreement else { unreachable!("full agreement satisfies any bound") };
            b.discrepancy_with_difference(
                format!("depth {depth}: u^{i} ({agreement})"),
                target.coeff(i).display_in(var),
                conv.coeff(i).display_in(var),
                (conv.coeff(i) - target.coeff(i)).display_in(var),
            );
        }
    }
    Ok(b.finish())
}

/// CF-TAN, CF-SIN, CF-TANH, CF-SN-K0, CF-SN.
pub fn cfrac_verdicts(caps: CfCaps) -> Result<Vec<ClaimVerdict>> {
    caps.check()?;
    let order = caps.order;
    let sin = sin_series(order);
    let zero = Rat::from_integer(0.into());
    let elliptic = builtin_scheme("elliptic-paper")?;
    let out = vec![
        convergent_verdict("CF-TAN", &builtin_scheme("tan-classical")?, &tan_series(order)?, caps, "m")?,
        convergent_verdict("CF-SIN", &builtin_scheme("sine-paper")?, &sin, caps, "m")?,
        convergent_verdict("CF-TANH", &builtin_scheme("tanh-paper")?, &tanh_series(order)?, caps, "m")?,
        convergent_verdict("CF-SN-K0", &elliptic.specialize(&zero), &sin, caps, "m")?,
        convergent_verdict("CF-SN", &elliptic, &sn_series(order), caps, "m")?,
    ];
    Ok(out)
}

/// Render a convergent as `c_0, c_1, ...` lines for display.
pub fn describe_series(s: &OgfSeries, var: &str) -> Vec<(usize, String)> {
    (0..=s.order()).map(|i| (i, s.coeff(i).display_in(var))).collect()
}
