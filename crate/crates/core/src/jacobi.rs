//! Exact Taylor coefficients of `sn`, `cn`, `dn` as polynomials in `m = k^2`,
//! generated from
//!
//! ```text
//! sn' = cn dn,   cn' = -sn dn,   dn' = -m sn cn,   sn(0) = 0, cn(0) = dn(0) = 1
//! ```
//!
//! and their comparison with the weighted permutation counts.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{Egf, Poly};
use crate::perm::{class_weight_poly, enumerate_class, ClassTag, StatVariant};
use crate::scalar::{binomial_row, Scalar};
use crate::verify::{self, ClaimVerdict};
use crate::Rat;

/// Largest odd size enumerated for the combinatorial side.
pub const MAX_COMBINATORIAL_SIZE: usize = 11;

/// `s[n]` multiplies `u^{2n+1}/(2n+1)!` in `sn`; `c[n]`, `d[n]` multiply
/// `u^{2n}/(2n)!` in `cn`, `dn`. The polynomial variable is `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiCoeffs<T> {
    pub s: Vec<Poly<T>>,
    pub c: Vec<Poly<T>>,
    pub d: Vec<Poly<T>>,
}

fn convolve<T: Scalar>(f: &[Poly<T>], g: &[Poly<T>], n: usize) -> Poly<T> {
    let binom = binomial_row::<T>(n);
    let mut acc = Poly::zero();
    for (j, b) in binom.iter().enumerate() {
        if f[j].is_zero() || g[n - j].is_zero() {
            continue;
        }
        acc = &acc + &(&f[j] * &g[n - j]).scale(b);
    }
    acc
}

/// Coefficients `s_0..s_N`, `c_0..c_N`, `d_0..d_N`.
pub fn jacobi_taylor<T: Scalar>(n_max: usize) -> JacobiCoeffs<T> {
    let top = 2 * n_max + 1;
    let minus_m = Poly::monomial(-T::one(), 1);
    let mut sn = vec![Poly::zero()];
    let mut cn = vec![Poly::one()];
    let mut dn = vec![Poly::one()];
    for i in 0..top {
        let ds = convolve(&cn, &dn, i);
        let dc = -convolve(&sn, &dn, i);
        let dd = &minus_m * &convolve(&sn, &cn, i);
        sn.push(ds);
        cn.push(dc);
        dn.push(dd);
    }
    JacobiCoeffs {
        s: (0..=n_max).map(|n| sn[2 * n + 1].clone()).collect(),
        c: (0..=n_max).map(|n| cn[2 * n].clone()).collect(),
        d: (0..=n_max).map(|n| dn[2 * n].clone()).collect(),
    }
}

impl<T: Scalar> JacobiCoeffs<T> {
    pub fn n_max(&self) -> usize {
        self.s.len() - 1
    }

    /// Full EGF order of the packed series, `2N + 1`.
    pub fn order(&self) -> usize {
        2 * self.n_max() + 1
    }

    fn pack(&self, odd: bool, src: &[Poly<T>]) -> Egf<T> {
        let mut e = Egf::zero(self.order());
        for (n, p) in src.iter().enumerate() {
            e.set_coeff(2 * n + usize::from(odd), p.clone());
        }
        e
    }

    pub fn sn_series(&self) -> Egf<T> {
        self.pack(true, &self.s)
    }

    pub fn cn_series(&self) -> Egf<T> {
        self.pack(false, &self.c)
    }

    pub fn dn_series(&self) -> Egf<T> {
        self.pack(false, &self.d)
    }

    /// `(sn, cn, dn)` with `m` fixed to `m_value`.
    pub fn specialize(&self, m_value: &T) -> (Egf<T>, Egf<T>, Egf<T>) {
        (
            self.sn_series().specialize(m_value),
            self.cn_series().specialize(m_value),
            self.dn_series().specialize(m_value),
        )
    }

    /// `(-1)^n p`: the coefficient with its alternating sign removed.
    pub fn unsigned(n: usize, p: &Poly<T>) -> Poly<T> {
        if n.is_multiple_of(2) {
            p.clone()
        } else {
            -p
        }
    }
}

/// How the combinatorial weight variable maps onto the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Substitution {
    /// The weight is read as `m` itself.
    WeightIsM,
    /// The weight is `k`, and `m = k^2`.
    WeightIsK,
}

impl Substitution {
    pub const ALL: [Substitution; 2] = [Substitution::WeightIsK, Substitution::WeightIsM];

    pub fn name(self) -> &'static str {
        match self {
            Substitution::WeightIsM => "w=m",
            Substitution::WeightIsK => "w=k,m=k^2",
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Substitution::WeightIsM => "M",
            Substitution::WeightIsK => "K",
        }
    }

    fn var(self) -> &'static str {
        match self {
            Substitution::WeightIsM => "m",
            Substitution::WeightIsK => "k",
        }
    }

    fn apply<T: Scalar>(self, analytic: &Poly<T>) -> Poly<T> {
        match self {
            Substitution::WeightIsM => analytic.clone(),
            Substitution::WeightIsK => analytic.substitute_square(),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_size(n_max: usize) -> Result<()> {
    if 2 * n_max + 1 > MAX_COMBINATORIAL_SIZE {
        return Err(Error::CapExceeded { requested: 2 * n_max + 1, cap: MAX_COMBINATORIAL_SIZE });
    }
    Ok(())
}

/// Claim id for a statistic/substitution pair of [`compare_combinatorial`].
pub fn weight_claim_id(v: StatVariant, subst: Substitution) -> String {
    format!("JAC-WEIGHT-{}-{}", v.name(), subst.tag())
}

/// Compare `|s_n|`, `|c_n|`, `|d_n|` with the weighted class polynomials of
/// `S_odd`, `C_even`, `D_even` for `n <= N`.
pub fn compare_combinatorial(n_max: usize, v: StatVariant, subst: Substitution) -> Result<ClaimVerdict> {
    check_size(n_max)?;
    let jt: JacobiCoeffs<Rat> = jacobi_taylor(n_max);
    let mut b = verify::builder(weight_claim_id(v, subst))
        .param("statistic", v)
        .param("substitution", subst)
        .param("max_n", n_max);
    let one = Rat::from_integer(1.into());
    let mut counts_agree = true;
    for n in 0..=n_max {
        let sides = [
            ("sn", ClassTag::SOdd, 2 * n + 1, &jt.s[n]),
            ("cn", ClassTag::CEven, 2 * n, &jt.c[n]),
            ("dn", ClassTag::DEven, 2 * n, &jt.d[n]),
        ];
        for (name, tag, size, analytic) in sides {
            let expected = subst.apply(&JacobiCoeffs::unsigned(n, analytic));
            let observed: Poly<Rat> = class_weight_poly(tag, size, v)?;
            counts_agree &= expected.eval(&one) == observed.eval(&one);
            b.compare_poly(format!("{name} n={n}"), &expected, &observed, subst.var());
        }
    }
    b.measurement("weight 1", "", if counts_agree { "counts agree" } else { "counts differ" });
    b.weaker_form_holds(counts_agree);
    Ok(b.finish())
}

/// Combinatorial EGFs `(sn_k, cn_k, dn_k)` of order `2N + 1` for one statistic.
pub fn combinatorial_series(n_max: usize, v: StatVariant) -> Result<(Egf<Rat>, Egf<Rat>, Egf<Rat>)> {
    check_size(n_max)?;
    let order = 2 * n_max + 1;
    let (mut s, mut c, mut d) = (Egf::zero(order), Egf::zero(order), Egf::zero(order));
    for n in 0..=n_max {
        s.set_coeff(2 * n + 1, class_weight_poly(ClassTag::SOdd, 2 * n + 1, v)?);
        c.set_coeff(2 * n, class_weight_poly(ClassTag::CEven, 2 * n, v)?);
        d.set_coeff(2 * n, class_weight_poly(ClassTag::DEven, 2 * n, v)?);
    }
    Ok((s, c, d))
}

/// `sn' = cn dn` from the coefficient recurrence, together with the two
/// quadratic identities `sn^2 + cn^2 = 1`, `dn^2 + m sn^2 = 1`.
pub fn analytic_verdicts(n_max: usize) -> Result<Vec<ClaimVerdict>> {
    let jt: JacobiCoeffs<Rat> = jacobi_taylor(n_max);
    let (s, c, d) = (jt.sn_series(), jt.cn_series(), jt.dn_series());
    let order = jt.order();

    let mut b = verify::builder("JAC-1-analytic").param("order", order);
    let lhs = s.derive()?;
    let rhs = c.mul(&d)?.truncate(order - 1);
    for i in 0..order {
        b.compare_poly(format!("u^{i}"), rhs.coeff(i), lhs.coeff(i), "m");
    }
    let mut out = vec![b.finish()];

    let mut b = verify::builder("JAC-PYTH").param("order", order);
    let one = Egf::one(order);
    let m = Poly::var();
    let sn2 = s.mul(&s)?;
    let first = sn2.add(&c.mul(&c)?)?;
    let second = d.mul(&d)?.add(&sn2.scale(&m))?;
    for i in 0..=order {
        b.compare_poly(format!("sn^2+cn^2 u^{i}"), one.coeff(i), first.coeff(i), "m");
        b.compare_poly(format!("dn^2+m sn^2 u^{i}"), one.coeff(i), second.coeff(i), "m");
    }
    out.push(b.finish());
    Ok(out)
}

/// At `m = 1`: `|s_n| = A_{2n+1}`, `|c_n| = |d_n| = A_{2n}`.
pub fn modulus_one_verdict(n_max: usize) -> Result<ClaimVerdict> {
    let jt: JacobiCoeffs<Rat> = jacobi_taylor(n_max);
    let a = crate::andre::a_recurrence(2 * n_max + 1)?;
    let one = Rat::from_integer(1.into());
    let mut b = verify::builder("JAC-M1").param("max_n", n_max);
    for n in 0..=n_max {
        let odd = Rat::from_integer(a[2 * n + 1].clone().into());
        let even = Rat::from_integer(a[2 * n].clone().into());
        b.compare(format!("s_{n}(1)"), &odd, &JacobiCoeffs::unsigned(n, &jt.s[n]).eval(&one));
        b.compare(format!("c_{n}(1)"), &even, &JacobiCoeffs::unsigned(n, &jt.c[n]).eval(&one));
        b.compare(format!("d_{n}(1)"), &even, &JacobiCoeffs::unsigned(n, &jt.d[n]).eval(&one));
    }
    Ok(b.finish())
}

/// `sn_k' = cn_k dn_k` (optionally times `w`) for the weighted permutation
/// EGFs of one statistic.
pub fn combinatorial_factorization_verdict(n_max: usize, v: StatVariant, marked: bool) -> Result<ClaimVerdict> {
    let (s, c, d) = combinatorial_series(n_max, v)?;
    let order = 2 * n_max + 1;
    let suffix = if marked { "-marked" } else { "" };
    let mut b = verify::builder(format!("JAC-1-combinatorial-{}{}", v.name(), suffix))
        .param("statistic", v)
        .param("extra_factor", if marked { "w" } else { "1" })
        .param("order", order);
    let lhs = s.derive()?;
    let mut rhs = c.mul(&d)?.truncate(order - 1);
    if marked {
        rhs = rhs.scale(&Poly::var());
    }
    let one = Rat::from_integer(1.into());
    let mut counts_agree = true;
    for i in (0..order).step_by(2) {
        counts_agree &= lhs.coeff(i).eval(&one) == rhs.coeff(i).eval(&one);
        b.compare_poly(format!("u^{i}"), rhs.coeff(i), lhs.coeff(i), "w");
    }
    for i in (0..order).step_by(2) {
        b.measurement(format!("sn_k' u^{i}"), "", lhs.coeff(i).display_in("w"));
    }
    b.measurement("weight 1", "", if counts_agree { "counts agree" } else { "counts differ" });
    b.weaker_form_holds(counts_agree);
    Ok(b.finish())
}

/// The convolution `S_n = sum_j C_j D_{n-j}` without binomial factors, on
/// plain counts, against the binomial form.
pub fn plain_convolution_verdict(n_max: usize) -> Result<ClaimVerdict> {
    check_size(n_max)?;
    let count = |tag, size| enumerate_class(tag, size).map(|it| it.count() as u64);
    let mut b = verify::builder("JAC-CONV").param("max_n", n_max);
    let mut binomial_agrees = true;
    for n in 0..=n_max {
        let s = count(ClassTag::SOdd, 2 * n + 1)?;
        let mut plain = 0u64;
        let mut binomial = 0u64;
        let binom = binomial_row::<f64>(2 * n);
        for j in 0..=n {
            let cd = count(ClassTag::CEven, 2 * j)? * count(ClassTag::DEven, 2 * (n - j))?;
            plain += cd;
            binomial += binom[2 * j] as u64 * cd;
        }
        binomial_agrees &= binomial == s;
        b.compare(format!("n={n}"), &s, &plain);
        b.measurement(format!("n={n}"), s, format!("binomial form gives {binomial}"));
    }
    b.weaker_form_holds(binomial_agrees);
    Ok(b.finish())
}

/// Odd up-down counts against the magnitudes of the `sin` coefficients
/// (the `m = 0` specialization).
pub fn sine_egf_verdict(n_max: usize) -> Result<ClaimVerdict> {
    check_size(n_max)?;
    let jt: JacobiCoeffs<Rat> = jacobi_taylor(n_max);
    let (sin, _, _) = jt.specialize(&Rat::from_integer(0.into()));
    let mut b = verify::builder("SIN-EGF").param("max_n", n_max);
    for n in 0..=n_max {
        let count = Rat::from_integer((enumerate_class(ClassTag::SOdd, 2 * n + 1)?.count() as i64).into());
        let coeff = sin.coeff(2 * n + 1).coeff(0).abs();
        b.compare(format!("size {}", 2 * n + 1), &coeff, &count);
    }
    Ok(b.finish())
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for JacobiCoeffs<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.n_max() {
            writeln!(
                f,
                "n={n}\ts={}\tc={}\td={}",
                self.s[n].display_in("m"),
                self.c[n].display_in("m"),
                self.d[n].display_in("m")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::WPoly;

    #[test]
    fn first_coefficients() {
        let jt: JacobiCoeffs<Rat> = jacobi_taylor(3);
        assert_eq!(jt.s[0], WPoly::one());
        assert_eq!(jt.c[1], WPoly::from_ints(&[-1]));
        assert_eq!(jt.d[1], WPoly::from_ints(&[0, -1]));
        assert_eq!(jt.s[1], WPoly::from_ints(&[-1, -1]));
        assert_eq!(jt.s[2], WPoly::from_ints(&[1, 14, 1]));
        assert_eq!(jt.c[2], WPoly::from_ints(&[1, 4]));
        assert_eq!(jt.d[2], WPoly::from_ints(&[0, 4, 1]));
    }

    #[test]
    fn degree_and_divisibility() {
        let jt: JacobiCoeffs<Rat> = jacobi_taylor(8);
        for n in 0..=8 {
            for p in [&jt.s[n], &jt.c[n], &jt.d[n]] {
                assert!(p.degree().unwrap() <= n);
            }
            if n >= 1 {
                assert!(jt.d[n].coeff(0) == Rat::from_integer(0.into()));
            }
        }
    }

    #[test]
    fn zero_modulus_gives_trig() {
        let jt: JacobiCoeffs<Rat> = jacobi_taylor(4);
        let (s, c, d) = jt.specialize(&Rat::from_integer(0.into()));
        let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
        for n in 0..=4 {
            assert_eq!(s.coeff(2 * n + 1).coeff(0), Rat::from_integer(sign(n).into()));
            assert_eq!(c.coeff(2 * n).coeff(0), Rat::from_integer(sign(n).into()));
        }
        assert_eq!(d, Egf::one(9));
        assert!(s.coeff(0).is_zero());
    }

    #[test]
    fn float_instantiation_tracks_exact() {
        let exact: JacobiCoeffs<Rat> = jacobi_taylor(5);
        let float: JacobiCoeffs<f64> = jacobi_taylor(5);
        let m = 0.3;
        for n in 0..=5 {
            let e = exact.s[n].map_coeffs(|c| num_traits::ToPrimitive::to_f64(c).unwrap()).eval(&m);
            assert!((e - float.s[n].eval(&m)).abs() <= 1e-9 * e.abs().max(1.0));
        }
    }

    #[test]
    fn cap_checked() {
        assert!(compare_combinatorial(6, StatVariant::InteriorPeaks, Substitution::WeightIsM).is_err());
    }

    #[test]
    fn size_three_discrepancy() {
        let v = compare_combinatorial(1, StatVariant::InteriorPeaks, Substitution::WeightIsM).unwrap();
        assert!(!v.passed());
        let e = v.evidence.iter().find(|e| e.instance == "sn n=1").unwrap();
        assert_eq!(e.expected, "1 + m");
        assert_eq!(e.observed, "2m");
    }
}
