//! Two-sided bounds for the digamma gap `log x − ψ(x)`, the Stirling ratio
//! `Γ(x)/(√(2π) x^x e^{−x})` and `Γ(x+1)`, grouped into [`BoundFamily`]
//! members that share one evaluator per target.
//!
//! Also here: the closed-form bound arguments (`alpha`, `beta`,
//! `beta_refined`, `delta_star`, …), the auxiliary functions whose signs and
//! monotonicity the bounds rest on, and the τ-series representation of the
//! digamma gap.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::special::{self, kernel_r, kernel_s, KERNEL_SERIES_THRESHOLD};
use crate::{Error, Result};

const THIRD: f64 = 1.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundFamily {
    Eq4,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    Eq9,
    Eq9r1,
    Eq9r2,
    Thm21,
    Thm22,
    Thm23,
    Thm24,
}

/// The quantity a family bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `log x − ψ(x)`
    DigammaGap,
    /// `Γ(x)/(√(2π) x^x e^{−x})`
    StirlingRatio,
    /// `Γ(x+1)`, compared in log space by the verifier.
    GammaShifted,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::DigammaGap => "digamma_gap",
            Target::StirlingRatio => "stirling_ratio",
            Target::GammaShifted => "log_gamma_shifted",
        }
    }
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 12] = [
        BoundFamily::Eq4,
        BoundFamily::Eq5,
        BoundFamily::Eq6,
        BoundFamily::Eq7,
        BoundFamily::Eq8,
        BoundFamily::Eq9,
        BoundFamily::Eq9r1,
        BoundFamily::Eq9r2,
        BoundFamily::Thm21,
        BoundFamily::Thm22,
        BoundFamily::Thm23,
        BoundFamily::Thm24,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BoundFamily::Eq4 => "eq4",
            BoundFamily::Eq5 => "eq5",
            BoundFamily::Eq6 => "eq6",
            BoundFamily::Eq7 => "eq7",
            BoundFamily::Eq8 => "eq8",
            BoundFamily::Eq9 => "eq9",
            BoundFamily::Eq9r1 => "eq9r1",
            BoundFamily::Eq9r2 => "eq9r2",
            BoundFamily::Thm21 => "thm21",
            BoundFamily::Thm22 => "thm22",
            BoundFamily::Thm23 => "thm23",
            BoundFamily::Thm24 => "thm24",
        }
    }

    /// Smallest admissible argument. Only EQ6 is restricted (to `x >= 2`,
    /// endpoint included); every other family needs `x > 0`.
    pub fn domain_min(self) -> f64 {
        match self {
            BoundFamily::Eq6 => 2.0,
            _ => 0.0,
        }
    }

    pub fn in_domain(self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        match self {
            BoundFamily::Eq6 => x >= 2.0,
            _ => x > 0.0,
        }
    }

    pub fn target(self) -> Target {
        use BoundFamily::*;
        match self {
            Eq5 | Eq9 | Eq9r1 | Eq9r2 | Thm21 | Thm22 => Target::DigammaGap,
            Eq4 | Eq6 | Eq7 | Thm23 => Target::StirlingRatio,
            Eq8 | Thm24 => Target::GammaShifted,
        }
    }

    pub fn check_domain(self, x: f64) -> Result<()> {
        if self.in_domain(x) {
            Ok(())
        } else {
            Err(Error::domain(
                self.tag(),
                x,
                if self == BoundFamily::Eq6 { "x >= 2" } else { "x > 0" },
            ))
        }
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        BoundFamily::ALL
            .into_iter()
            .find(|f| f.tag() == t)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A two-sided bound `lower < target < upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Self {
        Interval { lower, upper }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lower <= v && v <= self.upper
    }

    /// `self ⊆ other`
    pub fn is_within(&self, other: &Interval) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }

    fn map(self, f: impl Fn(f64) -> f64) -> Interval {
        Interval::new(f(self.lower), f(self.upper))
    }
}

fn check_positive(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, x, "x > 0"))
    }
}

/// `α(x) = x + 1/3`
pub fn alpha(x: f64) -> Result<f64> {
    check_positive("alpha", x)?;
    Ok(x + THIRD)
}

/// `β(x) = (2/x − 2 log(1+1/x))^{−1/2} = (2 r(x))^{−1/2}`
pub fn beta(x: f64) -> Result<f64> {
    check_positive("beta", x)?;
    Ok((2.0 * kernel_r(x)?).sqrt().recip())
}

/// `x + 1/3 − 1/(12x+3)`, evaluated as `x + 4x/(12x+3)`.
pub fn beta_refined(x: f64) -> Result<f64> {
    check_positive("beta_refined", x)?;
    Ok(x + 4.0 * x / (12.0 * x + 3.0))
}

/// `δ*(x) = 1 / (2((x+1) log(1+1/x) − 1)) = 1/(2 s(x))`
pub fn delta_star(x: f64) -> Result<f64> {
    check_positive("delta_star", x)?;
    Ok(0.5 / kernel_s(x)?)
}

/// `x + 1/3 − 1/(18x+3)`, evaluated as `x + 2x/(6x+1)`.
pub fn stirling_arg_upper(x: f64) -> Result<f64> {
    check_positive("stirling_arg_upper", x)?;
    Ok(x + 2.0 * x / (6.0 * x + 1.0))
}

/// Digamma arguments of the `Γ(x+1)` bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaArgs {
    /// `x / log(x+1)`
    pub lower_arg: f64,
    /// `x/2 + 1`
    pub upper_arg: f64,
    /// `x/2 + 1 − x²/(12+2x)`
    pub refined_lower_arg: f64,
}

pub fn gamma_arg_bounds(x: f64) -> Result<GammaArgs> {
    check_positive("gamma_arg_bounds", x)?;
    Ok(GammaArgs {
        lower_arg: x / x.ln_1p(),
        upper_arg: 0.5 * x + 1.0,
        refined_lower_arg: 0.5 * x + 1.0 - x * x / (12.0 + 2.0 * x),
    })
}

fn half_trigamma(y: f64) -> Result<f64> {
    Ok(0.5 * special::trigamma(y)?)
}

/// Bounds on `log x − ψ(x)`.
pub fn digamma_gap_bounds(x: f64, family: BoundFamily) -> Result<Interval> {
    use BoundFamily::*;
    if family.target() != Target::DigammaGap {
        return Err(Error::MixedTargets(format!(
            "{family} does not bound the digamma gap"
        )));
    }
    family.check_domain(x)?;
    let inv = 1.0 / x;
    let lead = 0.5 * inv;
    Ok(match family {
        Eq5 => Interval::new(half_trigamma(x + THIRD)?, half_trigamma(x)?),
        Thm21 => Interval::new(half_trigamma(alpha(x)?)?, half_trigamma(beta(x)?)?),
        Thm22 => Interval::new(half_trigamma(x + THIRD)?, half_trigamma(beta_refined(x)?)?),
        Eq9 => Interval::new(lead, inv),
        Eq9r1 => {
            let q = x + 0.25;
            Interval::new(lead + 1.0 / (12.0 * q * q), lead + inv * inv / 12.0)
        }
        Eq9r2 => {
            let inv2 = inv * inv;
            let e = x + 0.125;
            let e2 = e * e;
            Interval::new(
                lead + inv2 / 12.0 - inv2 * inv2 / 12.0,
                lead + inv2 / 12.0 - 1.0 / (120.0 * e2 * e2),
            )
        }
        _ => unreachable!(),
    })
}

/// Bounds on `Γ(x)/(√(2π) x^x e^{−x})`.
pub fn stirling_ratio_bounds(x: f64, family: BoundFamily) -> Result<Interval> {
    use BoundFamily::*;
    if family.target() != Target::StirlingRatio {
        return Err(Error::MixedTargets(format!(
            "{family} does not bound the Stirling ratio"
        )));
    }
    family.check_domain(x)?;
    let base = -0.5 * special::digamma(x + THIRD)?;
    let exponents = match family {
        Eq4 => (base, -0.5 * special::digamma(x)?),
        Eq6 => {
            let inv = 1.0 / x;
            let second = inv * inv / 72.0;
            let third = 11.0 * inv * inv * inv / 3240.0;
            (base + second, base + second + third)
        }
        Eq7 => (base, -0.5 * special::digamma(delta_star(x)?)?),
        Thm23 => (base, -0.5 * special::digamma(stirling_arg_upper(x)?)?),
        _ => unreachable!(),
    };
    Ok(Interval::new(exponents.0.exp(), exponents.1.exp()))
}

/// Bounds on `log Γ(x+1)`; the exponent of [`gamma_bounds`].
pub fn gamma_log_bounds(x: f64, family: BoundFamily) -> Result<Interval> {
    if family.target() != Target::GammaShifted {
        return Err(Error::MixedTargets(format!(
            "{family} does not bound Γ(x+1)"
        )));
    }
    family.check_domain(x)?;
    let args = gamma_arg_bounds(x)?;
    let lower_arg = match family {
        BoundFamily::Eq8 => args.lower_arg,
        _ => args.refined_lower_arg,
    };
    Ok(Interval::new(
        x * special::digamma(lower_arg)?,
        x * special::digamma(args.upper_arg)?,
    ))
}

/// Bounds on `Γ(x+1)`. Both ends overflow to infinity once `x` is in the
/// hundreds; use [`gamma_log_bounds`] there.
pub fn gamma_bounds(x: f64, family: BoundFamily) -> Result<Interval> {
    Ok(gamma_log_bounds(x, family)?.map(f64::exp))
}

/// Evaluates a family at `x` in the space the verifier compares in: the
/// digamma gap and Stirling ratio directly, `Γ(x+1)` as its logarithm.
pub fn family_bounds(x: f64, family: BoundFamily) -> Result<Interval> {
    match family.target() {
        Target::DigammaGap => digamma_gap_bounds(x, family),
        Target::StirlingRatio => stirling_ratio_bounds(x, family),
        Target::GammaShifted => gamma_log_bounds(x, family),
    }
}

/// `G_c(x) = log Γ(x) − x log x + x − ½ log 2π + ½ ψ(x+c)`.
pub fn g_c(x: f64, c: f64) -> Result<f64> {
    check_positive("g_c", x)?;
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::domain("g_c", c, "c >= 0"));
    }
    // ψ(x+c) − log x = log(1 + c/x) − (log(x+c) − ψ(x+c))
    Ok(special::binet(x)? + 0.5 * ((c / x).ln_1p() - special::digamma_gap(x + c)?))
}

/// `f(u) = (2(1/u − log(1+1/u)))^{−1/2} − u = β(u) − u`, increasing from 0
/// towards 1/3.
fn f_aux(u: f64) -> Result<f64> {
    check_positive("f", u)?;
    if u > KERNEL_SERIES_THRESHOLD {
        let (q, m) = special::kernel_r_scaled(u);
        let sq = q.sqrt();
        Ok(m / (sq * (1.0 + sq)))
    } else {
        Ok(beta(u)? - u)
    }
}

/// `τ(k) = [2/(x+k−1) − 2 log(1 + 1/(x+k−1))]^{−1/2} − k`, i.e.
/// `f(x+k−1) + x − 1`. Real `k >= 1` is accepted.
pub fn tau(k: f64, x: f64) -> Result<f64> {
    check_positive("tau", x)?;
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::domain("tau", k, "k >= 1"));
    }
    Ok(f_aux(x + (k - 1.0))? + (x - 1.0))
}

/// Encloses `log x − ψ(x) = ½ Σ_{k≥1} (k + τ(k))^{−2}` using `terms` explicit
/// terms and a tail bracketed by the extreme values of τ:
/// `τ(∞) = x − 2/3` from below and `τ(1) = β(x) − 1` from above.
pub fn gap_via_tau_series(x: f64, terms: usize) -> Result<Interval> {
    check_positive("gap_via_tau_series", x)?;
    if terms < 1 {
        return Err(Error::domain("gap_via_tau_series", 0.0, "K >= 1"));
    }
    // Neumaier summation
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in 1..=terms {
        let kf = k as f64;
        let d = kf + tau(kf, x)?;
        let t = 0.5 / (d * d);
        let s = sum + t;
        comp += if sum.abs() >= t { (sum - s) + t } else { (t - s) + sum };
        sum = s;
    }
    let partial = sum + comp;
    let next = (terms + 1) as f64;
    let tail_low = half_trigamma(next + x - 2.0 / 3.0)?;
    let tail_high = half_trigamma(next + beta(x)? - 1.0)?;
    let lower = partial + tail_low;
    let upper = partial + tail_high;
    let pad = 16.0 * f64::EPSILON * upper.abs();
    Ok(Interval::new(lower - pad, upper + pad))
}

/// Proof-auxiliary functions, addressed by their conventional one-letter names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AuxFn {
    /// `f(u) = [2(1/u − log(1+1/u))]^{−1/2} − u`
    F,
    /// `h(t) = t − log(t+1)`
    LowerH,
    /// `θ(t) = h(t) − t²/(2(t+1)^{2/3})`
    Theta,
    /// `H(x) = log(1+1/x) − 1/x + 1/(2(x + 1/3 − 1/(12x+3))²)`
    UpperH,
    /// `P(x) = log(1+1/x) − (1+12x+12x²)/(6x(x+1)(2x+1))`
    UpperP,
    /// `p(x) = log(x+1) − (x²+6x)/(4x+6)`
    LowerP,
}

impl AuxFn {
    pub const ALL: [AuxFn; 6] = [
        AuxFn::F,
        AuxFn::LowerH,
        AuxFn::Theta,
        AuxFn::UpperH,
        AuxFn::UpperP,
        AuxFn::LowerP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuxFn::F => "f",
            AuxFn::LowerH => "h",
            AuxFn::Theta => "theta",
            AuxFn::UpperH => "H",
            AuxFn::UpperP => "P",
            AuxFn::LowerP => "p",
        }
    }

    /// Case-sensitive: `h`/`H` and `p`/`P` are different functions.
    pub fn parse(s: &str) -> Option<AuxFn> {
        AuxFn::ALL.into_iter().find(|a| a.name() == s)
    }

    /// Whether `t = 0` is admissible.
    pub fn defined_at_zero(self) -> bool {
        matches!(self, AuxFn::LowerH | AuxFn::Theta)
    }
}

impl fmt::Display for AuxFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Series of `P` in `v = 1/x`: coefficients of `v^5 … v^21`.
const P_SERIES: [f64; 17] = [
    -1.0 / 120.0,
    1.0 / 48.0,
    -23.0 / 672.0,
    3.0 / 64.0,
    -67.0 / 1152.0,
    87.0 / 1280.0,
    -1291.0 / 16896.0,
    257.0 / 3072.0,
    -7181.0 / 79872.0,
    2733.0 / 28672.0,
    -12293.0 / 122880.0,
    1707.0 / 16384.0,
    -180241.0 / 1671168.0,
    65539.0 / 589824.0,
    -851987.0 / 7471104.0,
    152919.0 / 1310720.0,
    -436909.0 / 3670016.0,
];

/// Series of `p` in `x`: coefficients of `x^4 … x^21`.
const LOWER_P_SERIES: [f64; 18] = [
    -1.0 / 36.0,
    7.0 / 135.0,
    -11.0 / 162.0,
    131.0 / 1701.0,
    -473.0 / 5832.0,
    179.0 / 2187.0,
    -5281.0 / 65610.0,
    16867.0 / 216513.0,
    -17635.0 / 236196.0,
    163835.0 / 2302911.0,
    -502769.0 / 7440174.0,
    510961.0 / 7971615.0,
    -4651897.0 / 76527504.0,
    14070379.0 / 243931419.0,
    -4717433.0 / 86093442.0,
    127894979.0 / 2453663097.0,
    -384799049.0 / 7748409780.0,
    385585481.0 / 8135830269.0,
];

/// Series of `θ` in `t`: coefficients of `t^4 … t^21`.
const THETA_SERIES: [f64; 18] = [
    -1.0 / 36.0,
    19.0 / 405.0,
    -29.0 / 486.0,
    349.0 / 5103.0,
    -3911.0 / 52488.0,
    1553.0 / 19683.0,
    -24238.0 / 295245.0,
    1480892.0 / 17537553.0,
    -1648631.0 / 19131876.0,
    16311749.0 / 186535791.0,
    -159777557.0 / 1807962282.0,
    172477237.0 / 1937102445.0,
    -1664324453.0 / 18596183472.0,
    15968225149.0 / 177826004451.0,
    -5646621353.0 / 62762119218.0,
    161054923123.0 / 1788720397713.0,
    -4576818068171.0 / 50837316566580.0,
    4801618612271.0 / 53379182394909.0,
];

/// Below this (or above its reciprocal for `P`) the auxiliaries use their
/// power series; the omitted terms are then below 1e-18 relative.
const AUX_SERIES_RADIUS: f64 = 1.0 / 16.0;

fn power_series(z: f64, first_power: i32, coeffs: &[f64]) -> f64 {
    // Horner in z, then scale by z^first_power.
    let poly = coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c);
    poly * z.powi(first_power)
}

/// `h(t) = t − log(1+t)`
fn h_aux(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else if t < 0.125 {
        // Σ_{m≥2} (−1)^m t^m/m
        let mut pow = t * t;
        let mut sum = 0.0;
        for m in 2..60 {
            let c = pow / m as f64;
            sum += if m % 2 == 0 { c } else { -c };
            if c < sum * 1e-18 {
                break;
            }
            pow *= t;
        }
        sum
    } else {
        t - t.ln_1p()
    }
}

/// Evaluates a proof-auxiliary function.
pub fn aux_eval(name: AuxFn, t: f64) -> Result<f64> {
    let ok = t.is_finite() && (t > 0.0 || (t == 0.0 && name.defined_at_zero()));
    if !ok {
        return Err(Error::domain(
            name.name(),
            t,
            if name.defined_at_zero() { "t >= 0" } else { "t > 0" },
        ));
    }
    Ok(match name {
        AuxFn::F => f_aux(t)?,
        AuxFn::LowerH => h_aux(t),
        AuxFn::Theta => {
            if t == 0.0 {
                0.0
            } else if t < AUX_SERIES_RADIUS {
                power_series(t, 4, &THETA_SERIES)
            } else {
                let c = (1.0 + t).cbrt();
                h_aux(t) - t * t / (2.0 * c * c)
            }
        }
        AuxFn::UpperH => {
            // H = 1/(2b²) − 1/(2β²) = (β − b)(β + b)/(2β²b²) with β − b = f(x) − 4x/(12x+3)
            let b = beta_refined(t)?;
            let diff = f_aux(t)? - 4.0 * t / (12.0 * t + 3.0);
            let beta = t + f_aux(t)?;
            diff * (beta + b) / (2.0 * beta * beta * b * b)
        }
        AuxFn::UpperP => {
            if t > 1.0 / AUX_SERIES_RADIUS {
                power_series(1.0 / t, 5, &P_SERIES)
            } else {
                (1.0 / t).ln_1p()
                    - (1.0 + 12.0 * t + 12.0 * t * t) / (6.0 * t * (t + 1.0) * (2.0 * t + 1.0))
            }
        }
        AuxFn::LowerP => {
            if t < AUX_SERIES_RADIUS {
                power_series(t, 4, &LOWER_P_SERIES)
            } else {
                t.ln_1p() - (t * t + 6.0 * t) / (4.0 * t + 6.0)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn family_tags_round_trip() {
        for f in BoundFamily::ALL {
            assert_eq!(f.tag().parse::<BoundFamily>().unwrap(), f);
        }
        assert_eq!("THM22".parse::<BoundFamily>().unwrap(), BoundFamily::Thm22);
        assert!(matches!("eq10".parse::<BoundFamily>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn family_domains() {
        assert_eq!(BoundFamily::Eq6.domain_min(), 2.0);
        assert_eq!(BoundFamily::Eq9.domain_min(), 0.0);
        assert!(BoundFamily::Eq6.in_domain(2.0));
        assert!(!BoundFamily::Eq6.in_domain(1.999));
        assert!(BoundFamily::Eq9.in_domain(1e-3));
        assert!(stirling_ratio_bounds(1.5, BoundFamily::Eq6).is_err());
        assert!(digamma_gap_bounds(0.0, BoundFamily::Eq9).is_err());
        assert!(digamma_gap_bounds(1.0, BoundFamily::Eq4).is_err());
    }

    #[test]
    fn argument_examples() {
        assert!(close(alpha(2.0).unwrap(), 7.0 / 3.0, 1e-15));
        assert!(close(alpha(1.0).unwrap(), 4.0 / 3.0, 1e-15));
        assert!(close(alpha(0.01).unwrap(), 0.343_333_333_333_333_3, 1e-15));
        assert!(close(beta(1.0).unwrap(), 1.276_497_425_236_519_9, 1e-14));
        assert!(close(beta(1000.0).unwrap(), 1000.0 + THIRD - 1.0 / 12000.0, 1e-6));
        assert!(close(beta_refined(1.0).unwrap(), 1.0 + THIRD - 1.0 / 15.0, 1e-15));
        assert!(beta_refined(1.0).unwrap() < beta(1.0).unwrap());
        assert!(close(delta_star(1.0).unwrap(), 1.294_349_724_781_044_9, 1e-14));
        assert!(delta_star(1.0).unwrap() > 1.0 + THIRD - 1.0 / 21.0);
        assert!(close(stirling_arg_upper(1.0).unwrap(), 27.0 / 21.0, 1e-15));
        assert!(close(stirling_arg_upper(2.0).unwrap(), 2.0 + THIRD - 1.0 / 39.0, 1e-15));
        for x in [1e-6, 1.0, 1e6] {
            assert!(beta(x).unwrap() > x);
        }
    }

    #[test]
    fn argument_limits() {
        let x = 1e7;
        assert!(close(beta(x).unwrap() - x, THIRD, 1e-6));
        assert!(close(beta_refined(x).unwrap() - x, THIRD, 1e-6));
        assert!(close(delta_star(x).unwrap() - x, THIRD, 1e-6));
        let a = gamma_arg_bounds(1e-12).unwrap();
        assert!(close(a.lower_arg, 1.0, 1e-11));
        assert!(close(a.upper_arg, 1.0, 1e-11));
        assert!(close(a.refined_lower_arg, 1.0, 1e-11));
    }

    #[test]
    fn gamma_arg_examples() {
        let a = gamma_arg_bounds(1.0).unwrap();
        assert!(close(a.lower_arg, 1.0 / 2f64.ln(), 1e-15));
        assert_eq!(a.upper_arg, 1.5);
        assert!(close(a.refined_lower_arg, 1.5 - 1.0 / 14.0, 1e-15));
        assert!(a.refined_lower_arg < a.lower_arg);
        let b = gamma_arg_bounds(10.0).unwrap();
        assert!(close(b.refined_lower_arg, 2.875, 1e-15));
        assert!(close(b.lower_arg, 10.0 / 11f64.ln(), 1e-15));
        assert!(b.refined_lower_arg < b.lower_arg);
    }

    // Reference values below are 40-digit mpmath evaluations of the same
    // closed forms.
    #[test]
    fn gap_bound_examples() {
        let t21 = digamma_gap_bounds(1.0, BoundFamily::Thm21).unwrap();
        assert!(close(t21.lower, 0.547_798_562_713_547_0, 1e-14));
        assert!(close(t21.upper, 0.581_549_418_606_891_6, 1e-14));
        assert!(t21.contains(special::EULER_GAMMA));
        let e9 = digamma_gap_bounds(1.0, BoundFamily::Eq9).unwrap();
        assert_eq!((e9.lower, e9.upper), (0.5, 1.0));
        let t22 = digamma_gap_bounds(1.0, BoundFamily::Thm22).unwrap();
        let e5 = digamma_gap_bounds(1.0, BoundFamily::Eq5).unwrap();
        assert!(close(t22.upper, 0.587_790_102_428_764_7, 1e-14));
        assert!(close(e5.upper, 0.822_467_033_424_113_2, 1e-14));
        assert!(t22.upper < e5.upper);
    }

    #[test]
    fn stirling_bound_examples() {
        let t23 = stirling_ratio_bounds(1.0, BoundFamily::Thm23).unwrap();
        assert!(close(t23.lower, 1.068_244_759_678_727_9, 1e-14));
        assert!(close(t23.upper, 1.097_197_268_042_984_9, 1e-14));
        assert!(t23.contains(1.084_437_551_419_227_5));
        let e4 = stirling_ratio_bounds(1.0, BoundFamily::Eq4).unwrap();
        assert!(close(e4.upper, (special::EULER_GAMMA / 2.0).exp(), 1e-15));
        assert!(t23.upper < e4.upper);
        let e6 = stirling_ratio_bounds(2.0, BoundFamily::Eq6).unwrap();
        assert!(close(e6.lower, 0.736_746_883_257_151_6, 1e-14));
        assert!(close(e6.upper, 0.737_059_612_254_206_2, 1e-14));
        assert!(e6.contains(0.736_951_722_530_376_9));
    }

    #[test]
    fn gamma_bound_examples() {
        let t24 = gamma_bounds(1.0, BoundFamily::Thm24).unwrap();
        assert!(close(t24.lower, 0.968_036_559_866_493_1, 1e-14));
        assert!(close(t24.upper, 1.037_163_905_338_086_5, 1e-14));
        assert!(close(
            t24.upper,
            (2.0 - special::EULER_GAMMA - 2.0 * 2f64.ln()).exp(),
            1e-15
        ));
        assert!(t24.contains(1.0));
        let e8 = gamma_bounds(1.0, BoundFamily::Eq8).unwrap();
        assert!(close(e8.lower, 0.981_684_340_415_176_7, 1e-14));
        assert!(e8.lower > t24.lower);
        for f in [BoundFamily::Eq8, BoundFamily::Thm24] {
            assert!(gamma_bounds(4.0, f).unwrap().contains(24.0));
        }
        assert!(close(gamma_bounds(4.0, BoundFamily::Eq8).unwrap().lower, 16.179_895_711_401_667, 1e-12));
        assert!(close(gamma_bounds(4.0, BoundFamily::Thm24).unwrap().lower, 8.821_339_656_391_549, 1e-12));
    }

    #[test]
    fn g_c_examples() {
        assert!(close(g_c(1.0, THIRD).unwrap(), 0.015_044_576_784_924_097, 1e-14));
        assert!(close(g_c(1.0, 0.0).unwrap(), -0.207_546_365_655_439_17, 1e-14));
        assert!(close(
            g_c(1.0, 0.0).unwrap(),
            1.0 - 0.5 * special::LOG_TWO_PI - special::EULER_GAMMA / 2.0,
            1e-15
        ));
        assert!(g_c(1e8, THIRD).unwrap().abs() < 1e-15);
        assert!(g_c(1e8, 0.0).unwrap().abs() < 1e-8);
        assert!(g_c(1.0, -0.5).is_err());
    }

    #[test]
    fn tau_examples() {
        assert!(close(tau(1.0, 1.0).unwrap(), beta(1.0).unwrap() - 1.0, 1e-15));
        assert!(close(tau(1.0, 1.0).unwrap(), 0.276_497_425_236_519_9, 1e-14));
        assert!(close(tau(2.0, 1.0).unwrap(), 0.299_793_998_031_522_6, 1e-14));
        assert!(close(tau(1e9, 1.0).unwrap(), THIRD, 1e-9));
        assert!(tau(0.5, 1.0).is_err());
        for x in [0.5, 7.9, 8.1, 30.0] {
            assert!(close(tau(1.0, x).unwrap(), beta(x).unwrap() - 1.0, 1e-13 * x.max(1.0)));
        }
    }

    #[test]
    fn tau_series_examples() {
        let g = special::EULER_GAMMA;
        let i100 = gap_via_tau_series(1.0, 100).unwrap();
        assert!(i100.contains(g));
        assert!(i100.width() < 1e-3);
        let i1 = gap_via_tau_series(1.0, 1).unwrap();
        assert!(i1.contains(g));
        let outer = Interval::new(
            0.5 * special::trigamma(1.0 + THIRD).unwrap(),
            0.5 * special::trigamma(beta(1.0).unwrap()).unwrap(),
        );
        let slack = 32.0 * f64::EPSILON * outer.upper;
        assert!(i1.lower >= outer.lower - slack && i1.upper <= outer.upper + slack);
        assert!(i100.is_within(&i1));
    }

    #[test]
    fn aux_examples() {
        assert_eq!(aux_eval(AuxFn::LowerH, 0.0).unwrap(), 0.0);
        assert_eq!(aux_eval(AuxFn::Theta, 0.0).unwrap(), 0.0);
        assert!(aux_eval(AuxFn::F, 0.0).is_err());
        assert!(aux_eval(AuxFn::UpperH, -1.0).is_err());
        let h1 = aux_eval(AuxFn::UpperH, 1.0).unwrap();
        let b = 19.0 / 15.0;
        assert!(close(h1, 2f64.ln() - 1.0 + 1.0 / (2.0 * b * b), 1e-15));
        assert!(close(h1, 0.004_781_529_590_416_223_5, 1e-15));
        assert!(close(aux_eval(AuxFn::UpperP, 1.0).unwrap(), -0.001_297_263_884_499_135, 1e-15));
        assert!(close(aux_eval(AuxFn::LowerP, 1.0).unwrap(), -0.006_852_819_440_054_690_6, 1e-15));
        assert!(close(aux_eval(AuxFn::Theta, 1.0).unwrap(), -0.008_127_443_033_663_600_6, 1e-15));
        assert!(close(aux_eval(AuxFn::F, 1e9).unwrap(), THIRD, 1e-9));
        assert!(AuxFn::parse("H") == Some(AuxFn::UpperH) && AuxFn::parse("h") == Some(AuxFn::LowerH));
        assert!(AuxFn::parse("q").is_none());
    }

    #[test]
    fn aux_series_match_direct_formula_at_switch() {
        let s = AUX_SERIES_RADIUS;
        let below = f64::from_bits(s.to_bits() - 1);
        for name in [AuxFn::Theta, AuxFn::LowerP] {
            let a = aux_eval(name, below).unwrap();
            let b = aux_eval(name, s).unwrap();
            assert!((a - b).abs() < 1e-9 * b.abs(), "{name}: {a} vs {b}");
        }
        let big = 1.0 / s;
        let above = f64::from_bits(big.to_bits() + 1);
        let a = aux_eval(AuxFn::UpperP, above).unwrap();
        let b = aux_eval(AuxFn::UpperP, big).unwrap();
        assert!((a - b).abs() < 1e-6 * b.abs(), "P: {a} vs {b}");
    }
}
