//! Log-gamma, digamma, polygamma, the Stirling ratio and the two
//! cancellation-prone kernels `r(x) = 1/x − log(1+1/x)` and
//! `s(x) = (x+1)·log(1+1/x) − 1`.
//!
//! Every evaluator shifts its argument upward with the functional recurrence
//! until it reaches [`SHIFT_TARGET`] and then sums the Euler–Maclaurin tail of
//! the defining series in closed form (the Stirling / de Moivre expansions).
//! Non-positive arguments are rejected; there is no reflection.

use crate::{Error, Result};

/// Arguments are shifted by recurrence until they are at least this large.
pub const SHIFT_TARGET: f64 = 16.0;

/// Above this argument the kernels switch from the direct formula to the
/// alternating series in `u = 1/x`.
pub const KERNEL_SERIES_THRESHOLD: f64 = 8.0;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const LOG_TWO_PI: f64 = 1.837_877_066_409_345_5;
pub const HALF_LOG_TWO_PI: f64 = LOG_TWO_PI / 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    pub log_two_pi: f64,
    pub half_log_two_pi: f64,
}

pub const CONSTANTS: Constants = Constants {
    euler_gamma: EULER_GAMMA,
    log_two_pi: LOG_TWO_PI,
    half_log_two_pi: HALF_LOG_TWO_PI,
};

/// B_2, B_4, …, B_20.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Number of Bernoulli corrections used at `y >= SHIFT_TARGET`. The first
/// omitted term is below 1e-20 relative there.
const CORRECTIONS: usize = 8;

fn check_positive(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, x, "x > 0"))
    }
}

/// `log Γ(x) − (x − ½)·log x + x − ½·log 2π` for `x > 0`.
///
/// This is the correction term of Stirling's formula. It is positive,
/// decreasing, and behaves like `1/(12x)` for large `x`, so it is evaluated
/// without the cancellation that `log_gamma` would suffer.
pub fn binet(x: f64) -> Result<f64> {
    check_positive("binet", x)?;
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_TARGET {
        acc += binet_step(y);
        y += 1.0;
    }
    Ok(acc + binet_asymptotic(y))
}

/// `binet(z) − binet(z+1) = (z + ½)·log(1 + 1/z) − 1`.
fn binet_step(z: f64) -> f64 {
    if z > KERNEL_SERIES_THRESHOLD {
        // Σ_{k≥2} (−1)^k (k−1)/(2k(k+1)) u^k
        let u = 1.0 / z;
        let mut term_pow = u * u;
        let mut sum = 0.0;
        for k in 2..60 {
            let kf = k as f64;
            let c = (kf - 1.0) / (2.0 * kf * (kf + 1.0));
            let t = if k % 2 == 0 { c * term_pow } else { -c * term_pow };
            sum += t;
            if t.abs() < sum.abs() * 1e-18 {
                break;
            }
            term_pow *= u;
        }
        sum
    } else {
        (z + 0.5) * (1.0 / z).ln_1p() - 1.0
    }
}

fn binet_asymptotic(y: f64) -> f64 {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut p = inv;
    let mut sum = 0.0;
    for (j, b) in BERNOULLI.iter().take(CORRECTIONS).enumerate() {
        let n = 2.0 * (j as f64 + 1.0);
        sum += b / (n * (n - 1.0)) * p;
        p *= inv2;
    }
    sum
}

/// `log Γ(x)` for `x > 0`, as Stirling's leading terms plus [`binet`]. Near
/// the zeros at 1 and 2 the error stays at a few ulps of 1.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("log_gamma", x)?;
    Ok((x - 0.5) * x.ln() - x + HALF_LOG_TWO_PI + binet(x)?)
}

/// `Γ(x)` for `x > 0`; overflows past `x ≈ 171.6`.
pub fn gamma(x: f64) -> Result<f64> {
    let v = log_gamma(x)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("gamma"))
    }
}

/// `ψ(x) = Γ′(x)/Γ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", x)?;
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_TARGET {
        acc += 1.0 / y;
        y += 1.0;
    }
    Ok(y.ln() - gap_asymptotic(y) - acc)
}

/// `log y − ψ(y)` for `y >= SHIFT_TARGET`.
fn gap_asymptotic(y: f64) -> f64 {
    let inv2 = 1.0 / (y * y);
    let mut p = inv2;
    let mut tail = 0.0;
    for (j, b) in BERNOULLI.iter().take(CORRECTIONS).enumerate() {
        let n = 2.0 * (j as f64 + 1.0);
        tail += b / n * p;
        p *= inv2;
    }
    0.5 / y + tail
}

/// `log x − ψ(x)`, summed as `Σ r(x+k)` plus the asymptotic tail so that the
/// small difference is never formed by subtraction.
pub fn digamma_gap(x: f64) -> Result<f64> {
    check_positive("digamma_gap", x)?;
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_TARGET {
        acc += kernel_r(y)?;
        y += 1.0;
    }
    Ok(acc + gap_asymptotic(y))
}

/// `ψ′(x)`.
pub fn trigamma(x: f64) -> Result<f64> {
    polygamma(1, x)
}

/// `ψ⁽ⁿ⁾(x) = (−1)ⁿ⁻¹ n! Σ_{k≥0} (x+k)^−(n+1)` for `n ≥ 1`, `x > 0`.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("polygamma", n as f64, "order n >= 1"));
    }
    check_positive("polygamma", x)?;
    let nf = n as f64;
    let target = SHIFT_TARGET.max(2.0 * nf);
    let mut acc = 0.0;
    let mut y = x;
    while y < target {
        acc += y.powf(-(nf + 1.0));
        y += 1.0;
    }
    // Σ_{k≥0} (y+k)^−(n+1) ≈ y^−n/n + y^−(n+1)/2 + Σ_j B_2j (n+1)_{2j−1}/(2j)! y^−(n+2j)
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let lead = y.powf(-nf);
    let mut tail = lead / nf + 0.5 * lead * inv;
    let mut coef = (nf + 1.0) / 2.0;
    let mut p = lead * inv2;
    for (j, b) in BERNOULLI.iter().take(CORRECTIONS).enumerate() {
        tail += b * coef * p;
        let jj = 2.0 * (j as f64 + 1.0);
        coef *= (nf + jj) * (nf + jj + 1.0) / ((jj + 1.0) * (jj + 2.0));
        p *= inv2;
    }
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let v = sign * factorial * (acc + tail);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("polygamma"))
    }
}

/// `Γ(x) / (√(2π) x^x e^{−x})`, evaluated in log space.
///
/// This ratio behaves like `x^{−1/2}` for large `x`; the normalised form that
/// tends to one is [`stirling_ratio_normalized`].
pub fn stirling_ratio(x: f64) -> Result<f64> {
    check_positive("stirling_ratio", x)?;
    let v = (binet(x)? - 0.5 * x.ln()).exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("stirling_ratio"))
    }
}

/// `Γ(x) / (√(2π) x^{x−½} e^{−x}) = exp(binet(x))`; greater than one,
/// strictly decreasing, and tends to one.
pub fn stirling_ratio_normalized(x: f64) -> Result<f64> {
    check_positive("stirling_ratio_normalized", x)?;
    let v = binet(x)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("stirling_ratio_normalized"))
    }
}

/// Sums an alternating series `Σ_{m≥start} (−1)^m coef(m) u^m` until the
/// next term is negligible. The remainder is bounded by the first omitted term.
fn alternating_series(u: f64, start: u32, coef: impl Fn(f64) -> f64) -> f64 {
    let mut pow = u.powi(start as i32);
    let mut sum = 0.0;
    for m in start..start + 64 {
        let c = coef(m as f64) * pow;
        let t = if m % 2 == 0 { c } else { -c };
        sum += t;
        if c < sum.abs() * 1e-18 {
            break;
        }
        pow *= u;
    }
    sum
}

/// `r(x) = 1/x − log(1 + 1/x)`, positive for `x > 0`, `~ 1/(2x²)` for large `x`.
pub fn kernel_r(x: f64) -> Result<f64> {
    check_positive("kernel_r", x)?;
    if x > KERNEL_SERIES_THRESHOLD {
        Ok(alternating_series(1.0 / x, 2, |m| 1.0 / m))
    } else {
        let u = 1.0 / x;
        Ok(u - u.ln_1p())
    }
}

/// `s(x) = (x+1)·log(1 + 1/x) − 1`, positive for `x > 0`, `~ 1/(2x)` for large `x`.
pub fn kernel_s(x: f64) -> Result<f64> {
    check_positive("kernel_s", x)?;
    if x > KERNEL_SERIES_THRESHOLD {
        // Σ_{m≥1} (−1)^{m+1} u^m / (m(m+1))
        Ok(-alternating_series(1.0 / x, 1, |m| 1.0 / (m * (m + 1.0))))
    } else {
        Ok((x + 1.0) * (1.0 / x).ln_1p() - 1.0)
    }
}

/// `(q, m)` with `q = 2x²·r(x)` and `m = x·(1 − q)`, each summed from its own
/// series so that `1 − q` never has to be formed by subtraction. Valid only
/// above [`KERNEL_SERIES_THRESHOLD`].
pub(crate) fn kernel_r_scaled(x: f64) -> (f64, f64) {
    debug_assert!(x > KERNEL_SERIES_THRESHOLD);
    let u = 1.0 / x;
    // m = Σ_{k≥3} (−1)^{k+1} 2 u^{k−3}/k = 2/3 − u/2 + 2u²/5 − …
    let m = {
        let mut pow = 1.0;
        let mut sum = 0.0;
        for k in 3..70 {
            let c = 2.0 / k as f64 * pow;
            let t = if k % 2 == 1 { c } else { -c };
            sum += t;
            if c < sum.abs() * 1e-18 {
                break;
            }
            pow *= u;
        }
        sum
    };
    (1.0 - u * m, m)
}
