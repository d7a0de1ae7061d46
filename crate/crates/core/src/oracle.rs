//! Reference evaluations with explicit absolute error radii.
//!
//! Everything here is built from the product series of `1/Γ` and its
//! derivatives only:
//!
//! * the digamma gap `log x − ψ(x) = Σ_{k≥0} r(x+k)` with
//!   `r(z) = 1/z − log(1+1/z)` (the telescoped form of the digamma series),
//! * `Σ_{k≥0} (x+k)^{−(n+1)}` for the polygamma functions,
//! * `L(x) = Σ_{k≥0} [(x+k+½) log(1+1/(x+k)) − 1]` for log-gamma.
//!
//! The first terms are summed explicitly in double-double arithmetic until the
//! argument reaches [`SHIFT`]; the remaining tail is enclosed by the integral
//! test together with its Euler–Maclaurin corrections. All three summands are
//! completely monotone, so after any number of corrections the remainder has
//! the sign of the first omitted correction and is smaller in magnitude. The
//! bracket `[S_p, S_p + t_{p+1}]` is therefore rigorous.
//!
//! Radii also carry the rounding of the few f64 library calls (`ln`, `ln_1p`,
//! `exp`), charged at [`LIBM_ULPS`] units in the last place each, and the final
//! rounding of the double-double result to f64.
//!
//! A tolerance `eps` is met when `error_radius <= eps · max(1, |value|)`.

use serde::{Deserialize, Serialize};

use crate::bounds::Target;
use crate::dd::{Dd, DD_EPS};
use crate::{ulp, Error, Result};

/// Smallest tolerance any reference evaluation accepts.
pub const EPS_FLOOR: f64 = 1e-14;

/// Smallest tolerance accepted by [`ref_euler_gamma`].
pub const EULER_EPS_FLOOR: f64 = 1e-12;

/// Explicit terms are summed until the argument is at least this large.
pub const SHIFT: f64 = 20.0;

/// Error charged for each f64 `ln`, `ln_1p` or `exp` result, in ulps.
pub const LIBM_ULPS: f64 = 2.0;

/// Below this argument the per-term kernels fall back to f64 `ln_1p`.
const SERIES_MIN_ARG: f64 = 2.0;

/// Relative size at which a correction term is considered negligible.
const NEGLIGIBLE: f64 = 1e-33;

/// A real value with a rigorous absolute error radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBoundedValue {
    pub value: f64,
    pub error_radius: f64,
}

impl ErrorBoundedValue {
    pub fn lower(&self) -> f64 {
        self.value - self.error_radius
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error_radius
    }

    pub fn contains(&self, v: f64) -> bool {
        (v - self.value).abs() <= self.error_radius
    }

    pub fn intersects(&self, other: &ErrorBoundedValue) -> bool {
        (self.value - other.value).abs() <= self.error_radius + other.error_radius
    }
}

/// Internal enclosure: double-double midpoint with an f64 radius.
#[derive(Debug, Clone, Copy)]
struct Encl {
    mid: Dd,
    rad: f64,
    /// Sum of magnitudes of everything combined so far, for the arithmetic budget.
    mag: f64,
}

impl Encl {
    fn exact(mid: Dd) -> Self {
        Encl {
            mid,
            rad: 0.0,
            mag: mid.hi.abs(),
        }
    }

    fn add(self, o: Encl) -> Encl {
        Encl {
            mid: self.mid + o.mid,
            rad: self.rad + o.rad,
            mag: self.mag + o.mag,
        }
    }

    fn neg(self) -> Encl {
        Encl {
            mid: -self.mid,
            ..self
        }
    }

    fn scale(self, k: Dd) -> Encl {
        let a = k.hi.abs();
        Encl {
            mid: self.mid * k,
            rad: self.rad * a,
            mag: self.mag * a,
        }
    }

    /// Rounds to f64, folding in the arithmetic budget and the rounding itself.
    fn finish(self) -> ErrorBoundedValue {
        let arith = 64.0 * DD_EPS * self.mag;
        let rad = (self.rad + arith + self.mid.lo.abs()) * (1.0 + 4.0 * f64::EPSILON);
        ErrorBoundedValue {
            value: self.mid.hi,
            error_radius: rad,
        }
    }
}

/// f64 logarithm of a double-double, with its error.
fn ln_dd(y: Dd) -> Encl {
    let l = y.hi.ln();
    let corr = y.lo / y.hi;
    let mid = Dd::new(l) + corr;
    Encl {
        mid,
        rad: LIBM_ULPS * ulp(l) + corr * corr,
        mag: l.abs(),
    }
}

/// f64 `ln_1p` of a double-double, with its error.
fn ln_1p_dd(v: Dd) -> Encl {
    let l = v.hi.ln_1p();
    let corr = v.lo / (1.0 + v.hi);
    Encl {
        mid: Dd::new(l) + corr,
        rad: LIBM_ULPS * ulp(l) + corr * corr,
        mag: l.abs(),
    }
}

/// (numerator, denominator) of B_2 … B_36. B_36's numerator is not exactly
/// representable; it only ever enters a remainder bound.
const BERNOULLI: [(f64, f64); 18] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
    (2577687858367.0, 6.0),
    (-26315271553053477373.0, 1919190.0),
];

fn bernoulli(j: usize) -> Dd {
    let (n, d) = BERNOULLI[j - 1];
    Dd::ratio(n, d)
}

/// Sums `base + Σ_{j≥1} term(j)` where the corrections come from the
/// Euler–Maclaurin formula for a completely monotone summand. Returns the
/// enclosure `[S_p, S_p + t_{p+1}]` in midpoint–radius form.
fn em_tail(base: Dd, term: impl Fn(usize) -> Dd) -> Encl {
    let mut sum = base;
    let mut mag = base.hi.abs();
    for j in 1..BERNOULLI.len() {
        let t = term(j);
        if t.hi.abs() <= NEGLIGIBLE * sum.hi.abs() {
            return Encl {
                mid: sum + t * 0.5,
                rad: 0.5 * t.hi.abs() * (1.0 + 1e-12),
                mag,
            };
        }
        sum = sum + t;
        mag += t.hi.abs();
    }
    let t = term(BERNOULLI.len());
    Encl {
        mid: sum + t * 0.5,
        rad: 0.5 * t.hi.abs() * 1.01,
        mag,
    }
}

/// Number of explicit terms that lifts `x` to at least `target`.
fn shift_count(x: f64, target: f64) -> usize {
    if x >= target {
        0
    } else {
        (target - x).ceil() as usize
    }
}

/// `Σ_{m≥start} (−1)^m coef(m) v^m` for `0 < v <= 1/2`, truncated once terms are
/// negligible; the alternating remainder is bounded by the first omitted term.
fn alternating_dd(v: Dd, start: u32, coef: impl Fn(f64) -> Dd) -> Encl {
    let mut pow = v.powi(start);
    let mut sum = Dd::ZERO;
    let mut mag = 0.0;
    let mut m = start;
    loop {
        let c = coef(m as f64) * pow;
        if m > start && c.hi.abs() <= NEGLIGIBLE * sum.hi.abs() {
            return Encl {
                mid: sum,
                rad: c.hi.abs(),
                mag,
            };
        }
        sum = if m.is_multiple_of(2) { sum + c } else { sum - c };
        mag += c.hi.abs();
        pow = pow * v;
        m += 1;
    }
}

/// `r(z) = 1/z − log(1 + 1/z)`
fn kernel_r_encl(z: Dd) -> Encl {
    let v = z.recip();
    if z.hi >= SERIES_MIN_ARG {
        alternating_dd(v, 2, |m| Dd::ONE / m)
    } else {
        Encl::exact(v).add(ln_1p_dd(v).neg())
    }
}

/// `b(z) = (z + ½) log(1 + 1/z) − 1 = L(z) − L(z+1)`
fn binet_step_encl(z: Dd) -> Encl {
    let v = z.recip();
    if z.hi >= SERIES_MIN_ARG {
        alternating_dd(v, 2, |k| Dd::new(k - 1.0) / (2.0 * k * (k + 1.0)))
    } else {
        ln_1p_dd(v).scale(z + 0.5).add(Encl::exact(Dd::new(-1.0)))
    }
}

/// `log y − ψ(y)` for `y >= SHIFT` from the tail expansion alone.
fn gap_tail(y: Dd) -> Encl {
    let inv = y.recip();
    let inv2 = inv * inv;
    em_tail(inv * 0.5, |j| bernoulli(j) / (2.0 * j as f64) * inv2.powi(j as u32))
}

/// `log x − ψ(x) = Σ_{k<N} r(x+k) + gap(x+N)`
fn gap_encl(x: f64) -> Encl {
    let n = shift_count(x, SHIFT);
    let mut acc = Encl::exact(Dd::ZERO);
    for k in 0..n {
        acc = acc.add(kernel_r_encl(Dd::new(x) + k as f64));
    }
    acc.add(gap_tail(Dd::new(x) + n as f64))
}

/// `ψ(x) = log(x+N) − Σ_{k<N} 1/(x+k) − gap(x+N)`
fn digamma_encl(x: f64) -> Encl {
    let n = shift_count(x, SHIFT);
    let mut acc = Encl::exact(Dd::ZERO);
    for k in 0..n {
        acc = acc.add(Encl::exact((Dd::new(x) + k as f64).recip()));
    }
    let y = Dd::new(x) + n as f64;
    ln_dd(y).add(acc.neg()).add(gap_tail(y).neg())
}

/// `Σ_{k≥0} (x+k)^{−(n+1)}`
fn zeta_sum_encl(n: u32, x: f64) -> Encl {
    let nf = n as f64;
    let count = shift_count(x, SHIFT + 2.0 * nf);
    let mut acc = Encl::exact(Dd::ZERO);
    for k in 0..count {
        acc = acc.add(Encl::exact((Dd::new(x) + k as f64).recip().powi(n + 1)));
    }
    let y = Dd::new(x) + count as f64;
    let inv = y.recip();
    let inv2 = inv * inv;
    let lead = inv.powi(n);
    let base = lead / nf + lead * inv * 0.5;
    // a_j = (n+1)_{2j−1} / (2j)!
    let coef = |j: usize| {
        let mut a = Dd::new(nf + 1.0) / 2.0;
        for i in 1..j {
            let jj = 2.0 * i as f64;
            a = a * Dd::new((nf + jj) * (nf + jj + 1.0)) / ((jj + 1.0) * (jj + 2.0));
        }
        a
    };
    acc.add(em_tail(base, |j| {
        bernoulli(j) * coef(j) * lead * inv2.powi(j as u32)
    }))
}

/// `L(x) = log Γ(x) − (x − ½) log x + x − ½ log 2π`
fn binet_encl(x: f64) -> Encl {
    let n = shift_count(x, SHIFT);
    let mut acc = Encl::exact(Dd::ZERO);
    for k in 0..n {
        acc = acc.add(binet_step_encl(Dd::new(x) + k as f64));
    }
    let y = Dd::new(x) + n as f64;
    let inv = y.recip();
    let inv2 = inv * inv;
    acc.add(em_tail(Dd::ZERO, |j| {
        let jj = 2.0 * j as f64;
        bernoulli(j) / (jj * (jj - 1.0)) * inv * inv2.powi(j as u32 - 1)
    }))
}

/// `½ log 2π = 1 − L(1)`, from `log Γ(1) = 0`.
fn half_log_two_pi_encl() -> Encl {
    Encl::exact(Dd::ONE).add(binet_encl(1.0).neg())
}

/// `log Γ(x) + shift·log x`; `shift` is 0 for `log Γ(x)` and 1 for `log Γ(x+1)`.
fn log_gamma_encl(x: f64, shift: f64) -> Encl {
    let coef = Dd::new(x) - 0.5 + shift;
    ln_dd(Dd::new(x))
        .scale(coef)
        .add(Encl::exact(Dd::new(-x)))
        .add(half_log_two_pi_encl())
        .add(binet_encl(x))
}

/// `exp` of an enclosure, in f64.
fn exp_encl(e: Encl) -> ErrorBoundedValue {
    let l = e.finish();
    let v = l.value.exp();
    // exp(l ± δ) ⊆ v·[e^{−δ}, e^{δ}] with δ < 1 here; e^δ − 1 <= δ·e^δ.
    let d = l.error_radius;
    let spread = v * d * d.exp();
    ErrorBoundedValue {
        value: v,
        error_radius: (spread + LIBM_ULPS * ulp(v)) * (1.0 + 4.0 * f64::EPSILON),
    }
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, x, "x > 0"))
    }
}

fn check_eps(eps: f64, floor: f64) -> Result<()> {
    if eps >= floor && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::UnreachableTolerance {
            requested: eps,
            floor,
            achieved: f64::NAN,
        })
    }
}

fn accept(v: ErrorBoundedValue, eps: f64) -> Result<ErrorBoundedValue> {
    if v.value.is_finite() && v.error_radius <= eps * v.value.abs().max(1.0) {
        Ok(v)
    } else {
        Err(Error::UnreachableTolerance {
            requested: eps,
            floor: EPS_FLOOR,
            achieved: v.error_radius,
        })
    }
}

/// `ψ(x)` from the shifted digamma series.
pub fn ref_digamma(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_digamma", x)?;
    check_eps(eps, EPS_FLOOR)?;
    accept(digamma_encl(x).finish(), eps)
}

/// `log x − ψ(x)`, summed from positive terms so that no cancellation occurs.
pub fn ref_digamma_gap(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_digamma_gap", x)?;
    check_eps(eps, EPS_FLOOR)?;
    accept(gap_encl(x).finish(), eps)
}

/// `ψ⁽ⁿ⁾(x)`, `n >= 1`.
pub fn ref_polygamma(n: u32, x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    if n < 1 {
        return Err(Error::domain("ref_polygamma", n as f64, "order n >= 1"));
    }
    check_x("ref_polygamma", x)?;
    check_eps(eps, EPS_FLOOR)?;
    let factorial = (1..=n).fold(Dd::ONE, |acc, k| acc * k as f64);
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let e = zeta_sum_encl(n, x).scale(factorial * sign);
    accept(e.finish(), eps)
}

/// `ψ′(x)`.
pub fn ref_trigamma(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_trigamma", x)?;
    ref_polygamma(1, x, eps)
}

/// `log Γ(x)`.
pub fn ref_log_gamma(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_log_gamma", x)?;
    check_eps(eps, EPS_FLOOR)?;
    accept(log_gamma_encl(x, 0.0).finish(), eps)
}

/// `log Γ(x+1)`, formed without rounding `x + 1`.
pub fn ref_log_gamma_shifted(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_log_gamma_shifted", x)?;
    check_eps(eps, EPS_FLOOR)?;
    accept(log_gamma_encl(x, 1.0).finish(), eps)
}

/// `Γ(x)`.
pub fn ref_gamma(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_gamma", x)?;
    check_eps(eps, EPS_FLOOR)?;
    let v = exp_encl(log_gamma_encl(x, 0.0));
    if !v.value.is_finite() {
        return Err(Error::Overflow("ref_gamma"));
    }
    accept(v, eps)
}

/// `Γ(x)/(√(2π) x^x e^{−x}) = exp(L(x) − ½ log x)`.
pub fn ref_stirling_ratio(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_stirling_ratio", x)?;
    check_eps(eps, EPS_FLOOR)?;
    let e = binet_encl(x).add(ln_dd(Dd::new(x)).scale(Dd::new(-0.5)));
    accept(exp_encl(e), eps)
}

/// `Γ(x)/(√(2π) x^{x−½} e^{−x}) = exp(L(x))`.
pub fn ref_stirling_ratio_normalized(x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    check_x("ref_stirling_ratio_normalized", x)?;
    check_eps(eps, EPS_FLOOR)?;
    accept(exp_encl(binet_encl(x)), eps)
}

/// `log 2π`, as twice the Stirling constant recovered from `log Γ(1) = 0`.
pub fn ref_log_two_pi(eps: f64) -> Result<ErrorBoundedValue> {
    check_eps(eps, EPS_FLOOR)?;
    accept(half_log_two_pi_encl().scale(Dd::new(2.0)).finish(), eps)
}

/// Euler's constant `γ = −ψ(1)`, cross-checked against the harmonic-sum
/// construction of [`ref_euler_gamma_harmonic`].
pub fn ref_euler_gamma(eps: f64) -> Result<ErrorBoundedValue> {
    check_eps(eps, EULER_EPS_FLOOR)?;
    let primary = accept(gap_encl(1.0).finish(), eps)?;
    let check = ref_euler_gamma_harmonic(eps)?;
    if !primary.intersects(&check) {
        return Err(Error::Inconsistent(format!(
            "γ from the digamma series {} ± {:e} vs harmonic sums {} ± {:e}",
            primary.value, primary.error_radius, check.value, check.error_radius
        )));
    }
    Ok(primary)
}

/// `γ` from `H_n − log(n + ½)`, whose excess over `γ` lies strictly between
/// `1/(24(n+1)²)` and `1/(24n²)`.
pub fn ref_euler_gamma_harmonic(eps: f64) -> Result<ErrorBoundedValue> {
    check_eps(eps, EULER_EPS_FLOOR)?;
    // bracket width ≈ 1/(12 n³)
    let n = ((1.0 / (3.0 * eps)).cbrt().ceil() as u64).max(10);
    let mut h = Dd::ZERO;
    for k in (1..=n).rev() {
        h = h + Dd::new(k as f64).recip();
    }
    let nf = n as f64;
    let base = Encl {
        mid: h,
        rad: 0.0,
        mag: h.hi,
    }
    .add(ln_dd(Dd::new(nf + 0.5)).neg());
    let hi_corr = Dd::ONE / (24.0 * (nf + 1.0) * (nf + 1.0));
    let lo_corr = Dd::ONE / (24.0 * nf * nf);
    let mid = (hi_corr + lo_corr) * 0.5;
    let half_width = ((lo_corr - hi_corr) * 0.5).hi;
    let e = base.add(Encl {
        mid: -mid,
        rad: half_width,
        mag: mid.hi,
    });
    accept(e.finish(), eps)
}

/// Reference value of a bound family's target quantity, in the space the
/// verifier compares in (log space for `Γ(x+1)`).
pub fn ref_target(target: Target, x: f64, eps: f64) -> Result<ErrorBoundedValue> {
    match target {
        Target::DigammaGap => ref_digamma_gap(x, eps),
        Target::StirlingRatio => ref_stirling_ratio(x, eps),
        Target::GammaShifted => ref_log_gamma_shifted(x, eps),
    }
}
