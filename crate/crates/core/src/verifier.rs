//! Grid sweeps that check every bound family against the oracle, tightness
//! comparisons between families, and the monotonicity, sign, limit and
//! identity checks the bounds rest on.
//!
//! Grid points are evaluated in parallel and collected in abscissa order, so
//! reports are bit-identical across runs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, AuxFn, BoundFamily, Interval, Target};
use crate::oracle::{self, ErrorBoundedValue};
use crate::special;
use crate::{ulp, Error, Result};

/// Tolerance at which sweep targets are evaluated.
pub const SWEEP_EPS: f64 = 1e-12;

/// Monotonicity noise floor, in ulps of the larger neighbour.
pub const NOISE_ULPS: f64 = 8.0;

/// Probe arguments used by [`limit_schedule`].
pub const LIMIT_PROBES: [f64; 3] = [1e2, 1e3, 1e4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    #[serde(alias = "log")]
    Logarithmic,
}

impl FromStr for Spacing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" | "logarithmic" => Ok(Spacing::Logarithmic),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize, spacing: Spacing) -> Self {
        GridSpec {
            x_min,
            x_max,
            points,
            spacing,
        }
    }

    pub fn log(x_min: f64, x_max: f64, points: usize) -> Self {
        Self::new(x_min, x_max, points, Spacing::Logarithmic)
    }

    pub fn linear(x_min: f64, x_max: f64, points: usize) -> Self {
        Self::new(x_min, x_max, points, Spacing::Linear)
    }

    /// log[1e-3, 1e4] × 500
    pub fn default_grid() -> Self {
        Self::log(1e-3, 1e4, 500)
    }

    /// The default grid with its lower end raised to the family's domain
    /// minimum where necessary.
    pub fn default_for(family: BoundFamily) -> Self {
        let mut g = Self::default_grid();
        g.x_min = g.x_min.max(family.domain_min());
        g
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_min.is_finite() && self.x_max.is_finite()) {
            return Err(Error::InvalidGrid("endpoints must be finite".into()));
        }
        if !(self.x_min > 0.0) {
            return Err(Error::domain("grid", self.x_min, "x_min > 0"));
        }
        if !(self.x_min < self.x_max) {
            return Err(Error::InvalidGrid(format!(
                "x_min = {} must be below x_max = {}",
                self.x_min, self.x_max
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        Ok(())
    }

    /// Strictly increasing abscissae with both endpoints hit exactly.
    pub fn abscissae(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let n = self.points;
        let last = (n - 1) as f64;
        let xs: Vec<f64> = (0..n)
            .map(|i| {
                if i == 0 {
                    return self.x_min;
                }
                if i == n - 1 {
                    return self.x_max;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.x_min + t * (self.x_max - self.x_min),
                    Spacing::Logarithmic => {
                        let (a, b) = (self.x_min.ln(), self.x_max.ln());
                        (a + t * (b - a)).exp()
                    }
                }
            })
            .collect();
        if xs.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidGrid(
                "too many points for the range: abscissae not strictly increasing".into(),
            ));
        }
        Ok(xs)
    }
}

/// Margin an inequality must clear at a point: ten times the oracle radius
/// plus four ulps of the bound value.
pub fn strictness_margin(target: &ErrorBoundedValue, bound: f64) -> f64 {
    10.0 * (target.error_radius + 4.0 * ulp(bound))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: f64,
    pub target: ErrorBoundedValue,
    pub interval: Interval,
    /// `target − lower`
    pub lower_margin: f64,
    /// `upper − target`
    pub upper_margin: f64,
    pub lower_rel_margin: f64,
    pub upper_rel_margin: f64,
    pub required_lower: f64,
    pub required_upper: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub min_margin: f64,
    pub argmin_x: f64,
    pub min_rel_margin: f64,
    pub all_pass: bool,
    pub failures: usize,
    /// Abscissae of failing points.
    pub failing_x: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub family: BoundFamily,
    pub target: Target,
    pub grid: GridSpec,
    pub records: Vec<PointRecord>,
    pub summary: SweepSummary,
}

fn check_grid_domain(xs: &[f64], family: BoundFamily) -> Result<()> {
    xs.iter().try_for_each(|&x| family.check_domain(x))
}

fn record_at(x: f64, family: BoundFamily) -> Result<PointRecord> {
    let target = oracle::ref_target(family.target(), x, SWEEP_EPS)?;
    let interval = bounds::family_bounds(x, family)?;
    let lower_margin = target.value - interval.lower;
    let upper_margin = interval.upper - target.value;
    let required_lower = strictness_margin(&target, interval.lower);
    let required_upper = strictness_margin(&target, interval.upper);
    let scale = target.value.abs();
    Ok(PointRecord {
        x,
        target,
        interval,
        lower_margin,
        upper_margin,
        lower_rel_margin: lower_margin / scale,
        upper_rel_margin: upper_margin / scale,
        required_lower,
        required_upper,
        pass: lower_margin > required_lower && upper_margin > required_upper,
    })
}

/// Checks `lower < target < upper` at every abscissa.
pub fn sweep(grid: &GridSpec, family: BoundFamily) -> Result<InequalityReport> {
    let xs = grid.abscissae()?;
    check_grid_domain(&xs, family)?;
    let records = xs
        .par_iter()
        .map(|&x| record_at(x, family))
        .collect::<Result<Vec<_>>>()?;

    let mut min_margin = f64::INFINITY;
    let mut argmin_x = f64::NAN;
    let mut min_rel_margin = f64::INFINITY;
    let mut failing_x = Vec::new();
    for r in &records {
        let m = r.lower_margin.min(r.upper_margin);
        if m < min_margin || argmin_x.is_nan() {
            min_margin = m;
            argmin_x = r.x;
        }
        min_rel_margin = min_rel_margin.min(r.lower_rel_margin.min(r.upper_rel_margin));
        if !r.pass {
            failing_x.push(r.x);
        }
    }
    Ok(InequalityReport {
        family,
        target: family.target(),
        grid: *grid,
        summary: SweepSummary {
            min_margin,
            argmin_x,
            min_rel_margin,
            all_pass: failing_x.is_empty(),
            failures: failing_x.len(),
            failing_x,
        },
        records,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
    Width,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            "width" => Ok(Side::Width),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
            Side::Width => "width",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub x: f64,
    pub target: f64,
    /// `target − lower`, `upper − target` or `upper − lower` per family.
    pub gap_by_family: BTreeMap<BoundFamily, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonSummary {
    /// Number of rows in which each family has the smallest gap (ties count
    /// for every tied family).
    pub tightest_count: BTreeMap<BoundFamily, usize>,
    /// Rows whose gaps include a negative value, i.e. a violated bound.
    pub negative_gaps: usize,
    pub non_finite: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub families: Vec<BoundFamily>,
    pub target: Target,
    pub side: Side,
    pub grid: GridSpec,
    pub rows: Vec<ComparisonRow>,
    pub summary: ComparisonSummary,
}

/// Tabulates how far each family sits from the target. No ordering between
/// families is asserted.
pub fn compare(grid: &GridSpec, families: &[BoundFamily], side: Side) -> Result<ComparisonTable> {
    let Some(&first) = families.first() else {
        return Err(Error::InvalidGrid("no families given".into()));
    };
    let target = first.target();
    if let Some(other) = families.iter().find(|f| f.target() != target) {
        return Err(Error::MixedTargets(format!(
            "{} bounds {}, {} bounds {}",
            first,
            target.name(),
            other,
            other.target().name()
        )));
    }
    let xs = grid.abscissae()?;
    for &f in families {
        check_grid_domain(&xs, f)?;
    }

    let rows = xs
        .par_iter()
        .map(|&x| {
            let t = oracle::ref_target(target, x, SWEEP_EPS)?.value;
            let mut gaps = BTreeMap::new();
            for &f in families {
                let iv = bounds::family_bounds(x, f)?;
                let g = match side {
                    Side::Lower => t - iv.lower,
                    Side::Upper => iv.upper - t,
                    Side::Width => iv.width(),
                };
                gaps.insert(f, g);
            }
            Ok(ComparisonRow {
                x,
                target: t,
                gap_by_family: gaps,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut tightest_count: BTreeMap<BoundFamily, usize> = families.iter().map(|&f| (f, 0)).collect();
    let mut negative_gaps = 0;
    let mut non_finite = 0;
    for row in &rows {
        let best = row.gap_by_family.values().copied().fold(f64::INFINITY, f64::min);
        for (f, &g) in &row.gap_by_family {
            if g == best {
                *tightest_count.entry(*f).or_default() += 1;
            }
        }
        if row.gap_by_family.values().any(|&g| g < 0.0) {
            negative_gaps += 1;
        }
        if row.gap_by_family.values().any(|g| !g.is_finite()) || !row.target.is_finite() {
            non_finite += 1;
        }
    }
    Ok(ComparisonTable {
        families: families.to_vec(),
        target,
        side,
        grid: *grid,
        rows,
        summary: ComparisonSummary {
            tightest_count,
            negative_gaps,
            non_finite,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "increasing" | "inc" => Ok(Direction::Increasing),
            "decreasing" | "dec" => Ok(Direction::Decreasing),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Functions whose monotonicity can be checked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MonotoneFn {
    Aux(AuxFn),
    Digamma,
    Trigamma,
    Beta,
    /// `k ↦ τ(k, x)` at fixed `x`; the grid runs over `k`.
    TauInK(f64),
}

impl MonotoneFn {
    /// Accepts the auxiliary names (`f`, `h`, `theta`, `H`, `P`, `p`),
    /// `digamma`, `trigamma`, `beta` and `tau_in_k:<x>`.
    pub fn parse(s: &str) -> Result<MonotoneFn> {
        if let Some(a) = AuxFn::parse(s) {
            return Ok(MonotoneFn::Aux(a));
        }
        match s {
            "digamma" => Ok(MonotoneFn::Digamma),
            "trigamma" => Ok(MonotoneFn::Trigamma),
            "beta" => Ok(MonotoneFn::Beta),
            _ => {
                let x = s
                    .strip_prefix("tau_in_k:")
                    .or_else(|| s.strip_prefix("tau-in-k:"))
                    .and_then(|v| v.parse::<f64>().ok())
                    .ok_or_else(|| Error::UnknownName(s.to_string()))?;
                Ok(MonotoneFn::TauInK(x))
            }
        }
    }

    pub fn eval(self, t: f64) -> Result<f64> {
        match self {
            MonotoneFn::Aux(a) => bounds::aux_eval(a, t),
            MonotoneFn::Digamma => special::digamma(t),
            MonotoneFn::Trigamma => special::trigamma(t),
            MonotoneFn::Beta => bounds::beta(t),
            MonotoneFn::TauInK(x) => bounds::tau(t, x),
        }
    }
}

/// Whether consecutive values on `grid` change with the expected strict sign
/// by more than [`NOISE_ULPS`] ulps of the larger neighbour. Steps inside the
/// noise floor count as failures.
pub fn monotonicity_check(func: MonotoneFn, grid: &GridSpec, expected: Direction) -> Result<bool> {
    let xs = grid.abscissae()?;
    let ys = xs
        .par_iter()
        .map(|&x| func.eval(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(is_strictly_monotone(&ys, expected))
}

pub(crate) fn is_strictly_monotone(ys: &[f64], expected: Direction) -> bool {
    ys.windows(2).all(|w| {
        let floor = NOISE_ULPS * ulp(w[0].abs().max(w[1].abs()));
        let d = match expected {
            Direction::Increasing => w[1] - w[0],
            Direction::Decreasing => w[0] - w[1],
        };
        d > floor
    })
}

/// `τ(k, x)` strictly increasing over the integer `k` values `ks`.
pub fn tau_monotone_in_k(x: f64, ks: &[f64]) -> Result<bool> {
    let ys = ks.iter().map(|&k| bounds::tau(k, x)).collect::<Result<Vec<_>>>()?;
    Ok(is_strictly_monotone(&ys, Direction::Increasing))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitName {
    /// `β(x) − x → 1/3`
    BetaOffset,
    /// `δ*(x) − x → 1/3`
    DeltaOffset,
    /// `f(u) → 1/3`
    FLimit,
    /// `τ(k, 1) − 1 → −2/3` as `k → ∞`
    TauLimit,
    /// `Γ(x)/(√(2π) x^{x−½} e^{−x}) → 1`
    StirlingLimit,
    /// `x (log x − ψ(x)) → 1/2`
    GapLeading,
    /// `x (β(x) − x − 1/3) → −1/12`
    BetaCurvature,
}

impl LimitName {
    pub const ALL: [LimitName; 7] = [
        LimitName::BetaOffset,
        LimitName::DeltaOffset,
        LimitName::FLimit,
        LimitName::TauLimit,
        LimitName::StirlingLimit,
        LimitName::GapLeading,
        LimitName::BetaCurvature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LimitName::BetaOffset => "beta_offset",
            LimitName::DeltaOffset => "delta_offset",
            LimitName::FLimit => "f_limit",
            LimitName::TauLimit => "tau_limit",
            LimitName::StirlingLimit => "stirling_limit",
            LimitName::GapLeading => "gap_leading",
            LimitName::BetaCurvature => "beta_curvature",
        }
    }

    pub fn expected(self) -> f64 {
        match self {
            LimitName::BetaOffset | LimitName::DeltaOffset | LimitName::FLimit => 1.0 / 3.0,
            LimitName::TauLimit => -2.0 / 3.0,
            LimitName::StirlingLimit => 1.0,
            LimitName::GapLeading => 0.5,
            LimitName::BetaCurvature => -1.0 / 12.0,
        }
    }

    fn observe(self, probe: f64) -> Result<f64> {
        const TAU_X: f64 = 1.0;
        Ok(match self {
            LimitName::BetaOffset => bounds::beta(probe)? - probe,
            LimitName::DeltaOffset => bounds::delta_star(probe)? - probe,
            LimitName::FLimit => bounds::aux_eval(AuxFn::F, probe)?,
            LimitName::TauLimit => bounds::tau(probe, TAU_X)? - TAU_X,
            LimitName::StirlingLimit => special::stirling_ratio_normalized(probe)?,
            LimitName::GapLeading => probe * oracle::ref_digamma_gap(probe, SWEEP_EPS)?.value,
            LimitName::BetaCurvature => probe * (bounds::aux_eval(AuxFn::F, probe)? - 1.0 / 3.0),
        })
    }
}

impl FromStr for LimitName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LimitName::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitResult {
    pub name: LimitName,
    pub probe: f64,
    pub observed: f64,
    pub expected: f64,
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Tolerance at a probe: `1/probe`, so 1e-3 at 1e3.
pub fn limit_tolerance(probe: f64) -> f64 {
    1.0 / probe
}

pub fn limit_check(name: LimitName, probe: f64) -> Result<LimitResult> {
    if !(probe >= 1.0 && probe.is_finite()) {
        return Err(Error::domain("limit_check", probe, "probe >= 1"));
    }
    let observed = name.observe(probe)?;
    let expected = name.expected();
    let error = (observed - expected).abs();
    let tolerance = limit_tolerance(probe);
    Ok(LimitResult {
        name,
        probe,
        observed,
        expected,
        error,
        tolerance,
        pass: error < tolerance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitSchedule {
    pub name: LimitName,
    pub results: Vec<LimitResult>,
    pub improving: bool,
    pub pass: bool,
}

/// Runs [`limit_check`] over [`LIMIT_PROBES`] and requires the error to shrink
/// from each probe to the next.
pub fn limit_schedule(name: LimitName) -> Result<LimitSchedule> {
    let results = LIMIT_PROBES
        .iter()
        .map(|&p| limit_check(name, p))
        .collect::<Result<Vec<_>>>()?;
    let improving = results.windows(2).all(|w| w[1].error < w[0].error);
    let pass = improving && results.iter().all(|r| r.pass);
    Ok(LimitSchedule {
        name,
        results,
        improving,
        pass,
    })
}

/// Relative tolerance for the recurrence identities.
pub const IDENTITY_TOL: f64 = 1e-10;

/// Number of explicit terms used for the τ-series containment check.
pub const TAU_SERIES_TERMS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub x: f64,
    pub identity: String,
    pub residual: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub points: usize,
    pub failures: Vec<IdentityFailure>,
    pub all_pass: bool,
}

fn scaled(values: &[f64]) -> f64 {
    IDENTITY_TOL * values.iter().fold(1.0f64, |m, v| m.max(v.abs()))
}

/// Recurrence residuals at `x` as `(identity, residual, tolerance)`.
pub fn recurrence_residuals(x: f64) -> Result<Vec<(&'static str, f64, f64)>> {
    let lg0 = special::log_gamma(x)?;
    let lg1 = special::log_gamma(x + 1.0)?;
    let lx = x.ln();
    let d0 = special::digamma(x)?;
    let d1 = special::digamma(x + 1.0)?;
    let t0 = special::trigamma(x)?;
    let t1 = special::trigamma(x + 1.0)?;
    let inv = 1.0 / x;
    Ok(vec![
        ("log_gamma(x+1) = log_gamma(x) + log x", lg1 - lg0 - lx, scaled(&[lg0, lg1, lx])),
        ("digamma(x+1) = digamma(x) + 1/x", d1 - d0 - inv, scaled(&[d0, d1, inv])),
        ("trigamma(x+1) = trigamma(x) - 1/x^2", t1 - t0 + inv * inv, scaled(&[t0, t1, inv * inv])),
    ])
}

/// Recurrences for `Γ`, `ψ`, `ψ′` plus containment of the oracle gap in the
/// τ-series interval at every abscissa.
pub fn identity_check(grid: &GridSpec) -> Result<IdentityReport> {
    let xs = grid.abscissae()?;
    let per_point = xs
        .par_iter()
        .map(|&x| -> Result<Vec<IdentityFailure>> {
            let mut out = Vec::new();
            for (name, residual, tolerance) in recurrence_residuals(x)? {
                if !(residual.abs() <= tolerance) {
                    out.push(IdentityFailure {
                        x,
                        identity: name.to_string(),
                        residual,
                        tolerance,
                    });
                }
            }
            let gap = oracle::ref_digamma_gap(x, SWEEP_EPS)?;
            let iv = bounds::gap_via_tau_series(x, TAU_SERIES_TERMS)?;
            if !iv.contains(gap.value) {
                let miss = (gap.value - iv.lower).min(iv.upper - gap.value);
                out.push(IdentityFailure {
                    x,
                    identity: "tau series interval contains gap".into(),
                    residual: miss,
                    tolerance: 0.0,
                });
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let failures: Vec<IdentityFailure> = per_point.into_iter().flatten().collect();
    Ok(IdentityReport {
        points: xs.len(),
        all_pass: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuxCheck {
    pub name: String,
    pub claim: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuxSuiteReport {
    pub grid: GridSpec,
    pub checks: Vec<AuxCheck>,
    pub all_pass: bool,
}

/// Arguments at which τ is checked as a function of `k`.
pub const TAU_CHECK_X: [f64; 4] = [0.5, 1.0, 3.0, 10.0];

/// Largest `k` used in the τ checks.
pub const TAU_CHECK_K_MAX: f64 = 1e4;

/// The grid used by the auxiliary suite: log[1e-2, 1e4] × 500.
pub fn aux_grid() -> GridSpec {
    GridSpec::log(1e-2, 1e4, 500)
}

/// Integer `k` values from 1 to [`TAU_CHECK_K_MAX`], about 500 of them,
/// log-spaced.
pub fn tau_k_values() -> Vec<f64> {
    let mut ks: Vec<f64> = GridSpec::log(1.0, TAU_CHECK_K_MAX, 500)
        .abscissae()
        .expect("fixed grid is valid")
        .into_iter()
        .map(f64::round)
        .collect();
    ks.dedup();
    ks
}

/// Sign and monotonicity of every auxiliary function on `grid`, and the τ
/// bracket and monotonicity in `k`.
pub fn proof_auxiliary_suite(grid: &GridSpec) -> Result<AuxSuiteReport> {
    let xs = grid.abscissae()?;
    let values = |a: AuxFn| -> Result<Vec<f64>> {
        xs.par_iter().map(|&t| bounds::aux_eval(a, t)).collect()
    };
    let f = values(AuxFn::F)?;
    let upper_h = values(AuxFn::UpperH)?;
    let upper_p = values(AuxFn::UpperP)?;
    let theta = values(AuxFn::Theta)?;
    let lower_p = values(AuxFn::LowerP)?;

    let third = 1.0 / 3.0;
    let mut checks = vec![
        AuxCheck {
            name: "f".into(),
            claim: "strictly increasing, 0 < f < 1/3".into(),
            pass: is_strictly_monotone(&f, Direction::Increasing)
                && f.iter().all(|&v| v > 0.0 && v < third),
            note: None,
        },
        AuxCheck {
            name: "H".into(),
            claim: "H > 0 and strictly decreasing".into(),
            pass: is_strictly_monotone(&upper_h, Direction::Decreasing)
                && upper_h.iter().all(|&v| v > 0.0),
            note: None,
        },
        AuxCheck {
            name: "P".into(),
            claim: "P < 0 and strictly increasing".into(),
            pass: is_strictly_monotone(&upper_p, Direction::Increasing)
                && upper_p.iter().all(|&v| v < 0.0),
            note: None,
        },
        AuxCheck {
            name: "theta".into(),
            claim: "theta < 0".into(),
            pass: theta.iter().all(|&v| v < 0.0),
            note: Some(
                "asserted sign is theta < 0, which the lower Stirling bound needs; \
                 a conclusion of theta(t) > theta(0) = 0 would contradict theta(1) < 0"
                    .into(),
            ),
        },
        AuxCheck {
            name: "p".into(),
            claim: "p < 0 and strictly decreasing".into(),
            pass: is_strictly_monotone(&lower_p, Direction::Decreasing)
                && lower_p.iter().all(|&v| v < 0.0),
            note: Some(
                "asserted sign is p < 0, forced by p(0) = 0 and p' < 0; p > 0 cannot hold \
                 since p(1) = log 2 - 7/10 < 0. The derivative numerator is \
                 -x^3/((x+1)(2x+3)^2), not -x^2; the sign is the same either way"
                    .into(),
            ),
        },
    ];

    let ks = tau_k_values();
    for &x in &TAU_CHECK_X {
        let taus = ks.iter().map(|&k| bounds::tau(k, x)).collect::<Result<Vec<_>>>()?;
        checks.push(AuxCheck {
            name: format!("tau(k, {x})"),
            claim: format!("strictly increasing in k <= {TAU_CHECK_K_MAX}, x - 1 < tau < x - 2/3"),
            pass: is_strictly_monotone(&taus, Direction::Increasing)
                && taus.iter().all(|&t| x - 1.0 < t && t < x - 2.0 / 3.0),
            note: None,
        });
    }

    Ok(AuxSuiteReport {
        grid: *grid,
        all_pass: checks.iter().all(|c| c.pass),
        checks,
    })
}
