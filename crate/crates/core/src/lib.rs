//! Gamma, digamma and polygamma evaluation together with the two-sided bound
//! families built on them, a slow reference oracle with explicit error radii,
//! and the grid verifier that certifies every bound against that oracle.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`special`] | `log_gamma`, `digamma`, `polygamma`, Stirling ratio, cancellation-safe kernels |
//! | [`bounds`] | bound arguments, per-family interval evaluators, proof auxiliaries, τ-series |
//! | [`oracle`] | reference evaluations returning [`oracle::ErrorBoundedValue`] |
//! | [`verifier`] | grid sweeps, tightness comparisons, monotonicity and limit checks |
//! | [`cli`] | command-line front end (`specfun eval|verify|compare|constants`) |

// `!(a < b)` is deliberate: NaN must fail the comparison.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference values are kept at full printed length.
#![allow(clippy::excessive_precision)]

pub mod bounds;
pub mod cli;
mod dd;
mod error;
pub mod oracle;
pub mod special;
pub mod verifier;

pub use error::{Error, Result};

/// Distance from `x` to the next representable f64 away from zero.
pub fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if !a.is_finite() {
        return f64::NAN;
    }
    if a == 0.0 {
        return f64::from_bits(1);
    }
    f64::from_bits(a.to_bits() + 1) - a
}
