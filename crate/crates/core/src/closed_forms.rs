//! Exact solutions: the classical logistic curve and the `λ = 0` fractional
//! (Malthusian-type) solution.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::model::ModelParams;
use crate::special_functions::mittag_leffler;

/// `z(t) = z0 K / (z0 + (K - z0) e^{-rt})`.
pub fn classical_exact(p: &ModelParams, t: f64) -> Result<f64> {
    p.validate()?;
    if !t.is_finite() {
        return Err(domain("t", t, "time must be finite"));
    }
    if p.z0 == p.k {
        return Ok(p.k);
    }
    Ok(p.z0 * p.k / (p.z0 + (p.k - p.z0) * (-p.r * t).exp()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Unstable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stability::Stable => f.write_str("stable"),
            Stability::Unstable => f.write_str("unstable"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub value: f64,
    pub stability: Stability,
}

/// Equilibria of `z' = r z (1 - z/K)` for `r > 0`: the extinct state is a
/// repeller, carrying capacity an attractor (the linearization slopes are
/// `r` and `-r`).
pub fn classical_fixed_points(p: &ModelParams) -> Result<Vec<FixedPoint>> {
    p.validate()?;
    if !(p.r > 0.0) {
        return Err(Error::Unsupported(
            "fixed-point classification covers growth (r > 0) only",
        ));
    }
    Ok(vec![
        FixedPoint {
            value: 0.0,
            stability: Stability::Unstable,
        },
        FixedPoint {
            value: p.k,
            stability: Stability::Stable,
        },
    ])
}

/// Amplitude `A` and rate `q` of `z(t) = A E_μ(q t^μ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda0Coefficients {
    pub amplitude: f64,
    pub rate: f64,
}

const SINGULAR_TOL: f64 = 1e-12;

pub fn abc_lambda0_coefficients(p: &ModelParams) -> Result<Lambda0Coefficients> {
    p.validate()?;
    let growth = p.r * p.headroom();
    let denom = p.b_norm + growth * (p.mu - 1.0);
    if denom.abs() < SINGULAR_TOL {
        return Err(Error::Singular(format!(
            "B + r(1 - z0/K)(mu - 1) = {denom:e} vanishes"
        )));
    }
    Ok(Lambda0Coefficients {
        amplitude: p.b_norm * p.z0 / denom,
        rate: growth * p.mu / denom,
    })
}

/// Exact solution of `D^μ z = r z (1 - z0/K)` (the `λ = 0` reduction).
///
/// At `t = 0` this returns the amplitude `A`, which differs from `z0` for
/// `μ < 1`: inverting the operator with a nonzero right-hand side at the
/// origin produces an initial jump.
pub fn abc_exact_lambda0(p: &ModelParams, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain("t", t, "time must be finite and nonnegative"));
    }
    let c = abc_lambda0_coefficients(p)?;
    if t == 0.0 {
        return Ok(c.amplitude);
    }
    Ok(c.amplitude * mittag_leffler(p.mu, c.rate * t.powf(p.mu))?)
}
