//! Gamma helpers and the one-parameter Mittag-Leffler function
//!
//! `E_μ(x) = Σₙ xⁿ / Γ(nμ + 1)`, for `0 < μ ≤ 1` and real `x`.
//!
//! Evaluation routes:
//! - `x ≥ 0`: Taylor series with log-space terms and Neumaier summation.
//! - `-1 ≤ x < 0`: the same series (alternating, but with little cancellation).
//! - `x < -1`, `μ < 1`: the completely-monotone spectral representation
//!   `E_μ(-x) = sin(μπ)/(πμ) ∫₀^∞ exp(-v^{1/μ}) x / (v² + 2vx cos(μπ) + x²) dv`,
//!   whose integrand is positive, so no cancellation occurs.
//! - `x < 0`, `μ = 1`: `exp(x)`.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::quadrature;

/// Relative cutoff for the Taylor series: stop once a term falls below
/// this fraction of the running sum (and the terms have started to shrink).
pub const SERIES_CUTOFF: f64 = 1e-16;

const MAX_SERIES_TERMS: usize = 1_000_000;
// exp overflows past this point.
const LN_MAX: f64 = 709.78;

/// `Γ(x)` for `x > 0`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x", x, "gamma requires a positive finite argument"));
    }
    Ok(gamma_unchecked(x))
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(
            "x",
            x,
            "log-gamma requires a positive finite argument",
        ));
    }
    Ok(ln_gamma_unchecked(x))
}

const MAX_FACTORIAL_ARG: f64 = 171.0;

/// `(x-1)!` computed by exact products when `x` is a small positive integer.
fn integer_gamma(x: f64) -> Option<f64> {
    if x.fract() != 0.0 || !(1.0..=MAX_FACTORIAL_ARG).contains(&x) {
        return None;
    }
    Some((2..x as u32).fold(1.0, |acc, k| acc * f64::from(k)))
}

// Unchecked variants for internal hot paths where the argument is known to be positive.
pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    integer_gamma(x).unwrap_or_else(|| statrs::function::gamma::gamma(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    match integer_gamma(x) {
        Some(g) => g.ln(),
        None => statrs::function::gamma::ln_gamma(x),
    }
}

/// Order and argument of a one-parameter Mittag-Leffler evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub mu: f64,
    pub arg: f64,
}

impl MLParams {
    pub fn new(mu: f64, arg: f64) -> Result<Self> {
        check_order(mu)?;
        if !arg.is_finite() {
            return Err(domain("arg", arg, "argument must be finite"));
        }
        Ok(Self { mu, arg })
    }

    pub fn eval(&self) -> f64 {
        eval_validated(self.mu, self.arg)
    }
}

pub(crate) fn check_order(mu: f64) -> Result<()> {
    if mu > 0.0 && mu <= 1.0 {
        Ok(())
    } else {
        Err(domain("mu", mu, "fractional order must lie in (0, 1]"))
    }
}

/// `E_μ(arg)`. Returns `+inf` when the value overflows double precision.
pub fn mittag_leffler(mu: f64, arg: f64) -> Result<f64> {
    MLParams::new(mu, arg).map(|p| p.eval())
}

fn eval_validated(mu: f64, arg: f64) -> f64 {
    if arg == 0.0 {
        return 1.0;
    }
    if arg > 0.0 {
        // E_μ(x) ~ exp(x^{1/μ}) / μ
        if arg.ln() / mu > LN_MAX.ln() + 1e-12 {
            return f64::INFINITY;
        }
        return series(mu, arg, SERIES_CUTOFF);
    }
    if mu == 1.0 {
        return arg.exp();
    }
    if arg >= -1.0 {
        return series(mu, arg, SERIES_CUTOFF);
    }
    negative_integral(mu, -arg)
}

/// Raw Taylor-series evaluation with an explicit relative cutoff.
///
/// Accurate for nonnegative arguments and small negative ones; for large
/// negative arguments the alternating sum cancels catastrophically.
pub fn mittag_leffler_series(mu: f64, arg: f64, rel_cutoff: f64) -> Result<f64> {
    MLParams::new(mu, arg)?;
    if !(rel_cutoff > 0.0) {
        return Err(domain("rel_cutoff", rel_cutoff, "cutoff must be positive"));
    }
    Ok(series(mu, arg, rel_cutoff))
}

fn series(mu: f64, arg: f64, rel_cutoff: f64) -> f64 {
    if arg == 0.0 {
        return 1.0;
    }
    let ln_abs = arg.abs().ln();
    let negative = arg < 0.0;
    let mut sum = NeumaierSum::default();
    let mut prev = f64::INFINITY;
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        let magnitude = (nf * ln_abs - ln_gamma_unchecked(nf * mu + 1.0)).exp();
        let term = if negative && n % 2 == 1 {
            -magnitude
        } else {
            magnitude
        };
        if !magnitude.is_finite() {
            return if negative { f64::NAN } else { f64::INFINITY };
        }
        sum.add(term);
        if n > 0 && magnitude <= prev && magnitude < rel_cutoff * sum.value().abs() {
            break;
        }
        if !sum.value().is_finite() {
            return if negative { f64::NAN } else { f64::INFINITY };
        }
        prev = magnitude;
    }
    sum.value()
}

fn negative_integral(mu: f64, x: f64) -> f64 {
    // sin(μπ) and 1 + cos(μπ) written in terms of 1 - μ to keep precision as μ → 1.
    let delta = 1.0 - mu;
    let sin_mu_pi = (PI * delta).sin();
    let one_plus_cos = 2.0 * (0.5 * PI * delta).sin().powi(2);
    let inv_mu = 1.0 / mu;
    let upper = 745f64.powf(mu);
    let integrand = |v: f64| {
        let decay = (-v.powf(inv_mu)).exp();
        if decay == 0.0 {
            return 0.0;
        }
        let d = v - x;
        decay * x / (d * d + 2.0 * v * x * one_plus_cos)
    };
    let mut breaks = vec![0.0];
    if x < upper {
        // The denominator peaks at v = x when μ is close to 1.
        breaks.push(x);
    }
    breaks.push(upper);
    let integral = quadrature::integrate_with_breaks(integrand, &breaks, 1e-300, 1e-14);
    sin_mu_pi / (PI * mu) * integral
}

/// Leading term of the large-negative-argument expansion,
/// `E_μ(-x) ≈ 1 / (x Γ(1-μ))`. Zero at `μ = 1`, where the decay is exponential.
pub fn mittag_leffler_asymptotic(mu: f64, arg: f64) -> Result<f64> {
    MLParams::new(mu, arg)?;
    if arg >= 0.0 {
        return Err(domain(
            "arg",
            arg,
            "asymptotic form applies to negative arguments",
        ));
    }
    if mu == 1.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (-arg * gamma_unchecked(1.0 - mu)))
}

/// Compensated (Neumaier) summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
