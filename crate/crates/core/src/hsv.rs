//! Hybrid Sumudu-variational iteration for the delayed logistic model.
//!
//! Each correction term is produced in the Sumudu domain:
//!
//! ```text
//! x₀ = z0
//! xₙ₊₁ = (r/B) S⁻¹[(1 - μ + μu^μ) (S[xₙ] - S[Pₙ]/K)]
//! ```
//!
//! where `Pₙ` is the Adomian polynomial of `z(t) z(λt)`. Every term stays on
//! the `t^{kμ}` lattice, so the whole computation is exact coefficient
//! arithmetic on [`FracSeries`].

use crate::adomian::{adomian_polynomial, AdomianMode};
use crate::error::{domain, Error, Result};
use crate::model::ModelParams;
use crate::special_functions::gamma_unchecked;
use crate::sumudu::{kernel_multiply, sumudu_forward, sumudu_inverse, FracSeries};

pub const DEFAULT_TERMS: usize = 10;

/// Terms `x₀..x_N` of a truncated HSV solution.
#[derive(Debug, Clone, PartialEq)]
pub struct HsvSolution {
    pub params: ModelParams,
    pub mode: AdomianMode,
    pub terms: Vec<FracSeries>,
}

impl HsvSolution {
    /// The truncation index `N`.
    pub fn truncation(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Partial sum of the series together with `|x_N(t)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HsvValue {
    pub value: f64,
    pub last_term_abs: f64,
}

pub fn hsv_iterate(p: &ModelParams, n_terms: usize, mode: AdomianMode) -> Result<HsvSolution> {
    p.validate()?;
    if n_terms == 0 {
        return Err(domain(
            "n_terms",
            0.0,
            "at least one correction term is required",
        ));
    }
    let mut terms = vec![FracSeries::constant(p.mu, p.z0)?];
    let gain = p.r / p.b_norm;
    for n in 0..n_terms {
        let poly = adomian_polynomial(&terms, n, p.lambda, mode)?;
        let image = sumudu_forward(&terms[n]).linear_combination(
            1.0,
            &sumudu_forward(&poly),
            -1.0 / p.k,
        )?;
        let next = sumudu_inverse(&kernel_multiply(&image)).scale(gain);
        terms.push(next);
    }
    Ok(HsvSolution {
        params: *p,
        mode,
        terms,
    })
}

pub fn hsv_evaluate(sol: &HsvSolution, t: f64) -> Result<HsvValue> {
    let mut value = 0.0;
    let mut last = 0.0;
    for term in &sol.terms {
        last = term.eval(t)?;
        value += last;
    }
    Ok(HsvValue {
        value,
        last_term_abs: last.abs(),
    })
}

/// `ψ(t) = 1 - μ + μ t^μ / Γ(μ+1)`, the inverse image of the kernel factor.
pub fn psi(mu: f64, t: f64) -> f64 {
    1.0 - mu + mu * t.powf(mu) / gamma_unchecked(mu + 1.0)
}

/// The geometric closed form `z0 / (1 - q)` with
/// `q = (r/B)(1 - z0/K) ψ(t)`, obtained by approximating every correction
/// term by `z0 qⁱ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricValue {
    pub value: f64,
    pub q: f64,
}

pub fn paper_closed_form(p: &ModelParams, t: f64) -> Result<GeometricValue> {
    p.validate()?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain("t", t, "time must be finite and nonnegative"));
    }
    let q = p.r / p.b_norm * p.headroom() * psi(p.mu, t);
    if q.abs() >= 1.0 {
        return Err(Error::Convergence { q });
    }
    Ok(GeometricValue {
        value: p.z0 / (1.0 - q),
        q,
    })
}

/// Second correction term evaluated two ways: the exact Sumudu-domain result
/// (with `Γ(2μ+1)`) and the factorized `ψ(t)²` form that the geometric
/// closed form relies on. They coincide only at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorizationGap {
    pub exact: f64,
    pub factorized: f64,
}

pub fn factorization_gap(p: &ModelParams, t: f64) -> Result<FactorizationGap> {
    let sol = hsv_iterate(&p.with_lambda(1.0), 2, AdomianMode::Paper)?;
    let exact = sol.terms[2].eval(t)?;
    let g = p.r / p.b_norm;
    let factorized = p.z0 * g * g * p.headroom() * (1.0 - 2.0 * p.z0 / p.k) * psi(p.mu, t).powi(2);
    Ok(FactorizationGap { exact, factorized })
}
