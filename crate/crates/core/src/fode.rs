//! Product-integration solvers for the delayed logistic model under three
//! fractional operators.
//!
//! Each operator is inverted into a Volterra equation in `f(t) = r z(t)(1 - z(λt)/K)`:
//!
//! ```text
//! ABC:    z(t) = z0 + (1-μ)/B f(t) + μ/B · I^μ f(t)
//! CFC:    z(t) = z0 + (1-μ)/M (f(t) - f(0)) + μ/M · ∫₀ᵗ f
//! Caputo: z(t) = z0 + I^μ f(t)
//! ```
//!
//! with `I^μ f(t) = Γ(μ)⁻¹ ∫₀ᵗ (t-ξ)^{μ-1} f(ξ) dξ`. The weakly singular
//! integral is integrated exactly against the piecewise-linear interpolant of
//! `f` (product trapezoidal rule) or its left-constant interpolant (product
//! rectangle rule). The current value enters implicitly and is resolved by
//! fixed-point correction.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::model::ModelParams;
use crate::special_functions::gamma_unchecked;

pub const MAX_STEPS: f64 = 1e7;
pub const DEFAULT_CORRECTOR_ITERS: usize = 5;
pub const DEFAULT_CORRECTOR_TOL: f64 = 1e-12;
/// Hard cap on corrector passes while the updates are still shrinking.
const MAX_CORRECTOR_PASSES: usize = 200;
/// Residual above which a non-converged corrector is reported as a failure.
const DIVERGENCE_RESIDUAL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Abc,
    Cfc,
    Caputo,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 3] = [OperatorKind::Abc, OperatorKind::Cfc, OperatorKind::Caputo];
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::Abc => f.write_str("abc"),
            OperatorKind::Cfc => f.write_str("cfc"),
            OperatorKind::Caputo => f.write_str("caputo"),
        }
    }
}

impl FromStr for OperatorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "abc" => Ok(OperatorKind::Abc),
            "cfc" => Ok(OperatorKind::Cfc),
            "caputo" => Ok(OperatorKind::Caputo),
            other => Err(format!(
                "unknown operator '{other}' (expected abc, cfc or caputo)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Quadrature {
    #[default]
    ProductTrapezoidal,
    ProductRectangle,
}

/// How the delayed argument `z(λt)` is supplied to the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RhsForm {
    /// `z(λt)` interpolated from the computed trajectory.
    #[default]
    Pantograph,
    /// `z(λt)` replaced by the prescribed initial value `z0`, giving the
    /// linear problem `D^μ z = r z (1 - z0/K)`.
    Linearized,
}

impl FromStr for RhsForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pantograph" => Ok(RhsForm::Pantograph),
            "linearized" => Ok(RhsForm::Linearized),
            other => Err(format!(
                "unknown rhs '{other}' (expected pantograph or linearized)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub operator: OperatorKind,
    pub t_end: f64,
    pub h: f64,
    pub corrector_iters: usize,
    pub corrector_tol: f64,
    pub quadrature: Quadrature,
    pub rhs: RhsForm,
}

impl SolveConfig {
    pub fn new(operator: OperatorKind, t_end: f64, h: f64) -> Self {
        Self {
            operator,
            t_end,
            h,
            corrector_iters: DEFAULT_CORRECTOR_ITERS,
            corrector_tol: DEFAULT_CORRECTOR_TOL,
            quadrature: Quadrature::default(),
            rhs: RhsForm::default(),
        }
    }

    pub fn with_operator(mut self, operator: OperatorKind) -> Self {
        self.operator = operator;
        self
    }

    pub fn with_h(mut self, h: f64) -> Self {
        self.h = h;
        self
    }

    pub fn with_rhs(mut self, rhs: RhsForm) -> Self {
        self.rhs = rhs;
        self
    }

    pub fn with_quadrature(mut self, quadrature: Quadrature) -> Self {
        self.quadrature = quadrature;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(domain("h", self.h, "step must be positive"));
        }
        if !(self.t_end >= self.h) || !self.t_end.is_finite() {
            return Err(domain(
                "t_end",
                self.t_end,
                "horizon must be at least one step",
            ));
        }
        if self.t_end / self.h > MAX_STEPS {
            return Err(domain("h", self.h, "more than 1e7 steps requested"));
        }
        if self.corrector_iters == 0 {
            return Err(domain(
                "corrector_iters",
                0.0,
                "need at least one corrector pass",
            ));
        }
        if !(self.corrector_tol > 0.0) {
            return Err(domain(
                "corrector_tol",
                self.corrector_tol,
                "tolerance must be positive",
            ));
        }
        Ok(())
    }

    /// Number of steps; the horizon is divided into this many equal cells.
    pub fn steps(&self) -> usize {
        ((self.t_end / self.h).round() as usize).max(1)
    }
}

/// Solution samples on the uniform grid `tₙ = n · t_end / M`.
///
/// For the ABC operator `values[0]` is the solution of the implicit relation
/// at `t = 0`, which differs from `params.z0` whenever `f(0) ≠ 0` and `μ < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub operator: OperatorKind,
    pub params: ModelParams,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn endpoint(&self) -> f64 {
        *self
            .values
            .last()
            .expect("trajectory has at least two points")
    }

    /// Keeps every `stride`-th sample.
    pub fn subsample(&self, stride: usize) -> Trajectory {
        let stride = stride.max(1);
        Trajectory {
            grid: self.grid.iter().step_by(stride).copied().collect(),
            values: self.values.iter().step_by(stride).copied().collect(),
            operator: self.operator,
            params: self.params,
        }
    }
}

/// Product-integration weights for a kernel `(t-ξ)^{α-1} / Γ(α)` on a uniform grid.
struct KernelWeights {
    alpha: f64,
    scale: f64,
    // Trapezoidal: d[k] = (k+1)^{α+1} - k^{α+1}. Rectangle: d[k] = (k+1)^α - k^α.
    diffs: Vec<f64>,
    quadrature: Quadrature,
}

impl KernelWeights {
    fn new(alpha: f64, h: f64, steps: usize, quadrature: Quadrature) -> Self {
        let (power, scale) = match quadrature {
            Quadrature::ProductTrapezoidal => {
                (alpha + 1.0, h.powf(alpha) / gamma_unchecked(alpha + 2.0))
            }
            Quadrature::ProductRectangle => (alpha, h.powf(alpha) / gamma_unchecked(alpha + 1.0)),
        };
        let diffs = (0..=steps)
            .map(|k| {
                if k == 0 {
                    1.0
                } else {
                    let kf = k as f64;
                    kf.powf(power) * (power * (1.0 / kf).ln_1p()).exp_m1()
                }
            })
            .collect();
        Self {
            alpha,
            scale,
            diffs,
            quadrature,
        }
    }

    /// Weight of node `j < n` in the rule for the integral up to `tₙ`.
    fn history_weight(&self, n: usize, j: usize) -> f64 {
        let k = n - j;
        match self.quadrature {
            Quadrature::ProductTrapezoidal => {
                if j == 0 {
                    let nf = n as f64;
                    let a = self.alpha;
                    (nf - 1.0).powf(a + 1.0) - (nf - 1.0 - a) * nf.powf(a)
                } else {
                    self.diffs[k] - self.diffs[k - 1]
                }
            }
            Quadrature::ProductRectangle => self.diffs[k - 1],
        }
    }

    fn diagonal_weight(&self) -> f64 {
        match self.quadrature {
            Quadrature::ProductTrapezoidal => 1.0,
            Quadrature::ProductRectangle => 0.0,
        }
    }

    /// Unscaled `Σ_{j<n} w_{n,j} f_j`.
    fn history(&self, n: usize, f: &[f64]) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let mut acc = self.history_weight(n, 0) * f[0];
        for (j, &fj) in f.iter().enumerate().take(n).skip(1) {
            acc += self.history_weight(n, j) * fj;
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DelayPath {
    Interpolated,
    /// `z(λt)` taken to be `z(t)` directly; meaningful for `λ = 1` only.
    #[cfg_attr(not(test), allow(dead_code))]
    Undelayed,
}

pub fn solve(p: &ModelParams, cfg: &SolveConfig) -> Result<Trajectory> {
    solve_impl(p, cfg, 0.0, DelayPath::Interpolated)
}

/// Solves the system with right-hand side `f + forcing`.
pub fn solve_with_forcing(p: &ModelParams, cfg: &SolveConfig, forcing: f64) -> Result<Trajectory> {
    if !forcing.is_finite() {
        return Err(domain("forcing", forcing, "perturbation must be finite"));
    }
    solve_impl(p, cfg, forcing, DelayPath::Interpolated)
}

pub(crate) fn solve_impl(
    p: &ModelParams,
    cfg: &SolveConfig,
    forcing: f64,
    path: DelayPath,
) -> Result<Trajectory> {
    p.validate()?;
    cfg.validate()?;
    let steps = cfg.steps();
    let h = cfg.t_end / steps as f64;
    let mu = p.mu;

    let (kernel_order, c_point, c_int) = match cfg.operator {
        OperatorKind::Abc => (mu, (1.0 - mu) / p.b_norm, mu / p.b_norm),
        OperatorKind::Cfc => (1.0, (1.0 - mu) / p.b_norm, mu / p.b_norm),
        OperatorKind::Caputo => (mu, 0.0, 1.0),
    };
    let weights = KernelWeights::new(kernel_order, h, steps, cfg.quadrature);
    let rhs = |x: f64, y: f64| p.r * x * (1.0 - y / p.k) + forcing;
    // CFC subtracts f(0); z(0) = z0 for that operator.
    let base = match cfg.operator {
        OperatorKind::Cfc => p.z0 - c_point * rhs(p.z0, p.z0),
        _ => p.z0,
    };

    let mut values: Vec<f64> = Vec::with_capacity(steps + 1);
    let mut fvals: Vec<f64> = Vec::with_capacity(steps + 1);

    for n in 0..=steps {
        let delayed = |current: f64, values: &[f64]| -> f64 {
            match (cfg.rhs, path) {
                (RhsForm::Linearized, _) => p.z0,
                (RhsForm::Pantograph, DelayPath::Undelayed) => current,
                (RhsForm::Pantograph, DelayPath::Interpolated) => {
                    interpolate_delayed(p.lambda, n, current, values)
                }
            }
        };
        let history = weights.scale * weights.history(n, &fvals);
        let diag = if n == 0 {
            0.0
        } else {
            weights.scale * weights.diagonal_weight()
        };

        let mut z = match n {
            0 => p.z0,
            1 => values[0],
            _ => 2.0 * values[n - 1] - values[n - 2],
        };
        let scale = |z: f64| z.abs().max(1.0);
        let mut residual = f64::INFINITY;
        let mut passes = 0;
        loop {
            let f = rhs(z, delayed(z, &values));
            let next = base + c_point * f + c_int * (history + diag * f);
            if !next.is_finite() {
                return Err(Error::SolverFailure {
                    step: n,
                    t: n as f64 * h,
                    reason: "non-finite value in corrector".into(),
                });
            }
            let previous = residual;
            residual = (next - z).abs();
            z = next;
            passes += 1;
            if residual <= cfg.corrector_tol * scale(z) {
                break;
            }
            if passes >= cfg.corrector_iters
                && (residual >= previous || passes >= MAX_CORRECTOR_PASSES)
            {
                break;
            }
        }
        if residual > DIVERGENCE_RESIDUAL * scale(z) {
            return Err(Error::SolverFailure {
                step: n,
                t: n as f64 * h,
                reason: format!("corrector did not contract (last update {residual:e})"),
            });
        }
        let f = rhs(z, delayed(z, &values));
        values.push(z);
        fvals.push(f);
    }

    Ok(Trajectory {
        grid: (0..=steps).map(|n| n as f64 * h).collect(),
        values,
        operator: cfg.operator,
        params: *p,
    })
}

/// Linear interpolation of `z(λ tₙ)` on the grid, in grid units `s = λ n`.
/// Points in the last cell use the current iterate as the right node.
fn interpolate_delayed(lambda: f64, n: usize, current: f64, values: &[f64]) -> f64 {
    let s = lambda * n as f64;
    let j = s.floor() as usize;
    if j >= n {
        return current;
    }
    let theta = s - j as f64;
    let lo = values[j];
    if theta == 0.0 {
        return lo;
    }
    let hi = if j + 1 == n { current } else { values[j + 1] };
    lo + theta * (hi - lo)
}

/// Solves under all three operators on identical grids, in the order ABC, CFC, Caputo.
pub fn compare_operators(p: &ModelParams, cfg_base: &SolveConfig) -> Result<[Trajectory; 3]> {
    let runs: Vec<Trajectory> = OperatorKind::ALL
        .par_iter()
        .map(|&op| solve(p, &cfg_base.with_operator(op)))
        .collect::<Result<_>>()?;
    let [abc, cfc, caputo]: [Trajectory; 3] = runs.try_into().expect("three operators");
    Ok([abc, cfc, caputo])
}
