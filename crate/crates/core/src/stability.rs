//! Empirical Hyers-Ulam probe: perturb the right-hand side by a constant `ε`
//! and measure how far the perturbed trajectory drifts from the unperturbed one.

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::fode::{solve, solve_with_forcing, SolveConfig};
use crate::model::ModelParams;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub epsilons: Vec<f64>,
    /// `max_t |u_ε(t) - z(t)|` for each `ε`.
    pub deviations: Vec<f64>,
    /// `deviation / ε`, the empirical stability constant.
    pub c_estimates: Vec<f64>,
    pub horizon: f64,
}

impl StabilityReport {
    /// Ratio of the largest to the smallest constant estimate.
    pub fn spread(&self) -> f64 {
        let max = self.c_estimates.iter().copied().fold(f64::MIN, f64::max);
        let min = self.c_estimates.iter().copied().fold(f64::MAX, f64::min);
        max / min
    }
}

/// Largest admissible perturbation, `0.1 K |r|`; with `r = 0` the scale falls back to `0.1 K`.
pub fn max_epsilon(p: &ModelParams) -> f64 {
    let rate = if p.r == 0.0 { 1.0 } else { p.r.abs() };
    0.1 * p.k * rate
}

pub fn hyers_ulam_probe(
    p: &ModelParams,
    cfg: &SolveConfig,
    epsilons: &[f64],
) -> Result<StabilityReport> {
    if epsilons.is_empty() {
        return Err(Error::Empty("at least one perturbation size is required"));
    }
    let cap = max_epsilon(p);
    if let Some(&bad) = epsilons.iter().find(|&&e| !(e > 0.0 && e <= cap)) {
        return Err(domain(
            "epsilon",
            bad,
            "perturbation must lie in (0, 0.1 K |r|]",
        ));
    }
    let reference = solve(p, cfg)?;
    let deviations: Vec<f64> = epsilons
        .par_iter()
        .map(|&eps| {
            let perturbed = solve_with_forcing(p, cfg, eps)?;
            Ok(max_gap(&perturbed.values, &reference.values))
        })
        .collect::<Result<_>>()?;
    let c_estimates = deviations
        .iter()
        .zip(epsilons)
        .map(|(d, e)| d / e)
        .collect();
    Ok(StabilityReport {
        epsilons: epsilons.to_vec(),
        deviations,
        c_estimates,
        horizon: cfg.t_end,
    })
}

/// Pointwise `|u_ε(tₙ) - z(tₙ)|` along the grid.
pub fn deviation_profile(p: &ModelParams, cfg: &SolveConfig, epsilon: f64) -> Result<Vec<f64>> {
    let reference = solve(p, cfg)?;
    let perturbed = solve_with_forcing(p, cfg, epsilon)?;
    Ok(perturbed
        .values
        .iter()
        .zip(&reference.values)
        .map(|(u, z)| (u - z).abs())
        .collect())
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fode::OperatorKind;
    use crate::special_functions::gamma_fn;

    #[test]
    fn deviation_grows_with_perturbation() {
        let p = ModelParams::new(0.1, 100.0, 10.0, 0.8, 1.0).unwrap();
        let cfg = SolveConfig::new(OperatorKind::Abc, 5.0, 0.01);
        let rep = hyers_ulam_probe(&p, &cfg, &[1e-2, 1e-4]).unwrap();
        assert!(rep.deviations[1] < rep.deviations[0]);
        assert!(rep.spread() < 3.0);
        assert_eq!(rep.horizon, 5.0);
    }

    #[test]
    fn zero_growth_matches_integrated_constant() {
        let (mu, t_end, eps) = (0.6, 4.0, 1e-3);
        let p = ModelParams::new(0.0, 100.0, 10.0, mu, 1.0).unwrap();
        let cfg = SolveConfig::new(OperatorKind::Abc, t_end, 0.01);
        let rep = hyers_ulam_probe(&p, &cfg, &[eps]).unwrap();
        let want = eps * ((1.0 - mu) + mu * t_end.powf(mu) / gamma_fn(mu + 1.0).unwrap());
        assert!((rep.deviations[0] - want).abs() < 1e-9 * want);
    }

    #[test]
    fn rejects_bad_epsilons() {
        let p = ModelParams::default();
        let cfg = SolveConfig::new(OperatorKind::Abc, 1.0, 0.1);
        assert!(hyers_ulam_probe(&p, &cfg, &[]).is_err());
        assert!(hyers_ulam_probe(&p, &cfg, &[0.0]).is_err());
        assert!(hyers_ulam_probe(&p, &cfg, &[2.0]).is_err());
    }
}
