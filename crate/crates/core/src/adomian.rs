//! Adomian polynomials for the delayed product `N[z] = z(t) z(λt)`.
//!
//! With `z = Σ xᵢ`, embedding a parameter and collecting powers gives
//! `Pₙ = Σ_{i+j=n} xᵢ(t) xⱼ(λt)`. The published table drops the delay inside
//! the nonlinearity and uses `Pₙ = Σ_{i+j=n} xᵢ(t) xⱼ(t)`; both are offered.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::sumudu::{delay_rescale, series_product, FracSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdomianMode {
    /// Carries the `λ^{kμ}` factors of `z(λt)`.
    #[default]
    General,
    /// Delay suppressed inside the nonlinearity.
    Paper,
}

impl fmt::Display for AdomianMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdomianMode::General => f.write_str("general"),
            AdomianMode::Paper => f.write_str("paper"),
        }
    }
}

impl FromStr for AdomianMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "general" => Ok(AdomianMode::General),
            "paper" => Ok(AdomianMode::Paper),
            other => Err(format!(
                "unknown mode '{other}' (expected general or paper)"
            )),
        }
    }
}

/// Decomposition terms together with their Adomian polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct AdomianSequence {
    pub terms: Vec<FracSeries>,
    pub lambda: f64,
    pub mode: AdomianMode,
    pub polys: Vec<FracSeries>,
}

impl AdomianSequence {
    pub fn new(terms: Vec<FracSeries>, lambda: f64, mode: AdomianMode) -> Result<Self> {
        let polys = adomian_delayed_product(&terms, lambda, mode)?;
        Ok(Self {
            terms,
            lambda,
            mode,
            polys,
        })
    }
}

fn check_inputs(terms: &[FracSeries], lambda: f64) -> Result<()> {
    let Some(first) = terms.first() else {
        return Err(Error::Empty("Adomian decomposition needs at least x0"));
    };
    if !(0.0..=1.0).contains(&lambda) {
        return Err(domain("lambda", lambda, "delay factor must lie in [0, 1]"));
    }
    if let Some(bad) = terms.iter().find(|t| t.mu() != first.mu()) {
        return Err(Error::OrderMismatch {
            left: first.mu(),
            right: bad.mu(),
        });
    }
    Ok(())
}

/// `P₀..P_{len-1}` for the given decomposition terms.
pub fn adomian_delayed_product(
    terms: &[FracSeries],
    lambda: f64,
    mode: AdomianMode,
) -> Result<Vec<FracSeries>> {
    check_inputs(terms, lambda)?;
    let delayed = delayed_terms(terms, lambda, mode)?;
    (0..terms.len())
        .map(|n| poly_from(terms, &delayed, n))
        .collect()
}

/// The single polynomial `Pₙ`; only `terms[..=n]` are read.
pub fn adomian_polynomial(
    terms: &[FracSeries],
    n: usize,
    lambda: f64,
    mode: AdomianMode,
) -> Result<FracSeries> {
    check_inputs(terms, lambda)?;
    if n >= terms.len() {
        return Err(Error::Empty("P_n needs the terms x_0..x_n"));
    }
    let delayed = delayed_terms(&terms[..=n], lambda, mode)?;
    poly_from(terms, &delayed, n)
}

fn delayed_terms(terms: &[FracSeries], lambda: f64, mode: AdomianMode) -> Result<Vec<FracSeries>> {
    match mode {
        AdomianMode::General => terms.iter().map(|x| delay_rescale(x, lambda)).collect(),
        AdomianMode::Paper => Ok(terms.to_vec()),
    }
}

fn poly_from(terms: &[FracSeries], delayed: &[FracSeries], n: usize) -> Result<FracSeries> {
    let mut acc = FracSeries::zero(terms[0].mu())?;
    for i in 0..=n {
        acc = acc.add(&series_product(&terms[i], &delayed[n - i])?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(mu: f64, c: &[f64]) -> FracSeries {
        FracSeries::new(mu, c.to_vec()).unwrap()
    }

    fn close(a: &FracSeries, b: &FracSeries) -> bool {
        let n = a.len().max(b.len());
        (0..n).all(|k| {
            let x = a.coeffs().get(k).copied().unwrap_or(0.0);
            let y = b.coeffs().get(k).copied().unwrap_or(0.0);
            (x - y).abs() <= 1e-13 * x.abs().max(y.abs()).max(1.0)
        })
    }

    #[test]
    fn first_polynomials_match_the_table() {
        let mu = 0.6;
        let x = vec![
            fs(mu, &[3.0]),
            fs(mu, &[0.5, 1.5]),
            fs(mu, &[0.2, -0.7, 0.9]),
            fs(mu, &[-0.1, 0.3, 0.4, 1.1]),
        ];
        for mode in [AdomianMode::General, AdomianMode::Paper] {
            let p = adomian_delayed_product(&x, 1.0, mode).unwrap();
            let prod = |a: &FracSeries, b: &FracSeries| series_product(a, b).unwrap();
            assert!(close(&p[0], &prod(&x[0], &x[0])));
            assert!(close(&p[1], &prod(&x[0], &x[1]).scale(2.0)));
            assert!(close(
                &p[2],
                &prod(&x[0], &x[2])
                    .scale(2.0)
                    .add(&prod(&x[1], &x[1]))
                    .unwrap()
            ));
            assert!(close(
                &p[3],
                &prod(&x[0], &x[3])
                    .scale(2.0)
                    .add(&prod(&x[1], &x[2]).scale(2.0))
                    .unwrap()
            ));
        }
    }

    #[test]
    fn constant_head_gives_square() {
        let p = adomian_delayed_product(&[fs(0.5, &[4.0])], 0.3, AdomianMode::General).unwrap();
        assert_eq!(p[0].coeffs(), &[16.0]);
    }

    #[test]
    fn general_mode_carries_the_delay() {
        let (c, a) = (2.0, 3.0);
        let x = vec![fs(1.0, &[c]), fs(1.0, &[0.0, a])];
        let p = adomian_delayed_product(&x, 0.5, AdomianMode::General).unwrap();
        assert_eq!(p[1].coeffs(), &[0.0, 1.5 * c * a]);
        let paper = adomian_delayed_product(&x, 0.5, AdomianMode::Paper).unwrap();
        assert_eq!(paper[1].coeffs(), &[0.0, 2.0 * c * a]);
    }

    #[test]
    fn single_polynomial_agrees_with_batch() {
        let x = vec![
            fs(0.7, &[1.0]),
            fs(0.7, &[0.1, 0.2]),
            fs(0.7, &[0.3, 0.0, -0.4]),
        ];
        let all = adomian_delayed_product(&x, 0.4, AdomianMode::General).unwrap();
        for (n, want) in all.iter().enumerate() {
            assert_eq!(
                &adomian_polynomial(&x, n, 0.4, AdomianMode::General).unwrap(),
                want
            );
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            adomian_delayed_product(&[], 1.0, AdomianMode::General),
            Err(Error::Empty(_))
        ));
        assert!(adomian_delayed_product(&[fs(0.5, &[1.0])], 1.2, AdomianMode::General).is_err());
        assert!(adomian_delayed_product(
            &[fs(0.5, &[1.0]), fs(0.4, &[1.0])],
            1.0,
            AdomianMode::Paper
        )
        .is_err());
    }

    #[test]
    fn mode_parses() {
        assert_eq!("Paper".parse::<AdomianMode>().unwrap(), AdomianMode::Paper);
        assert!("other".parse::<AdomianMode>().is_err());
    }
}
