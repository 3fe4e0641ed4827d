//! Generalized power series on the `t^{kμ}` lattice and their Sumudu images.
//!
//! A [`FracSeries`] with coefficients `c₀..c_N` denotes `Σ cₖ t^{kμ}`; its
//! Sumudu transform `W(u) = ∫₀^∞ w(tu) e^{-t} dt` maps each monomial to
//! `Γ(kμ+1) u^{kμ}`, giving a [`SumuduSeries`] `Σ dₖ u^{kμ}`. All arithmetic
//! here is termwise and exact in this basis.

use crate::error::{domain, Error, Result};
use crate::special_functions::{check_order, gamma_unchecked};

/// Trailing coefficients below this magnitude are dropped.
pub const TRIM_THRESHOLD: f64 = 1e-300;

fn canonical(mut coeffs: Vec<f64>) -> Vec<f64> {
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() < TRIM_THRESHOLD) {
        coeffs.pop();
    }
    coeffs
}

fn validate(mu: f64, coeffs: &[f64]) -> Result<()> {
    check_order(mu)?;
    if coeffs.is_empty() {
        return Err(Error::Empty("series needs at least one coefficient"));
    }
    if let Some(&bad) = coeffs.iter().find(|c| !c.is_finite()) {
        return Err(domain("coeffs", bad, "coefficients must be finite"));
    }
    Ok(())
}

fn same_order(a: f64, b: f64) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::OrderMismatch { left: a, right: b })
    }
}

fn add_coeffs(a: &[f64], b: &[f64], alpha: f64, beta: f64) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| alpha * a.get(k).copied().unwrap_or(0.0) + beta * b.get(k).copied().unwrap_or(0.0))
        .collect()
}

fn cauchy(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `Σₖ cₖ t^{kμ}` in the time domain.
#[derive(Debug, Clone, PartialEq)]
pub struct FracSeries {
    mu: f64,
    coeffs: Vec<f64>,
}

impl FracSeries {
    pub fn new(mu: f64, coeffs: Vec<f64>) -> Result<Self> {
        validate(mu, &coeffs)?;
        Ok(Self {
            mu,
            coeffs: canonical(coeffs),
        })
    }

    pub fn constant(mu: f64, c: f64) -> Result<Self> {
        Self::new(mu, vec![c])
    }

    pub fn zero(mu: f64) -> Result<Self> {
        Self::constant(mu, 0.0)
    }

    // Internal constructor for coefficients produced from already valid series.
    fn from_parts(mu: f64, coeffs: Vec<f64>) -> Self {
        Self {
            mu,
            coeffs: canonical(coeffs),
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn constant_term(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        eval_series(self, t)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(1.0, other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(1.0, other, -1.0)
    }

    /// `alpha * self + beta * other`.
    pub fn linear_combination(&self, alpha: f64, other: &Self, beta: f64) -> Result<Self> {
        same_order(self.mu, other.mu)?;
        Ok(Self::from_parts(
            self.mu,
            add_coeffs(&self.coeffs, &other.coeffs, alpha, beta),
        ))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_parts(self.mu, self.coeffs.iter().map(|c| c * factor).collect())
    }
}

/// `Σₖ dₖ u^{kμ}` in the Sumudu domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SumuduSeries {
    mu: f64,
    coeffs: Vec<f64>,
}

impl SumuduSeries {
    pub fn new(mu: f64, coeffs: Vec<f64>) -> Result<Self> {
        validate(mu, &coeffs)?;
        Ok(Self {
            mu,
            coeffs: canonical(coeffs),
        })
    }

    fn from_parts(mu: f64, coeffs: Vec<f64>) -> Self {
        Self {
            mu,
            coeffs: canonical(coeffs),
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn linear_combination(&self, alpha: f64, other: &Self, beta: f64) -> Result<Self> {
        same_order(self.mu, other.mu)?;
        Ok(Self::from_parts(
            self.mu,
            add_coeffs(&self.coeffs, &other.coeffs, alpha, beta),
        ))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_parts(self.mu, self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product in powers of `u^μ`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        same_order(self.mu, other.mu)?;
        Ok(Self::from_parts(
            self.mu,
            cauchy(&self.coeffs, &other.coeffs),
        ))
    }
}

/// `S[Σ cₖ t^{kμ}] = Σ cₖ Γ(kμ+1) u^{kμ}`.
pub fn sumudu_forward(s: &FracSeries) -> SumuduSeries {
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * gamma_unchecked(k as f64 * s.mu + 1.0))
        .collect();
    SumuduSeries::from_parts(s.mu, coeffs)
}

/// Termwise inverse of [`sumudu_forward`].
pub fn sumudu_inverse(s: &SumuduSeries) -> FracSeries {
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &d)| d / gamma_unchecked(k as f64 * s.mu + 1.0))
        .collect();
    FracSeries::from_parts(s.mu, coeffs)
}

/// Multiplies by `1 - μ + μ u^μ`: `eₖ = (1-μ) dₖ + μ dₖ₋₁`.
pub fn kernel_multiply(s: &SumuduSeries) -> SumuduSeries {
    let mu = s.mu;
    let n = s.coeffs.len();
    let coeffs = (0..=n)
        .map(|k| {
            let own = if k < n { (1.0 - mu) * s.coeffs[k] } else { 0.0 };
            let shifted = if k > 0 { mu * s.coeffs[k - 1] } else { 0.0 };
            own + shifted
        })
        .collect();
    SumuduSeries::from_parts(mu, coeffs)
}

/// Cauchy product; exact because `t^{iμ} t^{jμ} = t^{(i+j)μ}`.
pub fn series_product(a: &FracSeries, b: &FracSeries) -> Result<FracSeries> {
    same_order(a.mu, b.mu)?;
    Ok(FracSeries::from_parts(a.mu, cauchy(&a.coeffs, &b.coeffs)))
}

/// The series of `w(λt)`: `cₖ ↦ cₖ λ^{kμ}`.
pub fn delay_rescale(s: &FracSeries, lambda: f64) -> Result<FracSeries> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(domain("lambda", lambda, "delay factor must lie in [0, 1]"));
    }
    if lambda == 1.0 {
        return Ok(s.clone());
    }
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 {
                c
            } else {
                c * lambda.powf(k as f64 * s.mu)
            }
        })
        .collect();
    Ok(FracSeries::from_parts(s.mu, coeffs))
}

/// `Σ cₖ exp(kμ ln t)`, with `t = 0` giving `c₀` exactly.
pub fn eval_series(s: &FracSeries, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain("t", t, "series are evaluated at finite t >= 0"));
    }
    if t == 0.0 {
        return Ok(s.coeffs[0]);
    }
    let ln_t = t.ln();
    Ok(s.coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 {
                c
            } else {
                c * (k as f64 * s.mu * ln_t).exp()
            }
        })
        .sum())
}

/// Time-domain convolution `(f*g)(t) = ∫₀ᵗ f(t-x) g(x) dx` of integer-power
/// series, using `t^i * t^j = i! j! / (i+j+1)! · t^{i+j+1}`.
pub fn convolve_integer_order(f: &FracSeries, g: &FracSeries) -> Result<FracSeries> {
    if f.mu != 1.0 || g.mu != 1.0 {
        return Err(Error::Unsupported(
            "time-domain convolution is implemented for integer powers only",
        ));
    }
    let mut out = vec![0.0; f.len() + g.len()];
    for (i, &a) in f.coeffs.iter().enumerate() {
        for (j, &b) in g.coeffs.iter().enumerate() {
            out[i + j + 1] += a * b * beta_integer(i, j);
        }
    }
    Ok(FracSeries::from_parts(1.0, out))
}

// B(i+1, j+1) = i! j! / (i+j+1)!
fn beta_integer(i: usize, j: usize) -> f64 {
    let (small, large) = if i < j { (i, j) } else { (j, i) };
    // small! / ((large+1)(large+2)...(large+small+1))
    let mut v = 1.0;
    for m in 1..=small {
        v *= m as f64 / (large + m) as f64;
    }
    v / (large + small + 1) as f64
}

/// Checks the convolution theorem `S[f*g] = u F(u) G(u)` coefficientwise
/// (relative tolerance 1e-12) for integer-power series.
pub fn convolution_check(f: &FracSeries, g: &FracSeries) -> Result<bool> {
    let lhs = sumudu_forward(&convolve_integer_order(f, g)?);
    let fg = sumudu_forward(f).product(&sumudu_forward(g))?;
    let mut rhs = vec![0.0];
    rhs.extend_from_slice(fg.coeffs());
    let rhs = canonical(rhs);
    let n = lhs.len().max(rhs.len());
    let scale = lhs
        .coeffs()
        .iter()
        .chain(rhs.iter())
        .fold(0.0f64, |m, c| m.max(c.abs()));
    Ok((0..n).all(|k| {
        let a = lhs.coeffs().get(k).copied().unwrap_or(0.0);
        let b = rhs.get(k).copied().unwrap_or(0.0);
        (a - b).abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE)
    }))
}
