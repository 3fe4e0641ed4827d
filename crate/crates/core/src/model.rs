use crate::error::{domain, Result};

/// Parameters of the logistic model with proportional delay,
/// `D^μ z(t) = r z(t) (1 - z(λt)/K)`, `z(0) = z0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Intrinsic growth rate (1/time).
    pub r: f64,
    /// Carrying capacity.
    pub k: f64,
    pub z0: f64,
    /// Fractional order in (0, 1].
    pub mu: f64,
    /// Proportional delay factor in [0, 1].
    pub lambda: f64,
    /// Normalization `B(μ)` of the fractional operator.
    pub b_norm: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            r: 0.1,
            k: 100.0,
            z0: 10.0,
            mu: 0.9,
            lambda: 1.0,
            b_norm: 1.0,
        }
    }
}

impl ModelParams {
    pub fn new(r: f64, k: f64, z0: f64, mu: f64, lambda: f64) -> Result<Self> {
        let p = Self {
            r,
            k,
            z0,
            mu,
            lambda,
            b_norm: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_mu(mut self, mu: f64) -> Self {
        self.mu = mu;
        self
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_b_norm(mut self, b_norm: f64) -> Self {
        self.b_norm = b_norm;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.r.is_finite() {
            return Err(domain("r", self.r, "growth rate must be finite"));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(domain("k", self.k, "carrying capacity must be positive"));
        }
        if !(self.z0 > 0.0 && self.z0.is_finite()) {
            return Err(domain("z0", self.z0, "initial value must be positive"));
        }
        crate::special_functions::check_order(self.mu)?;
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(domain(
                "lambda",
                self.lambda,
                "delay factor must lie in [0, 1]",
            ));
        }
        if !(self.b_norm > 0.0 && self.b_norm.is_finite()) {
            return Err(domain(
                "b_norm",
                self.b_norm,
                "normalization must be positive",
            ));
        }
        Ok(())
    }

    /// `1 - z0/K`, the relative headroom below carrying capacity.
    pub fn headroom(&self) -> f64 {
        1.0 - self.z0 / self.k
    }
}
