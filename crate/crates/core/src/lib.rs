//! Fractional logistic growth with proportional delay.
//!
//! The model `D^μ z(t) = r z(t) (1 - z(λt)/K)`, `z(0) = z0`, is solved three
//! independent ways:
//!
//! - [`closed_forms`]: the classical logistic curve and the exact `λ = 0`
//!   solution `A E_μ(q t^μ)`;
//! - [`hsv`]: the Sumudu-variational series built from [`sumudu`] algebra and
//!   [`adomian`] polynomials;
//! - [`fode`]: product-integration solvers for the Atangana-Baleanu,
//!   Caputo-Fabrizio and Caputo operators.
//!
//! [`stability`] probes the sensitivity to perturbed dynamics and [`cli`]
//! turns everything into CSV datasets.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod adomian;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod fode;
pub mod hsv;
pub mod model;
mod quadrature;
pub mod special_functions;
pub mod stability;
pub mod sumudu;

pub use adomian::{adomian_delayed_product, adomian_polynomial, AdomianMode, AdomianSequence};
pub use closed_forms::{
    abc_exact_lambda0, abc_lambda0_coefficients, classical_exact, classical_fixed_points,
};
pub use error::{Error, Result};
pub use fode::{
    compare_operators, solve, OperatorKind, Quadrature, RhsForm, SolveConfig, Trajectory,
};
pub use hsv::{hsv_evaluate, hsv_iterate, paper_closed_form, HsvSolution, HsvValue};
pub use model::ModelParams;
pub use special_functions::{gamma_fn, mittag_leffler, MLParams};
pub use stability::{hyers_ulam_probe, StabilityReport};
pub use sumudu::{
    delay_rescale, eval_series, kernel_multiply, series_product, sumudu_forward, sumudu_inverse,
    FracSeries, SumuduSeries,
};
