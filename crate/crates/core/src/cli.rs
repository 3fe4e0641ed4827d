//! Command-line front end: every command writes a CSV dataset.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::adomian::AdomianMode;
use crate::closed_forms::{abc_exact_lambda0, classical_exact};
use crate::error::Error;
use crate::fode::{compare_operators, solve, OperatorKind, RhsForm, SolveConfig};
use crate::hsv::{hsv_evaluate, hsv_iterate, paper_closed_form, HsvSolution, DEFAULT_TERMS};
use crate::model::ModelParams;
use crate::special_functions::mittag_leffler;
use crate::stability::hyers_ulam_probe;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

/// Significant digits written for every number.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Classical logistic curve.
    Classical,
    /// Mittag-Leffler function on a grid of arguments.
    MlEval,
    /// Exact solution without delay (λ = 0).
    ExactLambda0,
    /// Truncated Sumudu-variational series.
    Hsv,
    /// Geometric closed form of the series.
    ClosedForm,
    /// Numerical solver for one operator.
    Solve,
    /// ABC, CFC and Caputo solvers side by side.
    Compare,
    /// Series solution over (t, μ), (t, λ) or (μ, λ).
    Surface,
    /// Partial sums and last-term sizes as the truncation grows.
    Convergence,
    /// Hyers-Ulam perturbation probe.
    Stability,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VaryAxis {
    Mu,
    Lambda,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorArg {
    Abc,
    Cfc,
    Caputo,
}

impl From<OperatorArg> for OperatorKind {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::Abc => OperatorKind::Abc,
            OperatorArg::Cfc => OperatorKind::Cfc,
            OperatorArg::Caputo => OperatorKind::Caputo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    General,
    Paper,
}

impl From<ModeArg> for AdomianMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::General => AdomianMode::General,
            ModeArg::Paper => AdomianMode::Paper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhsArg {
    Pantograph,
    Linearized,
}

impl From<RhsArg> for RhsForm {
    fn from(r: RhsArg) -> Self {
        match r {
            RhsArg::Pantograph => RhsForm::Pantograph,
            RhsArg::Linearized => RhsForm::Linearized,
        }
    }
}

/// Raw command-line arguments. Every option may also come from `--config`.
#[derive(Debug, Clone, Default, Parser, Deserialize)]
#[command(
    name = "fraclogistic",
    version,
    allow_negative_numbers = true,
    about = "Fractional logistic growth with proportional delay: CSV datasets"
)]
#[serde(rename_all = "kebab-case", deny_unknown_fields, default)]
pub struct Args {
    #[arg(value_enum)]
    #[serde(skip)]
    pub command: Option<Command>,

    /// Growth rate r.
    #[arg(long)]
    pub r: Option<f64>,
    /// Carrying capacity K.
    #[arg(long)]
    pub k: Option<f64>,
    /// Initial value z0.
    #[arg(long)]
    pub z0: Option<f64>,
    /// Fractional order in (0, 1].
    #[arg(long)]
    pub mu: Option<f64>,
    /// Proportional delay factor in [0, 1].
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Operator normalization B(μ).
    #[arg(long = "b-norm")]
    pub b_norm: Option<f64>,
    /// Time horizon.
    #[arg(long = "t-end")]
    pub t_end: Option<f64>,
    /// Number of output time points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Solver step.
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long, value_enum)]
    pub operator: Option<OperatorArg>,
    /// Series truncation N.
    #[arg(long = "n-terms")]
    pub n_terms: Option<usize>,
    /// Largest truncation for `convergence`.
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Adomian polynomial mode.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// How the solver supplies the delayed argument.
    #[arg(long, value_enum)]
    pub rhs: Option<RhsArg>,
    /// Sweep axis.
    #[arg(long, value_enum)]
    pub vary: Option<VaryAxis>,
    /// Sweep start (argument start for ml-eval).
    #[arg(long)]
    pub from: Option<f64>,
    /// Sweep end (argument end for ml-eval).
    #[arg(long)]
    pub to: Option<f64>,
    /// Sweep step.
    #[arg(long)]
    pub step: Option<f64>,
    /// Fixed time for `surface --vary both`.
    #[arg(long = "at-t")]
    pub at_t: Option<f64>,
    /// Comma-separated perturbation sizes.
    #[arg(long, value_delimiter = ',')]
    pub epsilons: Option<Vec<f64>>,
    /// Output file (standard output when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Key-value (TOML) file with defaults for any of the options above.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

impl Args {
    /// Fills every unset option from `file`; explicit flags win.
    pub fn merged_with(self, file: Args) -> Args {
        Args {
            command: self.command,
            r: self.r.or(file.r),
            k: self.k.or(file.k),
            z0: self.z0.or(file.z0),
            mu: self.mu.or(file.mu),
            lambda: self.lambda.or(file.lambda),
            b_norm: self.b_norm.or(file.b_norm),
            t_end: self.t_end.or(file.t_end),
            points: self.points.or(file.points),
            h: self.h.or(file.h),
            operator: self.operator.or(file.operator),
            n_terms: self.n_terms.or(file.n_terms),
            n_max: self.n_max.or(file.n_max),
            mode: self.mode.or(file.mode),
            rhs: self.rhs.or(file.rhs),
            vary: self.vary.or(file.vary),
            from: self.from.or(file.from),
            to: self.to.or(file.to),
            step: self.step.or(file.step),
            at_t: self.at_t.or(file.at_t),
            epsilons: self.epsilons.or(file.epsilons),
            output: self.output.or(file.output),
            config: self.config,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("{0}")]
    Solver(Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Solver(_) | CliError::Io(_) => EXIT_SOLVER,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } => CliError::Invalid(e.to_string()),
            other => CliError::Solver(other),
        }
    }
}

fn invalid(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("--{field}: {msg}"))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub from: f64,
    pub to: f64,
    pub step: f64,
}

impl Sweep {
    pub const MU_DEFAULT: Sweep = Sweep {
        from: 0.1,
        to: 0.9,
        step: 0.1,
    };
    pub const LAMBDA_DEFAULT: Sweep = Sweep {
        from: 0.1,
        to: 1.0,
        step: 0.1,
    };

    /// Ascending values `from, from + step, ...` up to `to`; values within
    /// `1e-9 step` of `to` snap to it.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.to - self.from) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| {
                let v = self.from + i as f64 * self.step;
                if (v - self.to).abs() < 1e-9 * self.step {
                    self.to
                } else {
                    v
                }
            })
            .collect()
    }
}

/// Fully resolved and validated run description.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub command: Command,
    pub params: ModelParams,
    pub t_end: f64,
    pub n_points: usize,
    pub h: f64,
    pub operator: OperatorKind,
    pub n_terms: usize,
    pub n_max: usize,
    pub mode: AdomianMode,
    pub rhs: RhsForm,
    pub vary: Option<VaryAxis>,
    /// Explicit range from `--from/--to/--step`, if any.
    pub range: Option<Sweep>,
    pub at_t: f64,
    pub epsilons: Vec<f64>,
    pub output: Option<PathBuf>,
}

impl RunSpec {
    /// The sweep grid for `axis`, honoring an explicit range.
    pub fn sweep(&self, axis: VaryAxis) -> Vec<f64> {
        match (self.range, axis) {
            (Some(r), _) => r.values(),
            (None, VaryAxis::Lambda) => Sweep::LAMBDA_DEFAULT.values(),
            (None, _) => Sweep::MU_DEFAULT.values(),
        }
    }

    pub fn times(&self) -> Vec<f64> {
        let last = self.n_points - 1;
        (0..=last)
            .map(|i| {
                if i == last {
                    self.t_end
                } else {
                    self.t_end * i as f64 / last as f64
                }
            })
            .collect()
    }

    pub fn from_args(args: Args) -> Result<RunSpec, CliError> {
        let args = match &args.config {
            Some(path) => {
                let file = load_config(path)?;
                args.merged_with(file)
            }
            None => args,
        };
        let command = args
            .command
            .ok_or_else(|| invalid("command", "a command is required"))?;
        let d = ModelParams::default();
        let params = ModelParams {
            r: args.r.unwrap_or(d.r),
            k: args.k.unwrap_or(d.k),
            z0: args.z0.unwrap_or(d.z0),
            mu: args.mu.unwrap_or(d.mu),
            lambda: args.lambda.unwrap_or(d.lambda),
            b_norm: args.b_norm.unwrap_or(d.b_norm),
        };
        params.validate().map_err(|e| match e {
            Error::Domain {
                field,
                value,
                reason,
            } => invalid(&field.replace('_', "-"), format!("{value} ({reason})")),
            other => CliError::Invalid(other.to_string()),
        })?;

        let t_end = args.t_end.unwrap_or(10.0);
        if !(t_end > 0.0) || !t_end.is_finite() {
            return Err(invalid("t-end", format!("{t_end} must be positive")));
        }
        let n_points = args.points.unwrap_or(101);
        if n_points < 2 {
            return Err(invalid("points", format!("{n_points} must be at least 2")));
        }
        let h = args.h.unwrap_or(1e-3);
        if !(h > 0.0) || !h.is_finite() {
            return Err(invalid("h", format!("{h} must be positive")));
        }
        let n_terms = args.n_terms.unwrap_or(DEFAULT_TERMS);
        if n_terms == 0 {
            return Err(invalid("n-terms", "must be at least 1"));
        }
        let n_max = args.n_max.unwrap_or(DEFAULT_TERMS);
        if n_max == 0 {
            return Err(invalid("n-max", "must be at least 1"));
        }

        let range = match (args.from, args.to, args.step) {
            (None, None, None) => None,
            (from, to, step) => {
                let default = match (command, args.vary) {
                    (Command::MlEval, _) => Sweep {
                        from: -10.0,
                        to: 10.0,
                        step: 1.0,
                    },
                    (_, Some(VaryAxis::Lambda)) => Sweep::LAMBDA_DEFAULT,
                    _ => Sweep::MU_DEFAULT,
                };
                Some(Sweep {
                    from: from.unwrap_or(default.from),
                    to: to.unwrap_or(default.to),
                    step: step.unwrap_or(default.step),
                })
            }
        };
        if let Some(r) = range {
            if !(r.from.is_finite() && r.to.is_finite() && r.to >= r.from) {
                return Err(invalid(
                    "to",
                    format!("range [{}, {}] is empty", r.from, r.to),
                ));
            }
            if command != Command::MlEval {
                if !(r.step > 0.0) || !r.step.is_finite() {
                    return Err(invalid("step", format!("{} must be positive", r.step)));
                }
                if (r.to - r.from) / r.step > 1e6 {
                    return Err(invalid("step", "too many sweep values"));
                }
            }
        }

        let vary = args.vary;
        let at_t = args.at_t.unwrap_or(t_end);
        if !(at_t >= 0.0) || !at_t.is_finite() {
            return Err(invalid("at-t", format!("{at_t} must be nonnegative")));
        }
        let epsilons = args.epsilons.unwrap_or_else(|| vec![1e-2, 1e-3, 1e-4]);

        let spec = RunSpec {
            command,
            params,
            t_end,
            n_points,
            h,
            operator: args.operator.map(Into::into).unwrap_or(OperatorKind::Abc),
            n_terms,
            n_max,
            mode: args.mode.map(Into::into).unwrap_or_default(),
            rhs: args.rhs.map(Into::into).unwrap_or_default(),
            vary,
            range,
            at_t,
            epsilons,
            output: args.output,
        };
        spec.check_sweep_domain()?;
        Ok(spec)
    }

    fn check_sweep_domain(&self) -> Result<(), CliError> {
        let axes: Vec<VaryAxis> = match (self.command, self.vary) {
            (Command::Surface, None) => vec![VaryAxis::Mu],
            (Command::Surface, Some(VaryAxis::Both)) => vec![VaryAxis::Mu, VaryAxis::Lambda],
            (Command::Surface | Command::ExactLambda0, Some(axis)) => vec![axis],
            _ => Vec::new(),
        };
        if self.command == Command::ExactLambda0
            && matches!(self.vary, Some(VaryAxis::Lambda | VaryAxis::Both))
        {
            return Err(invalid("vary", "exact-lambda0 sweeps mu only"));
        }
        for axis in axes {
            let in_domain = |v: f64| match axis {
                VaryAxis::Lambda => (0.0..=1.0).contains(&v),
                _ => v > 0.0 && v <= 1.0,
            };
            let name = if axis == VaryAxis::Lambda {
                "lambda"
            } else {
                "mu"
            };
            if let Some(&v) = self.sweep(axis).iter().find(|&&v| !in_domain(v)) {
                let field = match self.range {
                    Some(range) if !in_domain(range.from) => "from",
                    Some(_) => "to",
                    None => "vary",
                };
                return Err(invalid(
                    field,
                    format!("{name} sweep value {v} outside the parameter domain"),
                ));
            }
        }
        Ok(())
    }
}

fn load_config(path: &Path) -> Result<Args, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| invalid("config", format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| invalid("config", e.to_string()))
}

/// Formats `x` with 12 significant digits, fixed notation for moderate
/// magnitudes and scientific otherwise, with trailing zeros removed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

struct Csv {
    buf: String,
}

impl Csv {
    fn new(header: &str) -> Self {
        let mut buf = String::with_capacity(4096);
        buf.push_str(header);
        buf.push('\n');
        Self { buf }
    }

    fn row(&mut self, cells: &[f64]) {
        push_row(&mut self.buf, cells);
    }

    fn extend(&mut self, rows: &str) {
        self.buf.push_str(rows);
    }
}

fn push_row(buf: &mut String, cells: &[f64]) {
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            buf.push(',');
        }
        let _ = write!(buf, "{}", format_number(*c));
    }
    buf.push('\n');
}

/// Produces the CSV text for a validated spec.
pub fn render(spec: &RunSpec) -> Result<String, CliError> {
    let p = spec.params;
    let times = spec.times();
    match spec.command {
        Command::Classical => {
            let mut csv = Csv::new("t,z");
            for &t in &times {
                csv.row(&[t, classical_exact(&p, t)?]);
            }
            Ok(csv.buf)
        }
        Command::MlEval => {
            let range = spec.range.unwrap_or(Sweep {
                from: -10.0,
                to: 10.0,
                step: 1.0,
            });
            let mut csv = Csv::new("x,e_mu");
            let last = spec.n_points - 1;
            for i in 0..=last {
                let x = if i == last {
                    range.to
                } else {
                    range.from + (range.to - range.from) * i as f64 / last as f64
                };
                csv.row(&[x, mittag_leffler(p.mu, x)?]);
            }
            Ok(csv.buf)
        }
        Command::ExactLambda0 => match spec.vary {
            Some(VaryAxis::Mu) => {
                let mus = spec.sweep(VaryAxis::Mu);
                let mut csv = Csv::new("t,mu,z");
                let blocks = par_blocks(&mus, |mu| {
                    let q = p.with_mu(mu);
                    let mut s = String::new();
                    for &t in &times {
                        push_row(&mut s, &[t, mu, abc_exact_lambda0(&q, t)?]);
                    }
                    Ok(s)
                })?;
                blocks.iter().for_each(|b| csv.extend(b));
                Ok(csv.buf)
            }
            _ => {
                let mut csv = Csv::new("t,z");
                for &t in &times {
                    csv.row(&[t, abc_exact_lambda0(&p, t)?]);
                }
                Ok(csv.buf)
            }
        },
        Command::Hsv => {
            let sol = hsv_iterate(&p, spec.n_terms, spec.mode)?;
            let mut csv = Csv::new("t,z");
            for &t in &times {
                csv.row(&[t, hsv_evaluate(&sol, t)?.value]);
            }
            Ok(csv.buf)
        }
        Command::ClosedForm => {
            let mut csv = Csv::new("t,z");
            for &t in &times {
                csv.row(&[t, paper_closed_form(&p, t)?.value]);
            }
            Ok(csv.buf)
        }
        Command::Solve => {
            let traj = solve_on_output_grid(spec, spec.operator)?;
            let mut csv = Csv::new("t,z");
            for (t, z) in times.iter().zip(&traj) {
                csv.row(&[*t, *z]);
            }
            Ok(csv.buf)
        }
        Command::Compare => {
            let (cfg, stride) = output_solver_config(spec, OperatorKind::Abc)?;
            let [abc, cfc, caputo] = compare_operators(&p, &cfg)?;
            let mut csv = Csv::new("t,z_abc,z_cfc,z_caputo");
            let (a, c, k) = (
                abc.subsample(stride),
                cfc.subsample(stride),
                caputo.subsample(stride),
            );
            for (i, &t) in times.iter().enumerate() {
                csv.row(&[t, a.values[i], c.values[i], k.values[i]]);
            }
            Ok(csv.buf)
        }
        Command::Surface => surface(spec, &times),
        Command::Convergence => {
            let sol = hsv_iterate(&p, spec.n_max, spec.mode)?;
            let mut csv = Csv::new("n_terms,t,partial_sum,last_term_abs");
            for n in 1..=spec.n_max {
                let truncated = HsvSolution {
                    terms: sol.terms[..=n].to_vec(),
                    ..sol.clone()
                };
                for &t in &times {
                    let v = hsv_evaluate(&truncated, t)?;
                    csv.row(&[n as f64, t, v.value, v.last_term_abs]);
                }
            }
            Ok(csv.buf)
        }
        Command::Stability => {
            let (cfg, _) = output_solver_config(spec, spec.operator)?;
            let report = hyers_ulam_probe(&p, &cfg, &spec.epsilons)?;
            let mut csv = Csv::new("epsilon,max_deviation,c_estimate");
            for i in 0..report.epsilons.len() {
                csv.row(&[
                    report.epsilons[i],
                    report.deviations[i],
                    report.c_estimates[i],
                ]);
            }
            Ok(csv.buf)
        }
    }
}

fn surface(spec: &RunSpec, times: &[f64]) -> Result<String, CliError> {
    let p = spec.params;
    let eval = |q: ModelParams, t: f64| -> Result<f64, CliError> {
        let sol = hsv_iterate(&q, spec.n_terms, spec.mode)?;
        Ok(hsv_evaluate(&sol, t)?.value)
    };
    match spec.vary.unwrap_or(VaryAxis::Mu) {
        axis @ (VaryAxis::Mu | VaryAxis::Lambda) => {
            let header = if axis == VaryAxis::Mu {
                "t,mu,z"
            } else {
                "t,lambda,z"
            };
            let values = spec.sweep(axis);
            let blocks = par_blocks(&values, |v| {
                let q = if axis == VaryAxis::Mu {
                    p.with_mu(v)
                } else {
                    p.with_lambda(v)
                };
                let sol = hsv_iterate(&q, spec.n_terms, spec.mode)?;
                let mut s = String::new();
                for &t in times {
                    push_row(&mut s, &[t, v, hsv_evaluate(&sol, t)?.value]);
                }
                Ok(s)
            })?;
            let mut csv = Csv::new(header);
            blocks.iter().for_each(|b| csv.extend(b));
            Ok(csv.buf)
        }
        VaryAxis::Both => {
            let mus = spec.sweep(VaryAxis::Mu);
            let lambdas = spec.sweep(VaryAxis::Lambda);
            let blocks = par_blocks(&mus, |mu| {
                let mut s = String::new();
                for &lambda in &lambdas {
                    let z = eval(p.with_mu(mu).with_lambda(lambda), spec.at_t)?;
                    push_row(&mut s, &[mu, lambda, z]);
                }
                Ok(s)
            })?;
            let mut csv = Csv::new("mu,lambda,z");
            blocks.iter().for_each(|b| csv.extend(b));
            Ok(csv.buf)
        }
    }
}

/// Runs `f` over sweep values in parallel, returning results in input order.
fn par_blocks<F>(values: &[f64], f: F) -> Result<Vec<String>, CliError>
where
    F: Fn(f64) -> Result<String, CliError> + Sync,
{
    values.par_iter().map(|&v| f(v)).collect()
}

/// Solver configuration whose grid contains every output time, plus the
/// stride between output samples.
fn output_solver_config(
    spec: &RunSpec,
    operator: OperatorKind,
) -> Result<(SolveConfig, usize), CliError> {
    let intervals = spec.n_points - 1;
    let dt = spec.t_end / intervals as f64;
    let stride = (dt / spec.h - 1e-9).ceil().max(1.0) as usize;
    let h = dt / stride as f64;
    let cfg = SolveConfig::new(operator, spec.t_end, h).with_rhs(spec.rhs);
    cfg.validate().map_err(|e| invalid("h", e))?;
    if cfg.steps() != intervals * stride {
        return Err(invalid(
            "h",
            "solver grid does not align with the output grid",
        ));
    }
    Ok((cfg, stride))
}

fn solve_on_output_grid(spec: &RunSpec, operator: OperatorKind) -> Result<Vec<f64>, CliError> {
    let (cfg, stride) = output_solver_config(spec, operator)?;
    Ok(solve(&spec.params, &cfg)?.subsample(stride).values)
}

/// Renders the spec and writes it to its destination.
pub fn run(spec: &RunSpec) -> Result<(), CliError> {
    let text = render(spec)?;
    match &spec.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args(args: Args) -> i32 {
    let result = RunSpec::from_args(args).and_then(|spec| run(&spec));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("fraclogistic: {e}");
            e.exit_code()
        }
    }
}
