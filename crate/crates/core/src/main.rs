use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bskernel::error::Error;
use bskernel::msm::{
    msm_bs_closed_form, msm_quadrature_with, FunctionKind, Integrand, MsmParams, Side,
};
use bskernel::pathway::{
    pathway_bs_closed_form, pathway_density, pathway_quadrature_with, PathwayDensityParams,
    PathwayParams,
};
use bskernel::quadrature::QuadConfig;
use bskernel::series::{SeriesConfig, SeriesEval};
use bskernel::special::{bessel_first_kind_with, bessel_struve_kernel_with, struve_with};
use bskernel::verify::{run_suite_with, Report, Status, Suite, VerifyConfig};
use bskernel::wright::{wright_eval_with, WrightSpec};

#[derive(Parser)]
#[command(
    name = "bskernel",
    version,
    about = "Bessel-Struve kernel, Wright function and fractional-integral images"
)]
struct Cli {
    /// Relative tolerance: series tolerance for eval/table, override for verify.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Output format; eval and table default to csv, verify to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for verification.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// JSON verification config (tolerances, grids, term_cap).
    #[arg(long, global = true)]
    seed_grid: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        function: Function,
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Evaluate one function over `--x start:stop:count`.
    Table {
        function: Function,
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Run a verification suite and emit its report.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    /// Bessel-Struve kernel S_nu.
    #[value(name = "S")]
    S,
    /// Bessel J_nu.
    #[value(name = "J")]
    J,
    /// Modified Bessel I_nu.
    #[value(name = "I")]
    I,
    /// Struve H_nu.
    #[value(name = "H")]
    H,
    /// Modified Struve L_nu.
    #[value(name = "L")]
    L,
    /// Fox-Wright pPsiq from --upper and --lower.
    Wright,
    /// Left Marichev-Saigo-Maeda image of t^(rho-1) K(lambda t).
    MsmLeft,
    /// Right Marichev-Saigo-Maeda image of t^(rho-1) K(lambda/t).
    MsmRight,
    /// Pathway image of t^(sigma-1) K(lambda t).
    Pathway,
    /// Pathway density f(x).
    Density,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// K = 1.
    Monomial,
    /// K = S_nu(lambda w).
    BsKernel,
    /// K = e^w.
    Exp,
    /// K = (e^w - 1)/w.
    Expm1,
    /// K = I_0(w) + L_0(w).
    I0PlusL0,
    /// K = 2(I_1(w) + L_1(w))/w.
    TwoI1PlusTwoL1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Wright-series closed form.
    Closed,
    /// Tanh-sinh quadrature of the defining integral.
    Quadrature,
}

#[derive(Args, Clone)]
struct Params {
    /// Order: S, J, I, H, L and the bs-kernel integrand.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
    /// Kernel scale λ of the bs-kernel integrand.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// MSM α.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// MSM α′.
    #[arg(long, allow_hyphen_values = true)]
    alpha_prime: Option<f64>,
    /// MSM β, or the density shape β.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// MSM β′.
    #[arg(long, allow_hyphen_values = true)]
    beta_prime: Option<f64>,
    /// MSM γ, or the density shape γ.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    /// Exponent of t^(ρ−1); the pathway σ.
    #[arg(long, visible_alias = "sigma", allow_hyphen_values = true)]
    rho: Option<f64>,
    /// Integrand kernel K for msm-left, msm-right and pathway.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Closed form or reference quadrature.
    #[arg(long, value_enum, default_value = "closed")]
    method: Method,
    /// Pathway η.
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<f64>,
    /// Pathway scale a (operator and density).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Pathway α (operator needs α < 1; the density regime comes from comparing it with 1).
    #[arg(long, allow_hyphen_values = true)]
    pathway_alpha: Option<f64>,
    /// Density exponent δ.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Wright upper pairs `a:A,b:B`.
    #[arg(long, allow_hyphen_values = true)]
    upper: Option<String>,
    /// Wright lower pairs `a:A,b:B`.
    #[arg(long, allow_hyphen_values = true)]
    lower: Option<String>,
}

/// Exit paths: usage problems are 2, everything else that fails is 1.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Domain(_) | Error::UnknownSuite(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn need(value: Option<f64>, name: &str) -> CliResult<f64> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn pairs(text: &Option<String>) -> CliResult<Vec<(f64, f64)>> {
    let Some(text) = text else {
        return Ok(Vec::new());
    };
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once(':').ok_or_else(|| {
                Failure::Usage(format!("pair `{pair}` is not `coefficient:slope`"))
            })?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Failure::Usage(format!("`{s}` is not a number")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

/// `start:stop:count`, inclusive of both ends; `count = 1` gives `start`.
fn range(spec: &str) -> CliResult<Vec<f64>> {
    let bad = || Failure::Usage(format!("range `{spec}` is not start:stop:count"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(bad());
    };
    let start: f64 = start.parse().map_err(|_| bad())?;
    let stop: f64 = stop.parse().map_err(|_| bad())?;
    let count: usize = count.parse().map_err(|_| bad())?;
    if count == 0 || !start.is_finite() || !stop.is_finite() {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            if i + 1 == count {
                stop
            } else {
                start + step * i as f64
            }
        })
        .collect())
}

fn integrand_kind(p: &Params) -> CliResult<FunctionKind> {
    let kind = p
        .kind
        .ok_or_else(|| Failure::Usage("missing --kind".into()))?;
    Ok(match kind {
        Kind::Monomial => FunctionKind::Monomial,
        Kind::BsKernel => FunctionKind::BsKernel {
            nu: need(p.nu, "nu")?,
            lambda: p.lambda.unwrap_or(1.0),
        },
        Kind::Exp => FunctionKind::Exp,
        Kind::Expm1 => FunctionKind::ExpM1OverT,
        Kind::I0PlusL0 => FunctionKind::I0PlusL0,
        Kind::TwoI1PlusTwoL1 => FunctionKind::TwoI1PlusTwoL1OverT,
    })
}

/// One evaluator per function, with every parameter resolved up front.
fn evaluator(
    function: Function,
    p: &Params,
    cfg: SeriesConfig,
) -> CliResult<Box<dyn Fn(f64) -> bskernel::error::Result<SeriesEval>>> {
    Ok(match function {
        Function::S => {
            let nu = need(p.nu, "nu")?;
            Box::new(move |x| bessel_struve_kernel_with(nu, x, cfg))
        }
        Function::J | Function::I => {
            let nu = need(p.nu, "nu")?;
            let modified = function == Function::I;
            Box::new(move |x| bessel_first_kind_with(nu, x, modified, cfg))
        }
        Function::H | Function::L => {
            let nu = need(p.nu, "nu")?;
            let modified = function == Function::L;
            Box::new(move |x| struve_with(nu, x, modified, cfg))
        }
        Function::Wright => {
            let spec = WrightSpec::new(pairs(&p.upper)?, pairs(&p.lower)?);
            Box::new(move |z| wright_eval_with(&spec, z, cfg))
        }
        Function::MsmLeft | Function::MsmRight => {
            let side = if function == Function::MsmLeft {
                Side::Left
            } else {
                Side::Right
            };
            let params = MsmParams::new(
                need(p.alpha, "alpha")?,
                need(p.alpha_prime, "alpha-prime")?,
                need(p.beta, "beta")?,
                need(p.beta_prime, "beta-prime")?,
                need(p.gamma, "gamma")?,
            )?;
            let integrand = Integrand::new(integrand_kind(p)?, need(p.rho, "rho")?);
            match p.method {
                Method::Closed => {
                    let image = msm_bs_closed_form(side, &params, integrand)?;
                    Box::new(move |x| image.evaluate_with(x, cfg))
                }
                Method::Quadrature => {
                    let q = QuadConfig {
                        tol: cfg.tol.max(1e-15),
                        ..QuadConfig::default()
                    };
                    Box::new(move |x| msm_quadrature_with(side, &params, integrand, x, q))
                }
            }
        }
        Function::Pathway => {
            let params = PathwayParams::new(
                need(p.eta, "eta")?,
                need(p.a, "a")?,
                need(p.pathway_alpha, "pathway-alpha")?,
            )?;
            let integrand = Integrand::new(integrand_kind(p)?, need(p.rho, "rho")?);
            match p.method {
                Method::Closed => {
                    let image = pathway_bs_closed_form(&params, integrand)?;
                    Box::new(move |x| image.evaluate_with(x, cfg))
                }
                Method::Quadrature => {
                    let q = QuadConfig {
                        tol: cfg.tol.max(1e-15),
                        ..QuadConfig::default()
                    };
                    Box::new(move |x| pathway_quadrature_with(&params, integrand, x, q))
                }
            }
        }
        Function::Density => {
            let dp = PathwayDensityParams {
                gamma_shape: need(p.gamma, "gamma")?,
                delta: need(p.delta, "delta")?,
                beta_shape: need(p.beta, "beta")?,
                a: need(p.a, "a")?,
                pathway_alpha: need(p.pathway_alpha, "pathway-alpha")?,
            };
            dp.validate()?;
            Box::new(move |x| Ok(SeriesEval::exact(pathway_density(&dp, x)?)))
        }
    })
}

#[derive(Serialize)]
struct Row {
    x: f64,
    value: f64,
    abs_error_est: f64,
    terms_used: usize,
}

/// 17 significant digits, round-trip exact.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_rows(out: &mut dyn Write, rows: &[Row], format: Format) -> CliResult<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["x", "value", "abs_error_est", "terms_used"])
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            for r in rows {
                w.write_record([
                    num(r.x),
                    num(r.value),
                    num(r.abs_error_est),
                    r.terms_used.to_string(),
                ])
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, report: &Report, format: Format) -> CliResult<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "id",
                "status",
                "max_rel_dev",
                "tolerance",
                "n_points",
                "worst_point",
            ])
            .map_err(|e| Failure::Runtime(e.to_string()))?;
            for c in &report.checks {
                let status =
                    serde_json::to_value(c.status).map_err(|e| Failure::Runtime(e.to_string()))?;
                let worst: Vec<String> = c
                    .worst_point
                    .iter()
                    .map(|(k, v)| format!("{k}={}", num(*v)))
                    .collect();
                w.write_record([
                    c.id.clone(),
                    status.as_str().unwrap_or_default().to_string(),
                    c.max_rel_dev.map(num).unwrap_or_default(),
                    num(c.tolerance),
                    c.n_points.to_string(),
                    worst.join(";"),
                ])
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
    }
    let series = SeriesConfig {
        tol: cli.tol.unwrap_or(f64::EPSILON),
        ..SeriesConfig::default()
    };
    if series.tol.is_nan() || series.tol <= 0.0 {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    match &cli.command {
        Command::Eval {
            function,
            params,
            x,
        } => {
            let f = evaluator(*function, params, series)?;
            let r = f(*x)?;
            let row = Row {
                x: *x,
                value: r.value,
                abs_error_est: r.abs_error_est,
                terms_used: r.terms_used,
            };
            write_rows(&mut out, &[row], cli.format.unwrap_or(Format::Csv))?;
            Ok(true)
        }
        Command::Table {
            function,
            params,
            x,
        } => {
            let f = evaluator(*function, params, series)?;
            let rows = range(x)?
                .into_iter()
                .map(|x| {
                    let r = f(x)?;
                    Ok(Row {
                        x,
                        value: r.value,
                        abs_error_est: r.abs_error_est,
                        terms_used: r.terms_used,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            write_rows(&mut out, &rows, cli.format.unwrap_or(Format::Csv))?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let mut cfg = match &cli.seed_grid {
                Some(path) => VerifyConfig::from_path(path)?,
                None => VerifyConfig::default(),
            };
            if let Some(tol) = cli.tol {
                cfg = cfg.with_tolerance_override(tol);
            }
            let report = run_suite_with(suite, &cfg, cli.threads)?;
            write_report(&mut out, &report, cli.format.unwrap_or(Format::Json))?;
            for c in &report.checks {
                if !matches!(c.status, Status::Pass | Status::DocumentedMismatch) {
                    eprintln!(
                        "{}: {:?} {}",
                        c.id,
                        c.status,
                        c.error.as_deref().unwrap_or("")
                    );
                }
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
