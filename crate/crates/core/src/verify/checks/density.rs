use std::f64::consts::PI;

use crate::error::Result;
use crate::gamma::gamma_ratio;
use crate::pathway::{pathway_density_mass, pathway_norm_const, PathwayDensityParams};
use crate::quadrature::QuadConfig;
use crate::verify::config::VerifyConfig;
use crate::verify::grid::{stream, uniform};
use crate::verify::{Anchor, Check, Metric, Oracle, Sample};

use super::{compare, passing, printed};

const STREAM_SUB: u64 = 401;
const STREAM_SUPER: u64 = 402;
const STREAM_LIMIT: u64 = 403;

fn params(
    gamma_shape: f64,
    delta: f64,
    beta_shape: f64,
    a: f64,
    pathway_alpha: f64,
) -> PathwayDensityParams {
    PathwayDensityParams {
        gamma_shape,
        delta,
        beta_shape,
        a,
        pathway_alpha,
    }
}

fn coords(dp: &PathwayDensityParams) -> Vec<(&'static str, f64)> {
    vec![
        ("gamma", dp.gamma_shape),
        ("delta", dp.delta),
        ("beta", dp.beta_shape),
        ("a", dp.a),
        ("pathway_alpha", dp.pathway_alpha),
    ]
}

fn mass(dp: &PathwayDensityParams) -> Result<f64> {
    Ok(pathway_density_mass(dp, QuadConfig::default())?.value)
}

fn mass_sample(dp: PathwayDensityParams) -> Sample {
    Sample::new(coords(&dp), move || Ok(compare(mass(&dp)?, 1.0)))
}

/// Constant as stated for the super regime: base `a(1−α)`, negative there.
fn super_constant_as_stated(dp: &PathwayDensityParams) -> Result<f64> {
    let r = dp.gamma_shape / dp.delta;
    let e = dp.beta_shape / (dp.pathway_alpha - 1.0);
    Ok(
        0.5 * dp.delta
            * (dp.a * (1.0 - dp.pathway_alpha)).powf(r)
            * gamma_ratio(&[e], &[r, e - r])?,
    )
}

/// Constant as stated for the limit regime, without the factor `δ`.
fn limit_constant_as_stated(dp: &PathwayDensityParams) -> Result<f64> {
    let r = dp.gamma_shape / dp.delta;
    Ok(0.5 * (dp.a * dp.beta_shape).powf(r) * gamma_ratio(&[], &[r])?)
}

pub(super) fn checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;
    let g = &cfg.grids;
    let n = g.density_samples;

    let triangular = params(1.0, 1.0, 1.0, 1.0, 0.0);
    let cauchy = params(1.0, 2.0, 1.0, 1.0, 2.0);
    let normal = params(1.0, 2.0, 1.0, 0.5, 1.0);

    let constants = [
        (triangular, 1.0),
        (cauchy, 1.0 / PI),
        (params(2.0, 1.0, 2.0, 1.0, 0.0), 6.0),
        (normal, 1.0 / (2.0 * PI).sqrt()),
    ]
    .into_iter()
    .map(|(dp, expect)| {
        Sample::new(coords(&dp), move || {
            Ok(compare(pathway_norm_const(&dp)?, expect))
        })
    })
    .collect();

    let mut rng = stream(g.seed, STREAM_SUB);
    let sub: Vec<PathwayDensityParams> = (0..n)
        .map(|_| {
            params(
                uniform(&mut rng, 0.5, 3.0),
                uniform(&mut rng, 0.5, 3.0),
                uniform(&mut rng, 0.0, 3.0),
                uniform(&mut rng, 0.5, 2.0),
                uniform(&mut rng, -1.0, 0.9),
            )
        })
        .collect();
    let mut rng = stream(g.seed, STREAM_SUPER);
    let sup: Vec<PathwayDensityParams> = (0..n)
        .map(|_| {
            let alpha = uniform(&mut rng, 1.1, 3.0);
            let gamma = uniform(&mut rng, 0.5, 2.0);
            let delta = uniform(&mut rng, 1.0, 3.0);
            // Keep β/(α−1) − γ/δ ≥ 0.5 so the tails are integrable with room.
            let excess = uniform(&mut rng, 0.5, 3.0);
            let beta = (alpha - 1.0) * (gamma / delta + excess);
            params(gamma, delta, beta, uniform(&mut rng, 0.5, 2.0), alpha)
        })
        .collect();
    let mut rng = stream(g.seed, STREAM_LIMIT);
    let limit: Vec<PathwayDensityParams> = (0..n)
        .map(|_| {
            params(
                uniform(&mut rng, 0.5, 3.0),
                uniform(&mut rng, 0.5, 3.0),
                uniform(&mut rng, 0.2, 3.0),
                uniform(&mut rng, 0.5, 2.0),
                1.0,
            )
        })
        .collect();

    let stated_limit = limit
        .iter()
        .map(|&dp| {
            Sample::new(coords(&dp), move || {
                let scale = limit_constant_as_stated(&dp)? / pathway_norm_const(&dp)?;
                Ok(compare(mass(&dp)? * scale, 1.0))
            })
        })
        .collect();
    let stated_super = sup
        .iter()
        .copied()
        .chain([cauchy])
        .map(|dp| {
            Sample::new(coords(&dp), move || {
                let scale = super_constant_as_stated(&dp)? / pathway_norm_const(&dp)?;
                Ok(compare(mass(&dp)? * scale, 1.0))
            })
        })
        .collect();

    vec![
        passing(
            "density-norm.triangular",
            Anchor::DensityNorm,
            "triangular density (gamma = delta = beta = a = 1, alpha = 0) integrates to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            vec![mass_sample(triangular)],
        ),
        passing(
            "density-norm.cauchy",
            Anchor::DensityNorm,
            "Cauchy density (gamma = 1, delta = 2, beta = 1, a = 1, alpha = 2) integrates to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            vec![mass_sample(cauchy)],
        ),
        passing(
            "density-norm.normal",
            Anchor::DensityNorm,
            "limit-regime normal density (gamma = 1, delta = 2, a beta = 1/2) integrates to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            vec![mass_sample(normal)],
        ),
        passing(
            "density-norm.constants",
            Anchor::DensityNorm,
            "normalizing constants of the triangular, Cauchy, quadratic-beta and normal cases",
            Oracle::Analytic,
            Metric::Relative,
            tol.identity,
            constants,
        ),
        passing(
            "density-norm.sub-grid",
            Anchor::DensityNorm,
            "random admissible sub-regime (alpha < 1) densities integrate to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            sub.into_iter().map(mass_sample).collect(),
        ),
        passing(
            "density-norm.super-grid",
            Anchor::DensityNorm,
            "random admissible super-regime (alpha > 1) densities integrate to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            sup.into_iter().map(mass_sample).collect(),
        ),
        passing(
            "density-norm.limit-grid",
            Anchor::DensityNorm,
            "random limit-regime (alpha = 1) densities integrate to 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.density,
            limit.into_iter().map(mass_sample).collect(),
        ),
        printed(
            "density-norm.printed-limit",
            Anchor::DensityNorm,
            "limit-regime constant stated as (a beta)^(gamma/delta) / (2 Gamma(gamma/delta)), without delta",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.printed_threshold,
            "density-norm.limit-grid",
            stated_limit,
        ),
        printed(
            "density-norm.printed-super",
            Anchor::DensityNorm,
            "super-regime constant stated with base a(1 - alpha), which is negative for alpha > 1",
            Oracle::Quadrature,
            Metric::Absolute,
            tol.printed_threshold,
            "density-norm.super-grid",
            stated_super,
        ),
    ]
}
