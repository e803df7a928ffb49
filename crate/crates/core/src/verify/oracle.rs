//! Oracles built from pieces the closed forms do not share: the kernel's
//! power-series coefficients and the power-function images, summed directly.

use std::f64::consts::PI;

use crate::error::Result;
use crate::gamma::gamma_ratio;
use crate::msm::{msm_power_image, ClosedFormImage, MsmParams, Side};
use crate::pathway::{pathway_power_image, PathwayParams};
use crate::series::SeriesConfig;
use crate::wright::WrightSpec;

/// `c_n = Γ(ν+1)Γ((n+1)/2) / (√π n! Γ(n/2+ν+1))`, so `S_ν(u) = Σ c_n u^n`.
pub(crate) fn kernel_coefficient(nu: f64, n: usize) -> Result<f64> {
    let n = n as f64;
    Ok(gamma_ratio(&[nu + 1.0, 0.5 * (n + 1.0)], &[n + 1.0, 0.5 * n + nu + 1.0])? / PI.sqrt())
}

/// `Σ_{n<terms} c_n λ^n · image(t^{ρ±n−1})(x)`, the sign following the side.
pub(crate) fn msm_termwise(
    side: Side,
    p: &MsmParams,
    rho: f64,
    nu: f64,
    lambda: f64,
    x: f64,
    terms: usize,
) -> Result<f64> {
    let mut sum = 0.0;
    for n in 0..terms {
        let shift = match side {
            Side::Left => n as f64,
            Side::Right => -(n as f64),
        };
        let image = msm_power_image(side, p, rho + shift)?.evaluate(x)?.value;
        sum += kernel_coefficient(nu, n)? * lambda.powi(n as i32) * image;
    }
    Ok(sum)
}

/// `Σ_{n<terms} c_n λ^n · P(t^{σ+n−1})(x)`.
pub(crate) fn pathway_termwise(
    p: &PathwayParams,
    sigma: f64,
    nu: f64,
    lambda: f64,
    x: f64,
    terms: usize,
) -> Result<f64> {
    let mut sum = 0.0;
    for n in 0..terms {
        let image = pathway_power_image(p, sigma + n as f64)?.evaluate(x)?.value;
        sum += kernel_coefficient(nu, n)? * lambda.powi(n as i32) * image;
    }
    Ok(sum)
}

/// Evaluates a closed form without cancelling matched pairs, so a printed
/// formula is summed exactly as written.
pub(crate) fn evaluate_as_written(image: &ClosedFormImage, x: f64) -> Result<f64> {
    let scale = image.prefactor * x.powf(image.power_of_x);
    Ok(match &image.spec {
        None => scale,
        Some(spec) => {
            crate::wright::wright_eval_with(spec, image.argument(x), SeriesConfig::default())?.value
                * scale
        }
    })
}

/// Slope-one specs reduce to a gamma prefactor times a hypergeometric
/// series: `ΠΓ(a)/ΠΓ(b) · Σ Π(a)_k/Π(b)_k z^k/k!`.
pub(crate) fn slope_one_series(spec: &WrightSpec, z: f64, terms: usize) -> Result<f64> {
    let a: Vec<f64> = spec.upper.iter().map(|p| p.0).collect();
    let b: Vec<f64> = spec.lower.iter().map(|p| p.0).collect();
    let lead = gamma_ratio(&a, &b)?;
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 0..terms {
        sum += term;
        let k = k as f64;
        let up: f64 = a.iter().map(|&ai| ai + k).product();
        let down: f64 = b.iter().map(|&bi| bi + k).product();
        term *= up * z / (down * (k + 1.0));
    }
    Ok(lead * sum)
}
