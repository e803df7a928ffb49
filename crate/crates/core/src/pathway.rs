//! Pathway fractional integral
//! `P(f)(x) = x^η ∫_0^{x/b} [1 − b t/x]^{η/(1−α)} f(t) dt`, `b = a(1−α)`,
//! and the three-regime pathway density.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio, ln_gamma_ratio};
use crate::msm::{ClosedFormImage, Integrand};
use crate::quadrature::{tanh_sinh_unit, QuadConfig};
use crate::series::SeriesEval;
use crate::wright::WrightSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathwayParams {
    pub eta: f64,
    pub a: f64,
    pub pathway_alpha: f64,
}

impl PathwayParams {
    pub fn new(eta: f64, a: f64, pathway_alpha: f64) -> Result<Self> {
        let p = PathwayParams {
            eta,
            a,
            pathway_alpha,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Precondition(format!(
                "pathway scale a = {} must be > 0",
                self.a
            )));
        }
        if !(self.pathway_alpha < 1.0) {
            return Err(Error::Precondition(format!(
                "pathway operator needs α < 1, got {}",
                self.pathway_alpha
            )));
        }
        if !(self.kernel_exponent() > -1.0) {
            return Err(Error::Precondition(format!(
                "pathway operator needs η/(1−α) > −1, got {}",
                self.kernel_exponent()
            )));
        }
        Ok(())
    }

    /// `b = a(1−α)`; the integration range is `(0, x/b)`.
    pub fn scale(&self) -> f64 {
        self.a * (1.0 - self.pathway_alpha)
    }

    /// `η/(1−α)`.
    pub fn kernel_exponent(&self) -> f64 {
        self.eta / (1.0 - self.pathway_alpha)
    }
}

/// Image of `t^{β−1}`: `Γ(β)Γ(1+e) / (b^β Γ(1+e+β)) · x^{η+β}`, `e = η/(1−α)`.
pub fn pathway_power_image(p: &PathwayParams, beta_exp: f64) -> Result<ClosedFormImage> {
    p.validate()?;
    if !(beta_exp > 0.0) {
        return Err(Error::Precondition(format!(
            "pathway power image needs β > 0, got {beta_exp}"
        )));
    }
    let e = p.kernel_exponent();
    let prefactor =
        gamma_ratio(&[beta_exp, 1.0 + e], &[1.0 + e + beta_exp])? / p.scale().powf(beta_exp);
    Ok(ClosedFormImage::monomial(prefactor, p.eta + beta_exp))
}

/// Closed-form image of `t^{σ−1} S_ν(λt)`, assembled termwise from the power image:
///
/// ```text
/// Γ(ν+1)Γ(1+e) / (√π b^σ) · x^{η+σ} · 2Ψ2[(1/2,1/2), (σ,1); (ν+1,1/2), (1+e+σ,1) | λx/b]
/// ```
pub fn pathway_bs_closed_form(p: &PathwayParams, integrand: Integrand) -> Result<ClosedFormImage> {
    let Integrand { kind, rho: sigma } = integrand;
    kind.validate()?;
    let (nu, lambda) = match kind.kernel() {
        None => return pathway_power_image(p, sigma),
        Some(k) => k,
    };
    p.validate()?;
    if !(sigma > 0.0) {
        return Err(Error::Precondition(format!(
            "pathway closed form needs σ > 0, got {sigma}"
        )));
    }
    let e = p.kernel_exponent();
    let b = p.scale();
    Ok(ClosedFormImage {
        prefactor: gamma_ratio(&[nu + 1.0, 1.0 + e], &[])? / (PI.sqrt() * b.powf(sigma)),
        power_of_x: p.eta + sigma,
        spec: Some(WrightSpec::new(
            vec![(0.5, 0.5), (sigma, 1.0)],
            vec![(nu + 1.0, 0.5), (1.0 + e + sigma, 1.0)],
        )),
        argument_scale: lambda / b,
        argument_power: 1,
    })
}

pub fn pathway_quadrature(p: &PathwayParams, integrand: Integrand, x: f64) -> Result<SeriesEval> {
    pathway_quadrature_with(p, integrand, x, QuadConfig::default())
}

/// Tanh-sinh evaluation with `t = Ls`, `L = x/b`:
/// `x^η L^σ ∫_0^1 (1−s)^e s^{σ−1} K(Ls) ds`.
pub fn pathway_quadrature_with(
    p: &PathwayParams,
    integrand: Integrand,
    x: f64,
    cfg: QuadConfig,
) -> Result<SeriesEval> {
    p.validate()?;
    integrand.kind.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Precondition(format!(
            "pathway quadrature needs finite x > 0, got {x}"
        )));
    }
    let sigma = integrand.rho;
    if !(sigma > 0.0) {
        return Err(Error::Precondition(format!(
            "pathway quadrature needs σ > 0, got {sigma}"
        )));
    }
    let e = p.kernel_exponent();
    let length = x / p.scale();
    let kind = integrand.kind;
    let integral = tanh_sinh_unit(
        |s, comp| Ok(comp.powf(e) * s.powf(sigma - 1.0) * kind.value(length * s)?),
        cfg,
    )?;
    Ok(integral.scaled(x.powf(p.eta) * length.powf(sigma)))
}

/// Distance from 1 below which the pathway parameter is treated as the limit.
pub const LIMIT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Regime {
    /// `α < 1`: compact support `|x| < b^{−1/δ}`.
    Sub,
    /// `α > 1`: heavy-tailed type-2 beta form.
    Super,
    /// `α = 1`: exponential tail.
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathwayDensityParams {
    pub gamma_shape: f64,
    pub delta: f64,
    pub beta_shape: f64,
    pub a: f64,
    pub pathway_alpha: f64,
}

impl PathwayDensityParams {
    pub fn regime(&self) -> Regime {
        if (self.pathway_alpha - 1.0).abs() <= LIMIT_TOLERANCE {
            Regime::Limit
        } else if self.pathway_alpha < 1.0 {
            Regime::Sub
        } else {
            Regime::Super
        }
    }

    pub fn validate(&self) -> Result<()> {
        let PathwayDensityParams {
            gamma_shape: g,
            delta: d,
            beta_shape: b,
            a,
            pathway_alpha: al,
        } = *self;
        if ![g, d, b, a, al].iter().all(|v| v.is_finite()) {
            return Err(Error::Precondition(
                "density parameters must be finite".into(),
            ));
        }
        if !(g > 0.0 && d > 0.0 && a > 0.0) {
            return Err(Error::Precondition(format!(
                "density needs γ > 0, δ > 0, a > 0; got γ = {g}, δ = {d}, a = {a}"
            )));
        }
        if !(b >= 0.0) {
            return Err(Error::Precondition(format!("density needs β ≥ 0, got {b}")));
        }
        match self.regime() {
            Regime::Sub => Ok(()),
            Regime::Super => {
                let excess = b / (al - 1.0) - g / d;
                if excess > 0.0 {
                    Ok(())
                } else {
                    Err(Error::Precondition(format!(
                        "super-regime density needs β/(α−1) − γ/δ > 0, got {excess}"
                    )))
                }
            }
            Regime::Limit => {
                if b > 0.0 {
                    Ok(())
                } else {
                    Err(Error::Precondition(
                        "limit-regime density needs β > 0".into(),
                    ))
                }
            }
        }
    }

    /// Half-width of the support in the SUB regime, infinite otherwise.
    pub fn support_radius(&self) -> f64 {
        match self.regime() {
            Regime::Sub => (self.a * (1.0 - self.pathway_alpha)).powf(-1.0 / self.delta),
            _ => f64::INFINITY,
        }
    }
}

/// Normalizing constant `c` of the pathway density.
///
/// ```text
/// SUB:   δ b^{γ/δ} Γ(γ/δ + e + 1) / (2 Γ(γ/δ) Γ(e + 1)),   b = a(1−α), e = β/(1−α)
/// SUPER: δ b^{γ/δ} Γ(e) / (2 Γ(γ/δ) Γ(e − γ/δ)),            b = a(α−1), e = β/(α−1)
/// LIMIT: δ (aβ)^{γ/δ} / (2 Γ(γ/δ))
/// ```
pub fn pathway_norm_const(dp: &PathwayDensityParams) -> Result<f64> {
    dp.validate()?;
    let PathwayDensityParams {
        gamma_shape: g,
        delta: d,
        beta_shape: beta,
        a,
        pathway_alpha: al,
    } = *dp;
    let r = g / d;
    let (log_scale, num, den) = match dp.regime() {
        Regime::Sub => {
            let e = beta / (1.0 - al);
            (
                (a * (1.0 - al)).ln() * r,
                vec![r + e + 1.0],
                vec![r, e + 1.0],
            )
        }
        Regime::Super => {
            let e = beta / (al - 1.0);
            ((a * (al - 1.0)).ln() * r, vec![e], vec![r, e - r])
        }
        Regime::Limit => ((a * beta).ln() * r, vec![], vec![r]),
    };
    let (log_ratio, sign) = ln_gamma_ratio(&num, &den)?
        .ok_or_else(|| Error::Precondition("normalizing constant vanishes".into()))?;
    let c = 0.5 * d * f64::from(sign) * (log_scale + log_ratio).exp();
    if !c.is_finite() {
        return Err(Error::Overflow(log_scale + log_ratio));
    }
    Ok(c)
}

pub fn pathway_density(dp: &PathwayDensityParams, x: f64) -> Result<f64> {
    let c = pathway_norm_const(dp)?;
    Ok(c * density_shape(dp, x))
}

/// Unnormalized density; zero outside the SUB support.
fn density_shape(dp: &PathwayDensityParams, x: f64) -> f64 {
    let PathwayDensityParams {
        gamma_shape: g,
        delta: d,
        beta_shape: beta,
        a,
        pathway_alpha: al,
    } = *dp;
    let r = x.abs();
    let rd = r.powf(d);
    let body = match dp.regime() {
        Regime::Sub => {
            let base = 1.0 - a * (1.0 - al) * rd;
            if base <= 0.0 {
                return 0.0;
            }
            base.powf(beta / (1.0 - al))
        }
        Regime::Super => (1.0 + a * (al - 1.0) * rd).powf(-beta / (al - 1.0)),
        Regime::Limit => (-a * beta * rd).exp(),
    };
    r.powf(g - 1.0) * body
}

/// Log of the unnormalized density at `r = |x| > 0`, formed in log space so
/// that the tails of the unbounded regimes neither overflow nor underflow early.
fn log_density_shape(dp: &PathwayDensityParams, r: f64) -> f64 {
    let PathwayDensityParams {
        gamma_shape: g,
        delta: d,
        beta_shape: beta,
        a,
        pathway_alpha: al,
    } = *dp;
    let ln_r = r.ln();
    let body = match dp.regime() {
        Regime::Sub => {
            let base = 1.0 - a * (1.0 - al) * r.powf(d);
            if base <= 0.0 {
                return f64::NEG_INFINITY;
            }
            beta / (1.0 - al) * base.ln()
        }
        Regime::Super => {
            let b = a * (al - 1.0);
            let ln_bxd = b.ln() + d * ln_r;
            // ln(1 + e^y), switching forms before e^y overflows
            let ln_base = if ln_bxd < 30.0 {
                ln_bxd.exp().ln_1p()
            } else {
                ln_bxd + (-ln_bxd).exp().ln_1p()
            };
            -beta / (al - 1.0) * ln_base
        }
        Regime::Limit => -a * beta * (d * ln_r).exp(),
    };
    (g - 1.0) * ln_r + body
}

/// `∫ f(x) dx` over the real line by tanh-sinh: `x = R s` on the SUB support,
/// `x = u/(1−u)` for the unbounded regimes, doubled by symmetry.
pub fn pathway_density_mass(dp: &PathwayDensityParams, cfg: QuadConfig) -> Result<SeriesEval> {
    let c = pathway_norm_const(dp)?;
    let radius = dp.support_radius();
    let half = if radius.is_finite() {
        tanh_sinh_unit(|s, _| Ok(density_shape(dp, radius * s)), cfg)?.scaled(radius)
    } else {
        tanh_sinh_unit(
            |u, comp| {
                let ln_x = u.ln() - comp.ln();
                Ok((log_density_shape(dp, ln_x.exp()) - 2.0 * comp.ln()).exp())
            },
            cfg,
        )?
    };
    Ok(half.scaled(2.0 * c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msm::FunctionKind;
    use std::f64::consts::E;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn dens(g: f64, d: f64, b: f64, a: f64, al: f64) -> PathwayDensityParams {
        PathwayDensityParams {
            gamma_shape: g,
            delta: d,
            beta_shape: b,
            a,
            pathway_alpha: al,
        }
    }

    #[test]
    fn power_image_examples() {
        let img = pathway_power_image(&PathwayParams::new(1.0, 1.0, 0.0).unwrap(), 1.0).unwrap();
        assert_eq!(img.evaluate(2.0).unwrap().value, 2.0);
        let img = pathway_power_image(&PathwayParams::new(2.0, 1.0, 0.0).unwrap(), 2.0).unwrap();
        assert!(rel(img.prefactor, 1.0 / 12.0) < 1e-15);
        assert_eq!(img.power_of_x, 4.0);
    }

    #[test]
    fn quadrature_examples() {
        let p = PathwayParams::new(1.0, 1.0, 0.0).unwrap();
        let r = pathway_quadrature(&p, Integrand::monomial(1.0), 2.0).unwrap();
        assert!(rel(r.value, 2.0) < 1e-14);
        let p = PathwayParams::new(2.0, 1.0, 0.0).unwrap();
        let r = pathway_quadrature(&p, Integrand::monomial(2.0), 1.0).unwrap();
        assert!(rel(r.value, 1.0 / 12.0) < 1e-14);
    }

    #[test]
    fn power_image_matches_quadrature() {
        let p = PathwayParams::new(0.7, 1.3, 0.4).unwrap();
        let img = pathway_power_image(&p, 1.6).unwrap();
        let q = pathway_quadrature(&p, Integrand::monomial(1.6), 1.0).unwrap();
        assert!(rel(img.evaluate(1.0).unwrap().value, q.value) < 1e-9);
    }

    #[test]
    fn exponential_closed_form() {
        let p = PathwayParams::new(1.0, 1.0, 0.0).unwrap();
        let img = pathway_bs_closed_form(&p, Integrand::new(FunctionKind::Exp, 1.0)).unwrap();
        assert!(rel(img.evaluate(1.0).unwrap().value, E - 2.0) < 1e-14);
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let p = PathwayParams::new(0.7, 1.3, 0.4).unwrap();
        let f = Integrand::new(
            FunctionKind::BsKernel {
                nu: 0.25,
                lambda: 0.5,
            },
            1.1,
        );
        let c = pathway_bs_closed_form(&p, f)
            .unwrap()
            .evaluate(1.0)
            .unwrap();
        let q = pathway_quadrature(&p, f, 1.0).unwrap();
        assert!(rel(c.value, q.value) < 1e-8);
    }

    #[test]
    fn operator_rejects_alpha_at_least_one() {
        assert!(PathwayParams::new(1.0, 1.0, 1.0).is_err());
        assert!(PathwayParams::new(-0.9, 1.0, -0.5).is_ok());
        assert!(PathwayParams::new(-2.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn norm_constants() {
        assert!(
            rel(
                pathway_norm_const(&dens(1.0, 1.0, 1.0, 1.0, 0.0)).unwrap(),
                1.0
            ) < 1e-15
        );
        assert!(
            rel(
                pathway_norm_const(&dens(1.0, 2.0, 1.0, 1.0, 2.0)).unwrap(),
                1.0 / PI
            ) < 1e-15
        );
        assert!(
            rel(
                pathway_norm_const(&dens(2.0, 1.0, 2.0, 1.0, 0.0)).unwrap(),
                6.0
            ) < 1e-14
        );
        let normal = pathway_norm_const(&dens(1.0, 2.0, 0.5, 1.0, 1.0)).unwrap();
        assert!(rel(normal, 1.0 / (2.0 * PI).sqrt()) < 1e-15);
    }

    #[test]
    fn density_examples() {
        let tri = dens(1.0, 1.0, 1.0, 1.0, 0.0);
        assert!(rel(pathway_density(&tri, 0.5).unwrap(), 0.5) < 1e-15);
        assert_eq!(pathway_density(&tri, 1.5).unwrap(), 0.0);
        let cauchy = dens(1.0, 2.0, 1.0, 1.0, 2.0);
        assert!(rel(pathway_density(&cauchy, 0.0).unwrap(), 1.0 / PI) < 1e-15);
        assert!(rel(pathway_density(&cauchy, 2.0).unwrap(), 1.0 / (5.0 * PI)) < 1e-15);
    }

    #[test]
    fn super_condition() {
        // β/(α−1) − γ/δ = 1 − 1 = 0
        assert!(matches!(
            pathway_norm_const(&dens(2.0, 2.0, 1.0, 1.0, 2.0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn densities_integrate_to_one() {
        for dp in [
            dens(1.0, 1.0, 1.0, 1.0, 0.0),
            dens(2.0, 1.0, 2.0, 1.0, 0.0),
            dens(1.0, 2.0, 1.0, 1.0, 2.0),
            dens(1.0, 2.0, 0.5, 1.0, 1.0),
            dens(0.7, 1.5, 2.0, 0.8, 1.4),
        ] {
            let m = pathway_density_mass(&dp, QuadConfig::default()).unwrap();
            assert!((m.value - 1.0).abs() < 1e-6, "{dp:?}: {}", m.value);
        }
    }
}
