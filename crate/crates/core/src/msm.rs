//! Marichev-Saigo-Maeda fractional integrals
//!
//! ```text
//! LEFT:  x^{-α}/Γ(γ)  ∫_0^x (x-t)^{γ-1} t^{-α′} F3(α,α′,β,β′;γ; 1-t/x, 1-x/t) f(t) dt
//! RIGHT: x^{-α′}/Γ(γ) ∫_x^∞ (t-x)^{γ-1} t^{-α}  F3(α,α′,β,β′;γ; 1-x/t, 1-t/x) f(t) dt
//! ```
//!
//! with power images, closed-form images of `t^{ρ-1} S_ν(λt)` (LEFT) and
//! `t^{ρ-1} S_ν(λ/t)` (RIGHT) as Wright functions, and a tanh-sinh evaluator
//! of the defining integrals for parameter sets where F3 collapses to 2F1.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::gamma_ratio;
use crate::quadrature::{tanh_sinh_unit, QuadConfig};
use crate::series::{SeriesConfig, SeriesEval};
use crate::special::{
    appell_f3_complement, bessel_first_kind, bessel_struve_kernel, struve, F3Args,
};
use crate::wright::{cancel_matched_pairs, wright_eval_with, WrightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MsmParams {
    pub alpha: f64,
    pub alpha_prime: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
}

impl MsmParams {
    pub fn new(
        alpha: f64,
        alpha_prime: f64,
        beta: f64,
        beta_prime: f64,
        gamma: f64,
    ) -> Result<Self> {
        let p = MsmParams {
            alpha,
            alpha_prime,
            beta,
            beta_prime,
            gamma,
        };
        p.validate()?;
        Ok(p)
    }

    /// Riemann-Liouville degeneration: all of α, α′, β, β′ zero.
    pub fn riemann_liouville(gamma: f64) -> Self {
        MsmParams {
            alpha: 0.0,
            alpha_prime: 0.0,
            beta: 0.0,
            beta_prime: 0.0,
            gamma,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.alpha,
            self.alpha_prime,
            self.beta,
            self.beta_prime,
            self.gamma,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Precondition("MSM parameters must be finite".into()));
        }
        if !(self.gamma > 0.0) {
            return Err(Error::Precondition(format!(
                "MSM order γ = {} must be > 0",
                self.gamma
            )));
        }
        Ok(())
    }

    /// True when some F3 parameter is zero, so the kernel reduces to 2F1 (or 1).
    pub fn has_collapse(&self) -> bool {
        self.alpha == 0.0 || self.alpha_prime == 0.0 || self.beta == 0.0 || self.beta_prime == 0.0
    }

    fn f3(&self, x: f64, y: f64) -> F3Args {
        F3Args {
            alpha: self.alpha,
            alpha_prime: self.alpha_prime,
            beta: self.beta,
            beta_prime: self.beta_prime,
            gamma: self.gamma,
            x,
            y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Exponent of `x` in the Wright argument: `λx` on the left, `λ/x` on the right.
    pub fn argument_power(self) -> i32 {
        match self {
            Side::Left => 1,
            Side::Right => -1,
        }
    }
}

/// Integrand families. Each is a Bessel-Struve kernel `S_ν(λw)` with
/// `w = t` (LEFT, pathway) or `w = 1/t` (RIGHT); the named cases fix `λ = 1`
/// and `ν ∈ {−1/2, 1/2, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionKind {
    /// `K(w) = 1`.
    Monomial,
    /// `K(w) = S_ν(λw)`.
    BsKernel { nu: f64, lambda: f64 },
    /// `K(w) = e^w = S_{−1/2}(w)`.
    Exp,
    /// `K(w) = (e^w − 1)/w = S_{1/2}(w)`.
    ExpM1OverT,
    /// `K(w) = I_0(w) + L_0(w) = S_0(w)`.
    I0PlusL0,
    /// `K(w) = 2(I_1(w) + L_1(w))/w = S_1(w)`.
    TwoI1PlusTwoL1OverT,
}

impl FunctionKind {
    /// `(ν, λ)` of the Bessel-Struve kernel this kind stands for; `None` for monomials.
    pub fn kernel(self) -> Option<(f64, f64)> {
        match self {
            FunctionKind::Monomial => None,
            FunctionKind::BsKernel { nu, lambda } => Some((nu, lambda)),
            FunctionKind::Exp => Some((-0.5, 1.0)),
            FunctionKind::ExpM1OverT => Some((0.5, 1.0)),
            FunctionKind::I0PlusL0 => Some((0.0, 1.0)),
            FunctionKind::TwoI1PlusTwoL1OverT => Some((1.0, 1.0)),
        }
    }

    pub fn validate(self) -> Result<()> {
        if let Some((nu, lambda)) = self.kernel() {
            if !(nu > -1.0) {
                return Err(Error::Precondition(format!(
                    "kernel order ν = {nu} must exceed −1"
                )));
            }
            if !lambda.is_finite() {
                return Err(Error::Precondition(format!(
                    "kernel scale λ = {lambda} is not finite"
                )));
            }
        }
        Ok(())
    }

    /// `K(w)` from the named elementary or Bessel/Struve form; the generic
    /// kernel goes through the power series.
    pub fn value(self, w: f64) -> Result<f64> {
        Ok(match self {
            FunctionKind::Monomial => 1.0,
            FunctionKind::BsKernel { nu, lambda } => bessel_struve_kernel(nu, lambda * w)?.value,
            FunctionKind::Exp => w.exp(),
            FunctionKind::ExpM1OverT => {
                if w == 0.0 {
                    1.0
                } else {
                    w.exp_m1() / w
                }
            }
            FunctionKind::I0PlusL0 => {
                bessel_first_kind(0.0, w, true)?.value + struve(0.0, w, true)?.value
            }
            FunctionKind::TwoI1PlusTwoL1OverT => {
                if w == 0.0 {
                    1.0
                } else {
                    2.0 * (bessel_first_kind(1.0, w, true)?.value + struve(1.0, w, true)?.value) / w
                }
            }
        })
    }
}

/// `t^{ρ−1} K(w)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integrand {
    pub kind: FunctionKind,
    pub rho: f64,
}

impl Integrand {
    pub fn new(kind: FunctionKind, rho: f64) -> Self {
        Integrand { kind, rho }
    }

    pub fn monomial(rho: f64) -> Self {
        Integrand::new(FunctionKind::Monomial, rho)
    }
}

/// `prefactor · x^{power_of_x} · Ψ(argument_scale · x^{argument_power})`;
/// without a spec the image is the bare monomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormImage {
    pub prefactor: f64,
    pub power_of_x: f64,
    pub spec: Option<WrightSpec>,
    pub argument_scale: f64,
    pub argument_power: i32,
}

impl ClosedFormImage {
    pub fn monomial(prefactor: f64, power_of_x: f64) -> Self {
        ClosedFormImage {
            prefactor,
            power_of_x,
            spec: None,
            argument_scale: 0.0,
            argument_power: 1,
        }
    }

    /// Wright argument at `x`.
    pub fn argument(&self, x: f64) -> f64 {
        self.argument_scale * x.powi(self.argument_power)
    }

    pub fn evaluate(&self, x: f64) -> Result<SeriesEval> {
        self.evaluate_with(x, SeriesConfig::default())
    }

    /// Matched upper/lower pairs are cancelled before summation; they
    /// contribute unit factors to every term.
    pub fn evaluate_with(&self, x: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("closed form needs x > 0, got {x}")));
        }
        let scale = self.prefactor * x.powf(self.power_of_x);
        match &self.spec {
            None => Ok(SeriesEval::exact(scale)),
            Some(spec) => {
                let reduced = cancel_matched_pairs(spec);
                Ok(wright_eval_with(&reduced, self.argument(x), cfg)?.scaled(scale))
            }
        }
    }
}

/// Existence condition on the exponent `ρ` for the power function `t^{ρ−1}`.
pub fn msm_power_condition(side: Side, p: &MsmParams, rho: f64) -> Result<()> {
    let MsmParams {
        alpha: a,
        alpha_prime: ap,
        beta: b,
        beta_prime: bp,
        gamma: g,
    } = *p;
    match side {
        Side::Left => {
            let bound = 0f64.max(a + ap + b - g).max(ap - bp);
            if rho > bound {
                Ok(())
            } else {
                Err(Error::Precondition(format!(
                    "left power image needs ρ > {bound}, got {rho}"
                )))
            }
        }
        Side::Right => {
            let bound = 1.0 + (-b).min(a + ap - g).min(a + bp - g);
            if rho < bound {
                Ok(())
            } else {
                Err(Error::Precondition(format!(
                    "right power image needs ρ < {bound}, got {rho}"
                )))
            }
        }
    }
}

/// Numerator and denominator gamma arguments of the power image of `t^{ρ−1}`.
pub fn msm_power_gammas(side: Side, p: &MsmParams, rho: f64) -> ([f64; 3], [f64; 3]) {
    let MsmParams {
        alpha: a,
        alpha_prime: ap,
        beta: b,
        beta_prime: bp,
        gamma: g,
    } = *p;
    match side {
        Side::Left => (
            [rho, rho + g - a - ap - b, rho + bp - ap],
            [rho + bp, rho + g - a - ap, rho + g - ap - b],
        ),
        Side::Right => (
            [
                1.0 - rho - b,
                1.0 - rho - g + a + ap,
                1.0 - rho - g + a + bp,
            ],
            [1.0 - rho, 1.0 - rho + a + ap + bp - g, 1.0 - rho + a - b],
        ),
    }
}

/// Image of `t^{ρ−1}`: a gamma ratio times `x^{ρ−α−α′+γ−1}` on either side.
pub fn msm_power_image(side: Side, p: &MsmParams, rho: f64) -> Result<ClosedFormImage> {
    p.validate()?;
    msm_power_condition(side, p, rho)?;
    let (num, den) = msm_power_gammas(side, p, rho);
    let prefactor = gamma_ratio(&num, &den)?;
    Ok(ClosedFormImage::monomial(
        prefactor,
        rho - p.alpha - p.alpha_prime + p.gamma - 1.0,
    ))
}

/// Closed-form image of `t^{ρ−1} S_ν(λt)` (LEFT) or `t^{ρ−1} S_ν(λ/t)` (RIGHT)
/// obtained by applying the power image termwise to the kernel series.
///
/// The condition is checked at `n = 0`: the left bound is met for all
/// `ρ + n` once met at `ρ`, the right one for all `ρ − n`. Monomials give the
/// bare power image; named kinds use their `(ν, λ)`.
pub fn msm_bs_closed_form(
    side: Side,
    p: &MsmParams,
    integrand: Integrand,
) -> Result<ClosedFormImage> {
    let Integrand { kind, rho } = integrand;
    kind.validate()?;
    let (nu, lambda) = match kind.kernel() {
        None => return msm_power_image(side, p, rho),
        Some(k) => k,
    };
    p.validate()?;
    msm_power_condition(side, p, rho)?;
    let (num, den) = msm_power_gammas(side, p, rho);
    let mut upper = vec![(0.5, 0.5)];
    upper.extend(num.iter().map(|&a| (a, 1.0)));
    let mut lower = vec![(nu + 1.0, 0.5)];
    lower.extend(den.iter().map(|&b| (b, 1.0)));
    Ok(ClosedFormImage {
        prefactor: gamma_ratio(&[nu + 1.0], &[])? / PI.sqrt(),
        power_of_x: rho + p.gamma - p.alpha - p.alpha_prime - 1.0,
        spec: Some(WrightSpec::new(upper, lower)),
        argument_scale: lambda,
        argument_power: side.argument_power(),
    })
}

pub fn msm_quadrature(
    side: Side,
    p: &MsmParams,
    integrand: Integrand,
    x: f64,
) -> Result<SeriesEval> {
    msm_quadrature_with(side, p, integrand, x, QuadConfig::default())
}

/// Tanh-sinh evaluation of the defining integral, mapped to the unit interval
/// by `t = xs` (LEFT) or `t = x/u` (RIGHT):
///
/// ```text
/// LEFT:  x^{ρ+γ−α−α′−1}/Γ(γ) ∫_0^1 (1−s)^{γ−1} s^{ρ−α′−1} F3(1−s, 1−1/s) K(xs) ds
/// RIGHT: x^{ρ+γ−α−α′−1}/Γ(γ) ∫_0^1 (1−u)^{γ−1} u^{α−γ−ρ} F3(1−u, 1−1/u) K(u/x) du
/// ```
///
/// The F3 kernel must collapse (some F3 parameter zero); otherwise one of its
/// arguments leaves the unit disk and the result is [`Error::DomainUnsupported`].
pub fn msm_quadrature_with(
    side: Side,
    p: &MsmParams,
    integrand: Integrand,
    x: f64,
    cfg: QuadConfig,
) -> Result<SeriesEval> {
    p.validate()?;
    integrand.kind.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Precondition(format!(
            "MSM quadrature needs finite x > 0, got {x}"
        )));
    }
    if !p.has_collapse() {
        return Err(Error::DomainUnsupported(
            "MSM kernel F3 has no parameter collapse; its second argument is unbounded on the path"
                .into(),
        ));
    }
    let rho = integrand.rho;
    msm_power_condition(side, p, rho)?;

    let g = p.gamma;
    let series = SeriesConfig::default();
    let kind = integrand.kind;
    let s_power = match side {
        Side::Left => rho - p.alpha_prime - 1.0,
        Side::Right => p.alpha - g - rho,
    };
    let body = |s: f64, comp: f64| -> Result<f64> {
        // 1 - 1/s = -(1-s)/s, with complement 1/s.
        let args = p.f3(comp, -comp / s);
        let f3 = appell_f3_complement(args, s, 1.0 / s, series)?.value;
        let w = match side {
            Side::Left => x * s,
            Side::Right => s / x,
        };
        Ok(comp.powf(g - 1.0) * s.powf(s_power) * f3 * kind.value(w)?)
    };
    let integral = tanh_sinh_unit(body, cfg)?;
    let scale = x.powf(rho + g - p.alpha - p.alpha_prime - 1.0) * gamma_ratio(&[], &[g])?;
    Ok(integral.scaled(scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn left_degenerate_power_image() {
        let img = msm_power_image(Side::Left, &MsmParams::riemann_liouville(1.0), 2.0).unwrap();
        assert_eq!(img.prefactor, 0.5);
        assert_eq!(img.power_of_x, 2.0);
        assert_eq!(img.evaluate(3.0).unwrap().value, 4.5);
    }

    #[test]
    fn right_degenerate_power_image() {
        let img = msm_power_image(Side::Right, &MsmParams::riemann_liouville(1.0), -1.0).unwrap();
        assert_eq!(img.prefactor, 1.0);
        assert_eq!(img.power_of_x, -1.0);
    }

    #[test]
    fn riemann_liouville_monomials() {
        for &g in &[0.5, 1.0, 2.5] {
            for &rho in &[0.3, 1.0, 2.2] {
                let img =
                    msm_power_image(Side::Left, &MsmParams::riemann_liouville(g), rho).unwrap();
                let expect = gamma_ratio(&[rho], &[rho + g]).unwrap();
                assert!(rel(img.prefactor, expect) < 1e-14);
                assert_eq!(img.power_of_x, rho + g - 1.0);
            }
        }
    }

    #[test]
    fn conditions_are_enforced() {
        let p = MsmParams::riemann_liouville(1.0);
        assert!(matches!(
            msm_power_image(Side::Left, &p, -0.5),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            msm_power_image(Side::Right, &p, 0.5),
            Err(Error::Precondition(_))
        ));
        assert!(MsmParams::new(0.0, 0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn quadrature_elementary_integrals() {
        let p = MsmParams::riemann_liouville(1.0);
        let r = msm_quadrature(Side::Left, &p, Integrand::monomial(2.0), 3.0).unwrap();
        assert!(rel(r.value, 4.5) < 1e-14);
        let r = msm_quadrature(
            Side::Left,
            &p,
            Integrand::new(
                FunctionKind::BsKernel {
                    nu: -0.5,
                    lambda: 1.0,
                },
                1.0,
            ),
            3.0,
        )
        .unwrap();
        assert!(rel(r.value, 3f64.exp() - 1.0) < 1e-12);
        let r = msm_quadrature(Side::Right, &p, Integrand::monomial(-1.0), 2.0).unwrap();
        assert!(rel(r.value, 0.5) < 1e-14);
    }

    #[test]
    fn left_power_image_matches_quadrature_in_collapse() {
        let p = MsmParams::new(0.4, 0.0, 0.3, 0.2, 0.9).unwrap();
        let img = msm_power_image(Side::Left, &p, 1.5).unwrap();
        for &x in &[0.5, 1.0, 2.0] {
            let q = msm_quadrature(Side::Left, &p, Integrand::monomial(1.5), x).unwrap();
            let c = img.evaluate(x).unwrap();
            assert!(
                rel(q.value, c.value) < 1e-8,
                "x = {x}: {} vs {}",
                q.value,
                c.value
            );
        }
    }

    #[test]
    fn right_power_image_matches_quadrature_in_collapse() {
        let p = MsmParams::new(0.0, 0.2, 0.3, 0.4, 1.1).unwrap();
        let img = msm_power_image(Side::Right, &p, -1.5).unwrap();
        for &x in &[0.5, 1.0, 2.0] {
            let q = msm_quadrature(Side::Right, &p, Integrand::monomial(-1.5), x).unwrap();
            let c = img.evaluate(x).unwrap();
            assert!(
                rel(q.value, c.value) < 1e-8,
                "x = {x}: {} vs {}",
                q.value,
                c.value
            );
        }
    }

    #[test]
    fn left_exponential_closed_form() {
        let img = msm_bs_closed_form(
            Side::Left,
            &MsmParams::riemann_liouville(1.0),
            Integrand::new(FunctionKind::Exp, 1.0),
        )
        .unwrap();
        assert!(rel(img.evaluate(1.0).unwrap().value, E - 1.0) < 1e-15);
    }

    #[test]
    fn bs_closed_form_matches_quadrature() {
        let p = MsmParams::new(0.4, 0.0, 0.3, 0.2, 0.9).unwrap();
        let f = Integrand::new(
            FunctionKind::BsKernel {
                nu: 0.5,
                lambda: 0.8,
            },
            1.5,
        );
        let c = msm_bs_closed_form(Side::Left, &p, f)
            .unwrap()
            .evaluate(1.0)
            .unwrap();
        let q = msm_quadrature(Side::Left, &p, f, 1.0).unwrap();
        assert!(rel(c.value, q.value) < 1e-7, "{} vs {}", c.value, q.value);

        let p = MsmParams::new(0.0, 0.2, 0.0, 0.4, 1.1).unwrap();
        let f = Integrand::new(
            FunctionKind::BsKernel {
                nu: 0.25,
                lambda: 0.5,
            },
            -2.0,
        );
        let c = msm_bs_closed_form(Side::Right, &p, f)
            .unwrap()
            .evaluate(2.0)
            .unwrap();
        let q = msm_quadrature(Side::Right, &p, f, 2.0).unwrap();
        assert!(rel(c.value, q.value) < 1e-7, "{} vs {}", c.value, q.value);
    }

    #[test]
    fn no_collapse_is_unsupported() {
        let p = MsmParams::new(0.3, 0.2, 0.1, 0.4, 1.1).unwrap();
        let r = msm_quadrature(Side::Left, &p, Integrand::monomial(1.2), 1.0);
        assert!(matches!(r, Err(Error::DomainUnsupported(_))));
    }
}
