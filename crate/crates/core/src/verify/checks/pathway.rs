use crate::error::Result;
use crate::gamma::gamma_ratio;
use crate::msm::{ClosedFormImage, FunctionKind, Integrand};
use crate::pathway::{
    pathway_bs_closed_form, pathway_power_image, pathway_quadrature, PathwayParams,
};
use crate::quadrature::{tanh_sinh_unit, QuadConfig};
use crate::verify::config::VerifyConfig;
use crate::verify::grid::{pathway_coords, pathway_points};
use crate::verify::oracle::{evaluate_as_written, pathway_termwise};
use crate::verify::{Anchor, Check, Metric, Oracle, Sample};
use crate::wright::WrightSpec;

use super::{compare, passing, printed};

fn value(img: &ClosedFormImage, x: f64) -> Result<f64> {
    Ok(img.evaluate(x)?.value)
}

fn with(p: &PathwayParams, sigma: f64, extra: &[(&'static str, f64)]) -> Vec<(&'static str, f64)> {
    let mut c = pathway_coords(p, sigma);
    c.extend_from_slice(extra);
    c
}

/// `x^η ∫_0^{x/b} (1 − (bt/x)^e) t^{σ−1} dt`, the kernel as originally stated.
fn stated_kernel_image(p: &PathwayParams, sigma: f64, x: f64) -> Result<f64> {
    let e = p.kernel_exponent();
    let length = x / p.scale();
    let integral = tanh_sinh_unit(
        |s, _| Ok((1.0 - s.powf(e)) * s.powf(sigma - 1.0)),
        QuadConfig::default(),
    )?;
    Ok(integral.value * x.powf(p.eta) * length.powf(sigma))
}

/// Pathway image of `t^{σ−1}(e^t − 1)/t` as originally stated, with lower pair `(1/2,1/2)`.
fn expm1_image_as_stated(p: &PathwayParams, sigma: f64) -> Result<ClosedFormImage> {
    let e = p.kernel_exponent();
    let b = p.scale();
    Ok(ClosedFormImage {
        prefactor: gamma_ratio(&[1.0 + e], &[])? / (2.0 * b.powf(sigma)),
        power_of_x: p.eta + sigma,
        spec: Some(WrightSpec::new(
            vec![(0.5, 0.5), (sigma, 1.0)],
            vec![(0.5, 0.5), (1.0 + sigma + e, 1.0)],
        )),
        argument_scale: 1.0 / b,
        argument_power: 1,
    })
}

/// Pathway image of `t^{σ−1}e^t` as originally stated: a 1Psi1 in `x/b`.
fn exp_image_as_stated(p: &PathwayParams, sigma: f64) -> Result<ClosedFormImage> {
    let e = p.kernel_exponent();
    let b = p.scale();
    Ok(ClosedFormImage {
        prefactor: gamma_ratio(&[1.0 + e], &[])? / b.powf(sigma),
        power_of_x: p.eta + sigma,
        spec: Some(WrightSpec::new(
            vec![(sigma, 1.0)],
            vec![(1.0 + sigma + e, 1.0)],
        )),
        argument_scale: 1.0 / b,
        argument_power: 1,
    })
}

pub(super) fn checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;
    let g = &cfg.grids;
    let terms = g.termwise_terms;
    let points = pathway_points(g);

    let unit = PathwayParams {
        eta: 1.0,
        a: 1.0,
        pathway_alpha: 0.0,
    };
    let degenerate = [0.5, 1.0, 2.0, 3.0]
        .into_iter()
        .map(|x| {
            Sample::new(vec![("x", x)], move || {
                Ok(compare(
                    value(&pathway_power_image(&unit, 1.0)?, x)?,
                    x * x / 2.0,
                ))
            })
        })
        .collect();

    let mut l3_quad = Vec::new();
    let mut l3_stated = Vec::new();
    for &(p, sigma) in &points {
        for &x in &g.x {
            l3_quad.push(Sample::new(with(&p, sigma, &[("x", x)]), move || {
                let closed = value(&pathway_power_image(&p, sigma)?, x)?;
                let q = pathway_quadrature(&p, Integrand::monomial(sigma), x)?.value;
                Ok(compare(closed, q))
            }));
        }
        let x = 1.0;
        l3_stated.push(Sample::new(with(&p, sigma, &[("x", x)]), move || {
            let closed = value(&pathway_power_image(&p, sigma)?, x)?;
            Ok(compare(stated_kernel_image(&p, sigma, x)?, closed))
        }));
    }

    let mut t7_termwise = Vec::new();
    let mut t7_quad = Vec::new();
    let mut t7_zero = Vec::new();
    for (i, &(p, sigma)) in points.iter().enumerate() {
        let nu = g.nu[i % g.nu.len()];
        let b = p.scale();
        for (j, &x) in g.x.iter().enumerate() {
            for &target in &g.targets {
                let lambda = target * b / x;
                t7_termwise.push(Sample::new(
                    with(&p, sigma, &[("nu", nu), ("x", x), ("lambda", lambda)]),
                    move || {
                        let kind = FunctionKind::BsKernel { nu, lambda };
                        let closed =
                            value(&pathway_bs_closed_form(&p, Integrand::new(kind, sigma))?, x)?;
                        Ok(compare(
                            closed,
                            pathway_termwise(&p, sigma, nu, lambda, x, terms)?,
                        ))
                    },
                ));
            }
            let target = g.targets[(i + j) % g.targets.len()];
            let lambda = target * b / x;
            t7_quad.push(Sample::new(
                with(&p, sigma, &[("nu", nu), ("x", x), ("lambda", lambda)]),
                move || {
                    let integrand = Integrand::new(FunctionKind::BsKernel { nu, lambda }, sigma);
                    let closed = value(&pathway_bs_closed_form(&p, integrand)?, x)?;
                    Ok(compare(closed, pathway_quadrature(&p, integrand, x)?.value))
                },
            ));
            t7_zero.push(Sample::new(
                with(&p, sigma, &[("nu", nu), ("x", x)]),
                move || {
                    let kind = FunctionKind::BsKernel { nu, lambda: 0.0 };
                    let closed =
                        value(&pathway_bs_closed_form(&p, Integrand::new(kind, sigma))?, x)?;
                    Ok(compare(closed, value(&pathway_power_image(&p, sigma)?, x)?))
                },
            ));
        }
    }

    let mut out = vec![
        passing(
            "L3.degenerate",
            Anchor::L3,
            "pathway power image with eta = 1, a = 1, alpha = 0, beta = 1 is x^2/2",
            Oracle::Analytic,
            Metric::Relative,
            tol.exact,
            degenerate,
        ),
        passing(
            "L3.quadrature",
            Anchor::L3,
            "pathway power image against quadrature with kernel (1 - b t/x)^(eta/(1-alpha))",
            Oracle::Quadrature,
            Metric::Relative,
            tol.pathway_power,
            l3_quad,
        ),
        printed(
            "L3.printed",
            Anchor::L3,
            "pathway operator stated with kernel 1 - (b t/x)^(eta/(1-alpha))",
            Oracle::Quadrature,
            Metric::Relative,
            tol.printed_threshold,
            "L3.quadrature",
            l3_stated,
        ),
        passing(
            "T7.termwise",
            Anchor::T7,
            "pathway image of t^(sigma-1) S_nu(lambda t) against the termwise power-image sum, |lambda x/b| <= 2",
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.series,
            t7_termwise,
        ),
        passing(
            "T7.quadrature",
            Anchor::T7,
            "pathway image of t^(sigma-1) S_nu(lambda t) against quadrature",
            Oracle::Quadrature,
            Metric::Relative,
            tol.quadrature,
            t7_quad,
        ),
        passing(
            "T7.lambda-zero",
            Anchor::T7,
            "pathway kernel image at lambda = 0 reduces to the power image",
            Oracle::Analytic,
            Metric::Relative,
            tol.exact,
            t7_zero,
        ),
    ];

    type Stated = fn(&PathwayParams, f64) -> Result<ClosedFormImage>;
    let named: [(&str, FunctionKind, f64, &str, Stated, bool); 2] = [
        (
            "exp",
            FunctionKind::Exp,
            -0.5,
            "e^t",
            exp_image_as_stated,
            false,
        ),
        (
            "expm1",
            FunctionKind::ExpM1OverT,
            0.5,
            "(e^t - 1)/t",
            expm1_image_as_stated,
            true,
        ),
    ];
    for (tag, kind, nu, label, stated, mismatch) in named {
        let mut termwise = Vec::new();
        let mut quad = Vec::new();
        let mut as_stated = Vec::new();
        for &(p, sigma) in &points {
            for &x in &g.x {
                let coords = with(&p, sigma, &[("x", x)]);
                termwise.push(Sample::new(coords.clone(), move || {
                    let closed =
                        value(&pathway_bs_closed_form(&p, Integrand::new(kind, sigma))?, x)?;
                    Ok(compare(
                        closed,
                        pathway_termwise(&p, sigma, nu, 1.0, x, terms)?,
                    ))
                }));
                as_stated.push(Sample::new(coords, move || {
                    let s = evaluate_as_written(&stated(&p, sigma)?, x)?;
                    Ok(compare(s, pathway_termwise(&p, sigma, nu, 1.0, x, terms)?))
                }));
            }
            let x = 1.0;
            quad.push(Sample::new(with(&p, sigma, &[("x", x)]), move || {
                let integrand = Integrand::new(kind, sigma);
                let closed = value(&pathway_bs_closed_form(&p, integrand)?, x)?;
                Ok(compare(closed, pathway_quadrature(&p, integrand, x)?.value))
            }));
        }
        let base = format!("T8.{tag}");
        out.push(passing(
            &format!("{base}.termwise"),
            Anchor::T8,
            &format!("pathway image of t^(sigma-1) {label} against the termwise power-image sum"),
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.series,
            termwise,
        ));
        out.push(passing(
            &format!("{base}.quadrature"),
            Anchor::T8,
            &format!("pathway image of t^(sigma-1) {label} against quadrature"),
            Oracle::Quadrature,
            Metric::Relative,
            tol.quadrature,
            quad,
        ));
        let id = format!("{base}.printed");
        if mismatch {
            out.push(printed(
                &id,
                Anchor::T8,
                &format!("pathway image of t^(sigma-1) {label} stated with lower pair (1/2,1/2)"),
                Oracle::TermwiseLemma,
                Metric::Relative,
                tol.printed_threshold,
                &format!("{base}.quadrature"),
                as_stated,
            ));
        } else {
            out.push(passing(
                &id,
                Anchor::T8,
                &format!("pathway image of t^(sigma-1) {label} as stated, a 1Psi1 in x/b"),
                Oracle::TermwiseLemma,
                Metric::Relative,
                tol.series,
                as_stated,
            ));
        }
    }
    out
}
