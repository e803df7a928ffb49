use std::f64::consts::PI;

use crate::error::Result;
use crate::gamma::gamma_ratio;
use crate::msm::{
    msm_bs_closed_form, msm_power_image, msm_quadrature, ClosedFormImage, FunctionKind, Integrand,
    MsmParams, Side,
};
use crate::verify::config::VerifyConfig;
use crate::verify::grid::{msm_points, MsmPoint, Pin};
use crate::verify::oracle::{evaluate_as_written, msm_termwise};
use crate::verify::{Anchor, Check, Metric, Oracle, Sample};
use crate::wright::WrightSpec;

use super::{compare, passing, printed};

const STREAM_L1_QUAD: u64 = 201;
const STREAM_L2_QUAD: u64 = 202;
const STREAM_L2_PRINTED: u64 = 203;
const STREAM_T1_TERMWISE: u64 = 211;
const STREAM_T1_QUAD: u64 = 212;
const STREAM_T2_TERMWISE: u64 = 221;
const STREAM_T2_QUAD: u64 = 222;
const STREAM_NAMED: u64 = 230;
const STREAM_NAMED_QUAD: u64 = 231;

fn value(img: &ClosedFormImage, x: f64) -> Result<f64> {
    Ok(img.evaluate(x)?.value)
}

fn with_x(pt: &MsmPoint, x: f64) -> Vec<(&'static str, f64)> {
    let mut c = pt.coords();
    c.push(("x", x));
    c
}

/// Kernel scale putting the Wright argument at `target`.
fn lambda_for(side: Side, target: f64, x: f64) -> f64 {
    match side {
        Side::Left => target / x,
        Side::Right => target * x,
    }
}

/// Right power-image gamma ratio as originally stated.
fn right_ratio_as_stated(p: &MsmParams, rho: f64) -> Result<f64> {
    let MsmParams {
        alpha: a,
        alpha_prime: ap,
        beta: b,
        beta_prime: bp,
        gamma: g,
    } = *p;
    gamma_ratio(
        &[1.0 - rho - g + a + ap, 1.0 - rho + a + bp, 1.0 - rho - b],
        &[
            1.0 - rho,
            1.0 - rho + a + ap + b + bp - g,
            1.0 - rho + a - b,
        ],
    )
}

/// Right kernel image as originally stated: argument `λx`, and the pairs
/// `(1−ρ+α+β′,1)`, `(1−ρ−β′,1)` over `(1−ρ+α+α′+β+β′−γ,1)`, `(1−ρ+α+β,1)`.
fn right_image_as_stated(p: &MsmParams, rho: f64, nu: f64, lambda: f64) -> Result<ClosedFormImage> {
    let MsmParams {
        alpha: a,
        alpha_prime: ap,
        beta: b,
        beta_prime: bp,
        gamma: g,
    } = *p;
    Ok(ClosedFormImage {
        prefactor: gamma_ratio(&[nu + 1.0], &[])? / PI.sqrt(),
        power_of_x: rho - a - ap + g - 1.0,
        spec: Some(WrightSpec::new(
            vec![
                (0.5, 0.5),
                (1.0 - rho - g + a + ap, 1.0),
                (1.0 - rho + a + bp, 1.0),
                (1.0 - rho - bp, 1.0),
            ],
            vec![
                (nu + 1.0, 0.5),
                (1.0 - rho, 1.0),
                (1.0 - rho + a + ap + b + bp - g, 1.0),
                (1.0 - rho + a + b, 1.0),
            ],
        )),
        argument_scale: lambda,
        argument_power: 1,
    })
}

/// Left images of the four named kernels as originally stated.
fn named_image_as_stated(kind: FunctionKind, p: &MsmParams, rho: f64) -> ClosedFormImage {
    let MsmParams {
        alpha: a,
        alpha_prime: ap,
        beta: b,
        beta_prime: bp,
        gamma: g,
    } = *p;
    let num = [
        (rho, 1.0),
        (rho + g - a - ap - b, 1.0),
        (rho + bp - ap, 1.0),
    ];
    let den = [
        (rho + bp, 1.0),
        (rho + g - a - ap, 1.0),
        (rho + g - ap - b, 1.0),
    ];
    let (prefactor, upper, lower) = match kind {
        FunctionKind::Exp => {
            let mut up = num.to_vec();
            up.push((1.0 - rho - bp, 1.0));
            (1.0, up, den.to_vec())
        }
        FunctionKind::ExpM1OverT => {
            let mut up = vec![(0.5, 0.5)];
            up.extend(num);
            let mut low = vec![(0.5, 1.5)];
            low.extend(den);
            (1.0, up, low)
        }
        _ => {
            let mut up = vec![(0.5, 0.5)];
            up.extend(num);
            let mut low = vec![(0.5, 1.0)];
            low.extend(den);
            (1.0 / PI.sqrt(), up, low)
        }
    };
    ClosedFormImage {
        prefactor,
        power_of_x: rho - a - ap + g - 1.0,
        spec: Some(WrightSpec::new(upper, lower)),
        argument_scale: 1.0,
        argument_power: 1,
    }
}

fn power_image_checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;
    let g = &cfg.grids;

    let degenerate = MsmParams::riemann_liouville(1.0);
    let mut l1_deg = Vec::new();
    for (rho, exact) in [
        (2.0, (|x: f64| x * x / 2.0) as fn(f64) -> f64),
        (1.0, |x| x),
        (3.0, |x| x * x * x / 3.0),
    ] {
        for x in [0.5, 1.0, 2.0, 3.0] {
            l1_deg.push(Sample::new(vec![("rho", rho), ("x", x)], move || {
                Ok(compare(
                    value(&msm_power_image(Side::Left, &degenerate, rho)?, x)?,
                    exact(x),
                ))
            }));
        }
    }
    let mut l2_deg = Vec::new();
    for (rho, exact) in [
        (-1.0, (|x: f64| 1.0 / x) as fn(f64) -> f64),
        (-2.0, |x| 0.5 / (x * x)),
    ] {
        for x in [0.5, 1.0, 2.0, 3.0] {
            l2_deg.push(Sample::new(vec![("rho", rho), ("x", x)], move || {
                Ok(compare(
                    value(&msm_power_image(Side::Right, &degenerate, rho)?, x)?,
                    exact(x),
                ))
            }));
        }
    }

    let mut rl = Vec::new();
    let mut weyl = Vec::new();
    for &gm in &g.gamma {
        for &x in &g.x {
            let p = MsmParams::riemann_liouville(gm);
            for &rho in &g.rho_left {
                rl.push(Sample::new(
                    vec![("gamma", gm), ("rho", rho), ("x", x)],
                    move || {
                        let expect = gamma_ratio(&[rho], &[rho + gm])? * x.powf(rho + gm - 1.0);
                        Ok(compare(
                            value(&msm_power_image(Side::Left, &p, rho)?, x)?,
                            expect,
                        ))
                    },
                ));
            }
            for &rho in &g.rho_right {
                weyl.push(Sample::new(
                    vec![("gamma", gm), ("rho", rho), ("x", x)],
                    move || {
                        let expect =
                            gamma_ratio(&[1.0 - rho - gm], &[1.0 - rho])? * x.powf(rho + gm - 1.0);
                        Ok(compare(
                            value(&msm_power_image(Side::Right, &p, rho)?, x)?,
                            expect,
                        ))
                    },
                ));
            }
        }
    }

    let quad = |side: Side, stream: u64| -> Vec<Sample> {
        let mut out = Vec::new();
        for pt in msm_points(g, side, g.quadrature_samples, Pin::Collapse, stream) {
            for &x in &g.x {
                out.push(Sample::new(with_x(&pt, x), move || {
                    let closed = value(&msm_power_image(side, &pt.p, pt.rho)?, x)?;
                    let q = msm_quadrature(side, &pt.p, Integrand::monomial(pt.rho), x)?.value;
                    Ok(compare(closed, q))
                }));
            }
        }
        out
    };

    // ρ just above the bound max{0, α+α′+β−γ, α′−β′} with its middle entry active.
    let mut condition = Vec::new();
    for a in [0.4, 0.5] {
        for b in [0.4, 0.5] {
            for margin in [0.1, 0.3] {
                let p = MsmParams {
                    alpha: a,
                    alpha_prime: 0.0,
                    beta: b,
                    beta_prime: 0.2,
                    gamma: 0.6,
                };
                let rho = a + b - p.gamma + margin;
                let point = vec![("alpha", a), ("beta", b), ("rho", rho), ("x", 1.0)];
                condition.push(Sample::new(point, move || {
                    let closed = value(&msm_power_image(Side::Left, &p, rho)?, 1.0)?;
                    let q = msm_quadrature(Side::Left, &p, Integrand::monomial(rho), 1.0)?.value;
                    Ok(compare(closed, q))
                }));
            }
        }
    }

    let mut l2_stated = Vec::new();
    for pt in msm_points(
        g,
        Side::Right,
        g.quadrature_samples,
        Pin::Collapse,
        STREAM_L2_PRINTED,
    ) {
        let x = 1.0;
        l2_stated.push(Sample::new(with_x(&pt, x), move || {
            let stated = right_ratio_as_stated(&pt.p, pt.rho)?
                * x.powf(pt.rho - pt.p.alpha - pt.p.alpha_prime + pt.p.gamma - 1.0);
            let q = msm_quadrature(Side::Right, &pt.p, Integrand::monomial(pt.rho), x)?.value;
            Ok(compare(stated, q))
        }));
    }

    vec![
        passing(
            "L1.degenerate",
            Anchor::L1,
            "left power image with gamma = 1 and all other parameters 0 is the plain integral x^rho/rho",
            Oracle::Analytic,
            Metric::Relative,
            tol.exact,
            l1_deg,
        ),
        passing(
            "L2.degenerate",
            Anchor::L2,
            "right power image with gamma = 1 and all other parameters 0 is x^rho/(-rho)",
            Oracle::Analytic,
            Metric::Relative,
            tol.exact,
            l2_deg,
        ),
        passing(
            "L1.riemann-liouville",
            Anchor::L1,
            "left power image with alpha = alpha' = beta = beta' = 0 is the Riemann-Liouville image",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            rl,
        ),
        passing(
            "L2.weyl",
            Anchor::L2,
            "right power image with alpha = alpha' = beta = beta' = 0 is the Weyl image",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            weyl,
        ),
        passing(
            "L1.quadrature",
            Anchor::L1,
            "left power image against tanh-sinh quadrature of the operator with alpha' = 0",
            Oracle::Quadrature,
            Metric::Relative,
            tol.quadrature,
            quad(Side::Left, STREAM_L1_QUAD),
        ),
        passing(
            "L2.quadrature",
            Anchor::L2,
            "right power image against tanh-sinh quadrature of the operator with alpha = 0",
            Oracle::Quadrature,
            Metric::Relative,
            tol.quadrature,
            quad(Side::Right, STREAM_L2_QUAD),
        ),
        passing(
            "L1.condition",
            Anchor::L1,
            "left power image just inside rho > alpha + alpha' + beta - gamma, against quadrature",
            Oracle::Quadrature,
            Metric::Relative,
            tol.quadrature,
            condition,
        ),
        printed(
            "L2.printed",
            Anchor::L2,
            "right power ratio stated with (1-rho+alpha+beta') over (1-rho+alpha+alpha'+beta+beta'-gamma)",
            Oracle::Quadrature,
            Metric::Relative,
            tol.printed_threshold,
            "L2.quadrature",
            l2_stated,
        ),
    ]
}

fn kernel_image_checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;
    let g = &cfg.grids;
    let terms = g.termwise_terms;

    let termwise = |side: Side, stream: u64| -> Vec<Sample> {
        let mut out = Vec::new();
        for pt in msm_points(g, side, g.termwise_samples, Pin::Free, stream) {
            for &x in &g.x {
                for &target in &g.targets {
                    let lambda = lambda_for(side, target, x);
                    let mut point = with_x(&pt, x);
                    point.push(("lambda", lambda));
                    out.push(Sample::new(point, move || {
                        let kind = FunctionKind::BsKernel { nu: pt.nu, lambda };
                        let closed = value(
                            &msm_bs_closed_form(side, &pt.p, Integrand::new(kind, pt.rho))?,
                            x,
                        )?;
                        let oracle = msm_termwise(side, &pt.p, pt.rho, pt.nu, lambda, x, terms)?;
                        Ok(compare(closed, oracle))
                    }));
                }
            }
        }
        out
    };

    let quadrature = |side: Side, stream: u64| -> Vec<Sample> {
        let mut out = Vec::new();
        let pts = msm_points(g, side, g.quadrature_samples, Pin::Collapse, stream);
        for (i, pt) in pts.into_iter().enumerate() {
            for (j, &x) in g.x.iter().enumerate() {
                let target = g.targets[(i + j) % g.targets.len()];
                let lambda = lambda_for(side, target, x);
                let mut point = with_x(&pt, x);
                point.push(("lambda", lambda));
                out.push(Sample::new(point, move || {
                    let integrand =
                        Integrand::new(FunctionKind::BsKernel { nu: pt.nu, lambda }, pt.rho);
                    let closed = value(&msm_bs_closed_form(side, &pt.p, integrand)?, x)?;
                    let q = msm_quadrature(side, &pt.p, integrand, x)?.value;
                    Ok(compare(closed, q))
                }));
            }
        }
        out
    };

    let mut t2_stated = Vec::new();
    for pt in msm_points(
        g,
        Side::Right,
        g.termwise_samples,
        Pin::Free,
        STREAM_T2_TERMWISE,
    ) {
        for &x in &g.x {
            let lambda = lambda_for(Side::Right, 1.0, x);
            let mut point = with_x(&pt, x);
            point.push(("lambda", lambda));
            t2_stated.push(Sample::new(point, move || {
                let stated =
                    evaluate_as_written(&right_image_as_stated(&pt.p, pt.rho, pt.nu, lambda)?, x)?;
                let oracle = msm_termwise(Side::Right, &pt.p, pt.rho, pt.nu, lambda, x, terms)?;
                Ok(compare(stated, oracle))
            }));
        }
    }

    let mut out = vec![
        passing(
            "T1.termwise",
            Anchor::T1,
            "left image of t^(rho-1) S_nu(lambda t) against the termwise power-image sum, |lambda x| <= 2",
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.series,
            termwise(Side::Left, STREAM_T1_TERMWISE),
        ),
        passing(
            "T1.quadrature",
            Anchor::T1,
            "left image of t^(rho-1) S_nu(lambda t) against quadrature with alpha' = 0",
            Oracle::Quadrature,
            Metric::Relative,
            tol.closed_vs_quadrature,
            quadrature(Side::Left, STREAM_T1_QUAD),
        ),
        passing(
            "T2.termwise",
            Anchor::T2,
            "right image of t^(rho-1) S_nu(lambda/t) against the termwise power-image sum, |lambda/x| <= 2",
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.series,
            termwise(Side::Right, STREAM_T2_TERMWISE),
        ),
        passing(
            "T2.quadrature",
            Anchor::T2,
            "right image of t^(rho-1) S_nu(lambda/t) against quadrature with alpha = 0",
            Oracle::Quadrature,
            Metric::Relative,
            tol.closed_vs_quadrature,
            quadrature(Side::Right, STREAM_T2_QUAD),
        ),
        printed(
            "T2.printed",
            Anchor::T2,
            "right kernel image stated with argument lambda x and pairs (1-rho-beta',1), (1-rho+alpha+beta,1)",
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.printed_threshold,
            "T2.termwise",
            t2_stated,
        ),
    ];

    let named = [
        (
            Anchor::T3,
            "T3",
            FunctionKind::Exp,
            -0.5,
            "e^t",
            "a 3Psi3 with the extra upper pair (1-rho-beta',1)",
        ),
        (
            Anchor::T4,
            "T4",
            FunctionKind::ExpM1OverT,
            0.5,
            "(e^t - 1)/t",
            "prefactor 1 and lower pair (1/2,3/2)",
        ),
        (
            Anchor::T5,
            "T5",
            FunctionKind::I0PlusL0,
            0.0,
            "I_0(t) + L_0(t)",
            "lower pair (1/2,1)",
        ),
        (
            Anchor::T6,
            "T6",
            FunctionKind::TwoI1PlusTwoL1OverT,
            1.0,
            "2(I_1(t) + L_1(t))/t",
            "kernel (2 I_1 + L_1)/t and lower pair (1/2,1)",
        ),
    ];
    let free = msm_points(g, Side::Left, g.termwise_samples, Pin::Free, STREAM_NAMED);
    let collapsed = msm_points(
        g,
        Side::Left,
        g.quadrature_samples,
        Pin::Collapse,
        STREAM_NAMED_QUAD,
    );
    for (anchor, tag, kind, nu, label, stated) in named {
        let mut delegation = Vec::new();
        let mut as_stated = Vec::new();
        for pt in &free {
            let pt = *pt;
            for &x in &g.x {
                delegation.push(Sample::new(with_x(&pt, x), move || {
                    let named = value(
                        &msm_bs_closed_form(Side::Left, &pt.p, Integrand::new(kind, pt.rho))?,
                        x,
                    )?;
                    let kernel = FunctionKind::BsKernel { nu, lambda: 1.0 };
                    let general = value(
                        &msm_bs_closed_form(Side::Left, &pt.p, Integrand::new(kernel, pt.rho))?,
                        x,
                    )?;
                    Ok(compare(named, general))
                }));
                as_stated.push(Sample::new(with_x(&pt, x), move || {
                    let stated =
                        evaluate_as_written(&named_image_as_stated(kind, &pt.p, pt.rho), x)?;
                    let oracle = msm_termwise(Side::Left, &pt.p, pt.rho, nu, 1.0, x, terms)?;
                    Ok(compare(stated, oracle))
                }));
            }
        }
        let mut quad = Vec::new();
        for pt in &collapsed {
            let pt = *pt;
            for &x in &g.x {
                quad.push(Sample::new(with_x(&pt, x), move || {
                    let integrand = Integrand::new(kind, pt.rho);
                    let closed = value(&msm_bs_closed_form(Side::Left, &pt.p, integrand)?, x)?;
                    let q = msm_quadrature(Side::Left, &pt.p, integrand, x)?.value;
                    Ok(compare(closed, q))
                }));
            }
        }
        out.push(passing(
            &format!("{tag}.delegation"),
            anchor,
            &format!(
                "left image of t^(rho-1) {label} equals the general kernel image at nu = {nu}"
            ),
            Oracle::Analytic,
            Metric::Relative,
            tol.exact,
            delegation,
        ));
        out.push(passing(
            &format!("{tag}.quadrature"),
            anchor,
            &format!(
                "left image of t^(rho-1) {label} against quadrature of the elementary integrand"
            ),
            Oracle::Quadrature,
            Metric::Relative,
            tol.closed_vs_quadrature,
            quad,
        ));
        out.push(printed(
            &format!("{tag}.printed"),
            anchor,
            &format!("left image of t^(rho-1) {label} stated with {stated}"),
            Oracle::TermwiseLemma,
            Metric::Relative,
            tol.printed_threshold,
            &format!("{tag}.quadrature"),
            as_stated,
        ));
    }
    out
}

pub(super) fn checks(cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = power_image_checks(cfg);
    out.extend(kernel_image_checks(cfg));
    out
}
