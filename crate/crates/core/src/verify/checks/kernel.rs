use crate::special::{bessel_first_kind, bessel_struve_kernel, struve};
use crate::verify::config::VerifyConfig;
use crate::verify::grid::linspace;
use crate::verify::{Anchor, Check, Metric, Oracle, Sample};

use super::{compare, passing, printed};

fn kernel(nu: f64, u: f64) -> crate::error::Result<f64> {
    Ok(bessel_struve_kernel(nu, u)?.value)
}

fn i_plus_l(v: f64, u: f64) -> crate::error::Result<f64> {
    Ok(bessel_first_kind(v, u, true)?.value + struve(v, u, true)?.value)
}

pub(super) fn checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;
    let g = &cfg.grids;
    let identity_grid = linspace(-10.0, 10.0, g.kernel_points);
    let n = g.relation_points;
    let relation_grid: Vec<f64> = (1..=n).map(|i| 20.0 * i as f64 / n as f64).collect();

    let on = |grid: &[f64], f: fn(f64) -> crate::error::Result<crate::verify::Outcome>| {
        grid.iter()
            .map(|&u| Sample::new(vec![("u", u)], move || f(u)))
            .collect::<Vec<_>>()
    };

    vec![
        passing(
            "e1.exp",
            Anchor::E1,
            "S_{-1/2}(u) = e^u on an even grid over [-10, 10]",
            Oracle::Analytic,
            Metric::Relative,
            tol.identity,
            on(&identity_grid, |u| Ok(compare(kernel(-0.5, u)?, u.exp()))),
        ),
        passing(
            "e2.expm1",
            Anchor::E2,
            "S_{1/2}(u) = (e^u - 1)/u on an even grid over [-10, 10], 1 at u = 0",
            Oracle::Analytic,
            Metric::Relative,
            tol.identity,
            on(&identity_grid, |u| {
                let expect = if u == 0.0 { 1.0 } else { u.exp_m1() / u };
                Ok(compare(kernel(0.5, u)?, expect))
            }),
        ),
        passing(
            "r1.bessel-struve",
            Anchor::R1,
            "S_0(u) = I_0(u) + L_0(u) on (0, 20], each side from its own series",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            on(&relation_grid, |u| {
                Ok(compare(kernel(0.0, u)?, i_plus_l(0.0, u)?))
            }),
        ),
        passing(
            "r2.corrected",
            Anchor::R2,
            "S_1(u) = 2(I_1(u) + L_1(u))/u on (0, 20]",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            on(&relation_grid, |u| {
                Ok(compare(2.0 * i_plus_l(1.0, u)? / u, kernel(1.0, u)?))
            }),
        ),
        printed(
            "r2.printed",
            Anchor::R2,
            "first-order relation stated as S_1(u) = (2 I_1(u) + L_1(u))/u, checked at u = 1",
            Oracle::Analytic,
            Metric::Relative,
            tol.printed_threshold,
            "r2.corrected",
            on(&[1.0], |u| {
                let stated = (2.0 * bessel_first_kind(1.0, u, true)?.value
                    + struve(1.0, u, true)?.value)
                    / u;
                Ok(compare(stated, kernel(1.0, u)?))
            }),
        ),
    ]
}
