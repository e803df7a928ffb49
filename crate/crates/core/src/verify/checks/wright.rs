use std::f64::consts::{E, PI};

use crate::error::Error;
use crate::gamma::gamma_ratio;
use crate::msm::{msm_bs_closed_form, FunctionKind, Integrand, Side};
use crate::pathway::pathway_bs_closed_form;
use crate::series::SeriesConfig;
use crate::special::bessel_struve_kernel;
use crate::verify::config::VerifyConfig;
use crate::verify::grid::{msm_points, pathway_points, Pin};
use crate::verify::oracle::slope_one_series;
use crate::verify::{Anchor, Check, Metric, Oracle, Outcome, Sample};
use crate::wright::{wright_delta, wright_eval_with, WrightSpec};

use super::{compare, passing};

const STREAM_LEFT: u64 = 101;
const STREAM_RIGHT: u64 = 102;

fn eval(spec: &WrightSpec, z: f64) -> crate::error::Result<f64> {
    Ok(wright_eval_with(spec, z, SeriesConfig::default())?.value)
}

/// Every spec the closed forms generate over the default grids.
fn generated_specs(cfg: &VerifyConfig) -> Vec<(Vec<(&'static str, f64)>, WrightSpec)> {
    let g = &cfg.grids;
    let mut out = Vec::new();
    for (side, stream) in [(Side::Left, STREAM_LEFT), (Side::Right, STREAM_RIGHT)] {
        for pt in msm_points(g, side, g.termwise_samples, Pin::Free, stream) {
            let mut kinds = vec![FunctionKind::BsKernel {
                nu: pt.nu,
                lambda: 1.0,
            }];
            if side == Side::Left {
                kinds.extend([
                    FunctionKind::Exp,
                    FunctionKind::ExpM1OverT,
                    FunctionKind::I0PlusL0,
                    FunctionKind::TwoI1PlusTwoL1OverT,
                ]);
            }
            for kind in kinds {
                if let Ok(img) = msm_bs_closed_form(side, &pt.p, Integrand::new(kind, pt.rho)) {
                    let mut coords = pt.coords();
                    coords.push(("side", f64::from(side.argument_power())));
                    out.push((coords, img.spec.expect("kernel images carry a spec")));
                }
            }
        }
    }
    for (p, sigma) in pathway_points(g) {
        for &nu in &g.nu {
            let kind = FunctionKind::BsKernel { nu, lambda: 1.0 };
            if let Ok(img) = pathway_bs_closed_form(&p, Integrand::new(kind, sigma)) {
                let mut coords = crate::verify::grid::pathway_coords(&p, sigma);
                coords.push(("nu", nu));
                out.push((coords, img.spec.expect("kernel images carry a spec")));
            }
        }
    }
    out
}

pub(super) fn checks(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tolerances;

    let delta_samples = generated_specs(cfg)
        .into_iter()
        .map(|(coords, spec)| {
            Sample::new(coords, move || Ok(Outcome::Deviation(wright_delta(&spec))))
        })
        .collect();

    let exp_samples = [-2.0, -1.0, 0.0, 0.5, 1.0, 3.0]
        .into_iter()
        .map(|z| {
            Sample::new(vec![("z", z)], move || {
                let s = WrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]);
                let expect = if z == 1.0 { E } else { z.exp() };
                Ok(compare(eval(&s, z)?, expect))
            })
        })
        .collect();

    let bases = [
        WrightSpec::new(vec![(1.0, 1.0)], vec![(2.0, 1.0)]),
        WrightSpec::new(vec![(0.5, 0.5), (1.3, 1.0)], vec![(1.0, 0.5), (2.1, 1.0)]),
        WrightSpec::new(vec![(0.7, 1.0)], vec![(1.2, 0.5), (0.9, 1.5)]),
    ];
    let inserts = [(0.3, 1.0), (1.7, 0.5), (2.2, 2.0)];
    let mut insertion_samples = Vec::new();
    for (bi, base) in bases.iter().enumerate() {
        for &(c, slope) in &inserts {
            for z in [-2.0, -0.5, 0.7, 2.0] {
                let base = base.clone();
                let point = vec![("base", bi as f64), ("c", c), ("slope", slope), ("z", z)];
                insertion_samples.push(Sample::new(point, move || {
                    let mut grown = base.clone();
                    grown.upper.insert(0, (c, slope));
                    grown.lower.push((c, slope));
                    Ok(compare(eval(&grown, z)?, eval(&base, z)?))
                }));
            }
        }
    }

    let slope_one = [
        WrightSpec::new(vec![(0.5, 1.0), (1.2, 1.0)], vec![(1.5, 1.0), (2.3, 1.0)]),
        WrightSpec::new(
            vec![(1.1, 1.0), (0.4, 1.0), (1.6, 1.0)],
            vec![(2.0, 1.0), (1.7, 1.0), (2.5, 1.0)],
        ),
    ];
    let mut pochhammer_samples = Vec::new();
    for (si, spec) in slope_one.iter().enumerate() {
        for z in [-2.0, -1.0, -0.3, 0.4, 1.0, 2.0] {
            let spec = spec.clone();
            pochhammer_samples.push(Sample::new(
                vec![("spec", si as f64), ("z", z)],
                move || Ok(compare(eval(&spec, z)?, slope_one_series(&spec, z, 200)?)),
            ));
        }
    }

    // S_ν(z) = Γ(ν+1)/√π · 1Ψ1[(1/2,1/2); (ν+1,1/2) | z]: delta 0, large |z|.
    // Negative z stays small: direct summation there cancels terms of size
    // e^{|z|} down to a result of size e^{−|z|}.
    let mut entire_samples = Vec::new();
    for &nu in &cfg.grids.nu {
        for z in [-2.0, -1.0, 2.0, 10.0, 25.0, 50.0] {
            entire_samples.push(Sample::new(vec![("nu", nu), ("z", z)], move || {
                let spec = WrightSpec::new(vec![(0.5, 0.5)], vec![(nu + 1.0, 0.5)]);
                let value = gamma_ratio(&[nu + 1.0], &[])? / PI.sqrt() * eval(&spec, z)?;
                Ok(compare(value, bessel_struve_kernel(nu, z)?.value))
            }));
        }
    }

    let divergent = [
        // Four upper slope-one pairs against three lower ones: delta = −1.
        WrightSpec::new(
            vec![(1.1, 1.0), (0.8, 1.0), (1.3, 1.0), (0.4, 1.0)],
            vec![(1.5, 1.0), (1.9, 1.0), (1.2, 1.0)],
        ),
        WrightSpec::new(vec![(1.0, 1.5), (1.0, 1.0)], vec![(1.0, 1.0)]),
        WrightSpec::new(vec![(0.5, 2.0)], vec![]),
    ];
    let divergent_samples = divergent
        .into_iter()
        .enumerate()
        .map(|(i, spec)| {
            Sample::new(vec![("spec", i as f64)], move || {
                match wright_eval_with(&spec, 0.5, SeriesConfig::default()) {
                    Err(Error::Convergence(_)) => Ok(Outcome::Deviation(0.0)),
                    Err(e) => Err(e),
                    Ok(_) => Ok(Outcome::Deviation(f64::INFINITY)),
                }
            })
        })
        .collect();

    vec![
        passing(
            "W-delta.generated-specs",
            Anchor::WDelta,
            "delta of every Wright spec generated by the left, right and pathway closed forms is 0",
            Oracle::Analytic,
            Metric::Absolute,
            tol.exact,
            delta_samples,
        ),
        passing(
            "W-delta.exp-series",
            Anchor::WDelta,
            "1Psi1[(1,1); (1,1) | z] = e^z, in particular e at z = 1",
            Oracle::Analytic,
            Metric::Relative,
            tol.identity,
            exp_samples,
        ),
        passing(
            "W-delta.pair-insertion",
            Anchor::WDelta,
            "inserting a matched upper/lower pair leaves the Wright series unchanged",
            Oracle::Analytic,
            Metric::Relative,
            tol.identity,
            insertion_samples,
        ),
        passing(
            "W-delta.pochhammer",
            Anchor::WDelta,
            "slope-one specs equal their gamma prefactor times the Pochhammer hypergeometric series",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            pochhammer_samples,
        ),
        passing(
            "W-delta.entire",
            Anchor::WDelta,
            "delta-zero kernel spec sums at |z| up to 50 and reproduces S_nu(z)",
            Oracle::Analytic,
            Metric::Relative,
            tol.series,
            entire_samples,
        ),
        passing(
            "W-delta.divergent",
            Anchor::WDelta,
            "specs with delta <= -1 are rejected as divergent before summation",
            Oracle::Analytic,
            Metric::Absolute,
            tol.exact,
            divergent_samples,
        ),
    ]
}
