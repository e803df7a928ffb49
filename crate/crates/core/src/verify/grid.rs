//! Deterministic grid construction. Each check owns a ChaCha stream, so
//! adding or reordering checks never perturbs another check's points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::msm::{msm_power_condition, MsmParams, Side};
use crate::pathway::PathwayParams;

use super::config::Grids;

pub(crate) fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub(crate) fn pick(rng: &mut ChaCha8Rng, values: &[f64]) -> f64 {
    values[rng.random_range(0..values.len())]
}

/// `n` evenly spaced points on `[lo, hi]`.
pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct MsmPoint {
    pub p: MsmParams,
    pub rho: f64,
    pub nu: f64,
}

impl MsmPoint {
    pub fn coords(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("alpha", self.p.alpha),
            ("alpha_prime", self.p.alpha_prime),
            ("beta", self.p.beta),
            ("beta_prime", self.p.beta_prime),
            ("gamma", self.p.gamma),
            ("rho", self.rho),
            ("nu", self.nu),
        ]
    }
}

/// Which F3 parameters are pinned to zero so that quadrature applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pin {
    Free,
    /// `α′ = 0` on the left, `α = 0` on the right.
    Collapse,
}

/// Draws `n` MSM points satisfying the power-image condition on `side`.
pub(crate) fn msm_points(g: &Grids, side: Side, n: usize, pin: Pin, id: u64) -> Vec<MsmPoint> {
    let mut rng = stream(g.seed, id);
    let rhos = match side {
        Side::Left => &g.rho_left,
        Side::Right => &g.rho_right,
    };
    let mut out = Vec::with_capacity(n);
    // Bounded redraws: a grid with no admissible point yields an empty check.
    for _ in 0..n * 64 {
        if out.len() == n {
            break;
        }
        let mut p = MsmParams {
            alpha: pick(&mut rng, &g.msm_values),
            alpha_prime: pick(&mut rng, &g.msm_values),
            beta: pick(&mut rng, &g.msm_values),
            beta_prime: pick(&mut rng, &g.msm_values),
            gamma: pick(&mut rng, &g.gamma),
        };
        let rho = pick(&mut rng, rhos);
        let nu = pick(&mut rng, &g.nu);
        if pin == Pin::Collapse {
            match side {
                Side::Left => p.alpha_prime = 0.0,
                Side::Right => p.alpha = 0.0,
            }
        }
        if p.validate().is_ok() && msm_power_condition(side, &p, rho).is_ok() {
            out.push(MsmPoint { p, rho, nu });
        }
    }
    out
}

/// Full product of the pathway grid: `(params, σ)`.
pub(crate) fn pathway_points(g: &Grids) -> Vec<(PathwayParams, f64)> {
    let pg = &g.pathway;
    let mut out = Vec::new();
    for &eta in &pg.eta {
        for &a in &pg.a {
            for &alpha in &pg.alpha {
                let Ok(p) = PathwayParams::new(eta, a, alpha) else {
                    continue;
                };
                for &sigma in &pg.sigma {
                    if sigma > 0.0 {
                        out.push((p, sigma));
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn pathway_coords(p: &PathwayParams, sigma: f64) -> Vec<(&'static str, f64)> {
    vec![
        ("eta", p.eta),
        ("a", p.a),
        ("pathway_alpha", p.pathway_alpha),
        ("sigma", sigma),
    ]
}

pub(crate) fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}
