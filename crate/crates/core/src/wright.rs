//! Generalized Wright function
//! `pΨq[(a_i, A_i); (b_j, B_j); z] = Σ_k ΠΓ(a_i + A_i k) / ΠΓ(b_j + B_j k) · z^k / k!`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma_ratio, ln_gamma_signed};
use crate::series::{SeriesConfig, SeriesEval, Summer};

/// Upper and lower `(coefficient, slope)` pairs, in order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct WrightSpec {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl WrightSpec {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Self {
        WrightSpec { upper, lower }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }
}

/// `ΣB_j − ΣA_i`; the series is entire iff this exceeds −1.
pub fn wright_delta(spec: &WrightSpec) -> f64 {
    let lower: f64 = spec.lower.iter().map(|p| p.1).sum();
    let upper: f64 = spec.upper.iter().map(|p| p.1).sum();
    lower - upper
}

/// Drops every upper pair that has a bitwise-identical lower partner.
///
/// Each removed pair contributes the factor 1 to every term, so the series is
/// unchanged; the slope sums change by the same amount and delta is preserved.
pub fn cancel_matched_pairs(spec: &WrightSpec) -> WrightSpec {
    let mut lower = spec.lower.clone();
    let mut upper = Vec::with_capacity(spec.upper.len());
    for &pair in &spec.upper {
        match lower.iter().position(|&l| l == pair) {
            Some(i) => {
                lower.remove(i);
            }
            None => upper.push(pair),
        }
    }
    WrightSpec { upper, lower }
}

pub fn wright_eval(spec: &WrightSpec, z: f64, tol: f64) -> Result<SeriesEval> {
    wright_eval_with(
        spec,
        z,
        SeriesConfig {
            tol,
            ..SeriesConfig::default()
        },
    )
}

/// Sums the Wright series with each term formed in log space.
///
/// Lower-parameter poles zero a term; an upper-parameter pole is
/// [`Error::Pole`]. Divergent specs (`delta ≤ −1`) fail before any term is
/// formed.
pub fn wright_eval_with(spec: &WrightSpec, z: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    let delta = wright_delta(spec);
    if !(delta > -1.0) {
        return Err(Error::Convergence(delta));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("Wright argument {z} is not finite")));
    }

    let ln_z = z.abs().ln();
    let z_negative = z < 0.0;
    let mut upper = vec![0.0; spec.p()];
    let mut lower = vec![0.0; spec.q()];
    let mut sum = Summer::new(cfg);
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        for (slot, &(a, alpha)) in upper.iter_mut().zip(&spec.upper) {
            *slot = a + alpha * kf;
        }
        for (slot, &(b, beta)) in lower.iter_mut().zip(&spec.lower) {
            *slot = b + beta * kf;
        }
        let term = match ln_gamma_ratio(&upper, &lower)? {
            None => 0.0,
            Some((log_abs, sign)) => {
                if k == 0 {
                    f64::from(sign) * log_abs.exp()
                } else if z == 0.0 {
                    0.0
                } else {
                    let log_term = log_abs + kf * ln_z - ln_gamma_signed(kf + 1.0)?.log_abs;
                    let odd = z_negative && k % 2 == 1;
                    let sign = if odd { -sign } else { sign };
                    f64::from(sign) * log_term.exp()
                }
            }
        };
        if !term.is_finite() {
            return Err(Error::Overflow(f64::INFINITY));
        }
        if sum.push(term) {
            break;
        }
        if z == 0.0 {
            return Ok(sum.finish_exact());
        }
        k += 1;
    }
    let out = sum.finish();
    if out.converged {
        Ok(out)
    } else {
        Err(Error::TermCap(cfg.term_cap))
    }
}
