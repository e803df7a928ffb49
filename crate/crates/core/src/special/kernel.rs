use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::gamma_ratio;
use crate::series::{SeriesConfig, SeriesEval, Summer};

/// Below this argument the alternating power series is replaced by the
/// positive-coefficient form `S_ν(u) = e^u T_ν(-u)`.
const NEGATIVE_SWITCH: f64 = -1.0;

/// Bessel-Struve kernel
/// `S_ν(u) = Σ_n u^n Γ(ν+1) Γ((n+1)/2) / (√π n! Γ(n/2+ν+1))` for `ν > -1`.
///
/// `S_ν(0) = 1` exactly. For `u < -1` the series would lose up to `2|u|/ln 10`
/// digits to cancellation, so the kernel is evaluated from its integral
/// representation instead (see [`negative_argument`]).
pub fn bessel_struve_kernel(nu: f64, u: f64) -> Result<SeriesEval> {
    bessel_struve_kernel_with(nu, u, SeriesConfig::default())
}

pub fn bessel_struve_kernel_with(nu: f64, u: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("kernel order {nu} must exceed -1")));
    }
    if !u.is_finite() {
        return Err(Error::Domain(format!("kernel argument {u} is not finite")));
    }
    if u == 0.0 {
        return Ok(SeriesEval::exact(1.0));
    }
    if u < NEGATIVE_SWITCH {
        return negative_argument(nu, u, cfg);
    }
    power_series(nu, u, cfg)
}

fn power_series(nu: f64, u: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    // Even and odd terms each follow t_{n+2} = t_n u^2 / ((n+2)(n+2ν+2)).
    let mut even = 1.0;
    let mut odd = u * gamma_ratio(&[nu + 1.0], &[nu + 1.5])? / PI.sqrt();
    let mut sum = Summer::new(cfg);
    let mut n = 0.0;
    loop {
        if sum.push(even) {
            break;
        }
        if sum.push(odd) {
            break;
        }
        even *= u * u / ((n + 2.0) * (n + 2.0 * nu + 2.0));
        odd *= u * u / ((n + 3.0) * (n + 2.0 * nu + 3.0));
        n += 2.0;
    }
    Ok(sum.finish())
}

/// `S_ν(u) = e^u T_ν(w)` with `w = -u > 0` and
/// `T_ν(w) = k_ν ∫_0^1 (s(2-s))^(ν-1/2) e^(ws) ds = Σ_m N_m w^m / m!`,
/// `k_ν = 2Γ(ν+1)/(√π Γ(ν+1/2))`. The moments obey
/// `N_m = (k_ν + (m+2ν+1) N_{m+1}) / (2(m+ν+1/2))`, which is stable run
/// backwards, and `N_0 = Γ(ν+1)/(√π Γ(ν+3/2)) + N_1` stays finite through
/// `ν = -1/2` where `k_ν` vanishes. All coefficients are analytic in `ν > -1`.
fn negative_argument(nu: f64, u: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    let w = -u;
    let sqrt_pi = PI.sqrt();
    let k_nu = 2.0 * gamma_ratio(&[nu + 1.0], &[nu + 0.5])? / sqrt_pi;

    let needed = ((2.0 * w + 60.0).ceil() as usize).min(cfg.term_cap);
    let start = needed + 60;
    let mut moments = vec![0.0; needed + 1];
    let mut next = k_nu / (start as f64 + nu + 0.5);
    for m in (1..start).rev() {
        let mf = m as f64;
        next = (k_nu + (mf + 2.0 * nu + 1.0) * next) / (2.0 * (mf + nu + 0.5));
        if m <= needed {
            moments[m] = next;
        }
    }
    moments[0] = gamma_ratio(&[nu + 1.0], &[nu + 1.5])? / sqrt_pi + moments[1];

    let mut sum = Summer::new(cfg);
    let mut power = 1.0;
    for (m, &moment) in moments.iter().enumerate() {
        if m > 0 {
            power *= w / m as f64;
        }
        if sum.push(moment * power) {
            break;
        }
    }
    Ok(sum.finish().scaled(u.exp()))
}
