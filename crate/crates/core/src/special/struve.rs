use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio, ln_gamma_signed};
use crate::series::{SeriesConfig, SeriesEval, Summer};

/// `H_v(z)` (`modified = false`) or `L_v(z)` (`modified = true`) by the
/// ascending series `(z/2)^(v+1) Σ (±1)^k (z/2)^(2k) / (Γ(k+3/2) Γ(k+v+3/2))`,
/// for `v > -3/2` and `z >= 0`.
pub fn struve(v: f64, z: f64, modified: bool) -> Result<SeriesEval> {
    struve_with(v, z, modified, SeriesConfig::default())
}

pub fn struve_with(v: f64, z: f64, modified: bool, cfg: SeriesConfig) -> Result<SeriesEval> {
    if !(v > -1.5) {
        return Err(Error::Domain(format!("Struve order {v} must exceed -3/2")));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!(
            "Struve argument {z} must be finite and >= 0"
        )));
    }
    let lead = ln_gamma_signed(1.5)?.log_abs + ln_gamma_signed(v + 1.5)?.log_abs;
    if z == 0.0 {
        return match v + 1.0 {
            p if p > 0.0 => Ok(SeriesEval::exact(0.0)),
            0.0 => Ok(SeriesEval::exact((-lead).exp())),
            _ => Err(Error::Domain(format!(
                "Struve order {v} is singular at z = 0"
            ))),
        };
    }

    let half = 0.5 * z;
    let mut term = half.powf(v + 1.0) * gamma_ratio(&[], &[1.5, v + 1.5])?;
    let q = if modified { half * half } else { -half * half };

    let mut sum = Summer::new(cfg);
    let mut k = 0.0;
    while !sum.push(term) {
        term *= q / ((k + 1.5) * (k + v + 1.5));
        k += 1.0;
    }
    Ok(sum.finish())
}
