use crate::error::{Error, Result};
use crate::gamma::ln_gamma_signed;
use crate::series::{SeriesConfig, SeriesEval, Summer};

/// `J_v(z)` (`modified = false`) or `I_v(z)` (`modified = true`) by the
/// ascending series, for `v > -1` and `z >= 0`.
pub fn bessel_first_kind(v: f64, z: f64, modified: bool) -> Result<SeriesEval> {
    bessel_first_kind_with(v, z, modified, SeriesConfig::default())
}

pub fn bessel_first_kind_with(
    v: f64,
    z: f64,
    modified: bool,
    cfg: SeriesConfig,
) -> Result<SeriesEval> {
    if !(v > -1.0) {
        return Err(Error::Domain(format!("Bessel order {v} must exceed -1")));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!(
            "Bessel argument {z} must be finite and >= 0"
        )));
    }
    if z == 0.0 {
        return match v {
            0.0 => Ok(SeriesEval::exact(1.0)),
            v if v > 0.0 => Ok(SeriesEval::exact(0.0)),
            _ => Err(Error::Domain(format!(
                "Bessel order {v} is singular at z = 0"
            ))),
        };
    }

    let half = 0.5 * z;
    let lead = ln_gamma_signed(v + 1.0)?;
    let mut term = (v * half.ln() - lead.log_abs).exp();
    let q = if modified { half * half } else { -half * half };

    let mut sum = Summer::new(cfg);
    let mut k = 0.0;
    while !sum.push(term) {
        term *= q / ((k + 1.0) * (k + v + 1.0));
        k += 1.0;
    }
    Ok(sum.finish())
}
