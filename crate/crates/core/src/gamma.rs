//! Real log-gamma with sign tracking, gamma ratios, Pochhammer symbols and
//! digamma. Every gamma factor in the series and closed-form images goes
//! through this module.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Absolute distance from a nonpositive integer below which an argument is a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln((n-1)!) for n = 1..=171, i.e. ln Γ(n) at the positive integers.
fn ln_factorials() -> &'static [f64; 171] {
    static TABLE: OnceLock<[f64; 171]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [0.0; 171];
        let mut fact = 1.0_f64;
        for (n, slot) in table.iter_mut().enumerate() {
            if n > 0 {
                fact *= n as f64;
            }
            *slot = fact.ln();
        }
        table
    })
}

/// `ln|Γ(x)|` together with the sign of `Γ(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogGamma {
    pub log_abs: f64,
    pub sign: i8,
}

impl SignedLogGamma {
    /// Reconstructs `Γ(x)`; overflows to ±inf beyond the f64 range.
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }
}

/// True when `x` sits within [`POLE_TOLERANCE`] of 0, -1, -2, ...
pub fn is_pole(x: f64) -> bool {
    x <= POLE_TOLERANCE && (x - x.round()).abs() < POLE_TOLERANCE
}

/// `sin(πx)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    let a = r.abs();
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    r.signum() * v
}

fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn lanczos_ln_gamma(x: f64) -> f64 {
    debug_assert!(x >= 0.5);
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln|Γ(x)|` and `sign Γ(x)` for real `x` off the poles.
pub fn ln_gamma_signed(x: f64) -> Result<SignedLogGamma> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma of non-finite {x}")));
    }
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if (1.0..=171.0).contains(&x) && x.fract() == 0.0 {
        return Ok(SignedLogGamma {
            log_abs: ln_factorials()[x as usize - 1],
            sign: 1,
        });
    }
    if x >= 0.5 {
        return Ok(SignedLogGamma {
            log_abs: lanczos_ln_gamma(x),
            sign: 1,
        });
    }
    // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
    let s = sin_pi(x);
    let log_abs = PI.ln() - s.abs().ln() - lanczos_ln_gamma(1.0 - x);
    Ok(SignedLogGamma {
        log_abs,
        sign: if s < 0.0 { -1 } else { 1 },
    })
}

/// `Γ(x)`; overflow is reported as an error rather than `inf`.
/// Positive integers up to 23 are exact: `(x−1)!` is representable there.
pub fn gamma(x: f64) -> Result<f64> {
    if x.fract() == 0.0 && (1.0..=23.0).contains(&x) {
        return Ok((2..x as u32).map(f64::from).product());
    }
    let g = ln_gamma_signed(x)?;
    if g.log_abs > f64::MAX.ln() {
        return Err(Error::Overflow(g.log_abs));
    }
    Ok(g.value())
}

/// `ΠΓ(numerators) / ΠΓ(denominators)`, accumulated in log space.
///
/// A denominator at a pole makes the whole ratio zero (reciprocal-gamma
/// convention); a numerator at a pole is an error.
pub fn gamma_ratio(numerators: &[f64], denominators: &[f64]) -> Result<f64> {
    let (log_abs, sign) = match ln_gamma_ratio(numerators, denominators)? {
        Some(v) => v,
        None => return Ok(0.0),
    };
    if log_abs > f64::MAX.ln() {
        return Err(Error::Overflow(log_abs));
    }
    Ok(f64::from(sign) * log_abs.exp())
}

/// Log-magnitude and sign of a gamma ratio; `None` when a denominator pole
/// forces the ratio to zero.
pub(crate) fn ln_gamma_ratio(
    numerators: &[f64],
    denominators: &[f64],
) -> Result<Option<(f64, i8)>> {
    let mut log_abs = 0.0;
    let mut sign = 1i8;
    for &x in numerators {
        let g = ln_gamma_signed(x)?;
        log_abs += g.log_abs;
        sign *= g.sign;
    }
    for &x in denominators {
        if is_pole(x) {
            return Ok(None);
        }
        let g = ln_gamma_signed(x)?;
        log_abs -= g.log_abs;
        sign *= g.sign;
    }
    Ok(Some((log_abs, sign)))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: f64, n: u32) -> Result<f64> {
    let mut acc = 1.0_f64;
    for k in 0..n {
        acc *= a + f64::from(k);
        if acc == 0.0 {
            return Ok(0.0);
        }
        if !acc.is_finite() {
            return Err(Error::Overflow(f64::INFINITY));
        }
    }
    Ok(acc)
}

/// Digamma `ψ(x) = Γ'(x)/Γ(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        // ψ(x) = ψ(1-x) - π cot(πx)
        let cot = cos_pi(x) / sin_pi(x);
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // Bernoulli tail: B_2k / (2k x^2k)
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2
                                        * (1.0 / 132.0
                                            - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    Ok(shift + x.ln() - 0.5 / x - tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_and_negative_half() {
        let g = ln_gamma_signed(0.5).unwrap();
        assert!((g.log_abs - 0.572_364_942_924_700_1).abs() < 1e-15);
        assert_eq!(g.sign, 1);
        let g = ln_gamma_signed(-0.5).unwrap();
        assert_eq!(g.sign, -1);
        assert!(rel(g.value(), -2.0 * PI.sqrt()) < 1e-13);
        assert_eq!(ln_gamma_signed(-1.5).unwrap().sign, 1);
    }

    #[test]
    fn integers_are_factorials() {
        assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-15);
        assert_eq!(ln_gamma_signed(1.0).unwrap().log_abs, 0.0);
        assert_eq!(ln_gamma_signed(2.0).unwrap().log_abs, 0.0);
        assert!(rel(gamma(20.0).unwrap(), 121_645_100_408_832_000.0) < 1e-14);
    }

    #[test]
    fn poles_are_rejected() {
        assert_eq!(ln_gamma_signed(0.0), Err(Error::Pole(0.0)));
        assert!(matches!(ln_gamma_signed(-3.0 + 1e-13), Err(Error::Pole(_))));
        assert!(ln_gamma_signed(-3.0 + 1e-9).is_ok());
    }

    #[test]
    fn ratio_examples() {
        assert!(rel(gamma_ratio(&[1.0], &[2.0]).unwrap(), 1.0) < 1e-15);
        assert!(rel(gamma_ratio(&[3.0], &[4.0]).unwrap(), 1.0 / 3.0) < 1e-15);
        assert_eq!(gamma_ratio(&[0.5, 2.0], &[1.5, -2.0]).unwrap(), 0.0);
        assert!(matches!(gamma_ratio(&[-1.0], &[1.0]), Err(Error::Pole(_))));
        assert!(matches!(
            gamma_ratio(&[300.0], &[1.0]),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 4).unwrap(), 360.0);
        assert_eq!(pochhammer(-7.3, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(0.0, 2).unwrap(), 0.0);
        assert!(matches!(pochhammer(10.0, 400), Err(Error::Overflow(_))));
    }

    #[test]
    fn recurrence_on_grid() {
        for i in 0..200 {
            let x = -9.95 + 0.1 * i as f64;
            if is_pole(x) {
                continue;
            }
            let r = gamma_ratio(&[x + 1.0], &[x]).unwrap();
            assert!(rel(r, x) < 1e-12, "x = {x}: {r}");
        }
    }

    #[test]
    fn reflection_on_unit_interval() {
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let a = ln_gamma_signed(x).unwrap().value();
            let b = ln_gamma_signed(1.0 - x).unwrap().value();
            assert!(rel(a * b, PI / (PI * x).sin()) < 1e-10);
        }
    }

    #[test]
    fn digamma_values() {
        const EULER: f64 = 0.577_215_664_901_532_9;
        assert!((digamma(1.0).unwrap() + EULER).abs() < 1e-14);
        assert!((digamma(0.5).unwrap() + EULER + 2.0 * 2f64.ln()).abs() < 1e-14);
        // ψ(x+1) = ψ(x) + 1/x
        for &x in &[-2.5, -0.3, 0.1, 3.7, 25.0] {
            let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!((d - 1.0 / x).abs() < 1e-12, "x = {x}");
        }
    }
}
