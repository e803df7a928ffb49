use crate::error::{Error, Result};
use crate::gamma::{digamma, gamma_ratio, is_pole};
use crate::series::{SeriesConfig, SeriesEval, Summer};

/// Above this argument the direct series is replaced by the `1 - z` connection formulas.
const CONNECTION_SWITCH: f64 = 0.75;

/// `c - a - b` closer than this to an integer is treated as that integer.
const INTEGER_GAP: f64 = 1e-14;

/// Inside this distance of an integer gap the linear connection formula
/// cancels badly and is replaced by interpolation about the integer case.
const INTEGER_BAND: f64 = 1e-4;

/// Gauss hypergeometric `2F1(a, b; c; z)` for real `z < 1`.
///
/// Direct series on `[0, 0.75]`, the linear `1 - z` connection formulas on
/// `(0.75, 1)` (logarithmic variants when `c - a - b` is an integer) and the
/// Pfaff transformation `z -> z/(z-1)` for `z < 0`.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<SeriesEval> {
    gauss_2f1_with(a, b, c, z, SeriesConfig::default())
}

pub fn gauss_2f1_with(a: f64, b: f64, c: f64, z: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    hyp2f1_complement(a, b, c, z, 1.0 - z, cfg)
}

/// Same as [`gauss_2f1_with`], with `1 - z` supplied by the caller so that
/// arguments within rounding of 1 keep their relative accuracy.
pub(crate) fn hyp2f1_complement(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    one_minus_z: f64,
    cfg: SeriesConfig,
) -> Result<SeriesEval> {
    if is_pole(c) {
        return Err(Error::Domain(format!(
            "2F1 lower parameter c = {c} is a pole"
        )));
    }
    if !z.is_finite() || !(z <= 1.0) || !(one_minus_z > 0.0) {
        return Err(Error::Domain(format!(
            "2F1 argument z = {z} must be finite and < 1"
        )));
    }
    if a == 0.0 || b == 0.0 || z == 0.0 {
        return Ok(SeriesEval::exact(1.0));
    }
    if let Some(degree) = polynomial_degree(a)
        .into_iter()
        .chain(polynomial_degree(b))
        .min()
    {
        return Ok(terminating(a, b, c, z, degree, cfg));
    }
    if z < 0.0 {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
        let w_complement = 1.0 / one_minus_z;
        let w = 1.0 - w_complement;
        let inner = hyp2f1_complement(a, c - b, c, w, w_complement, cfg)?;
        return Ok(inner.scaled(one_minus_z.powf(-a)));
    }
    if z <= CONNECTION_SWITCH {
        return Ok(direct(a, b, c, z, cfg));
    }
    connection(a, b, c, z, one_minus_z, cfg)
}

fn polynomial_degree(p: f64) -> Option<u32> {
    (p < 0.0 && p == p.round()).then(|| (-p) as u32)
}

fn terminating(a: f64, b: f64, c: f64, z: f64, degree: u32, cfg: SeriesConfig) -> SeriesEval {
    let mut sum = Summer::new(SeriesConfig {
        term_cap: usize::MAX,
        ..cfg
    });
    let mut term = 1.0;
    sum.push(term);
    for n in 0..degree {
        let n = f64::from(n);
        term *= (a + n) * (b + n) * z / ((c + n) * (n + 1.0));
        sum.push(term);
    }
    sum.finish_exact()
}

fn ratio_limit(z: f64) -> f64 {
    (0.5 * (1.0 + z.abs())).max(0.5)
}

fn direct(a: f64, b: f64, c: f64, z: f64, cfg: SeriesConfig) -> SeriesEval {
    let mut sum = Summer::with_ratio_limit(cfg, ratio_limit(z));
    let mut term = 1.0;
    let mut n = 0.0;
    while !sum.push(term) {
        term *= (a + n) * (b + n) * z / ((c + n) * (n + 1.0));
        n += 1.0;
    }
    sum.finish()
}

fn connection(a: f64, b: f64, c: f64, z: f64, omz: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    let d = c - a - b;
    let m = d.round();
    let gap = d - m;
    if gap.abs() >= INTEGER_BAND {
        return non_integer_gap(a, b, c, z, omz, cfg);
    }
    let exact = integer_gap(a, b, m, omz, cfg)?;
    if gap.abs() < INTEGER_GAP {
        return Ok(exact);
    }
    // Quadratic interpolation in c through c - a - b = m - h, m, m + h; the
    // outer nodes sit far enough from m for the linear formula to keep ~12 digits.
    let c0 = a + b + m;
    let lo = non_integer_gap(a, b, c0 - INTEGER_BAND, z, omz, cfg)?;
    let hi = non_integer_gap(a, b, c0 + INTEGER_BAND, z, omz, cfg)?;
    let s = gap / INTEGER_BAND;
    let (f0, fl, fh) = (exact.value, lo.value, hi.value);
    Ok(SeriesEval {
        value: f0 + 0.5 * s * (fh - fl) + 0.5 * s * s * (fh - 2.0 * f0 + fl),
        abs_error_est: exact
            .abs_error_est
            .max(lo.abs_error_est)
            .max(hi.abs_error_est),
        terms_used: exact.terms_used + lo.terms_used + hi.terms_used,
        converged: exact.converged && lo.converged && hi.converged,
    })
}

fn non_integer_gap(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    omz: f64,
    cfg: SeriesConfig,
) -> Result<SeriesEval> {
    // 2F1(a,b;c;z) = Γ(c)Γ(d)/(Γ(c-a)Γ(c-b)) 2F1(a,b;1-d;1-z)
    //   + (1-z)^d Γ(c)Γ(-d)/(Γ(a)Γ(b)) 2F1(c-a,c-b;1+d;1-z)
    let d = c - a - b;
    let first = gamma_ratio(&[c, d], &[c - a, c - b])?;
    let second = gamma_ratio(&[c, -d], &[a, b])? * omz.powf(d);
    let mut out = SeriesEval {
        value: 0.0,
        abs_error_est: 0.0,
        terms_used: 0,
        converged: true,
    };
    if first != 0.0 {
        out = out.plus_scaled(first, hyp2f1_complement(a, b, 1.0 - d, omz, z, cfg)?);
    }
    if second != 0.0 {
        out = out.plus_scaled(
            second,
            hyp2f1_complement(c - a, c - b, 1.0 + d, omz, z, cfg)?,
        );
    }
    Ok(out)
}

/// `2F1(a, b; a+b+m; z)` for integer `m`.
fn integer_gap(a: f64, b: f64, m: f64, omz: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    if m < 0.0 {
        // Euler: 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z), flipping the sign of the gap.
        let inner = logarithmic(b + m, a + m, -m as u32, omz, cfg)?;
        return Ok(inner.scaled(omz.powf(m)));
    }
    logarithmic(a, b, m as u32, omz, cfg)
}

/// `2F1(a, b; a+b+m; z)` for integer `m >= 0` in powers of `1 - z`.
fn logarithmic(a: f64, b: f64, m: u32, omz: f64, cfg: SeriesConfig) -> Result<SeriesEval> {
    let mf = f64::from(m);
    let c = a + b + mf;

    let mut finite = 0.0;
    if m > 0 {
        let scale = gamma_ratio(&[mf, c], &[a + mf, b + mf])?;
        let mut term = 1.0;
        for n in 0..m {
            finite += term;
            let n = f64::from(n);
            term *= (a + n) * (b + n) * omz / ((n + 1.0) * (1.0 - mf + n));
        }
        finite *= scale;
    }

    // -(z-1)^m Γ(c)/(Γ(a)Γ(b)) Σ (a+m)_n (b+m)_n / (n! (n+m)!) (1-z)^n
    //   × [ln(1-z) - ψ(n+1) - ψ(n+m+1) + ψ(a+n+m) + ψ(b+n+m)]
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    let scale = sign * gamma_ratio(&[c], &[a, b])? * omz.powi(m as i32);
    if scale == 0.0 {
        return Ok(SeriesEval::exact(finite));
    }
    let ln_omz = omz.ln();
    let mut psi_n1 = digamma(1.0)?;
    let mut psi_nm1 = digamma(mf + 1.0)?;
    let mut psi_a = digamma(a + mf)?;
    let mut psi_b = digamma(b + mf)?;
    let mut coef = gamma_ratio(&[], &[mf + 1.0])?;

    let mut sum = Summer::with_ratio_limit(cfg, ratio_limit(omz));
    let mut n = 0.0;
    loop {
        let bracket = ln_omz - psi_n1 - psi_nm1 + psi_a + psi_b;
        if sum.push(coef * bracket) {
            break;
        }
        coef *= (a + mf + n) * (b + mf + n) * omz / ((n + 1.0) * (n + mf + 1.0));
        psi_n1 += 1.0 / (n + 1.0);
        psi_nm1 += 1.0 / (n + mf + 1.0);
        psi_a += 1.0 / (a + mf + n);
        psi_b += 1.0 / (b + mf + n);
        n += 1.0;
    }
    let tail = sum.finish();
    Ok(SeriesEval {
        value: finite + scale * tail.value,
        abs_error_est: scale.abs() * tail.abs_error_est,
        terms_used: tail.terms_used + m as usize,
        converged: tail.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn binomial_reduction() {
        let r = gauss_2f1(2.0, 1.5, 1.5, 0.25).unwrap();
        assert!(rel(r.value, 16.0 / 9.0) < 1e-15);
        for &z in &[-50.0, -0.9, 0.5, 0.9, 0.999_999] {
            let r = gauss_2f1(0.7, 1.3, 1.3, z).unwrap();
            assert!(rel(r.value, (1.0 - z).powf(-0.7)) < 1e-13, "z = {z}");
        }
    }

    #[test]
    fn logarithmic_reduction() {
        let r = gauss_2f1(1.0, 1.0, 2.0, 0.5).unwrap();
        assert!(rel(r.value, 2f64.ln() / 0.5) < 1e-15);
        // c - a - b = 0 branch
        for &z in &[0.8, 0.95, 1.0 - 1e-9, -3.0, -1e6] {
            let r = gauss_2f1(1.0, 1.0, 2.0, z).unwrap();
            let expect = -(-z).ln_1p() / z;
            assert!(
                rel(r.value, expect) < 1e-13,
                "z = {z}: {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn origin_is_one() {
        assert_eq!(gauss_2f1(0.3, -2.7, 1.9, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn arcsin_form() {
        // 2F1(1/2, 1/2; 3/2; x^2) = asin(x)/x, c - a - b = 1/2
        for &x in &[0.3, 0.9, 0.99, 0.999_9] {
            let r = gauss_2f1(0.5, 0.5, 1.5, x * x).unwrap();
            assert!(rel(r.value, x.asin() / x) < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn connection_branches_match_direct_series() {
        // 0.8 is reachable by the direct series with a large budget.
        let cfg = SeriesConfig::default();
        // (a, b, c, tolerance); inside the interpolation band accuracy drops to ~1e-12.
        let cases = [
            (0.3, 0.4, 1.1, 1e-12),         // non-integer gap
            (0.4, 0.5, 0.9, 1e-12),         // gap 0
            (0.2, 0.3, 1.5, 1e-12),         // gap 1
            (0.5, 0.5, 3.0, 1e-12),         // gap 2
            (1.2, 1.3, 1.5, 1e-12),         // gap -1
            (0.4, 0.1, 0.5, 1e-12),         // gap 0
            (0.3, 0.5, 0.8 + 1e-10, 1e-11), // near-integer gap
            (0.3, 0.5, 0.8 + 3e-5, 1e-11),
            (0.3, 0.5, 0.8 - 7e-5, 1e-11),
        ];
        for &(a, b, c, tol) in &cases {
            let z = 0.8;
            let lhs = connection(a, b, c, z, 1.0 - z, cfg).unwrap().value;
            let rhs = direct(a, b, c, z, cfg).value;
            assert!(rel(lhs, rhs) < tol, "({a},{b},{c}): {lhs} vs {rhs}");
        }
    }

    #[test]
    fn polynomial_case() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, c, z) = (0.7, 1.9, -4.0);
        let expect = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!(rel(gauss_2f1(-2.0, b, c, z).unwrap().value, expect) < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(gauss_2f1(1.0, 1.0, -2.0, 0.5).is_err());
        assert!(gauss_2f1(1.0, 1.0, 2.0, 1.0).is_err());
    }
}
