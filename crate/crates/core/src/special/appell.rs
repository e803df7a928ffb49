use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::is_pole;
use crate::series::{SeriesConfig, SeriesEval, Summer};

use super::hyp2f1::hyp2f1_complement;

/// Arguments of `F3(α, α′, β, β′; γ; x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct F3Args {
    pub alpha: f64,
    pub alpha_prime: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
    pub x: f64,
    pub y: f64,
}

impl F3Args {
    /// Relabeling `(α, β, x) <-> (α′, β′, y)`; F3 is invariant under it.
    pub fn swapped(self) -> Self {
        F3Args {
            alpha: self.alpha_prime,
            alpha_prime: self.alpha,
            beta: self.beta_prime,
            beta_prime: self.beta,
            x: self.y,
            y: self.x,
            ..self
        }
    }

    /// True when `α′ = 0` or `β′ = 0`, so only the `x` sum survives.
    pub fn y_collapses(&self) -> bool {
        self.alpha_prime == 0.0 || self.beta_prime == 0.0
    }

    /// True when `α = 0` or `β = 0`, so only the `y` sum survives.
    pub fn x_collapses(&self) -> bool {
        self.alpha == 0.0 || self.beta == 0.0
    }
}

/// Appell `F3 = Σ_{m,n} (α)_m (α′)_n (β)_m (β′)_n x^m y^n / ((γ)_{m+n} m! n!)`.
///
/// Evaluated as a double series for `|x|, |y| < 1`, or as a Gauss `2F1` when
/// a parameter collapse kills one summation index. Anything else is
/// [`Error::DomainUnsupported`].
pub fn appell_f3(args: F3Args) -> Result<SeriesEval> {
    appell_f3_with(args, SeriesConfig::default())
}

pub fn appell_f3_with(args: F3Args, cfg: SeriesConfig) -> Result<SeriesEval> {
    appell_f3_complement(args, 1.0 - args.x, 1.0 - args.y, cfg)
}

/// [`appell_f3_with`] with `1 - x` and `1 - y` supplied by the caller; the
/// complements only matter on the collapsed `2F1` paths.
pub(crate) fn appell_f3_complement(
    args: F3Args,
    x_comp: f64,
    y_comp: f64,
    cfg: SeriesConfig,
) -> Result<SeriesEval> {
    let F3Args {
        alpha,
        alpha_prime,
        beta,
        beta_prime,
        gamma,
        x,
        y,
    } = args;
    if is_pole(gamma) {
        return Err(Error::Domain(format!(
            "F3 lower parameter γ = {gamma} is a pole"
        )));
    }
    match (args.x_collapses(), args.y_collapses()) {
        (true, true) => return Ok(SeriesEval::exact(1.0)),
        (false, true) => return hyp2f1_complement(alpha, beta, gamma, x, x_comp, cfg),
        (true, false) => return hyp2f1_complement(alpha_prime, beta_prime, gamma, y, y_comp, cfg),
        (false, false) => {}
    }
    if !(x.abs() < 1.0 && y.abs() < 1.0) {
        return Err(Error::DomainUnsupported(format!(
            "F3 at (x, y) = ({x}, {y}) lies outside the double-series domain and no collapse applies"
        )));
    }
    if x == 0.0 && y == 0.0 {
        return Ok(SeriesEval::exact(1.0));
    }

    let mut outer = Summer::with_ratio_limit(cfg, (0.5 * (1.0 + x.abs())).max(0.5));
    let mut inner_error = 0.0;
    let mut budget = cfg.term_cap;
    let mut converged = true;

    // row_m = (α)_m (β)_m x^m / (m! (γ)_m); inner ratio uses (γ)_{m+n} = (γ)_m (γ+m)_n.
    let mut row = 1.0;
    let mut m = 0.0;
    loop {
        let mut inner = Summer::with_ratio_limit(
            SeriesConfig {
                term_cap: budget,
                ..cfg
            },
            (0.5 * (1.0 + y.abs())).max(0.5),
        );
        let mut term = row;
        let mut n = 0.0;
        while !inner.push(term) {
            term *= (alpha_prime + n) * (beta_prime + n) * y / ((n + 1.0) * (gamma + m + n));
            n += 1.0;
            if term == 0.0 && y != 0.0 {
                break;
            }
        }
        budget = budget.saturating_sub(inner.terms());
        let row_sum = inner.finish();
        converged &= row_sum.converged || row_sum.value == 0.0;
        inner_error += row_sum.abs_error_est;
        let stop = outer.push(row_sum.value);
        if stop || budget == 0 {
            break;
        }
        row *= (alpha + m) * (beta + m) * x / ((m + 1.0) * (gamma + m));
        m += 1.0;
        if row == 0.0 {
            break;
        }
    }
    let mut total = outer.finish();
    // A terminated row recurrence (zero factor) is exact.
    if row == 0.0 {
        total.converged = true;
        total.abs_error_est = 0.0;
    }
    total.abs_error_est += inner_error;
    total.converged &= converged && budget > 0;
    total.terms_used = cfg.term_cap - budget;
    Ok(total)
}
