//! Series evaluation results and the shared truncation rule.

use serde::Serialize;

/// Default hard limit on the number of terms of any series.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// A truncated series value with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesEval {
    pub value: f64,
    /// Bound on the discarded tail.
    pub abs_error_est: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesEval {
    pub fn exact(value: f64) -> Self {
        SeriesEval {
            value,
            abs_error_est: 0.0,
            terms_used: 1,
            converged: true,
        }
    }

    /// Multiplies value and error estimate by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        SeriesEval {
            value: self.value * factor,
            abs_error_est: self.abs_error_est * factor.abs(),
            ..self
        }
    }

    /// Linear combination `self + factor * other`, merging diagnostics.
    pub fn plus_scaled(self, factor: f64, other: SeriesEval) -> Self {
        SeriesEval {
            value: self.value + factor * other.value,
            abs_error_est: self.abs_error_est + factor.abs() * other.abs_error_est,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
        }
    }
}

/// Relative tolerance and term cap shared by every series evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub tol: f64,
    pub term_cap: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            tol: f64::EPSILON,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

/// Incremental summation with the geometric-tail stopping rule.
///
/// The sum stops after a nonzero term `t_n` whose ratio to the previous
/// nonzero term is below `ratio_limit`, provided the tail bound
/// `|t_n| / (1 - ratio_limit)` is within `tol * |sum|`. With the default
/// limit of one half the bound is `2 |t_n|`. Zero terms (lower gamma poles)
/// neither stop nor reset the rule.
#[derive(Debug, Clone)]
pub(crate) struct Summer {
    cfg: SeriesConfig,
    ratio_limit: f64,
    sum: f64,
    prev: Option<f64>,
    terms: usize,
    done: Option<f64>,
}

impl Summer {
    pub fn new(cfg: SeriesConfig) -> Self {
        Self::with_ratio_limit(cfg, 0.5)
    }

    pub fn with_ratio_limit(cfg: SeriesConfig, ratio_limit: f64) -> Self {
        Summer {
            cfg,
            ratio_limit,
            sum: 0.0,
            prev: None,
            terms: 0,
            done: None,
        }
    }

    /// Adds a term; returns true once the stopping rule fires or the cap is reached.
    pub fn push(&mut self, term: f64) -> bool {
        self.sum += term;
        self.terms += 1;
        if term != 0.0 {
            if let Some(prev) = self.prev {
                let bound = term.abs() / (1.0 - self.ratio_limit);
                if (term / prev).abs() < self.ratio_limit && bound <= self.cfg.tol * self.sum.abs()
                {
                    self.done = Some(bound);
                    return true;
                }
            }
            self.prev = Some(term);
        }
        self.terms >= self.cfg.term_cap
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn finish(self) -> SeriesEval {
        match self.done {
            Some(bound) => SeriesEval {
                value: self.sum,
                abs_error_est: bound,
                terms_used: self.terms,
                converged: true,
            },
            None => SeriesEval {
                value: self.sum,
                abs_error_est: self.prev.map_or(0.0, |p| 2.0 * p.abs()),
                terms_used: self.terms,
                converged: false,
            },
        }
    }

    /// Closes a series known to terminate (all remaining terms are zero).
    pub fn finish_exact(self) -> SeriesEval {
        SeriesEval {
            value: self.sum,
            abs_error_est: 0.0,
            terms_used: self.terms,
            converged: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_series_stops_with_bound() {
        let mut s = Summer::new(SeriesConfig::default());
        let mut t = 1.0;
        let mut k = 0.0;
        while !s.push(t) {
            k += 1.0;
            t /= k;
        }
        let r = s.finish();
        assert!(r.converged);
        assert!((r.value - std::f64::consts::E).abs() <= 4.0 * f64::EPSILON);
        assert!(r.abs_error_est <= f64::EPSILON * r.value);
    }

    #[test]
    fn cap_reached_is_not_converged() {
        let cfg = SeriesConfig {
            tol: 1e-16,
            term_cap: 5,
        };
        let mut s = Summer::new(cfg);
        let mut n = 0;
        while !s.push(1.0) {
            n += 1;
        }
        assert_eq!(n, 4);
        let r = s.finish();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 5);
    }

    #[test]
    fn leading_zero_terms_do_not_stop() {
        let mut s = Summer::new(SeriesConfig::default());
        assert!(!s.push(0.0));
        assert!(!s.push(0.0));
        assert!(!s.push(1.0));
        assert!(!s.push(0.25));
    }
}
