use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::DEFAULT_TERM_CAP;

/// Per-family tolerances. All are relative except `density`, which bounds
/// `|∫f − 1|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub quadrature: f64,
    pub series: f64,
    pub identity: f64,
    pub exact: f64,
    pub closed_vs_quadrature: f64,
    pub pathway_power: f64,
    pub density: f64,
    /// Deviation a printed formula must exceed to count as a mismatch.
    pub printed_threshold: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-8,
            series: 1e-10,
            identity: 1e-12,
            exact: 1e-14,
            closed_vs_quadrature: 1e-7,
            pathway_power: 1e-9,
            density: 1e-6,
            printed_threshold: 1e-2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PathwayGrid {
    pub eta: Vec<f64>,
    pub a: Vec<f64>,
    pub alpha: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl Default for PathwayGrid {
    fn default() -> Self {
        // Every (η, α) pair gives a non-integer η/(1−α).
        PathwayGrid {
            eta: vec![0.3, 0.7, 1.3],
            a: vec![0.8, 1.3],
            alpha: vec![-0.5, 0.0, 0.4],
            sigma: vec![0.6, 1.1, 1.6],
        }
    }
}

/// Parameter grids. MSM points draw each of α, α′, β, β′ from `msm_values`;
/// λ is set from `targets` so that the Wright argument equals the target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Grids {
    pub msm_values: Vec<f64>,
    pub gamma: Vec<f64>,
    pub rho_left: Vec<f64>,
    pub rho_right: Vec<f64>,
    pub nu: Vec<f64>,
    pub x: Vec<f64>,
    pub targets: Vec<f64>,
    pub termwise_samples: usize,
    pub quadrature_samples: usize,
    pub termwise_terms: usize,
    pub kernel_points: usize,
    pub relation_points: usize,
    pub density_samples: usize,
    pub pathway: PathwayGrid,
    pub seed: u64,
}

impl Default for Grids {
    fn default() -> Self {
        Grids {
            msm_values: vec![0.0, 0.1, 0.2, 0.3, 0.4, 0.5],
            gamma: vec![0.9, 1.0, 1.5],
            rho_left: vec![1.1, 1.5, 2.0],
            rho_right: vec![-1.1, -1.5, -2.0],
            nu: vec![-0.5, 0.0, 0.25, 0.5, 1.0],
            x: vec![0.5, 1.0, 2.0],
            targets: vec![0.5, 1.0, 2.0, -1.5],
            termwise_samples: 40,
            quadrature_samples: 18,
            termwise_terms: 60,
            kernel_points: 41,
            relation_points: 40,
            density_samples: 12,
            pathway: PathwayGrid::default(),
            seed: 0x5eed_b5e1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    pub tolerances: Tolerances,
    pub grids: Grids,
    pub term_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            tolerances: Tolerances::default(),
            grids: Grids::default(),
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

impl VerifyConfig {
    /// Parses a JSON document; missing keys keep their defaults.
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: VerifyConfig = serde_json::from_str(text)
            .map_err(|e| Error::Precondition(format!("invalid verify config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Precondition(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.grids;
        let lists = [
            ("msm_values", &g.msm_values),
            ("gamma", &g.gamma),
            ("rho_left", &g.rho_left),
            ("rho_right", &g.rho_right),
            ("nu", &g.nu),
            ("x", &g.x),
            ("targets", &g.targets),
            ("pathway.eta", &g.pathway.eta),
            ("pathway.a", &g.pathway.a),
            ("pathway.alpha", &g.pathway.alpha),
            ("pathway.sigma", &g.pathway.sigma),
        ];
        for (name, list) in lists {
            if list.is_empty() || list.iter().any(|v| !v.is_finite()) {
                return Err(Error::Precondition(format!(
                    "grid `{name}` must be a non-empty list of finite numbers"
                )));
            }
        }
        if g.x.iter().any(|&x| !(x > 0.0)) {
            return Err(Error::Precondition("grid `x` must be positive".into()));
        }
        if g.kernel_points < 2 || g.relation_points == 0 || self.term_cap == 0 {
            return Err(Error::Precondition(
                "kernel_points ≥ 2, relation_points ≥ 1 and term_cap ≥ 1 are required".into(),
            ));
        }
        Ok(())
    }

    /// Replaces every tolerance except the printed-formula threshold.
    pub fn with_tolerance_override(mut self, tol: f64) -> Self {
        let t = &mut self.tolerances;
        t.quadrature = tol;
        t.series = tol;
        t.identity = tol;
        t.exact = tol;
        t.closed_vs_quadrature = tol;
        t.pathway_power = tol;
        t.density = tol;
        self
    }
}
