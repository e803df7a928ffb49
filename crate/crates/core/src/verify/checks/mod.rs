mod density;
mod kernel;
mod msm;
mod pathway;
mod wright;

use super::config::VerifyConfig;
use super::{Anchor, Check, CheckSpec, Expected, Metric, Oracle, Outcome, Sample};

/// Every check, in no particular order.
pub(crate) fn build(cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(kernel::checks(cfg));
    out.extend(wright::checks(cfg));
    out.extend(msm::checks(cfg));
    out.extend(pathway::checks(cfg));
    out.extend(density::checks(cfg));
    out
}

pub(super) fn passing(
    id: &str,
    anchor: Anchor,
    description: &str,
    oracle: Oracle,
    metric: Metric,
    tolerance: f64,
    samples: Vec<Sample>,
) -> Check {
    Check {
        spec: CheckSpec {
            id: id.to_string(),
            anchor,
            description: description.to_string(),
            oracle,
            metric,
            tolerance,
            expected: Expected::Pass,
            corrected_id: None,
        },
        samples,
    }
}

/// A row for a formula as originally stated. It is expected to deviate by
/// more than `threshold` (or fail to evaluate) while `corrected` passes.
#[allow(clippy::too_many_arguments)]
pub(super) fn printed(
    id: &str,
    anchor: Anchor,
    description: &str,
    oracle: Oracle,
    metric: Metric,
    threshold: f64,
    corrected: &str,
    samples: Vec<Sample>,
) -> Check {
    Check {
        spec: CheckSpec {
            id: id.to_string(),
            anchor,
            description: description.to_string(),
            oracle,
            metric,
            tolerance: threshold,
            expected: Expected::DocumentedMismatch,
            corrected_id: Some(corrected.to_string()),
        },
        samples,
    }
}

pub(super) fn compare(value: f64, reference: f64) -> Outcome {
    Outcome::Compare { value, reference }
}
