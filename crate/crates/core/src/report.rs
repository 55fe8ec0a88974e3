//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

use crate::graph::Edge;

/// Bumped on any breaking change to the serialized layout.
pub const SCHEMA_VERSION: &str = "1.0";

/// Pair order used by the SMEC check; witnesses are reproducible under it.
pub const PAIR_ORDER: &str = "lexicographic(u<v)";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn expect_eq(name: &str, got: usize, want: usize) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: got == want,
            detail: format!("got {got}, expected {want}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
    /// A single constructed instance or structural check.
    Direct,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub floor: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub conditional: bool,
    pub adversarial: bool,
    #[serde(default)]
    pub flags: Vec<String>,
    pub prng: String,
    pub pair_order: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub visited: u64,
    pub skipped_conditional: u64,
    pub failures: u64,
    #[serde(default)]
    pub adversarial_visited: u64,
}

/// A structured counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Fewer than `required` edge-disjoint paths between `u` and `v` in `G - F`.
    Smec {
        fault_edges: Vec<Edge>,
        u: usize,
        v: usize,
        path_count: usize,
        required: usize,
        cut: Vec<Edge>,
    },
    /// `G - F` has no component of at least `floor` vertices.
    Component {
        fault_edges: Vec<Edge>,
        largest_component: usize,
        floor: usize,
    },
    /// A failed structural check.
    Check { name: String, detail: String },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub check_name: String,
    pub target: Target,
    pub mode: Mode,
    pub parameters: Parameters,
    pub counts: Counts,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub timing: Timing,
}

impl VerificationReport {
    pub fn new(check_name: &str, target: Target, mode: Mode) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION.to_string(),
            check_name: check_name.to_string(),
            target,
            mode,
            parameters: Parameters {
                prng: crate::rng::PRNG_NAME.to_string(),
                pair_order: PAIR_ORDER.to_string(),
                ..Parameters::default()
            },
            counts: Counts::default(),
            checks: Vec::new(),
            witness: None,
            timing: Timing::default(),
        }
    }

    /// Report over a list of structural checks; the first failure becomes the witness.
    pub fn from_checks(check_name: &str, target: Target, checks: Vec<CheckOutcome>) -> Self {
        let mut r = VerificationReport::new(check_name, target, Mode::Direct);
        r.counts.visited = checks.len() as u64;
        r.counts.failures = checks.iter().filter(|c| !c.passed).count() as u64;
        r.witness = checks.iter().find(|c| !c.passed).map(|c| Witness::Check {
            name: c.name.clone(),
            detail: c.detail.clone(),
        });
        r.checks = checks;
        r
    }

    pub fn passed(&self) -> bool {
        self.counts.failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Serialized form with the timing field zeroed, for reproducibility comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.timing = Timing::default();
        copy.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = VerificationReport::new(
            "ft-smec",
            Target {
                family: Some("ltq".into()),
                n: Some(4),
                ..Target::default()
            },
            Mode::Sampled,
        );
        r.counts.failures = 1;
        r.witness = Some(Witness::Smec {
            fault_edges: vec![Edge::new(3, 1)],
            u: 0,
            v: 5,
            path_count: 3,
            required: 4,
            cut: vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 4)],
        });
        r.timing.wall_seconds = 0.123_456_789_012_345_6;
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"kind\": \"smec\""));
    }

    #[test]
    fn checks_drive_counts() {
        let r = VerificationReport::from_checks(
            "validate",
            Target::default(),
            vec![CheckOutcome::pass("a", ""), CheckOutcome::fail("b", "bad")],
        );
        assert_eq!(r.counts.failures, 1);
        assert!(matches!(r.witness, Some(Witness::Check { ref name, .. }) if name == "b"));
    }
}
