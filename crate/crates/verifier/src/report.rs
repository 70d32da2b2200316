//! Machine-readable check reports.

use std::collections::BTreeMap;

use longcycle_core::{graph6, Graph, InvariantProfile};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// A budget ran out before the universe was settled.
    Partial,
    /// A witness search finished without a match.
    NotFound,
    /// An aggregate value (a count, a minimum, a class) differs from the
    /// claim without any single graph contradicting it.
    Mismatch,
    /// At least one graph contradicts the claim; see `counterexamples`.
    Counterexample,
}

impl Outcome {
    /// Process exit status: 0 pass, 1 refuted, 2 partial.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Partial => 2,
            Outcome::NotFound | Outcome::Mismatch | Outcome::Counterexample => 1,
        }
    }

    /// The more severe of two outcomes.
    pub fn worst(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

/// A graph with its recomputed profile and the reason it was reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub profile: InvariantProfile,
    pub reason: String,
}

impl GraphRecord {
    pub fn new(g: &Graph, reason: impl Into<String>) -> GraphRecord {
        GraphRecord {
            graph6: graph6::encode(g),
            profile: InvariantProfile::of(g),
            reason: reason.into(),
        }
    }

    /// Decodes the stored graph and recomputes its profile.
    pub fn audit(&self) -> bool {
        graph6::decode(&self.graph6).is_ok_and(|g| InvariantProfile::of(&g) == self.profile)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: Value,
    pub universe: String,
    pub universe_size: u64,
    pub outcome: Outcome,
    pub counterexamples: Vec<GraphRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<GraphRecord>,
    pub details: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// JSON with the timing field zeroed, for run-to-run comparison.
    pub fn stable_json(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        serde_json::to_string(&r).expect("reports serialize")
    }

    /// Re-verifies every stored graph; panics on a mismatch, which would mean
    /// the report itself is corrupt.
    pub(crate) fn self_audit(&self) {
        for rec in self.counterexamples.iter().chain(&self.witnesses) {
            assert!(rec.audit(), "{}: record {} fails re-verification", self.check_id, rec.graph6);
        }
    }
}
