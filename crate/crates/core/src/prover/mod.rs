//! Step-by-step replay of the dimension bound for codes in `F^66` with
//! weights in `{24, 32, 40, 56}`.
//!
//! Each verifier returns a [`ProofReport`]: an ordered list of named steps,
//! every one of which is either recomputed here (`arithmetic`), delegated to
//! another verifier (`cited-lemma`), or a dimension count backed by a total
//! operation of this crate (`structural`).

mod main_bound;
mod remark;
mod two_weight;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use main_bound::{
    verify_main_bound, verify_three_weight_bound, verify_three_weight_bound_claim, MAIN_AMBIENT,
    MAIN_WEIGHTS, THREE_WEIGHT_BOUND,
};
pub use remark::{min_union_length, remark_sharpness_code, verify_remark_a56};
pub use two_weight::{
    two_weight_row, verify_two_weight_bound, TwoWeightRow, DEFAULT_N_RANGE, TWO_WEIGHT_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Arithmetic,
    CitedLemma,
    Structural,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Arithmetic => "arithmetic",
            StepKind::CitedLemma => "cited-lemma",
            StepKind::Structural => "structural",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepStatus {
    Pass,
    Fail,
}

impl StepStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            StepStatus::Pass
        } else {
            StepStatus::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == StepStatus::Pass
    }
}

/// One checked claim. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofStep {
    pub id: String,
    pub kind: StepKind,
    pub statement: String,
    pub anchor: String,
    pub status: StepStatus,
    /// The exact quantities that were checked. Object keys are sorted.
    pub data: Value,
}

impl ProofStep {
    pub fn new(
        id: impl Into<String>,
        kind: StepKind,
        statement: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        data: Value,
    ) -> Self {
        ProofStep {
            id: id.into(),
            kind,
            statement: statement.into(),
            anchor: anchor.into(),
            status: StepStatus::from_bool(ok),
            data,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofReport {
    pub theorem: String,
    /// Conjunction of the step statuses.
    pub overall: bool,
    pub steps: Vec<ProofStep>,
}

impl ProofReport {
    pub fn new(theorem: impl Into<String>, steps: Vec<ProofStep>) -> Self {
        ProofReport {
            theorem: theorem.into(),
            overall: steps.iter().all(ProofStep::passed),
            steps,
        }
    }

    pub fn step(&self, id: &str) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &ProofStep> {
        self.steps.iter().filter(|s| !s.passed())
    }

    /// Summary used as the `data` of a step citing this report.
    pub(crate) fn citation(&self) -> Value {
        serde_json::json!({
            "cited": self.theorem,
            "overall": self.overall,
            "steps": self.steps.len(),
            "failed": self.failed_steps().map(|s| s.id.clone()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ProofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.theorem)?;
        for s in &self.steps {
            let mark = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {} ({}) {}", s.id, s.kind, s.statement)?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}
