//! Report bodies written by the CLI.
//!
//! Exact values serialize as canonical rational strings (`"p/q"` or `"p"`);
//! float values as JSON numbers.

use serde::Serialize;
use serde_json::Value;

use crate::scalar::{canonical_string, Rational};
use crate::verification::suite::TrialReport;

pub trait ReportValue {
    fn to_report(&self) -> Value;
}

impl ReportValue for Rational {
    fn to_report(&self) -> Value {
        Value::String(canonical_string(self))
    }
}

impl ReportValue for f64 {
    fn to_report(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

impl ReportValue for f32 {
    fn to_report(&self) -> Value {
        f64::from(*self).to_report()
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub backend: &'static str,
    pub dimension: usize,
    /// Signed coefficients `(−1)^{i(n+1)} Δ_i`.
    pub coefficients: Vec<Value>,
    pub deltas: Vec<Value>,
    pub signs: Vec<i8>,
    pub residual_vector: Vec<Value>,
    pub residual_scalar: Value,
    pub verdict: &'static str,
    pub tolerance: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_residual: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct BarycentricReport {
    pub command: &'static str,
    pub backend: &'static str,
    pub point: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction_matches: Option<bool>,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct DeltaReport {
    pub command: &'static str,
    pub backend: &'static str,
    pub index: usize,
    pub delta: Value,
    pub delta_expanded: Value,
    pub signed_volume: Value,
    pub agree: bool,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub command: &'static str,
    pub verdict: &'static str,
    pub float_pass_rate: f64,
    pub report: TrialReport,
    pub runtime_ms: f64,
}

impl SuiteReport {
    pub fn new(report: TrialReport, runtime_ms: f64) -> Self {
        Self {
            command: "suite",
            verdict: if report.passed() { "pass" } else { "fail" },
            float_pass_rate: report.float_pass_rate(),
            report,
            runtime_ms,
        }
    }
}
