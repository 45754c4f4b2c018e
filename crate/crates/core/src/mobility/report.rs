use super::Certificate;
use crate::position::PiKind;
use serde::{Serialize, Serializer};
use std::time::Duration;

/// Why the reported value cannot be improved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    /// The value equals the largest π-set size.
    MaxPiSet,
    /// Every configuration of each larger size was examined and rejected.
    ExhaustedSize,
    /// Taken from a closed-form result.
    Formula,
    /// The search ran out of budget; only the lower bound holds.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub value: usize,
    /// False when the state budget ran out; `value` is then only a lower bound.
    pub exact: bool,
    pub kind: PiKind,
    pub labeled: bool,
    pub lower_witness: Certificate,
    pub upper_source: UpperSource,
    pub states_explored: u64,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}
