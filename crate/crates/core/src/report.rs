//! JSON reports shared by the CLI and the verification suites.

use std::fmt::Display;

use serde::{Serialize, Serializer};
use serde_json::Value;

pub fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub p: u64,
    pub e: usize,
    pub eisenstein: String,
    pub prec: i64,
    pub trunc: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
    Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Params,
    pub result: Outcome,
    pub data: Value,
    pub version: String,
}

impl Report {
    pub fn new(check: impl Into<String>, params: Params, result: Outcome, data: Value) -> Self {
        Report { check: check.into(), params, result, data, version: env!("CARGO_PKG_VERSION").to_string() }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            serde_json::to_string(self).expect("report serializes")
        }
    }
}
