//! The JSON document every command emits.

use serde::Serialize;
use serde_json::Value;

use super::config::ConfigEcho;
use super::CliError;
use crate::check::{all_passed, Check};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorEcho {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigEcho>,
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEcho>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl ReportDocument {
    pub fn finished(command: String, suite: Option<String>, config: Option<ConfigEcho>, checks: Vec<Check>, data: Value) -> Self {
        let ok = all_passed(&checks);
        ReportDocument {
            command,
            suite,
            config,
            status: if ok { Status::Pass } else { Status::Fail },
            checks,
            data,
            error: None,
            exit_code: if ok { 0 } else { 1 },
        }
    }

    pub fn failed(command: String, suite: Option<String>, config: Option<ConfigEcho>, err: &CliError) -> Self {
        ReportDocument {
            command,
            suite,
            config,
            status: Status::Error,
            checks: Vec::new(),
            data: Value::Null,
            error: Some(ErrorEcho { kind: err.kind(), message: err.to_string() }),
            exit_code: err.exit_code(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
