//! Machine-readable run reports written by the command-line tool.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One run of a subcommand. `result` depends only on the parameters and the
/// seed; `wall_time_seconds` is the only field that varies between runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub subcommand: String,
    pub version: String,
    pub seed: Option<u64>,
    pub parameters: Value,
    pub wall_time_seconds: f64,
    pub result: Value,
}

impl RunReport {
    pub fn new<P: Serialize, R: Serialize>(
        subcommand: &str,
        parameters: &P,
        seed: Option<u64>,
        started: Instant,
        result: &R,
    ) -> serde_json::Result<Self> {
        Ok(RunReport {
            subcommand: subcommand.to_string(),
            version: VERSION.to_string(),
            seed,
            parameters: serde_json::to_value(parameters)?,
            wall_time_seconds: started.elapsed().as_secs_f64(),
            result: serde_json::to_value(result)?,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
