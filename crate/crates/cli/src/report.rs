use std::fmt::Write as _;

use afkit::Caps;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// What every command prints. `values` holds the task-specific numbers; the
/// text form is rendered from the same map so both formats always agree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub task: String,
    pub values: Map<String, Value>,
    pub caps: Caps,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: &str, input: impl Into<String>, task: impl Into<String>, caps: Caps) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            task: task.into(),
            values: Map::new(),
            caps,
            elapsed_ms: 0.0,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.values.insert(key.to_owned(), value);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "input: {}", self.input).unwrap();
        writeln!(out, "task: {}", self.task).unwrap();
        for (k, v) in &self.values {
            writeln!(out, "{k}: {}", render(v)).unwrap();
        }
        writeln!(out, "caps: cycle_cap={} pm_cap={}", self.caps.cycle_cap, self.caps.pm_cap).unwrap();
        writeln!(out, "elapsed_ms: {:.3}", self.elapsed_ms).unwrap();
        out
    }
}

// Scalars bare, flat lists space separated, anything nested as compact JSON.
fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(render).collect::<Vec<_>>().join(" ")
        }
        other if other.is_array() || other.is_object() => other.to_string(),
        other => other.to_string(),
    }
}
