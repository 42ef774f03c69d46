//! Text and JSON rendering of command results.
//!
//! JSON values are always strings (or arrays of strings), so numbers of any
//! width survive consumers that parse JSON numbers as doubles.

use serde_json::{Map, Value};
use std::fmt::Display;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

pub struct Report {
    command: &'static str,
    lines: Vec<String>,
    fields: Map<String, Value>,
    started: Instant,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            lines: Vec::new(),
            fields: Map::new(),
            started: Instant::now(),
        }
    }

    /// A value shown as `key: value` in text and as a string field in JSON.
    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        let v = value.to_string();
        self.lines.push(format!("{}: {v}", key.replace('_', " ")));
        self.fields.insert(key.to_string(), Value::String(v));
        self
    }

    pub fn list<I, T>(&mut self, key: &str, values: I) -> &mut Self
    where
        I: IntoIterator<Item = T>,
        T: Display,
    {
        let vs: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
        self.lines
            .push(format!("{}: {}", key.replace('_', " "), vs.join(", ")));
        self.fields.insert(
            key.to_string(),
            Value::Array(vs.into_iter().map(Value::String).collect()),
        );
        self
    }

    /// JSON only.
    pub fn hidden(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.fields
            .insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn hidden_list<I, T>(&mut self, key: &str, values: I) -> &mut Self
    where
        I: IntoIterator<Item = T>,
        T: Display,
    {
        let vs = values
            .into_iter()
            .map(|v| Value::String(v.to_string()))
            .collect();
        self.fields.insert(key.to_string(), Value::Array(vs));
        self
    }

    /// Text only.
    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn render(&self, json: bool, deterministic: bool) -> String {
        if !json {
            let mut out = self.lines.join("\n");
            out.push('\n');
            return out;
        }
        let mut fields = self.fields.clone();
        fields.insert("command".into(), Value::String(self.command.into()));
        if !deterministic {
            let now = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            fields.insert("timestamp".into(), Value::String(now.to_string()));
            fields.insert(
                "elapsed_ms".into(),
                Value::String(self.started.elapsed().as_millis().to_string()),
            );
        }
        serde_json::to_string_pretty(&Value::Object(fields)).expect("report serializes") + "\n"
    }
}
