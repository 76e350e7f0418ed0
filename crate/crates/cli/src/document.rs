use std::fmt::Display;
use std::time::Instant;

use serde_json::{json, Map, Value};

/// JSON result of one command. Integers are decimal strings.
#[derive(Debug, Clone)]
pub struct ResultDocument {
    command: String,
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    methods: Vec<String>,
    warnings: Vec<String>,
    started: Instant,
    elapsed_ms: Option<u128>,
}

/// Serializes an integer as a decimal string.
pub fn int(v: impl Display) -> Value {
    Value::String(v.to_string())
}

/// Serializes `(l, count)` pairs.
pub fn trace<T: Display>(pairs: &[(usize, T)]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|(l, c)| json!({ "l": int(l), "count": int(c) }))
            .collect(),
    )
}

impl ResultDocument {
    pub fn new(command: &str) -> Self {
        ResultDocument {
            command: command.to_string(),
            inputs: Map::new(),
            outputs: Map::new(),
            methods: Vec::new(),
            warnings: Vec::new(),
            started: Instant::now(),
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn output(&mut self, key: &str, value: Value) -> &mut Self {
        self.outputs.insert(key.to_string(), value);
        self
    }

    pub fn method(&mut self, m: &str) -> &mut Self {
        if !self.methods.iter().any(|x| x == m) {
            self.methods.push(m.to_string());
        }
        self
    }

    pub fn warn(&mut self, w: impl Into<String>) -> &mut Self {
        self.warnings.push(w.into());
        self
    }

    pub fn finish(mut self) -> Self {
        self.elapsed_ms = Some(self.started.elapsed().as_millis());
        self
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn outputs(&self) -> &Map<String, Value> {
        &self.outputs
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn methods(&self) -> &[String] {
        &self.methods
    }

    /// Output field as a string, for integer outputs.
    pub fn output_str(&self, key: &str) -> Option<&str> {
        self.outputs.get(key).and_then(Value::as_str)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "methods": self.methods,
            "warnings": self.warnings,
            "timing_ms": int(self.elapsed_ms.unwrap_or_else(|| self.started.elapsed().as_millis())),
        })
    }

    /// The document without its timing field, for determinism checks.
    pub fn to_json_untimed(&self) -> Value {
        let mut v = self.to_json();
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing_ms");
        }
        v
    }
}
