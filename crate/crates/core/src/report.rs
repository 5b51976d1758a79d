//! Command reports, rendered as text or JSON from the same content.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    /// `sha256:<hex>` of the input bytes the command read.
    pub inputs_digest: String,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut s = String::with_capacity(7 + 64);
    s.push_str("sha256:");
    for b in hash {
        let _ = write!(s, "{b:02x}");
    }
    s
}

impl Report {
    pub fn new(command: Vec<String>, inputs: &[u8]) -> Self {
        Report {
            command,
            inputs_digest: digest(inputs),
            results: Map::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.join(" "));
        let _ = writeln!(out, "inputs: {}", self.inputs_digest);
        for (k, v) in &self.results {
            render(&mut out, k, v, 0);
        }
        if !self.warnings.is_empty() {
            let _ = writeln!(out, "warnings:");
            for w in &self.warnings {
                let _ = writeln!(out, "  - {w}");
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("none".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

/// A flat list of scalars prints as a tuple, e.g. `(0,1,1)`.
fn tuple(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("({})", p.join(",")))
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v).or_else(|| tuple(v)) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    match v {
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{key}: [{}]", items.len());
            for item in items {
                match scalar(item).or_else(|| tuple(item)) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}  {s}");
                    }
                    None => render(out, "-", item, depth + 1),
                }
            }
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                render(out, k, x, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new(vec!["alexinv".into(), "milnor".into()], b"abc");
        r.push("dims", json!([0, 1, 1]));
        r.push("polynomial", "(t-1)^2*(t^5-1)");
        r.push("points", json!([["0", "1/5"], ["1/5", "0"]]));
        r.push("buckets", json!({"0": {"count": 2}}));
        r.warn("something");
        r
    }

    #[test]
    fn digest_known_value() {
        assert_eq!(
            digest(b"abc"),
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(Report::from_json_str(&r.to_json_string()).unwrap(), r);
    }

    #[test]
    fn text_layout() {
        let text = sample().to_text();
        let want = "command: alexinv milnor\n\
inputs: sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad\n\
dims: (0,1,1)\n\
polynomial: (t-1)^2*(t^5-1)\n\
points: [2]\n  (0,1/5)\n  (1/5,0)\n\
buckets:\n  0:\n    count: 2\n\
warnings:\n  - something\n";
        assert_eq!(text, want);
    }
}
