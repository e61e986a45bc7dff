//! JSON envelopes and the plain-text rendering of the same values.

use serde_json::{Map, Value};

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Report {
    pub json: Value,
    pub passed: bool,
}

impl Report {
    pub fn ok(command: &str, body: Value) -> Self {
        Self {
            json: envelope(command, body),
            passed: true,
        }
    }
}

pub fn envelope(command: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), SCHEMA_VERSION.into());
    map.insert("command".into(), command.into());
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", joined.join(", "))));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

/// Two-column table of every leaf, keyed by its dotted path.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, x)| format!("{k:<width$}  {x}\n"))
        .collect()
}
