use qset_core::fock::FockVector;
use qset_core::lattice::{Element, Lattice};
use qset_core::{format_rational, BigRational, Error, ExactComplex};
use serde_json::{json, Map, Value};

/// One invocation's output document.
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, ok: bool) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            ok,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "ok": self.ok,
        })
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            let mut out = format!(
                "{}: {}\n",
                self.command,
                if self.ok { "ok" } else { "not ok" }
            );
            render_pretty(&self.inputs, "inputs", 0, &mut out);
            render_pretty(&self.results, "results", 0, &mut out);
            out
        } else {
            format!("{}\n", self.to_json())
        }
    }
}

/// A failure before any result could be produced.
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            format!("error ({}): {}\n", self.kind, self.message)
        } else {
            format!(
                "{}\n",
                json!({"error": {"kind": self.kind, "message": self.message}})
            )
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.kind(), e.to_string())
    }
}

fn render_pretty(v: &Value, key: &str, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in map {
                render_pretty(x, k, depth + 1, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            out.push_str(&format!("{pad}{key}: ({} entries)\n", items.len()));
            for (i, x) in items.iter().enumerate() {
                render_pretty(x, &format!("[{i}]"), depth + 1, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", ")));
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Object(m) if m.is_empty() => "{}".to_string(),
        other => other.to_string(),
    }
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(format_rational(q))
}

pub fn complex(c: &ExactComplex) -> Value {
    json!({"re": rational(&c.re), "im": rational(&c.im)})
}

pub fn vector(v: &FockVector) -> Value {
    let terms: Vec<Value> = v
        .terms()
        .map(|(k, c)| {
            json!({
                "modes": k.modes().iter().map(|m| m.0).collect::<Vec<u32>>(),
                "coeff": complex(c),
            })
        })
        .collect();
    json!({
        "statistics": v.statistics().to_string(),
        "expression": v.to_string(),
        "terms": terms,
    })
}

pub fn names(l: &Lattice, elems: &[Element]) -> Value {
    Value::Array(
        elems
            .iter()
            .map(|&e| Value::String(l.name(e).to_string()))
            .collect(),
    )
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}
