//! Rendering of results as text or JSON.

use std::path::PathBuf;
use std::time::Duration;

use serde_json::{json, Value};
use singlink::polynomial::{BasePolynomial, InvariantValue};

/// A computed invariant.
#[derive(Debug, Clone)]
pub enum Computed {
    Count(usize),
    Polynomial(BasePolynomial),
    Multiset(InvariantValue),
}

impl Computed {
    pub fn render(&self) -> String {
        match self {
            Computed::Count(n) => n.to_string(),
            Computed::Polynomial(p) => p.to_string(),
            Computed::Multiset(v) => v.to_string(),
        }
    }

    fn multiset(&self) -> Value {
        match self {
            Computed::Multiset(v) => v
                .terms()
                .map(|(tag, mult)| {
                    let mult = mult
                        .to_string()
                        .parse::<u64>()
                        .map_or_else(|_| json!(mult.to_string()), |m| json!(m));
                    json!([InvariantValue::render_tag(tag), mult])
                })
                .collect(),
            _ => Value::Null,
        }
    }
}

fn path_json(p: &Option<PathBuf>) -> Value {
    p.as_ref().map_or(Value::Null, |p| json!(p.display().to_string()))
}

/// One invariant computation and its inputs.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub kind: String,
    pub diagram: Option<PathBuf>,
    pub structure: Option<PathBuf>,
    pub weights: Option<PathBuf>,
    pub value: Computed,
    pub elapsed: Duration,
}

impl RunResult {
    pub fn to_json(&self, timing: bool) -> Value {
        let mut out = json!({
            "kind": self.kind,
            "inputs": {
                "diagram": path_json(&self.diagram),
                "structure": path_json(&self.structure),
                "weights": path_json(&self.weights),
            },
            "value": self.value.render(),
            "multiset": self.value.multiset(),
        });
        if timing {
            out["timing_ms"] = json!(millis(self.elapsed));
        }
        out
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = self.value.render();
        if timing {
            out.push_str(&format!("\ntime: {:.3} ms", millis(self.elapsed)));
        }
        out
    }
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}
