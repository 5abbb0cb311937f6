//! Machine-readable report envelopes. Field ordering is stable (sorted
//! keys); every number is an exact integer or a fraction string.

use num::ToPrimitive;
use piclat_core::exactalg::num::{Int, Rat};
use piclat_core::exactalg::FgAbGroup;
use serde_json::{json, Map, Value};

pub fn int_value(n: &Int) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rat_value(r: &Rat) -> Value {
    if r.denom() == &Int::from(1) {
        int_value(r.numer())
    } else {
        json!(r.to_string())
    }
}

pub fn vec_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

/// Invariant factors ascending (torsion only), free rank separate.
pub fn group_value(g: &FgAbGroup) -> Value {
    json!({
        "invariant_factors": g.torsion_factors().iter().map(int_value).collect::<Vec<_>>(),
        "free_rank": g.free_rank(),
        "pretty": g.to_string(),
    })
}

pub struct Envelope {
    pub input: Map<String, Value>,
    pub quantity: String,
    pub result: Value,
    pub assumptions: Vec<String>,
    pub tags: Vec<String>,
}

impl Envelope {
    pub fn to_json(&self) -> Value {
        json!({
            "input": Value::Object(self.input.clone()),
            "quantity": self.quantity,
            "result": self.result,
            "assumptions": self.assumptions,
            "tags": self.tags,
        })
    }

    pub fn render(&self, format: &str) -> String {
        if format == "md" {
            let mut out = String::new();
            out.push_str(&format!("## {}\n\n", self.quantity));
            for (k, v) in &self.input {
                out.push_str(&format!("- {}: {}\n", k, compact(v)));
            }
            out.push_str(&format!("- result: {}\n", compact(&self.result)));
            for a in &self.assumptions {
                out.push_str(&format!("- assumes: {}\n", a));
            }
            if !self.tags.is_empty() {
                out.push_str(&format!("- via: {}\n", self.tags.join(", ")));
            }
            out
        } else {
            serde_json::to_string_pretty(&self.to_json()).expect("serializable")
        }
    }
}

/// One-line rendering used by the markdown format.
fn compact(v: &Value) -> String {
    match v {
        Value::Object(m) => {
            if let Some(p) = m.get("pretty") {
                return p.as_str().unwrap_or_default().to_string();
            }
            serde_json::to_string(v).unwrap_or_default()
        }
        Value::String(s) => s.clone(),
        _ => serde_json::to_string(v).unwrap_or_default(),
    }
}
