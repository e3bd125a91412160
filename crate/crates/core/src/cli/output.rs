//! Result records, shared by the human and `--json` renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::FactoredNatural;

/// One result line. In machine mode this is serialized as a single JSON
/// object; big integers are decimal strings and factorizations are
/// ascending `[prime, exponent]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub op: String,
    pub input: BTreeMap<String, String>,
    pub output: Value,
    pub ok: bool,
}

/// What a command produced, before rendering.
#[derive(Clone, Debug)]
pub enum Payload {
    Scalar(Value),
    Factors(FactoredNatural),
    Fields(Vec<(&'static str, Value)>),
}

impl Payload {
    fn to_json(&self) -> Value {
        match self {
            Payload::Scalar(v) => v.clone(),
            Payload::Factors(f) => serde_json::to_value(f).expect("factor pairs serialize"),
            Payload::Fields(fields) => Value::Object(
                fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect(),
            ),
        }
    }

    fn to_human(&self) -> String {
        match self {
            Payload::Scalar(v) => scalar(v),
            Payload::Factors(f) => f.to_string(),
            Payload::Fields(fields) => fields
                .iter()
                .map(|(k, v)| format!("{k}={}", scalar(v)))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

/// A record plus the payload it was built from.
#[derive(Clone, Debug)]
pub struct Line {
    pub op: &'static str,
    pub input: Vec<(&'static str, String)>,
    pub payload: Payload,
    pub ok: bool,
}

impl Line {
    pub fn new(op: &'static str, input: Vec<(&'static str, String)>, payload: Payload) -> Self {
        Line { op, input, payload, ok: true }
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn record(&self) -> OutputRecord {
        OutputRecord {
            op: self.op.to_string(),
            input: self
                .input
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            output: self.payload.to_json(),
            ok: self.ok,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string(&self.record()).expect("records serialize")
    }

    pub fn human(&self) -> String {
        let body = self.payload.to_human();
        if self.ok {
            body
        } else {
            format!("{body} FAILED")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_line_round_trips() {
        let f = FactoredNatural::from_pairs([(2, 3), (3, 2)]).unwrap();
        let line = Line::new("lcm-range", vec![("n", "9".into())], Payload::Factors(f));
        let text = line.json();
        assert_eq!(text, r#"{"op":"lcm-range","input":{"n":"9"},"output":[[2,3],[3,2]],"ok":true}"#);
        let back: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, line.record());
        assert_eq!(line.human(), "2^3 * 3^2");
    }

    #[test]
    fn fields_render_in_order() {
        let line = Line::new(
            "digits",
            vec![],
            Payload::Fields(vec![("digits", json!([1, 0, 1])), ("i0", Value::Null)]),
        )
        .with_ok(false);
        assert_eq!(line.human(), "digits=[1,0,1] i0=none FAILED");
    }
}
