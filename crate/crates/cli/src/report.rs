use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input_fingerprint: String,
    pub result: Value,
    pub discrepancies: Vec<String>,
    /// Set when the primary check of the command fails (e.g. the Leibniz identity).
    #[serde(skip)]
    pub failed: bool,
}

impl Report {
    pub fn new(command: String, input_fingerprint: String, result: Value) -> Self {
        Self {
            command,
            input_fingerprint,
            result,
            discrepancies: Vec::new(),
            failed: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed || !self.discrepancies.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => {
                let mut out = String::new();
                out.push_str(&format!("command: {}\n", self.command));
                out.push_str(&format!("input: {}\n", self.input_fingerprint));
                write_value(&mut out, "", &self.result);
                if self.discrepancies.is_empty() {
                    out.push_str("discrepancies: none\n");
                } else {
                    out.push_str(&format!("discrepancies: {}\n", self.discrepancies.len()));
                    for d in &self.discrepancies {
                        out.push_str(&format!("  - {d}\n"));
                    }
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let path = if key.is_empty() { k.clone() } else { format!("{key}.{k}") };
                write_value(out, &path, x);
            }
        }
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some() && !x.is_string()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            out.push_str(&format!("{key}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{key}:{}\n", if items.is_empty() { " []" } else { "" }));
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("  - {s}\n")),
                    None => out.push_str(&format!("  - {}\n", serde_json::to_string(x).expect("json"))),
                }
            }
        }
        _ => out.push_str(&format!("{key}: {}\n", scalar(v).expect("scalar"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering() {
        let mut r = Report::new(
            "check x".into(),
            "sha256:00".into(),
            json!({"dim": 3, "lie": true, "dims": [3, 1, 0], "labels": ["e1", "e2"], "nested": {"a": null}}),
        );
        let t = r.render(Format::Text);
        assert!(t.contains("dim: 3\n"));
        assert!(t.contains("dims: [3, 1, 0]\n"));
        assert!(t.contains("labels:\n  - e1\n  - e2\n"));
        assert!(t.contains("nested.a: none\n"));
        assert!(t.ends_with("discrepancies: none\n"));
        assert_eq!(r.exit_code(), 0);
        r.discrepancies.push("bad".into());
        assert_eq!(r.exit_code(), 1);
        let s: Value = serde_json::from_str(&r.render(Format::Structured)).unwrap();
        assert_eq!(s["discrepancies"][0], "bad");
    }
}
