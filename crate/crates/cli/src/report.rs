//! Reports: a key-value tree rendered as indented text or as JSON.
//!
//! The JSON form has sorted keys and carries no timing, so it is
//! byte-identical across runs on identical input.

use std::time::Duration;

use serde_json::{Map, Value};

/// Stated next to every exponent list.
pub const EXPONENT_CONVENTION: &str = "exponent k means sigma acts by varpi^k, varpi = zeta_n";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Tree,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    command: String,
    body: Map<String, Value>,
    exit_code: u8,
    elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), body: Map::new(), exit_code: 0, elapsed: None }
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) {
        self.body.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.body.get(key)
    }

    pub fn exit_code(&self) -> u8 {
        self.exit_code
    }

    /// Raises the exit code; a worse outcome is never overwritten by a
    /// milder one, except that inconclusive (3) does not mask a failure (1).
    pub fn fail(&mut self, code: u8) {
        let rank = |c: u8| match c {
            0 => 0,
            3 => 1,
            1 => 2,
            _ => 3,
        };
        if rank(code) > rank(self.exit_code) {
            self.exit_code = code;
        }
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed = Some(elapsed);
    }

    fn status(&self) -> &'static str {
        match self.exit_code {
            0 => "ok",
            1 => "failure",
            2 => "invalid-input",
            _ => "inconclusive",
        }
    }

    pub fn to_tree(&self) -> Value {
        let mut root = self.body.clone();
        root.insert("command".into(), self.command.clone().into());
        root.insert("exit_code".into(), self.exit_code.into());
        root.insert("status".into(), self.status().into());
        Value::Object(root)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tree => {
                let mut s = serde_json::to_string_pretty(&self.to_tree()).expect("tree serializes");
                s.push('\n');
                s
            }
            Format::Plain => {
                let mut out = format!("fano212 {}\n", self.command);
                for (k, v) in &self.body {
                    plain_entry(&mut out, 1, k, v);
                }
                out.push_str(&format!("  status: {} (exit {})\n", self.status(), self.exit_code));
                if let Some(t) = self.elapsed {
                    out.push_str(&format!("  time: {t:.2?}\n"));
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items.iter().map(scalar).collect::<Option<Vec<_>>>().map(|v| format!("[{}]", v.join(", "))),
        Value::Object(_) => None,
    }
}

fn plain_entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                plain_entry(out, depth + 1, k, v);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                plain_entry(out, depth + 1, &format!("[{i}]"), item);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn exit_code_keeps_the_worst() {
        let mut r = Report::new("x");
        r.fail(3);
        r.fail(1);
        r.fail(3);
        assert_eq!(r.exit_code(), 1);
        r.fail(2);
        r.fail(0);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn tree_is_sorted_and_untimed() {
        let mut r = Report::new("demo");
        r.insert("zeta", 1);
        r.insert("alpha", json!({"b": [1, 2], "a": true}));
        r.set_elapsed(Duration::from_millis(5));
        let tree = r.render(Format::Tree);
        assert!(!tree.contains("time"));
        let a = tree.find("\"alpha\"").unwrap();
        let z = tree.find("\"zeta\"").unwrap();
        assert!(a < z);
        let plain = r.render(Format::Plain);
        assert!(plain.contains("    b: [1, 2]\n"), "{plain}");
        assert!(plain.contains("time: "));
    }
}
