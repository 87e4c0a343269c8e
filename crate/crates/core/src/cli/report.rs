use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl CheckRecord {
    pub fn exact(name: impl Into<String>, holds: bool) -> Self {
        CheckRecord {
            name: name.into(),
            mode: Mode::Exact,
            holds: Some(holds),
            deviation: None,
            tolerance: None,
            pass: holds,
        }
    }

    /// Passes when `deviation < tolerance`.
    pub fn below(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        CheckRecord {
            name: name.into(),
            mode: Mode::Numeric,
            holds: None,
            deviation: Some(deviation),
            tolerance: Some(tolerance),
            pass: deviation < tolerance,
        }
    }

    /// Passes when `value > threshold`; used for negative controls.
    pub fn above(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        CheckRecord {
            pass: value > threshold,
            ..Self::below(name, value, threshold)
        }
    }
}

/// Outcome of one CLI invocation. Records keep insertion order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, params: Value) -> Self {
        Report {
            command: command.into(),
            params,
            checks: Vec::new(),
            data: BTreeMap::new(),
            pass: true,
        }
    }

    pub fn check(&mut self, record: CheckRecord) {
        self.pass &= record.pass;
        self.checks.push(record);
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.data.insert(key.into(), v);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weil {}", self.command)?;
        if let Value::Object(map) = &self.params {
            for (k, v) in map {
                if !v.is_null() {
                    writeln!(f, "  {k} = {v}")?;
                }
            }
        }
        for (k, v) in &self.data {
            writeln!(f, "  {k}: {v}")?;
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            match (c.mode, c.deviation, c.tolerance) {
                (Mode::Numeric, Some(d), Some(t)) => writeln!(
                    f,
                    "{status} {} (deviation {d:.3e}, tolerance {t:.1e})",
                    c.name
                )?,
                _ => writeln!(f, "{status} {} (exact)", c.name)?,
            }
        }
        write!(f, "overall: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut r = Report::new("x", Value::Null);
        r.check(CheckRecord::exact("a", true));
        r.check(CheckRecord::below("b", 1e-12, 1e-8));
        assert!(r.pass);
        r.check(CheckRecord::above("probe", 1e-3, 1e-2));
        assert!(!r.pass);
        let text = r.to_string();
        assert!(text.contains("PASS a (exact)"));
        assert!(text.ends_with("overall: FAIL"));
        assert_eq!(r.to_json(), r.clone().to_json());
    }
}
