//! The machine-readable run report and its table rendering.

use knspatial::{InvariantReport, Meta};
use serde::Serialize;
use serde_json::{Map, Value};

/// One check, always with both sides spelled out.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Verdict {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        Self {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }

    pub fn equal(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        Self::new(name, e, a, pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<InvariantReport>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Meta>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub timing_ms: u128,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            inputs: Map::new(),
            report: None,
            verdicts: Vec::new(),
            provenance: None,
            warnings: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command   {}\n", self.command.join(" ")));
        for (k, v) in &self.inputs {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k:<9} {v}\n"));
        }
        if let Some(r) = &self.report {
            out.push_str(&format!("n                         {}\n", r.n));
            out.push_str(&format!("sum a2 (Hamiltonian)      {}\n", r.sum_a2_hamiltonian));
            out.push_str(&format!("sum a2 (5-cycles)         {}\n", r.sum_a2_pentagons));
            out.push_str(&format!("sum lk^2 (triangle pairs) {}\n", r.sum_lk2_triangles));
            out.push_str(&format!("sum lk (triangle pairs)   {}\n", r.sum_lk_triangles));
            out.push_str(&format!("residue                   {} mod {}\n", r.residue, r.residue_modulus));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if !self.verdicts.is_empty() {
            let width = self.verdicts.iter().map(|v| v.name.len()).max().unwrap_or(0);
            for v in &self.verdicts {
                out.push_str(&format!(
                    "{}  {:<width$}  expected {}  actual {}\n",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.name,
                    v.expected,
                    v.actual,
                ));
            }
        }
        out.push_str(&format!("time      {} ms\n", self.timing_ms));
        out
    }
}
