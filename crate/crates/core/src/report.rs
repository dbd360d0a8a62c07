//! Verification reports and their JSON, CSV and text forms.

use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use crate::tower::TowerKind;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub vertex: Option<String>,
    pub pass: bool,
    pub witness: String,
    #[serde(skip)]
    pub millis: u128,
}

impl Check {
    pub fn new(name: impl Into<String>, vertex: Option<String>, pass: bool, witness: impl Into<String>) -> Self {
        Self { name: name.into(), vertex, pass, witness: witness.into(), millis: 0 }
    }

    /// A check whose witness is only reported on failure.
    pub fn expect(name: impl Into<String>, vertex: Option<String>, pass: bool, witness: impl FnOnce() -> String) -> Self {
        let w = if pass { String::new() } else { witness() };
        Self::new(name, vertex, pass, w)
    }
}

/// Runs `f` and stamps the elapsed time on every check it returns.
pub fn timed<E>(f: impl FnOnce() -> Result<Vec<Check>, E>) -> Result<Vec<Check>, E> {
    let start = Instant::now();
    let mut checks = f()?;
    let ms = start.elapsed().as_millis();
    for c in &mut checks {
        c.millis = ms;
    }
    Ok(checks)
}

#[derive(Clone, Debug)]
pub struct Report {
    pub tower: TowerKind,
    pub n: usize,
    pub mode: String,
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> =
            self.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "meta": {"tower": self.tower.name(), "n": self.n, "mode": self.mode, "params": params},
            "checks": self.checks,
            "summary": {"passed": self.passed(), "failed": self.failed()},
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["tower", "n", "vertex", "check", "pass", "witness", "millis"]).expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                self.tower.name().to_string(),
                self.n.to_string(),
                c.vertex.clone().unwrap_or_default(),
                c.name.clone(),
                c.pass.to_string(),
                c.witness.clone(),
                c.millis.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} n={} mode={}\n", self.tower.name(), self.n, self.mode);
        for c in &self.checks {
            let v = c.vertex.as_deref().map(|v| format!(" {v}")).unwrap_or_default();
            let status = if c.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status} {}{v}", c.name));
            if !c.witness.is_empty() {
                out.push_str(&format!("  [{}]", c.witness));
            }
            out.push('\n');
        }
        out.push_str(&format!("passed {} failed {}\n", self.passed(), self.failed()));
        out
    }
}
