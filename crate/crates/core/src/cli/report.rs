use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certify::{Certificate, CertificateKind, Hypothesis, Verdict};
use crate::scalars::FieldDescriptor;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u32,
    pub params: Vec<String>,
    pub root_depth: u8,
}

impl From<&FieldDescriptor> for FieldRecord {
    fn from(f: &FieldDescriptor) -> Self {
        FieldRecord { p: f.p(), params: f.params().to_vec(), root_depth: f.root_depth() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub name: String,
    pub kind: CertificateKind,
    pub verdict: Verdict,
    pub expected: Verdict,
    pub as_expected: bool,
    pub evidence_only: bool,
    /// Which ring the witness lives in: `S`, `S_root` or `S_tensor`.
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub assumptions: Vec<Hypothesis>,
    pub parameters: IndexMap<String, Value>,
    pub detail: String,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub artifact_version: String,
    pub family: String,
    pub p: u32,
    pub field: FieldRecord,
    pub overall: Verdict,
    pub certificates: Vec<CertificateRecord>,
    pub witnesses: IndexMap<String, String>,
    pub data: IndexMap<String, Value>,
}

impl Report {
    pub fn new(family: &str, field: &FieldDescriptor) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            family: family.to_string(),
            p: field.p(),
            field: field.into(),
            overall: Verdict::Pass,
            certificates: Vec::new(),
            witnesses: IndexMap::new(),
            data: IndexMap::new(),
        }
    }

    /// Records a step. The overall verdict stays `pass` only while every
    /// step matches its expectation.
    pub fn push(&mut self, name: &str, ring: &str, expected: Verdict, cert: Certificate) -> &CertificateRecord {
        let as_expected = cert.verdict == expected;
        let witness = cert.witness.as_ref().map(|w| w.text());
        if let Some(w) = &witness {
            self.witnesses.insert(name.to_string(), w.clone());
        }
        if !as_expected {
            self.overall = Verdict::Fail;
        }
        self.certificates.push(CertificateRecord {
            name: name.to_string(),
            kind: cert.kind,
            verdict: cert.verdict,
            expected,
            as_expected,
            evidence_only: cert.evidence_only,
            ring: ring.to_string(),
            witness,
            assumptions: cert.assumptions,
            parameters: cert.parameters,
            detail: cert.detail,
            ms: cert.ms,
        });
        self.certificates.last().unwrap()
    }

    pub fn certificate(&self, name: &str) -> Option<&CertificateRecord> {
        self.certificates.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    /// Zeroes all timings so the JSON is reproducible byte for byte.
    pub fn strip_timings(&mut self) {
        for c in &mut self.certificates {
            c.ms = 0;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let params =
            if self.field.params.is_empty() { String::new() } else { format!("({})", self.field.params.join(",")) };
        let roots = if self.field.root_depth > 0 { " with p-th roots" } else { "" };
        let _ = writeln!(out, "family {}, p = {}, K = F_{}{params}{roots}", self.family, self.p, self.p);
        let width = self.certificates.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let kinds = self.certificates.iter().map(|c| c.kind.to_string().len()).max().unwrap_or(0);
        for c in &self.certificates {
            let mark = if c.as_expected { "ok" } else { "UNEXPECTED" };
            let evidence = if c.evidence_only { " (evidence only)" } else { "" };
            let _ = writeln!(
                out,
                "  {:width$}  {:kinds$}  {:12} expected {:12} {:>6} ms  {mark}{evidence}",
                c.name,
                c.kind.to_string(),
                c.verdict.to_string(),
                c.expected.to_string(),
                c.ms,
            );
            if !c.detail.is_empty() {
                let _ = writeln!(out, "  {:width$}  {}", "", c.detail);
            }
            for h in &c.assumptions {
                let status = serde_json::to_value(h.status).unwrap();
                let holds = if h.holds { "holds" } else { "does not hold" };
                let _ =
                    writeln!(out, "  {:width$}  - {}: {holds} [{}] {}", "", h.name, status.as_str().unwrap(), h.detail);
            }
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses:");
            for (name, w) in &self.witnesses {
                let _ = writeln!(out, "  {name}: {w}");
            }
        }
        for (k, v) in &self.data {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "overall: {}", self.overall);
        out
    }
}
