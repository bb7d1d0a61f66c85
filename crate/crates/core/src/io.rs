//! JSON documents and DOT export.
//!
//! A [`FactorizationDocument`] stores the starter in compact-trail form and,
//! optionally, the expanded factors. Version 1 layout:
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "m": 2, "n": 4, "ell": 4,
//!   "starter": [[{"base": [0, 1], "step": 4}], ...],
//!   "factors": [[[0, 1, 4, 5], ...], ...],
//!   "provenance": {"case_id": "...", "citation": "...", "params": {}},
//!   "certificate": {"checks": [...], "overall": true}
//! }
//! ```
//!
//! `factors` and `certificate` are omitted when absent.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::Construction;
use crate::error::{Error, Result};
use crate::group::{canonical_cycle, CompactTrail, GroupContext, Residue};
use crate::starter::{Factorization, TwoRegularGraph, TwoStarter};
use crate::verify::{
    verify_cyclic, verify_factorization, Check, CycleLength, VerificationCertificate,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Fill colors for parts, indexed by residue class mod `m`.
pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub case_id: String,
    pub citation: String,
    #[serde(default)]
    pub params: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDocument {
    pub schema_version: u32,
    pub m: usize,
    pub n: usize,
    pub ell: usize,
    /// One entry per 2-regular graph of the starter.
    pub starter: Vec<Vec<CompactTrail>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Vec<Vec<Residue>>>>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<VerificationCertificate>,
}

impl FactorizationDocument {
    pub fn from_starter(starter: &TwoStarter, ell: usize, provenance: Provenance) -> Self {
        FactorizationDocument {
            schema_version: SCHEMA_VERSION,
            m: starter.ctx.m(),
            n: starter.ctx.n(),
            ell,
            starter: starter.graphs.iter().map(|g| g.cycles.clone()).collect(),
            factors: None,
            provenance,
            certificate: None,
        }
    }

    pub fn from_construction(c: &Construction) -> Self {
        let provenance = Provenance {
            case_id: c.plan.case_id.clone(),
            citation: c.plan.citation.clone(),
            params: c.plan.params.clone(),
        };
        Self::from_starter(&c.starter, c.plan.ell, provenance)
    }

    pub fn ctx(&self) -> Result<GroupContext> {
        GroupContext::new(self.m, self.n)
    }

    pub fn to_starter(&self) -> Result<TwoStarter> {
        let graphs = self
            .starter
            .iter()
            .map(|g| TwoRegularGraph::new(g.clone()))
            .collect();
        Ok(TwoStarter::new(self.ctx()?, graphs))
    }

    /// Fills in `factors` from the starter.
    pub fn expand(&mut self) -> Result<()> {
        self.factors = Some(self.to_starter()?.expand()?.factors);
        Ok(())
    }

    /// Runs every check and stores the certificate.
    pub fn verify(&mut self) -> Result<&VerificationCertificate> {
        let cert = self.certificate_for()?;
        Ok(self.certificate.insert(cert))
    }

    fn certificate_for(&self) -> Result<VerificationCertificate> {
        let ctx = self.ctx()?;
        let starter = self.to_starter()?;
        let report = starter.validate();
        let mut checks = vec![Check {
            id: "starter".into(),
            passed: report.is_valid(),
            witness: (!report.is_valid()).then(|| report.summary()),
        }];
        let expanded = starter.expand_unverified();
        let factors = match (&self.factors, &expanded) {
            (Some(f), Ok(e)) => {
                let same = factor_set(f) == factor_set(&e.factors);
                checks.push(Check {
                    id: "forms-consistent".into(),
                    passed: same,
                    witness: (!same)
                        .then(|| "stored factors differ from the starter's expansion".into()),
                });
                f.clone()
            }
            (Some(f), Err(e)) => {
                checks.push(Check {
                    id: "forms-consistent".into(),
                    passed: false,
                    witness: Some(format!("starter does not expand: {e}")),
                });
                f.clone()
            }
            (None, Ok(e)) => e.factors.clone(),
            (None, Err(e)) => {
                checks.push(Check {
                    id: "expansion".into(),
                    passed: false,
                    witness: Some(e.to_string()),
                });
                return Ok(VerificationCertificate {
                    overall: false,
                    checks,
                });
            }
        };
        let f = Factorization { ctx, factors };
        let expected = if self.ell == ctx.order() {
            CycleLength::Hamiltonian
        } else {
            CycleLength::Exact(self.ell)
        };
        let own = VerificationCertificate {
            overall: checks.iter().all(|c| c.passed),
            checks,
        };
        Ok(own
            .and(verify_factorization(&ctx, &f, expected))
            .and(verify_cyclic(&ctx, &f)))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FactorizationDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        doc.ctx()?;
        Ok(doc)
    }

    /// One DOT graph per factor.
    pub fn to_dot(&self) -> Result<Vec<String>> {
        let ctx = self.ctx()?;
        let factors = match &self.factors {
            Some(f) => f.clone(),
            None => self.to_starter()?.expand_unverified()?.factors,
        };
        Ok(factors
            .iter()
            .enumerate()
            .map(|(i, f)| factor_dot(&ctx, i, f))
            .collect())
    }
}

fn factor_set(f: &[Vec<Vec<Residue>>]) -> BTreeSet<Vec<Vec<Residue>>> {
    f.iter()
        .map(|factor| {
            let mut cs: Vec<Vec<Residue>> = factor.iter().map(|c| canonical_cycle(c)).collect();
            cs.sort();
            cs
        })
        .collect()
}

fn factor_dot(ctx: &GroupContext, index: usize, factor: &[Vec<Residue>]) -> String {
    let m = ctx.m();
    let mut out = String::new();
    let _ = writeln!(out, "graph factor_{index} {{");
    let _ = writeln!(
        out,
        "  label=\"K_{{{}x{}}} factor {index}\";",
        ctx.m(),
        ctx.n()
    );
    let _ = writeln!(out, "  node [shape=circle, style=filled];");
    for part in 0..m {
        let _ = writeln!(out, "  subgraph cluster_part_{part} {{");
        let _ = writeln!(out, "    label=\"part {part}\";");
        let color = PALETTE[part % PALETTE.len()];
        for v in (part..ctx.order()).step_by(m) {
            let _ = writeln!(out, "    {v} [label=\"{v}\", fillcolor=\"{color}\"];");
        }
        let _ = writeln!(out, "  }}");
    }
    for cycle in factor {
        for j in 0..cycle.len() {
            let (a, b) = (cycle[j], cycle[(j + 1) % cycle.len()]);
            let _ = writeln!(out, "  {a} -- {b};");
        }
    }
    out.push_str("}\n");
    out
}
