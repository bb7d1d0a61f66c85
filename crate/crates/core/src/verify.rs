//! Definition-level checks on explicit factorizations.
//!
//! Nothing here looks at starters, differences or base vertices; only the
//! vertex sequences of the factors are consulted.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::group::{canonical_cycle, GroupContext, Residue};
use crate::starter::Factorization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleLength {
    Exact(usize),
    Hamiltonian,
}

impl CycleLength {
    fn resolve(self, ctx: &GroupContext) -> usize {
        match self {
            CycleLength::Exact(l) => l,
            CycleLength::Hamiltonian => ctx.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationCertificate {
    fn from_checks(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        VerificationCertificate { checks, overall }
    }

    /// Merges two certificates into one.
    pub fn and(mut self, other: VerificationCertificate) -> Self {
        self.checks.extend(other.checks);
        self.overall = self.checks.iter().all(|c| c.passed);
        self
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.id, c.witness.as_deref().unwrap_or("failed")))
            .collect();
        if failed.is_empty() {
            "all checks pass".into()
        } else {
            failed.join("; ")
        }
    }
}

fn check(id: &str, witness: Option<String>) -> Check {
    Check {
        id: id.into(),
        passed: witness.is_none(),
        witness,
    }
}

pub fn verify_factorization(
    ctx: &GroupContext,
    f: &Factorization,
    expected: CycleLength,
) -> VerificationCertificate {
    let v = ctx.order();
    let ell = expected.resolve(ctx);

    let mut partition = None;
    'factors: for (i, factor) in f.factors.iter().enumerate() {
        let mut seen = vec![false; v];
        for cycle in factor {
            for &x in cycle {
                if x >= v {
                    partition = Some(format!("factor {i}: vertex {x} outside Z_{v}"));
                    break 'factors;
                }
                if seen[x] {
                    partition = Some(format!("factor {i}: vertex {x} repeated"));
                    break 'factors;
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            partition = Some(format!("factor {i}: vertex {x} not covered"));
            break;
        }
    }

    let mut length = None;
    'len: for (i, factor) in f.factors.iter().enumerate() {
        for cycle in factor {
            if cycle.len() != ell || cycle.len() < 3 {
                length = Some(format!(
                    "factor {i}: cycle of length {} (expected {ell})",
                    cycle.len()
                ));
                break 'len;
            }
        }
    }

    let mut within = None;
    let mut counts = vec![0u8; v * v];
    for (i, factor) in f.factors.iter().enumerate() {
        for cycle in factor {
            let len = cycle.len();
            for j in 0..len {
                let (a, b) = (cycle[j] % v, cycle[(j + 1) % len] % v);
                if a == b || a.abs_diff(b) % ctx.m() == 0 {
                    if within.is_none() {
                        within = Some(format!("factor {i}: edge [{a}, {b}] inside a part"));
                    }
                    if a == b {
                        continue;
                    }
                }
                let (lo, hi) = (a.min(b), a.max(b));
                let slot = &mut counts[lo * v + hi];
                *slot = slot.saturating_add(1);
            }
        }
    }

    let mut cover = None;
    'cover: for a in 0..v {
        for b in a + 1..v {
            let c = counts[a * v + b];
            let cross = (b - a) % ctx.m() != 0;
            if cross && c != 1 {
                cover = Some(format!("edge [{a}, {b}] used {c} times"));
                break 'cover;
            }
        }
    }

    let want = ctx.factor_count();
    let count =
        (f.factors.len() != want).then(|| format!("{} factors, expected {want}", f.factors.len()));

    VerificationCertificate::from_checks(vec![
        check("vertex-partition", partition),
        check("cycle-length", length),
        check("no-within-part-edge", within),
        check("edge-cover", cover),
        check("factor-count", count),
    ])
}

fn canonical_factor(factor: &[Vec<Residue>], shift: usize, v: usize) -> Vec<Vec<Residue>> {
    let mut out: Vec<Vec<Residue>> = factor
        .iter()
        .map(|c| canonical_cycle(&c.iter().map(|&x| (x + shift) % v).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

/// Passes iff translating by 1 maps the set of factors onto itself.
pub fn verify_cyclic(ctx: &GroupContext, f: &Factorization) -> VerificationCertificate {
    let v = ctx.order();
    let set: HashSet<Vec<Vec<Residue>>> = f
        .factors
        .iter()
        .map(|fac| canonical_factor(fac, 0, v))
        .collect();
    let witness = f
        .factors
        .iter()
        .position(|fac| !set.contains(&canonical_factor(fac, 1, v)))
        .map(|i| format!("factor {i} + 1 is not a factor (g = 1)"));
    VerificationCertificate::from_checks(vec![check("cyclic", witness)])
}
