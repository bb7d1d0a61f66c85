//! Explicit 2-starters for the cases `ℓ = 4` and `ℓ = mn`.
//!
//! [`plan`] picks a case, [`build`] runs its builder and refuses to return a
//! starter that fails validation.

mod even;
mod ham;
mod odd;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::blocks::dstar;
use crate::error::{Error, Result};
use crate::feasibility::{c4_exists, ham_exists, Exists};
use crate::group::{DifferenceMultiset, GroupContext, Residue};
use crate::starter::{TwoRegularGraph, TwoStarter};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub m: usize,
    pub n: usize,
    pub ell: usize,
    pub case_id: String,
    pub params: BTreeMap<String, i64>,
    pub citation: String,
}

impl ConstructionPlan {
    fn new(m: usize, n: usize, ell: usize, case_id: &str, citation: &str) -> Self {
        ConstructionPlan {
            m,
            n,
            ell,
            case_id: case_id.into(),
            params: BTreeMap::new(),
            citation: citation.into(),
        }
    }

    fn with(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    /// A parameter recorded by [`plan`]; panics if the case never sets it.
    pub fn param(&self, key: &str) -> i64 {
        *self
            .params
            .get(key)
            .unwrap_or_else(|| panic!("case {} has no parameter {key}", self.case_id))
    }
}

/// Knobs for choices the constructions leave open.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Step of the hamiltonian cycle `[0]_κ` when `n ≡ 2 (mod 8)`.
    pub kappa: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub plan: ConstructionPlan,
    pub starter: TwoStarter,
}

pub fn plan(m: usize, n: usize, ell: usize) -> Result<ConstructionPlan> {
    plan_with(m, n, ell, &BuildOptions::default())
}

pub fn plan_with(m: usize, n: usize, ell: usize, opts: &BuildOptions) -> Result<ConstructionPlan> {
    let ctx = GroupContext::new(m, n)?;
    if ell == 4 {
        let verdict = c4_exists(m, n);
        if verdict.exists != Exists::Yes {
            return Err(Error::InfeasibleInput(verdict.to_string()));
        }
        return Ok(if m.is_multiple_of(2) {
            even::plan(m, n)
        } else {
            odd::plan(m, n)
        });
    }
    if ell == ctx.order() {
        if ell % 2 == 1 {
            return Err(Error::NotConstructible {
                reason: "hamiltonian factorizations of odd order".into(),
                citation: "the complete-graph case treated in the literature on cyclic hamiltonian cycle systems".into(),
            });
        }
        let verdict = ham_exists(m, n);
        if verdict.exists == Exists::No {
            return Err(Error::InfeasibleInput(verdict.to_string()));
        }
        if m.is_multiple_of(2) {
            return Err(Error::NotConstructible {
                reason: "hamiltonian factorizations with m even".into(),
                citation: "the external construction for even m".into(),
            });
        }
        if n == 2 {
            return Err(Error::NotConstructible {
                reason: "hamiltonian factorizations of the cocktail party graph (n = 2)".into(),
                citation: "the external construction for K_{2m} minus a perfect matching".into(),
            });
        }
        return ham::plan(m, n, opts);
    }
    Err(Error::NotConstructible {
        reason: format!("cycle length {ell} is neither 4 nor mn = {}", ctx.order()),
        citation: "only the uniform cases ℓ = 4 and ℓ = mn are constructed".into(),
    })
}

pub fn build(plan: &ConstructionPlan) -> Result<TwoStarter> {
    let ctx = GroupContext::new(plan.m, plan.n)?;
    let graphs = if plan.ell == 4 {
        let mut graphs = if plan.m.is_multiple_of(2) {
            even::build(&ctx, plan)?
        } else {
            odd::build(&ctx, plan)?
        };
        let ds = residual_c4(&ctx, &graphs);
        graphs.extend(dstar(&ctx, &ds)?);
        graphs
    } else {
        ham::build(&ctx, plan)?
    };
    let starter = TwoStarter::new(ctx, graphs);
    let report = starter.validate();
    if !report.is_valid() {
        return Err(Error::ValidationFailed(format!(
            "{} for {}: {}",
            plan.case_id,
            ctx,
            report.summary()
        )));
    }
    Ok(starter)
}

pub fn construct(m: usize, n: usize, ell: usize) -> Result<Construction> {
    construct_with(m, n, ell, &BuildOptions::default())
}

pub fn construct_with(m: usize, n: usize, ell: usize, opts: &BuildOptions) -> Result<Construction> {
    let plan = plan_with(m, n, ell, opts)?;
    let starter = build(&plan)?;
    Ok(Construction { plan, starter })
}

fn covered(ctx: &GroupContext, graphs: &[TwoRegularGraph]) -> DifferenceMultiset {
    let mut all = DifferenceMultiset::new(ctx);
    for g in graphs {
        for c in &g.cycles {
            if let Ok(d) = c.partial_differences(ctx) {
                all.extend(&d);
            }
        }
    }
    all
}

/// The odd `d < mn/4`, not divisible by `m`, left uncovered by `graphs`.
pub(crate) fn residual_c4(ctx: &GroupContext, graphs: &[TwoRegularGraph]) -> Vec<Residue> {
    let seen = covered(ctx, graphs);
    (1..ctx.order() / 4)
        .step_by(2)
        .filter(|&d| d % ctx.m() != 0 && !seen.contains(d))
        .collect()
}

/// The odd `x ≤ mn/2`, not divisible by `m`, left uncovered by `graphs`.
pub(crate) fn residual_odd(ctx: &GroupContext, graphs: &[TwoRegularGraph]) -> Vec<Residue> {
    let seen = covered(ctx, graphs);
    (1..=ctx.order() / 2)
        .step_by(2)
        .filter(|&d| d % ctx.m() != 0 && !seen.contains(d))
        .collect()
}
