//! 2-starters and their expansion into cyclic 2-factorizations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{canonical_cycle, CompactTrail, DifferenceMultiset, GroupContext, Residue};
use crate::verify::{verify_cyclic, verify_factorization, CycleLength};

/// A disjoint union of cycles, each given as a compact trail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRegularGraph {
    pub cycles: Vec<CompactTrail>,
}

impl TwoRegularGraph {
    pub fn new(cycles: Vec<CompactTrail>) -> Self {
        TwoRegularGraph { cycles }
    }

    pub fn single(cycle: CompactTrail) -> Self {
        TwoRegularGraph {
            cycles: vec![cycle],
        }
    }

    /// Union of two graphs' cycle lists.
    pub fn union(mut self, other: TwoRegularGraph) -> Self {
        self.cycles.extend(other.cycles);
        self
    }

    /// `φ(S)`, the base vertices of every cycle.
    pub fn phi(&self) -> Vec<Residue> {
        self.cycles
            .iter()
            .flat_map(|c| c.base.iter().copied())
            .collect()
    }

    pub fn partial_differences(&self, ctx: &GroupContext) -> Result<DifferenceMultiset> {
        let mut out = DifferenceMultiset::new(ctx);
        for c in &self.cycles {
            out.extend(&c.partial_differences(ctx)?);
        }
        Ok(out)
    }

    /// The cycles as explicit vertex sequences.
    pub fn expand(&self, ctx: &GroupContext) -> Result<Vec<Vec<Residue>>> {
        self.cycles.iter().map(|c| c.expand(ctx)).collect()
    }

    /// The set of cycles in canonical form, useful for comparing graphs
    /// written with different base points or orientations.
    pub fn canonical_cycles(&self, ctx: &GroupContext) -> Result<BTreeSet<Vec<Residue>>> {
        Ok(self
            .expand(ctx)?
            .iter()
            .map(|c| canonical_cycle(c))
            .collect())
    }

    pub fn translate(&self, ctx: &GroupContext, g: Residue) -> Self {
        TwoRegularGraph::new(self.cycles.iter().map(|c| c.translate(ctx, g)).collect())
    }
}

/// `[G : H_i]` for the subgroup `H_i` of which `φ(S)` should be a transversal.
///
/// In `Z_{mn}` the subgroup of a given index is unique, so the index is just `|φ(S)|`.
pub fn infer_subgroup(ctx: &GroupContext, graph: &TwoRegularGraph) -> Result<usize> {
    let size = graph.phi().len();
    if size == 0 || !ctx.order().is_multiple_of(size) {
        return Err(Error::NotATransversalCandidate {
            size,
            order: ctx.order(),
        });
    }
    Ok(size)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoStarter {
    pub ctx: GroupContext,
    pub graphs: Vec<TwoRegularGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCheck {
    pub index: Option<usize>,
    pub cycles_valid: bool,
    pub transversal: bool,
    pub contains_stabilizers: bool,
    pub problem: Option<String>,
}

impl GraphCheck {
    pub fn ok(&self) -> bool {
        self.index.is_some() && self.cycles_valid && self.transversal && self.contains_stabilizers
    }
}

/// Outcome of checking both clauses of the 2-starter definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Elements of `G ∖ H` not covered, with the number of missing copies.
    pub missing: Vec<(Residue, usize)>,
    /// Elements covered too often (including elements of `H`), with the excess.
    pub excess: Vec<(Residue, usize)>,
    pub graphs: Vec<GraphCheck>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.missing.is_empty() && self.excess.is_empty() && self.graphs.iter().all(GraphCheck::ok)
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.missing.is_empty() {
            parts.push(format!("missing differences {:?}", self.missing));
        }
        if !self.excess.is_empty() {
            parts.push(format!("excess differences {:?}", self.excess));
        }
        for (i, g) in self.graphs.iter().enumerate() {
            if !g.ok() {
                parts.push(format!(
                    "graph {i}: {}",
                    g.problem.clone().unwrap_or_else(|| "invalid".into())
                ));
            }
        }
        if parts.is_empty() {
            "valid".into()
        } else {
            parts.join("; ")
        }
    }
}

/// A cyclic 2-factorization given by explicit cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub ctx: GroupContext,
    /// Each factor is a list of cycles, each cycle a vertex sequence.
    pub factors: Vec<Vec<Vec<Residue>>>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Cycle lengths occurring in the factorization.
    pub fn cycle_lengths(&self) -> BTreeSet<usize> {
        self.factors.iter().flatten().map(Vec::len).collect()
    }
}

fn check_graph(ctx: &GroupContext, graph: &TwoRegularGraph) -> GraphCheck {
    let mut check = GraphCheck {
        index: None,
        cycles_valid: true,
        transversal: false,
        contains_stabilizers: false,
        problem: None,
    };
    if let Some(bad) = graph.cycles.iter().find(|c| !c.is_cycle(ctx)) {
        check.cycles_valid = false;
        check.problem = Some(format!("{bad} is not a cycle"));
        return check;
    }
    let index = match infer_subgroup(ctx, graph) {
        Ok(h) => h,
        Err(e) => {
            check.problem = Some(e.to_string());
            return check;
        }
    };
    check.index = Some(index);
    check.transversal = ctx.is_transversal(&graph.phi(), index);
    if !check.transversal {
        check.problem = Some(format!(
            "φ is not a transversal of the index-{index} subgroup"
        ));
        return check;
    }
    // Stab(C) = ⟨mn/s⟩ lies in H_i = ⟨index⟩ iff index divides mn/s.
    check.contains_stabilizers = true;
    for c in &graph.cycles {
        let s = c.stabilizer_order(ctx).expect("cycle checked above");
        if !(ctx.order() / s).is_multiple_of(index) {
            check.contains_stabilizers = false;
            check.problem = Some(format!("stabilizer of {c} (order {s}) is not inside H_i"));
            break;
        }
    }
    check
}

impl TwoStarter {
    pub fn new(ctx: GroupContext, graphs: Vec<TwoRegularGraph>) -> Self {
        TwoStarter { ctx, graphs }
    }

    /// `[G : H_i]` for every graph.
    pub fn indices(&self) -> Result<Vec<usize>> {
        self.graphs
            .iter()
            .map(|g| infer_subgroup(&self.ctx, g))
            .collect()
    }

    /// Union of all `∂S_i`, ignoring graphs whose cycles are malformed.
    pub fn partial_differences(&self) -> DifferenceMultiset {
        let mut all = DifferenceMultiset::new(&self.ctx);
        for g in &self.graphs {
            for c in &g.cycles {
                if let Ok(d) = c.partial_differences(&self.ctx) {
                    all.extend(&d);
                }
            }
        }
        all
    }

    pub fn validate(&self) -> ValidationReport {
        let target = DifferenceMultiset::part_complement(&self.ctx);
        let (missing, excess) = self.partial_differences().compare(&target);
        ValidationReport {
            missing,
            excess,
            graphs: self
                .graphs
                .iter()
                .map(|g| check_graph(&self.ctx, g))
                .collect(),
        }
    }

    /// Expands into the full factorization and verifies the result.
    pub fn expand(&self) -> Result<Factorization> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::ValidationFailed(report.summary()));
        }
        let f = self.expand_unverified()?;
        let ell = f.cycle_lengths();
        let expected = match ell.iter().next() {
            Some(&l) if ell.len() == 1 => CycleLength::Exact(l),
            _ => {
                return Err(Error::ExpansionInconsistent(format!(
                    "cycle lengths {ell:?} are not uniform"
                )))
            }
        };
        let cert = verify_factorization(&self.ctx, &f, expected);
        if !cert.overall {
            return Err(Error::ExpansionInconsistent(cert.summary()));
        }
        let cyc = verify_cyclic(&self.ctx, &f);
        if !cyc.overall {
            return Err(Error::ExpansionInconsistent(cyc.summary()));
        }
        Ok(f)
    }

    /// Expansion without validation or verification; callers get exactly what
    /// the orbit formula produces.
    pub fn expand_unverified(&self) -> Result<Factorization> {
        let ctx = &self.ctx;
        let v = ctx.order();
        let mut factors = Vec::new();
        for graph in &self.graphs {
            let h = infer_subgroup(ctx, graph)?;
            let cycles = graph.expand(ctx)?;
            let mut base: BTreeSet<Vec<Residue>> = BTreeSet::new();
            for j in 0..v / h {
                let shift = j * h;
                for c in &cycles {
                    let moved: Vec<Residue> = c.iter().map(|&x| (x + shift) % v).collect();
                    base.insert(canonical_cycle(&moved));
                }
            }
            for g in 0..h {
                let mut factor: Vec<Vec<Residue>> = base
                    .iter()
                    .map(|c| canonical_cycle(&c.iter().map(|&x| (x + g) % v).collect::<Vec<_>>()))
                    .collect();
                factor.sort();
                factors.push(factor);
            }
        }
        Ok(Factorization { ctx: *ctx, factors })
    }
}
