//! Exhaustive backtracking search for 2-starters in small groups.
//!
//! Graphs are built one at a time. Each new graph is forced to contain the
//! smallest uncovered difference `d` as the step `0 → d` of its first cycle;
//! later cycles of the same graph start at the smallest base residue (mod the
//! graph's index) not yet used. Both rules only fix a translate or an ordering,
//! so no starter is lost up to equivalence.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{divisors, gcd, CompactTrail, GroupContext, Residue};
use crate::starter::{TwoRegularGraph, TwoStarter};

pub const DEFAULT_BOUND: usize = 48;
pub const BOUND_ENV: &str = "CYCLOFACTOR_SEARCH_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest group order the search accepts.
    pub bound: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            bound: DEFAULT_BOUND,
        }
    }
}

impl SearchConfig {
    /// The default bound, overridden by `CYCLOFACTOR_SEARCH_BOUND` when set.
    pub fn from_env() -> Self {
        let bound = std::env::var(BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BOUND);
        SearchConfig { bound }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub starter: Option<TwoStarter>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub starters: Vec<TwoStarter>,
    pub nodes: u64,
    /// True when the cap stopped the search early.
    pub truncated: bool,
}

struct Open {
    h: usize,
    used: Vec<bool>,
    n_used: usize,
    cycles: Vec<CompactTrail>,
    /// Admissible base sizes `r` for a cycle of this graph.
    sizes: Vec<usize>,
}

struct Search<'a> {
    ctx: GroupContext,
    v: usize,
    ell: usize,
    reps: Vec<Residue>,
    covered: Vec<bool>,
    left: usize,
    graphs: Vec<TwoRegularGraph>,
    nodes: u64,
    sink: &'a mut dyn FnMut(TwoStarter) -> bool,
}

impl<'a> Search<'a> {
    fn new(ctx: GroupContext, ell: usize, sink: &'a mut dyn FnMut(TwoStarter) -> bool) -> Self {
        let v = ctx.order();
        let reps: Vec<Residue> = (1..v.div_ceil(2)).filter(|d| d % ctx.m() != 0).collect();
        Search {
            ctx,
            v,
            ell,
            covered: vec![false; reps.len()],
            left: reps.len(),
            reps,
            graphs: Vec::new(),
            nodes: 0,
            sink,
        }
    }

    fn impossible(&self) -> bool {
        // A self-inverse cross-part element can never be covered exactly once.
        (self.v.is_multiple_of(2) && !(self.v / 2).is_multiple_of(self.ctx.m()))
            || self.ell < 3
            || !self.v.is_multiple_of(self.ell)
    }

    fn sizes_for(&self, h: usize) -> Vec<usize> {
        divisors(self.v / h)
            .into_iter()
            .filter(|o| self.ell.is_multiple_of(*o))
            .map(|o| self.ell / o)
            .filter(|&r| r <= h)
            .collect()
    }

    /// Returns true when the caller should stop.
    fn next_graph(&mut self) -> bool {
        self.nodes += 1;
        if self.left == 0 {
            let starter = TwoStarter::new(self.ctx, self.graphs.clone());
            if starter.validate().is_valid() {
                return (self.sink)(starter);
            }
            return false;
        }
        let di = self.covered.iter().position(|c| !c).expect("left > 0");
        let d = self.reps[di];
        for h in divisors(self.v) {
            if h > self.left {
                break;
            }
            let sizes = self.sizes_for(h);
            if sizes.is_empty() {
                continue;
            }
            let mut g = Open {
                h,
                used: vec![false; h],
                n_used: 1,
                cycles: Vec::new(),
                sizes,
            };
            g.used[0] = true;
            let mut path = vec![0];
            self.covered[di] = true;
            self.left -= 1;
            // r = 1: the cycle [0]_d.
            if self.try_close(&mut g, &path, d) {
                return true;
            }
            // r ≥ 2: first step 0 → d.
            if !g.used[d % h] && self.can_grow(&g, 2) {
                g.used[d % h] = true;
                g.n_used += 1;
                path.push(d);
                if self.extend(&mut g, &mut path) {
                    return true;
                }
                path.pop();
                g.used[d % h] = false;
                g.n_used -= 1;
            }
            self.covered[di] = false;
            self.left += 1;
        }
        false
    }

    /// Whether the open cycle, holding `r - 1` counted vertices, may reach `r`.
    fn can_grow(&self, g: &Open, r: usize) -> bool {
        let before = g.n_used - (r - 1);
        g.sizes.iter().any(|&s| s >= r && before + s <= g.h)
    }

    fn extend(&mut self, g: &mut Open, path: &mut Vec<Residue>) -> bool {
        self.nodes += 1;
        let p = *path.last().unwrap();
        let r = path.len();
        for i in 0..self.reps.len() {
            if self.covered[i] {
                continue;
            }
            for delta in [self.reps[i], self.v - self.reps[i]] {
                self.covered[i] = true;
                self.left -= 1;
                if g.sizes.contains(&r) && self.try_close(g, path, delta) {
                    return true;
                }
                let q = (p + delta) % self.v;
                if !g.used[q % g.h] && self.can_grow(g, r + 1) {
                    g.used[q % g.h] = true;
                    g.n_used += 1;
                    path.push(q);
                    if self.extend(g, path) {
                        return true;
                    }
                    path.pop();
                    g.used[q % g.h] = false;
                    g.n_used -= 1;
                }
                self.covered[i] = false;
                self.left += 1;
            }
        }
        false
    }

    /// Closes `path` with the final step `delta`, then continues the graph.
    fn try_close(&mut self, g: &mut Open, path: &[Residue], delta: Residue) -> bool {
        let v = self.v;
        let p = *path.last().unwrap();
        let x = (p + delta + v - path[0]) % v;
        if !x.is_multiple_of(g.h) {
            return false;
        }
        let order = v / gcd(x, v);
        if path.len() * order != self.ell {
            return false;
        }
        let trail = CompactTrail {
            base: path.to_vec(),
            step: x,
        };
        if !trail.is_cycle(&self.ctx) || trail.stabilizer_order(&self.ctx).ok() != Some(order) {
            return false;
        }
        g.cycles.push(trail);
        let stop = if g.n_used == g.h {
            self.graphs.push(TwoRegularGraph::new(g.cycles.clone()));
            let stop = self.next_graph();
            self.graphs.pop();
            stop
        } else {
            let rho = g.used.iter().position(|u| !u).expect("graph not full");
            let room = self.can_grow(g, 1);
            g.used[rho] = true;
            g.n_used += 1;
            let mut next = vec![rho];
            let stop = room && self.extend(g, &mut next);
            g.used[rho] = false;
            g.n_used -= 1;
            stop
        };
        g.cycles.pop();
        stop
    }
}

fn check_bound(ctx: &GroupContext, cfg: &SearchConfig) -> Result<()> {
    if ctx.order() > cfg.bound {
        Err(Error::BoundExceeded {
            order: ctx.order(),
            bound: cfg.bound,
        })
    } else {
        Ok(())
    }
}

/// Finds one 2-starter whose factors consist of `ell`-cycles, or proves
/// there is none.
pub fn search_starter(ctx: &GroupContext, ell: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    check_bound(ctx, cfg)?;
    let mut found = None;
    let mut sink = |s: TwoStarter| {
        found = Some(s);
        true
    };
    let mut search = Search::new(*ctx, ell, &mut sink);
    if search.impossible() {
        return Ok(SearchOutcome {
            starter: None,
            nodes: 0,
        });
    }
    search.next_graph();
    let nodes = search.nodes;
    Ok(SearchOutcome {
        starter: found,
        nodes,
    })
}

/// All 2-starters up to equivalence, where two starters are equivalent when
/// they expand to the same factorization. Stops after `cap` of them.
pub fn enumerate_all(
    ctx: &GroupContext,
    ell: usize,
    cap: usize,
    cfg: &SearchConfig,
) -> Result<Enumeration> {
    check_bound(ctx, cfg)?;
    let mut seen: BTreeSet<Vec<Vec<Vec<Residue>>>> = BTreeSet::new();
    let mut starters = Vec::new();
    let mut truncated = false;
    let mut sink = |s: TwoStarter| {
        let Ok(f) = s.expand() else {
            return false;
        };
        let mut key = f.factors;
        key.sort();
        if seen.insert(key) {
            if starters.len() == cap {
                truncated = true;
                return true;
            }
            starters.push(s);
        }
        false
    };
    let mut search = Search::new(*ctx, ell, &mut sink);
    if search.impossible() {
        return Ok(Enumeration {
            starters: Vec::new(),
            nodes: 0,
            truncated: false,
        });
    }
    search.next_graph();
    let nodes = search.nodes;
    Ok(Enumeration {
        starters,
        nodes,
        truncated,
    })
}
