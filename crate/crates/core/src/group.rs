//! Arithmetic in `Z_{mn}` and the cycle notation used throughout the crate.
//!
//! Vertices of `K_{m×n}` are residues modulo `mn`; the parts are the cosets of
//! the subgroup `mZ_{mn}`. A cycle is usually given as a [`CompactTrail`]: a base
//! list `(c_0, …, c_{r-1})` and a step `x`, standing for the closed walk
//! `c_0, …, c_{r-1}, c_0 + x, …, c_{r-1} + x, …` that stops once the multiples of
//! `x` wrap around.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue modulo `mn`, always stored in `[0, mn)`.
pub type Residue = usize;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Positive divisors of `x` in increasing order.
pub fn divisors(x: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d * d != x {
                large.push(x / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The group `Z_{mn}` together with its part subgroup `mZ_{mn}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupContext {
    m: usize,
    n: usize,
}

impl GroupContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(Error::BadParameter(format!(
                "K_{{m×n}} needs m ≥ 2 and n ≥ 2, got m = {m}, n = {n}"
            )));
        }
        m.checked_mul(n)
            .filter(|v| *v <= u32::MAX as usize)
            .ok_or_else(|| Error::BadParameter(format!("order {m}·{n} is too large")))?;
        Ok(GroupContext { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `mn`, the number of vertices.
    pub fn order(&self) -> usize {
        self.m * self.n
    }

    /// Reduces an arbitrary integer (e.g. a negative literal) into `[0, mn)`.
    pub fn reduce(&self, x: i64) -> Residue {
        x.rem_euclid(self.order() as i64) as Residue
    }

    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        (a + b) % self.order()
    }

    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        (a + self.order() - b % self.order()) % self.order()
    }

    pub fn neg(&self, a: Residue) -> Residue {
        self.sub(0, a)
    }

    /// Canonical representative of `{x, -x}` in `[0, mn/2]`.
    pub fn representative(&self, x: Residue) -> Residue {
        let x = x % self.order();
        x.min(self.order() - x)
    }

    /// Whether `x` lies in the part subgroup `mZ_{mn}`.
    pub fn in_part_subgroup(&self, x: Residue) -> bool {
        x.is_multiple_of(self.m)
    }

    /// The elements of `mZ_{mn}`.
    pub fn part_subgroup(&self) -> Vec<Residue> {
        (0..self.n).map(|i| i * self.m).collect()
    }

    /// Order of `x` in the additive group; the order of `0` is `1`.
    pub fn element_order(&self, x: Residue) -> usize {
        self.order() / gcd(x % self.order(), self.order())
    }

    /// True iff `vertices` contains exactly one element of each coset of the
    /// subgroup of the given index.
    pub fn is_transversal(&self, vertices: &[Residue], index: usize) -> bool {
        if index == 0 || !self.order().is_multiple_of(index) || vertices.len() != index {
            return false;
        }
        let mut seen = vec![false; index];
        for &v in vertices {
            let r = v % index;
            if seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }

    /// Number of edges of `K_{m×n}`.
    pub fn edge_count(&self) -> usize {
        self.order() * (self.order() - self.n) / 2
    }

    /// Number of 2-factors in any 2-factorization of `K_{m×n}`.
    pub fn factor_count(&self) -> usize {
        self.n * (self.m - 1) / 2
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} (m = {}, n = {})", self.order(), self.m, self.n)
    }
}

/// An unordered edge `[a, b]`, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    a: Residue,
    b: Residue,
}

impl Edge {
    pub fn new(ctx: &GroupContext, x: i64, y: i64) -> Result<Self> {
        let (x, y) = (ctx.reduce(x), ctx.reduce(y));
        if x == y {
            return Err(Error::BadParameter(format!("degenerate edge [{x}, {x}]")));
        }
        Ok(Edge {
            a: x.min(y),
            b: x.max(y),
        })
    }

    pub fn endpoints(&self) -> (Residue, Residue) {
        (self.a, self.b)
    }

    /// Whether the edge joins two different parts, i.e. is an edge of `K_{m×n}`.
    pub fn is_cross_part(&self, ctx: &GroupContext) -> bool {
        !(self.b - self.a).is_multiple_of(ctx.m())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// The closed trail `[c_0, …, c_{r-1}]_x`.
///
/// A plain cycle `(c_0, …, c_{ℓ-1})` is the trail with step `0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CompactTrail {
    pub base: Vec<Residue>,
    pub step: Residue,
}

impl CompactTrail {
    /// Builds a trail from integer literals, reducing them into `Z_{mn}`.
    pub fn new(ctx: &GroupContext, base: &[i64], step: i64) -> Self {
        CompactTrail {
            base: base.iter().map(|&c| ctx.reduce(c)).collect(),
            step: ctx.reduce(step),
        }
    }

    /// The explicit cycle `(c_0, …, c_{ℓ-1})`.
    pub fn cycle(ctx: &GroupContext, vertices: &[i64]) -> Self {
        Self::new(ctx, vertices, 0)
    }

    /// A trail written with its continuation vertex as subscript: `[c_0, …]_y`
    /// where `y = c_0 + x`. This is how lifted 4-cycles such as `[1, 8]_{31}`
    /// in `Z_60` are written; when `c_0 = 0` it coincides with [`Self::new`].
    pub fn with_continuation(ctx: &GroupContext, base: &[i64], next: i64) -> Self {
        let first = base.first().copied().unwrap_or(0);
        Self::new(ctx, base, next - first)
    }

    /// `d`, the order of the step.
    pub fn period(&self, ctx: &GroupContext) -> usize {
        ctx.element_order(self.step)
    }

    /// Number of vertices visited, `r·d`.
    pub fn len(&self, ctx: &GroupContext) -> usize {
        self.base.len() * self.period(ctx)
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// `φ(C)`, the base vertices.
    pub fn phi(&self) -> &[Residue] {
        &self.base
    }

    /// The trail is a cycle iff it visits at least 3 vertices and the base
    /// elements lie in pairwise distinct cosets of `⟨x⟩`.
    pub fn is_cycle(&self, ctx: &GroupContext) -> bool {
        if self.base.is_empty() || self.len(ctx) < 3 {
            return false;
        }
        let g = gcd(self.step, ctx.order());
        let mut cosets: Vec<Residue> = self.base.iter().map(|c| c % g).collect();
        cosets.sort_unstable();
        cosets.windows(2).all(|w| w[0] != w[1])
    }

    fn check_cycle(&self, ctx: &GroupContext) -> Result<()> {
        if self.is_cycle(ctx) {
            Ok(())
        } else {
            Err(Error::NotACycle(self.to_string()))
        }
    }

    /// The vertices in traversal order.
    pub fn expand(&self, ctx: &GroupContext) -> Result<Vec<Residue>> {
        self.check_cycle(ctx)?;
        Ok(self.expand_unchecked(ctx))
    }

    fn expand_unchecked(&self, ctx: &GroupContext) -> Vec<Residue> {
        let d = self.period(ctx);
        let mut out = Vec::with_capacity(self.base.len() * d);
        let mut shift = 0;
        for _ in 0..d {
            out.extend(self.base.iter().map(|&c| ctx.add(c, shift)));
            shift = ctx.add(shift, self.step);
        }
        out
    }

    /// The signed consecutive differences over one period (without the `±`).
    pub fn signed_steps(&self, ctx: &GroupContext) -> Vec<Residue> {
        let r = self.base.len();
        (0..r)
            .map(|h| {
                let next = if h + 1 < r {
                    self.base[h + 1]
                } else {
                    ctx.add(self.base[0], self.step)
                };
                ctx.sub(next, self.base[h])
            })
            .collect()
    }

    /// `∂C`, the list of partial differences.
    pub fn partial_differences(&self, ctx: &GroupContext) -> Result<DifferenceMultiset> {
        self.check_cycle(ctx)?;
        let mut out = DifferenceMultiset::new(ctx);
        for s in self.signed_steps(ctx) {
            out.insert_pm(s);
        }
        Ok(out)
    }

    /// `|Stab(C)|`, found by testing every translation directly.
    pub fn stabilizer_order(&self, ctx: &GroupContext) -> Result<usize> {
        let vertices = self.expand(ctx)?;
        let canon = canonical_cycle(&vertices);
        // Stab(C) is a subgroup of Z_mn, hence generated by its least positive element.
        let v = ctx.order();
        for g in divisors(v) {
            let shifted: Vec<Residue> = vertices.iter().map(|&x| ctx.add(x, g)).collect();
            if canonical_cycle(&shifted) == canon {
                return Ok(v / g);
            }
        }
        unreachable!("translation by mn fixes every cycle")
    }

    pub fn orbit_size(&self, ctx: &GroupContext) -> Result<usize> {
        Ok(ctx.order() / self.stabilizer_order(ctx)?)
    }

    pub fn translate(&self, ctx: &GroupContext, g: Residue) -> Self {
        CompactTrail {
            base: self.base.iter().map(|&c| ctx.add(c, g)).collect(),
            step: self.step,
        }
    }
}

impl fmt::Display for CompactTrail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.base.iter().map(|c| c.to_string()).collect();
        if self.step == 0 {
            write!(f, "({})", body.join(","))
        } else {
            write!(f, "[{}]_{}", body.join(","), self.step)
        }
    }
}

/// Rotation/reflection normal form of a cycle given by distinct vertices:
/// start at the smallest vertex and walk towards its smaller neighbour.
pub fn canonical_cycle(vertices: &[Residue]) -> Vec<Residue> {
    let len = vertices.len();
    if len == 0 {
        return Vec::new();
    }
    let (start, _) = vertices
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .expect("nonempty");
    let next = vertices[(start + 1) % len];
    let prev = vertices[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|i| vertices[(start + i) % len]).collect()
    } else {
        (0..len)
            .map(|i| vertices[(start + len - i) % len])
            .collect()
    }
}

/// Elements with multiplicities.
pub type Counts = Vec<(Residue, usize)>;

/// A multiset of group elements, as produced by `ΔΓ` or `∂C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceMultiset {
    order: usize,
    counts: BTreeMap<Residue, usize>,
}

impl DifferenceMultiset {
    pub fn new(ctx: &GroupContext) -> Self {
        DifferenceMultiset {
            order: ctx.order(),
            counts: BTreeMap::new(),
        }
    }

    /// `G ∖ H` for the part subgroup `H = mZ_{mn}`, each element once.
    pub fn part_complement(ctx: &GroupContext) -> Self {
        let mut out = Self::new(ctx);
        for g in 0..ctx.order() {
            if !ctx.in_part_subgroup(g) {
                out.insert(g);
            }
        }
        out
    }

    pub fn insert(&mut self, x: Residue) {
        *self.counts.entry(x % self.order).or_default() += 1;
    }

    /// Inserts both `x` and `-x`.
    pub fn insert_pm(&mut self, x: Residue) {
        let x = x % self.order;
        self.insert(x);
        self.insert((self.order - x) % self.order);
    }

    pub fn extend(&mut self, other: &DifferenceMultiset) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_default() += c;
        }
    }

    pub fn count(&self, x: Residue) -> usize {
        self.counts.get(&(x % self.order)).copied().unwrap_or(0)
    }

    /// Total number of elements, with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn contains(&self, x: Residue) -> bool {
        self.count(x) > 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_negation_closed(&self) -> bool {
        self.counts
            .iter()
            .all(|(&k, &c)| self.count((self.order - k) % self.order) == c)
    }

    /// Elements of `target` missing from `self`, and elements of `self` in
    /// excess of `target`, both with multiplicities.
    pub fn compare(&self, target: &DifferenceMultiset) -> (Counts, Counts) {
        let mut missing = Vec::new();
        let mut excess = Vec::new();
        let keys: std::collections::BTreeSet<Residue> = self
            .counts
            .keys()
            .chain(target.counts.keys())
            .copied()
            .collect();
        for k in keys {
            let (have, want) = (self.count(k), target.count(k));
            if have < want {
                missing.push((k, want - have));
            } else if have > want {
                excess.push((k, have - want));
            }
        }
        (missing, excess)
    }

    /// Positive representatives in `[1, mn/2]` of the `±` pairs present.
    pub fn representatives(&self) -> Vec<Residue> {
        let mut reps: Vec<Residue> = self
            .counts
            .keys()
            .map(|&k| k.min(self.order - k))
            .filter(|&k| k != 0)
            .collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}
