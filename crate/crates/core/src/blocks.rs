//! Edge-list families and the lifts that turn them into 2-regular graphs.
//!
//! Every generator here is paired with an independent closed-form prediction
//! of its list of differences; generators compare the two and fail with
//! [`Error::ClosedFormMismatch`] rather than hand back a wrong list.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{CompactTrail, GroupContext};
use crate::starter::TwoRegularGraph;

/// `⟨k⟩ = {0, …, k}`, empty when `k < 0`.
pub fn interval(k: i64) -> Vec<i64> {
    if k < 0 {
        Vec::new()
    } else {
        (0..=k).collect()
    }
}

/// `a + b⟨k⟩`.
pub fn progression(a: i64, b: i64, k: i64) -> Vec<i64> {
    interval(k).into_iter().map(|i| a + b * i).collect()
}

/// A list of edges `[a_i, b_i]` over the integers, before reduction mod `mn`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList(pub Vec<(i64, i64)>);

impl EdgeList {
    pub fn new() -> Self {
        EdgeList(Vec::new())
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        EdgeList(pairs.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[(i64, i64)] {
        &self.0
    }

    pub fn push(&mut self, a: i64, b: i64) {
        self.0.push((a, b));
    }

    pub fn extend(&mut self, other: &EdgeList) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn union(mut self, other: &EdgeList) -> Self {
        self.extend(other);
        self
    }

    /// `c + L`, every endpoint shifted by `c`.
    pub fn shifted(&self, c: i64) -> Self {
        EdgeList(self.0.iter().map(|&(a, b)| (a + c, b + c)).collect())
    }

    /// The signed differences `b_i − a_i`, sorted. `ΔL` is `±` of these.
    pub fn delta(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.0.iter().map(|&(a, b)| b - a).collect();
        d.sort_unstable();
        d
    }

    /// Absolute differences `|b_i − a_i|`, sorted.
    pub fn abs_delta(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.0.iter().map(|&(a, b)| (b - a).abs()).collect();
        d.sort_unstable();
        d
    }

    /// `φ(L)`, all endpoints.
    pub fn phi(&self) -> Vec<i64> {
        self.0.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

impl fmt::Display for EdgeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn check(family: impl Into<String>, generated: &EdgeList, mut predicted: Vec<i64>) -> Result<()> {
    predicted.sort_unstable();
    let got = generated.delta();
    if got == predicted {
        Ok(())
    } else {
        Err(Error::ClosedFormMismatch {
            family: family.into(),
            detail: format!("edges give {got:?}, closed form gives {predicted:?}"),
        })
    }
}

fn without(indices: Vec<i64>, excluded: &[i64]) -> Vec<i64> {
    indices
        .into_iter()
        .filter(|i| !excluded.contains(i))
        .collect()
}

/// `□L`: each edge `[a, b]` becomes the 4-cycle `[a, b]_{a + mn/2}`.
pub fn square_lift(ctx: &GroupContext, list: &EdgeList) -> Result<TwoRegularGraph> {
    if !ctx.order().is_multiple_of(2) {
        return Err(Error::BadParameter("the lift needs mn even".into()));
    }
    let half = (ctx.order() / 2) as i64;
    let cycles = list
        .edges()
        .iter()
        .map(|&(a, b)| {
            let t = CompactTrail::with_continuation(ctx, &[a, b], a + half);
            if t.is_cycle(ctx) {
                Ok(t)
            } else {
                Err(Error::NotACycle(format!(
                    "lift of [{a},{b}] in Z_{}",
                    ctx.order()
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwoRegularGraph::new(cycles))
}

/// `S_d = [0, d]_{mn/2}`.
pub fn dstar_graph(ctx: &GroupContext, d: usize) -> Result<TwoRegularGraph> {
    if d.is_multiple_of(2) {
        return Err(Error::InvalidDifference {
            d,
            reason: "must be odd".into(),
        });
    }
    if ctx.in_part_subgroup(d) {
        return Err(Error::InvalidDifference {
            d,
            reason: format!("multiple of m = {}", ctx.m()),
        });
    }
    if !ctx.order().is_multiple_of(2) {
        return Err(Error::BadParameter("S_d needs mn even".into()));
    }
    let t = CompactTrail::new(ctx, &[0, d as i64], (ctx.order() / 2) as i64);
    if !t.is_cycle(ctx) {
        return Err(Error::NotACycle(t.to_string()));
    }
    Ok(TwoRegularGraph::new(vec![t]))
}

/// `𝒟★`, one graph per element of `D`.
pub fn dstar(ctx: &GroupContext, ds: &[usize]) -> Result<Vec<TwoRegularGraph>> {
    ds.iter().map(|&d| dstar_graph(ctx, d)).collect()
}

/// `𝒴_k(size, I)` for the plain family.
pub fn y_family(k: i64, size: i64, excluded: &[i64], m: i64) -> Result<EdgeList> {
    let km = k * m;
    let (edges, predicted) = if size == 2 {
        (Vec::new(), Vec::new())
    } else if size >= 4 && size % 2 == 0 {
        let v = (size - 2) / 2;
        let idx = without(interval(v - 1), excluded);
        (
            idx.iter().map(|&i| (v - 1 - i, v + 1 + i + km)).collect(),
            idx.iter().map(|&i| 2 + 2 * i + km).collect(),
        )
    } else if size >= 1 && size % 2 == 1 {
        let v = (size - 1) / 2;
        let idx = without(interval(v), excluded);
        (
            idx.iter().map(|&i| (v - i, v + 1 + i + km)).collect(),
            idx.iter().map(|&i| 1 + 2 * i + km).collect(),
        )
    } else {
        return Err(Error::BadParameter(format!("Y family of size {size}")));
    };
    let list = EdgeList(edges);
    check(format!("Y_{k}({size})"), &list, predicted)?;
    Ok(list)
}

/// The augmented `𝒴_k(size)` for `size ≡ 0, 2 (mod 4)`, `size ≥ 4`.
pub fn y_augmented(k: i64, size: i64, m: i64) -> Result<EdgeList> {
    let km = k * m;
    let (list, predicted) = match size % 4 {
        0 if size >= 4 => {
            let v = size / 4;
            let mut list = y_family(k, size, &[0], m)?;
            list.push(2 * v - 1, 2 * v + km);
            list.push(2 * v - 2, 4 * v - 1 + km);
            let mut p = progression(4 + km, 2, size / 2 - 3);
            p.extend([1 + km, 1 + size / 2 + km]);
            (list, p)
        }
        2 if size >= 6 => {
            let v = (size - 2) / 4;
            let mut list = y_family(k, size, &[], m)?;
            list.push(2 * v, 4 * v + 1 + km);
            let mut p = progression(2 + km, 2, size / 2 - 2);
            p.push(size / 2 + km);
            (list, p)
        }
        _ => {
            return Err(Error::BadParameter(format!(
                "augmented Y family needs size ≡ 0 (mod 4) with size ≥ 4 or ≡ 2 (mod 4) with size ≥ 6, got {size}"
            )))
        }
    };
    check(format!("Y_{k}({size}) augmented"), &list, predicted)?;
    Ok(list)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `𝒳_k^e(size, I)` and `𝒳_k^o(size, I)` for `size ≡ 0, 2 (mod 4)`.
pub fn x_family(k: i64, parity: Parity, size: i64, excluded: &[i64], m: i64) -> Result<EdgeList> {
    let km = k * m;
    if size < 2 || size % 2 != 0 {
        return Err(Error::BadParameter(format!("X family of size {size}")));
    }
    let (edges, predicted): (Vec<(i64, i64)>, Vec<i64>) = if size % 4 == 2 {
        let v = (size - 2) / 4;
        let idx = without(interval(v - 1), excluded);
        match parity {
            Parity::Even => (
                idx.iter()
                    .map(|&i| (2 * v - 2 - 2 * i, 2 * v + 2 * i + km))
                    .collect(),
                idx.iter().map(|&i| 2 + 4 * i + km).collect(),
            ),
            Parity::Odd => (
                idx.iter()
                    .map(|&i| (2 * v - 1 - 2 * i, 2 * v + 3 + 2 * i + km))
                    .collect(),
                idx.iter().map(|&i| 4 + 4 * i + km).collect(),
            ),
        }
    } else {
        let v = (size - 4) / 4;
        match parity {
            Parity::Even => {
                let idx = without(interval(v - 1), excluded);
                (
                    idx.iter()
                        .map(|&i| (2 * v - 2 - 2 * i, 2 * v + 2 + 2 * i + km))
                        .collect(),
                    idx.iter().map(|&i| 4 + 4 * i + km).collect(),
                )
            }
            Parity::Odd => {
                let idx = without(interval(v), excluded);
                (
                    idx.iter()
                        .map(|&i| (2 * v + 1 - 2 * i, 2 * v + 3 + 2 * i + km))
                        .collect(),
                    idx.iter().map(|&i| 2 + 4 * i + km).collect(),
                )
            }
        }
    };
    let list = EdgeList(edges);
    check(format!("X_{k}^{parity:?}({size})"), &list, predicted)?;
    Ok(list)
}

/// The 4-cycle `𝒵_k = (0, 2+km, −1, mn/2−3−km)`.
pub fn z_cycle(ctx: &GroupContext, k: i64) -> Result<CompactTrail> {
    let m = ctx.m() as i64;
    let half = (ctx.order() / 2) as i64;
    let z = CompactTrail::cycle(ctx, &[0, 2 + k * m, -1, half - 3 - k * m]);
    let got = z.partial_differences(ctx)?;
    let mut want = crate::group::DifferenceMultiset::new(ctx);
    for d in [2 + k * m, 3 + k * m, half - 2 - k * m, half - 3 - k * m] {
        want.insert_pm(ctx.reduce(d));
    }
    if got != want {
        return Err(Error::ClosedFormMismatch {
            family: format!("Z_{k}"),
            detail: format!("∂ = {:?}", got.representatives()),
        });
    }
    Ok(z)
}

/// `W_i` for `m = ab`.
pub fn w_block(i: i64, a: i64, b: i64) -> Result<EdgeList> {
    if a < 3 || b <= a || i < 0 || i > (a - 3) / 2 {
        return Err(Error::BadParameter(format!(
            "W_{i} for (a, b) = ({a}, {b})"
        )));
    }
    let mut list: EdgeList = EdgeList(
        interval(b - 2)
            .into_iter()
            .map(|j| (b - 2 - j, b + j + 2 * b * i))
            .collect(),
    );
    list.push(b - 1, 2 * b - 1 + 2 * b * i);
    let mut predicted = progression(2 + 2 * b * i, 2, b - 2);
    predicted.push(b * (2 * i + 1));
    check(format!("W_{i}"), &list, predicted)?;
    Ok(list)
}

/// `W′`: `W_{(a−3)/2}` with the edge at index `k` redirected whenever
/// `f_k = (a−1)b + 2 + 2k` is in `ks` and divisible by 4.
pub fn w_prime(a: i64, b: i64, ks: &[i64]) -> Result<EdgeList> {
    let top = (a - 3) / 2;
    let base = w_block(top, a, b)?;
    let mut predicted = Vec::new();
    let edges = base
        .edges()
        .iter()
        .enumerate()
        .map(|(j, &(x, y))| {
            let k = j as i64;
            let f = (a - 1) * b + 2 + 2 * k;
            if k <= b - 2 && ks.contains(&k) && f % 4 == 0 {
                predicted.push(f);
                (x, b + k + (a - 1) * b)
            } else {
                predicted.push(y - x);
                (x, y)
            }
        })
        .collect();
    let list = EdgeList(edges);
    check("W'", &list, predicted)?;
    Ok(list)
}

/// The named hamiltonian cycles built from a zigzag base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    /// `A_k`, step `2m`.
    AK,
    /// `C_k`, step `2m`.
    CK,
    /// `C̃_k`, step `2m`.
    CTildeK,
    /// `A`, step `m`.
    A,
    /// `B`, step `m`.
    B,
}

pub fn named_hamiltonian(ctx: &GroupContext, which: Named, k: i64) -> Result<CompactTrail> {
    let m = ctx.m() as i64;
    if m % 2 == 0 || m < 3 {
        return Err(Error::BadParameter(format!(
            "named cycles need m odd, got {m}"
        )));
    }
    let shift = 4 * k * m;
    let mut base = Vec::new();
    let step;
    match which {
        Named::AK | Named::CK | Named::CTildeK => {
            step = 2 * m;
            let top = if which == Named::CK { 6 * m } else { 4 * m };
            for e in (0..=m - 3).step_by(2) {
                base.extend([e, top - 2 - e + shift]);
            }
            match which {
                Named::AK | Named::CK => {
                    base.extend([m - 1, top - m + shift]);
                    for o in (m + 2..=2 * m - 1).step_by(2) {
                        base.extend([o, top - o + shift]);
                    }
                }
                _ => {
                    base.extend([m - 1, 4 * m + 1 + shift]);
                    for o in (2 * m + 3..=3 * m).step_by(2) {
                        base.extend([o, 6 * m + 2 - o + shift]);
                    }
                }
            }
        }
        Named::A => {
            step = m;
            for e in (0..=m - 3).step_by(2) {
                base.extend([e, 2 * m - 2 - e]);
            }
            base.push(m - 1);
        }
        Named::B => {
            step = m;
            let half = (ctx.order() / 2) as i64;
            for i in 0..(m - 1) / 2 {
                base.extend([i, half - 1 - i]);
            }
            base.push((m - 1) / 2);
        }
    }
    let t = CompactTrail::new(ctx, &base, step);
    if !t.is_cycle(ctx) || t.len(ctx) != ctx.order() {
        return Err(Error::NotACycle(format!(
            "{which:?} with k = {k} in Z_{}",
            ctx.order()
        )));
    }
    Ok(t)
}
