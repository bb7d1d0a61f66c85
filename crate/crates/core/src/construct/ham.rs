//! Hamiltonian 2-factorizations for `m` odd and `n` even, `n > 2`.

use super::{residual_odd, BuildOptions, ConstructionPlan};
use crate::blocks::{interval, named_hamiltonian, Named};
use crate::error::{Error, Result};
use crate::group::{gcd, CompactTrail, GroupContext, Residue};
use crate::starter::TwoRegularGraph;

pub(super) fn plan(m: usize, n: usize, opts: &BuildOptions) -> Result<ConstructionPlan> {
    let ell = m * n;
    let p = |id: &str, cite: &str| ConstructionPlan::new(m, n, ell, id, cite);
    let ni = n as i64;
    if n % 4 == 2 {
        if n % 8 == 6 {
            return Ok(
                p("ham-n8t6", "n ≡ 6 (mod 8): A, B, C_k and the W_u").with("t", (ni - 6) / 8)
            );
        }
        if m == 5 && n == 10 {
            return Ok(p(
                "ham-five-n10",
                "m = 5, n = 10: A_0, B, [0]_13, [0,9]_2, [0,19]_2",
            ));
        }
        let kappa = select_kappa(m, n, opts.kappa)?;
        return Ok(p(
            "ham-n8t10",
            "n ≡ 2 (mod 8): A_k, B, [0]_κ, the D_v and the W_u",
        )
        .with("t", (ni - 10) / 8)
        .with("kappa", kappa as i64));
    }
    Ok(match (n, m % 4, n % 8) {
        (4, 1, _) => p("ham-n4-1mod4", "n = 4, m ≡ 1 (mod 4): A, [0]_{m−2}, F_j"),
        (4, _, _) => p("ham-n4-3mod4", "n = 4, m ≡ 3 (mod 4): A, [0]_{2m−1}, F_j"),
        (_, 1, 4) => p(
            "ham-1mod4-n4mod8",
            "m ≡ 1 (mod 4), n ≡ 4 (mod 8): A, C_k, D_ij, F_s, G",
        ),
        (_, 1, _) => p(
            "ham-1mod4-n0mod8",
            "m ≡ 1 (mod 4), n ≡ 0 (mod 8): C̃_k, D_ij, F_s, G_0, G_1",
        ),
        (_, _, 4) => p(
            "ham-3mod4-n4mod8",
            "m ≡ 3 (mod 4), n ≡ 4 (mod 8): A, C_k, D_ij, F_s, G",
        ),
        _ => p(
            "ham-3mod4-n0mod8",
            "m ≡ 3 (mod 4), n ≡ 0 (mod 8): A_k, D_ij, F_s, G_0, G_1",
        ),
    })
}

/// `𝓡(s, d, w) = s + d⟨(w−3)/2⟩`.
pub fn progression_r(s: usize, d: usize, w: usize) -> Vec<usize> {
    interval((w as i64 - 3) / 2)
        .into_iter()
        .map(|i| s + d * i as usize)
        .collect()
}

/// The admissible steps κ, smallest first.
pub fn kappa_candidates(m: usize, n: usize) -> Vec<usize> {
    let s = if m.is_multiple_of(3) {
        2 * m - 1
    } else {
        2 * m - 3
    };
    progression_r(s, 2 * m, n / 2)
        .into_iter()
        .filter(|&k| gcd(k, n / 2) == 1)
        .collect()
}

fn select_kappa(m: usize, n: usize, wanted: Option<usize>) -> Result<usize> {
    let candidates = kappa_candidates(m, n);
    match wanted {
        Some(k) if candidates.contains(&k) => Ok(k),
        Some(k) => Err(Error::BadParameter(format!(
            "κ = {k} is not an admissible step for m = {m}, n = {n} (choose from {candidates:?})"
        ))),
        None => candidates
            .first()
            .copied()
            .ok_or_else(|| Error::SelectionFailed(format!("no admissible κ for m = {m}, n = {n}"))),
    }
}

fn one(t: CompactTrail) -> TwoRegularGraph {
    TwoRegularGraph::single(t)
}

fn named(ctx: &GroupContext, which: Named, k: i64) -> Result<TwoRegularGraph> {
    Ok(one(named_hamiltonian(ctx, which, k)?))
}

/// `[0]_s`.
fn full(ctx: &GroupContext, s: i64) -> TwoRegularGraph {
    one(CompactTrail::new(ctx, &[0], s))
}

/// `[0, y]_s`.
fn pair(ctx: &GroupContext, y: i64, s: i64) -> TwoRegularGraph {
    one(CompactTrail::new(ctx, &[0, y], s))
}

/// Splits `xs` into pairs `(x, x + 2^a)` with `a ≥ 1`, always pairing the
/// smallest remaining element first and preferring small `a`. Gives up after
/// a fixed number of search nodes.
pub fn pair_by_powers(xs: &[Residue]) -> Option<Vec<(Residue, u32)>> {
    const BUDGET: usize = 200_000;
    fn go(left: &mut Vec<Residue>, out: &mut Vec<(Residue, u32)>, budget: &mut usize) -> bool {
        let Some(&x) = left.first() else {
            return true;
        };
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let top = *left.last().unwrap();
        let mut a = 1;
        while x + (1 << a) <= top {
            let y = x + (1 << a);
            if let Ok(pos) = left.binary_search(&y) {
                left.remove(pos);
                left.remove(0);
                out.push((x, a));
                if go(left, out, budget) {
                    return true;
                }
                out.pop();
                left.insert(0, x);
                let pos = left.binary_search(&y).unwrap_err();
                left.insert(pos, y);
            }
            a += 1;
        }
        false
    }
    let mut left = xs.to_vec();
    left.sort_unstable();
    left.dedup();
    if left.len() != xs.len() || !left.len().is_multiple_of(2) {
        return None;
    }
    let mut out = Vec::new();
    let mut budget = BUDGET;
    go(&mut left, &mut out, &mut budget).then_some(out)
}

fn w_cycles(
    ctx: &GroupContext,
    xs: &[Residue],
    split: Option<Residue>,
) -> Result<Vec<TwoRegularGraph>> {
    let halves: Option<Vec<(Residue, u32)>> = split.and_then(|k| {
        let below: Vec<Residue> = xs.iter().copied().filter(|&x| x < k).collect();
        let above: Vec<Residue> = xs.iter().copied().filter(|&x| x > k).collect();
        let mut lo = pair_by_powers(&below)?;
        lo.extend(pair_by_powers(&above)?);
        Some(lo)
    });
    let pairs = halves
        .or_else(|| pair_by_powers(xs))
        .ok_or_else(|| Error::SelectionFailed(format!("cannot pair {xs:?} by powers of 2")))?;
    Ok(pairs
        .into_iter()
        .map(|(x, a)| {
            let s = 1i64 << a;
            pair(ctx, x as i64 + s, s)
        })
        .collect())
}

pub(super) fn build(ctx: &GroupContext, plan: &ConstructionPlan) -> Result<Vec<TwoRegularGraph>> {
    let (m, n) = (ctx.m() as i64, ctx.n() as i64);
    let mn = m * n;
    let mut out = Vec::new();
    match plan.case_id.as_str() {
        "ham-five-n10" => {
            out.push(named(ctx, Named::AK, 0)?);
            out.push(named(ctx, Named::B, 0)?);
            out.push(full(ctx, 13));
            out.push(pair(ctx, 9, 2));
            out.push(pair(ctx, 19, 2));
        }
        "ham-n8t10" => {
            let t = plan.param("t");
            let kappa = plan.param("kappa");
            for k in interval(t) {
                out.push(named(ctx, Named::AK, k)?);
            }
            out.push(named(ctx, Named::B, 0)?);
            out.push(full(ctx, kappa));
            if m == 5 {
                if kappa % 20 != 7 {
                    if (kappa - 17) % 20 != 0 {
                        return Err(Error::SelectionFailed(format!(
                            "κ = {kappa} fits no branch for m = 5"
                        )));
                    }
                    let j = (kappa - 17) / 20;
                    let ds: [(i64, i64); 4] = if j < t {
                        [
                            (kappa + 10, 8),
                            (kappa + 12, 16),
                            (kappa + 20, 4),
                            (kappa + 22, 16),
                        ]
                    } else if j == t {
                        [
                            (kappa - 20, 4),
                            (kappa - 10, 8),
                            (kappa - 4, 4),
                            (kappa + 2, 16),
                        ]
                    } else {
                        return Err(Error::SelectionFailed(format!(
                            "κ = {kappa} fits no branch for m = 5"
                        )));
                    };
                    out.extend(ds.iter().map(|&(y, s)| pair(ctx, y, s)));
                }
            } else if m % 3 == 0 && kappa % (4 * m) == 2 * m - 1 {
                out.push(pair(ctx, kappa + 6, 8));
            }
            let rest = residual_odd(ctx, &out);
            out.extend(w_cycles(ctx, &rest, Some(kappa as Residue))?);
        }
        "ham-n8t6" => {
            let t = plan.param("t");
            out.push(named(ctx, Named::A, 0)?);
            out.push(named(ctx, Named::B, 0)?);
            for k in interval(t - 1) {
                out.push(named(ctx, Named::CK, k)?);
            }
            let rest = residual_odd(ctx, &out);
            out.extend(w_cycles(ctx, &rest, None)?);
        }
        "ham-n4-1mod4" => {
            out.push(named(ctx, Named::A, 0)?);
            out.push(full(ctx, m - 2));
            for j in interval((m - 3) / 2)
                .into_iter()
                .filter(|&j| j != (m - 5) / 4)
            {
                out.push(pair(ctx, 4 * j + 5, 2));
            }
        }
        "ham-n4-3mod4" => {
            out.push(named(ctx, Named::A, 0)?);
            out.push(full(ctx, 2 * m - 1));
            for j in interval((m - 7) / 4) {
                out.push(pair(ctx, 4 * j + 5, 2));
            }
            for j in interval((m - 7) / 4).into_iter().map(|j| j + (m + 1) / 4) {
                out.push(pair(ctx, 4 * j + 3, 2));
            }
        }
        "ham-1mod4-n4mod8" | "ham-3mod4-n4mod8" => {
            let case1 = m % 4 == 1;
            out.push(named(ctx, Named::A, 0)?);
            for k in interval((n - 12) / 8) {
                out.push(named(ctx, Named::CK, k)?);
            }
            let skip = if case1 { (m - 5) / 4 } else { (m - 3) / 4 };
            for i in interval((n - 4) / 4) {
                for j in interval((m - 3) / 2).into_iter().filter(|&j| j != skip) {
                    out.push(pair(ctx, 2 * m * i + 4 * j + 5, 2));
                }
            }
            let (g, f_off, f_step) = if case1 {
                (mn / 4 - 2, -2, mn / 2 - 4)
            } else {
                (mn / 4 + 2, 2, mn / 2 + 4)
            };
            out.push(full(ctx, g));
            for s in interval((n - 12) / 8) {
                out.push(pair(ctx, (2 * s + 1) * m + f_off, f_step));
            }
        }
        "ham-1mod4-n0mod8" | "ham-3mod4-n0mod8" => {
            let case1 = m % 4 == 1;
            for k in interval((n - 8) / 8) {
                let which = if case1 { Named::CTildeK } else { Named::AK };
                out.push(named(ctx, which, k)?);
            }
            for i in interval((n - 4) / 4) {
                let base = 2 * m * i;
                if case1 {
                    for j in interval((m - 3) / 2)
                        .into_iter()
                        .filter(|&j| j != (m - 1) / 4)
                    {
                        out.push(pair(ctx, base + 4 * j + 3, 2));
                    }
                } else {
                    for j in interval((m - 7) / 4) {
                        out.push(pair(ctx, base + 4 * j + 5, 2));
                    }
                    for j in interval((m - 7) / 4).into_iter().map(|j| j + (m + 1) / 4) {
                        out.push(pair(ctx, base + 4 * j + 3, 2));
                    }
                }
            }
            out.push(full(ctx, mn / 4 - 1));
            out.push(full(ctx, mn / 2 - 1));
            for s in interval((n - 16) / 8) {
                out.push(pair(ctx, 2 * (s + 1) * m - 1, mn / 2 - 2));
            }
        }
        other => {
            return Err(Error::BadParameter(format!(
                "unknown hamiltonian case {other}"
            )))
        }
    }
    Ok(out)
}
