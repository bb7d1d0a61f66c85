//! `C_4`-factorizations for `m` odd (so `n ≡ 0 (mod 4)`).

use super::ConstructionPlan;
use crate::blocks::{
    interval, progression, square_lift, w_block, w_prime, x_family, y_family, EdgeList, Parity,
};
use crate::error::{Error, Result};
use crate::feasibility::is_prime_power;
use crate::group::{CompactTrail, GroupContext};
use crate::starter::TwoRegularGraph;

pub(super) fn plan(m: usize, n: usize) -> ConstructionPlan {
    let p = |id: &str, cite: &str| ConstructionPlan::new(m, n, 4, id, cite);
    let (mi, ni) = (m as i64, n as i64);
    if n.is_multiple_of(8) {
        return if n.is_multiple_of(16) {
            p("odd-n0mod16", "m odd, n ≡ 0 (mod 16): □(𝒳 ∪ A) and 𝒟★")
                .with("t", (ni - 16) / 16)
                .with("v", mi * ((ni - 16) / 16 + 1) - 1)
        } else {
            let t = (ni - 8) / 16;
            p("odd-n8mod16", "m odd, n ≡ 8 (mod 16): □(𝒳 ∪ A) and 𝒟★")
                .with("t", t)
                .with("v", t * mi + (mi - 1) / 2)
        };
    }
    if n == 4 {
        return match m {
            15 => p("fixture-15x4", "explicit starter in Z_60"),
            35 => p("fixture-35x4", "explicit starter in Z_140"),
            _ => {
                let (a, b) = split_ab(m);
                let id = match (a % 4, b % 4) {
                    (1, 1) => "odd-n4-split-1",
                    (3, 3) => "odd-n4-split-2",
                    (1, _) => "odd-n4-split-3",
                    _ => "odd-n4-split-4",
                };
                p(
                    id,
                    "n = 4, m = ab with gcd(a, b) = 1: W_i, W′, J(C), G(F), Q and 𝒟★",
                )
                .with("a", a as i64)
                .with("b", b as i64)
            }
        };
    }
    // n ≡ 4 (mod 8), n ≥ 12
    let t = (ni - 12) / 8;
    if m % 4 == 1 {
        return p(
            "odd-1mod4-n4mod8",
            "m ≡ 1 (mod 4), n ≡ 4 (mod 8): □A, □B_k and 𝒟★",
        )
        .with("t", t);
    }
    if m == 3 {
        return p(
            "three-parts-n4mod8",
            "m = 3, n ≡ 4 (mod 8): explicit S_0(k), S_2 and 𝒟★",
        )
        .with("t", t);
    }
    if m == 7 {
        return p(
            "seven-parts-n4mod8",
            "m = 7, n ≡ 4 (mod 8): explicit S_0(k), S_2 and 𝒟★",
        )
        .with("t", t);
    }
    if n == 12 {
        return if m % 8 == 3 {
            p("n12-3mod8", "n = 12, m ≡ 3 (mod 8): □A_0, □A_2, S_4 and 𝒟★")
        } else {
            p("n12-7mod8", "n = 12, m ≡ 7 (mod 8): □A_0, □A_2, S_4 and 𝒟★")
        };
    }
    let t = (ni - 20) / 8;
    if m == 11 && n == 20 {
        return p("fixture-11x20", "explicit starter in Z_220");
    }
    if m == 11 {
        return p(
            "eleven-parts-n4mod8",
            "m = 11, n ≡ 4 (mod 8), n > 20: □A_k and S_2",
        )
        .with("t", t);
    }
    if m % 8 == 3 {
        p(
            "odd-3mod8-n4mod8",
            "m ≡ 3 (mod 8), n ≡ 4 (mod 8): □A_k, S_2 and 𝒟★",
        )
        .with("t", t)
    } else {
        p(
            "odd-7mod8-n4mod8",
            "m ≡ 7 (mod 8), n ≡ 4 (mod 8): □A_k, S_2 and 𝒟★",
        )
        .with("t", t)
    }
}

/// `m = ab` with `a` the smallest prime power exactly dividing `m`.
pub fn split_ab(m: usize) -> (usize, usize) {
    let mut rest = m;
    let mut parts = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut q = 1;
            while rest.is_multiple_of(p) {
                rest /= p;
                q *= p;
            }
            parts.push(q);
        }
        p += 1;
    }
    if rest > 1 {
        parts.push(rest);
    }
    let a = parts.into_iter().min().unwrap_or(m);
    let (a, b) = (a, m / a);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn lift(ctx: &GroupContext, pairs: &[(i64, i64)]) -> Result<TwoRegularGraph> {
    square_lift(ctx, &EdgeList::from_pairs(pairs))
}

fn cyc(ctx: &GroupContext, v: &[i64]) -> TwoRegularGraph {
    TwoRegularGraph::single(CompactTrail::cycle(ctx, v))
}

fn cont(ctx: &GroupContext, base: &[i64], next: i64) -> CompactTrail {
    CompactTrail::with_continuation(ctx, base, next)
}

pub(super) fn build(ctx: &GroupContext, plan: &ConstructionPlan) -> Result<Vec<TwoRegularGraph>> {
    match plan.case_id.as_str() {
        "odd-n0mod16" | "odd-n8mod16" => n0mod8(ctx, plan),
        "fixture-15x4" => fixture_15(ctx),
        "fixture-35x4" => fixture_35(ctx),
        id if id.starts_with("odd-n4-split-") => n4(ctx, plan.param("a"), plan.param("b")),
        "odd-1mod4-n4mod8" => one_mod4(ctx, plan.param("t")),
        "three-parts-n4mod8" => three_parts(ctx, plan.param("t")),
        "seven-parts-n4mod8" => seven_parts(ctx, plan.param("t")),
        "n12-3mod8" | "n12-7mod8" => n12(ctx),
        "fixture-11x20" => fixture_11x20(ctx),
        "eleven-parts-n4mod8" | "odd-3mod8-n4mod8" | "odd-7mod8-n4mod8" => {
            three_mod4(ctx, plan.param("t"))
        }
        other => Err(Error::BadParameter(format!("unknown odd case {other}"))),
    }
}

fn n0mod8(ctx: &GroupContext, plan: &ConstructionPlan) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    let size = (ctx.order() / 4) as i64;
    let t = plan.param("t");
    let mut b = EdgeList::new();
    if plan.case_id == "odd-n0mod16" {
        b.extend(&x_family(
            0,
            Parity::Even,
            size,
            &progression(m - 1, m, t - 1),
            m,
        )?);
        b.extend(&x_family(
            0,
            Parity::Odd,
            size,
            &progression((m - 1) / 2, m, t),
            m,
        )?);
        for j in interval(t) {
            b.push((1 + 2 * t - 2 * j) * m, 2 * m * (t + 2 + j) - 2);
        }
        for j in interval(t) {
            b.push(2 * m * (t + 1 - j) - 2, m * (2 * t + 3 + 2 * j));
        }
    } else {
        b.extend(&x_family(
            0,
            Parity::Even,
            size,
            &progression((m - 1) / 2, m, t - 1),
            m,
        )?);
        b.extend(&x_family(
            0,
            Parity::Odd,
            size,
            &progression(m - 1, m, t - 1),
            m,
        )?);
        for j in interval(t) {
            b.push(m * (2 * t + 1 - 2 * j), 2 * m * (t + 1 + j) - 2);
        }
        for j in interval(t - 1) {
            b.push(2 * m * (t - j) - 2, m * (2 * t + 3 + 2 * j));
        }
    }
    Ok(vec![square_lift(ctx, &b)?])
}

fn fixture_15(ctx: &GroupContext) -> Result<Vec<TwoRegularGraph>> {
    let mut out = vec![
        lift(ctx, &[(0, 8), (1, 7), (2, 6), (3, 15), (4, 9)])?,
        cyc(ctx, &[0, 10, 9, 29]).union(TwoRegularGraph::single(cont(ctx, &[1, 8], 31))),
    ];
    let extra = regroup(ctx, &[2, 14], &out)?;
    out.extend(extra);
    Ok(out)
}

fn fixture_35(ctx: &GroupContext) -> Result<Vec<TwoRegularGraph>> {
    let mut out = vec![
        lift(
            ctx,
            &[(0, 12), (1, 11), (2, 10), (3, 9), (4, 8), (5, 7), (6, 13)],
        )?,
        lift(
            ctx,
            &[
                (0, 26),
                (1, 25),
                (2, 24),
                (3, 23),
                (4, 36),
                (5, 21),
                (6, 27),
            ],
        )?,
        lift(ctx, &[(0, 28), (1, 15), (2, 19), (3, 16), (4, 7)])?,
        TwoRegularGraph::new(vec![
            CompactTrail::cycle(ctx, &[0, 34, 33, 69]),
            cont(ctx, &[1, 28], 71),
            cont(ctx, &[2, 17], 72),
            cont(ctx, &[5, 16], 75),
        ]),
    ];
    let extra = regroup(ctx, &[18, 30], &out)?;
    out.extend(extra);
    Ok(out)
}

/// `J(C)` for a set `C` of even differences, pairwise distinct and nonzero modulo `2a`.
pub fn j_of(c: &[i64], a: i64, b: i64) -> Result<EdgeList> {
    let two_a = 2 * a;
    let n = c.len() as i64;
    if n % 2 != 0 || n >= a {
        return Err(Error::SelectionFailed(format!(
            "|C| = {n} must be even and below a = {a}"
        )));
    }
    let mut sorted: Vec<i64> = c.to_vec();
    sorted.sort_by_key(|&x| std::cmp::Reverse(x % two_a));
    if sorted.windows(2).any(|w| w[0] % two_a == w[1] % two_a)
        || sorted.iter().any(|x| x % two_a == 0)
    {
        return Err(Error::SelectionFailed(format!(
            "C = {c:?} is not distinct and nonzero mod {two_a}"
        )));
    }
    let mut j1 = EdgeList::new();
    for (j, &x) in sorted.iter().enumerate() {
        j1.push(j as i64, j as i64 + x);
    }
    let used: Vec<i64> = j1.phi().iter().map(|x| x % two_a).collect();
    let xs: Vec<i64> = (n..=two_a - 2)
        .step_by(2)
        .filter(|x| !used.contains(x))
        .collect();
    let ys: Vec<i64> = (n + 1..=two_a - 1)
        .rev()
        .filter(|y| y % 2 == 1 && !used.contains(y))
        .collect();
    if xs.len() != ys.len() || xs.len() as i64 != a - n {
        return Err(Error::SelectionFailed(format!(
            "free residues mod {two_a}: {} even, {} odd, expected {}",
            xs.len(),
            ys.len(),
            a - n
        )));
    }
    let mut j2: Vec<(i64, i64)> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| (x.min(y), x.max(y)))
        .collect();
    let diffs: Vec<i64> = j2.iter().map(|&(z, w)| w - z).collect();
    let mut done = Vec::new();
    for (k, &d) in diffs.iter().enumerate() {
        if done.contains(&d) {
            continue;
        }
        done.push(d);
        let hits: Vec<usize> = (k..diffs.len()).filter(|&i| diffs[i] == d).collect();
        match hits.len() {
            1 if d == b => j2[k].1 += two_a,
            1 => {}
            2 if d == b => {
                j2[hits[0]].1 += two_a;
                j2[hits[1]].1 += 2 * two_a;
            }
            2 if d == b - two_a || d == 3 * b - two_a => j2[hits[0]].1 += 2 * two_a,
            2 => j2[hits[0]].1 += two_a,
            _ => {
                return Err(Error::SelectionFailed(format!(
                    "difference {d} occurs {} times in J_2",
                    hits.len()
                )))
            }
        }
    }
    j1.extend(&EdgeList(j2));
    Ok(j1)
}

/// `G(F)`: one edge list per pair of (possibly shifted) elements of `F`.
pub fn g_of(f: &[i64], b: i64) -> Result<Vec<EdgeList>> {
    if !f.len().is_multiple_of(2) {
        return Err(Error::SelectionFailed(format!("|F| = {} is odd", f.len())));
    }
    let mut tilde: Vec<i64> = f
        .iter()
        .map(|&x| if x % 4 == 0 { x - 2 * b } else { x })
        .collect();
    tilde.sort_unstable();
    Ok(tilde
        .chunks(2)
        .map(|p| EdgeList::from_pairs(&[(0, p[0]), (1, 1 + p[1])]))
        .collect())
}

/// Lifts the even differences `evens` in blocks of `k` edges, with `k | m` and
/// odd `k ≥ 3`, padding each block with odd differences still missing from
/// `built`. The endpoints of a block are distinct modulo `2k`, so its lift is
/// a transversal of the index-`2k` subgroup, which contains `2m`. Pairs of
/// edges lifted on their own would need index 4, which misses `2m`.
fn regroup(
    ctx: &GroupContext,
    evens: &[i64],
    built: &[TwoRegularGraph],
) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    let fail = || Error::SelectionFailed(format!("cannot regroup {evens:?} for m = {m}"));
    let sizes: Vec<i64> = crate::group::divisors(ctx.m())
        .into_iter()
        .map(|k| k as i64)
        .filter(|&k| k >= 3)
        .collect();
    let fits = |d: i64, k: i64| d % (2 * k) != 0;
    let mut groups: Vec<Vec<i64>> = vec![Vec::new(); sizes.len()];
    for &d in evens {
        let i = sizes.iter().position(|&k| fits(d, k)).ok_or_else(fail)?;
        groups[i].push(d);
    }
    for i in 0..sizes.len() {
        if groups[i].len() % 2 == 1 {
            let (j, pos) = (i + 1..sizes.len())
                .find_map(|j| {
                    groups[i]
                        .iter()
                        .position(|&d| fits(d, sizes[j]))
                        .map(|p| (j, p))
                })
                .ok_or_else(fail)?;
            let d = groups[i].remove(pos);
            groups[j].push(d);
        }
    }
    let pool: Vec<i64> = super::residual_c4(ctx, built)
        .into_iter()
        .map(|d| d as i64)
        .collect();
    let mut used = vec![false; pool.len()];
    let mut out = Vec::new();
    for (group, &k) in groups.iter().zip(&sizes) {
        for chunk in group.chunks((k - 1) as usize) {
            let edges = match_block(k, chunk, &pool, &mut used).ok_or_else(fail)?;
            out.push(square_lift(ctx, &EdgeList::from_pairs(&edges))?);
        }
    }
    Ok(out)
}

/// Pairs up `Z_2k` using every difference in `evens` and `k - |evens|`
/// unused odd differences from `pool`.
fn match_block(k: i64, evens: &[i64], pool: &[i64], used: &mut [bool]) -> Option<Vec<(i64, i64)>> {
    struct St<'a> {
        k2: i64,
        taken: Vec<bool>,
        evens: &'a [i64],
        placed: Vec<bool>,
        pool: &'a [i64],
        odds_left: usize,
        edges: Vec<(i64, i64)>,
        budget: usize,
    }
    fn go(st: &mut St, used: &mut [bool]) -> bool {
        let Some(u) = st.taken.iter().position(|t| !t) else {
            return true;
        };
        if st.budget == 0 {
            return false;
        }
        st.budget -= 1;
        let mut cands: Vec<(Option<usize>, Option<usize>, i64)> = Vec::new();
        for (i, &d) in st.evens.iter().enumerate() {
            if !st.placed[i] {
                cands.push((Some(i), None, d));
            }
        }
        if st.odds_left > 0 {
            let mut seen = std::collections::BTreeSet::new();
            for (j, &d) in st.pool.iter().enumerate() {
                if !used[j] && seen.insert(d % st.k2) {
                    cands.push((None, Some(j), d));
                }
            }
        }
        for (ei, pj, d) in cands {
            for w in [u as i64 + d, u as i64 - d] {
                let r = w.rem_euclid(st.k2) as usize;
                if st.taken[r] || r == u {
                    continue;
                }
                st.taken[u] = true;
                st.taken[r] = true;
                match (ei, pj) {
                    (Some(i), _) => st.placed[i] = true,
                    (_, Some(j)) => {
                        used[j] = true;
                        st.odds_left -= 1;
                    }
                    _ => unreachable!(),
                }
                st.edges.push((u as i64, w));
                if go(st, used) {
                    return true;
                }
                st.edges.pop();
                match (ei, pj) {
                    (Some(i), _) => st.placed[i] = false,
                    (_, Some(j)) => {
                        used[j] = false;
                        st.odds_left += 1;
                    }
                    _ => unreachable!(),
                }
                st.taken[u] = false;
                st.taken[r] = false;
            }
        }
        false
    }
    let mut st = St {
        k2: 2 * k,
        taken: vec![false; (2 * k) as usize],
        evens,
        placed: vec![false; evens.len()],
        pool,
        odds_left: (k as usize).checked_sub(evens.len())?,
        edges: Vec::new(),
        budget: 100_000,
    };
    if !evens.len().is_multiple_of(2) {
        return None;
    }
    go(&mut st, used).then_some(st.edges)
}

fn q_graph(ctx: &GroupContext, a: i64, b: i64, case3: bool) -> Result<TwoRegularGraph> {
    let (e1, e2) = if case3 {
        (a - 2, a - 1)
    } else {
        let r = (2 * b) % (2 * a);
        (r - 1, r)
    };
    let q: Vec<i64> = (0..2 * a)
        .filter(|&x| ![0, e1, e2, 2 * a - 1].contains(&x))
        .collect();
    let mut qp = EdgeList::new();
    for j in interval(a - 3) {
        let (lo, hi) = (q[j as usize], q[(2 * a - 5 - j) as usize]);
        if (hi + 6 * a - lo) % b == 0 {
            qp.push(lo, hi + 8 * a);
        } else {
            qp.push(lo, hi + 6 * a);
        }
    }
    let x = if (1 + 6 * a) % b == 0 || (1 + 8 * a) % b == 0 {
        10 * a
    } else {
        8 * a
    };
    let ab = a * b;
    let gamma = if case3 {
        vec![0, ab - 1, ab - 2 - x, 2 * ab - 1 - x]
    } else if ab == 63 {
        vec![0, 18, 3, 111]
    } else {
        vec![0, 2 * b, 2 * b - 1 - x, 2 * ab - 1 - x]
    };
    Ok(square_lift(ctx, &qp)?.union(cyc(ctx, &gamma)))
}

fn n4(ctx: &GroupContext, a: i64, b: i64) -> Result<Vec<TwoRegularGraph>> {
    if is_prime_power((a * b) as usize).is_some() {
        return Err(Error::InfeasibleInput(format!(
            "m = {} is a prime power",
            a * b
        )));
    }
    let big_a = progression(2 * b, 2 * b, (a - 3) / 2);
    let big_b = progression((a - 1) * b + 2, 2, (b - 3) / 2);
    let (c, f, q) = match (a % 4, b % 4) {
        (1, 1) => (big_a, big_b, None),
        (3, 3) => {
            let beta = *big_b
                .iter()
                .find(|&&x| x % (2 * a) != 0 && big_a.iter().all(|y| (x - y) % (2 * a) != 0))
                .ok_or_else(|| {
                    Error::SelectionFailed(format!("no admissible β for (a, b) = ({a}, {b})"))
                })?;
            let mut c = big_a;
            c.push(beta);
            let f = big_b.into_iter().filter(|&x| x != beta).collect();
            (c, f, None)
        }
        (1, _) => {
            let f = big_b.into_iter().filter(|&x| x != a * b - 1).collect();
            (big_a, f, Some(true))
        }
        _ => {
            let c = big_a.into_iter().filter(|&x| x != 2 * b).collect();
            (c, big_b, Some(false))
        }
    };
    let mut out = Vec::new();
    for i in interval((a - 5) / 2) {
        out.push(square_lift(ctx, &w_block(i, a, b)?)?);
    }
    let ks: Vec<i64> = f.iter().map(|x| (x - (a - 1) * b - 2) / 2).collect();
    out.push(square_lift(ctx, &w_prime(a, b, &ks)?)?);
    if !c.is_empty() {
        out.push(square_lift(ctx, &j_of(&c, a, b)?)?);
    }
    if let Some(case3) = q {
        out.push(q_graph(ctx, a, b, case3)?);
    }
    let evens: Vec<i64> = g_of(&f, b)?
        .iter()
        .flat_map(|g| g.edges().iter().map(|&(x, y)| y - x).collect::<Vec<_>>())
        .collect();
    let extra = regroup(ctx, &evens, &out)?;
    out.extend(extra);
    Ok(out)
}

fn one_mod4(ctx: &GroupContext, t: i64) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    let h = (m - 1) / 2;
    let k = 2 * (t + 1);
    let a = y_family(1, m + 1, &[], m)?
        .union(&x_family(k, Parity::Even, m + 1, &[], m)?.shifted(h))
        .union(&x_family(k, Parity::Odd, m + 1, &[], m)?.shifted(h))
        .union(&EdgeList::from_pairs(&[(m, 3 * (m - 1) / 2)]));
    let mut out = vec![square_lift(ctx, &a)?];
    for k in interval(t) {
        let bk = x_family(2 * k, Parity::Even, 2 * m, &[], m)?
            .union(&x_family(2 * k, Parity::Odd, 2 * m, &[], m)?)
            .union(&EdgeList::from_pairs(&[(m, 2 * m - 2 + 2 * k * m)]));
        out.push(square_lift(ctx, &bk)?);
    }
    Ok(out)
}

fn three_parts(ctx: &GroupContext, t: i64) -> Result<Vec<TwoRegularGraph>> {
    let n = ctx.n() as i64;
    let h = 3 * n / 2;
    let q = 3 * n / 4;
    let mut out = Vec::new();
    for k in interval(t) {
        out.push(TwoRegularGraph::new(vec![
            cont(ctx, &[0, 2 + 6 * k], h),
            cont(ctx, &[1, 5 + 6 * k], h + 1),
            cont(ctx, &[3, 4 + 6 * k], h + 3),
        ]));
    }
    out.push(TwoRegularGraph::new(vec![
        CompactTrail::cycle(ctx, &[0, q - 1, 1, q + 2]),
        cont(ctx, &[4, 9], h + 4),
    ]));
    Ok(out)
}

fn seven_parts(ctx: &GroupContext, t: i64) -> Result<Vec<TwoRegularGraph>> {
    let n = ctx.n() as i64;
    let h = 7 * n / 2;
    let q = 7 * n / 4;
    let mut out = Vec::new();
    for k in interval(t) {
        let s = 14 * k;
        let pairs = [(0, 10), (1, 13), (2, 8), (3, 11), (4, 6), (5, 9), (7, 12)];
        out.push(TwoRegularGraph::new(
            pairs
                .iter()
                .map(|&(c, d)| cont(ctx, &[c, d + s], c + h))
                .collect(),
        ));
    }
    out.push(TwoRegularGraph::new(vec![
        CompactTrail::cycle(ctx, &[0, q - 5, 3, q + 8]),
        CompactTrail::cycle(ctx, &[4, q + 3, 5, q + 6]),
        CompactTrail::cycle(ctx, &[8, q + 5, 11, q + 14]),
        cont(ctx, &[6, 9], h + 6),
    ]));
    Ok(out)
}

fn tail_block(m: i64, k: i64) -> Result<EdgeList> {
    Ok(y_family(k, m + 1, &[], m)?
        .union(&y_family(k, m - 2, &[], m)?.shifted(m))
        .union(&EdgeList::from_pairs(&[((m - 1) / 2, 2 * m - 1)])))
}

fn middle_block(m: i64, k: i64) -> Result<EdgeList> {
    Ok(x_family(2 * k, Parity::Even, 2 * m, &[], m)?
        .union(&x_family(2 * k, Parity::Odd, 2 * m, &[], m)?)
        .union(&EdgeList::from_pairs(&[(m, 2 * m - 2 + 2 * k * m)])))
}

fn n12(ctx: &GroupContext) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    let (a0, s4) = if m % 8 == 3 {
        let skip = [(3 * m - 9) / 8];
        let a0 = x_family(0, Parity::Even, 2 * m, &skip, m)?
            .union(&x_family(0, Parity::Odd, 2 * m, &skip, m)?)
            .union(&EdgeList::from_pairs(&[
                ((m - 3) / 4, (m + 1) / 4),
                ((7 * m - 13) / 4, (7 * m - 1) / 4),
                (m, 2 * m - 2),
            ]));
        let s4 = TwoRegularGraph::new(vec![
            CompactTrail::cycle(ctx, &[0, (3 * m - 5) / 2, 1, (9 * m + 7) / 2]),
            cont(ctx, &[3, 10], 6 * m + 3),
        ]);
        (a0, s4)
    } else {
        let a0 = x_family(0, Parity::Even, 2 * m, &[(3 * m - 5) / 8], m)?
            .union(&x_family(0, Parity::Odd, 2 * m, &[(3 * m + 3) / 8], m)?)
            .union(&EdgeList::from_pairs(&[
                ((m - 11) / 4, (m - 7) / 4),
                ((7 * m - 9) / 4, (7 * m + 11) / 4),
                (m, 2 * m - 2),
            ]));
        let s4 = TwoRegularGraph::new(vec![
            CompactTrail::cycle(ctx, &[0, (3 * m + 11) / 2, -1, (9 * m - 13) / 2]),
            cont(ctx, &[2, 9], 6 * m + 2),
        ]);
        (a0, s4)
    };
    Ok(vec![
        square_lift(ctx, &a0)?,
        square_lift(ctx, &tail_block(m, 2)?)?,
        s4,
    ])
}

fn fixture_11x20(ctx: &GroupContext) -> Result<Vec<TwoRegularGraph>> {
    Ok(vec![
        lift(
            ctx,
            &[
                (0, 18),
                (4, 14),
                (6, 12),
                (8, 10),
                (1, 21),
                (5, 17),
                (7, 15),
                (9, 13),
                (11, 20),
                (2, 25),
                (16, 19),
            ],
        )?,
        lift(
            ctx,
            &[
                (0, 40),
                (2, 38),
                (4, 36),
                (6, 34),
                (8, 32),
                (1, 43),
                (3, 41),
                (5, 39),
                (7, 37),
                (9, 35),
                (11, 42),
            ],
        )?,
        lift(
            ctx,
            &[
                (0, 54),
                (1, 53),
                (2, 52),
                (3, 51),
                (4, 50),
                (11, 64),
                (12, 63),
                (13, 62),
                (14, 61),
                (15, 60),
                (5, 21),
            ],
        )?,
        TwoRegularGraph::new(vec![
            CompactTrail::cycle(ctx, &[0, 14, 1, 97]),
            cont(ctx, &[2, 9], 112),
            cont(ctx, &[3, 8], 113),
            cont(ctx, &[5, 6], 115),
        ]),
    ])
}

fn three_mod4(ctx: &GroupContext, t: i64) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    let mn = (ctx.order()) as i64;
    let (a0, b, gamma) = if m == 11 {
        let a0 = x_family(0, Parity::Even, 22, &[1], 11)?
            .union(&x_family(0, Parity::Odd, 22, &[3], 11)?)
            .union(&EdgeList::from_pairs(&[(3, 28), (12, 41), (11, 20)]));
        let b = y_family(0, 21, &[3, 4, 5, 10], 11)?
            .union(&EdgeList::from_pairs(&[(14, 71), (16, 51)]));
        (a0, b, vec![0, 6, -1, (11 * ctx.n() as i64 - 14) / 2])
    } else {
        let skip_b = [(m + 1) / 4, (m - 3) / 2, (m - 1) / 2, m - 1];
        let (a0, extras) = if m % 8 == 3 {
            let a0 = x_family(0, Parity::Even, 2 * m, &[(m - 3) / 8], m)?
                .union(&x_family(0, Parity::Odd, 2 * m, &[(3 * m - 9) / 8], m)?)
                .union(&EdgeList::from_pairs(&[
                    ((m + 1) / 4, (11 * m - 9) / 4),
                    ((5 * m - 7) / 4, (15 * m - 1) / 4),
                    (m, 2 * m - 2),
                ]));
            (
                a0,
                [
                    ((m - 1) / 2, (13 * m + 1) / 4),
                    ((3 * m - 1) / 2, (19 * m - 5) / 4),
                ],
            )
        } else {
            let a0 = x_family(0, Parity::Even, 2 * m, &[(3 * m - 5) / 8], m)?
                .union(&x_family(0, Parity::Odd, 2 * m, &[(m - 7) / 8], m)?)
                .union(&EdgeList::from_pairs(&[
                    ((m - 7) / 4, (11 * m - 1) / 4),
                    ((5 * m + 1) / 4, (15 * m - 9) / 4),
                    (m, 2 * m - 2),
                ]));
            (
                a0,
                [
                    ((m - 1) / 2, (11 * m - 5) / 4),
                    ((3 * m - 1) / 2, (21 * m + 1) / 4),
                ],
            )
        };
        let b = y_family(0, 2 * m - 1, &skip_b, m)?.union(&EdgeList::from_pairs(&extras));
        (a0, b, vec![0, (m + 1) / 2, -1, (mn - m - 3) / 2])
    };
    let mut out = vec![square_lift(ctx, &a0)?];
    for k in 1..=t + 1 {
        let ak = if m == 11 {
            x_family(2 * k, Parity::Even, 22, &[], 11)?
                .union(&x_family(2 * k, Parity::Odd, 22, &[], 11)?)
                .union(&EdgeList::from_pairs(&[(11, 20 + 22 * k)]))
        } else {
            middle_block(m, k)?
        };
        out.push(square_lift(ctx, &ak)?);
    }
    out.push(square_lift(ctx, &tail_block(m, 2 * t + 4)?)?);
    out.push(square_lift(ctx, &b)?.union(cyc(ctx, &gamma)));
    Ok(out)
}
