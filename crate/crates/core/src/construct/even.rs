//! `C_4`-factorizations for `m` and `n` both even.

use super::ConstructionPlan;
use crate::blocks::{interval, square_lift, y_augmented, y_family, z_cycle};
use crate::error::{Error, Result};
use crate::group::{CompactTrail, GroupContext};
use crate::starter::TwoRegularGraph;

pub(super) fn plan(m: usize, n: usize) -> ConstructionPlan {
    let p = |id: &str, cite: &str| ConstructionPlan::new(m, n, 4, id, cite);
    match (m, n % 4) {
        (2, 0) => p("bipartite-2xn-0mod4", "two parts, n ≡ 0 (mod 4): 𝒟★ only"),
        (2, _) => p(
            "bipartite-2xn-2mod4",
            "two parts, n ≡ 2 (mod 4): [0]_{n/2} and 𝒟★",
        ),
        (4, 0) => p(
            "four-part-4xn-0mod4",
            "four parts, n ≡ 0 (mod 4): 𝒵_k and 𝒟★",
        ),
        (4, _) => p(
            "four-part-4xn-2mod4",
            "four parts, n ≡ 2 (mod 4): [0]_n, 𝒵_k and 𝒟★",
        ),
        _ if n.is_multiple_of(4) => {
            let t = (n as i64 - 4) / 4;
            if m.is_multiple_of(4) {
                p("even-0mod4-0mod4", "m, n ≡ 0 (mod 4): 𝒵_k and □𝒴_k(m)").with("t", t)
            } else {
                p("even-2mod4-0mod4", "m ≡ 2, n ≡ 0 (mod 4): □𝒴_k(m)").with("t", t)
            }
        }
        _ => {
            let t = (n as i64 - 2) / 4;
            match m % 8 {
                2 | 6 => p(
                    "even-2mod4-2mod4",
                    "m, n ≡ 2 (mod 4): lifted 𝒴_t(1+m/2) and □𝒴_k(m)",
                ),
                0 if m == 8 => p(
                    "even-8-2mod4",
                    "m = 8, n ≡ 2 (mod 4): [0]_{2n}, 𝒵_k, □𝒴_k(8)",
                ),
                0 => p(
                    "even-0mod8-2mod4",
                    "m ≡ 0 (mod 8), n ≡ 2 (mod 4): [0]_{mn/4}, □𝒴_t(m/2), 𝒵_k, □𝒴_k(m)",
                ),
                _ => p(
                    "even-4mod8-2mod4",
                    "m ≡ 4 (mod 8), n ≡ 2 (mod 4): [0]_{mn/4}, □𝒴_t(m/2), 𝒵_k, □𝒴_k(m)",
                ),
            }
            .with("t", t)
        }
    }
}

fn full(ctx: &GroupContext, step: usize) -> TwoRegularGraph {
    TwoRegularGraph::single(CompactTrail::new(ctx, &[0], step as i64))
}

fn zs(ctx: &GroupContext, ks: Vec<i64>) -> Result<Vec<TwoRegularGraph>> {
    ks.into_iter()
        .map(|k| Ok(TwoRegularGraph::single(z_cycle(ctx, k)?)))
        .collect()
}

fn ys(ctx: &GroupContext, ks: Vec<i64>, size: i64) -> Result<Vec<TwoRegularGraph>> {
    let m = ctx.m() as i64;
    ks.into_iter()
        .map(|k| square_lift(ctx, &y_augmented(k, size, m)?))
        .collect()
}

pub(super) fn build(ctx: &GroupContext, plan: &ConstructionPlan) -> Result<Vec<TwoRegularGraph>> {
    let (m, n) = (ctx.m() as i64, ctx.n() as i64);
    let mn = m * n;
    let mut out = Vec::new();
    match plan.case_id.as_str() {
        "bipartite-2xn-0mod4" => {}
        "bipartite-2xn-2mod4" => out.push(full(ctx, ctx.n() / 2)),
        "four-part-4xn-0mod4" => out.extend(zs(ctx, interval((n - 4) / 4))?),
        "four-part-4xn-2mod4" => {
            out.push(full(ctx, ctx.n()));
            out.extend(zs(ctx, interval((n - 6) / 4))?);
        }
        "even-0mod4-0mod4" => {
            let t = plan.param("t");
            out.extend(zs(ctx, interval(t))?);
            out.extend(ys(ctx, interval(t), m)?);
        }
        "even-2mod4-0mod4" => out.extend(ys(ctx, interval(plan.param("t")), m)?),
        "even-2mod4-2mod4" => {
            let t = plan.param("t");
            let c = (m - 2) / 4;
            let lifted = square_lift(ctx, &y_family(t, 1 + m / 2, &[], m)?)?;
            let extra = CompactTrail::with_continuation(ctx, &[c], c + mn / 4);
            out.push(lifted.union(TwoRegularGraph::single(extra)));
            out.extend(ys(ctx, interval(t - 1), m)?);
        }
        "even-8-2mod4" => {
            let t = plan.param("t");
            out.push(full(ctx, 2 * ctx.n()));
            out.extend(zs(ctx, interval(t))?);
            out.extend(ys(ctx, interval(t - 1), 8)?);
        }
        "even-0mod8-2mod4" => {
            let t = plan.param("t");
            out.push(full(ctx, ctx.order() / 4));
            out.push(square_lift(ctx, &y_augmented(t, m / 2, m)?)?);
            out.extend(zs(ctx, interval(t))?);
            out.extend(ys(ctx, interval(t - 1), m)?);
        }
        "even-4mod8-2mod4" => {
            let t = plan.param("t");
            out.push(full(ctx, ctx.order() / 4));
            out.push(square_lift(ctx, &y_augmented(t, m / 2, m)?)?);
            out.extend(zs(ctx, interval(t - 1))?);
            out.extend(ys(ctx, interval(t - 1), m)?);
        }
        other => return Err(Error::BadParameter(format!("unknown even case {other}"))),
    }
    Ok(out)
}
