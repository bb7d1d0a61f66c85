//! Hand-written starters for specific orders, shared by the golden and
//! acceptance targets.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cyclofactor::{
    construct_with, BuildOptions, CompactTrail, GroupContext, TwoRegularGraph, TwoStarter,
};

pub type Key = Vec<BTreeSet<Vec<usize>>>;

pub fn ctx(m: usize, n: usize) -> GroupContext {
    GroupContext::new(m, n).unwrap()
}

pub fn half(c: &GroupContext) -> i64 {
    c.order() as i64 / 2
}

/// `[c_0, …]_y` with `y` the continuation vertex.
pub fn tr(c: &GroupContext, base: &[i64], next: i64) -> CompactTrail {
    CompactTrail::with_continuation(c, base, next)
}

pub fn cyc(c: &GroupContext, v: &[i64]) -> CompactTrail {
    CompactTrail::cycle(c, v)
}

pub fn g(cycles: Vec<CompactTrail>) -> TwoRegularGraph {
    TwoRegularGraph::new(cycles)
}

fn one(t: CompactTrail) -> TwoRegularGraph {
    g(vec![t])
}

/// `□L`: each edge `[a, b]` becomes `[a, b]_{a + mn/2}`.
pub fn sq_trails(c: &GroupContext, edges: &[(i64, i64)]) -> Vec<CompactTrail> {
    edges
        .iter()
        .map(|&(a, b)| tr(c, &[a, b], a + half(c)))
        .collect()
}

pub fn sq(c: &GroupContext, edges: &[(i64, i64)]) -> TwoRegularGraph {
    g(sq_trails(c, edges))
}

pub fn dstar(c: &GroupContext, ds: &[i64]) -> Vec<TwoRegularGraph> {
    ds.iter().map(|&d| one(tr(c, &[0, d], half(c)))).collect()
}

pub fn odds_upto(hi: i64) -> Vec<i64> {
    (1..=hi).step_by(2).collect()
}

pub fn minus(a: Vec<i64>, b: &[i64]) -> Vec<i64> {
    a.into_iter().filter(|x| !b.contains(x)).collect()
}

pub fn key_of(c: &GroupContext, graphs: &[TwoRegularGraph]) -> Key {
    let mut k: Key = graphs
        .iter()
        .map(|gr| gr.canonical_cycles(c).unwrap())
        .collect();
    k.sort();
    k
}

/// Odd differences below `mn/4` not yet covered.
pub fn residual(c: &GroupContext, graphs: &[TwoRegularGraph]) -> Vec<i64> {
    let covered = TwoStarter::new(*c, graphs.to_vec()).partial_differences();
    let m = c.m() as i64;
    odds_upto(c.order() as i64 / 4 - 1)
        .into_iter()
        .filter(|&d| d % m != 0 && !covered.contains(d as usize))
        .collect()
}

/// `Z_k = (0, 2 + km, -1, mn/2 - 3 - km)`.
fn z(c: &GroupContext, k: i64) -> TwoRegularGraph {
    let m = c.m() as i64;
    one(cyc(c, &[0, 2 + k * m, -1, half(c) - 3 - k * m]))
}

fn y_plain(k: i64, size: i64, skip: &[i64], m: i64) -> Vec<(i64, i64)> {
    if size % 2 == 0 {
        let v = (size - 2) / 2;
        (0..v)
            .filter(|i| !skip.contains(i))
            .map(|i| (v - 1 - i, v + 1 + i + k * m))
            .collect()
    } else {
        let v = (size - 1) / 2;
        (0..=v)
            .filter(|i| !skip.contains(i))
            .map(|i| (v - i, v + 1 + i + k * m))
            .collect()
    }
}

/// `𝒳^e ∪ 𝒳^o` of size `4v + 2`, each with its own skipped index.
fn x_pair(k: i64, size: i64, skip_e: i64, skip_o: i64, m: i64) -> Vec<(i64, i64)> {
    let v = (size - 2) / 4;
    let mut out: Vec<(i64, i64)> = (0..v)
        .filter(|&i| i != skip_e)
        .map(|i| (2 * v - 2 - 2 * i, 2 * v + 2 * i + k * m))
        .collect();
    out.extend(
        (0..v)
            .filter(|&i| i != skip_o)
            .map(|i| (2 * v - 1 - 2 * i, 2 * v + 3 + 2 * i + k * m)),
    );
    out
}

pub struct Fixture {
    pub name: String,
    pub m: usize,
    pub n: usize,
    pub ell: usize,
    pub kappa: Option<usize>,
    /// The starter exactly as written out by hand.
    pub literal: Vec<TwoRegularGraph>,
    /// When the hand-written starter is not valid, the graphs of it that are,
    /// and why.
    pub defect: Option<(Vec<TwoRegularGraph>, &'static str)>,
}

impl Fixture {
    fn exact(
        m: usize,
        n: usize,
        ell: usize,
        kappa: Option<usize>,
        literal: Vec<TwoRegularGraph>,
    ) -> Self {
        Fixture {
            name: format!("{m}x{n} ℓ={ell}"),
            m,
            n,
            ell,
            kappa,
            literal,
            defect: None,
        }
    }

    fn c4(m: usize, n: usize, literal: Vec<TwoRegularGraph>) -> Self {
        Self::exact(m, n, 4, None, literal)
    }

    pub fn ctx(&self) -> GroupContext {
        ctx(self.m, self.n)
    }

    pub fn literal_is_valid(&self) -> bool {
        TwoStarter::new(self.ctx(), self.literal.clone())
            .validate()
            .is_valid()
    }

    /// Builds the starter, failing if that takes a second or more.
    pub fn build(&self) -> TwoStarter {
        let t = Instant::now();
        let s = construct_with(
            self.m,
            self.n,
            self.ell,
            &BuildOptions { kappa: self.kappa },
        )
        .unwrap()
        .starter;
        assert!(
            t.elapsed() < Duration::from_secs(1),
            "{} took {:?}",
            self.name,
            t.elapsed()
        );
        s
    }

    pub fn matches(&self, built: &TwoStarter) -> bool {
        let c = self.ctx();
        key_of(&c, &built.graphs) == key_of(&c, &self.literal)
    }

    /// For defective fixtures: every valid hand-written graph appears in `built`.
    pub fn keeps_valid_part(&self, built: &TwoStarter) -> bool {
        let c = self.ctx();
        let got = key_of(&c, &built.graphs);
        self.defect
            .as_ref()
            .map(|(keep, _)| {
                keep.iter()
                    .all(|gr| got.contains(&gr.canonical_cycles(&c).unwrap()))
            })
            .unwrap_or(false)
    }
}

pub fn two_parts(n: usize) -> Fixture {
    let c = ctx(2, n);
    let ni = n as i64;
    let mut exp = Vec::new();
    let top = if n.is_multiple_of(4) {
        (ni - 4) / 4
    } else {
        exp.push(one(tr(&c, &[0], ni / 2)));
        (ni - 6) / 4
    };
    let d: Vec<i64> = (0..=top).map(|i| 1 + 2 * i).collect();
    exp.extend(dstar(&c, &d));
    Fixture::c4(2, n, exp)
}

pub fn four_parts(n: usize) -> Fixture {
    let c = ctx(4, n);
    let ni = n as i64;
    let mut exp = Vec::new();
    let d: Vec<i64> = if n.is_multiple_of(4) {
        exp.extend((0..=(ni - 4) / 4).map(|k| z(&c, k)));
        (0..=(ni - 4) / 4).map(|i| 1 + 4 * i).collect()
    } else {
        exp.push(one(tr(&c, &[0], ni)));
        exp.extend((0..=(ni - 6) / 4).map(|k| z(&c, k)));
        (0..=(ni - 2) / 4).map(|i| 1 + 4 * i).collect()
    };
    exp.extend(dstar(&c, &d));
    Fixture::c4(4, n, exp)
}

pub fn k_16x8() -> Fixture {
    let c = ctx(16, 8);
    let mut exp = vec![
        one(cyc(&c, &[0, 2, -1, 61])),
        one(cyc(&c, &[0, 18, -1, 45])),
        sq(
            &c,
            &[
                (5, 9),
                (4, 10),
                (3, 11),
                (2, 12),
                (1, 13),
                (0, 14),
                (7, 8),
                (6, 15),
            ],
        ),
        sq(
            &c,
            &[
                (5, 25),
                (4, 26),
                (3, 27),
                (2, 28),
                (1, 29),
                (0, 30),
                (7, 24),
                (6, 31),
            ],
        ),
    ];
    exp.extend(dstar(&c, &minus(odds_upto(31), &[1, 3, 9, 17, 19, 25])));
    Fixture::c4(16, 8, exp)
}

pub fn k_6x12() -> Fixture {
    let c = ctx(6, 12);
    let mut exp = vec![
        sq(&c, &[(1, 3), (0, 4), (2, 5)]),
        sq(&c, &[(1, 9), (0, 10), (2, 11)]),
        sq(&c, &[(1, 15), (0, 16), (2, 17)]),
    ];
    exp.extend(dstar(&c, &minus(odds_upto(17), &[3, 9, 15])));
    Fixture::c4(6, 12, exp)
}

pub fn k_10x6() -> Fixture {
    let c = ctx(10, 6);
    let mut exp = vec![
        g(vec![
            tr(&c, &[1, 13], 31),
            tr(&c, &[0, 14], 30),
            tr(&c, &[2], 17),
        ]),
        sq(&c, &[(3, 5), (2, 6), (1, 7), (0, 8), (4, 9)]),
    ];
    exp.extend(dstar(&c, &minus(odds_upto(13), &[5])));
    Fixture::c4(10, 6, exp)
}

pub fn k_32x6() -> Fixture {
    let c = ctx(32, 6);
    let mut y0: Vec<(i64, i64)> = (1..=14).map(|i| (14 - i, 16 + i)).collect();
    y0.extend([(15, 16), (14, 31)]);
    let mut exp = vec![
        one(tr(&c, &[0], 48)),
        sq(
            &c,
            &[
                (5, 41),
                (4, 42),
                (3, 43),
                (2, 44),
                (1, 45),
                (0, 46),
                (7, 40),
                (6, 47),
            ],
        ),
        one(cyc(&c, &[0, 2, -1, 93])),
        one(cyc(&c, &[0, 34, -1, 61])),
        sq(&c, &y0),
    ];
    exp.extend(dstar(&c, &minus(odds_upto(47), &[1, 3, 17, 33, 35, 41])));
    Fixture::c4(32, 6, exp)
}

pub fn k_12x6() -> Fixture {
    let c = ctx(12, 6);
    let mut exp = vec![
        one(tr(&c, &[0], 18)),
        sq(&c, &[(1, 15), (0, 16), (2, 17)]),
        one(cyc(&c, &[0, 2, -1, 33])),
        sq(&c, &[(3, 7), (2, 8), (1, 9), (0, 10), (5, 6), (4, 11)]),
    ];
    exp.extend(dstar(&c, &minus(odds_upto(17), &[1, 3, 7, 15])));
    Fixture::c4(12, 6, exp)
}

pub fn k_3x32() -> Fixture {
    let c = ctx(3, 32);
    let b = [
        (8, 12),
        (6, 14),
        (2, 18),
        (0, 20),
        (11, 13),
        (7, 17),
        (5, 19),
        (1, 23),
        (9, 16),
        (3, 22),
        (10, 15),
        (4, 21),
    ];
    let mut exp = vec![sq(&c, &b)];
    exp.extend(dstar(&c, &[1, 11, 13, 23]));
    Fixture::c4(3, 32, exp)
}

pub fn k_5x40() -> Fixture {
    let c = ctx(5, 40);
    let b = [
        (22, 24),
        (20, 26),
        (16, 30),
        (14, 32),
        (12, 34),
        (10, 36),
        (6, 40),
        (4, 42),
        (2, 44),
        (0, 46),
        (23, 27),
        (21, 29),
        (19, 31),
        (17, 33),
        (13, 37),
        (11, 39),
        (9, 41),
        (7, 43),
        (3, 47),
        (1, 49),
        (25, 28),
        (15, 38),
        (5, 48),
        (18, 35),
        (8, 45),
    ];
    let mut exp = vec![sq(&c, &b)];
    exp.extend(dstar(
        &c,
        &minus(odds_upto(49), &[3, 5, 15, 17, 23, 25, 35, 37, 43, 45]),
    ));
    Fixture::c4(5, 40, exp)
}

pub fn k_9x12() -> Fixture {
    let c = ctx(9, 12);
    let a = [
        (3, 14),
        (2, 15),
        (1, 16),
        (0, 17),
        (6, 26),
        (4, 28),
        (7, 29),
        (5, 31),
        (9, 12),
    ];
    let b0 = [
        (6, 8),
        (4, 10),
        (2, 12),
        (0, 14),
        (7, 11),
        (5, 13),
        (3, 15),
        (1, 17),
        (9, 16),
    ];
    let mut exp = vec![sq(&c, &a), sq(&c, &b0)];
    exp.extend(dstar(&c, &[1, 5, 19, 21, 23, 25]));
    Fixture::c4(9, 12, exp)
}

/// `m = 3`, `n = 8t + 12`.
pub fn three_parts(t: i64) -> Fixture {
    let n = 8 * t + 12;
    let c = ctx(3, n as usize);
    let h = 3 * n / 2;
    let q = 3 * n / 4;
    let mut exp: Vec<TwoRegularGraph> = (0..=t)
        .map(|k| {
            g(vec![
                tr(&c, &[0, 2 + 6 * k], h),
                tr(&c, &[1, 5 + 6 * k], h + 1),
                tr(&c, &[3, 4 + 6 * k], h + 3),
            ])
        })
        .collect();
    exp.push(g(vec![
        cyc(&c, &[0, q - 1, 1, q + 2]),
        tr(&c, &[4, 9], h + 4),
    ]));
    let d: Vec<i64> = (0..t).map(|i| 11 + 6 * i).filter(|d| d % 3 != 0).collect();
    exp.extend(dstar(&c, &d));
    Fixture::c4(3, n as usize, exp)
}

/// `m = 7`, `n = 8t + 12`.
pub fn seven_parts(t: i64) -> Fixture {
    let n = 8 * t + 12;
    let c = ctx(7, n as usize);
    let h = 7 * n / 2;
    let q = 7 * n / 4;
    let mut exp: Vec<TwoRegularGraph> = (0..=t)
        .map(|k| {
            let s = 14 * k;
            g(vec![
                tr(&c, &[0, 10 + s], h),
                tr(&c, &[1, 13 + s], h + 1),
                tr(&c, &[2, 8 + s], h + 2),
                tr(&c, &[3, 11 + s], h + 3),
                tr(&c, &[4, 6 + s], h + 4),
                tr(&c, &[5, 9 + s], h + 5),
                tr(&c, &[7, 12 + s], h + 7),
            ])
        })
        .collect();
    exp.push(g(vec![
        cyc(&c, &[0, q - 5, 3, q + 8]),
        cyc(&c, &[4, q + 3, 5, q + 6]),
        cyc(&c, &[8, q + 5, 11, q + 14]),
        tr(&c, &[6, 9], h + 6),
    ]));
    let d = residual(&c, &exp);
    exp.extend(dstar(&c, &d));
    Fixture::c4(7, n as usize, exp)
}

/// `n = 12`, `m ≡ 3 (mod 4)`, `m ≥ 11`.
pub fn twelve(m: i64) -> Fixture {
    let c = ctx(m as usize, 12);
    let mut a2 = y_plain(2, m + 1, &[], m);
    a2.extend(
        y_plain(2, m - 2, &[], m)
            .into_iter()
            .map(|(a, b)| (a + m, b + m)),
    );
    a2.push(((m - 1) / 2, 2 * m - 1));
    let band: Vec<i64> = (0..=(m - 3) / 2).map(|i| 2 * m + 1 + 2 * i).collect();
    let (a0, s4, excl) = if m % 8 == 3 {
        let skip = (3 * m - 9) / 8;
        let mut a0 = x_pair(0, 2 * m, skip, skip, m);
        a0.extend([
            ((m - 3) / 4, (m + 1) / 4),
            ((7 * m - 13) / 4, (7 * m - 1) / 4),
            (m, 2 * m - 2),
        ]);
        let s4 = g(vec![
            cyc(&c, &[0, (3 * m - 5) / 2, 1, (9 * m + 7) / 2]),
            tr(&c, &[3, 10], 6 * m + 3),
        ]);
        (a0, s4, vec![1, 3, 7, m - 2, (3 * m - 7) / 2])
    } else {
        let mut a0 = x_pair(0, 2 * m, (3 * m - 5) / 8, (3 * m + 3) / 8, m);
        a0.extend([
            ((m - 11) / 4, (m - 7) / 4),
            ((7 * m - 9) / 4, (7 * m + 11) / 4),
            (m, 2 * m - 2),
        ]);
        let s4 = g(vec![
            cyc(&c, &[0, (3 * m + 11) / 2, -1, (9 * m - 13) / 2]),
            tr(&c, &[2, 9], 6 * m + 2),
        ]);
        (a0, s4, vec![1, 5, 7, m - 2, (3 * m + 13) / 2])
    };
    let d: Vec<i64> = odds_upto(3 * m - 1)
        .into_iter()
        .filter(|x| x % m != 0 && !excl.contains(x) && !band.contains(x))
        .collect();
    let mut exp = vec![sq(&c, &a0), sq(&c, &a2), s4];
    exp.extend(dstar(&c, &d));
    Fixture::c4(m as usize, 12, exp)
}

pub fn k_15x20() -> Fixture {
    let c = ctx(15, 20);
    let a0 = [
        (12, 14),
        (10, 16),
        (8, 18),
        (6, 20),
        (4, 22),
        (0, 26),
        (13, 17),
        (9, 21),
        (7, 23),
        (5, 25),
        (3, 27),
        (1, 29),
        (2, 41),
        (19, 54),
        (15, 28),
    ];
    let a1 = [
        (12, 44),
        (10, 46),
        (8, 48),
        (6, 50),
        (4, 52),
        (2, 54),
        (0, 56),
        (13, 47),
        (11, 49),
        (9, 51),
        (7, 53),
        (5, 55),
        (3, 57),
        (1, 59),
        (15, 58),
    ];
    let a2 = [
        (6, 68),
        (5, 69),
        (4, 70),
        (3, 71),
        (2, 72),
        (1, 73),
        (0, 74),
        (21, 82),
        (20, 83),
        (19, 84),
        (18, 85),
        (17, 86),
        (16, 87),
        (15, 88),
        (7, 29),
    ];
    let b = [
        (14, 15),
        (13, 16),
        (12, 17),
        (11, 18),
        (9, 20),
        (6, 23),
        (5, 24),
        (4, 25),
        (3, 26),
        (2, 27),
        (1, 28),
        (7, 40),
        (22, 79),
    ];
    let mut s2 = sq_trails(&c, &b);
    s2.push(cyc(&c, &[0, 8, -1, 141]));
    let mut exp = vec![sq(&c, &a0), sq(&c, &a1), sq(&c, &a2), g(s2)];
    let mut d = vec![29, 31, 37, 41];
    d.extend((0..=4).map(|i| 47 + 2 * i));
    d.push(59);
    exp.extend(dstar(&c, &d));
    Fixture::c4(15, 20, exp)
}

const TWO_EDGE_LIFT: &str =
    "a lift of two edges has index 4, but its cycles are fixed by mn/2 = 2m, \
                             which lies outside the index-4 subgroup when m is odd";

pub fn k_15x4() -> Fixture {
    let c = ctx(15, 4);
    let keep = vec![
        sq(&c, &[(0, 8), (1, 7), (2, 6), (3, 15), (4, 9)]),
        g(vec![cyc(&c, &[0, 10, 9, 29]), tr(&c, &[1, 8], 31)]),
    ];
    let mut literal = keep.clone();
    literal.push(sq(&c, &[(0, 2), (1, 15)]));
    literal.extend(dstar(&c, &[3, 9, 11, 13]));
    Fixture {
        defect: Some((keep, TWO_EDGE_LIFT)),
        ..Fixture::c4(15, 4, literal)
    }
}

pub fn k_35x4() -> Fixture {
    let c = ctx(35, 4);
    let keep = vec![
        sq(
            &c,
            &[(0, 12), (1, 11), (2, 10), (3, 9), (4, 8), (5, 7), (6, 13)],
        ),
        sq(
            &c,
            &[
                (0, 26),
                (1, 25),
                (2, 24),
                (3, 23),
                (4, 36),
                (5, 21),
                (6, 27),
            ],
        ),
        sq(&c, &[(0, 28), (1, 15), (2, 19), (3, 16), (4, 7)]),
        g(vec![
            cyc(&c, &[0, 34, 33, 69]),
            tr(&c, &[1, 28], 71),
            tr(&c, &[2, 17], 72),
            tr(&c, &[5, 16], 75),
        ]),
    ];
    let mut literal = keep.clone();
    literal.push(sq(&c, &[(0, 18), (1, 31)]));
    literal.extend(dstar(&c, &[5, 9, 19, 23, 25, 29, 31, 33]));
    Fixture {
        defect: Some((keep, TWO_EDGE_LIFT)),
        ..Fixture::c4(35, 4, literal)
    }
}

pub fn k_143x4() -> Fixture {
    let c = ctx(143, 4);
    let mut keep: Vec<TwoRegularGraph> = (0..=3)
        .map(|i| {
            let mut w: Vec<(i64, i64)> = (0..=11).map(|j| (11 - j, 13 + j + 26 * i)).collect();
            w.push((12, 25 + 26 * i));
            sq(&c, &w)
        })
        .collect();
    keep.push(sq(
        &c,
        &[
            (0, 128),
            (1, 127),
            (2, 126),
            (3, 125),
            (4, 124),
            (5, 123),
            (6, 122),
            (7, 147),
            (8, 120),
            (9, 145),
            (10, 118),
            (11, 143),
            (12, 129),
        ],
    ));
    keep.push(sq(
        &c,
        &[
            (0, 130),
            (1, 105),
            (2, 80),
            (3, 55),
            (4, 21),
            (6, 41),
            (8, 15),
            (10, 35),
            (9, 12),
            (7, 16),
            (5, 62),
        ],
    ));
    let mut q = sq_trails(
        &c,
        &[
            (1, 86),
            (2, 85),
            (5, 84),
            (6, 83),
            (7, 82),
            (8, 81),
            (9, 80),
            (10, 79),
            (11, 78),
        ],
    );
    q.push(cyc(&c, &[0, 26, 509, 197]));
    keep.push(g(q));

    let excluded = [
        3, 7, 9, 13, 17, 25, 35, 39, 57, 65, 67, 69, 71, 73, 75, 77, 79, 83, 85, 89, 91, 117,
    ];
    let mut literal = keep.clone();
    for pair in [
        [(0, 106), (1, 111)],
        [(0, 114), (1, 135)],
        [(0, 138), (1, 143)],
    ] {
        literal.push(sq(&c, &pair));
    }
    literal.extend(dstar(&c, &minus(odds_upto(141), &excluded)));
    Fixture {
        defect: Some((keep, TWO_EDGE_LIFT)),
        ..Fixture::c4(143, 4, literal)
    }
}

fn ws(c: &GroupContext, list: &[(i64, i64)]) -> Vec<TwoRegularGraph> {
    list.iter()
        .map(|&(d, x)| one(CompactTrail::new(c, &[0, d], x)))
        .collect()
}

pub fn ham_5x18() -> Fixture {
    let c = ctx(5, 18);
    let mut exp = vec![
        one(CompactTrail::new(
            &c,
            &[0, 18, 2, 16, 4, 15, 7, 13, 9, 11],
            10,
        )),
        one(CompactTrail::new(
            &c,
            &[0, 38, 2, 36, 4, 35, 7, 33, 9, 31],
            10,
        )),
        one(CompactTrail::new(&c, &[0, 44, 1, 43, 2], 5)),
        one(CompactTrail::new(&c, &[0], 17)),
    ];
    exp.extend(ws(&c, &[(27, 8), (29, 16), (37, 4), (39, 16), (9, 2)]));
    Fixture::exact(5, 18, 90, Some(17), exp)
}

pub fn ham_9x26() -> Fixture {
    let c = ctx(9, 26);
    let mut exp = vec![
        one(CompactTrail::new(
            &c,
            &[
                0, 34, 2, 32, 4, 30, 6, 28, 8, 27, 11, 25, 13, 23, 15, 21, 17, 19,
            ],
            18,
        )),
        one(CompactTrail::new(
            &c,
            &[
                0, 70, 2, 68, 4, 66, 6, 64, 8, 63, 11, 61, 13, 59, 15, 57, 17, 55,
            ],
            18,
        )),
        one(CompactTrail::new(
            &c,
            &[
                0, 106, 2, 104, 4, 102, 6, 100, 8, 99, 11, 97, 13, 95, 15, 93, 17, 91,
            ],
            18,
        )),
        one(CompactTrail::new(
            &c,
            &[0, 116, 1, 115, 2, 114, 3, 113, 4],
            9,
        )),
        one(CompactTrail::new(&c, &[0], 107)),
    ];
    exp.extend(ws(
        &c,
        &[
            (7, 4),
            (13, 2),
            (17, 2),
            (23, 2),
            (29, 4),
            (33, 2),
            (39, 4),
            (43, 2),
            (49, 2),
            (53, 2),
            (59, 2),
            (65, 4),
            (69, 2),
            (75, 4),
            (79, 2),
            (85, 2),
            (89, 2),
            (95, 2),
            (101, 4),
            (105, 2),
        ],
    ));
    Fixture::exact(9, 26, 234, Some(107), exp)
}

pub fn ham_13x14() -> Fixture {
    let c = ctx(13, 14);
    let mut exp = vec![
        one(CompactTrail::new(
            &c,
            &[0, 24, 2, 22, 4, 20, 6, 18, 8, 16, 10, 14, 12],
            13,
        )),
        one(CompactTrail::new(
            &c,
            &[0, 90, 1, 89, 2, 88, 3, 87, 4, 86, 5, 85, 6],
            13,
        )),
        one(CompactTrail::new(
            &c,
            &[
                0, 76, 2, 74, 4, 72, 6, 70, 8, 68, 10, 66, 12, 65, 15, 63, 17, 61, 19, 59, 21, 57,
                23, 55, 25, 53,
            ],
            26,
        )),
    ];
    exp.extend(ws(
        &c,
        &[
            (5, 2),
            (11, 2),
            (17, 2),
            (21, 2),
            (25, 2),
            (31, 2),
            (35, 2),
            (41, 4),
            (45, 2),
            (49, 2),
            (55, 4),
            (59, 2),
            (63, 2),
            (69, 2),
            (73, 2),
            (77, 2),
        ],
    ));
    Fixture::exact(13, 14, 182, None, exp)
}

pub fn ham_9x20() -> Fixture {
    let c = ctx(9, 20);
    let mut exp = vec![
        one(CompactTrail::new(&c, &[0, 16, 2, 14, 4, 12, 6, 10, 8], 9)),
        one(CompactTrail::new(
            &c,
            &[
                0, 52, 2, 50, 4, 48, 6, 46, 8, 45, 11, 43, 13, 41, 15, 39, 17, 37,
            ],
            18,
        )),
        one(CompactTrail::new(
            &c,
            &[
                0, 88, 2, 86, 4, 84, 6, 82, 8, 81, 11, 79, 13, 77, 15, 75, 17, 73,
            ],
            18,
        )),
        one(CompactTrail::new(&c, &[0], 43)),
        one(CompactTrail::new(&c, &[0, 7], 86)),
        one(CompactTrail::new(&c, &[0, 25], 86)),
    ];
    let d = [5, 13, 17, 23, 31, 35, 41, 49, 53, 59, 67, 71, 77, 85, 89];
    exp.extend(ws(&c, &d.map(|x| (x, 2))));
    Fixture::exact(9, 20, 180, None, exp)
}

pub fn ham_15x12() -> Fixture {
    let c = ctx(15, 12);
    let mut exp = vec![
        one(CompactTrail::new(
            &c,
            &[0, 28, 2, 26, 4, 24, 6, 22, 8, 20, 10, 18, 12, 16, 14],
            15,
        )),
        one(CompactTrail::new(
            &c,
            &[
                0, 88, 2, 86, 4, 84, 6, 82, 8, 80, 10, 78, 12, 76, 14, 75, 17, 73, 19, 71, 21, 69,
                23, 67, 25, 65, 27, 63, 29, 61,
            ],
            30,
        )),
        one(CompactTrail::new(&c, &[0], 47)),
        one(CompactTrail::new(&c, &[0, 17], 94)),
    ];
    let d = [
        5, 9, 13, 21, 25, 29, 35, 39, 43, 51, 55, 59, 65, 69, 73, 81, 85, 89,
    ];
    exp.extend(ws(&c, &d.map(|x| (x, 2))));
    Fixture::exact(15, 12, 180, None, exp)
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in [4, 6, 8] {
        out.push(two_parts(n));
        out.push(four_parts(n));
    }
    out.extend([
        k_16x8(),
        k_6x12(),
        k_10x6(),
        k_32x6(),
        k_12x6(),
        k_3x32(),
        k_5x40(),
    ]);
    out.extend([k_15x4(), k_35x4(), k_143x4(), k_9x12()]);
    for t in [0, 1] {
        out.push(three_parts(t));
        out.push(seven_parts(t));
    }
    for m in [11, 15, 19] {
        out.push(twelve(m));
    }
    out.push(k_15x20());
    out.extend([ham_5x18(), ham_9x26(), ham_13x14(), ham_9x20(), ham_15x12()]);
    out
}
