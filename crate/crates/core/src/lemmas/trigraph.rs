//! Degree sums over three 2-graphs `G_1, G_2, G_3` on a shared vertex set,
//! under intersection hypotheses between their edges.
//!
//! Graphs are bitmasks over a global pair index. An edge `e` of `G_i` and an
//! edge `f` of `G_j` may be required to meet; the hypotheses are encoded as
//! per-pair forbidden masks so that adding an edge, or checking a whole
//! configuration, is a handful of mask operations. Witnesses are re-checked
//! against plain pair lists.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::search::{run_randomized, Landscape};
use super::{finish, Acc, LemmaVerdict, Mode, SearchMode, WitnessData};
use crate::error::{Error, Result};
use crate::hypergraph::Vertex;

type Pair = (Vertex, Vertex);
const MAX_VERTICES: usize = 12;

/// A configuration `(G_1, G_2, G_3)` on vertices `0..universe`. With blocks
/// `(a, b)`, `A = 0..a` and `B = a..a+b`. `set` is the vertex set the score
/// was taken over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriGraphConfig {
    pub universe: usize,
    pub graphs: [Vec<Pair>; 3],
    pub blocks: Option<(usize, usize)>,
    pub set: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy)]
enum Score {
    /// Maximum over 3-sets of the summed degrees in all three graphs.
    TopThree,
    /// `sum_i deg(u1) + deg(u2) + w * deg(v1)`.
    Weighted {
        u1: Vertex,
        u2: Vertex,
        v1: Vertex,
        w: i64,
    },
}

fn meets(e: Pair, f: Pair) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

struct Engine {
    n: usize,
    pairs: Vec<Pair>,
    allowed: [u128; 3],
    /// `forbid[(i * P + p) * 3 + j]`: edges of `G_j` that may not coexist
    /// with pair `p` in `G_i`.
    forbid: Vec<u128>,
    incident: Vec<u128>,
    items: Vec<(usize, usize)>,
    score: Score,
    blocks: Option<(usize, usize)>,
}

impl Engine {
    fn new(
        n: usize,
        allowed: impl Fn(usize, Pair) -> bool,
        must_meet: impl Fn(usize, Pair, usize, Pair) -> bool,
        score: Score,
        blocks: Option<(usize, usize)>,
    ) -> Self {
        let pairs: Vec<Pair> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let np = pairs.len();
        let mask_of = |pred: &dyn Fn(usize, Pair) -> bool| -> u128 {
            (0..np)
                .filter(|&q| pred(q, pairs[q]))
                .fold(0, |m, q| m | 1 << q)
        };
        let allowed: [u128; 3] = std::array::from_fn(|i| mask_of(&|_, p| allowed(i, p)));
        let mut forbid = vec![0u128; 3 * np * 3];
        for i in 0..3 {
            for p in 0..np {
                for j in 0..3 {
                    if i != j {
                        forbid[(i * np + p) * 3 + j] = allowed[j]
                            & mask_of(&|_, f| must_meet(i, pairs[p], j, f) && !meets(pairs[p], f));
                    }
                }
            }
        }
        let incident = (0..n)
            .map(|v| mask_of(&|_, (a, b)| a == v || b == v))
            .collect();
        let items = (0..3)
            .flat_map(|i| {
                (0..np)
                    .filter(move |&p| allowed[i] >> p & 1 == 1)
                    .map(move |p| (i, p))
            })
            .collect();
        Engine {
            n,
            pairs,
            allowed,
            forbid,
            incident,
            items,
            score,
            blocks,
        }
    }

    fn forbidden(&self, i: usize, g: u128, j: usize) -> u128 {
        let np = self.pairs.len();
        let mut out = 0;
        let mut rest = g;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.forbid[(i * np + p) * 3 + j];
        }
        out
    }

    fn evaluate(&self, g: &[u128; 3]) -> (i64, Vec<Vertex>) {
        let deg = |v: Vertex| -> i64 {
            g.iter()
                .map(|m| (m & self.incident[v]).count_ones() as i64)
                .sum()
        };
        match self.score {
            Score::TopThree => {
                let mut d: Vec<(i64, Vertex)> = (0..self.n).map(|v| (-deg(v), v)).collect();
                d.sort_unstable();
                let mut set: Vec<Vertex> = d[..3].iter().map(|x| x.1).collect();
                set.sort_unstable();
                (-d[..3].iter().map(|x| x.0).sum::<i64>(), set)
            }
            Score::Weighted { u1, u2, v1, w } => {
                (deg(u1) + deg(u2) + w * deg(v1), vec![u1, u2, v1])
            }
        }
    }

    fn config(&self, g: &[u128; 3]) -> TriGraphConfig {
        let graphs = std::array::from_fn(|i| {
            (0..self.pairs.len())
                .filter(|&p| g[i] >> p & 1 == 1)
                .map(|p| self.pairs[p])
                .collect()
        });
        TriGraphConfig {
            universe: self.n,
            graphs,
            blocks: self.blocks,
            set: self.evaluate(g).1,
        }
    }

    fn bits(&self, i: usize) -> u32 {
        self.allowed[i].count_ones()
    }

    /// Position of `sub` among the submasks of `allowed[i]`.
    fn rank(&self, i: usize, sub: u128) -> u64 {
        let mut r = 0u64;
        let mut k = 0;
        let mut rest = self.allowed[i];
        while rest != 0 {
            let p = rest.trailing_zeros();
            rest &= rest - 1;
            if sub >> p & 1 == 1 {
                r |= 1 << k;
            }
            k += 1;
        }
        r
    }

    /// Every configuration of allowed edges, with hypothesis violators
    /// counted in bulk.
    fn exhaustive(&self, bound: i64) -> Acc<[u128; 3]> {
        let (b2, b3) = (self.bits(1), self.bits(2));
        let total_bits = self.bits(0) + b2 + b3;
        assert!(total_bits < 63, "universe too large for exhaustive search");
        let g1s: Vec<u128> = submasks(self.allowed[0]).collect();
        let acc = g1s
            .par_iter()
            .map(|&g1| {
                let mut acc = Acc::new(bound);
                let f12 = self.forbidden(0, g1, 1);
                let f13 = self.forbidden(0, g1, 2);
                let r1 = self.rank(0, g1);
                for g2 in submasks(self.allowed[1]) {
                    acc.covered += 1 << b3;
                    if g2 & f12 != 0 {
                        continue;
                    }
                    let free = self.allowed[2] & !(f13 | self.forbidden(1, g2, 2));
                    let base = (r1 << b2 | self.rank(1, g2)) << b3;
                    for g3 in submasks(free) {
                        let g = [g1, g2, g3];
                        let (value, _) = self.evaluate(&g);
                        acc.offer(base | self.rank(2, g3), value, || g);
                    }
                }
                acc
            })
            .reduce(|| Acc::new(bound), Acc::merge);
        assert_eq!(acc.covered, 1u64 << total_bits);
        acc
    }
}

/// Submasks of `m` in increasing numeric order, starting with 0.
fn submasks(m: u128) -> impl Iterator<Item = u128> {
    let mut next = Some(0u128);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = (cur | !m).wrapping_add(1) & m;
        next = (succ != 0).then_some(succ);
        Some(cur)
    })
}

impl Landscape for Engine {
    type State = [u128; 3];

    fn item_count(&self) -> usize {
        self.items.len()
    }
    fn empty(&self) -> [u128; 3] {
        [0; 3]
    }
    fn contains(&self, s: &[u128; 3], item: usize) -> bool {
        let (i, p) = self.items[item];
        s[i] >> p & 1 == 1
    }
    fn can_add(&self, s: &[u128; 3], item: usize) -> bool {
        let (i, p) = self.items[item];
        let np = self.pairs.len();
        (0..3).all(|j| s[j] & self.forbid[(i * np + p) * 3 + j] == 0)
    }
    fn toggle(&self, s: &mut [u128; 3], item: usize) {
        let (i, p) = self.items[item];
        s[i] ^= 1 << p;
    }
    fn value(&self, s: &[u128; 3]) -> i64 {
        self.evaluate(s).0
    }
}

type Recheck = fn(&TriGraphConfig) -> std::result::Result<i64, String>;

fn run(
    lemma: &str,
    parameters: Vec<(String, i64)>,
    engine: Engine,
    bound: i64,
    mode: Mode,
    recheck: Recheck,
) -> LemmaVerdict {
    let (acc, universe) = match mode {
        Mode::Exhaustive => (
            engine.exhaustive(bound),
            "all configurations of allowed edges".to_string(),
        ),
        Mode::Randomized {
            samples,
            restarts,
            seed,
        } => (
            run_randomized(&engine, samples, restarts, seed, bound, |s| *s),
            "random maximal configurations satisfying the hypotheses".to_string(),
        ),
    };
    finish(
        lemma,
        parameters,
        universe,
        mode,
        acc,
        |g| WitnessData::TriGraph(engine.config(g)),
        |g| recheck(&engine.config(g)),
    )
}

fn check_pairs(cfg: &TriGraphConfig) -> std::result::Result<(), String> {
    for g in &cfg.graphs {
        for &(a, b) in g {
            if a >= b || b >= cfg.universe {
                return Err(format!("bad pair ({a}, {b})"));
            }
        }
    }
    Ok(())
}

fn degree(g: &[Pair], v: Vertex) -> i64 {
    g.iter().filter(|&&(a, b)| a == v || b == v).count() as i64
}

fn all_meet(g: &[Pair], h: &[Pair]) -> bool {
    g.iter().all(|&e| h.iter().all(|&f| meets(e, f)))
}

/// Maximum of the summed degrees over every 3-set, by enumeration.
fn best_three_set(cfg: &TriGraphConfig) -> i64 {
    let n = cfg.universe;
    let d = |v| cfg.graphs.iter().map(|g| degree(g, v)).sum::<i64>();
    let mut best = 0;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                best = best.max(d(x) + d(y) + d(z));
            }
        }
    }
    best
}

fn recheck_6n(cfg: &TriGraphConfig) -> std::result::Result<i64, String> {
    check_pairs(cfg)?;
    let [g1, g2, g3] = &cfg.graphs;
    if !all_meet(g1, g2) || !all_meet(g1, g3) {
        return Err("an edge of G1 misses an edge of G2 or G3".into());
    }
    Ok(best_three_set(cfg))
}

fn recheck_3n(cfg: &TriGraphConfig) -> std::result::Result<i64, String> {
    check_pairs(cfg)?;
    let [g1, g2, g3] = &cfg.graphs;
    if !all_meet(g1, g2) || !all_meet(g1, g3) || !all_meet(g2, g3) {
        return Err("two of the graphs have disjoint edges".into());
    }
    Ok(best_three_set(cfg))
}

fn recheck_ab(cfg: &TriGraphConfig, w: i64) -> std::result::Result<i64, String> {
    check_pairs(cfg)?;
    let (a, b) = cfg.blocks.ok_or("missing blocks")?;
    if cfg.universe != a + b {
        return Err("universe is not A + B".into());
    }
    let in_a = |v: Vertex| v < a;
    let [g1, g2, g3] = &cfg.graphs;
    if g1.iter().any(|&(x, y)| !in_a(x) || !in_a(y)) {
        return Err("G1 touches B".into());
    }
    if g2.iter().chain(g3).any(|&(x, y)| !in_a(x) && !in_a(y)) {
        return Err("an edge of G2 or G3 misses A".into());
    }
    let touching_b = |g: &[Pair]| -> Vec<Pair> {
        g.iter()
            .copied()
            .filter(|&(x, y)| !in_a(x) || !in_a(y))
            .collect()
    };
    let (b2, b3) = (touching_b(g2), touching_b(g3));
    if !all_meet(g1, &b2) || !all_meet(g1, &b3) || !all_meet(&b2, &b3) {
        return Err("intersection hypothesis fails".into());
    }
    Ok(cfg
        .graphs
        .iter()
        .map(|g| degree(g, 0) + degree(g, 1) + w * degree(g, a))
        .sum())
}

/// If every edge of `G_1` meets every edge of `G_2` and of `G_3` on `n >= 4`
/// vertices, every 3-set has degree sum at most `6(n - 1)`. Exhaustive at
/// `n = 4`.
pub fn verify_intersecting_bound_6n(n: usize, mode: SearchMode) -> Result<LemmaVerdict> {
    if !(4..=MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidParameters(format!(
            "n = {n} outside 4..={MAX_VERTICES}"
        )));
    }
    let mode = mode.resolve(n == 4)?;
    let engine = Engine::new(
        n,
        |_, _| true,
        |i, _, j, _| (i == 0) != (j == 0),
        Score::TopThree,
        None,
    );
    Ok(run(
        "intersect-6n",
        vec![("n".into(), n as i64)],
        engine,
        6 * (n as i64 - 1),
        mode,
        recheck_6n,
    ))
}

/// If edges of distinct graphs pairwise meet on `n >= 5` vertices, every
/// 3-set has degree sum at most `3(n + 1)`. Exhaustive at `n = 5`.
pub fn verify_intersecting_bound_3n(n: usize, mode: SearchMode) -> Result<LemmaVerdict> {
    if !(5..=MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidParameters(format!(
            "n = {n} outside 5..={MAX_VERTICES}"
        )));
    }
    let mode = mode.resolve(n == 5)?;
    let engine = Engine::new(n, |_, _| true, |i, _, j, _| i != j, Score::TopThree, None);
    Ok(run(
        "intersect-3n",
        vec![("n".into(), n as i64)],
        engine,
        3 * (n as i64 + 1),
        mode,
        recheck_3n,
    ))
}

fn ab_engine(a: usize, b: usize, w: i64) -> Engine {
    let in_a = move |v: Vertex| v < a;
    let touches_b = move |(x, y): Pair| !in_a(x) || !in_a(y);
    Engine::new(
        a + b,
        move |i, (x, y)| {
            if i == 0 {
                in_a(x) && in_a(y)
            } else {
                in_a(x) || in_a(y)
            }
        },
        move |i, e, j, f| match (i, j) {
            (0, 0) | (1, 1) | (2, 2) => false,
            (0, _) => touches_b(f),
            (_, 0) => touches_b(e),
            _ => touches_b(e) && touches_b(f),
        },
        Score::Weighted {
            u1: 0,
            u2: 1,
            v1: a,
            w,
        },
        Some((a, b)),
    )
}

fn ab_params(a: usize, b: usize) -> Result<()> {
    if a < 2 || b < 1 || a > 6 || b > 6 {
        return Err(Error::InvalidParameters(format!(
            "(a, b) = ({a}, {b}) outside a in 2..=6, b in 1..=6"
        )));
    }
    Ok(())
}

/// Block lemma with weights `(1, 1, 1)` on `u_1, u_2, v_1`: bound
/// `max{6a + 2, 5a + 2b + 2}`. Exhaustive for `a + b <= 5`.
pub fn verify_ab_bound_max6a(a: usize, b: usize, mode: SearchMode) -> Result<LemmaVerdict> {
    ab_params(a, b)?;
    let mode = mode.resolve(a + b <= 5)?;
    let (ai, bi) = (a as i64, b as i64);
    Ok(run(
        "ab-6a",
        vec![("a".into(), ai), ("b".into(), bi)],
        ab_engine(a, b, 1),
        (6 * ai + 2).max(5 * ai + 2 * bi + 2),
        mode,
        |cfg| recheck_ab(cfg, 1),
    ))
}

/// Block lemma with weights `(1, 1, 2)` on `u_1, u_2, v_1`: bound
/// `max{8a + 2, 6a + 2b + 4}`. Exhaustive for `a + b <= 5`.
pub fn verify_ab_bound_max8a(a: usize, b: usize, mode: SearchMode) -> Result<LemmaVerdict> {
    ab_params(a, b)?;
    let mode = mode.resolve(a + b <= 5)?;
    let (ai, bi) = (a as i64, b as i64);
    Ok(run(
        "ab-8a",
        vec![("a".into(), ai), ("b".into(), bi)],
        ab_engine(a, b, 2),
        (8 * ai + 2).max(6 * ai + 2 * bi + 4),
        mode,
        |cfg| recheck_ab(cfg, 2),
    ))
}
