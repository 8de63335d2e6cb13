//! Branch and bound for maximum matchings in 3-graphs.
//!
//! Branching: the available vertex of minimum positive residual degree is
//! either matched by one of its residual edges (canonical order) or dropped.
//! Pruning uses `min(active / 3, w(active))` where `w` is a fractional vertex
//! cover of the whole graph solved once at the root; restricting a cover to
//! a subgraph keeps it a cover, so the bound stays valid at every node.

use minilp::{ComparisonOp, OptimizationDirection, Problem};

use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BnbStats {
    pub nodes: u64,
    pub root_bound: usize,
}

/// A fractional vertex cover (`sum over e of w >= 1` for every edge) of
/// minimum weight, scaled so every constraint holds in floating point.
/// `None` when the LP solver fails; callers then skip the cover bound.
pub fn fractional_cover(h: &Hypergraph3) -> Option<Vec<f64>> {
    if h.edge_count() == 0 {
        return Some(vec![0.0; h.n()]);
    }
    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let vars: Vec<_> = (0..h.n()).map(|_| lp.add_var(1.0, (0.0, 1.0))).collect();
    for e in h.edges() {
        lp.add_constraint(
            [(vars[e[0]], 1.0), (vars[e[1]], 1.0), (vars[e[2]], 1.0)],
            ComparisonOp::Ge,
            1.0,
        );
    }
    let sol = lp.solve().ok()?;
    let mut w: Vec<f64> = vars.iter().map(|&v| sol[v].max(0.0)).collect();
    let slack = h
        .edges()
        .iter()
        .map(|e| w[e[0]] + w[e[1]] + w[e[2]])
        .fold(f64::INFINITY, f64::min);
    if !(slack > 0.5) {
        return None;
    }
    if slack < 1.0 {
        for x in &mut w {
            *x /= slack;
        }
    }
    Some(w)
}

struct Search<'a> {
    h: &'a Hypergraph3,
    cover: Option<Vec<f64>>,
    alive: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    nodes: u64,
    deg: Vec<u32>,
}

impl Search<'_> {
    fn edge_alive(&self, i: usize) -> bool {
        self.h.edges()[i].iter().all(|&v| self.alive[v])
    }

    /// Residual degrees into `self.deg`; returns the upper bound on the
    /// residual matching size and the branching vertex.
    fn residual(&mut self) -> (usize, Option<usize>) {
        self.deg.iter_mut().for_each(|d| *d = 0);
        for e in self.h.edges() {
            if e.iter().all(|&v| self.alive[v]) {
                for &v in e {
                    self.deg[v] += 1;
                }
            }
        }
        let mut active = 0usize;
        let mut weight = 0.0;
        let mut pick: Option<usize> = None;
        for v in 0..self.h.n() {
            let d = self.deg[v];
            if d == 0 {
                continue;
            }
            active += 1;
            if let Some(w) = &self.cover {
                weight += w[v];
            }
            if pick.is_none_or(|p| d < self.deg[p]) {
                pick = Some(v);
            }
        }
        let mut bound = active / 3;
        if self.cover.is_some() {
            bound = bound.min((weight + 1e-6).floor() as usize);
        }
        (bound, pick)
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.best.len() >= self.target {
            return;
        }
        let (bound, pick) = self.residual();
        if self.current.len() + bound <= self.best.len() {
            return;
        }
        let Some(v) = pick else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        let incident: Vec<usize> = self
            .h
            .incident(v)
            .iter()
            .copied()
            .filter(|&i| self.edge_alive(i))
            .collect();
        for i in incident {
            let e = self.h.edges()[i];
            for &u in &e {
                self.alive[u] = false;
            }
            self.current.push(i);
            self.run();
            self.current.pop();
            for &u in &e {
                self.alive[u] = true;
            }
            if self.best.len() >= self.target {
                return;
            }
        }
        self.alive[v] = false;
        self.run();
        self.alive[v] = true;
    }
}

/// Greedy seed: repeatedly match the minimum-degree vertex through the edge
/// whose other two vertices have the smallest residual degrees.
fn greedy(h: &Hypergraph3) -> Vec<usize> {
    let mut alive = vec![true; h.n()];
    let mut out = Vec::new();
    loop {
        let mut deg = vec![0u32; h.n()];
        for e in h.edges() {
            if e.iter().all(|&v| alive[v]) {
                for &v in e {
                    deg[v] += 1;
                }
            }
        }
        let Some(v) = (0..h.n())
            .filter(|&v| deg[v] > 0)
            .min_by_key(|&v| (deg[v], v))
        else {
            break;
        };
        let i = h
            .incident(v)
            .iter()
            .copied()
            .filter(|&i| h.edges()[i].iter().all(|&u| alive[u]))
            .min_by_key(|&i| h.edges()[i].iter().map(|&u| deg[u]).sum::<u32>())
            .unwrap();
        for &u in &h.edges()[i] {
            alive[u] = false;
        }
        out.push(i);
    }
    out
}

/// Exact maximum matching by branch and bound. With `target`, the search
/// stops as soon as a matching of that size is found.
pub fn max_matching_bnb(h: &Hypergraph3, target: Option<usize>) -> (Vec<Triple>, BnbStats) {
    let cover = fractional_cover(h);
    let mut s = Search {
        h,
        cover,
        alive: vec![true; h.n()],
        current: Vec::new(),
        best: greedy(h),
        target: target.unwrap_or(usize::MAX),
        nodes: 0,
        deg: vec![0; h.n()],
    };
    let (root_bound, _) = s.residual();
    s.run();
    let edges = s.best.iter().map(|&i| h.edges()[i]).collect();
    (
        edges,
        BnbStats {
            nodes: s.nodes,
            root_bound,
        },
    )
}
