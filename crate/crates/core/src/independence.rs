//! Exact maximum independent set on a 2-graph given by adjacency lists.
//!
//! Branch and bound over bitsets: candidates are ordered by a greedy
//! partition into cliques of the input graph (a colouring of the complement),
//! and a branch is cut once `current + classes left` cannot beat the best.

use crate::hypergraph::Vertex;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn ones(n: usize) -> Self {
        let mut b = Self::zeros(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }
}

struct Search {
    /// `free[v]`: vertices other than `v` not adjacent to `v`.
    free: Vec<Bits>,
    /// `adj[v]`: neighbours of `v`.
    adj: Vec<Bits>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    /// Greedy partition of `cand` into cliques of the input graph. Returns the
    /// vertices in class order with the running class count of each.
    fn order(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut left = cand.clone();
        let mut out = Vec::new();
        let mut class = 0;
        while !left.is_empty() {
            class += 1;
            let mut q = left.clone();
            while let Some(v) = q.first() {
                out.push((v, class));
                left.remove(v);
                q.remove(v);
                q = q.and(&self.adj[v]);
            }
        }
        out
    }

    fn expand(&mut self, mut cand: Bits) {
        let order = self.order(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand.and(&self.free[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Returns one maximum independent set (sorted) of the graph on `0..n`.
pub fn maximum_independent_set(n: usize, adjacency: &[Vec<Vertex>]) -> Vec<Vertex> {
    if n == 0 {
        return Vec::new();
    }
    let all = Bits::ones(n);
    let mut adj = Vec::with_capacity(n);
    let mut free = Vec::with_capacity(n);
    for (v, row) in adjacency.iter().enumerate() {
        let mut a = Bits::zeros(n);
        for &u in row {
            a.insert(u);
        }
        let mut f = all.clone();
        f.and_not_assign(&a);
        f.remove(v);
        adj.push(a);
        free.push(f);
    }
    let mut s = Search {
        free,
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    // Greedy seed: repeatedly take the vertex of fewest neighbours.
    let mut cand = all.clone();
    let mut seed = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| s.adj[v].and(&cand).iter().count())
            .unwrap();
        seed.push(v);
        cand = cand.and(&s.free[v]);
    }
    s.best = seed;
    s.expand(all);
    let mut best = s.best;
    best.sort_unstable();
    debug_assert!(best
        .iter()
        .all(|&u| best.iter().all(|&v| u == v || !adjacency[u].contains(&v))));
    best
}
