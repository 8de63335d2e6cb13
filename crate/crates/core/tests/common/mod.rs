#![allow(dead_code)]

use hypermatch::{Hypergraph3, Triple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, p: f64, seed: u64) -> Hypergraph3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Hypergraph3::random(n, p, &mut rng)
}

/// Maximum matching by plain recursion on the lowest undecided vertex: it is
/// either left unmatched or covered by one of its edges.
pub fn naive_max_matching(h: &Hypergraph3) -> usize {
    fn go(h: &Hypergraph3, v: usize, used: &mut Vec<bool>) -> usize {
        let Some(v) = (v..h.n()).find(|&u| !used[u]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(h, v + 1, used);
        for e in h.edges() {
            if e.contains(&v) && e.iter().all(|&u| u == v || !used[u]) {
                for &u in e {
                    used[u] = true;
                }
                best = best.max(1 + go(h, v + 1, used));
                for &u in e {
                    if u != v {
                        used[u] = false;
                    }
                }
            }
        }
        used[v] = false;
        best
    }
    go(h, 0, &mut vec![false; h.n()])
}

/// Largest vertex set meeting every edge at most once, over all subsets.
pub fn naive_independence(h: &Hypergraph3) -> usize {
    let n = h.n();
    (0u32..1 << n)
        .filter(|&s| {
            h.edges()
                .iter()
                .all(|e| e.iter().filter(|&&v| s >> v & 1 == 1).count() <= 1)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_matching(h: &Hypergraph3, edges: &[Triple]) -> bool {
    let mut seen = vec![false; h.n()];
    edges.iter().all(|e| {
        h.contains_edge(*e)
            && e.iter().all(|&v| {
                let fresh = !seen[v];
                seen[v] = true;
                fresh
            })
    })
}
