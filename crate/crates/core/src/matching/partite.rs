//! Perfect matchings in balanced 3-partite 3-graphs and in bipartite links.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, LinkGraph, Vertex};

/// A cell `(i, j, k)`: the edge using vertex `i` of part 1, `j` of part 2 and
/// `k` of part 3.
pub type Cell = (usize, usize, usize);

pub const TRIPARTITE_MAX_PART: usize = 4;

pub(crate) fn permutations(p: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; p], &mut out);
    out
}

/// Whether the `p`-balanced 3-partite 3-graph with the given cells has a
/// perfect matching, by trying all `p! * p!` permutation pairs.
pub fn has_pm_3partite(cells: &[Cell], p: usize) -> Result<bool> {
    if p > TRIPARTITE_MAX_PART {
        return Err(Error::InvalidParameters(format!(
            "part size {p} exceeds {TRIPARTITE_MAX_PART}"
        )));
    }
    if let Some(c) = cells.iter().find(|c| c.0 >= p || c.1 >= p || c.2 >= p) {
        return Err(Error::InvalidParameters(format!(
            "cell {c:?} outside parts of size {p}"
        )));
    }
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let perms = permutations(p);
    Ok(perms.iter().any(|s| {
        perms
            .iter()
            .any(|t| (0..p).all(|i| set.contains(&(i, s[i], t[i]))))
    }))
}

/// The 3-partite cells flattened onto `3p` vertices: part `q` occupies
/// `q*p .. (q+1)*p`.
pub fn tripartite_graph(cells: &[Cell], p: usize) -> Result<Hypergraph3> {
    Hypergraph3::new(3 * p, cells.iter().map(|&(i, j, k)| [i, p + j, 2 * p + k]))
}

/// Maximum matching of a bipartite 2-graph by augmenting paths. Every pair
/// must have one end in `left` and the other in `right`.
pub fn bipartite_max_matching(
    link: &LinkGraph,
    left: &[Vertex],
    right: &[Vertex],
) -> Result<Vec<(Vertex, Vertex)>> {
    let lset: BTreeMap<Vertex, usize> = left.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rset: BTreeMap<Vertex, usize> = right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if let Some(v) = left.iter().find(|v| rset.contains_key(v)) {
        return Err(Error::Overlap(format!("vertex {v} on both sides")));
    }
    let mut adj = vec![Vec::new(); left.len()];
    for &(p, q) in link.pairs() {
        match (lset.get(&p), rset.get(&q), lset.get(&q), rset.get(&p)) {
            (Some(&l), Some(&r), _, _) | (_, _, Some(&l), Some(&r)) => adj[l].push(r),
            _ => return Err(Error::NotBipartite(p, q)),
        }
    }
    let mut match_r: Vec<Option<usize>> = vec![None; right.len()];

    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if match_r[r].is_none_or(|l2| augment(l2, adj, seen, match_r)) {
                match_r[r] = Some(l);
                return true;
            }
        }
        false
    }

    for l in 0..left.len() {
        let mut seen = vec![false; right.len()];
        augment(l, &adj, &mut seen, &mut match_r);
    }
    let mut out: Vec<(Vertex, Vertex)> = match_r
        .iter()
        .enumerate()
        .filter_map(|(r, l)| l.map(|l| (left[l], right[r])))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Whether a balanced bipartite link has a perfect matching.
pub fn bipartite_pm(link: &LinkGraph, left: &[Vertex], right: &[Vertex]) -> Result<bool> {
    if left.len() != right.len() {
        return Err(Error::InvalidParameters(format!(
            "unbalanced sides {} and {}",
            left.len(),
            right.len()
        )));
    }
    Ok(bipartite_max_matching(link, left, right)?.len() == left.len())
}
