use crate::hypergraph::{LinkGraph, Vertex};

/// A rainbow matching of size `want`: pairwise disjoint pairs taken from
/// `want` distinct graphs, one pair per graph. Returns `(graph index, pair)`
/// entries ordered by graph index, or `None` when no such matching exists.
///
/// Exhaustive backtracking; intended for small universes.
pub fn rainbow_matching(
    graphs: &[LinkGraph],
    want: usize,
) -> Option<Vec<(usize, (Vertex, Vertex))>> {
    if want > graphs.len() {
        return None;
    }

    fn go(
        graphs: &[LinkGraph],
        next: usize,
        want: usize,
        used: &mut Vec<Vertex>,
        chosen: &mut Vec<(usize, (Vertex, Vertex))>,
    ) -> bool {
        if chosen.len() == want {
            return true;
        }
        // Not enough graphs left to reach `want`.
        if graphs.len() - next < want - chosen.len() {
            return false;
        }
        for &(p, q) in graphs[next].pairs() {
            if used.contains(&p) || used.contains(&q) {
                continue;
            }
            used.extend([p, q]);
            chosen.push((next, (p, q)));
            if go(graphs, next + 1, want, used, chosen) {
                return true;
            }
            chosen.pop();
            used.truncate(used.len() - 2);
        }
        go(graphs, next + 1, want, used, chosen)
    }

    let mut chosen = Vec::new();
    go(graphs, 0, want, &mut Vec::new(), &mut chosen).then_some(chosen)
}
