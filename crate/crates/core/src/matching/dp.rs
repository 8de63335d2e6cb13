//! Subset dynamic programming over covered-vertex sets.
//!
//! Both searches always extend from the lowest vertex still available, so the
//! only edges ever tried from a state are those whose smallest vertex is that
//! lowest vertex.

use crate::hypergraph::{Hypergraph3, Triple};

pub const DP_MAX_VERTICES: usize = 24;

fn edges_by_min(h: &Hypergraph3) -> Vec<Vec<u32>> {
    let mut by_min = vec![Vec::new(); h.n()];
    for e in h.edges() {
        by_min[e[0]].push((1u32 << e[0]) | (1 << e[1]) | (1 << e[2]));
    }
    by_min
}

fn mask_to_triple(mask: u32) -> Triple {
    let mut out = [0; 3];
    let mut m = mask;
    for slot in &mut out {
        *slot = m.trailing_zeros() as usize;
        m &= m - 1;
    }
    out
}

/// A perfect matching of `h`, if any. Requires `h.n() <= DP_MAX_VERTICES`.
pub fn perfect_matching_dp(h: &Hypergraph3) -> Option<Vec<Triple>> {
    let n = h.n();
    assert!(
        n <= DP_MAX_VERTICES,
        "subset DP limited to {DP_MAX_VERTICES} vertices"
    );
    if !n.is_multiple_of(3) {
        return None;
    }
    let by_min = edges_by_min(h);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    // dead[mask] set once the uncovered set `mask` is known to have no PM.
    let mut dead = vec![0u64; ((1usize << n) >> 6) + 1];
    let mut chosen = Vec::new();

    fn solve(mask: u32, by_min: &[Vec<u32>], dead: &mut [u64], chosen: &mut Vec<u32>) -> bool {
        if mask == 0 {
            return true;
        }
        let idx = mask as usize;
        if dead[idx >> 6] >> (idx & 63) & 1 == 1 {
            return false;
        }
        let v = mask.trailing_zeros() as usize;
        for &e in &by_min[v] {
            if e & mask == e {
                chosen.push(e);
                if solve(mask ^ e, by_min, dead, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        dead[idx >> 6] |= 1 << (idx & 63);
        false
    }

    solve(full, &by_min, &mut dead, &mut chosen)
        .then(|| chosen.into_iter().map(mask_to_triple).collect())
}

/// A maximum matching of `h`. Requires `h.n() <= DP_MAX_VERTICES`.
pub fn max_matching_dp(h: &Hypergraph3) -> Vec<Triple> {
    let n = h.n();
    assert!(
        n <= DP_MAX_VERTICES,
        "subset DP limited to {DP_MAX_VERTICES} vertices"
    );
    let by_min = edges_by_min(h);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    const UNKNOWN: u8 = u8::MAX;
    let mut memo = vec![UNKNOWN; 1usize << n];

    fn best(mask: u32, by_min: &[Vec<u32>], memo: &mut [u8]) -> u8 {
        if mask.count_ones() < 3 {
            return 0;
        }
        if memo[mask as usize] != UNKNOWN {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let mut value = best(mask & !(1 << v), by_min, memo);
        for &e in &by_min[v] {
            if e & mask == e {
                value = value.max(1 + best(mask ^ e, by_min, memo));
            }
        }
        memo[mask as usize] = value;
        value
    }

    let target = best(full, &by_min, &mut memo);
    // Walk the memo table back to recover one optimal matching.
    let mut out = Vec::new();
    let mut mask = full;
    let mut left = target;
    while left > 0 {
        let v = mask.trailing_zeros() as usize;
        if best(mask & !(1 << v), &by_min, &mut memo) == left {
            mask &= !(1 << v);
            continue;
        }
        let e = by_min[v]
            .iter()
            .copied()
            .find(|&e| e & mask == e && 1 + best(mask ^ e, &by_min, &mut memo) == left)
            .expect("memo table inconsistent");
        out.push(mask_to_triple(e));
        mask ^= e;
        left -= 1;
    }
    out
}
