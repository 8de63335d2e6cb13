//! 3-balanced 3-partite 3-graphs with parts `{u_1, u_2, v}` in which no edge
//! holds two of the `v` vertices. Index 2 in each coordinate is `v`.

use rayon::prelude::*;

use super::{finish, Acc, LemmaVerdict, Mode, WitnessData};
use crate::matching::{has_pm_3partite, perfect_matching_dp, permutations, tripartite_graph, Cell};

const V: usize = 2;
const BITS: u32 = 20;
const CHUNK_BITS: u32 = 14;

/// The 20 cells of the `3 x 3 x 3` grid with at most one `v` coordinate, in
/// lexicographic order.
pub fn kpartite_allowed_cells() -> Vec<Cell> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if [i, j, k].iter().filter(|&&c| c == V).count() <= 1 {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Masks over the allowed cells of every perfect matching using only allowed
/// cells.
fn candidate_pms(cells: &[Cell]) -> Vec<u32> {
    let perms = permutations(3);
    let mut out = Vec::new();
    for s in &perms {
        for t in &perms {
            let mask = (0..3).try_fold(0u32, |m, i| {
                let pos = cells.iter().position(|&c| c == (i, s[i], t[i]))?;
                Some(m | 1 << pos)
            });
            if let Some(m) = mask {
                out.push(m);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn cells_of(mask: u32, cells: &[Cell]) -> Vec<Cell> {
    (0..cells.len())
        .filter(|&b| mask >> b & 1 == 1)
        .map(|b| cells[b])
        .collect()
}

/// Runs `score` over every PM-free subset of the allowed cells.
fn enumerate(bound: i64, score: impl Fn(u32) -> i64 + Sync) -> Acc<u32> {
    let cells = kpartite_allowed_cells();
    assert_eq!(cells.len(), BITS as usize);
    let pms = candidate_pms(&cells);
    let acc = (0u32..1 << (BITS - CHUNK_BITS))
        .into_par_iter()
        .map(|hi| {
            let mut acc = Acc::new(bound);
            for lo in 0u32..1 << CHUNK_BITS {
                let mask = hi << CHUNK_BITS | lo;
                acc.covered += 1;
                if pms.iter().all(|&pm| mask & pm != pm) {
                    acc.offer(mask as u64, score(mask), || mask);
                }
            }
            acc
        })
        .reduce(|| Acc::new(bound), Acc::merge);
    assert_eq!(acc.covered, 1 << BITS);
    acc
}

/// Independent re-check: allowed cells, no PM by two separate solvers, and
/// the flattened graph handed to `value`.
fn recheck(
    cells: &[Cell],
    value: impl Fn(&crate::hypergraph::Hypergraph3) -> i64,
) -> std::result::Result<i64, String> {
    if cells
        .iter()
        .any(|&(i, j, k)| (i == V) as u8 + (j == V) as u8 + (k == V) as u8 > 1)
    {
        return Err("cell with two v vertices".into());
    }
    let h = tripartite_graph(cells, 3).map_err(|e| e.to_string())?;
    let by_perm = has_pm_3partite(cells, 3).map_err(|e| e.to_string())?;
    let by_dp = perfect_matching_dp(&h).is_some();
    if by_perm != by_dp {
        return Err("perfect matching solvers disagree".into());
    }
    if by_perm {
        return Err("witness has a perfect matching".into());
    }
    Ok(value(&h))
}

/// PM-free subsets of the 20 allowed cells have at most 16 edges.
pub fn verify_kpartite_nopm_bound() -> LemmaVerdict {
    let cells = kpartite_allowed_cells();
    let acc = enumerate(16, |m| m.count_ones() as i64);
    finish(
        "kpartite-16",
        vec![("k".into(), 3)],
        "subsets of the 20 allowed cells of the 3x3x3 grid".into(),
        Mode::Exhaustive,
        acc,
        |&m| WitnessData::Cells {
            part_size: 3,
            cells: cells_of(m, &cells),
        },
        |&m| recheck(&cells_of(m, &cells), |h| h.edge_count() as i64),
    )
}

/// PM-free subsets satisfy `2 d(v^3) + d(u_1^3) + d(u_2^3) <= 20`.
pub fn verify_weighted_degree_bound() -> LemmaVerdict {
    let cells = kpartite_allowed_cells();
    let v3: u32 = (0..cells.len())
        .filter(|&b| cells[b].2 == V)
        .fold(0, |m, b| m | 1 << b);
    let acc = enumerate(20, |m| (m.count_ones() + (m & v3).count_ones()) as i64);
    finish(
        "weighted-20",
        vec![("k".into(), 3)],
        "subsets of the 20 allowed cells of the 3x3x3 grid".into(),
        Mode::Exhaustive,
        acc,
        |&m| WitnessData::Cells {
            part_size: 3,
            cells: cells_of(m, &cells),
        },
        |&m| {
            recheck(&cells_of(m, &cells), |h| {
                let d = |v| h.degree(v).expect("vertex in range");
                (2 * d(6 + V) + d(6) + d(7)) as i64
            })
        },
    )
}
