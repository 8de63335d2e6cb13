//! Edge sets of `n`-balanced 3-partite 3-graphs without `s` disjoint edges
//! have at most `(s - 1) n^2` edges.

use rayon::prelude::*;

use super::search::{run_randomized, Landscape};
use super::{finish, Acc, LemmaVerdict, Mode, SearchMode, WitnessData};
use crate::error::{Error, Result};
use crate::matching::{max_matching, tripartite_graph, Cell};

const EXHAUSTIVE_MAX_N: usize = 2;
const RANDOMIZED_MAX_N: usize = 4;

struct Grid {
    n: usize,
    s: usize,
    /// For each cell, the cells sharing no coordinate with it.
    disjoint: Vec<u64>,
}

impl Grid {
    fn new(n: usize, s: usize) -> Self {
        let cells: Vec<Cell> = (0..n * n * n)
            .map(|c| (c / (n * n), c / n % n, c % n))
            .collect();
        let disjoint = cells
            .iter()
            .map(|&(a, b, c)| {
                cells
                    .iter()
                    .enumerate()
                    .filter(|(_, &(x, y, z))| a != x && b != y && c != z)
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Grid { n, s, disjoint }
    }

    fn cell(&self, c: usize) -> Cell {
        let n = self.n;
        (c / (n * n), c / n % n, c % n)
    }

    fn cells_of(&self, mask: u64) -> Vec<Cell> {
        (0..self.n.pow(3))
            .filter(|&c| mask >> c & 1 == 1)
            .map(|c| self.cell(c))
            .collect()
    }

    /// Whether `mask` contains `k` pairwise disjoint cells.
    fn has_disjoint(&self, mask: u64, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if (mask.count_ones() as usize) < k {
            return false;
        }
        let c = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << c);
        self.has_disjoint(rest & self.disjoint[c], k - 1) || self.has_disjoint(rest, k)
    }
}

impl Landscape for Grid {
    type State = u64;

    fn item_count(&self) -> usize {
        self.n.pow(3)
    }
    fn empty(&self) -> u64 {
        0
    }
    fn contains(&self, s: &u64, item: usize) -> bool {
        s >> item & 1 == 1
    }
    fn can_add(&self, s: &u64, item: usize) -> bool {
        !self.has_disjoint(s & self.disjoint[item], self.s - 1)
    }
    fn toggle(&self, s: &mut u64, item: usize) {
        *s ^= 1 << item;
    }
    fn value(&self, s: &u64) -> i64 {
        s.count_ones() as i64
    }
}

/// Exhaustive over all `2^(n^3)` edge sets for `n <= 2`; seeded random
/// maximal families plus hill climbing for `n <= 4`.
pub fn verify_aharoni_howard(n: usize, s: usize, mode: SearchMode) -> Result<LemmaVerdict> {
    if n == 0 || n > RANDOMIZED_MAX_N {
        return Err(Error::InvalidParameters(format!(
            "part size {n} outside 1..={RANDOMIZED_MAX_N}"
        )));
    }
    if s == 0 || s > n + 1 {
        return Err(Error::InvalidParameters(format!(
            "s = {s} outside 1..={}",
            n + 1
        )));
    }
    let grid = Grid::new(n, s);
    let bound = ((s - 1) * n * n) as i64;
    let mode = mode.resolve(n <= EXHAUSTIVE_MAX_N)?;
    let acc = match mode {
        Mode::Exhaustive => {
            let bits = n.pow(3) as u32;
            let acc = (0u64..1 << bits)
                .into_par_iter()
                .map(|mask| {
                    let mut acc = Acc::new(bound);
                    acc.covered = 1;
                    if !grid.has_disjoint(mask, s) {
                        acc.offer(mask, mask.count_ones() as i64, || mask);
                    }
                    acc
                })
                .reduce(|| Acc::new(bound), Acc::merge);
            assert_eq!(acc.covered, 1 << bits);
            acc
        }
        Mode::Randomized {
            samples,
            restarts,
            seed,
        } => run_randomized(&grid, samples, restarts, seed, bound, |&m| m),
    };
    let universe = match mode {
        Mode::Exhaustive => format!("all edge sets of the {n}-balanced 3-partite grid"),
        _ => format!("random maximal edge sets of the {n}-balanced 3-partite grid"),
    };
    Ok(finish(
        "aharoni-howard",
        vec![("n".into(), n as i64), ("s".into(), s as i64)],
        universe,
        mode,
        acc,
        |&m| WitnessData::Cells {
            part_size: n,
            cells: grid.cells_of(m),
        },
        |&m| {
            let h = tripartite_graph(&grid.cells_of(m), n).map_err(|e| e.to_string())?;
            if max_matching(&h).size >= s {
                return Err(format!("witness has {s} disjoint edges"));
            }
            Ok(h.edge_count() as i64)
        },
    ))
}
