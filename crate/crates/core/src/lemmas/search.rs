//! Seeded random-maximal sampling and hill climbing over monotone
//! hypothesis-constrained families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Acc;

/// Samples per independently seeded chunk.
const CHUNK: u64 = 4096;
/// Improvement attempts per hill-climbing restart.
const CLIMB_STEPS: usize = 2000;

/// A family of configurations built from items, where feasibility is closed
/// under taking subsets and the score is to be maximised.
pub(crate) trait Landscape: Sync {
    type State: Clone + Send;

    fn item_count(&self) -> usize;
    fn empty(&self) -> Self::State;
    fn contains(&self, s: &Self::State, item: usize) -> bool;
    /// Whether adding `item` keeps the hypotheses satisfied.
    fn can_add(&self, s: &Self::State, item: usize) -> bool;
    fn toggle(&self, s: &mut Self::State, item: usize);
    fn value(&self, s: &Self::State) -> i64;
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn fill_random<L: Landscape>(
    land: &L,
    s: &mut L::State,
    order: &mut [usize],
    rng: &mut ChaCha8Rng,
) {
    order.shuffle(rng);
    for &item in order.iter() {
        if !land.contains(s, item) && land.can_add(s, item) {
            land.toggle(s, item);
        }
    }
}

/// A uniformly shuffled greedy maximal configuration.
pub(crate) fn random_maximal<L: Landscape>(land: &L, rng: &mut ChaCha8Rng) -> L::State {
    let mut order: Vec<usize> = (0..land.item_count()).collect();
    let mut s = land.empty();
    fill_random(land, &mut s, &mut order, rng);
    s
}

/// Remove one or two random members, refill greedily in random order, keep
/// the move unless the score drops.
pub(crate) fn hill_climb<L: Landscape>(land: &L, rng: &mut ChaCha8Rng) -> L::State {
    let mut order: Vec<usize> = (0..land.item_count()).collect();
    let mut cur = random_maximal(land, rng);
    let mut cur_value = land.value(&cur);
    for _ in 0..CLIMB_STEPS {
        let members: Vec<usize> = (0..land.item_count())
            .filter(|&i| land.contains(&cur, i))
            .collect();
        if members.is_empty() {
            break;
        }
        let mut next = cur.clone();
        for _ in 0..rng.gen_range(1..=2) {
            let item = members[rng.gen_range(0..members.len())];
            if land.contains(&next, item) {
                land.toggle(&mut next, item);
            }
        }
        fill_random(land, &mut next, &mut order, rng);
        let v = land.value(&next);
        if v >= cur_value {
            cur = next;
            cur_value = v;
        }
    }
    cur
}

/// `samples` random maximal configurations followed by `restarts` hill
/// climbs. Sample `k` draws from stream `k / CHUNK`; restart `r` from its own
/// stream after the sampling streams, so the result depends only on `seed`.
pub(crate) fn run_randomized<L, W, F>(
    land: &L,
    samples: u64,
    restarts: usize,
    seed: u64,
    bound: i64,
    witness: F,
) -> Acc<W>
where
    L: Landscape,
    W: Clone + Send,
    F: Fn(&L::State) -> W + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let sampled = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = stream_rng(seed, c);
            let mut acc = Acc::new(bound);
            let end = ((c + 1) * CHUNK).min(samples);
            for k in c * CHUNK..end {
                let s = random_maximal(land, &mut rng);
                acc.covered += 1;
                acc.offer(k, land.value(&s), || witness(&s));
            }
            acc
        })
        .reduce(|| Acc::new(bound), Acc::merge);
    let climbed = (0..restarts as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(seed, chunks + r);
            let s = hill_climb(land, &mut rng);
            let mut acc = Acc::new(bound);
            acc.covered += 1;
            acc.offer(samples + r, land.value(&s), || witness(&s));
            acc
        })
        .reduce(|| Acc::new(bound), Acc::merge);
    sampled.merge(climbed)
}
