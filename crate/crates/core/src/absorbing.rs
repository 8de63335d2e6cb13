//! Absorbing sets for 3-graphs: an 18-set `T` absorbs a 3-set `A` when both
//! `H[T]` and `H[A ∪ T]` have perfect matchings. A family of pairwise
//! disjoint absorbers carries a matching `M` on its vertices that can be
//! extended over a small leftover set `V'` by routing each 3-set of `V'`
//! through its own absorber.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::binom2;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex};
use crate::matching::{perfect_matching_dp, MatchingCertificate};

/// Size of an absorbing set, `2k^2` for `k = 3`.
pub const ABSORBER_SIZE: usize = 18;
/// Partitions of the leftover set tried before [`absorb`] gives up.
pub const ROUTING_PARTITIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSplit {
    pub epsilon: f64,
    /// `(1/2 + epsilon) * C(n, 2)`.
    pub threshold: f64,
    /// `W'`: vertices of degree at most the threshold.
    pub low: Vec<Vertex>,
    /// `U'`: the rest.
    pub high: Vec<Vertex>,
    /// Whether `sigma_2(H) > (1 + 2 epsilon) * C(n, 2)`.
    pub sigma2_hypothesis: bool,
    /// Edges with at least two vertices in `W'`.
    pub low_pair_edges: Vec<Triple>,
}

impl DegreeSplit {
    /// Under the `sigma_2` hypothesis no edge may hold two `W'` vertices.
    pub fn consistent(&self) -> bool {
        !self.sigma2_hypothesis || self.low_pair_edges.is_empty()
    }
}

pub fn degree_split(h: &Hypergraph3, epsilon: f64) -> Result<DegreeSplit> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidParameters(format!(
            "epsilon = {epsilon} outside (0, 1/2)"
        )));
    }
    let pairs = binom2(h.n() as i64) as f64;
    let threshold = (0.5 + epsilon) * pairs;
    let degrees = h.degrees();
    let (low, high): (Vec<Vertex>, Vec<Vertex>) =
        (0..h.n()).partition(|&v| degrees[v] as f64 <= threshold);
    let is_low: Vec<bool> = degrees.iter().map(|&d| d as f64 <= threshold).collect();
    let low_pair_edges = h
        .edges()
        .iter()
        .copied()
        .filter(|e| e.iter().filter(|&&v| is_low[v]).count() >= 2)
        .collect();
    let sigma2_hypothesis = h
        .sigma2()
        .is_some_and(|s| s as f64 > (1.0 + 2.0 * epsilon) * pairs);
    Ok(DegreeSplit {
        epsilon,
        threshold,
        low,
        high,
        sigma2_hypothesis,
        low_pair_edges,
    })
}

fn check_disjoint(h: &Hypergraph3, parts: &[&[Vertex]]) -> Result<()> {
    let mut seen = vec![false; h.n()];
    for part in parts {
        for &v in *part {
            if v >= h.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: h.n(),
                });
            }
            if seen[v] {
                return Err(Error::Overlap(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
    }
    Ok(())
}

/// A perfect matching of `H[vertices]` in host labels, if one exists.
fn induced_pm(h: &Hypergraph3, vertices: &[Vertex]) -> Result<Option<Vec<Triple>>> {
    let (sub, map) = h.induced(vertices)?;
    Ok(perfect_matching_dp(&sub).map(|m| {
        m.into_iter()
            .map(|e| {
                let mut t = [map[e[0]], map[e[1]], map[e[2]]];
                t.sort_unstable();
                t
            })
            .collect()
    }))
}

/// Exact test of the absorbing property by two subset-DP perfect matching
/// checks, on 18 and on 21 vertices.
pub fn is_absorbing_set(h: &Hypergraph3, a: &[Vertex], t: &[Vertex]) -> Result<bool> {
    if a.len() != 3 || t.len() != ABSORBER_SIZE {
        return Err(Error::InvalidParameters(format!(
            "need |A| = 3 and |T| = {ABSORBER_SIZE}, got {} and {}",
            a.len(),
            t.len()
        )));
    }
    check_disjoint(h, &[a, t])?;
    if induced_pm(h, t)?.is_none() {
        return Ok(false);
    }
    let both: Vec<Vertex> = a.iter().chain(t).copied().collect();
    Ok(induced_pm(h, &both)?.is_some())
}

#[derive(Debug, Clone)]
pub struct AbsorberSearch {
    /// Construction attempts; each yields at most one candidate set.
    pub attempts: usize,
    /// Stop once this many distinct absorbers are found.
    pub want: usize,
    /// Use the neighbour / edge / link-pair construction before falling back
    /// to a uniformly random 18-set. With `false` only random sets are tried.
    pub guided: bool,
    /// Threshold parameter of the `W'`/`U'` split steering the construction.
    pub epsilon: f64,
    /// Vertices no absorber may use.
    pub excluded: BTreeSet<Vertex>,
}

impl Default for AbsorberSearch {
    fn default() -> Self {
        AbsorberSearch {
            attempts: 200,
            want: 1,
            guided: true,
            epsilon: 0.05,
            excluded: BTreeSet::new(),
        }
    }
}

fn pick<R: Rng + ?Sized>(rng: &mut R, preferred: &[Vertex], any: &[Vertex]) -> Option<Vertex> {
    preferred.choose(rng).or_else(|| any.choose(rng)).copied()
}

/// One attempt of the guided construction for `A = {u1, u2, u3}`: neighbours
/// `u4, u5, u6` of `u1, u2, u3`, an edge `{u7, u8, u9}` avoiding them, and
/// disjoint pairs `B_i` with `B_i + u_i` and `B_i + u_{i+3}` both edges for
/// `i = 1..6`. Vertices of `U'` are preferred wherever a choice is made.
fn guided_candidate<R: Rng + ?Sized>(
    h: &Hypergraph3,
    a: &[Vertex],
    high: &[bool],
    blocked: &[bool],
    rng: &mut R,
) -> Option<Vec<Vertex>> {
    let mut used = blocked.to_vec();
    let mut u: Vec<Vertex> = a.to_vec();
    for i in 0..3 {
        let nbrs: Vec<Vertex> = (0..h.n())
            .filter(|&v| !used[v] && !u.contains(&v) && h.are_adjacent(u[i], v).unwrap_or(false))
            .collect();
        let preferred: Vec<Vertex> = nbrs.iter().copied().filter(|&v| high[v]).collect();
        let v = pick(rng, &preferred, &nbrs)?;
        u.push(v);
    }
    for &v in &u {
        used[v] = true;
    }
    let free_edges: Vec<Triple> = h
        .edges()
        .iter()
        .copied()
        .filter(|e| e.iter().all(|&v| !used[v]))
        .collect();
    let preferred: Vec<Triple> = free_edges
        .iter()
        .copied()
        .filter(|e| e.iter().all(|&v| high[v]))
        .collect();
    let e = *preferred.choose(rng).or_else(|| free_edges.choose(rng))?;
    for v in e {
        used[v] = true;
        u.push(v);
    }
    let mut t: Vec<Vertex> = u[3..].to_vec();
    for i in 0..6 {
        let (x, y) = (u[i], u[i + 3]);
        let free: Vec<Vertex> = (0..h.n()).filter(|&v| !used[v]).collect();
        let mut pairs = Vec::new();
        for (k, &p) in free.iter().enumerate() {
            for &q in &free[k + 1..] {
                if h.contains_edge([x, p, q]) && h.contains_edge([y, p, q]) {
                    pairs.push((p, q));
                }
            }
        }
        let &(p, q) = pairs.choose(rng)?;
        used[p] = true;
        used[q] = true;
        t.extend([p, q]);
    }
    t.sort_unstable();
    Some(t)
}

fn blind_candidate<R: Rng + ?Sized>(
    n: usize,
    blocked: &[bool],
    rng: &mut R,
) -> Option<Vec<Vertex>> {
    let free: Vec<Vertex> = (0..n).filter(|&v| !blocked[v]).collect();
    if free.len() < ABSORBER_SIZE {
        return None;
    }
    let mut t: Vec<Vertex> = free.choose_multiple(rng, ABSORBER_SIZE).copied().collect();
    t.sort_unstable();
    Some(t)
}

/// Distinct verified absorbing 18-sets for `a`, avoiding `opts.excluded`.
/// An empty result means none was found within the budget, not that none
/// exists.
pub fn find_absorbers<R: Rng + ?Sized>(
    h: &Hypergraph3,
    a: &[Vertex],
    opts: &AbsorberSearch,
    rng: &mut R,
) -> Result<Vec<Vec<Vertex>>> {
    if a.len() != 3 {
        return Err(Error::InvalidParameters(format!(
            "|A| = {}, expected 3",
            a.len()
        )));
    }
    check_disjoint(h, &[a])?;
    let split = degree_split(h, opts.epsilon)?;
    let mut high = vec![false; h.n()];
    for &v in &split.high {
        high[v] = true;
    }
    let mut blocked = vec![false; h.n()];
    for &v in a.iter().chain(opts.excluded.iter().filter(|&&v| v < h.n())) {
        blocked[v] = true;
    }
    let mut found: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..opts.attempts {
        if out.len() >= opts.want {
            break;
        }
        let candidate = if opts.guided {
            guided_candidate(h, a, &high, &blocked, rng)
                .or_else(|| blind_candidate(h.n(), &blocked, rng))
        } else {
            blind_candidate(h.n(), &blocked, rng)
        };
        let Some(t) = candidate else { continue };
        if found.contains(&t) {
            continue;
        }
        if is_absorbing_set(h, a, &t)? {
            found.insert(t.clone());
            out.push(t);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Absorber {
    pub vertices: Vec<Vertex>,
    /// Perfect matching of `H[T]`.
    pub matching: Vec<Triple>,
    /// Sampled 3-sets this absorber was verified to absorb.
    pub tags: Vec<Triple>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coverage {
    pub samples: Vec<Triple>,
    /// Absorbers in the family verified for each sample.
    pub counts: Vec<usize>,
    pub target: usize,
    /// Fraction of samples with at least `target` absorbers.
    pub fraction: f64,
    pub min_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbsorberFamily {
    pub k: usize,
    pub host_n: usize,
    pub sets: Vec<Absorber>,
    /// Union of the absorbers' matchings: a perfect matching of
    /// `H[V(family)]`.
    pub matching: Vec<Triple>,
    pub coverage: Coverage,
    pub seed: u64,
    pub restart: usize,
}

impl AbsorberFamily {
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.sets
            .iter()
            .flat_map(|s| s.vertices.iter().copied())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct FamilyOptions {
    pub search: AbsorberSearch,
    /// Upper limit on the number of absorbers; by default as many as fit
    /// while leaving at least six vertices outside the family.
    pub max_sets: Option<usize>,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            search: AbsorberSearch::default(),
            max_sets: None,
            restarts: 4,
            seed: crate::DEFAULT_SEED,
        }
    }
}

fn random_triple<R: Rng + ?Sized>(pool: &[Vertex], rng: &mut R) -> Option<Triple> {
    if pool.len() < 3 {
        return None;
    }
    let mut t = [0; 3];
    for (slot, &v) in t.iter_mut().zip(pool.choose_multiple(rng, 3)) {
        *slot = v;
    }
    t.sort_unstable();
    Some(t)
}

fn build_once(
    h: &Hypergraph3,
    sample_count: usize,
    target: usize,
    opts: &FamilyOptions,
    restart: usize,
) -> Result<AbsorberFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(restart as u64);
    let cap = opts
        .max_sets
        .unwrap_or(h.n().saturating_sub(6) / ABSORBER_SIZE);
    let mut used: BTreeSet<Vertex> = opts.search.excluded.clone();
    let mut sets: Vec<Absorber> = Vec::new();
    let mut stalls = 0;
    while sets.len() < cap && stalls < 8 {
        let pool: Vec<Vertex> = (0..h.n()).filter(|v| !used.contains(v)).collect();
        let Some(probe) = random_triple(&pool, &mut rng) else {
            break;
        };
        let mut search = opts.search.clone();
        search.want = 1;
        search.excluded = used.clone();
        match find_absorbers(h, &probe, &search, &mut rng)?.pop() {
            Some(t) => {
                let matching = induced_pm(h, &t)?.expect("verified absorber");
                used.extend(t.iter().copied());
                sets.push(Absorber {
                    vertices: t,
                    matching,
                    tags: Vec::new(),
                });
                stalls = 0;
            }
            None => stalls += 1,
        }
    }
    let family_vertices: BTreeSet<Vertex> = sets
        .iter()
        .flat_map(|s| s.vertices.iter().copied())
        .collect();
    let rest: Vec<Vertex> = (0..h.n())
        .filter(|v| !family_vertices.contains(v))
        .collect();
    let samples: Vec<Triple> = (0..sample_count)
        .map_while(|_| random_triple(&rest, &mut rng))
        .collect();
    let mut counts = vec![0; samples.len()];
    for set in &mut sets {
        for (i, a) in samples.iter().enumerate() {
            if is_absorbing_set(h, a, &set.vertices)? {
                counts[i] += 1;
                if !set.tags.contains(a) {
                    set.tags.push(*a);
                }
            }
        }
        set.tags.sort_unstable();
    }
    let covered = counts.iter().filter(|&&c| c >= target).count();
    let fraction = if samples.is_empty() {
        0.0
    } else {
        covered as f64 / samples.len() as f64
    };
    let mut matching: Vec<Triple> = sets.iter().flat_map(|s| s.matching.clone()).collect();
    matching.sort_unstable();
    Ok(AbsorberFamily {
        k: 3,
        host_n: h.n(),
        sets,
        matching,
        coverage: Coverage {
            min_count: counts.iter().copied().min().unwrap_or(0),
            samples,
            counts,
            target,
            fraction,
        },
        seed: opts.seed,
        restart,
    })
}

/// Greedy family of pairwise disjoint absorbers with seeded restarts. Each
/// absorber is grown around a random probe 3-set of the still unused
/// vertices. Quality is then measured on `sample_count` random 3-sets outside
/// the family, the only sets absorption ever has to handle; the restart with
/// the best (coverage fraction, minimum count, family size) is kept.
pub fn build_family(
    h: &Hypergraph3,
    sample_count: usize,
    per_a_target: usize,
    opts: &FamilyOptions,
) -> Result<AbsorberFamily> {
    let mut best: Option<AbsorberFamily> = None;
    for restart in 0..opts.restarts.max(1) {
        let fam = build_once(h, sample_count, per_a_target, opts, restart)?;
        let key = |f: &AbsorberFamily| (f.coverage.fraction, f.coverage.min_count, f.sets.len());
        if best.as_ref().is_none_or(|b| key(&fam) > key(b)) {
            best = Some(fam);
        }
        if best
            .as_ref()
            .is_some_and(|b| b.coverage.fraction >= 1.0 && !b.sets.is_empty())
        {
            break;
        }
    }
    Ok(best.expect("at least one restart"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub triple: Triple,
    pub absorber: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Absorption {
    pub certificate: MatchingCertificate,
    pub routes: Vec<Route>,
    pub partitions_tried: usize,
}

/// Assigns each triple to a distinct absorber among `ok[t]` by augmenting
/// paths.
fn assign(ok: &[Vec<usize>], absorbers: usize) -> Option<Vec<usize>> {
    fn augment(
        t: usize,
        ok: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &j in &ok[t] {
            if !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|t2| augment(t2, ok, seen, owner)) {
                    owner[j] = Some(t);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; absorbers];
    for t in 0..ok.len() {
        if !augment(t, ok, &mut vec![false; absorbers], &mut owner) {
            return None;
        }
    }
    let mut out = vec![0; ok.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(t) = o {
            out[*t] = j;
        }
    }
    Some(out)
}

/// Extends the family's matching over `v_prime`: a matching of `H` covering
/// exactly `V(M) ∪ V'`. Partitions of `V'` into 3-sets are tried in a seeded
/// order (sorted order first), and the 3-sets are assigned to distinct
/// absorbers by bipartite matching.
pub fn absorb(
    h: &Hypergraph3,
    family: &AbsorberFamily,
    v_prime: &[Vertex],
    seed: u64,
) -> Result<Absorption> {
    if !v_prime.len().is_multiple_of(3) {
        return Err(Error::NotDivisibleByThree(v_prime.len()));
    }
    check_disjoint(h, &[v_prime])?;
    let fam_vertices = family.vertices();
    if let Some(v) = v_prime.iter().find(|v| fam_vertices.contains(v)) {
        return Err(Error::Overlap(format!("vertex {v} lies in an absorber")));
    }
    let needed = v_prime.len() / 3;
    if needed > family.sets.len() {
        return Err(Error::NotEnoughAbsorbers {
            needed,
            available: family.sets.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = v_prime.to_vec();
    order.sort_unstable();
    let mut cache: std::collections::BTreeMap<(Triple, usize), bool> = Default::default();
    for attempt in 0..ROUTING_PARTITIONS {
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        let triples: Vec<Triple> = order
            .chunks(3)
            .map(|c| {
                let mut t = [c[0], c[1], c[2]];
                t.sort_unstable();
                t
            })
            .collect();
        let mut ok = Vec::with_capacity(triples.len());
        for &t in &triples {
            let mut row = Vec::new();
            for (j, set) in family.sets.iter().enumerate() {
                let hit = match cache.get(&(t, j)) {
                    Some(&b) => b,
                    None => {
                        let b = is_absorbing_set(h, &t, &set.vertices)?;
                        cache.insert((t, j), b);
                        b
                    }
                };
                if hit {
                    row.push(j);
                }
            }
            ok.push(row);
        }
        let Some(assignment) = assign(&ok, family.sets.len()) else {
            continue;
        };
        let mut edges = Vec::new();
        let mut routed = vec![None; family.sets.len()];
        for (i, &j) in assignment.iter().enumerate() {
            routed[j] = Some(triples[i]);
        }
        for (j, set) in family.sets.iter().enumerate() {
            match routed[j] {
                Some(t) => {
                    let both: Vec<Vertex> = t.iter().chain(&set.vertices).copied().collect();
                    let m = induced_pm(h, &both)?.ok_or_else(|| {
                        Error::InvalidMatching("absorber lost its matching".into())
                    })?;
                    edges.extend(m);
                }
                None => edges.extend(set.matching.iter().copied()),
            }
        }
        let certificate = MatchingCertificate::verify(h, edges)?;
        let expected: BTreeSet<Vertex> = fam_vertices.iter().chain(v_prime).copied().collect();
        if certificate.covered.iter().copied().collect::<BTreeSet<_>>() != expected {
            return Err(Error::InvalidMatching(
                "absorbed matching does not cover V(M) and V' exactly".into(),
            ));
        }
        let routes = assignment
            .iter()
            .enumerate()
            .map(|(i, &j)| Route {
                triple: triples[i],
                absorber: j,
            })
            .collect();
        return Ok(Absorption {
            certificate,
            routes,
            partitions_tried: attempt + 1,
        });
    }
    Err(Error::RoutingFailure(ROUTING_PARTITIONS))
}
