//! Canonical 3-uniform hypergraphs and the exact invariants computed on them.
//!
//! Vertices are dense integers `0..n`. Edges are strictly increasing triples
//! stored in lexicographic order, together with a per-vertex incidence index
//! so link extraction costs `O(deg(v))`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::independence;

pub type Vertex = usize;
pub type Triple = [Vertex; 3];

/// Sorts a triple, rejecting repeated vertices.
pub fn canonical_triple(t: [Vertex; 3]) -> Result<Triple> {
    let mut s = t;
    s.sort_unstable();
    if s[0] == s[1] || s[1] == s[2] {
        return Err(Error::RepeatedVertex(t));
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<Triple>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph3 {
    pub fn new<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut edges = Vec::new();
        for t in triples {
            for &v in &t {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push(canonical_triple(t)?);
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted(n, edges))
    }

    /// Builds from triples already known to be canonical, sorted and unique.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Triple>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Hypergraph3 {
            n,
            edges,
            incidence,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Self::from_sorted(n, edges)
    }

    /// Binomial random 3-graph: each triple is an edge with probability `p`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if rng.gen_bool(p.clamp(0.0, 1.0)) {
                        edges.push([a, b, c]);
                    }
                }
            }
        }
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    /// Indices (into [`Self::edges`]) of the edges containing `v`.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v]
    }

    pub fn contains_edge(&self, t: [Vertex; 3]) -> bool {
        match canonical_triple(t) {
            Ok(c) => self.edges.binary_search(&c).is_ok(),
            Err(_) => false,
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// `|N(u, v)|`: the number of edges containing both `u` and `v`.
    pub fn codegree(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check_pair(u, v)?;
        let (a, b) = if self.incidence[u].len() <= self.incidence[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        Ok(self.incidence[a]
            .iter()
            .filter(|&&i| self.edges[i].contains(&b))
            .count())
    }

    /// The common neighbourhood `N(u, v)`.
    pub fn pair_neighbourhood(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_pair(u, v)?;
        let mut out: Vec<Vertex> = self.incidence[u]
            .iter()
            .map(|&i| self.edges[i])
            .filter(|e| e.contains(&v))
            .map(|e| e.iter().copied().find(|&w| w != u && w != v).unwrap())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> Result<bool> {
        Ok(self.codegree(u, v)? > 0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self)
    }

    /// Minimum `deg(u) + deg(v)` over adjacent pairs; `None` without edges.
    pub fn sigma2(&self) -> Option<usize> {
        self.sigma2_witness().map(|(s, _, _)| s)
    }

    /// Like [`Self::sigma2`] but also returns a pair attaining the minimum
    /// (lexicographically smallest such pair).
    pub fn sigma2_witness(&self) -> Option<(usize, Vertex, Vertex)> {
        let deg = self.degrees();
        let mut best: Option<(usize, Vertex, Vertex)> = None;
        for e in &self.edges {
            for (u, v) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
                let s = deg[u] + deg[v];
                let cand = (s, u, v);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        best
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n)
            .filter(|&v| self.incidence[v].is_empty())
            .collect()
    }

    /// `L_v(A)`: pairs `uw` inside `A` with `{u, v, w}` an edge.
    pub fn link(&self, v: Vertex, a: &[Vertex]) -> Result<LinkGraph> {
        self.check_vertex(v)?;
        let set = self.vertex_set(a)?;
        if set.contains(&v) {
            return Err(Error::Overlap(format!("vertex {v} lies in A")));
        }
        let pairs = self.incidence[v]
            .iter()
            .filter_map(|&i| {
                let mut it = self.edges[i].iter().copied().filter(|&w| w != v);
                let (p, q) = (it.next().unwrap(), it.next().unwrap());
                (set.contains(&p) && set.contains(&q)).then_some((p, q))
            })
            .collect();
        Ok(LinkGraph::from_parts(set.into_iter().collect(), pairs))
    }

    /// `L_v(A, B)`: pairs `uw` with `u` in `A`, `w` in `B` and `{u, v, w}` an edge.
    pub fn link_bipartite(&self, v: Vertex, a: &[Vertex], b: &[Vertex]) -> Result<LinkGraph> {
        self.check_vertex(v)?;
        let sa = self.vertex_set(a)?;
        let sb = self.vertex_set(b)?;
        if sa.contains(&v) || sb.contains(&v) {
            return Err(Error::Overlap(format!("vertex {v} lies in A or B")));
        }
        if let Some(w) = sa.intersection(&sb).next() {
            return Err(Error::Overlap(format!("vertex {w} lies in both A and B")));
        }
        let pairs = self.incidence[v]
            .iter()
            .filter_map(|&i| {
                let mut it = self.edges[i].iter().copied().filter(|&w| w != v);
                let (p, q) = (it.next().unwrap(), it.next().unwrap());
                let crosses =
                    (sa.contains(&p) && sb.contains(&q)) || (sa.contains(&q) && sb.contains(&p));
                crosses.then_some((p, q))
            })
            .collect();
        let universe = sa.union(&sb).copied().collect();
        Ok(LinkGraph::from_parts(universe, pairs))
    }

    fn vertex_set(&self, a: &[Vertex]) -> Result<BTreeSet<Vertex>> {
        let mut set = BTreeSet::new();
        for &u in a {
            self.check_vertex(u)?;
            set.insert(u);
        }
        Ok(set)
    }

    /// Adjacency rows of the shadow 2-graph: `adj[u]` lists the neighbours of `u`.
    pub fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![BTreeSet::new(); self.n];
        for e in &self.edges {
            for (u, v) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Maximum set of pairwise non-adjacent vertices, with one witness.
    pub fn independence_number(&self) -> (usize, Vec<Vertex>) {
        let witness = independence::maximum_independent_set(self.n, &self.adjacency_lists());
        (witness.len(), witness)
    }

    /// Whether `H` embeds into `H^2_{n, n/3}` on its own vertex set.
    ///
    /// Equivalent to the existence of `n/3 + 1` vertices meeting every edge at
    /// most once; the witness is such a set when one exists, otherwise a
    /// maximum independent set.
    pub fn is_subgraph_of_h2(&self) -> Result<(bool, Vec<Vertex>)> {
        if !self.n.is_multiple_of(3) {
            return Err(Error::NotDivisibleByThree(self.n));
        }
        let need = self.n / 3 + 1;
        let (alpha, mut witness) = self.independence_number();
        if alpha >= need {
            witness.truncate(need);
            Ok((true, witness))
        } else {
            Ok((false, witness))
        }
    }

    /// The sub-hypergraph induced on `vertices`, relabelled to `0..len` in the
    /// given order. Returns the graph and the relabelling (new -> old).
    pub fn induced(&self, vertices: &[Vertex]) -> Result<(Hypergraph3, Vec<Vertex>)> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if local[v] != usize::MAX {
                return Err(Error::Overlap(format!("vertex {v} listed twice")));
            }
            local[v] = i;
        }
        // Each edge is visited once, from its smallest vertex.
        let mut edges = Vec::new();
        for &v in vertices {
            for &i in &self.incidence[v] {
                let e = self.edges[i];
                if e[0] != v {
                    continue;
                }
                if local[e[1]] != usize::MAX && local[e[2]] != usize::MAX {
                    let mut t = [local[e[0]], local[e[1]], local[e[2]]];
                    t.sort_unstable();
                    edges.push(t);
                }
            }
        }
        edges.sort_unstable();
        Ok((Self::from_sorted(vertices.len(), edges), vertices.to_vec()))
    }

    /// Returns a copy with `t` added (no-op when already present).
    pub fn with_edge(&self, t: [Vertex; 3]) -> Result<Hypergraph3> {
        let mut edges = self.edges.clone();
        edges.push(t);
        Hypergraph3::new(self.n, edges)
    }
}

/// Vertex and pair degrees of a hypergraph, precomputed.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    n: usize,
    degrees: Vec<usize>,
    codegrees: Vec<u32>,
}

impl DegreeProfile {
    pub fn new(h: &Hypergraph3) -> Self {
        let n = h.n();
        let mut codegrees = vec![0u32; n * n];
        for e in h.edges() {
            for (u, v) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
                codegrees[u * n + v] += 1;
                codegrees[v * n + u] += 1;
            }
        }
        DegreeProfile {
            n,
            degrees: h.degrees(),
            codegrees,
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn pair_degree(&self, u: Vertex, v: Vertex) -> usize {
        self.codegrees[u * self.n + v] as usize
    }

    /// `delta_1(H)`; `None` on the empty vertex set.
    pub fn min_vertex_degree(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    /// `delta_2(H)`; `None` when `n < 2`.
    pub fn min_pair_degree(&self) -> Option<usize> {
        let mut best = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let d = self.pair_degree(u, v);
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
        best
    }
}

/// A 2-graph on a declared vertex universe, typically a link `L_v(A)` or
/// `L_v(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    universe: Vec<Vertex>,
    pairs: Vec<(Vertex, Vertex)>,
}

impl LinkGraph {
    pub fn new<I>(universe: &[Vertex], pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let set: BTreeSet<Vertex> = universe.iter().copied().collect();
        let mut out = Vec::new();
        for (p, q) in pairs {
            if p == q {
                return Err(Error::SameVertex(p));
            }
            if !set.contains(&p) || !set.contains(&q) {
                return Err(Error::PairOutsideUniverse(p, q));
            }
            out.push((p, q));
        }
        Ok(Self::from_parts(set.into_iter().collect(), out))
    }

    fn from_parts(universe: Vec<Vertex>, pairs: Vec<(Vertex, Vertex)>) -> Self {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(p, q)| if p < q { (p, q) } else { (q, p) })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        LinkGraph { universe, pairs }
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, p: Vertex, q: Vertex) -> bool {
        let key = if p < q { (p, q) } else { (q, p) };
        self.pairs.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.pairs
            .iter()
            .filter(|&&(p, q)| p == v || q == v)
            .count()
    }
}
