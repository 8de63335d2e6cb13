//! Exact matching computations on 3-graphs and their 2-graph links.

mod bnb;
mod dp;
mod partite;
mod rainbow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex};

pub use bnb::{fractional_cover, max_matching_bnb, BnbStats};
pub use dp::{max_matching_dp, perfect_matching_dp, DP_MAX_VERTICES};
pub(crate) use partite::permutations;
pub use partite::{
    bipartite_max_matching, bipartite_pm, has_pm_3partite, tripartite_graph, Cell,
    TRIPARTITE_MAX_PART,
};
pub use rainbow::rainbow_matching;

/// A validated matching in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub edges: Vec<Triple>,
    pub size: usize,
    pub covered: Vec<Vertex>,
    pub perfect: bool,
}

impl MatchingCertificate {
    /// Re-validates `edges` against `host`: membership and pairwise
    /// disjointness. `perfect` is relative to the host's vertex set.
    pub fn verify(host: &Hypergraph3, edges: Vec<Triple>) -> Result<Self> {
        let mut seen = vec![false; host.n()];
        let mut edges: Vec<Triple> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort_unstable();
        for e in &edges {
            if !host.contains_edge(*e) {
                return Err(Error::InvalidMatching(format!("{e:?} is not an edge")));
            }
            for &v in e {
                if seen[v] {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {v} is covered twice"
                    )));
                }
                seen[v] = true;
            }
        }
        let covered: Vec<Vertex> = (0..host.n()).filter(|&v| seen[v]).collect();
        Ok(MatchingCertificate {
            size: edges.len(),
            perfect: covered.len() == host.n(),
            covered,
            edges,
        })
    }

    pub fn empty(host: &Hypergraph3) -> Self {
        MatchingCertificate {
            edges: Vec::new(),
            size: 0,
            covered: Vec::new(),
            perfect: host.n() == 0,
        }
    }
}

/// Decides whether `h` has a perfect matching, returning one if so.
///
/// Subset dynamic programming up to [`DP_MAX_VERTICES`] vertices, branch and
/// bound beyond.
pub fn has_perfect_matching(h: &Hypergraph3) -> Result<Option<MatchingCertificate>> {
    if !h.n().is_multiple_of(3) {
        return Err(Error::NotDivisibleByThree(h.n()));
    }
    let edges = if h.n() <= DP_MAX_VERTICES {
        perfect_matching_dp(h)
    } else {
        let (m, _) = max_matching_bnb(h, Some(h.n() / 3));
        (m.len() == h.n() / 3).then_some(m)
    };
    edges.map(|e| MatchingCertificate::verify(h, e)).transpose()
}

/// A maximum matching of `h`, exact.
pub fn max_matching(h: &Hypergraph3) -> MatchingCertificate {
    let edges = if h.n() <= 15 {
        max_matching_dp(h)
    } else {
        max_matching_bnb(h, None).0
    };
    MatchingCertificate::verify(h, edges).expect("solver returned an invalid matching")
}
