//! Exact tools for degree-sum perfect-matching problems in 3-uniform
//! hypergraphs.
//!
//! * [`hypergraph`]: the canonical [`Hypergraph3`] carrier with degrees,
//!   links, `sigma_2` and independence numbers.
//! * [`constructions`]: the extremal families `H^l_{n,s}` and
//!   `H^{1,2}_{n,x,y}` with their closed forms.
//! * [`matching`]: perfect/maximum matchings, 3-partite and bipartite
//!   specialisations, rainbow matchings.
//! * [`extremal`]: the `sigma_2` sweep over `H^{1,2}_{n,x,y}` and the
//!   counterexample certificate.
//! * [`lemmas`]: exhaustive and randomized verifiers for the finite
//!   structural lemmas.
//! * [`absorbing`]: absorbing-set search, disjoint families and leftover
//!   absorption.
//! * [`cli`]: the `hypermatch` command-line front end.

pub mod absorbing;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod hypergraph;
mod independence;
pub mod io;
pub mod lemmas;
pub mod matching;
pub mod report;

pub use error::{Error, Result};
pub use hypergraph::{DegreeProfile, Hypergraph3, LinkGraph, Triple, Vertex};
pub use matching::MatchingCertificate;

/// Seed used by every randomized routine unless overridden.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;
