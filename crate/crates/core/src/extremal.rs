//! The `sigma_2` optimisation over `H^{1,2}_{n,x,y}` and the certificate that
//! the optimum is a counterexample at a concrete order `n`.
//!
//! The sweep is construction-backed: every grid point is built and its
//! `sigma_2` computed from the graph. The closed forms are the cross-check.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{binom2, f1, f2, h12, h12_block_sizes, h12_sigma2_formula, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{Triple, Vertex};
use crate::matching::{max_matching, MatchingCertificate};

/// Orders up to which the sweep builds every grid point.
pub const CONSTRUCTION_SWEEP_MAX_N: usize = 60;
/// Orders up to which the certificate runs the exact matching solver.
pub const EXACT_MATCHING_MAX_N: usize = 33;

fn exact_int(r: Rational) -> Result<i64> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(r.to_string()))
    }
}

fn check_order(n: usize, min: usize) -> Result<()> {
    if !n.is_multiple_of(3) {
        return Err(Error::NotDivisibleByThree(n));
    }
    if n < min {
        return Err(Error::InvalidParameters(format!("n = {n} below {min}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub x: usize,
    pub y: usize,
    /// `sigma_2` of the constructed graph; `None` when it has no edge.
    pub sigma2: Option<i64>,
    pub two_f1: i64,
    pub f2: i64,
    pub feasible: bool,
    pub is_max: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sweep {
    pub n: usize,
    pub max: i64,
    /// All maximisers, lexicographically ordered.
    pub argmax: Vec<(usize, usize)>,
    pub rows: Vec<SweepRow>,
    pub construction_backed: bool,
}

impl Sweep {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,sigma2,two_f1,f2,is_max\n");
        for r in &self.rows {
            let s = r.sigma2.map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.x, r.y, s, r.two_f1, r.f2, r.is_max
            ));
        }
        out
    }
}

/// `max sigma_2(H^{1,2}_{n,x,y})` over `x, y >= 0`, `x + y <= n/3 - 1`.
///
/// Up to [`CONSTRUCTION_SWEEP_MAX_N`] every grid point is built; beyond it the
/// block-degree formula is used and the maximiser is rebuilt and checked.
pub fn sweep_max_sigma2(n: usize) -> Result<Sweep> {
    check_order(n, 9)?;
    let third = n / 3;
    let grid: Vec<(usize, usize)> = (0..third)
        .flat_map(|x| (0..third - x).map(move |y| (x, y)))
        .collect();
    let construction_backed = n <= CONSTRUCTION_SWEEP_MAX_N;
    let sigmas: Vec<Option<i64>> = grid
        .par_iter()
        .map(|&(x, y)| -> Result<Option<i64>> {
            if construction_backed {
                Ok(h12(n, x, y)?.graph.sigma2().map(|s| s as i64))
            } else {
                h12_sigma2_formula(n, x, y)
            }
        })
        .collect::<Result<_>>()?;
    let max =
        sigmas.iter().flatten().copied().max().ok_or_else(|| {
            Error::InvalidParameters(format!("no feasible grid point at n = {n}"))
        })?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut argmax = Vec::new();
    for (&(x, y), &s) in grid.iter().zip(&sigmas) {
        let is_max = s == Some(max);
        if is_max {
            argmax.push((x, y));
        }
        rows.push(SweepRow {
            x,
            y,
            sigma2: s,
            two_f1: exact_int(Rational::from(2) * f1(n, x))?,
            f2: exact_int(f2(n, x))?,
            feasible: s.is_some(),
            is_max,
        });
    }
    if !construction_backed {
        let (x, y) = argmax[0];
        let built = h12(n, x, y)?.graph.sigma2().map(|s| s as i64);
        if built != Some(max) {
            return Err(Error::InvalidParameters(format!(
                "formula sigma2 {max} disagrees with construction {built:?} at ({x}, {y})"
            )));
        }
    }
    Ok(Sweep {
        n,
        max,
        argmax,
        rows,
        construction_backed,
    })
}

/// The five-case closed form of the sweep maximum, by `n mod 5`.
pub fn closed_form_max(n: usize) -> Result<i64> {
    check_order(n, 3)?;
    let r = |a: i64, b: i64| Rational::new(a, b);
    let (lin, cst) = match n % 5 {
        0 => (r(12, 5), r(2, 1)),
        1 => (r(187, 75), r(62, 25)),
        2 => (r(184, 75), r(38, 25)),
        3 => (r(176, 75), r(48, 25)),
        _ => (r(173, 75), r(42, 25)),
    };
    let nn = Rational::from(n as i64);
    exact_int(r(128, 225) * nn * nn - lin * nn + cst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateFormula {
    TwoF1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub x: usize,
    pub formula: CandidateFormula,
    pub value: i64,
    /// Whether `x <= n/3 - 1`, i.e. the point lies on the sweep grid.
    pub in_range: bool,
}

/// `2 f_1(0)`, `f_2(1)`, `f_2(floor((n+1)/5))`, `2 f_1(ceil((n+2)/5))`.
pub fn candidate_points(n: usize) -> Result<Vec<Candidate>> {
    check_order(n, 3)?;
    let points = [
        (0, CandidateFormula::TwoF1),
        (1, CandidateFormula::F2),
        ((n + 1) / 5, CandidateFormula::F2),
        ((n + 2).div_ceil(5), CandidateFormula::TwoF1),
    ];
    points
        .into_iter()
        .map(|(x, formula)| {
            let value = match formula {
                CandidateFormula::TwoF1 => exact_int(Rational::from(2) * f1(n, x))?,
                CandidateFormula::F2 => exact_int(f2(n, x))?,
            };
            Ok(Candidate {
                x,
                formula,
                value,
                in_range: x < n / 3,
            })
        })
        .collect()
}

/// Optimum of the matching-counting program on `H^{1,2}_{n,x,y}` and the
/// edge-type counts attaining it: `a` edges `R+TT`, `b` edges `S+TT`, `c`
/// edges `T+SS`, `d` edges `TTT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralBound {
    pub size: usize,
    pub counts: [usize; 4],
}

/// Solves `max a+b+c+d` subject to `a <= |R|`, `2a+2b+c+3d <= |T|`,
/// `b+2c <= |S|` over nonnegative integers by enumeration. Every feasible
/// count vector is realised by a matching of `H^{1,2}_{n,x,y}` and every
/// matching yields one, so the optimum is the maximum matching size.
pub fn max_matching_structural_bound(n: usize, x: usize, y: usize) -> Result<StructuralBound> {
    if n < 3 * x + 3 * y + 3 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 3x + 3y + 3 (n={n}, x={x}, y={y})"
        )));
    }
    let (r, s, t) = h12_block_sizes(n, x, y);
    let mut best = StructuralBound {
        size: 0,
        counts: [0; 4],
    };
    for a in 0..=r.min(t / 2) {
        for b in 0..=s.min((t - 2 * a) / 2) {
            for c in 0..=((s - b) / 2).min(t - 2 * a - 2 * b) {
                let d = (t - 2 * a - 2 * b - c) / 3;
                let size = a + b + c + d;
                if size > best.size {
                    best = StructuralBound {
                        size,
                        counts: [a, b, c, d],
                    };
                }
            }
        }
    }
    Ok(best)
}

/// A matching of `H^{1,2}_{n,x,y}` (in the `R, S, T` layout of
/// [`h12`]) realising the given type counts.
pub fn realize_structural_matching(
    n: usize,
    x: usize,
    y: usize,
    counts: [usize; 4],
) -> Vec<Triple> {
    let (r, s, _) = h12_block_sizes(n, x, y);
    let mut rs = 0..r;
    let mut ss = r..r + s;
    let mut ts = r + s..n;
    let take = |it: &mut std::ops::Range<Vertex>| it.next().expect("counts exceed block");
    let mut out = Vec::new();
    let [a, b, c, d] = counts;
    for _ in 0..a {
        out.push([take(&mut rs), take(&mut ts), take(&mut ts)]);
    }
    for _ in 0..b {
        out.push([take(&mut ss), take(&mut ts), take(&mut ts)]);
    }
    for _ in 0..c {
        out.push([take(&mut ts), take(&mut ss), take(&mut ss)]);
    }
    for _ in 0..d {
        out.push([take(&mut ts), take(&mut ts), take(&mut ts)]);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingMethod {
    Exact,
    Structural,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub n: usize,
    pub x: usize,
    pub y: usize,
    pub edge_count: usize,
    pub sigma2: i64,
    pub sigma2_pair: (Vertex, Vertex),
    pub closed_form_max: i64,
    pub closed_form_agrees: bool,
    pub threshold: i64,
    pub max_matching: usize,
    pub matching_method: MatchingMethod,
    pub structural_bound: usize,
    pub matching_witness: Vec<Triple>,
    pub independence_number: usize,
    pub independent_set: Vec<Vertex>,
    pub isolated_vertices: usize,
    pub sigma2_exceeds_threshold: bool,
    pub no_perfect_matching: bool,
    pub not_subgraph_of_h2: bool,
    pub all_conditions_hold: bool,
}

/// `2 (C(n-1, 2) - C(2n/3, 2))`.
pub fn threshold(n: usize) -> i64 {
    let n = n as i64;
    2 * (binom2(n - 1) - binom2(2 * n / 3))
}

/// Builds the `sigma_2`-maximising `H^{1,2}_{n,x,y}` (lexicographically
/// smallest maximiser) and evaluates the three counterexample conditions from
/// witnesses computed on the graph itself.
pub fn certify_counterexample(n: usize) -> Result<CounterexampleReport> {
    let sweep = sweep_max_sigma2(n)?;
    let (x, y) = sweep.argmax[0];
    let graph = h12(n, x, y)?.graph;
    let (sigma2, u, v) = graph
        .sigma2_witness()
        .ok_or_else(|| Error::InvalidParameters("maximiser has no edge".into()))?;
    let sigma2 = sigma2 as i64;
    let closed = closed_form_max(n)?;
    let threshold = threshold(n);

    let structural = max_matching_structural_bound(n, x, y)?;
    let (method, matching) = if n <= EXACT_MATCHING_MAX_N {
        (MatchingMethod::Exact, max_matching(&graph))
    } else {
        let edges = realize_structural_matching(n, x, y, structural.counts);
        (
            MatchingMethod::Structural,
            MatchingCertificate::verify(&graph, edges)?,
        )
    };
    let (alpha, independent_set) = graph.independence_number();
    let no_pm = matching.size < n / 3;
    let not_sub = alpha < n / 3 + 1;
    let exceeds = sigma2 > threshold;
    Ok(CounterexampleReport {
        n,
        x,
        y,
        edge_count: graph.edge_count(),
        sigma2,
        sigma2_pair: (u, v),
        closed_form_max: closed,
        closed_form_agrees: closed == sigma2,
        threshold,
        max_matching: matching.size,
        matching_method: method,
        structural_bound: structural.size,
        matching_witness: matching.edges,
        independence_number: alpha,
        independent_set,
        isolated_vertices: graph.isolated_vertices().len(),
        sigma2_exceeds_threshold: exceeds,
        no_perfect_matching: no_pm,
        not_subgraph_of_h2: not_sub,
        all_conditions_hold: exceeds && no_pm && not_sub,
    })
}
