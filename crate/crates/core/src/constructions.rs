//! Builders and closed forms for the named extremal families.
//!
//! * `H^l_{n,s}` for `l` in `{1, 2, 3}`: a block `T` of size `s*l - 1`, the
//!   rest in `S`, and every triple meeting `T` in at least `l` vertices.
//! * `H^{1,2}_{n,x,y}`: blocks `R` (size `x`), `S` (size `n - 3x - y`) and
//!   `T` (size `2x + y`) with edge types `R+TT`, `S+TT`, `T+SS` and `TTT`.
//!
//! All formulas are evaluated in exact rational arithmetic.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex};

pub type Rational = Ratio<i64>;

pub fn binom2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

pub fn binom3(m: i64) -> i64 {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub start: Vertex,
    pub len: usize,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        v >= self.start && v < self.start + self.len
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        self.start..self.start + self.len
    }
}

/// Named, contiguous, disjoint blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub n: usize,
    pub blocks: Vec<Block>,
}

impl PartitionSpec {
    pub fn from_sizes(sizes: &[(&str, usize)]) -> Self {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&(name, len)| {
                let b = Block {
                    name: name.to_string(),
                    start,
                    len,
                };
                start += len;
                b
            })
            .collect();
        PartitionSpec { n: start, blocks }
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    pub fn validate(&self) -> Result<()> {
        let mut next = 0;
        for b in &self.blocks {
            if b.start != next {
                return Err(Error::InvalidParameters(format!(
                    "block {} starts at {} instead of {}",
                    b.name, b.start, next
                )));
            }
            next += b.len;
        }
        if next != self.n {
            return Err(Error::InvalidParameters(format!(
                "blocks cover {next} of {} vertices",
                self.n
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `H^l_{n,s}`.
    HEll { n: usize, s: usize, ell: usize },
    /// `H^{1,2}_{n,x,y}`.
    H12 { n: usize, x: usize, y: usize },
}

impl Family {
    pub fn n(&self) -> usize {
        match *self {
            Family::HEll { n, .. } | Family::H12 { n, .. } => n,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::HEll { n, s, ell } => format!("H^{ell}_{{{n},{s}}}"),
            Family::H12 { n, x, y } => format!("H^{{1,2}}_{{{n},{x},{y}}}"),
        }
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        match *self {
            Family::HEll { n, s, ell } => h_ell(n, s, ell),
            Family::H12 { n, x, y } => h12(n, x, y),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub graph: Hypergraph3,
    pub partition: PartitionSpec,
}

fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

fn check_h_ell(n: usize, s: usize, ell: usize) -> Result<()> {
    if !(1..=3).contains(&ell) {
        return Err(Error::InvalidParameters(format!(
            "ell = {ell} not in 1..=3"
        )));
    }
    if s < 1 || s * ell - 1 > n || n < 3 {
        return Err(Error::InvalidParameters(format!(
            "need s >= 1, s*ell - 1 <= n and n >= 3 (n={n}, s={s}, ell={ell})"
        )));
    }
    Ok(())
}

/// `H^l_{n,s}`: `S = 0..n-sl+1`, `T` = the last `sl - 1` vertices.
pub fn h_ell(n: usize, s: usize, ell: usize) -> Result<FamilyInstance> {
    check_h_ell(n, s, ell)?;
    let t = s * ell - 1;
    let partition = PartitionSpec::from_sizes(&[("S", n - t), ("T", t)]);
    let first_t = n - t;
    let edges = all_triples(n)
        .filter(|e| e.iter().filter(|&&v| v >= first_t).count() >= ell)
        .collect();
    Ok(FamilyInstance {
        family: Family::HEll { n, s, ell },
        graph: Hypergraph3::from_sorted(n, edges),
        partition,
    })
}

/// Every `H^l_{n,s}` lacks a matching of size `s`; its maximum is `s - 1`.
pub fn max_matching_bound_h_ell(n: usize, s: usize, ell: usize) -> Result<usize> {
    check_h_ell(n, s, ell)?;
    Ok(s - 1)
}

fn check_h12(n: usize, x: usize, y: usize) -> Result<()> {
    if n < 3 * x + 3 * y + 3 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 3x + 3y + 3 (n={n}, x={x}, y={y})"
        )));
    }
    Ok(())
}

/// Block sizes `(|R|, |S|, |T|)` of `H^{1,2}_{n,x,y}`.
pub fn h12_block_sizes(n: usize, x: usize, y: usize) -> (usize, usize, usize) {
    (x, n - 3 * x - y, 2 * x + y)
}

/// `H^{1,2}_{n,x,y}` laid out as `R`, then `S`, then `T`.
pub fn h12(n: usize, x: usize, y: usize) -> Result<FamilyInstance> {
    check_h12(n, x, y)?;
    let (r, s, t) = h12_block_sizes(n, x, y);
    let partition = PartitionSpec::from_sizes(&[("R", r), ("S", s), ("T", t)]);
    let edges = all_triples(n)
        .filter(|e| {
            let mut counts = [0usize; 3];
            for &v in e {
                let b = if v < r {
                    0
                } else if v < r + s {
                    1
                } else {
                    2
                };
                counts[b] += 1;
            }
            matches!(counts, [1, 0, 2] | [0, 1, 2] | [0, 2, 1] | [0, 0, 3])
        })
        .collect();
    Ok(FamilyInstance {
        family: Family::H12 { n, x, y },
        graph: Hypergraph3::from_sorted(n, edges),
        partition,
    })
}

/// Degrees of a vertex of `R`, `S` and `T` in `H^{1,2}_{n,x,y}`, from the
/// closed forms.
pub fn h12_block_degrees(n: usize, x: usize, y: usize) -> Result<(i64, i64, i64)> {
    check_h12(n, x, y)?;
    let (n, x, y) = (n as i64, x as i64, y as i64);
    let t = 2 * x + y;
    let s = n - 3 * x - y;
    let deg_r = binom2(t);
    let deg_s = binom2(t) + t * (s - 1);
    let deg_t = (t - 1) * x + binom2(t - 1) + (t - 1) * s + binom2(s);
    Ok((deg_r, deg_s, deg_t))
}

/// `sigma_2(H^{1,2}_{n,x,y})` from the block degrees: the minimum over the
/// block pairs that actually contain an adjacent pair.
pub fn h12_sigma2_formula(n: usize, x: usize, y: usize) -> Result<Option<i64>> {
    let (dr, ds, dt) = h12_block_degrees(n, x, y)?;
    let (r, s, t) = h12_block_sizes(n, x, y);
    let mut cands = Vec::new();
    // R-T: via R+TT.
    if r >= 1 && t >= 2 {
        cands.push(dr + dt);
    }
    // S-S: via T+SS.
    if s >= 2 && t >= 1 {
        cands.push(2 * ds);
    }
    // S-T: via S+TT or T+SS.
    if (s >= 1 && t >= 2) || (s >= 2 && t >= 1) {
        cands.push(ds + dt);
    }
    // T-T: via R+TT, S+TT or TTT.
    if t >= 2 && (r + s >= 1 || t >= 3) {
        cands.push(2 * dt);
    }
    Ok(cands.into_iter().min())
}

/// `f_1(x)`: the bound on `deg(u_2)` at `y = n/3 - x - 1`.
pub fn f1(n: usize, x: usize) -> Rational {
    let (n, x) = (Rational::from(n as i64), Rational::from(x as i64));
    let r = |a: i64, b: i64| Rational::new(a, b);
    r(-3, 2) * x * x + (n * r(1, 3) + r(1, 2)) * x + r(5, 18) * n * n - r(7, 6) * n
        + Rational::from(1)
}

/// `f_2(x)`: the bound on `deg(u_1) + deg(u_3)` at `y = n/3 - x - 1`.
pub fn f2(n: usize, x: usize) -> Rational {
    let (n, x) = (Rational::from(n as i64), Rational::from(x as i64));
    let r = |a: i64, b: i64| Rational::new(a, b);
    Rational::from(2) * x * x - (n * r(1, 3) + Rational::from(2)) * x + r(5, 9) * n * n
        - Rational::from(2) * n
        + Rational::from(2)
}

/// The displayed `sigma_2` closed forms of the three `H^l_{n,s}` families.
///
/// Valid whenever both blocks are large enough for the extremal pair to
/// exist (`n - s*l + 1 >= 2` and `s >= 2` for `l = 1`, `n - 2s + 1 >= 1` for
/// `l = 2`, `3s - 1 >= 3` for `l = 3`).
pub fn sigma2_formula_h_ell(n: usize, s: usize, ell: usize) -> Result<i64> {
    check_h_ell(n, s, ell)?;
    let (n, s) = (n as i64, s as i64);
    Ok(match ell {
        1 => 2 * (binom2(n - 1) - binom2(n - s)),
        2 => (2 * s - 2) * (n - 1),
        _ => 2 * binom2(3 * s - 2),
    })
}

/// Closed-form `sigma_2` for any family instance.
pub fn sigma2_formula(family: &Family) -> Result<Option<i64>> {
    match *family {
        Family::HEll { n, s, ell } => sigma2_formula_h_ell(n, s, ell).map(Some),
        Family::H12 { n, x, y } => h12_sigma2_formula(n, x, y),
    }
}

/// The displayed `H^2` expression before simplification, kept as a second
/// route to `(2s - 2)(n - 1)`.
pub fn sigma2_h2_expanded(n: usize, s: usize) -> i64 {
    let (n, s) = (n as i64, s as i64);
    binom2(2 * s - 2) + (n - 2 * s + 1) * (2 * s - 2) + binom2(2 * s - 1)
}

/// Number of edges of `H^{1,2}_{n,x,y}` by type count.
pub fn h12_edge_count(n: usize, x: usize, y: usize) -> Result<i64> {
    check_h12(n, x, y)?;
    let (r, s, t) = h12_block_sizes(n, x, y);
    let (r, s, t) = (r as i64, s as i64, t as i64);
    Ok(r * binom2(t) + s * binom2(t) + t * binom2(s) + binom3(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block_degree(inst: &FamilyInstance, name: &str) -> usize {
        let b = inst.partition.block(name).unwrap();
        inst.graph.degree(b.start).unwrap()
    }

    #[test]
    fn h12_15_3_1_degrees_and_size() {
        let inst = h12(15, 3, 1).unwrap();
        assert_eq!(
            (
                block_degree(&inst, "R"),
                block_degree(&inst, "S"),
                block_degree(&inst, "T")
            ),
            (21, 49, 73)
        );
        assert_eq!(inst.graph.edge_count(), 273);
        assert_eq!(h12_edge_count(15, 3, 1).unwrap(), 273);
        assert_eq!(h12_block_degrees(15, 3, 1).unwrap(), (21, 49, 73));
        assert_eq!(inst.graph.sigma2(), Some(94));
    }

    #[test]
    fn h_ell_sigma2_examples() {
        assert_eq!(h_ell(12, 4, 2).unwrap().graph.sigma2(), Some(66));
        assert_eq!(h_ell(12, 4, 3).unwrap().graph.sigma2(), Some(90));
        assert_eq!(h_ell(12, 4, 1).unwrap().graph.sigma2(), Some(54));
        assert_eq!(sigma2_formula_h_ell(12, 4, 2).unwrap(), 66);
        assert_eq!(sigma2_h2_expanded(12, 4), 66);
    }

    #[test]
    fn formula_values() {
        assert_eq!(f2(15, 3), Rational::from(94));
        assert_eq!(Rational::from(2) * f1(15, 3), Rational::from(98));
    }

    #[test]
    fn parameter_checks() {
        assert!(h_ell(12, 4, 4).is_err());
        assert!(h_ell(12, 0, 2).is_err());
        assert!(h_ell(5, 3, 2).is_ok());
        assert!(h_ell(4, 3, 2).is_err());
        assert!(h12(14, 3, 1).is_err());
        assert!(h12(15, 3, 1).is_ok());
        assert_eq!(max_matching_bound_h_ell(12, 4, 2).unwrap(), 3);
    }

    #[test]
    fn h2_block_codegree_and_link() {
        let inst = h_ell(12, 4, 2).unwrap();
        let s = inst.partition.block("S").unwrap();
        let t: Vec<_> = inst.partition.block("T").unwrap().vertices().collect();
        assert_eq!(inst.graph.codegree(s.start, s.start + 1).unwrap(), 0);
        let v = t[0];
        let link = inst.graph.link(v, &t[1..]).unwrap();
        assert_eq!(link.edge_count(), 15);
    }

    #[test]
    fn partition_validation() {
        let p = PartitionSpec::from_sizes(&[("R", 2), ("S", 3)]);
        assert!(p.validate().is_ok());
        assert_eq!(p.block_of(3), Some(1));
        let mut bad = p.clone();
        bad.n = 6;
        assert!(bad.validate().is_err());
    }
}
