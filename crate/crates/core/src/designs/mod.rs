//! k-uniform hypergraphs and t-designs.

mod field;
mod geometry;
mod io;

use std::collections::{BTreeMap, HashSet};

use crate::budget;
use crate::combin::{binomial, rank_colex, subsets_of, Combinations};
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

pub use field::Field;
pub use geometry::{affine_design, lines_of_pg, projective_design};
pub use io::{design_hash, parse_design, read_design, write_design, IndexBase};

/// A block is the 0/1 incidence vector of a k-subset, stored as a bitset.
pub type Block = PointSet;

/// A k-uniform hypergraph on points `0..v` with pairwise distinct blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<Block>,
    name: String,
}

impl Design {
    /// Validates the invariants: `0 < k < v`, every block a k-subset of `0..v`,
    /// no repeated block.
    pub fn new(v: usize, k: usize, blocks: Vec<Block>, name: impl Into<String>) -> Result<Self> {
        if v > MAX_POINTS {
            return Err(Error::invalid(format!(
                "v = {v} exceeds the supported maximum of {MAX_POINTS} points"
            )));
        }
        if k == 0 || k >= v {
            return Err(Error::invalid(format!("need 0 < k < v, got v = {v}, k = {k}")));
        }
        let mut seen = HashSet::with_capacity(blocks.len());
        for b in &blocks {
            if b.len() != k {
                return Err(Error::invalid(format!("block {{{b}}} has {} points, expected {k}", b.len())));
            }
            if b.bound() > v {
                return Err(Error::invalid(format!("block {{{b}}} has a point >= v = {v}")));
            }
            if !seen.insert(b) {
                return Err(Error::invalid(format!("block {{{b}}} is repeated")));
            }
        }
        Ok(Design { v, k, blocks, name: name.into() })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn block_set(&self) -> HashSet<&Block> {
        self.blocks.iter().collect()
    }

    pub fn contains_block(&self, b: &Block) -> bool {
        self.blocks.iter().any(|x| x == b)
    }

    pub fn block_index(&self, b: &Block) -> Option<usize> {
        self.blocks.iter().position(|x| x == b)
    }

    /// Blocks sorted lexicographically (the canonical order of the file format).
    pub fn sorted_blocks(&self) -> Vec<Block> {
        let mut b = self.blocks.clone();
        b.sort();
        b
    }

    /// True when the block set equals that of `other` (order and name ignored).
    pub fn same_blocks(&self, other: &Design) -> bool {
        self.v == other.v && self.k == other.k && self.sorted_blocks() == other.sorted_blocks()
    }

    /// Largest `|B ∩ B'|` over distinct blocks, or `None` with fewer than two blocks.
    pub fn max_intersection(&self) -> Option<usize> {
        let mut best = None;
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                let m = a.intersection_len(b);
                if best.is_none_or(|x| m > x) {
                    best = Some(m);
                }
            }
        }
        best
    }

    /// Whether C(v, k) blocks are present, i.e. every k-subset is a block.
    pub fn is_complete(&self) -> bool {
        binomial(self.v as u64, self.k as u64) == self.blocks.len() as u128
    }
}

/// Strength data of a design. `t == 0` marks a plain hypergraph whose point
/// degrees are not constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
    /// `lambda_s[s]` is the number of blocks through any s-subset, for `s = 0..=t`.
    pub lambda_s: Vec<u64>,
}

impl DesignParams {
    pub fn is_design(&self) -> bool {
        self.t >= 1
    }

    pub fn is_steiner(&self) -> bool {
        self.t >= 1 && self.lambda == 1
    }
}

/// `K^v_k`: all k-subsets of `0..v` in lexicographic order.
pub fn complete_design(v: usize, k: usize) -> Result<Design> {
    if k == 0 || k >= v {
        return Err(Error::invalid(format!("need 0 < k < v, got v = {v}, k = {k}")));
    }
    budget::check(binomial(v as u64, k as u64))?;
    let blocks = Combinations::new(v, k).map(PointSet::from_points).collect();
    Design::new(v, k, blocks, format!("K({v},{k})"))
}

/// Number of blocks containing each t-subset, indexed by colex rank.
fn subset_counts(design: &Design, t: usize) -> Result<Vec<u64>> {
    let slots = binomial(design.v as u64, t as u64);
    let work = binomial(design.k as u64, t as u64).saturating_mul(design.blocks.len() as u128);
    budget::check(slots.max(work))?;
    let mut counts = vec![0u64; slots as usize];
    for b in &design.blocks {
        let pts = b.to_vec();
        for sub in subsets_of(&pts, t) {
            counts[rank_colex(&sub)] += 1;
        }
    }
    Ok(counts)
}

/// The largest `t <= t_max` such that every t-subset lies in the same number of blocks.
pub fn strength(design: &Design, t_max: usize) -> Result<DesignParams> {
    let b = design.blocks.len() as u64;
    let mut lambda_s = vec![b];
    let mut t = 0;
    for s in 1..=t_max.min(design.k) {
        let counts = subset_counts(design, s)?;
        let first = counts[0];
        if counts.iter().any(|&c| c != first) {
            break;
        }
        lambda_s.push(first);
        t = s;
    }
    Ok(DesignParams { t, v: design.v, k: design.k, lambda: lambda_s[t], lambda_s })
}

/// Expected `lambda_s` ladder of a `t-(v,k,lambda)` design, from
/// `lambda_s * C(k-s, t-s) = lambda * C(v-s, t-s)`. `None` if some entry is not integral.
pub fn lambda_ladder(t: usize, v: usize, k: usize, lambda: u64) -> Option<Vec<u64>> {
    (0..=t)
        .map(|s| {
            let num = lambda as u128 * binomial((v - s) as u64, (t - s) as u64);
            let den = binomial((k - s) as u64, (t - s) as u64);
            num.is_multiple_of(den).then(|| (num / den) as u64)
        })
        .collect()
}

/// Blocks through point `i` with `i` removed; points relabelled to `0..v-1`.
/// Returns the design and the map from new labels to old ones.
pub fn derived_design(design: &Design, i: usize) -> Result<(Design, Vec<usize>)> {
    if i >= design.v {
        return Err(Error::invalid(format!("point {i} out of range 0..{}", design.v)));
    }
    if design.k < 2 {
        return Err(Error::invalid("derived design of a 1-uniform hypergraph is empty"));
    }
    let (map, inverse) = drop_point_maps(design.v, i);
    let blocks: Vec<Block> =
        design.blocks.iter().filter(|b| b.contains(i)).map(|b| b.without(i).map_points(&inverse)).collect();
    if blocks.is_empty() {
        return Err(Error::invalid(format!("no block contains point {i}")));
    }
    let d = Design::new(design.v - 1, design.k - 1, blocks, format!("{}/derived({i})", design.name))?;
    Ok((d, map))
}

/// Blocks avoiding point `i`; points relabelled to `0..v-1`.
pub fn residual_design(design: &Design, i: usize) -> Result<(Design, Vec<usize>)> {
    if i >= design.v {
        return Err(Error::invalid(format!("point {i} out of range 0..{}", design.v)));
    }
    let (map, inverse) = drop_point_maps(design.v, i);
    let blocks: Vec<Block> =
        design.blocks.iter().filter(|b| !b.contains(i)).map(|b| b.map_points(&inverse)).collect();
    if blocks.is_empty() {
        return Err(Error::invalid(format!("every block contains point {i}")));
    }
    let d = Design::new(design.v - 1, design.k, blocks, format!("{}/residual({i})", design.name))?;
    Ok((d, map))
}

// (new -> old, old -> new); the dropped point maps to usize::MAX
fn drop_point_maps(v: usize, i: usize) -> (Vec<usize>, Vec<usize>) {
    let map: Vec<usize> = (0..v).filter(|&p| p != i).collect();
    let mut inverse = vec![usize::MAX; v];
    for (new, &old) in map.iter().enumerate() {
        inverse[old] = new;
    }
    (map, inverse)
}

/// Number of blocks `B'` (including `b` itself) by `|b ∩ B'|`.
pub fn intersection_distribution(design: &Design, b: &Block) -> Result<BTreeMap<usize, usize>> {
    if !design.contains_block(b) {
        return Err(Error::invalid(format!("{{{b}}} is not a block of the design")));
    }
    let mut out = BTreeMap::new();
    for other in &design.blocks {
        *out.entry(b.intersection_len(other)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Number of blocks `B` by the pair `(|B ∩ b1|, |B ∩ b2|)`.
pub fn pairwise_distribution(
    design: &Design,
    b1: &Block,
    b2: &Block,
) -> Result<BTreeMap<(usize, usize), usize>> {
    for b in [b1, b2] {
        if !design.contains_block(b) {
            return Err(Error::invalid(format!("{{{b}}} is not a block of the design")));
        }
    }
    let mut out = BTreeMap::new();
    for other in &design.blocks {
        *out.entry((b1.intersection_len(other), b2.intersection_len(other))).or_insert(0) += 1;
    }
    Ok(out)
}

/// Points in the order 0..v as a set.
pub fn all_points(v: usize) -> PointSet {
    PointSet::from_points(0..v)
}

/// The Fano plane on `Z_7` with blocks `{i, i+1, i+3}`.
pub fn fano() -> Design {
    let blocks = (0..7).map(|i| PointSet::from_points([i, (i + 1) % 7, (i + 3) % 7])).collect();
    Design::new(7, 3, blocks, "fano").expect("fano plane is valid")
}

/// The 1-design of three disjoint triples on 9 points.
pub fn disjoint_triples() -> Design {
    let blocks = (0..3).map(|i| PointSet::from_points([3 * i, 3 * i + 1, 3 * i + 2])).collect();
    Design::new(9, 3, blocks, "disjoint-triples").expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_small() {
        let d = complete_design(3, 2).unwrap();
        assert_eq!(
            d.blocks(),
            &[PointSet::from_points([0, 1]), PointSet::from_points([0, 2]), PointSet::from_points([1, 2])]
        );
        assert_eq!(complete_design(7, 3).unwrap().num_blocks(), 35);
    }

    #[test]
    fn complete_budget_error() {
        assert!(matches!(complete_design(40, 20), Err(Error::BudgetExceeded { .. })));
        assert!(complete_design(4, 4).is_err());
    }

    #[test]
    fn fano_strength() {
        let p = strength(&fano(), 7).unwrap();
        assert_eq!((p.t, p.lambda), (2, 1));
        assert_eq!(p.lambda_s, vec![7, 3, 1]);
    }

    #[test]
    fn disjoint_triples_is_one_design() {
        let p = strength(&disjoint_triples(), 3).unwrap();
        assert_eq!((p.t, p.lambda), (1, 1));
    }

    #[test]
    fn hypergraph_has_zero_strength() {
        let d = Design::new(4, 2, vec![PointSet::from_points([0, 1]), PointSet::from_points([0, 2])], "path")
            .unwrap();
        let p = strength(&d, 2).unwrap();
        assert_eq!(p.t, 0);
        assert!(!p.is_design());
        assert_eq!(p.lambda, 2);
    }

    #[test]
    fn invariants_enforced() {
        let bad = Design::new(5, 2, vec![PointSet::from_points([0, 1, 2])], "x");
        assert!(bad.is_err());
        let dup = Design::new(5, 2, vec![PointSet::from_points([0, 1]), PointSet::from_points([0, 1])], "x");
        assert!(dup.is_err());
        let out = Design::new(3, 2, vec![PointSet::from_points([0, 5])], "x");
        assert!(out.is_err());
    }

    #[test]
    fn residual_of_fano() {
        let (r, map) = residual_design(&fano(), 0).unwrap();
        assert_eq!(r.num_blocks(), 4);
        assert_eq!(r.v(), 6);
        assert_eq!(map, vec![1, 2, 3, 4, 5, 6]);
        let (d, _) = derived_design(&fano(), 0).unwrap();
        assert_eq!((d.num_blocks(), d.k()), (3, 2));
    }

    #[test]
    fn distribution_sums_to_block_count() {
        let f = fano();
        let dist = intersection_distribution(&f, &f.blocks()[0]).unwrap();
        assert_eq!(dist.values().sum::<usize>(), 7);
        assert_eq!(dist[&3], 1);
        assert_eq!(dist[&1], 6);
        assert!(intersection_distribution(&f, &PointSet::from_points([0, 1, 2])).is_err());
    }

    #[test]
    fn ladder_formula() {
        assert_eq!(lambda_ladder(5, 24, 8, 1).unwrap(), vec![759, 253, 77, 21, 5, 1]);
    }
}
