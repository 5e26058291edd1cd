use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rat, ExactMatrix};
use crate::budget;
use crate::combin::{binom_i64, binomial, rank_lex, Combinations};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Number of δ-coordinates on `v` points up to size `s`.
pub fn delta_len(v: usize, s: usize) -> usize {
    (0..=s).map(|j| binomial(v as u64, j as u64) as usize).sum()
}

/// Column of a subset among the δ-coordinates: sizes ascending, lexicographic within a size.
pub fn delta_index(v: usize, subset: &PointSet) -> usize {
    let size = subset.len();
    delta_len(v, size) - binomial(v as u64, size as u64) as usize + rank_lex(v, &subset.to_vec())
}

/// The subsets labelling the δ-coordinates, in column order.
pub fn delta_coordinates(v: usize, s: usize) -> Vec<PointSet> {
    (0..=s).flat_map(|j| Combinations::new(v, j).map(PointSet::from_points)).collect()
}

fn delta_support(c: &PointSet, v: usize, s: usize) -> Vec<usize> {
    let pts = c.to_vec();
    (0..=s.min(pts.len()))
        .flat_map(|j| {
            let pts = &pts;
            Combinations::new(pts.len(), j)
                .map(move |idx| delta_index(v, &idx.iter().map(|&i| pts[i]).collect()))
        })
        .collect()
}

/// The s-incidence vector of `c`: one entry per subset of size at most `s`,
/// equal to 1 when the subset lies inside `c`.
pub fn delta_vector(c: &PointSet, v: usize, s: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); delta_len(v, s)];
    for i in delta_support(c, v, s) {
        out[i] = BigRational::one();
    }
    out
}

/// Rows `δ^s(B)` for the given sets.
pub fn delta_matrix(sets: &[PointSet], v: usize, s: usize) -> Result<ExactMatrix> {
    budget::check(sets.len() as u128 * delta_len(v, s) as u128)?;
    let supports: Vec<Vec<usize>> = sets.iter().map(|c| delta_support(c, v, s)).collect();
    ExactMatrix::from_supports(delta_len(v, s), &supports)
}

/// Block-by-subset 0/1 matrix: rows are blocks, columns are all s-subsets in lexicographic order.
pub fn incidence_matrix(design: &Design, s: usize) -> Result<ExactMatrix> {
    if s > design.k() {
        return Err(Error::InvalidInput(format!("s = {s} exceeds the block size {}", design.k())));
    }
    let v = design.v();
    let cols = binomial(v as u64, s as u64);
    budget::check(cols.max(design.num_blocks() as u128 * binomial(design.k() as u64, s as u64)))?;
    let supports: Vec<Vec<usize>> = design
        .blocks()
        .iter()
        .map(|b| {
            let pts = b.to_vec();
            let mut cols: Vec<usize> = Combinations::new(pts.len(), s)
                .map(|idx| rank_lex(v, &idx.iter().map(|&i| pts[i]).collect::<Vec<_>>()))
                .collect();
            cols.sort_unstable();
            cols
        })
        .collect();
    ExactMatrix::from_supports(cols as usize, &supports)
}

/// Square block-by-block matrix with entries `C(|B ∩ B'|, j)`, the values of
/// the elementary symmetric polynomial of degree `j` in the variables of `B` at `B'`.
pub fn elementary_evaluation_matrix(design: &Design, j: usize) -> Result<ExactMatrix> {
    let blocks = design.blocks();
    budget::check(blocks.len() as u128 * blocks.len() as u128)?;
    let rows = blocks
        .iter()
        .map(|a| {
            blocks.iter().enumerate().map(|(c, b)| (c, rat(binom_i64(a.intersection_len(b), j)))).collect()
        })
        .collect();
    ExactMatrix::from_sparse_rows(blocks.len(), rows)
}

/// Whether `∏ (M - r I)` over the given integer roots is the zero matrix.
pub fn annihilates_polynomial(m: &ExactMatrix, roots: &[i64]) -> Result<bool> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension(format!(
            "annihilating polynomial needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut acc = ExactMatrix::identity(m.rows());
    for &r in roots {
        acc = acc.mul(&m.shift_diagonal(r)?)?;
    }
    Ok(acc.is_zero())
}
