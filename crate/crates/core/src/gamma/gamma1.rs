use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::combin::{binomial, Combinations};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::exactla::{incidence_matrix, kernel, rank, ExactMatrix};
use crate::pointset::PointSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEvidence {
    pub s: usize,
    pub rank: usize,
    pub binom: u64,
}

impl RankEvidence {
    pub fn deficient(&self) -> bool {
        (self.rank as u64) < self.binom
    }
}

/// Either an exact value or the interval `[lower, upper]` (`upper` unknown
/// when no count bound applies).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma1 {
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: Option<usize>,
    pub evidence: Vec<RankEvidence>,
}

/// Least `s` with `C(v, s) > |B|`, if any.
pub fn count_threshold(v: usize, blocks: usize) -> Option<usize> {
    (0..=v).find(|&s| binomial(v as u64, s as u64) > blocks as u128)
}

/// Scans `s = 1..=min(k, v-k)` for the first `s` where the block-by-s-subset
/// incidence matrix has rank below `C(v, s)`. In that range full rank at `s`
/// means every degree-`s` polynomial vanishing on the blocks is trivial.
pub fn gamma1(design: &Design) -> Result<Gamma1> {
    let (v, k) = (design.v(), design.k());
    let limit = k.min(v - k);
    let mut evidence = Vec::new();
    for s in 1..=limit {
        let binom = binomial(v as u64, s as u64);
        budget::check(binom * design.num_blocks() as u128)?;
        let r = rank(&incidence_matrix(design, s)?);
        let ev = RankEvidence { s, rank: r, binom: binom as u64 };
        let deficient = ev.deficient();
        evidence.push(ev);
        if deficient {
            return Ok(Gamma1 { value: Some(s), lower: s, upper: Some(s), evidence });
        }
    }
    Ok(Gamma1 { value: None, lower: limit + 1, upper: count_threshold(v, design.num_blocks()), evidence })
}

/// Independent check of [`gamma1`] for tiny designs: for each degree `s`,
/// take a basis of the multilinear polynomials of degree at most `s` vanishing
/// on the blocks and test each basis element on every k-subset. The first `s`
/// with an element nonzero somewhere among the k-subsets (so outside the
/// trivial ideal) is returned.
pub fn gamma1_bruteforce(design: &Design) -> Result<Option<usize>> {
    let (v, k) = (design.v(), design.k());
    let all: Vec<PointSet> = Combinations::new(v, k).map(PointSet::from_points).collect();
    if all.len() > 5000 {
        return Err(Error::invalid("brute-force oracle is limited to at most 5000 k-subsets"));
    }
    let mut monomials: Vec<PointSet> = vec![PointSet::new()];
    for s in 1..=k {
        monomials.extend(Combinations::new(v, s).map(PointSet::from_points));
        // rows: blocks, columns: monomials; kernel vectors are the vanishing polynomials
        let rows: Vec<Vec<usize>> = design
            .blocks()
            .iter()
            .map(|b| (0..monomials.len()).filter(|&m| monomials[m].is_subset(b)).collect())
            .collect();
        let eval = ExactMatrix::from_supports(monomials.len(), &rows)?;
        let basis = kernel(&eval);
        for f in basis {
            let nontrivial = all.iter().any(|c| {
                let val = monomials
                    .iter()
                    .zip(&f)
                    .filter(|(m, coef)| !coef.is_zero() && m.is_subset(c))
                    .fold(num_rational::BigRational::zero(), |acc, (_, coef)| acc + coef);
                !val.is_zero()
            });
            if nontrivial {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}
