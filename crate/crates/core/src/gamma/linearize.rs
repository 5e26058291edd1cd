//! Lower bounds on `gamma2` by linearization: if `δ^s(C)` is a combination of
//! the block vectors `δ^s(B)` for a non-block `C`, every polynomial of degree
//! at most `s` vanishing on the blocks vanishes at `C`, so no generating set
//! of degree `s` exists.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::combin::{binomial, Combinations};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::exactla::{delta_len, delta_matrix, delta_vector, RowSpace, SpanResult};
use crate::pointset::PointSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearTerm {
    pub block: Vec<usize>,
    /// Exact rational, e.g. `-1` or `3/2`.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearizationCertificate {
    pub s: usize,
    pub non_block: Vec<usize>,
    /// Nonzero coefficients only.
    pub combination: Vec<LinearTerm>,
}

pub fn gamma2_lower_linearization(
    design: &Design,
    s: usize,
    candidates: Option<&[PointSet]>,
) -> Result<Option<LinearizationCertificate>> {
    let (v, k) = (design.v(), design.k());
    if s > k {
        return Err(Error::invalid(format!("s = {s} exceeds k = {k}")));
    }
    budget::check(design.num_blocks() as u128 * delta_len(v, s) as u128)?;
    let space = RowSpace::new(&delta_matrix(design.blocks(), v, s)?);
    let blocks = design.block_set();
    let owned: Vec<PointSet>;
    let candidates = match candidates {
        Some(c) => c,
        None => {
            budget::check(binomial(v as u64, k as u64))?;
            owned = Combinations::new(v, k).map(PointSet::from_points).collect();
            &owned
        }
    };
    for c in candidates.iter().filter(|c| c.len() == k && !blocks.contains(c)) {
        if let SpanResult::InSpan(coeffs) = space.solve(&delta_vector(c, v, s))? {
            let combination = design
                .blocks()
                .iter()
                .zip(coeffs)
                .filter(|(_, x)| !x.is_zero())
                .map(|(b, x)| LinearTerm { block: b.to_vec(), coeff: x.to_string() })
                .collect();
            return Ok(Some(LinearizationCertificate { s, non_block: c.to_vec(), combination }));
        }
    }
    Ok(None)
}

/// Re-checks a certificate against the design from scratch.
pub fn verify_linearization(design: &Design, cert: &LinearizationCertificate) -> Result<()> {
    let v = design.v();
    let c = PointSet::from_points(cert.non_block.iter().copied());
    if c.len() != design.k() || c.bound() > v {
        return Err(Error::invalid("candidate is not a k-subset of the points"));
    }
    if design.contains_block(&c) {
        return Err(Error::invalid("candidate is a block"));
    }
    let mut sum = vec![BigRational::zero(); delta_len(v, cert.s)];
    for term in &cert.combination {
        let b = PointSet::from_points(term.block.iter().copied());
        if !design.contains_block(&b) {
            return Err(Error::invalid(format!("{{{b}}} is not a block")));
        }
        let x: BigRational =
            term.coeff.parse().map_err(|_| Error::invalid(format!("bad coefficient {:?}", term.coeff)))?;
        for (acc, d) in sum.iter_mut().zip(delta_vector(&b, v, cert.s)) {
            *acc += &x * d;
        }
    }
    if sum != delta_vector(&c, v, cert.s) {
        return Err(Error::invalid("combination does not reproduce the candidate's incidence vector"));
    }
    Ok(())
}
