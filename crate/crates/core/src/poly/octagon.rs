//! Alternating octagon quadratics built from a pair of disjoint blocks of a
//! 3-(10,4,1) design.
//!
//! For each point `i` of `B1`, exactly two blocks meet `B1` in `{i}` alone,
//! and each meets `B2` in a pair. Choosing one of the two pairs for every `i`
//! gives a bipartite graph between `B1` and `B2`; when it is a single 8-cycle
//! its edges, signed alternately, give the polynomial `Σ ±x_a x_b`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::generator::{Factor, Family, GeneratorSet, StructuredPoly, Term};
use crate::budget;
use crate::combin::{binomial, Combinations};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctagonSpec {
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    /// For the n-th smallest point of `b1`: use the second (in block order)
    /// of its two neighbouring blocks instead of the first.
    pub selection: [bool; 4],
}

/// The 8-cycle of an octagon spec, starting at `min(B1)` and moving to its
/// larger neighbour first.
pub fn octagon_cycle(design: &Design, spec: &OctagonSpec) -> Result<Vec<usize>> {
    let b1 = PointSet::from_points(spec.b1.iter().copied());
    let b2 = PointSet::from_points(spec.b2.iter().copied());
    if b1.len() != 4 || b2.len() != 4 {
        return Err(Error::invalid("octagon blocks must have four points"));
    }
    if !design.contains_block(&b1) || !design.contains_block(&b2) {
        return Err(Error::invalid("octagon sets must be blocks of the design"));
    }
    if !b1.is_disjoint(&b2) {
        return Err(Error::invalid(format!("blocks {{{b1}}} and {{{b2}}} are not disjoint")));
    }
    let p1 = b1.to_vec();
    let mut nbrs: Vec<[usize; 2]> = Vec::with_capacity(4);
    for (n, &i) in p1.iter().enumerate() {
        let mut through: Vec<&PointSet> =
            design.blocks().iter().filter(|b| b.intersection(&b1) == PointSet::from_points([i])).collect();
        through.sort();
        if through.len() != 2 {
            return Err(Error::invalid(format!(
                "point {i} lies in {} blocks meeting the first block only there, expected 2",
                through.len()
            )));
        }
        let pair = through[usize::from(spec.selection[n])].intersection(&b2).to_vec();
        let [a, b] = pair[..] else {
            return Err(Error::invalid("a neighbouring block does not meet the second block in a pair"));
        };
        nbrs.push([a, b]);
    }
    let mut degree = std::collections::HashMap::new();
    for pair in &nbrs {
        for &x in pair {
            *degree.entry(x).or_insert(0) += 1;
        }
    }
    if b2.iter().any(|x| degree.get(&x) != Some(&2)) {
        return Err(Error::invalid("selection does not give every point of the second block two neighbours"));
    }
    // walk B1 -> B2 -> B1 ...
    let mut cycle = vec![p1[0]];
    let (mut at1, mut via) = (0usize, nbrs[0][1]);
    loop {
        cycle.push(via);
        let next = (0..4).find(|&m| m != at1 && nbrs[m].contains(&via)).expect("degree two in B2");
        if next == 0 {
            break;
        }
        cycle.push(p1[next]);
        via = if nbrs[next][0] == via { nbrs[next][1] } else { nbrs[next][0] };
        at1 = next;
    }
    if cycle.len() != 8 {
        return Err(Error::invalid("selection splits into shorter cycles"));
    }
    Ok(cycle)
}

pub fn octagon_poly(design: &Design, spec: &OctagonSpec) -> Result<StructuredPoly> {
    let cycle = octagon_cycle(design, spec)?;
    let terms = (0..8)
        .map(|e| {
            let edge = PointSet::from_points([cycle[e], cycle[(e + 1) % 8]]);
            Term::new(if e % 2 == 0 { 1 } else { -1 }, vec![Factor::Monomial(edge)])
        })
        .collect();
    StructuredPoly::new(design.v(), terms)
}

pub fn octagon_generators(design: &Design, specs: &[OctagonSpec]) -> Result<GeneratorSet> {
    let polys = specs.iter().map(|s| octagon_poly(design, s)).collect::<Result<Vec<_>>>()?;
    GeneratorSet::with_trivial(design.v(), design.k(), Family::Octagon, polys)
}

/// Every spec (ordered disjoint block pair, selection) whose polynomial is a
/// single octagon vanishing on all blocks, in a fixed order.
pub fn octagon_search(design: &Design) -> Vec<OctagonSpec> {
    let blocks = design.sorted_blocks();
    let mut out = Vec::new();
    for a in &blocks {
        for b in blocks.iter().filter(|b| a.is_disjoint(b)) {
            for mask in 0u8..16 {
                let spec = OctagonSpec {
                    b1: a.to_vec(),
                    b2: b.to_vec(),
                    selection: [0, 1, 2, 3].map(|n| mask >> n & 1 == 1),
                };
                let Ok(p) = octagon_poly(design, &spec) else {
                    continue;
                };
                if design.blocks().iter().all(|blk| p.eval(blk) == 0) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Greedily picks vanishing octagons until no non-block k-set is a common zero,
/// then pads with further candidates up to `count`. Errors if `count` is too
/// small for the greedy cover.
pub fn octagon_cover(design: &Design, count: usize) -> Result<Vec<OctagonSpec>> {
    let (v, k) = (design.v(), design.k());
    budget::check(binomial(v as u64, k as u64))?;
    let candidates: Vec<(OctagonSpec, StructuredPoly)> = octagon_search(design)
        .into_iter()
        .map(|s| {
            let p = octagon_poly(design, &s).expect("search returns valid specs");
            (s, p)
        })
        .collect();
    let blocks = design.block_set();
    let mut remaining: Vec<PointSet> =
        Combinations::new(v, k).map(PointSet::from_points).filter(|c| !blocks.contains(c)).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while !remaining.is_empty() {
        let best = (0..candidates.len())
            .filter(|i| !chosen.contains(i))
            .max_by_key(|&i| {
                let hits = remaining.iter().filter(|c| candidates[i].1.eval(c) != 0).count();
                (hits, std::cmp::Reverse(i))
            })
            .ok_or_else(|| Error::Construction("octagon candidates leave extra zeros".into()))?;
        let before = remaining.len();
        remaining.retain(|c| candidates[best].1.eval(c) == 0);
        if remaining.len() == before {
            return Err(Error::Construction("octagon candidates leave extra zeros".into()));
        }
        chosen.push(best);
    }
    if chosen.len() > count {
        return Err(Error::invalid(format!(
            "greedy cover needs {} octagons, more than the requested {count}",
            chosen.len()
        )));
    }
    let taken: HashSet<usize> = chosen.iter().copied().collect();
    chosen.extend((0..candidates.len()).filter(|i| !taken.contains(i)).take(count - taken.len()));
    Ok(chosen.into_iter().map(|i| candidates[i].0.clone()).collect())
}
