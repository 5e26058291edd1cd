//! Steiner triple systems, trades and Pasch configurations, and the
//! construction of 2-(v,3,2) designs whose vanishing ideal needs cubic
//! generators.

mod complete;
mod trade;

use std::collections::{BTreeSet, HashMap};

use crate::designs::Design;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

pub use complete::{build_2v32, complete_partial_sts, complete_partial_sts_avoiding, Built2v32};
pub use trade::{
    is_trade, parse_points, parse_trade, trade_foundation, trade_volume, write_trade, PartialTripleSystem,
    Trade,
};

pub fn is_admissible(v: usize) -> bool {
    v % 6 == 1 || v % 6 == 3
}

fn check_admissible(v: usize) -> Result<()> {
    if !is_admissible(v) || v < 7 {
        return Err(Error::invalid(format!(
            "no Steiner triple system on {v} points: need v ≡ 1 or 3 (mod 6) and v >= 7"
        )));
    }
    Ok(())
}

/// A 2-(v,3,1) design. Bose's construction for `v ≡ 3 (mod 6)`, Skolem's for
/// `v ≡ 1 (mod 6)`. Point `(x, i)` is labelled `i·m + x` where `m` is the
/// quasigroup order; Skolem's extra point is `v - 1`.
pub fn sts(v: usize) -> Result<Design> {
    check_admissible(v)?;
    let mut triples = Vec::new();
    if v % 6 == 3 {
        let m = v / 3;
        let label = |x: usize, i: usize| (i % 3) * m + x;
        // idempotent commutative quasigroup: (x + y) / 2 in Z_m, m odd
        let op = |x: usize, y: usize| (x + y) * m.div_ceil(2) % m;
        for x in 0..m {
            triples.push([label(x, 0), label(x, 1), label(x, 2)]);
        }
        for x in 0..m {
            for y in x + 1..m {
                for i in 0..3 {
                    triples.push([label(x, i), label(y, i), label(op(x, y), i + 1)]);
                }
            }
        }
    } else {
        let m = (v - 1) / 3;
        let n = m / 2;
        let inf = v - 1;
        let label = |x: usize, i: usize| (i % 3) * m + x;
        // Z_m addition with symbols relabelled so that x∘x = x∘(x+n) = x for x < n
        let op = |x: usize, y: usize| {
            let s = (x + y) % m;
            if s.is_multiple_of(2) {
                s / 2
            } else {
                (s - 1) / 2 + n
            }
        };
        for x in 0..n {
            triples.push([label(x, 0), label(x, 1), label(x, 2)]);
            for i in 0..3 {
                triples.push([inf, label(x + n, i), label(x, i + 1)]);
            }
        }
        for x in 0..m {
            for y in x + 1..m {
                for i in 0..3 {
                    triples.push([label(x, i), label(y, i), label(op(x, y), i + 1)]);
                }
            }
        }
    }
    let blocks = triples.into_iter().map(PointSet::from_points).collect();
    Design::new(v, 3, blocks, format!("sts{v}"))
}

/// Block index for each covered pair of a triple system.
pub(crate) fn pair_index(blocks: &[PointSet]) -> HashMap<(usize, usize), usize> {
    let mut index = HashMap::new();
    for (bi, b) in blocks.iter().enumerate() {
        let p = b.to_vec();
        for (x, y) in [(p[0], p[1]), (p[0], p[2]), (p[1], p[2])] {
            index.insert((x, y), bi);
        }
    }
    index
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// All sets of four blocks of shape `{abc, ade, bdf, cef}`, as sorted block
/// indices in lexicographic order.
pub fn pasch_configurations(design: &Design) -> Result<Vec<[usize; 4]>> {
    if design.k() != 3 {
        return Err(Error::invalid(format!(
            "Pasch configurations need a triple system, got k = {}",
            design.k()
        )));
    }
    let blocks = design.blocks();
    let pairs = pair_index(blocks);
    let mut found = BTreeSet::new();
    for (xi, x) in blocks.iter().enumerate() {
        let px = x.to_vec();
        for &a in &px {
            let [b, c] = others(&px, a);
            for (yi, y) in blocks.iter().enumerate().filter(|(yi, y)| *yi > xi && y.contains(a)) {
                let [d, e] = others(&y.to_vec(), a);
                for (d, e) in [(d, e), (e, d)] {
                    let Some(&zi) = pairs.get(&ordered(b, d)) else {
                        continue;
                    };
                    let f = third(&blocks[zi], b, d);
                    if x.contains(f) || y.contains(f) {
                        continue;
                    }
                    if let Some(&wi) = pairs.get(&ordered(c, e)) {
                        if blocks[wi].contains(f) {
                            let mut q = [xi, yi, zi, wi];
                            q.sort_unstable();
                            found.insert(q);
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

pub fn pasch_count(design: &Design) -> Result<usize> {
    Ok(pasch_configurations(design)?.len())
}

fn others(p: &[usize], a: usize) -> [usize; 2] {
    let rest: Vec<usize> = p.iter().copied().filter(|&x| x != a).collect();
    [rest[0], rest[1]]
}

fn third(b: &PointSet, x: usize, y: usize) -> usize {
    b.iter().find(|&p| p != x && p != y).expect("triple")
}

/// Upper bound on the number of Pasch configurations in an STS(v).
pub fn max_pasch(v: usize) -> usize {
    v * (v - 1) * (v - 3) / 24
}
