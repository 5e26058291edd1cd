//! Partial triple systems and trades.
//!
//! Trade files have two sections, one triple per line. An optional
//! `base 1` line before the sections switches to 1-indexed labels.
//!
//! ```text
//! base 1
//! T1:
//! 1 2 3
//! ...
//! T2:
//! 1 2 4
//! ...
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Triples with every pair of points in at most one of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTripleSystem {
    triples: Vec<PointSet>,
}

impl PartialTripleSystem {
    pub fn new(triples: Vec<PointSet>) -> Result<Self> {
        let mut pairs = BTreeSet::new();
        for t in &triples {
            if t.len() != 3 {
                return Err(Error::invalid(format!("{{{t}}} is not a triple")));
            }
            for pair in pairs_of(t) {
                if !pairs.insert(pair) {
                    return Err(Error::invalid(format!(
                        "pair {{{} {}}} lies in two triples",
                        pair.0, pair.1
                    )));
                }
            }
        }
        Ok(PartialTripleSystem { triples })
    }

    pub fn empty() -> Self {
        PartialTripleSystem { triples: Vec::new() }
    }

    pub fn triples(&self) -> &[PointSet] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn foundation(&self) -> PointSet {
        self.triples.iter().fold(PointSet::new(), |acc, t| acc.union(t))
    }

    pub fn pairs(&self) -> BTreeSet<(usize, usize)> {
        self.triples.iter().flat_map(pairs_of).collect()
    }
}

pub(crate) fn pairs_of(t: &PointSet) -> [(usize, usize); 3] {
    let p = t.to_vec();
    [(p[0], p[1]), (p[0], p[2]), (p[1], p[2])]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trade {
    t1: PartialTripleSystem,
    t2: PartialTripleSystem,
}

impl Trade {
    pub fn new(t1: Vec<PointSet>, t2: Vec<PointSet>) -> Result<Self> {
        let t1 = PartialTripleSystem::new(t1)?;
        let t2 = PartialTripleSystem::new(t2)?;
        if !is_trade(&t1, &t2) {
            return Err(Error::invalid(
                "not a trade: the two sides must be disjoint, nonempty and cover the same pairs",
            ));
        }
        Ok(Trade { t1, t2 })
    }

    /// The trade switching a Pasch configuration `{abc, ade, bdf, cef}` to
    /// `{abd, ace, bcf, def}`: one triple for each three of the four blocks,
    /// made of their pairwise meeting points.
    pub fn from_pasch(blocks: [&PointSet; 4]) -> Result<Self> {
        let mut t2 = Vec::with_capacity(4);
        for skip in 0..4 {
            let rest: Vec<&PointSet> = (0..4).filter(|&i| i != skip).map(|i| blocks[i]).collect();
            let meet = |a: &PointSet, b: &PointSet| {
                let m = a.intersection(b);
                (m.len() == 1).then(|| m.to_vec()[0])
            };
            let pts = [meet(rest[0], rest[1]), meet(rest[0], rest[2]), meet(rest[1], rest[2])];
            let pts: Option<Vec<usize>> = pts.into_iter().collect();
            let pts = pts.ok_or_else(|| Error::invalid("blocks do not form a Pasch configuration"))?;
            t2.push(PointSet::from_points(pts));
        }
        Trade::new(blocks.map(Clone::clone).to_vec(), t2)
    }

    pub fn t1(&self) -> &PartialTripleSystem {
        &self.t1
    }

    pub fn t2(&self) -> &PartialTripleSystem {
        &self.t2
    }

    pub fn volume(&self) -> usize {
        self.t1.len()
    }

    pub fn foundation(&self) -> PointSet {
        self.t1.foundation()
    }
}

/// Both sides pair-disjoint, no common triple, identical covered pairs.
pub fn is_trade(t1: &PartialTripleSystem, t2: &PartialTripleSystem) -> bool {
    let s1: BTreeSet<&PointSet> = t1.triples().iter().collect();
    !t1.is_empty() && t2.triples().iter().all(|b| !s1.contains(b)) && t1.pairs() == t2.pairs()
}

pub fn trade_volume(trade: &Trade) -> usize {
    trade.volume()
}

pub fn trade_foundation(trade: &Trade) -> PointSet {
    trade.foundation()
}

/// Parses a trade file; returns the trade and whether labels were 1-indexed.
pub fn parse_trade(text: &str) -> Result<(Trade, bool)> {
    let mut one_based = false;
    let mut section = 0;
    let mut sides: [Vec<PointSet>; 2] = [Vec::new(), Vec::new()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "T1:" => section = 1,
            "T2:" => section = 2,
            _ if section == 0 => match line.split_whitespace().collect::<Vec<_>>()[..] {
                ["base", "0"] => one_based = false,
                ["base", "1"] => one_based = true,
                _ => return Err(Error::parse(lineno + 1, "expected `base 0|1`, `T1:` or `T2:`")),
            },
            _ => {
                let pts = parse_points(line, one_based).map_err(|m| Error::parse(lineno + 1, m))?;
                if pts.len() != 3 {
                    return Err(Error::parse(lineno + 1, "a trade line must list three points"));
                }
                sides[section - 1].push(PointSet::from_points(pts));
            }
        }
    }
    let [t1, t2] = sides;
    Ok((Trade::new(t1, t2)?, one_based))
}

/// Parses whitespace-separated point labels, shifting 1-indexed input to 0.
pub fn parse_points(text: &str, one_based: bool) -> std::result::Result<Vec<usize>, String> {
    text.split_whitespace()
        .map(|tok| {
            let n: usize = tok.parse().map_err(|_| format!("not a point label: {tok:?}"))?;
            if one_based {
                n.checked_sub(1).ok_or_else(|| "label 0 in a 1-indexed file".to_string())
            } else {
                Ok(n)
            }
        })
        .collect()
}

pub fn write_trade(trade: &Trade) -> String {
    let mut out = String::new();
    for (name, side) in [("T1:", trade.t1()), ("T2:", trade.t2())] {
        out.push_str(name);
        out.push('\n');
        for t in side.triples() {
            let _ = writeln!(out, "{t}");
        }
    }
    out
}
