//! Exhaustive zero-set verification.
//!
//! With G0 among the generators the ideal they generate is radical, so it
//! equals the vanishing ideal of the blocks exactly when its zeros among the
//! k-subsets are the blocks.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::combin::{binomial, next_combination, rank_lex, unrank_lex};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poly::{Generator, GeneratorSet};

const CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Exact,
    /// Some generator is nonzero on a block: the set is not inside the ideal.
    MissingZero,
    /// A non-block k-set where every generator vanishes.
    ExtraZero,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Exact => "exact",
            Verdict::MissingZero => "missing-zero",
            Verdict::ExtraZero => "extra-zero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSetReport {
    pub verdict: Verdict,
    /// Lexicographically least offending k-subset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    /// Index of the generator nonvanishing on the offending block.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<usize>,
    /// k-subsets examined, up to and including the counterexample.
    pub scanned: u64,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl ZeroSetReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == Verdict::Exact
    }
}

/// Generators bucketed by the smallest point of their guard; unguarded ones
/// must be tried on every subset.
struct GuardIndex<'a> {
    gens: &'a [Generator],
    guards: Vec<PointSet>,
    unguarded: Vec<usize>,
    by_first: Vec<Vec<usize>>,
}

impl<'a> GuardIndex<'a> {
    fn new(v: usize, gens: &'a [Generator]) -> Self {
        let guards: Vec<PointSet> = gens.iter().map(Generator::guard).collect();
        let mut unguarded = Vec::new();
        let mut by_first = vec![Vec::new(); v];
        for (i, g) in guards.iter().enumerate() {
            match g.iter().next() {
                None => unguarded.push(i),
                Some(p) => by_first[p].push(i),
            }
        }
        GuardIndex { gens, guards, unguarded, by_first }
    }

    /// Generators that can be nonzero at `c`, in index order within each bucket.
    fn candidates<'b>(&'b self, c: &'b [usize], set: &'b PointSet) -> impl Iterator<Item = usize> + 'b {
        self.unguarded.iter().copied().chain(
            c.iter()
                .flat_map(move |&p| self.by_first[p].iter().copied())
                .filter(move |&i| self.guards[i].is_subset(set)),
        )
    }
}

enum Failure {
    Missing(usize),
    Extra,
}

pub fn zero_set_check(design: &Design, set: &GeneratorSet) -> Result<ZeroSetReport> {
    if !set.contains_trivial() {
        return Err(Error::MissingTrivialGenerators);
    }
    let (v, k) = (design.v(), design.k());
    if set.v() != v || set.k() != k {
        return Err(Error::Dimension(format!(
            "generators are for v = {}, k = {} but the design has v = {v}, k = {k}",
            set.v(),
            set.k()
        )));
    }
    let total = binomial(v as u64, k as u64);
    budget::check(total)?;
    let total = total as usize;
    let start = Instant::now();

    let block_ranks: HashSet<usize> = design.blocks().iter().map(|b| rank_lex(v, &b.to_vec())).collect();
    // G0 vanishes on every k-subset; only the remaining generators matter
    let (positions, extra): (Vec<usize>, Vec<Generator>) = set
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| matches!(g, Generator::Poly(_)))
        .map(|(i, g)| (i, g.clone()))
        .unzip();
    let index = GuardIndex::new(v, &extra);

    let chunks = total.div_ceil(CHUNK);
    let found = (0..chunks).into_par_iter().find_map_first(|ci| {
        let lo = ci * CHUNK;
        let hi = (lo + CHUNK).min(total);
        let mut comb = unrank_lex(v, k, lo as u128);
        let mut last_hit: Option<usize> = None;
        for rank in lo..hi {
            let c = PointSet::from_points(comb.iter().copied());
            if block_ranks.contains(&rank) {
                let bad = index.candidates(&comb, &c).find(|&g| index.gens[g].eval(&c) != 0);
                if let Some(g) = bad {
                    return Some((rank, comb, Failure::Missing(g)));
                }
            } else {
                let hit_last =
                    last_hit.is_some_and(|g| index.guards[g].is_subset(&c) && index.gens[g].eval(&c) != 0);
                if !hit_last {
                    let hit = index.candidates(&comb, &c).find(|&g| index.gens[g].eval(&c) != 0);
                    match hit {
                        Some(g) => last_hit = Some(g),
                        None => return Some((rank, comb, Failure::Extra)),
                    }
                }
            }
            next_combination(&mut comb, v);
        }
        None
    });

    let wall_ms = start.elapsed().as_millis();
    Ok(match found {
        None => ZeroSetReport {
            verdict: Verdict::Exact,
            counterexample: None,
            generator: None,
            scanned: total as u64,
            wall_ms,
        },
        Some((rank, comb, failure)) => {
            let (verdict, generator) = match failure {
                Failure::Missing(g) => (Verdict::MissingZero, Some(positions[g])),
                Failure::Extra => (Verdict::ExtraZero, None),
            };
            ZeroSetReport {
                verdict,
                counterexample: Some(comb),
                generator,
                scanned: rank as u64 + 1,
                wall_ms,
            }
        }
    })
}
