//! Completing partial triple systems to Steiner triple systems.
//!
//! Hill-climbing after Stinson: pick a point `x` with uncovered pairs and two
//! points `y, z` with `xy`, `xz` uncovered; add `xyz`, evicting the block on
//! `yz` if there is one and it is not fixed. Restarts use derived seeds, and
//! small orders fall back to exhaustive backtracking.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::trade::{PartialTripleSystem, Trade};
use super::{check_admissible, pair_index};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

const ATTEMPTS: usize = 64;
const BACKTRACK_MAX_V: usize = 15;

const NONE: u32 = u32::MAX;

struct State {
    v: usize,
    triples: Vec<[usize; 3]>,
    fixed: Vec<bool>,
    pair: Vec<u32>,
}

impl State {
    fn new(v: usize, fixed: &[PointSet]) -> Self {
        let mut s = State { v, triples: Vec::new(), fixed: Vec::new(), pair: vec![NONE; v * v] };
        for t in fixed {
            let p = t.to_vec();
            s.add([p[0], p[1], p[2]], true);
        }
        s
    }

    fn covered(&self, a: usize, b: usize) -> Option<usize> {
        match self.pair[a * self.v + b] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    fn set_pairs(&mut self, t: [usize; 3], value: u32) {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            self.pair[a * self.v + b] = value;
            self.pair[b * self.v + a] = value;
        }
    }

    fn add(&mut self, t: [usize; 3], fixed: bool) {
        self.set_pairs(t, self.triples.len() as u32);
        self.triples.push(t);
        self.fixed.push(fixed);
    }

    fn remove(&mut self, i: usize) {
        let t = self.triples.swap_remove(i);
        self.fixed.swap_remove(i);
        self.set_pairs(t, NONE);
        if i < self.triples.len() {
            let moved = self.triples[i];
            self.set_pairs(moved, i as u32);
        }
    }

    fn open(&self, x: usize) -> Vec<usize> {
        (0..self.v).filter(|&y| y != x && self.covered(x, y).is_none()).collect()
    }

    fn blocks(&self) -> Vec<PointSet> {
        self.triples.iter().map(|t| PointSet::from_points(*t)).collect()
    }
}

fn key(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

fn hill_climb(
    v: usize,
    fixed: &[PointSet],
    forbidden: &HashSet<[usize; 3]>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<PointSet>> {
    let target = v * (v - 1) / 6;
    let mut s = State::new(v, fixed);
    let cap = 200 * v * v * v;
    for _ in 0..cap {
        if s.triples.len() == target {
            return Some(s.blocks());
        }
        let live: Vec<usize> = (0..v).filter(|&x| !s.open(x).is_empty()).collect();
        let &x = live.choose(rng)?;
        let open = s.open(x);
        let i = rng.gen_range(0..open.len());
        let mut j = rng.gen_range(0..open.len() - 1);
        if j >= i {
            j += 1;
        }
        let (y, z) = (open[i], open[j]);
        let t = [x, y, z];
        if forbidden.contains(&key(t)) {
            continue;
        }
        match s.covered(y, z) {
            None => s.add(t, false),
            Some(b) if !s.fixed[b] => {
                s.remove(b);
                s.add(t, false);
            }
            Some(_) => {}
        }
    }
    None
}

fn backtrack(v: usize, fixed: &[PointSet], forbidden: &HashSet<[usize; 3]>) -> Option<Vec<PointSet>> {
    fn go(s: &mut State, forbidden: &HashSet<[usize; 3]>) -> bool {
        let v = s.v;
        let Some((x, y)) =
            (0..v).flat_map(|x| (x + 1..v).map(move |y| (x, y))).find(|&(x, y)| s.covered(x, y).is_none())
        else {
            return true;
        };
        for z in 0..v {
            if z == x || z == y || s.covered(x, z).is_some() || s.covered(y, z).is_some() {
                continue;
            }
            if forbidden.contains(&key([x, y, z])) {
                continue;
            }
            s.add([x, y, z], false);
            if go(s, forbidden) {
                return true;
            }
            let last = s.triples.len() - 1;
            s.remove(last);
        }
        false
    }
    let mut s = State::new(v, fixed);
    go(&mut s, forbidden).then(|| s.blocks())
}

fn attempt_seed(seed: u64, attempt: usize) -> u64 {
    seed ^ (attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// A 2-(v,3,1) design containing every triple of `p`.
pub fn complete_partial_sts(p: &PartialTripleSystem, v: usize, seed: u64) -> Result<Design> {
    complete_partial_sts_avoiding(p, v, &[], seed)
}

/// As [`complete_partial_sts`], never using a triple from `avoid`.
pub fn complete_partial_sts_avoiding(
    p: &PartialTripleSystem,
    v: usize,
    avoid: &[PointSet],
    seed: u64,
) -> Result<Design> {
    check_admissible(v)?;
    let found = p.foundation();
    if found.bound() > v {
        return Err(Error::invalid(format!("partial system uses a point >= v = {v}")));
    }
    if v < 2 * found.len() + 1 {
        return Err(Error::invalid(format!(
            "v = {v} is below 2n + 1 = {} for a partial system on n = {} points",
            2 * found.len() + 1,
            found.len()
        )));
    }
    let forbidden: HashSet<[usize; 3]> = avoid
        .iter()
        .map(|t| {
            let q = t.to_vec();
            [q[0], q[1], q[2]]
        })
        .collect();
    if p.triples().iter().any(|t| avoid.contains(t)) {
        return Err(Error::invalid("a fixed triple is also forbidden"));
    }
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(seed, attempt));
        if let Some(blocks) = hill_climb(v, p.triples(), &forbidden, &mut rng) {
            return Design::new(v, 3, blocks, format!("sts{v}"));
        }
    }
    if v <= BACKTRACK_MAX_V {
        if let Some(blocks) = backtrack(v, p.triples(), &forbidden) {
            return Design::new(v, 3, blocks, format!("sts{v}"));
        }
    }
    Err(Error::CompletionFailed { seed, attempts: ATTEMPTS })
}

/// A 2-(v,3,2) design containing `T1 ∪ (T2 ∖ {B})` but not `B`.
#[derive(Clone, Debug)]
pub struct Built2v32 {
    pub design: Design,
    /// The dropped triple `B`, a non-block.
    pub dropped: PointSet,
    /// `B` with one point swapped for a point outside the foundation.
    pub replacement: PointSet,
    pub seed: u64,
}

/// Union of an STS containing `T1` and one containing
/// `T2* = (T2 ∖ {B}) ∪ {B*}`, with `B* = B - h + ℓ` for the smallest point
/// `ℓ` outside the foundation. The second completion avoids the blocks of the
/// first so the union has no repeated block.
pub fn build_2v32(trade: &Trade, b: &PointSet, v: usize, seed: u64) -> Result<Built2v32> {
    check_admissible(v)?;
    if !trade.t2().triples().contains(b) {
        return Err(Error::invalid(format!("{{{b}}} is not a triple of T2")));
    }
    let found = trade.foundation();
    let n = found.len();
    if v < 2 * n + 3 {
        return Err(Error::invalid(format!(
            "v = {v} is below 2n + 3 = {} for a trade on n = {n} points",
            2 * n + 3
        )));
    }
    let ell = (0..v).find(|&p| !found.contains(p)).expect("v > n");
    let h = b.to_vec()[0];
    let replacement = b.without(h).with(ell);
    let mut t2_star: Vec<PointSet> = trade.t2().triples().iter().filter(|t| *t != b).cloned().collect();
    t2_star.push(replacement.clone());
    let t2_star = PartialTripleSystem::new(t2_star)?;

    let first = complete_partial_sts(trade.t1(), v, seed)?;
    let second = complete_partial_sts_avoiding(&t2_star, v, first.blocks(), seed.wrapping_add(1))?;
    let mut blocks = first.blocks().to_vec();
    blocks.extend_from_slice(second.blocks());
    let design = Design::new(v, 3, blocks, format!("2-({v},3,2)"))?;
    assert!(!design.contains_block(b), "dropped triple must not be a block");
    debug_assert_eq!(pair_index(first.blocks()).len(), v * (v - 1) / 2);
    Ok(Built2v32 { design, dropped: b.clone(), replacement, seed })
}
