//! Fixed-capacity bitsets over point labels `0..1024`.
//!
//! Blocks, monomials and candidate subsets all share this type. Trailing zero
//! words are trimmed so equality and hashing do not depend on the ambient `v`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Largest supported point count.
pub const MAX_POINTS: usize = 1024;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PointSet {
    words: SmallVec<[u64; 2]>,
}

impl PointSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        let mut s = Self::new();
        for p in points {
            s.insert(p);
        }
        s
    }

    /// Builds a set from the low `bits` of a single word.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = PointSet { words: SmallVec::from_slice(&[mask]) };
        s.trim();
        s
    }

    pub fn from_words(words: &[u64]) -> Self {
        let mut s = PointSet { words: SmallVec::from_slice(words) };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Copies the set into a zero-padded slice of exactly `out.len()` words.
    pub fn write_words(&self, out: &mut [u64]) {
        out.fill(0);
        out[..self.words.len()].copy_from_slice(&self.words);
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < MAX_POINTS, "point {p} exceeds the supported range");
        let w = p / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (p % 64);
    }

    pub fn remove(&mut self, p: usize) {
        let w = p / 64;
        if w < self.words.len() {
            self.words[w] &= !(1 << (p % 64));
            self.trim();
        }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.words.get(p / 64).is_some_and(|w| w & (1 << (p % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// One past the largest element, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * 64 + (64 - w.leading_zeros() as usize),
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &PointSet) -> usize {
        self.words.iter().zip(other.words.iter()).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut out = long.clone();
        for (a, b) in out.words.iter_mut().zip(short.words.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut out =
            PointSet { words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect() };
        out.trim();
        out
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out.trim();
        out
    }

    pub fn without(&self, p: usize) -> PointSet {
        let mut out = self.clone();
        out.remove(p);
        out
    }

    pub fn with(&self, p: usize) -> PointSet {
        let mut out = self.clone();
        out.insert(p);
        out
    }

    /// Points in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels every point through `map`; points outside `map` panic.
    pub fn map_points(&self, map: &[usize]) -> PointSet {
        PointSet::from_points(self.iter().map(|p| map[p]))
    }
}

/// Graded lexicographic order: by size, then lexicographically on the sorted points.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}
