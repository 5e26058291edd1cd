//! Binomial coefficients and lexicographic k-subset enumeration.

/// `C(n, k)` with saturation at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// `C(n, k)` as an `i64`; panics on overflow. Intended for small parameters.
pub fn binom_i64(n: usize, k: usize) -> i64 {
    i64::try_from(binomial(n as u64, k as u64)).expect("binomial coefficient overflows i64")
}

/// Lexicographic successor of a strictly increasing k-subset of `0..n`.
/// Returns `false` when `comb` was the last subset.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
pub fn unrank_lex(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let count = binomial((n - next - 1) as u64, remaining as u64);
            if rank < count {
                out.push(next);
                next += 1;
                break;
            }
            rank -= count;
            next += 1;
        }
    }
    out
}

/// Colexicographic rank of a strictly increasing subset; dense index into `0..C(n, k)`.
pub fn rank_colex(subset: &[usize]) -> usize {
    subset.iter().enumerate().map(|(i, &x)| binomial(x as u64, (i + 1) as u64) as usize).sum()
}

/// Lexicographic rank of a strictly increasing k-subset of `0..n`.
pub fn rank_lex(n: usize, subset: &[usize]) -> usize {
    // lex order on a subset is reverse colex order on its mirror image x -> n-1-x
    let mirrored: Vec<usize> = subset.iter().rev().map(|&x| n - 1 - x).collect();
    binomial(n as u64, subset.len() as u64) as usize - 1 - rank_colex(&mirrored)
}

/// Iterator over the k-subsets of `0..n` in lexicographic order.
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if !next_combination(&mut self.current, self.n) {
            self.done = true;
        }
        Some(out)
    }
}

/// All k-subsets of the given items, in lexicographic order of positions.
pub fn subsets_of<T: Copy>(items: &[T], k: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    Combinations::new(items.len(), k).map(move |c| c.iter().map(|&i| items[i]).collect())
}
