use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::ExactMatrix;

/// The Mersenne prime 2^61 - 1 used by the modular pre-pass.
pub const MODULUS: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Modular rank equal to `min(rows, cols)`, which forces the same rational rank.
    Modular,
    /// Fraction-free elimination over the integers.
    Bareiss,
}

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let s = (x as u64 & MODULUS) + (x >> 61) as u64;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

fn bigint_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = x.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn rational_mod(x: &BigRational) -> Option<u64> {
    let den = bigint_mod(x.denom());
    if den == 0 {
        return None;
    }
    Some(mulmod(bigint_mod(x.numer()), powmod(den, MODULUS - 2)))
}

/// Rank modulo 2^61 - 1; a lower bound on the rational rank.
/// `None` when some denominator vanishes modulo the prime.
pub fn modular_rank(m: &ExactMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = vec![vec![0u64; cols]; rows];
    for (r, row) in m.sparse_rows().iter().enumerate() {
        for (c, x) in row {
            a[r][*c] = rational_mod(x)?;
        }
    }
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = powmod(a[rank][col], MODULUS - 2);
        for x in &mut a[rank][col..] {
            *x = mulmod(*x, inv);
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot = &top[rank][col..];
        let update = |row: &mut Vec<u64>| {
            let f = row[col];
            if f != 0 {
                for (x, &p) in row[col..].iter_mut().zip(pivot) {
                    *x = submod(*x, mulmod(f, p));
                }
            }
        };
        if rest.len() * (cols - col) > 1 << 16 {
            rest.par_iter_mut().for_each(update);
        } else {
            rest.iter_mut().for_each(update);
        }
        rank += 1;
    }
    Some(rank)
}

/// Rows scaled to integers by the least common multiple of their denominators.
fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    m.sparse_rows()
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
            let mut dense = vec![BigInt::zero(); m.cols()];
            for (c, x) in row {
                dense[*c] = x.numer() * (&l / x.denom());
            }
            dense
        })
        .collect()
}

/// Exact rank by Bareiss fraction-free elimination. Among candidate pivot
/// rows the one with fewest nonzeros is chosen.
pub fn bareiss_rank(m: &ExactMatrix) -> usize {
    let mut a = integer_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let candidates = (rank..rows).filter(|&i| !a[i][col].is_zero());
        let Some(p) = candidates.min_by_key(|&i| a[i][col..].iter().filter(|x| !x.is_zero()).count()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Exact rank over the rationals, together with how it was certified.
pub fn rank_with_method(m: &ExactMatrix) -> (usize, RankMethod) {
    let full = m.rows().min(m.cols());
    if let Some(r) = modular_rank(m) {
        if r == full {
            return (r, RankMethod::Modular);
        }
    }
    (bareiss_rank(m), RankMethod::Bareiss)
}

pub fn rank(m: &ExactMatrix) -> usize {
    rank_with_method(m).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&ExactMatrix::identity(5)), 5);
        assert_eq!(rank(&ExactMatrix::zeros(3, 4)), 0);
        let m = ExactMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_with_method(&m).1, RankMethod::Bareiss);
        assert_eq!(bareiss_rank(&m), 2);
        assert_eq!(modular_rank(&m), Some(2));
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let m = ExactMatrix::from_dense(&[vec![half.clone(), rat(1)], vec![rat(1), rat(2)]]).unwrap();
        assert_eq!(bareiss_rank(&m), 1);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn modular_pass_never_exceeds_exact() {
        // a multiple of the modulus collapses modulo p but not over Q
        let p = BigInt::from(MODULUS);
        let m = ExactMatrix::from_dense(&[vec![BigRational::from_integer(p)]]).unwrap();
        assert_eq!(modular_rank(&m), Some(0));
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn mersenne_arithmetic() {
        let a = MODULUS - 1;
        assert_eq!(mulmod(a, a), 1);
        assert_eq!(mulmod(powmod(12345, MODULUS - 2), 12345), 1);
        assert_eq!(submod(0, 1), MODULUS - 1);
    }
}
