use crate::error::{Error, Result};

/// A binary linear code of length at most 64, codewords packed into `u64`.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

// Right half B of the systematic generator [I_12 | B] of the extended Golay
// code, row i as a string of 12 bits (column 0 first).
const GOLAY_B: [&str; 12] = [
    "011111111111",
    "111011100010",
    "110111000101",
    "101110001011",
    "111100010110",
    "111000101101",
    "110001011011",
    "100010110111",
    "100101101110",
    "101011011100",
    "110110111000",
    "101101110001",
];

impl BinaryCode {
    /// Rows must be linearly independent over GF(2).
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::invalid("code length must be in 1..=64"));
        }
        if rows.iter().any(|&r| n < 64 && r >> n != 0) {
            return Err(Error::invalid("generator row wider than the code length"));
        }
        if gf2_rank(&rows) != rows.len() {
            return Err(Error::invalid("generator rows are linearly dependent over GF(2)"));
        }
        Ok(BinaryCode { n, rows })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_rows(&self) -> &[u64] {
        &self.rows
    }

    /// All `2^dimension` codewords, in Gray-code order starting from zero.
    pub fn codewords(&self) -> Vec<u64> {
        let dim = self.rows.len();
        let mut out = Vec::with_capacity(1 << dim);
        let mut w = 0u64;
        out.push(w);
        for i in 1u64..(1 << dim) {
            w ^= self.rows[i.trailing_zeros() as usize];
            out.push(w);
        }
        out
    }

    /// Number of codewords of each Hamming weight `0..=n`.
    pub fn weight_enumerator(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for w in self.codewords() {
            counts[w.count_ones() as usize] += 1;
        }
        counts
    }

    /// Every pair of generator rows (each row with itself included) has even overlap.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().all(|&a| self.rows.iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    pub fn minimum_weight(&self) -> usize {
        self.codewords().into_iter().filter(|&w| w != 0).map(|w| w.count_ones() as usize).min().unwrap_or(0)
    }
}

pub fn gf2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// The extended binary Golay code `[24, 12, 8]` from a fixed systematic generator matrix.
pub fn golay_code() -> BinaryCode {
    let rows = GOLAY_B
        .iter()
        .enumerate()
        .map(|(i, bits)| {
            let right = bits
                .bytes()
                .enumerate()
                .filter(|&(_, c)| c == b'1')
                .fold(0u64, |acc, (j, _)| acc | 1 << (12 + j));
            right | 1 << i
        })
        .collect();
    BinaryCode::new(24, rows).expect("built-in Golay generator matrix is valid")
}
