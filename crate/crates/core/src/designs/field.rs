use crate::error::{Error, Result};

/// A small finite field with precomputed tables. Elements are `0..q`; an
/// element encodes the coefficients of its polynomial representative in base `p`.
#[derive(Clone, Debug)]
pub struct Field {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl Field {
    /// GF(q) for q in {2, 3, 4, 5, 7, 8, 9}. Extension fields use the fixed
    /// modulus x²+x+1 (q = 4), x³+x+1 (q = 8) and x²+1 over GF(3) (q = 9).
    pub fn new(q: u64) -> Result<Field> {
        // (p, degree, modulus coefficients c_0..c_{n-1} of x^n = -(c_0 + ... ))
        let (p, modulus): (usize, &[usize]) = match q {
            2 | 3 | 5 | 7 => (q as usize, &[]),
            4 => (2, &[1, 1]),
            8 => (2, &[1, 1, 0]),
            9 => (3, &[1, 0]),
            _ => return Err(Error::UnsupportedField { q }),
        };
        let q = q as usize;
        let n = modulus.len().max(1);
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; n];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;

                let prod = if modulus.is_empty() {
                    (a * b) % p
                } else {
                    let mut full = vec![0usize; 2 * n - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            full[i + j] = (full[i + j] + x * y) % p;
                        }
                    }
                    // reduce using x^n = -(c_0 + c_1 x + ... )
                    for deg in (n..full.len()).rev() {
                        let c = full[deg];
                        if c == 0 {
                            continue;
                        }
                        full[deg] = 0;
                        for (i, &m) in modulus.iter().enumerate() {
                            let idx = deg - n + i;
                            full[idx] = (full[idx] + (p - (c * m) % p)) % p;
                        }
                    }
                    encode(&full[..n])
                };
                mul[a * q + b] = prod as u8;
            }
        }
        Ok(Field { q, p, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }
}
