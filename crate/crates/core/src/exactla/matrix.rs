use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One sparse row: `(column, value)` pairs with strictly increasing columns and nonzero values.
pub type SparseRow = Vec<(usize, BigRational)>;

/// Rational matrix stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, BigRational::one())]).collect() }
    }

    /// Rows may list columns in any order; zero entries are dropped, repeated columns are summed.
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseRow>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len());
        for mut row in rows {
            if let Some(&(c, _)) = row.iter().find(|(c, _)| *c >= cols) {
                return Err(Error::Dimension(format!("column {c} out of range for {cols} columns")));
            }
            row.sort_by_key(|(c, _)| *c);
            let mut merged: SparseRow = Vec::with_capacity(row.len());
            for (c, x) in row {
                match merged.last_mut() {
                    Some((lc, lx)) if *lc == c => *lx += x,
                    _ => merged.push((c, x)),
                }
            }
            merged.retain(|(_, x)| !x.is_zero());
            data.push(merged);
        }
        Ok(ExactMatrix { rows: data.len(), cols, data })
    }

    /// A 0/1 matrix from the support column list of each row.
    pub fn from_supports(cols: usize, supports: &[Vec<usize>]) -> Result<Self> {
        Self::from_sparse_rows(
            cols,
            supports.iter().map(|s| s.iter().map(|&c| (c, BigRational::one())).collect()).collect(),
        )
    }

    pub fn from_dense(rows: &[Vec<BigRational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged dense rows".into()));
        }
        Self::from_sparse_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect()
                })
                .collect(),
        )
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let dense: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, BigRational)] {
        &self.data[r]
    }

    pub fn sparse_rows(&self) -> &[SparseRow] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        match self.data[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn dense_row(&self, r: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.cols];
        for (c, x) in &self.data[r] {
            out[*c] = x.clone();
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|r| self.dense_row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = vec![BigRational::zero(); other.cols];
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        acc[*c] += a * b;
                    }
                }
                acc.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Ok(ExactMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// `self - r * I` for a square matrix.
    pub fn shift_diagonal(&self, r: i64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("diagonal shift needs a square matrix".into()));
        }
        let rows = self
            .data
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut row = row.clone();
                row.push((i, rat(-r)));
                row
            })
            .collect();
        Self::from_sparse_rows(self.cols, rows)
    }

    /// `w · M` for a row vector `w` of length `rows`.
    pub fn left_mul_vec(&self, w: &[BigRational]) -> Result<Vec<BigRational>> {
        if w.len() != self.rows {
            return Err(Error::Dimension("vector length must equal the row count".into()));
        }
        let mut out = vec![BigRational::zero(); self.cols];
        for (coef, row) in w.iter().zip(&self.data) {
            if coef.is_zero() {
                continue;
            }
            for (c, x) in row {
                out[*c] += coef * x;
            }
        }
        Ok(out)
    }

    /// `M y` for a column vector `y` of length `cols`.
    pub fn mul_vec(&self, y: &[BigRational]) -> Result<Vec<BigRational>> {
        if y.len() != self.cols {
            return Err(Error::Dimension("vector length must equal the column count".into()));
        }
        Ok(self.data.iter().map(|row| row.iter().map(|(c, x)| x * &y[*c]).sum()).collect())
    }

    /// Header `rows cols nnz`, then one `r c value` line per nonzero (1-based indices).
    pub fn to_matrix_market(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                writeln!(out, "{} {} {}", r + 1, c + 1, x).unwrap();
            }
        }
        out
    }
}
