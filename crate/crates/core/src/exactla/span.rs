use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Outcome of a row-span membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult {
    /// Coefficients `c` with `c · M = w`.
    InSpan(Vec<BigRational>),
    /// A vector `y` with `M y = 0` and `w · y != 0`.
    NotInSpan(Vec<BigRational>),
}

impl SpanResult {
    pub fn coefficients(&self) -> Option<&[BigRational]> {
        match self {
            SpanResult::InSpan(c) => Some(c),
            SpanResult::NotInSpan(_) => None,
        }
    }
}

/// Reduced row echelon form of a matrix's row space. Each basis row keeps
/// the combination of original rows that produced it.
#[derive(Clone, Debug)]
pub struct RowSpace {
    rows: usize,
    cols: usize,
    // (pivot column, reduced row, combination of original rows), sorted by pivot
    basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)>,
}

fn axpy(target: &mut [BigRational], a: &BigRational, x: &[BigRational]) {
    for (t, xi) in target.iter_mut().zip(x) {
        if !xi.is_zero() {
            *t -= a * xi;
        }
    }
}

impl RowSpace {
    pub fn new(m: &ExactMatrix) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        let mut basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        for r in 0..rows {
            let mut row = m.dense_row(r);
            let mut combo = vec![BigRational::zero(); rows];
            combo[r] = BigRational::one();
            for (p, b, bc) in &basis {
                if !row[*p].is_zero() {
                    let f = row[*p].clone();
                    axpy(&mut row, &f, b);
                    axpy(&mut combo, &f, bc);
                }
            }
            let Some(p) = row.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            let inv = row[p].recip();
            for x in row.iter_mut().chain(combo.iter_mut()) {
                *x *= &inv;
            }
            for (_, b, bc) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    axpy(b, &f, &row);
                    axpy(bc, &f, &combo);
                }
            }
            let at = basis.partition_point(|(q, _, _)| *q < p);
            basis.insert(at, (p, row, combo));
        }
        RowSpace { rows, cols, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|(p, _, _)| *p).collect()
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn rref_rows(&self) -> Vec<Vec<BigRational>> {
        self.basis.iter().map(|(_, b, _)| b.clone()).collect()
    }

    /// Kernel vector attached to a non-pivot column `f`: `y_f = 1`, `y_p = -R[p][f]`.
    fn kernel_vector(&self, f: usize) -> Vec<BigRational> {
        let mut y = vec![BigRational::zero(); self.cols];
        y[f] = BigRational::one();
        for (p, b, _) in &self.basis {
            y[*p] = -b[f].clone();
        }
        y
    }

    /// Basis of `{ y : M y = 0 }`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let pivots = self.pivots();
        (0..self.cols).filter(|c| pivots.binary_search(c).is_err()).map(|f| self.kernel_vector(f)).collect()
    }

    pub fn solve(&self, w: &[BigRational]) -> Result<SpanResult> {
        if w.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector has {} entries, matrix has {} columns",
                w.len(),
                self.cols
            )));
        }
        let mut residual = w.to_vec();
        let mut coeffs = vec![BigRational::zero(); self.rows];
        for (p, b, bc) in &self.basis {
            let f = w[*p].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut residual, &f, b);
            for (c, x) in coeffs.iter_mut().zip(bc) {
                if !x.is_zero() {
                    *c += &f * x;
                }
            }
        }
        match residual.iter().position(|x| !x.is_zero()) {
            None => Ok(SpanResult::InSpan(coeffs)),
            // residual vanishes on pivot columns, so w · y_f = residual[f]
            Some(f) => Ok(SpanResult::NotInSpan(self.kernel_vector(f))),
        }
    }
}

pub fn in_row_span(m: &ExactMatrix, w: &[BigRational]) -> Result<SpanResult> {
    RowSpace::new(m).solve(w)
}

pub fn kernel(m: &ExactMatrix) -> Vec<Vec<BigRational>> {
    RowSpace::new(m).kernel_basis()
}

/// Reduced row echelon form (zero rows dropped) and its pivot columns.
pub fn rref(m: &ExactMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rs = RowSpace::new(m);
    (rs.rref_rows(), rs.pivots())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn span_membership_and_witness() {
        let m = ExactMatrix::from_i64(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]).unwrap();
        let w = vec![rat(1), rat(0), rat(-1)];
        let SpanResult::InSpan(c) = in_row_span(&m, &w).unwrap() else {
            panic!("expected membership");
        };
        assert_eq!(m.left_mul_vec(&c).unwrap(), w);

        let w = vec![rat(0), rat(0), rat(1)];
        let SpanResult::NotInSpan(y) = in_row_span(&m, &w).unwrap() else {
            panic!("expected a witness");
        };
        assert!(m.mul_vec(&y).unwrap().iter().all(Zero::is_zero));
        assert!(!dot(&w, &y).is_zero());
        assert!(in_row_span(&m, &[rat(1)]).is_err());
    }

    #[test]
    fn first_row_is_in_span() {
        let m = ExactMatrix::from_i64(&[vec![2, 0, 1], vec![0, 3, 0]]).unwrap();
        let res = in_row_span(&m, &m.dense_row(0)).unwrap();
        let c = res.coefficients().unwrap();
        assert_eq!(c, &[rat(1), rat(0)]);
    }

    #[test]
    fn rref_and_kernel() {
        let m = ExactMatrix::from_i64(&[vec![2, 4, 2], vec![1, 2, 3]]).unwrap();
        let (rows, pivots) = rref(&m);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rows[0], vec![rat(1), rat(2), rat(0)]);
        let k = kernel(&m);
        assert_eq!(k, vec![vec![rat(-2), rat(1), rat(0)]]);
    }
}
