//! Projective and affine geometries over small fields.

use std::collections::{BTreeSet, HashMap};

use super::{Block, Design, Field};
use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Projective points of PG(d, q): normalized homogeneous coordinates (first
/// nonzero entry 1), sorted lexicographically. Index in this list = point label.
fn projective_points(field: &Field, dim: usize) -> Vec<Vec<usize>> {
    let q = field.order();
    let mut out = Vec::new();
    let mut coords = vec![0usize; dim];
    loop {
        if coords.iter().find(|&&c| c != 0) == Some(&1) {
            out.push(coords.clone());
        }
        // odometer, last coordinate fastest => lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < q {
                break;
            }
            coords[i] = 0;
        }
    }
}

fn normalize(field: &Field, v: &mut [usize]) -> bool {
    let Some(&lead) = v.iter().find(|&&c| c != 0) else {
        return false;
    };
    let inv = field.inv(lead).expect("nonzero");
    for c in v.iter_mut() {
        *c = field.mul(*c, inv);
    }
    true
}

/// Every `rank x n` matrix in reduced row echelon form over the field.
fn rref_bases(field: &Field, rank: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    let q = field.order();
    let mut out = Vec::new();
    for pivots in Combinations::new(n, rank) {
        // free positions: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..rank)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let total = q.pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0usize; n]; rank];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = code % q;
                code /= q;
            }
            out.push(rows);
        }
    }
    out
}

/// Points of PG(d, q) and all e-dimensional projective subspaces as blocks.
pub fn projective_design(d: usize, e: usize, q: u64) -> Result<Design> {
    if e < 1 || e >= d {
        return Err(Error::invalid(format!("need 1 <= e < d, got d = {d}, e = {e}")));
    }
    let field = Field::new(q)?;
    let points = projective_points(&field, d + 1);
    let index: HashMap<&[usize], usize> = points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let qq = field.order();
    let rank = e + 1;

    let mut blocks = BTreeSet::new();
    for basis in rref_bases(&field, rank, d + 1) {
        let mut block = PointSet::new();
        for mut code in 1..qq.pow(rank as u32) {
            let mut vec = vec![0usize; d + 1];
            for row in &basis {
                let a = code % qq;
                code /= qq;
                for (slot, &x) in vec.iter_mut().zip(row) {
                    *slot = field.add(*slot, field.mul(a, x));
                }
            }
            if normalize(&field, &mut vec) {
                block.insert(index[vec.as_slice()]);
            }
        }
        blocks.insert(block);
    }
    Design::new(
        points.len(),
        (qq.pow(rank as u32) - 1) / (qq - 1),
        blocks.into_iter().collect(),
        format!("PG({d},{q})-{e}-spaces"),
    )
}

/// All lines of PG(d, q), each of size q + 1.
pub fn lines_of_pg(d: usize, q: u64) -> Result<Vec<Block>> {
    if d < 2 {
        return Err(Error::invalid(format!("PG({d},{q}) has a single line")));
    }
    Ok(projective_design(d, 1, q)?.blocks().to_vec())
}

/// Points and lines of the affine space AG(n, q). Points are coordinate
/// vectors in lexicographic order.
pub fn affine_design(n: usize, q: u64) -> Result<Design> {
    if n < 2 {
        return Err(Error::invalid("AG(n, q) needs n >= 2"));
    }
    let field = Field::new(q)?;
    let qq = field.order();
    let num = qq.pow(n as u32);
    let coords = |mut x: usize| -> Vec<usize> {
        let mut c = vec![0; n];
        for slot in c.iter_mut().rev() {
            *slot = x % qq;
            x /= qq;
        }
        c
    };
    let label = |c: &[usize]| c.iter().fold(0, |acc, &x| acc * qq + x);
    let directions: Vec<Vec<usize>> = projective_points(&field, n);
    let mut blocks = BTreeSet::new();
    for p in 0..num {
        let base = coords(p);
        for dir in &directions {
            let line: PointSet = (0..qq)
                .map(|t| {
                    let pt: Vec<usize> =
                        base.iter().zip(dir).map(|(&b, &d)| field.add(b, field.mul(t, d))).collect();
                    label(&pt)
                })
                .collect();
            blocks.insert(line);
        }
    }
    Design::new(num, qq, blocks.into_iter().collect(), format!("AG({n},{q})"))
}
