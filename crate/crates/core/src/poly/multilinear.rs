use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combin::subsets_of;
use crate::error::{Error, Result};
use crate::exactla::rat;
use crate::pointset::PointSet;

/// Polynomial in `x_0..x_{v-1}` with every monomial square-free. Products are
/// reduced with `x_i^2 = x_i`, which is exact on 0/1 points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    v: usize,
    terms: BTreeMap<PointSet, BigRational>,
}

impl MultilinearPoly {
    pub fn zero(v: usize) -> Self {
        MultilinearPoly { v, terms: BTreeMap::new() }
    }

    pub fn constant(v: usize, c: BigRational) -> Self {
        Self::monomial(v, PointSet::new(), c)
    }

    pub fn monomial(v: usize, vars: PointSet, coeff: BigRational) -> Self {
        let mut p = Self::zero(v);
        p.add_term(vars, coeff);
        p
    }

    pub fn variable(v: usize, i: usize) -> Self {
        Self::monomial(v, PointSet::from_points([i]), BigRational::one())
    }

    /// `χ_S · x - shift`.
    pub fn affine(v: usize, support: &PointSet, shift: i64) -> Self {
        let mut p = Self::constant(v, rat(-shift));
        for i in support.iter() {
            p.add_term(PointSet::from_points([i]), BigRational::one());
        }
        p
    }

    /// Builds from `(monomial, coefficient)` pairs; panics if a variable is `>= v`.
    pub fn from_terms(v: usize, terms: impl IntoIterator<Item = (PointSet, BigRational)>) -> Self {
        let mut p = Self::zero(v);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, vars: PointSet, coeff: BigRational) {
        assert!(vars.bound() <= self.v, "monomial {vars:?} uses a variable >= {}", self.v);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(vars).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn num_vars(&self) -> usize {
        self.v
    }

    pub fn terms(&self) -> &BTreeMap<PointSet, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, vars: &PointSet) -> BigRational {
        self.terms.get(vars).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the multilinear form; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(PointSet::len).max().unwrap_or(0)
    }

    /// Sum of the coefficients of the monomials contained in `c`.
    pub fn eval(&self, c: &PointSet) -> BigRational {
        self.terms.iter().filter(|(m, _)| m.is_subset(c)).map(|(_, x)| x).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.v = self.v.max(other.v);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.v);
        }
        MultilinearPoly { v: self.v, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    /// Product reduced to multilinear form (monomials multiply by union).
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.v.max(other.v));
        let mut acc: BTreeMap<PointSet, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.union(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc;
        out
    }

    /// Formal derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        MultilinearPoly {
            v: self.v,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.contains(i))
                .map(|(m, c)| (m.without(i), c.clone()))
                .collect(),
        }
    }

    /// Sets `x_i = value` for `value` in {0, 1}.
    pub fn substitute(&self, i: usize, value: bool) -> Self {
        let mut out = Self::zero(self.v);
        for (m, c) in &self.terms {
            if m.contains(i) {
                if value {
                    out.add_term(m.without(i), c.clone());
                }
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Renames variables: `x_i` becomes `x_{map[i]}`. Every variable used must be mapped.
    pub fn relabel(&self, new_v: usize, map: &[Option<usize>]) -> Result<Self> {
        let mut out = Self::zero(new_v);
        for (m, c) in &self.terms {
            let mut img = PointSet::new();
            for i in m.iter() {
                match map.get(i).copied().flatten() {
                    Some(j) if j < new_v => img.insert(j),
                    _ => {
                        return Err(Error::invalid(format!(
                            "variable x_{i} has no image under the relabelling"
                        )))
                    }
                }
            }
            out.add_term(img, c.clone());
        }
        Ok(out)
    }

    /// Coefficient list scaled to coprime integers with a positive leading
    /// (smallest monomial) coefficient.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.terms.values().next() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        for c in self.terms.values() {
            let scaled = c * BigRational::from_integer(den.clone());
            num = num_integer::gcd(num, scaled.to_integer());
        }
        let mut k = BigRational::new(den, num);
        if lead.is_negative() {
            k = -k;
        }
        self.scale(&k)
    }

    /// One `coeff: i1 i2 ...` line per term, monomials in graded lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&format!("{c}:"));
            for i in m.iter() {
                out.push_str(&format!(" {i}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses numbered `coeff: i1 i2 ...` lines; blank lines and `#` comments are skipped.
    pub fn parse_lines<'a>(v: usize, lines: impl IntoIterator<Item = (usize, &'a str)>) -> Result<Self> {
        let mut p = Self::zero(v);
        for (lineno, raw) in lines {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (coeff, vars) =
                line.split_once(':').ok_or_else(|| Error::parse(lineno, "expected `coeff: i1 i2 ...`"))?;
            let coeff = parse_rational(coeff.trim())
                .ok_or_else(|| Error::parse(lineno, format!("bad coefficient {:?}", coeff.trim())))?;
            let mut m = PointSet::new();
            for tok in vars.split_whitespace() {
                let i: usize =
                    tok.parse().map_err(|_| Error::parse(lineno, format!("bad variable index {tok:?}")))?;
                if i >= v {
                    return Err(Error::parse(lineno, format!("variable {i} out of range for v = {v}")));
                }
                if m.contains(i) {
                    return Err(Error::parse(lineno, "repeated variable in a monomial"));
                }
                m.insert(i);
            }
            p.add_term(m, coeff);
        }
        Ok(p)
    }

    pub fn parse(v: usize, text: &str) -> Result<Self> {
        Self::parse_lines(v, text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if m.is_empty() || !a.is_one() {
                write!(f, "{a}")?;
            }
            for (j, i) in m.iter().enumerate() {
                if j > 0 || !(m.is_empty() || a.is_one()) {
                    write!(f, "*")?;
                }
                write!(f, "x{i}")?;
            }
        }
        Ok(())
    }
}

/// `x^{C,j}`: the sum of all degree-`j` monomials in the variables of `c`.
pub fn elementary_symmetric(v: usize, c: &PointSet, j: usize) -> MultilinearPoly {
    let pts = c.to_vec();
    MultilinearPoly::from_terms(
        v,
        subsets_of(&pts, j).map(|s| (PointSet::from_points(s), BigRational::one())),
    )
}

/// `∏_j (χ_c · x - sizes[j])` in multilinear form.
pub fn zonal(v: usize, c: &PointSet, sizes: &[i64]) -> Result<MultilinearPoly> {
    let mut seen = std::collections::HashSet::new();
    for &s in sizes {
        if s < 0 || s as usize > c.len() || !seen.insert(s) {
            return Err(Error::invalid("zonal sizes must be distinct and between 0 and |c|"));
        }
    }
    Ok(sizes.iter().fold(MultilinearPoly::constant(v, BigRational::one()), |acc, &s| {
        acc.multiply(&MultilinearPoly::affine(v, c, s))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    #[test]
    fn worked_example_evaluation() {
        // 1 + x1 + 2x2 - 3x3 + 4x4 - x1x2 + 3x1x5 + 2x2x3 - 3x3x5 at {1,2,3}
        let f = MultilinearPoly::from_terms(
            6,
            [
                (ps(&[]), rat(1)),
                (ps(&[1]), rat(1)),
                (ps(&[2]), rat(2)),
                (ps(&[3]), rat(-3)),
                (ps(&[4]), rat(4)),
                (ps(&[1, 2]), rat(-1)),
                (ps(&[1, 5]), rat(3)),
                (ps(&[2, 3]), rat(2)),
                (ps(&[3, 5]), rat(-3)),
            ],
        );
        assert_eq!(f.eval(&ps(&[1, 2, 3])), rat(2));
        assert_eq!(MultilinearPoly::constant(3, rat(5)).eval(&ps(&[0, 2])), rat(5));
        let xc = MultilinearPoly::monomial(5, ps(&[1, 3]), rat(1));
        assert_eq!(xc.eval(&ps(&[1, 2, 3])), rat(1));
        assert_eq!(xc.eval(&ps(&[1, 2])), rat(0));
    }

    #[test]
    fn algebra() {
        let e = elementary_symmetric(4, &ps(&[0, 1, 3]), 2);
        assert_eq!(e.terms().len(), 3);
        assert!(e.terms().keys().all(|m| m.len() == 2));
        let x0 = MultilinearPoly::variable(2, 0);
        assert_eq!(x0.multiply(&x0), x0);
        let x01 = MultilinearPoly::monomial(2, ps(&[0, 1]), rat(1));
        assert_eq!(x01.partial_derivative(0), MultilinearPoly::variable(2, 1));
    }

    #[test]
    fn zonal_examples() {
        let z = zonal(2, &ps(&[0, 1]), &[0]).unwrap();
        assert_eq!(z, MultilinearPoly::variable(2, 0).add(&MultilinearPoly::variable(2, 1)));
        assert!(zonal(1, &ps(&[0]), &[0, 1]).unwrap().is_zero());
        assert!(zonal(3, &ps(&[0, 1]), &[0, 0]).is_err());
        assert!(zonal(3, &ps(&[0, 1]), &[3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = MultilinearPoly::from_terms(
            5,
            [(ps(&[]), rat(-2)), (ps(&[0, 4]), BigRational::new(3.into(), 2.into()))],
        );
        let text = f.to_text();
        assert_eq!(text, "-2:\n3/2: 0 4\n");
        assert_eq!(MultilinearPoly::parse(5, &text).unwrap(), f);
        assert!(MultilinearPoly::parse(3, "1: 0 5\n").is_err());
        assert!(MultilinearPoly::parse(3, "1 0\n").is_err());
        assert_eq!(f.to_string(), "-2 + 3/2*x0*x4");
    }

    #[test]
    fn primitive_form() {
        let f = MultilinearPoly::from_terms(
            3,
            [(ps(&[0]), rat(-4)), (ps(&[1]), BigRational::new(2.into(), 3.into()))],
        );
        let p = f.primitive();
        assert_eq!(p.coeff(&ps(&[0])), rat(6));
        assert_eq!(p.coeff(&ps(&[1])), rat(-1));
    }
}
