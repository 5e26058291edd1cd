//! Generator sets. Family polynomials are kept as sums of products of
//! structured factors, so evaluation at a 0/1 point costs a few popcounts.
//!
//! Container text format:
//!
//! ```text
//! family steiner
//! v 7
//! k 3
//! sum            # x_0 + ... + x_{v-1} - k
//! square 0       # x_0^2 - x_0
//! poly
//! 1: 0 1
//! -1: 2
//! end
//! ```

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::multilinear::{elementary_symmetric, MultilinearPoly};
use crate::combin::binom_i64;
use crate::error::{Error, Result};
use crate::exactla::rat;
use crate::pointset::PointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `x^S`
    Monomial(PointSet),
    /// `χ_S · x - shift`
    Affine { support: PointSet, shift: i64 },
    /// `x^{S,j}`, valued `C(|S ∩ C|, j)` at `C`
    Elementary { support: PointSet, degree: usize },
    /// `Σ a_i x_i + constant`
    Linear { terms: Vec<(usize, i64)>, constant: i64 },
}

impl Factor {
    pub fn eval(&self, c: &PointSet) -> i64 {
        match self {
            Factor::Monomial(s) => i64::from(s.is_subset(c)),
            Factor::Affine { support, shift } => support.intersection_len(c) as i64 - shift,
            Factor::Elementary { support, degree } => binom_i64(support.intersection_len(c), *degree),
            Factor::Linear { terms, constant } => {
                constant + terms.iter().filter(|(i, _)| c.contains(*i)).map(|(_, a)| a).sum::<i64>()
            }
        }
    }

    pub fn expand(&self, v: usize) -> MultilinearPoly {
        match self {
            Factor::Monomial(s) => MultilinearPoly::monomial(v, s.clone(), rat(1)),
            Factor::Affine { support, shift } => MultilinearPoly::affine(v, support, *shift),
            Factor::Elementary { support, degree } => elementary_symmetric(v, support, *degree),
            Factor::Linear { terms, constant } => {
                let mut p = MultilinearPoly::constant(v, rat(*constant));
                for &(i, a) in terms {
                    p.add_term(PointSet::from_points([i]), rat(a));
                }
                p
            }
        }
    }

    fn bound(&self) -> usize {
        match self {
            Factor::Monomial(s) => s.bound(),
            Factor::Affine { support, .. } | Factor::Elementary { support, .. } => support.bound(),
            Factor::Linear { terms, .. } => terms.iter().map(|(i, _)| i + 1).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(coeff: i64, factors: Vec<Factor>) -> Self {
        Term { coeff, factors }
    }

    pub fn constant(c: i64) -> Self {
        Term::new(c, Vec::new())
    }

    fn eval(&self, c: &PointSet) -> i128 {
        let mut acc = self.coeff as i128;
        for f in &self.factors {
            if acc == 0 {
                break;
            }
            acc *= f.eval(c) as i128;
        }
        acc
    }

    /// Union of the monomial factors: the term vanishes unless this set lies in the point.
    fn guard(&self) -> PointSet {
        self.factors.iter().fold(PointSet::new(), |acc, f| match f {
            Factor::Monomial(s) => acc.union(s),
            _ => acc,
        })
    }
}

/// Integer-coefficient polynomial as a sum of products of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredPoly {
    v: usize,
    terms: Vec<Term>,
    guard: PointSet,
    degree: usize,
}

impl StructuredPoly {
    pub fn new(v: usize, terms: Vec<Term>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| t.factors.iter().any(|f| f.bound() > v)) {
            return Err(Error::invalid(format!("term {t:?} uses a variable >= {v}")));
        }
        let guard = terms.iter().map(Term::guard).reduce(|a, b| a.intersection(&b)).unwrap_or_default();
        let mut p = StructuredPoly { v, terms, guard, degree: 0 };
        p.degree = p.expand().degree();
        Ok(p)
    }

    /// Integer multiple of `p` with coprime coefficients; same zero set and ideal membership.
    pub fn from_multilinear(p: &MultilinearPoly) -> Result<Self> {
        let prim = p.primitive();
        let terms = prim
            .terms()
            .iter()
            .map(|(m, c)| {
                let c = c
                    .to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::invalid("coefficient does not fit in 64 bits"))?;
                Ok(Term::new(c, vec![Factor::Monomial(m.clone())]))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p.num_vars(), terms)
    }

    pub fn num_vars(&self) -> usize {
        self.v
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Every term contains `x^guard`, so the polynomial vanishes at points not containing it.
    pub fn guard(&self) -> &PointSet {
        &self.guard
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, c: &PointSet) -> i128 {
        if !self.guard.is_subset(c) {
            return 0;
        }
        self.terms.iter().map(|t| t.eval(c)).sum()
    }

    pub fn expand(&self) -> MultilinearPoly {
        let mut out = MultilinearPoly::zero(self.v);
        for t in &self.terms {
            let prod = t.factors.iter().fold(MultilinearPoly::constant(self.v, rat(t.coeff)), |acc, f| {
                acc.multiply(&f.expand(self.v))
            });
            out = out.add(&prod);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `x_0 + ... + x_{v-1} - k`
    CardinalitySum {
        k: usize,
    },
    /// `x_i^2 - x_i`, kept in raw form
    Idempotent(usize),
    Poly(StructuredPoly),
}

impl Generator {
    pub fn eval(&self, c: &PointSet) -> i128 {
        match self {
            Generator::CardinalitySum { k } => c.len() as i128 - *k as i128,
            Generator::Idempotent(_) => 0,
            Generator::Poly(p) => p.eval(c),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Generator::CardinalitySum { .. } => 1,
            Generator::Idempotent(_) => 2,
            Generator::Poly(p) => p.degree(),
        }
    }

    pub fn guard(&self) -> PointSet {
        match self {
            Generator::Poly(p) => p.guard().clone(),
            _ => PointSet::new(),
        }
    }

    /// Gradient at the 0/1 point of `c`.
    pub fn gradient(&self, v: usize, c: &PointSet) -> Vec<BigRational> {
        match self {
            Generator::CardinalitySum { .. } => vec![rat(1); v],
            Generator::Idempotent(i) => {
                let mut g = vec![BigRational::zero(); v];
                g[*i] = rat(if c.contains(*i) { 1 } else { -1 });
                g
            }
            Generator::Poly(p) => {
                let e = p.expand();
                (0..v).map(|i| e.partial_derivative(i).eval(c)).collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "g0")]
    G0,
    #[serde(rename = "gBJ")]
    GBJ,
    #[serde(rename = "gY")]
    GY,
    #[serde(rename = "steiner")]
    Steiner,
    #[serde(rename = "partial")]
    Partial,
    #[serde(rename = "symbibd")]
    Symbibd,
    #[serde(rename = "projective")]
    Projective,
    #[serde(rename = "witt24")]
    Witt24,
    #[serde(rename = "witt23")]
    Witt23,
    #[serde(rename = "witt22")]
    Witt22,
    #[serde(rename = "m12orbit")]
    M12Orbit,
    #[serde(rename = "octagon")]
    Octagon,
    #[serde(rename = "zonal")]
    Zonal,
    #[serde(rename = "custom")]
    Custom,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::G0,
        Family::GBJ,
        Family::GY,
        Family::Steiner,
        Family::Partial,
        Family::Symbibd,
        Family::Projective,
        Family::Witt24,
        Family::Witt23,
        Family::Witt22,
        Family::M12Orbit,
        Family::Octagon,
        Family::Zonal,
        Family::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::G0 => "g0",
            Family::GBJ => "gBJ",
            Family::GY => "gY",
            Family::Steiner => "steiner",
            Family::Partial => "partial",
            Family::Symbibd => "symbibd",
            Family::Projective => "projective",
            Family::Witt24 => "witt24",
            Family::Witt23 => "witt23",
            Family::Witt22 => "witt22",
            Family::M12Orbit => "m12orbit",
            Family::Octagon => "octagon",
            Family::Zonal => "zonal",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            Error::invalid(format!("unknown family {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    v: usize,
    k: usize,
    family: Family,
    generators: Vec<Generator>,
}

impl GeneratorSet {
    /// Checks the invariant that every family other than `custom` includes G0.
    pub fn new(v: usize, k: usize, family: Family, generators: Vec<Generator>) -> Result<Self> {
        let set = GeneratorSet { v, k, family, generators };
        for g in &set.generators {
            match g {
                Generator::Idempotent(i) if *i >= v => {
                    return Err(Error::invalid(format!("x_{i}^2 - x_{i} out of range for v = {v}")))
                }
                Generator::Poly(p) if p.num_vars() != v => {
                    return Err(Error::invalid("polynomial variable count differs from the set's v"))
                }
                _ => {}
            }
        }
        if family != Family::Custom && !set.contains_trivial() {
            return Err(Error::MissingTrivialGenerators);
        }
        Ok(set)
    }

    /// G0 followed by the given polynomials.
    pub fn with_trivial(v: usize, k: usize, family: Family, polys: Vec<StructuredPoly>) -> Result<Self> {
        let mut gens = trivial_list(v, k);
        gens.extend(polys.into_iter().map(Generator::Poly));
        Self::new(v, k, family, gens)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The generators other than the G0 markers.
    pub fn polys(&self) -> impl Iterator<Item = &StructuredPoly> {
        self.generators.iter().filter_map(|g| match g {
            Generator::Poly(p) => Some(p),
            _ => None,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(Generator::degree).max().unwrap_or(0)
    }

    pub fn contains_trivial(&self) -> bool {
        let mut squares = vec![false; self.v];
        let mut sum = false;
        for g in &self.generators {
            match g {
                Generator::CardinalitySum { k } if *k == self.k => sum = true,
                Generator::Idempotent(i) if *i < self.v => squares[*i] = true,
                _ => {}
            }
        }
        sum && squares.into_iter().all(|b| b)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("family {}\nv {}\nk {}\n", self.family, self.v, self.k);
        for g in &self.generators {
            match g {
                Generator::CardinalitySum { .. } => out.push_str("sum\n"),
                Generator::Idempotent(i) => out.push_str(&format!("square {i}\n")),
                Generator::Poly(p) => {
                    out.push_str("poly\n");
                    out.push_str(&p.expand().to_text());
                    out.push_str("end\n");
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut family = None;
        let mut v = None;
        let mut k = None;
        let mut gens = Vec::new();
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        while let Some((lineno, raw)) = lines.next() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let number = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::parse(lineno, format!("expected a number, got {s:?}")))
            };
            match key {
                "family" => family = Some(rest.parse::<Family>()?),
                "v" => v = Some(number(rest)?),
                "k" => k = Some(number(rest)?),
                "sum" => gens.push(Generator::CardinalitySum {
                    k: k.ok_or_else(|| Error::parse(lineno, "`sum` before `k`"))?,
                }),
                "square" => gens.push(Generator::Idempotent(number(rest)?)),
                "poly" => {
                    let nv = v.ok_or_else(|| Error::parse(lineno, "`poly` before `v`"))?;
                    let mut body = Vec::new();
                    let mut closed = false;
                    for (n, l) in lines.by_ref() {
                        if l.trim() == "end" {
                            closed = true;
                            break;
                        }
                        body.push((n, l));
                    }
                    if !closed {
                        return Err(Error::parse(lineno, "`poly` block without `end`"));
                    }
                    let p = MultilinearPoly::parse_lines(nv, body)?;
                    gens.push(Generator::Poly(StructuredPoly::from_multilinear(&p)?));
                }
                other => return Err(Error::parse(lineno, format!("unknown directive {other:?}"))),
            }
        }
        let v = v.ok_or_else(|| Error::parse(1, "missing `v` line"))?;
        let k = k.ok_or_else(|| Error::parse(1, "missing `k` line"))?;
        Self::new(v, k, family.unwrap_or(Family::Custom), gens)
    }
}

pub(crate) fn trivial_list(v: usize, k: usize) -> Vec<Generator> {
    std::iter::once(Generator::CardinalitySum { k }).chain((0..v).map(Generator::Idempotent)).collect()
}

/// The v + 1 generators of the trivial ideal.
pub fn trivial_generators(v: usize, k: usize) -> Result<GeneratorSet> {
    if k == 0 || k >= v {
        return Err(Error::invalid(format!("need 0 < k < v, got v = {v}, k = {k}")));
    }
    GeneratorSet::new(v, k, Family::G0, trivial_list(v, k))
}
