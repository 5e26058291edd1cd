use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::generator::{trivial_list, Factor, Family, Generator, GeneratorSet, StructuredPoly, Term};
use super::multilinear::MultilinearPoly;
use crate::budget;
use crate::combin::{binom_i64, binomial, subsets_of, Combinations};
use crate::designs::{lines_of_pg, projective_design, strength, Design};
use crate::error::{Error, Result};
use crate::exactla::{rank, ExactMatrix};
use crate::pointset::PointSet;
use crate::witt::{m12_group, witt22, witt23, witt24};

fn poly(v: usize, terms: Vec<Term>) -> StructuredPoly {
    StructuredPoly::new(v, terms).expect("family terms use in-range variables")
}

fn gbj_terms(b: &PointSet, j: &PointSet) -> Vec<Term> {
    vec![
        Term::new(1, vec![Factor::Elementary { support: b.clone(), degree: j.len() }]),
        Term::new(-binom_i64(b.len(), j.len()), vec![Factor::Monomial(j.clone())]),
    ]
}

/// `x^{B,j} - C(k, j) x^J` for `J ⊆ B`, `|B| = k`, `j = |J|`.
pub fn g_bj(v: usize, b: &PointSet, j: &PointSet, k: usize) -> Result<MultilinearPoly> {
    if b.len() != k || !j.is_subset(b) || b.bound() > v {
        return Err(Error::invalid("g_BJ needs J ⊆ B, |B| = k and points below v"));
    }
    Ok(poly(v, gbj_terms(b, j)).expand())
}

/// For every (k-1)-set `Y`: `x^Y (Σ_{j ∈ J} x_j - 1)` with `J = { j : Y ∪ {j} ∈ B }`.
pub fn gy_generators(design: &Design) -> Result<GeneratorSet> {
    let (v, k) = (design.v(), design.k());
    budget::check(binomial(v as u64, (k - 1) as u64))?;
    let mut completions: HashMap<PointSet, PointSet> = HashMap::new();
    for b in design.blocks() {
        for p in b.iter() {
            completions.entry(b.without(p)).or_default().insert(p);
        }
    }
    let polys = Combinations::new(v, k - 1)
        .map(|y| {
            let y = PointSet::from_points(y);
            let terms = match completions.get(&y) {
                Some(j) => vec![Term::new(
                    1,
                    vec![Factor::Monomial(y.clone()), Factor::Affine { support: j.clone(), shift: 1 }],
                )],
                None => vec![Term::new(-1, vec![Factor::Monomial(y.clone())])],
            };
            poly(v, terms)
        })
        .collect();
    GeneratorSet::with_trivial(v, k, Family::GY, polys)
}

/// Number of blocks through each t-subset that lies in at least one block.
fn t_cover(design: &Design, t: usize) -> HashMap<PointSet, usize> {
    let mut cover = HashMap::new();
    for b in design.blocks() {
        for s in subsets_of(&b.to_vec(), t) {
            *cover.entry(PointSet::from_points(s)).or_insert(0) += 1;
        }
    }
    cover
}

fn block_t_terms(design: &Design, t: usize) -> Vec<StructuredPoly> {
    let v = design.v();
    design
        .blocks()
        .iter()
        .flat_map(|b| {
            subsets_of(&b.to_vec(), t)
                .map(|s| poly(v, gbj_terms(b, &PointSet::from_points(s))))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `g_{B,T}` for every block and t-subset of it; requires a t-(v,k,1) design.
pub fn steiner_generators(design: &Design, t: usize) -> Result<GeneratorSet> {
    if t == 0 || t > design.k() {
        return Err(Error::invalid(format!("t = {t} must be between 1 and k")));
    }
    let cover = t_cover(design, t);
    let total = binomial(design.v() as u64, t as u64);
    if cover.values().any(|&c| c > 1) || (cover.len() as u128) < total {
        return Err(Error::invalid(format!(
            "not a {t}-({},{},1) design: some {t}-set lies in {} blocks",
            design.v(),
            design.k(),
            if cover.values().any(|&c| c > 1) { "several" } else { "no" }
        )));
    }
    GeneratorSet::with_trivial(design.v(), design.k(), Family::Steiner, block_t_terms(design, t))
}

/// Steiner-type generators plus `x^T` for every t-set covered by no block.
pub fn partial_design_generators(design: &Design, t: usize) -> Result<GeneratorSet> {
    if t == 0 || t > design.k() {
        return Err(Error::invalid(format!("t = {t} must be between 1 and k")));
    }
    let cover = t_cover(design, t);
    if cover.values().any(|&c| c > 1) {
        return Err(Error::invalid(format!("some {t}-set lies in more than one block")));
    }
    let v = design.v();
    budget::check(binomial(v as u64, t as u64))?;
    let mut polys = block_t_terms(design, t);
    polys.extend(
        Combinations::new(v, t)
            .map(PointSet::from_points)
            .filter(|s| !cover.contains_key(s))
            .map(|s| poly(v, vec![Term::new(1, vec![Factor::Monomial(s)])])),
    );
    GeneratorSet::with_trivial(v, design.k(), Family::Partial, polys)
}

/// `(k - λ) x_i x_j - Σ_{B ∋ i,j} x^{B,1} + λ²` for all pairs, for a symmetric 2-design.
pub fn symbibd_generators(design: &Design) -> Result<GeneratorSet> {
    let (v, k) = (design.v(), design.k());
    let params = strength(design, 2)?;
    if params.t < 2 || design.num_blocks() != v || k < 2 || k + 2 > v {
        return Err(Error::invalid(format!(
            "symbibd generators need a non-trivial symmetric 2-design (b = v); got t = {}, b = {}, v = {v}, and Fisher's inequality b >= v is tight only for symmetric designs",
            params.t,
            design.num_blocks()
        )));
    }
    let lambda = params.lambda_s[2] as i64;
    let mut polys = Vec::new();
    for pair in Combinations::new(v, 2) {
        let ij = PointSet::from_points(pair);
        let mut terms = vec![
            Term::new(k as i64 - lambda, vec![Factor::Monomial(ij.clone())]),
            Term::constant(lambda * lambda),
        ];
        for b in design.blocks().iter().filter(|b| ij.is_subset(b)) {
            terms.push(Term::new(-1, vec![Factor::Affine { support: b.clone(), shift: 0 }]));
        }
        polys.push(poly(v, terms));
    }
    GeneratorSet::with_trivial(v, k, Family::Symbibd, polys)
}

/// `x^{L,2} - C(q+1, 2) x^J` over lines `L` of PG(d, q) and pairs `J ⊆ L`,
/// for the design of e-dimensional subspaces.
pub fn projective_generators(d: usize, e: usize, q: u64) -> Result<(Design, GeneratorSet)> {
    let design = projective_design(d, e, q)?;
    let lines = lines_of_pg(d, q)?;
    let v = design.v();
    let polys = lines
        .iter()
        .flat_map(|l| {
            subsets_of(&l.to_vec(), 2)
                .map(|j| poly(v, gbj_terms(l, &PointSet::from_points(j))))
                .collect::<Vec<_>>()
        })
        .collect();
    let set = GeneratorSet::with_trivial(v, design.k(), Family::Projective, polys)?;
    Ok((design, set))
}

fn difference(i: usize, j: usize) -> Factor {
    Factor::Linear { terms: vec![(i, 1), (j, -1)], constant: 0 }
}

/// `(x_i - x_j)(c_B·x - 2)(c_B·x - 4)` over blocks `B` and pairs `i < j` in `B`.
pub fn witt24_generators() -> GeneratorSet {
    let d = witt24();
    let mut polys = Vec::new();
    for b in d.blocks() {
        for ij in subsets_of(&b.to_vec(), 2) {
            polys.push(poly(
                24,
                vec![Term::new(
                    1,
                    vec![
                        difference(ij[0], ij[1]),
                        Factor::Affine { support: b.clone(), shift: 2 },
                        Factor::Affine { support: b.clone(), shift: 4 },
                    ],
                )],
            ));
        }
    }
    GeneratorSet::with_trivial(24, 8, Family::Witt24, polys).expect("G0 included")
}

/// `3 + 12 x^T - 3 x^{T,2} - Σ_{C} x^{C,2}` over 3-sets `T`, where `C` runs
/// over `B ∖ T` for the blocks `B ⊇ T`.
pub fn witt23_generators() -> GeneratorSet {
    let d = witt23();
    let mut polys = Vec::new();
    for t in Combinations::new(23, 3) {
        let t = PointSet::from_points(t);
        let mut terms = vec![
            Term::constant(3),
            Term::new(12, vec![Factor::Monomial(t.clone())]),
            Term::new(-3, vec![Factor::Elementary { support: t.clone(), degree: 2 }]),
        ];
        for b in d.blocks().iter().filter(|b| t.is_subset(b)) {
            terms.push(Term::new(-1, vec![Factor::Elementary { support: b.difference(&t), degree: 2 }]));
        }
        polys.push(poly(23, terms));
    }
    GeneratorSet::with_trivial(23, 7, Family::Witt23, polys).expect("G0 included")
}

/// `(x_i - x_j)(Σ_{r ∈ B ∖ {i,j}} x_r - 1)` over blocks and pairs `i < j` in the
/// block; the pair `j, i` only flips the sign.
pub fn witt22_generators() -> GeneratorSet {
    let d = witt22();
    let mut polys = Vec::new();
    for b in d.blocks() {
        for ij in subsets_of(&b.to_vec(), 2) {
            let rest = b.without(ij[0]).without(ij[1]);
            polys.push(poly(
                22,
                vec![Term::new(
                    1,
                    vec![difference(ij[0], ij[1]), Factor::Affine { support: rest, shift: 1 }],
                )],
            ));
        }
    }
    GeneratorSet::with_trivial(22, 6, Family::Witt22, polys).expect("G0 included")
}

/// `(a, b, c, d)` standing for `x_a x_b (x_c - x_d)`, 1-indexed.
const F_TERMS: [(usize, usize, usize, usize); 9] = [
    (1, 4, 10, 11),
    (1, 5, 11, 8),
    (1, 9, 8, 10),
    (2, 9, 10, 11),
    (2, 4, 11, 8),
    (2, 5, 8, 10),
    (3, 5, 10, 11),
    (3, 9, 11, 8),
    (3, 4, 8, 10),
];

/// The cubic `F` on twelve variables, with variables renamed by `perm`.
pub fn m12_f(perm: &[u16]) -> MultilinearPoly {
    let img = |a: usize| perm[a - 1] as usize;
    let mut f = MultilinearPoly::zero(12);
    for &(a, b, c, d) in &F_TERMS {
        let ab = PointSet::from_points([img(a), img(b)]);
        f.add_term(ab.with(img(c)), crate::exactla::rat(1));
        f.add_term(ab.with(img(d)), crate::exactla::rat(-1));
    }
    f
}

/// Images of `F` under M12, each normalized to a positive leading coefficient
/// and deduplicated.
pub fn m12_orbit_polys() -> Vec<MultilinearPoly> {
    let orbit: BTreeSet<Vec<(PointSet, i64)>> = m12_group()
        .elements()
        .iter()
        .map(|g| {
            let f = m12_f(g).primitive();
            f.terms()
                .iter()
                .map(|(m, c)| (m.clone(), i64::try_from(c.to_integer()).expect("small")))
                .collect()
        })
        .collect();
    orbit
        .into_iter()
        .map(|terms| {
            MultilinearPoly::from_terms(12, terms.into_iter().map(|(m, c)| (m, crate::exactla::rat(c))))
        })
        .collect()
}

pub fn m12_orbit_generators() -> GeneratorSet {
    let polys = m12_orbit_polys()
        .iter()
        .map(|p| StructuredPoly::from_multilinear(p).expect("integer coefficients"))
        .collect();
    GeneratorSet::with_trivial(12, 6, Family::M12Orbit, polys).expect("G0 included")
}

/// Substitutes `x_point = 1` and renames the remaining variables through
/// `new_to_old` (as returned by `derived_design`). Maps G0 of the design to G0
/// of its derived design.
pub fn derive_generators(set: &GeneratorSet, point: usize, new_to_old: &[usize]) -> Result<GeneratorSet> {
    let v = set.v();
    if point >= v || new_to_old.len() + 1 != v {
        return Err(Error::invalid("point or relabelling does not match the generator set"));
    }
    let mut old_to_new = vec![None; v];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    let mut gens = Vec::new();
    for g in set.generators() {
        match g {
            Generator::CardinalitySum { k } => gens.push(Generator::CardinalitySum { k: k - 1 }),
            Generator::Idempotent(i) if *i == point => {}
            Generator::Idempotent(i) => gens.push(Generator::Idempotent(
                old_to_new[*i].ok_or_else(|| Error::invalid("relabelling misses a point"))?,
            )),
            Generator::Poly(p) => {
                let sub = p.expand().substitute(point, true).relabel(v - 1, &old_to_new)?;
                if !sub.is_zero() {
                    gens.push(Generator::Poly(StructuredPoly::from_multilinear(&sub)?));
                }
            }
        }
    }
    GeneratorSet::new(v - 1, set.k() - 1, Family::Custom, gens)
}

/// Column rank at the 0/1 point of `c` of the matrix of partial derivatives
/// (one row per generator, one column per variable).
pub fn jacobian_rank(set: &GeneratorSet, c: &PointSet) -> Result<usize> {
    let v = set.v();
    let rows = set
        .generators()
        .iter()
        .map(|g| g.gradient(v, c).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    Ok(rank(&ExactMatrix::from_sparse_rows(v, rows)?))
}

/// G0 plus the given polynomials, tagged `custom`.
pub fn custom_generators(v: usize, k: usize, polys: &[MultilinearPoly]) -> Result<GeneratorSet> {
    let mut gens = trivial_list(v, k);
    for p in polys {
        gens.push(Generator::Poly(StructuredPoly::from_multilinear(p)?));
    }
    GeneratorSet::new(v, k, Family::Custom, gens)
}
