use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Cap on the number of elements a closure may enumerate.
pub const ORDER_CAP: usize = 200_000;

/// Permutation of `0..degree` as an image array: `p[i]` is the image of `i`.
pub type Perm = Box<[u16]>;

pub fn identity(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

/// Apply `p` first, then `q`.
pub fn compose(p: &[u16], q: &[u16]) -> Perm {
    p.iter().map(|&i| q[i as usize]).collect()
}

/// Builds a permutation from cycle notation. With `one_indexed`, labels are shifted down by one.
pub fn from_cycles(degree: usize, cycles: &[&[usize]], one_indexed: bool) -> Result<Perm> {
    let shift = usize::from(one_indexed);
    let mut img: Vec<u16> = (0..degree as u16).collect();
    let mut seen = HashSet::new();
    for cycle in cycles {
        for (pos, &a) in cycle.iter().enumerate() {
            let b = cycle[(pos + 1) % cycle.len()];
            let (a, b) =
                (a.checked_sub(shift).filter(|&x| x < degree), b.checked_sub(shift).filter(|&x| x < degree));
            let (Some(a), Some(b)) = (a, b) else {
                return Err(Error::invalid("cycle entry out of range"));
            };
            if !seen.insert(a) {
                return Err(Error::invalid("cycles are not disjoint"));
            }
            img[a] = b as u16;
        }
    }
    Ok(img.into_boxed_slice())
}

/// A permutation group given by generators, with all elements enumerated.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure under right multiplication by the generators.
    pub fn generate(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        for g in &generators {
            let mut hit = vec![false; degree];
            if g.len() != degree {
                return Err(Error::invalid("generator has the wrong degree"));
            }
            for &x in g.iter() {
                if x as usize >= degree || std::mem::replace(&mut hit[x as usize], true) {
                    return Err(Error::invalid("generator is not a bijection"));
                }
            }
        }
        let id = identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    if elements.len() >= cap {
                        return Err(Error::Construction(format!(
                            "group closure exceeds the order cap of {cap}"
                        )));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup { degree, generators, elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &[u16]) -> bool {
        self.elements.iter().any(|e| &e[..] == p)
    }

    /// Orbit of a point set, sorted.
    pub fn set_orbit(&self, set: &PointSet) -> Vec<PointSet> {
        let pts = set.to_vec();
        let mut orbit: Vec<PointSet> = self
            .elements
            .iter()
            .map(|g| pts.iter().map(|&p| g[p] as usize).collect())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        orbit.sort();
        orbit
    }

    /// Size of the orbit of an ordered tuple of points.
    pub fn tuple_orbit_size(&self, tuple: &[usize]) -> usize {
        self.elements
            .iter()
            .map(|g| tuple.iter().map(|&p| g[p]).collect::<Vec<u16>>())
            .collect::<HashSet<_>>()
            .len()
    }
}
