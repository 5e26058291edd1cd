//! The Witt designs 5-(24,8,1), 4-(23,7,1), 3-(22,6,1), 5-(12,6,1),
//! 4-(11,5,1) and 3-(10,4,1).

mod golay;
mod perm;

use std::sync::OnceLock;

pub use golay::{gf2_rank, golay_code, BinaryCode};
pub use perm::{compose, from_cycles, identity, Perm, PermGroup, ORDER_CAP};

use crate::designs::{affine_design, derived_design, Design};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Supports of the weight-8 Golay codewords; point `i` is coordinate `i`.
pub fn witt24() -> Design {
    let blocks: Vec<PointSet> = golay_code()
        .codewords()
        .into_iter()
        .filter(|w| w.count_ones() == 8)
        .map(PointSet::from_mask)
        .collect();
    Design::new(24, 8, blocks, "witt24").expect("octads form a valid block list")
}

pub fn witt23() -> Design {
    derived_design(&witt24(), 0).expect("derived design of witt24").0.with_name("witt23")
}

pub fn witt22() -> Design {
    derived_design(&witt23(), 0).expect("derived design of witt23").0.with_name("witt22")
}

/// Generators of M12 in 1-indexed cycle notation.
const M12_GENERATORS: [&[&[usize]]; 2] =
    [&[&[1, 4], &[3, 10], &[5, 11], &[6, 12]], &[&[1, 8, 9], &[2, 3, 4], &[5, 12, 11], &[6, 10, 7]]];

/// The Mathieu group M12 acting on `0..12`. Computed once and cached.
pub fn m12_group() -> &'static PermGroup {
    static GROUP: OnceLock<PermGroup> = OnceLock::new();
    GROUP.get_or_init(|| {
        let gens = M12_GENERATORS
            .iter()
            .map(|cycles| from_cycles(12, cycles, true).expect("valid cycles"))
            .collect();
        PermGroup::generate(12, gens, ORDER_CAP).expect("M12 fits within the order cap")
    })
}

/// Orbit of `{1,2,3,4,5,9}` (1-indexed) under M12.
pub fn witt12() -> Result<Design> {
    let seed = PointSet::from_points([0, 1, 2, 3, 4, 8]);
    let orbit = m12_group().set_orbit(&seed);
    if orbit.len() != 132 {
        return Err(Error::Construction(format!(
            "M12 orbit of the base block has {} sets, expected 132",
            orbit.len()
        )));
    }
    Design::new(12, 6, orbit, "witt12")
}

pub fn witt11() -> Result<Design> {
    Ok(derived_design(&witt12()?, 0)?.0.with_name("witt11"))
}

const WITT10_EXTRA: [&str; 18] = [
    "1245", "1278", "1269", "1346", "1379", "1358", "2356", "2389", "2347", "4578", "4679", "5689", "1567",
    "2468", "3459", "1489", "2579", "3678",
];

/// Point 0 is the point at infinity and `(x, y)` in AG(2,3) is `1 + x + 3y`.
pub fn witt10() -> Design {
    let ag = affine_design(2, 3).expect("AG(2,3)");
    // affine_design labels (a, b) as 3a + b; here x = b, y = a
    let relabel = |p: usize| 1 + (p % 3) + 3 * (p / 3);
    let mut blocks: Vec<PointSet> =
        ag.blocks().iter().map(|line| line.iter().map(relabel).chain([0]).collect()).collect();
    blocks.extend(WITT10_EXTRA.iter().map(|s| s.bytes().map(|c| (c - b'0') as usize).collect::<PointSet>()));
    Design::new(10, 4, blocks, "witt10").expect("valid 3-(10,4,1) block list")
}
