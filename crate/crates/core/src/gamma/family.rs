//! Generator-family selection, serializable so certificates can rebuild the
//! exact generator set they were verified with.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::designs::{derived_design, strength, Design, DesignParams};
use crate::error::{Error, Result};
use crate::poly::{
    derive_generators, gy_generators, m12_orbit_generators, octagon_cover, octagon_generators,
    partial_design_generators, projective_generators, steiner_generators, symbibd_generators,
    witt22_generators, witt23_generators, witt24_generators, GeneratorSet, OctagonSpec,
};
use crate::witt::{witt10, witt11, witt12, witt22, witt23, witt24};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum FamilySpec {
    #[serde(rename = "gY")]
    GY,
    Steiner {
        t: usize,
    },
    Partial {
        t: usize,
    },
    Symbibd,
    Projective {
        d: usize,
        e: usize,
        q: u64,
    },
    Witt24,
    Witt23,
    Witt22,
    #[serde(rename = "m12orbit")]
    M12Orbit,
    Octagon {
        specs: Vec<OctagonSpec>,
    },
    /// Generators of a fixed parent design with `x_point = 1` substituted.
    Derived {
        point: usize,
        parent: Box<FamilySpec>,
    },
    /// A generator file, identified by the SHA-256 of its canonical text.
    Custom {
        sha256: String,
    },
}

pub fn generators_hash(set: &GeneratorSet) -> String {
    hex::encode(Sha256::digest(set.to_text().as_bytes()))
}

impl FamilySpec {
    pub fn label(&self) -> &'static str {
        match self {
            FamilySpec::GY => "gY",
            FamilySpec::Steiner { .. } => "steiner",
            FamilySpec::Partial { .. } => "partial",
            FamilySpec::Symbibd => "symbibd",
            FamilySpec::Projective { .. } => "projective",
            FamilySpec::Witt24 => "witt24",
            FamilySpec::Witt23 => "witt23",
            FamilySpec::Witt22 => "witt22",
            FamilySpec::M12Orbit => "m12orbit",
            FamilySpec::Octagon { .. } => "octagon",
            FamilySpec::Derived { .. } | FamilySpec::Custom { .. } => "custom",
        }
    }

    /// The design a fixed-labelling family belongs to.
    fn home_design(&self) -> Result<Design> {
        match self {
            FamilySpec::Witt24 => Ok(witt24()),
            FamilySpec::Witt23 => Ok(witt23()),
            FamilySpec::Witt22 => Ok(witt22()),
            FamilySpec::M12Orbit => witt12(),
            _ => Err(Error::invalid(format!("family {} has no fixed design to derive from", self.label()))),
        }
    }

    pub fn build(&self, design: &Design, custom: Option<&GeneratorSet>) -> Result<GeneratorSet> {
        match self {
            FamilySpec::GY => gy_generators(design),
            FamilySpec::Steiner { t } => steiner_generators(design, *t),
            FamilySpec::Partial { t } => partial_design_generators(design, *t),
            FamilySpec::Symbibd => symbibd_generators(design),
            FamilySpec::Projective { d, e, q } => {
                let (pd, set) = projective_generators(*d, *e, *q)?;
                if !pd.same_blocks(design) {
                    return Err(Error::invalid(format!(
                        "design is not PG({d},{q}) with its {e}-subspaces in the standard labelling"
                    )));
                }
                Ok(set)
            }
            FamilySpec::Witt24 => Ok(witt24_generators()),
            FamilySpec::Witt23 => Ok(witt23_generators()),
            FamilySpec::Witt22 => Ok(witt22_generators()),
            FamilySpec::M12Orbit => Ok(m12_orbit_generators()),
            FamilySpec::Octagon { specs } => octagon_generators(design, specs),
            FamilySpec::Derived { point, parent } => {
                let home = parent.home_design()?;
                let (dd, map) = derived_design(&home, *point)?;
                if !dd.same_blocks(design) {
                    return Err(Error::invalid(format!(
                        "design is not the derived design of {} at point {point}",
                        home.name()
                    )));
                }
                derive_generators(&parent.build(&home, None)?, *point, &map)
            }
            FamilySpec::Custom { sha256 } => {
                let set = custom.ok_or_else(|| Error::invalid("custom family needs the generator file"))?;
                if &generators_hash(set) != sha256 {
                    return Err(Error::invalid("generator file does not match the recorded hash"));
                }
                Ok(set.clone())
            }
        }
    }
}

fn is_symmetric_2design(design: &Design, params: &DesignParams) -> bool {
    params.t >= 2 && design.num_blocks() == design.v() && design.k() >= 2 && design.k() + 2 <= design.v()
}

/// Family choice when none is given: the matching Witt family for the Witt
/// designs in their standard labelling, then symmetric 2-designs, then
/// Steiner systems, then `g_Y`.
pub fn auto_family(design: &Design) -> Result<FamilySpec> {
    if design.same_blocks(&witt24()) {
        return Ok(FamilySpec::Witt24);
    }
    if design.same_blocks(&witt23()) {
        return Ok(FamilySpec::Witt23);
    }
    if design.same_blocks(&witt22()) {
        return Ok(FamilySpec::Witt22);
    }
    if design.v() == 12 && design.same_blocks(&witt12()?) {
        return Ok(FamilySpec::M12Orbit);
    }
    if design.v() == 11 && design.same_blocks(&witt11()?) {
        return Ok(FamilySpec::Derived { point: 0, parent: Box::new(FamilySpec::M12Orbit) });
    }
    if design.same_blocks(&witt10()) {
        return Ok(FamilySpec::Octagon { specs: octagon_cover(design, 5)? });
    }
    let params = strength(design, design.k())?;
    if is_symmetric_2design(design, &params) {
        return Ok(FamilySpec::Symbibd);
    }
    if params.t >= 1 && params.lambda == 1 {
        return Ok(FamilySpec::Steiner { t: params.t });
    }
    Ok(FamilySpec::GY)
}
