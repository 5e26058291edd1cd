//! The Witt-chain table of `(gamma1, gamma2)` values and its reproduction.

use serde::Serialize;

use super::bounds::ParentValues;
use super::certificate::{certify, CertifyOptions, GammaCertificate};
use super::family::FamilySpec;
use crate::designs::{projective_design, Design};
use crate::error::{Error, Result};
use crate::sts::sts;
use crate::witt::{witt10, witt11, witt12, witt22, witt23, witt24};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub key: &'static str,
    pub params: &'static str,
    pub gamma1: usize,
    pub gamma2: usize,
}

pub const TABLE: [TableRow; 8] = [
    TableRow { key: "witt24", params: "5-(24,8,1)", gamma1: 3, gamma2: 3 },
    TableRow { key: "witt23", params: "4-(23,7,1)", gamma1: 3, gamma2: 3 },
    TableRow { key: "witt22", params: "3-(22,6,1)", gamma1: 2, gamma2: 2 },
    TableRow { key: "pg24", params: "2-(21,5,1)", gamma1: 2, gamma2: 2 },
    TableRow { key: "witt12", params: "5-(12,6,1)", gamma1: 3, gamma2: 3 },
    TableRow { key: "witt11", params: "4-(11,5,1)", gamma1: 3, gamma2: 3 },
    TableRow { key: "witt10", params: "3-(10,4,1)", gamma1: 2, gamma2: 2 },
    TableRow { key: "sts9", params: "2-(9,3,1)", gamma1: 2, gamma2: 2 },
];

pub fn table_row(key: &str) -> Result<&'static TableRow> {
    TABLE.iter().find(|r| r.key == key).ok_or_else(|| {
        let keys: Vec<_> = TABLE.iter().map(|r| r.key).collect();
        Error::invalid(format!("unknown table row {key:?}; rows are {}", keys.join(", ")))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RowOutcome {
    pub row: TableRow,
    pub gamma1: Option<usize>,
    pub gamma2: Option<usize>,
    pub certificate: GammaCertificate,
}

impl RowOutcome {
    pub fn matches(&self) -> bool {
        self.gamma1 == Some(self.row.gamma1) && self.gamma2 == Some(self.row.gamma2)
    }
}

/// The design and certification options for a row.
pub fn row_setup(key: &str) -> Result<(Design, CertifyOptions)> {
    let mut opts = CertifyOptions::default();
    let design = match table_row(key)?.key {
        "witt24" => with_family(&mut opts, FamilySpec::Witt24, witt24()),
        "witt23" => with_family(&mut opts, FamilySpec::Witt23, witt23()),
        "witt22" => with_family(&mut opts, FamilySpec::Witt22, witt22()),
        "pg24" => {
            with_family(&mut opts, FamilySpec::Projective { d: 2, e: 1, q: 4 }, projective_design(2, 1, 4)?)
        }
        "witt12" => with_family(&mut opts, FamilySpec::M12Orbit, witt12()?),
        "witt11" => {
            let parent = reproduce_row("witt12")?;
            let (g1, g2) = parent
                .gamma1
                .zip(parent.gamma2)
                .ok_or_else(|| Error::Construction("witt12 values not certified".into()))?;
            opts.parent = Some(ParentValues { name: "witt12".into(), gamma1: g1, gamma2: g2 });
            let family = FamilySpec::Derived { point: 0, parent: Box::new(FamilySpec::M12Orbit) };
            with_family(&mut opts, family, witt11()?)
        }
        "witt10" => {
            let d = witt10();
            let specs = crate::poly::octagon_cover(&d, 5)?;
            with_family(&mut opts, FamilySpec::Octagon { specs }, d)
        }
        _ => with_family(&mut opts, FamilySpec::Steiner { t: 2 }, sts(9)?),
    };
    Ok((design, opts))
}

fn with_family(opts: &mut CertifyOptions, family: FamilySpec, design: Design) -> Design {
    opts.family = Some(family);
    design
}

pub fn reproduce_row(key: &str) -> Result<RowOutcome> {
    let row = *table_row(key)?;
    let (design, opts) = row_setup(key)?;
    let certificate = certify(&design, &opts)?;
    Ok(RowOutcome { row, gamma1: certificate.gamma1.value, gamma2: certificate.gamma2.value, certificate })
}
