//! Certificate assembly and re-verification.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::bounds::{theorem_bounds, tightest, Bound, ParentValues};
use super::family::{auto_family, FamilySpec};
use super::gamma1::{count_threshold, gamma1, Gamma1};
use super::linearize::{gamma2_lower_linearization, verify_linearization, LinearizationCertificate};
use super::zeroset::{zero_set_check, Verdict, ZeroSetReport};
use crate::budget;
use crate::combin::binomial;
use crate::designs::{design_hash, strength, Design};
use crate::error::{Error, Result};
use crate::exactla::{incidence_matrix, rank, ExactMatrix};
use crate::pointset::PointSet;
use crate::poly::{GeneratorSet, MultilinearPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignId {
    pub v: usize,
    pub k: usize,
    pub b: usize,
    pub hash: String,
    pub name: String,
}

impl DesignId {
    pub fn of(design: &Design) -> Self {
        DesignId {
            v: design.v(),
            k: design.k(),
            b: design.num_blocks(),
            hash: design_hash(design),
            name: design.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrengthInfo {
    pub t: usize,
    pub lambda: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma2Lower {
    pub value: usize,
    /// `gamma1`, `linearization` or `bounds`.
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<LinearizationCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSetSummary {
    pub scanned: u64,
    pub verdict: Verdict,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma2Upper {
    pub value: usize,
    pub family: String,
    pub spec: FamilySpec,
    pub zero_set: ZeroSetSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma2 {
    pub lower: Gamma2Lower,
    pub upper: Gamma2Upper,
    /// Set when the bounds meet.
    pub value: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCertificate {
    pub design: DesignId,
    pub strength: StrengthInfo,
    pub gamma1: Gamma1,
    pub gamma2: Gamma2,
    pub bounds: Vec<Bound>,
    pub seed: u64,
}

impl GammaCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn gamma1_value(&self) -> Option<usize> {
        self.gamma1.value
    }

    pub fn gamma2_value(&self) -> Option<usize> {
        self.gamma2.value
    }
}

#[derive(Clone, Debug, Default)]
pub struct CertifyOptions {
    pub family: Option<FamilySpec>,
    /// Generator set for [`FamilySpec::Custom`].
    pub custom: Option<GeneratorSet>,
    /// Non-blocks to try for a linearization certificate; all non-blocks if `None`.
    pub candidates: Option<Vec<PointSet>>,
    pub parent: Option<ParentValues>,
    pub seed: u64,
}

/// Runs strength, bounds, `gamma1`, the `gamma2` upper bound (zero-set check)
/// and, if a gap remains, linearization lower bounds.
pub fn certify(design: &Design, opts: &CertifyOptions) -> Result<GammaCertificate> {
    let params = strength(design, design.k())?;
    let bounds = theorem_bounds(design, &params, opts.parent.as_ref());
    let mut g1 = gamma1(design)?;
    if g1.value.is_none() {
        let (lo, hi) = tightest(&bounds, "gamma1");
        g1.lower = g1.lower.max(lo.unwrap_or(0));
        g1.upper = match (g1.upper, hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }

    let spec = match &opts.family {
        Some(f) => f.clone(),
        None => auto_family(design)?,
    };
    let set = spec.build(design, opts.custom.as_ref())?;
    let report = zero_set_check(design, &set)?;
    if !report.is_exact() {
        return Err(zero_set_error(&report));
    }
    let upper = Gamma2Upper {
        value: set.max_degree(),
        family: spec.label().to_string(),
        spec,
        zero_set: ZeroSetSummary {
            scanned: report.scanned,
            verdict: report.verdict,
            wall_ms: report.wall_ms,
        },
    };

    let mut lower = Gamma2Lower {
        value: g1.value.unwrap_or(g1.lower),
        source: if g1.value.is_some() { "gamma1" } else { "bounds" }.to_string(),
        certificate: None,
    };
    // a certificate at s also works at every smaller s, so try from the top
    for s in (lower.value..upper.value).rev() {
        if let Some(cert) = gamma2_lower_linearization(design, s, opts.candidates.as_deref())? {
            lower = Gamma2Lower { value: s + 1, source: "linearization".into(), certificate: Some(cert) };
            break;
        }
    }
    let value = (lower.value == upper.value).then_some(upper.value);
    Ok(GammaCertificate {
        design: DesignId::of(design),
        strength: StrengthInfo { t: params.t, lambda: params.lambda },
        gamma1: g1,
        gamma2: Gamma2 { lower, upper, value },
        bounds,
        seed: opts.seed,
    })
}

pub fn zero_set_error(report: &ZeroSetReport) -> Error {
    Error::ZeroSet {
        verdict: report.verdict.name().to_string(),
        subset: report.counterexample.clone().unwrap_or_default(),
        generator: report.generator,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub path: String,
    pub message: String,
}

/// Recomputes every numerical claim of `cert` against `design`. An empty
/// result means the certificate is valid.
pub fn check_certificate(
    cert: &GammaCertificate,
    design: &Design,
    custom: Option<&GeneratorSet>,
) -> Result<Vec<CheckFailure>> {
    let mut fails = Vec::new();
    let mut fail = |path: &str, message: String| fails.push(CheckFailure { path: path.into(), message });

    let id = DesignId::of(design);
    if (cert.design.v, cert.design.k, cert.design.b) != (id.v, id.k, id.b) {
        fail("design", format!("parameters differ from the design ({} {} {})", id.v, id.k, id.b));
    }
    if cert.design.hash != id.hash {
        fail("design.hash", format!("expected {}", id.hash));
    }
    let params = strength(design, design.k())?;
    if (cert.strength.t, cert.strength.lambda) != (params.t, params.lambda) {
        fail("strength", format!("recomputed t = {}, lambda = {}", params.t, params.lambda));
    }

    let (v, k) = (design.v(), design.k());
    let limit = k.min(v - k);
    let g1 = &cert.gamma1;
    for (i, ev) in g1.evidence.iter().enumerate() {
        let path = format!("gamma1.evidence[{i}]");
        if ev.s != i + 1 || ev.s > limit {
            fail(&path, format!("evidence must list s = 1, 2, ... up to {limit}"));
            continue;
        }
        let binom = binomial(v as u64, ev.s as u64) as u64;
        let r = rank(&incidence_matrix(design, ev.s)?);
        if (ev.rank, ev.binom) != (r, binom) {
            fail(&path, format!("recomputed rank {r} of {binom}"));
        }
    }
    let first_deficient = g1.evidence.iter().find(|e| e.deficient()).map(|e| e.s);
    match g1.value {
        Some(s) => {
            if first_deficient != Some(s) || g1.evidence.last().map(|e| e.s) != Some(s) {
                fail("gamma1.value", "value is not the first rank-deficient degree".into());
            }
        }
        None => {
            if first_deficient.is_some() || g1.evidence.len() != limit {
                fail("gamma1.value", "interval claimed but the scan is incomplete or deficient".into());
            }
            let upper = count_threshold(v, design.num_blocks());
            if g1.lower < limit + 1 || (upper.is_some() && g1.upper.is_none()) {
                fail("gamma1", "interval inconsistent with the scan".into());
            }
        }
    }

    let expected_bounds = theorem_bounds(design, &params, None);
    for b in &expected_bounds {
        match cert.bounds.iter().find(|c| c.name == b.name) {
            Some(c) if c.value == b.value => {}
            _ => fail("bounds", format!("{} should be {}", b.name, b.value)),
        }
    }
    for (i, b) in cert.bounds.iter().enumerate() {
        let known = expected_bounds.iter().any(|e| e.name == b.name) || b.name.ends_with("_parent");
        if !known {
            fail(&format!("bounds[{i}]"), format!("unknown bound {}", b.name));
        }
    }

    let g2 = &cert.gamma2;
    let g1_floor = g1.value.unwrap_or(g1.lower);
    match (&g2.lower.certificate, g2.lower.source.as_str()) {
        (Some(c), "linearization") => {
            if let Err(e) = verify_linearization(design, c) {
                fail("gamma2.lower.certificate", e.to_string());
            }
            if g2.lower.value != c.s + 1 {
                fail("gamma2.lower.value", format!("certificate at s = {} gives {}", c.s, c.s + 1));
            }
        }
        (None, "gamma1") if g1.value == Some(g2.lower.value) => {}
        (None, "bounds") if g1.value.is_none() && g2.lower.value <= g1_floor => {}
        _ => fail("gamma2.lower", "source does not support the value".into()),
    }

    let up = &g2.upper;
    match up.spec.build(design, custom) {
        Err(e) => fail("gamma2.upper.spec", e.to_string()),
        Ok(set) => {
            if set.max_degree() != up.value {
                fail("gamma2.upper.value", format!("generator degree is {}", set.max_degree()));
            }
            if up.family != up.spec.label() {
                fail("gamma2.upper.family", format!("spec is {}", up.spec.label()));
            }
            let report = zero_set_check(design, &set)?;
            if report.verdict != up.zero_set.verdict || report.scanned != up.zero_set.scanned {
                fail(
                    "gamma2.upper.zero_set",
                    format!("recomputed {} over {} subsets", report.verdict.name(), report.scanned),
                );
            }
            if !report.is_exact() {
                fail("gamma2.upper.zero_set.verdict", "zero set is not exactly the blocks".into());
            }
        }
    }
    if g2.lower.value > up.value || up.value > k {
        fail("gamma2", "bounds out of order".into());
    }
    if g2.value != (g2.lower.value == up.value).then_some(up.value) {
        fail("gamma2.value", "value must be set exactly when the bounds meet".into());
    }
    Ok(fails)
}

/// Consistency of a certificate with the general inequalities
/// `floor(t/2)+1 <= gamma1 <= gamma2 <= k`, and `gamma2 <= max(t, 2)` for
/// Steiner systems (the trivial generators already have degree 2).
pub fn bound_consistency(cert: &GammaCertificate) -> Vec<String> {
    let mut out = Vec::new();
    let t = cert.strength.t;
    let g1 = cert.gamma1.value.unwrap_or(cert.gamma1.lower);
    let (g2lo, g2hi) = (cert.gamma2.lower.value, cert.gamma2.upper.value);
    if t >= 2 && g1 < t / 2 + 1 {
        out.push(format!("gamma1 = {g1} below floor(t/2)+1 = {}", t / 2 + 1));
    }
    if g1 > g2lo {
        out.push(format!("gamma1 = {g1} exceeds the gamma2 lower bound {g2lo}"));
    }
    if g2hi > cert.design.k {
        out.push(format!("gamma2 upper bound {g2hi} exceeds k"));
    }
    if cert.strength.lambda == 1 && t >= 1 && g2hi > t.max(2) {
        out.push(format!("gamma2 <= {g2hi} is weaker than max(t, 2) = {} for a Steiner system", t.max(2)));
    }
    out
}

/// Rank of the blocks-by-polynomials evaluation matrix. A rank equal to both
/// `|B|` and the number of polynomials means their cosets form a basis of the
/// coordinate ring, whose dimension is `|B|`.
pub fn coset_basis_rank(design: &Design, polys: &[MultilinearPoly]) -> Result<usize> {
    budget::check(design.num_blocks() as u128 * polys.len() as u128)?;
    if let Some(p) = polys.iter().find(|p| p.num_vars() != design.v()) {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables for a design on {} points",
            p.num_vars(),
            design.v()
        )));
    }
    let rows: Vec<Vec<BigRational>> =
        design.blocks().iter().map(|b| polys.iter().map(|p| p.eval(b)).collect()).collect();
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(rank(&ExactMatrix::from_dense(&rows)?))
}
