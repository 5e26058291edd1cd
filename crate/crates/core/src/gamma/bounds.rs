use serde::{Deserialize, Serialize};

use super::gamma1::count_threshold;
use crate::designs::{Design, DesignParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub name: String,
    pub value: usize,
    #[serde(rename = "ref")]
    pub reference: String,
}

impl Bound {
    fn new(name: &str, value: usize, reference: &str) -> Self {
        Bound { name: name.into(), value, reference: reference.into() }
    }

    pub fn is_lower(&self) -> bool {
        self.name.contains("_lower")
    }

    pub fn target(&self) -> &str {
        if self.name.starts_with("gamma1") {
            "gamma1"
        } else {
            "gamma2"
        }
    }
}

/// Known values for a design this one is derived from (or residual of).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParentValues {
    pub name: String,
    pub gamma1: usize,
    pub gamma2: usize,
}

/// A-priori bounds from the strength, block count, block size and block
/// intersections, plus propagation from a parent design.
pub fn theorem_bounds(design: &Design, params: &DesignParams, parent: Option<&ParentValues>) -> Vec<Bound> {
    let mut out = Vec::new();
    if params.t >= 2 {
        out.push(Bound::new(
            "gamma1_lower_strength",
            params.t / 2 + 1,
            "a nontrivial member of the ideal of a t-design has degree > t/2",
        ));
    }
    if let Some(s) = count_threshold(design.v(), design.num_blocks()) {
        out.push(Bound::new(
            "gamma1_upper_count",
            s,
            "least s with C(v,s) > |B|: more unknowns than block equations",
        ));
    }
    out.push(Bound::new("gamma2_upper_uniform", design.k(), "k-uniform: the g_Y family has degree k"));
    // the generators x_i^2 - x_i have degree 2, so no family goes below 2
    if params.t >= 1 && params.lambda == 1 {
        out.push(Bound::new(
            "gamma2_upper_steiner",
            params.t.max(2),
            "Steiner system: g_{B,T} family of degree t, with G0 of degree 2",
        ));
    }
    if params.t >= 1 {
        if let Some(m) = design.max_intersection() {
            out.push(Bound::new(
                "gamma2_upper_max_intersection",
                (m + 1).max(2),
                "distinct blocks meet in at most m points: partial (m+1)-design family, with G0 of degree 2",
            ));
        }
    }
    if let Some(p) = parent {
        let why = format!("derived or residual design of {}", p.name);
        out.push(Bound::new("gamma1_upper_parent", p.gamma1, &why));
        out.push(Bound::new("gamma2_upper_parent", p.gamma2, &why));
    }
    out
}

/// Tightest (lower, upper) for `"gamma1"` or `"gamma2"` among the bounds.
pub fn tightest(bounds: &[Bound], target: &str) -> (Option<usize>, Option<usize>) {
    let of = |lower: bool| bounds.iter().filter(move |b| b.target() == target && b.is_lower() == lower);
    (of(true).map(|b| b.value).max(), of(false).map(|b| b.value).min())
}
