//! Serialized shapes of the JSON outputs. Weights appear both in doubled
//! ε-coordinates (`weight2`) and in fundamental-weight coordinates.

use homquiver::{ConeVerdict, Surd, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOut {
    pub weight2: Vec<i64>,
    pub fundamental: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsOut {
    pub series: String,
    pub rank: usize,
    pub simple_roots: Vec<WeightOut>,
    pub positive_roots: Vec<WeightOut>,
    pub cartan: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityOut {
    pub sigma: Vec<usize>,
    pub dimension: usize,
    pub multiplicity_free: bool,
    pub connected_components: usize,
    pub hom_dimension: usize,
    pub dominant_sums: Vec<Vec<i64>>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityList {
    pub series: String,
    pub rank: usize,
    pub results: Vec<SimplicityOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOut {
    pub weight2: Vec<i64>,
    pub fundamental: Vec<i64>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowOut {
    pub src: usize,
    pub dst: usize,
    pub label2: Vec<i64>,
    /// `None` when the map is not a 1×1 integer.
    pub scalar: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverOut {
    pub vertices: Vec<VertexOut>,
    pub arrows: Vec<ArrowOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOut {
    pub exps: Vec<u32>,
    pub coeff: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityOut {
    /// Levi-level vertex indices.
    pub subbundle: Vec<usize>,
    pub polynomial: String,
    pub monomials: Vec<MonomialOut>,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurdOut {
    pub p: i128,
    pub q: i128,
    pub r: i128,
    pub s: i128,
    pub exact: String,
    pub approx: f64,
}

impl From<Surd> for SurdOut {
    fn from(x: Surd) -> Self {
        SurdOut {
            p: x.p,
            q: x.q,
            r: x.r,
            s: x.s,
            exact: x.to_string(),
            approx: x.to_f64(),
        }
    }
}

/// Stable slopes `b/a` lie strictly between `lower` and `upper`; a missing
/// bound means `0` or `∞`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryOut {
    pub lower: Option<SurdOut>,
    pub upper: Option<SurdOut>,
    pub rational_endpoint: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeOut {
    pub series: String,
    pub rank: usize,
    pub sigma: Vec<usize>,
    /// First Chern class of the tangent bundle in divisor coordinates.
    pub canonical: Vec<i64>,
    pub inequalities: Vec<InequalityOut>,
    pub boundary: Option<BoundaryOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionRow {
    pub exps: Vec<u32>,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionsOut {
    pub series: String,
    pub rank: usize,
    pub sigma: Vec<usize>,
    pub rows: Vec<IntersectionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KingOut {
    pub polarization: Vec<i64>,
    /// Character value at each Levi-level vertex.
    pub sigma: Vec<i128>,
    pub semistable: bool,
    pub stable: bool,
    pub verdict: ConeVerdict,
    /// Verdict of the slope inequalities at the same polarization.
    pub cone: ConeVerdict,
    pub witness: Option<Vec<usize>>,
    pub witness_weights: Option<Vec<Vec<i64>>>,
}
