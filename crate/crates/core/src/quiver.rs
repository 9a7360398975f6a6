//! Finite induced subquivers of `Q_{G/P}`, their representations, the Borel
//! relations and the flatness condition `θ∧θ = θφ`.
//!
//! Arrows go from `λ` to `λ + α` for `α` a weight of the nilradical. A missing
//! vertex carries the zero space, so paths leaving the vertex set vanish.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix};
use crate::parabolic::ParabolicData;
use crate::rootsys::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowMode {
    /// One arrow per weight of `n`.
    #[default]
    Full,
    /// Only the weights of `n/[n,n]`.
    Reduced,
}

impl std::str::FromStr for ArrowMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(ArrowMode::Full),
            "reduced" => Ok(ArrowMode::Reduced),
            _ => Err(Error::Invalid(format!("unknown arrow mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: Weight,
    /// Positive root id of the label.
    pub label_id: usize,
}

#[derive(Clone, Debug)]
pub struct InducedQuiver {
    parabolic: ParabolicData,
    vertices: Vec<Weight>,
    arrows: Vec<Arrow>,
    mode: ArrowMode,
    vertex_index: HashMap<Weight, usize>,
    arrow_index: HashMap<(usize, usize), usize>,
}

pub fn induced_quiver(
    p: &ParabolicData,
    vertex_weights: &[Weight],
    mode: ArrowMode,
) -> Result<InducedQuiver> {
    InducedQuiver::new(p, vertex_weights, mode)
}

impl InducedQuiver {
    pub fn new(p: &ParabolicData, vertex_weights: &[Weight], mode: ArrowMode) -> Result<Self> {
        let mut vertex_index = HashMap::with_capacity(vertex_weights.len());
        for (i, w) in vertex_weights.iter().enumerate() {
            if w.tag() != p.system().tag() {
                return Err(Error::MismatchedSystem);
            }
            if !p.is_levi_dominant(w) {
                return Err(Error::NotLeviDominant(w.clone()));
            }
            if vertex_index.insert(w.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(w.clone()));
            }
        }
        let labels: Vec<usize> = p
            .nilradical()
            .iter()
            .copied()
            .filter(|&id| mode == ArrowMode::Full || p.is_degree_one(id))
            .collect();
        let roots = p.system().positive_roots();
        let mut arrows = Vec::new();
        let mut arrow_index = HashMap::new();
        for (s, w) in vertex_weights.iter().enumerate() {
            for &id in &labels {
                let t = w + &roots[id];
                if let Some(&target) = vertex_index.get(&t) {
                    arrow_index.insert((s, id), arrows.len());
                    arrows.push(Arrow {
                        source: s,
                        target,
                        label: roots[id].clone(),
                        label_id: id,
                    });
                }
            }
        }
        Ok(InducedQuiver {
            parabolic: p.clone(),
            vertices: vertex_weights.to_vec(),
            arrows,
            mode,
            vertex_index,
            arrow_index,
        })
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn mode(&self) -> ArrowMode {
        self.mode
    }

    pub fn vertex_of(&self, w: &Weight) -> Option<usize> {
        self.vertex_index.get(w).copied()
    }

    /// Arrow leaving `source` with the given label root id.
    pub fn arrow_from(&self, source: usize, label_id: usize) -> Option<usize> {
        self.arrow_index.get(&(source, label_id)).copied()
    }

    pub fn out_arrows(&self, source: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == source)
    }

    /// Graphviz rendering: nodes labeled by ε-coordinates, edges by the root.
    pub fn to_dot(&self) -> String {
        self.dot_with(|_| None)
    }

    pub(crate) fn dot_with(&self, edge_extra: impl Fn(usize) -> Option<String>) -> String {
        let mut out = String::from("digraph quiver {\n");
        for (i, w) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{w}\"];");
        }
        for (k, a) in self.arrows.iter().enumerate() {
            let extra = edge_extra(k).map(|e| format!(" {e}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"{}];",
                a.source, a.target, a.label, extra
            );
        }
        out.push_str("}\n");
        out
    }
}

/// A representation: a vector space per vertex and a matrix per arrow.
#[derive(Clone, Debug)]
pub struct QuiverRep {
    quiver: InducedQuiver,
    dims: Vec<usize>,
    maps: Vec<QMatrix>,
}

impl QuiverRep {
    pub fn new(quiver: InducedQuiver, dims: Vec<usize>, maps: Vec<QMatrix>) -> Result<Self> {
        if dims.len() != quiver.vertices.len() {
            return Err(Error::Invalid(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                quiver.vertices.len()
            )));
        }
        if maps.len() != quiver.arrows.len() {
            return Err(Error::Invalid(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows.len()
            )));
        }
        for (k, (a, m)) in quiver.arrows.iter().zip(&maps).enumerate() {
            let expected = (dims[a.target], dims[a.source]);
            if m.shape() != expected {
                return Err(Error::ShapeMismatch {
                    arrow: k,
                    got: m.shape(),
                    expected,
                });
            }
        }
        Ok(QuiverRep { quiver, dims, maps })
    }

    /// All maps zero.
    pub fn zero_maps(quiver: InducedQuiver, dims: Vec<usize>) -> Result<Self> {
        let maps = quiver
            .arrows
            .iter()
            .map(|a| QMatrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Self::new(quiver, dims, maps)
    }

    pub fn quiver(&self) -> &InducedQuiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[QMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &QMatrix {
        &self.maps[arrow]
    }

    pub fn set_map(&mut self, arrow: usize, m: QMatrix) -> Result<()> {
        let a = &self.quiver.arrows[arrow];
        let expected = (self.dims[a.target], self.dims[a.source]);
        if m.shape() != expected {
            return Err(Error::ShapeMismatch {
                arrow,
                got: m.shape(),
                expected,
            });
        }
        self.maps[arrow] = m;
        Ok(())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Arrows between supported vertices carrying a nonzero map.
    pub fn nonzero_arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.quiver
            .arrows
            .iter()
            .zip(&self.maps)
            .filter(|(a, m)| self.dims[a.source] > 0 && self.dims[a.target] > 0 && !m.is_zero())
            .map(|(a, _)| a)
    }

    /// Same vertices and maps restricted to the arrows of `n/[n,n]`.
    pub fn reduced_view(&self) -> Result<QuiverRep> {
        let quiver = InducedQuiver::new(&self.quiver.parabolic, &self.quiver.vertices, ArrowMode::Reduced)?;
        let maps = quiver
            .arrows
            .iter()
            .map(|a| {
                let k = self
                    .quiver
                    .arrow_from(a.source, a.label_id)
                    .expect("reduced arrows are a subset of full arrows");
                self.maps[k].clone()
            })
            .collect();
        QuiverRep::new(quiver, self.dims.clone(), maps)
    }

    /// Composite map along the arrow `λ --label--> λ+label`, or a zero matrix
    /// of the right shape when the arrow or its target is missing.
    fn step(&self, source: usize, label_id: usize) -> Option<(usize, &QMatrix)> {
        let k = self.quiver.arrow_from(source, label_id)?;
        Some((self.quiver.arrows[k].target, &self.maps[k]))
    }

    pub fn to_dot(&self) -> String {
        self.quiver.dot_with(|k| {
            self.maps[k]
                .as_scalar()
                .map(|s| format!("taillabel=\"{s}\""))
        })
    }
}

/// `g(α at λ+β)·g(β at λ) − g(β at λ+α)·g(α at λ) − N_{αβ}·g(α+β at λ) = 0`,
/// with `α < β` in root order. Missing terms are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub alpha: usize,
    pub beta: usize,
    /// Arrows `(λ → λ+β, λ+β → ν)`.
    pub beta_then_alpha: Option<(usize, usize)>,
    /// Arrows `(λ → λ+α, λ+α → ν)`.
    pub alpha_then_beta: Option<(usize, usize)>,
    /// Arrow `λ → ν` labeled `α+β`, if `α+β` is a root and the arrow exists.
    pub direct: Option<usize>,
    pub coefficient: i8,
}

impl Relation {
    pub fn is_commutativity(&self) -> bool {
        self.coefficient == 0
    }
}

pub fn relation_instances(quiver: &InducedQuiver) -> Result<Vec<Relation>> {
    let p = &quiver.parabolic;
    if !p.is_borel() {
        return Err(Error::UnsupportedParabolic);
    }
    let sys = p.system();
    let roots = sys.positive_roots();
    let labels: Vec<usize> = p.nilradical().to_vec();
    let path = |start: usize, first: usize, second: usize| -> Option<(usize, usize)> {
        let a1 = quiver.arrow_from(start, first)?;
        let a2 = quiver.arrow_from(quiver.arrows[a1].target, second)?;
        Some((a1, a2))
    };
    let mut out = Vec::new();
    for (s, lambda) in quiver.vertices.iter().enumerate() {
        for (i, &alpha) in labels.iter().enumerate() {
            for &beta in &labels[i + 1..] {
                let sum = &roots[alpha] + &roots[beta];
                let Some(target) = quiver.vertex_of(&(lambda + &sum)) else {
                    continue;
                };
                let coefficient = sys.chevalley_by_id(alpha, beta);
                let direct = sys
                    .root_id(&sum)
                    .and_then(|id| quiver.arrow_from(s, id))
                    .filter(|_| coefficient != 0);
                let rel = Relation {
                    source: s,
                    target,
                    alpha,
                    beta,
                    beta_then_alpha: path(s, beta, alpha),
                    alpha_then_beta: path(s, alpha, beta),
                    direct,
                    coefficient,
                };
                if rel.beta_then_alpha.is_some() || rel.alpha_then_beta.is_some() || rel.direct.is_some() {
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessViolation {
    pub vertex: usize,
    pub alpha: Weight,
    pub beta: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub flat: bool,
    pub checked: usize,
    pub violation: Option<FlatnessViolation>,
}

/// Checks `e_α e_β − e_β e_α = N_{αβ} e_{α+β}` on every vertex for every pair
/// of nilradical weights that can reach a vertex in two steps.
pub fn verify_flatness(rep: &QuiverRep) -> Result<FlatnessReport> {
    let quiver = &rep.quiver;
    if quiver.mode != ArrowMode::Full {
        return Err(Error::ModeMismatch);
    }
    let p = &quiver.parabolic;
    let sys = p.system();
    let roots = sys.positive_roots();
    let nil: BTreeSet<usize> = p.nilradical().iter().copied().collect();
    let mut checked = 0;
    for lambda in 0..quiver.vertices.len() {
        if rep.dims[lambda] == 0 {
            continue;
        }
        // Pairs {α, β} for which some term of the identity is nonzero.
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (_, a1) in quiver.out_arrows(lambda) {
            for (_, a2) in quiver.out_arrows(a1.target) {
                if a1.label_id != a2.label_id {
                    pairs.insert((a1.label_id.min(a2.label_id), a1.label_id.max(a2.label_id)));
                }
            }
            for &x in &nil {
                let rest = &roots[a1.label_id] - &roots[x];
                if let Some(y) = sys.root_id(&rest) {
                    if nil.contains(&y) && x != y {
                        pairs.insert((x.min(y), x.max(y)));
                    }
                }
            }
        }
        let lam_w = &quiver.vertices[lambda];
        for (alpha, beta) in pairs {
            let nu_w = &(lam_w + &roots[alpha]) + &roots[beta];
            let Some(nu) = quiver.vertex_of(&nu_w) else {
                continue;
            };
            checked += 1;
            let shape = (rep.dims[nu], rep.dims[lambda]);
            let path = |first: usize, second: usize| -> QMatrix {
                rep.step(lambda, first)
                    .and_then(|(mid, m1)| rep.step(mid, second).map(|(_, m2)| m2 * m1))
                    .unwrap_or_else(|| QMatrix::zeros(shape.0, shape.1))
            };
            let lhs = &path(beta, alpha) - &path(alpha, beta);
            let n = sys.chevalley_by_id(alpha, beta);
            let rhs = match sys.root_id(&(&roots[alpha] + &roots[beta])) {
                Some(id) if n != 0 => rep
                    .step(lambda, id)
                    .map(|(_, m)| m.scale(&q(n as i64)))
                    .unwrap_or_else(|| QMatrix::zeros(shape.0, shape.1)),
                _ => QMatrix::zeros(shape.0, shape.1),
            };
            if !(&lhs - &rhs).is_zero() {
                return Ok(FlatnessReport {
                    flat: false,
                    checked,
                    violation: Some(FlatnessViolation {
                        vertex: lambda,
                        alpha: roots[alpha].clone(),
                        beta: roots[beta].clone(),
                    }),
                });
            }
        }
    }
    Ok(FlatnessReport {
        flat: true,
        checked,
        violation: None,
    })
}

/// Convenience used by tests and the CLI: 1×1 map entries of a
/// multiplicity-free representation.
pub fn scalar_entries(rep: &QuiverRep) -> Vec<Option<i64>> {
    rep.maps
        .iter()
        .map(|m| {
            m.as_scalar().and_then(|s| {
                if s.is_integer() {
                    i64::try_from(s.numer()).ok()
                } else {
                    None
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSystemData, Series};
    use std::sync::Arc;

    fn borel(s: Series, r: usize) -> ParabolicData {
        ParabolicData::borel(Arc::new(RootSystemData::new(s, r).unwrap()))
    }

    #[test]
    fn a2_reduced_arrows() {
        let p = borel(Series::A, 2);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Reduced).unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert_eq!(q.arrows().len(), 2);
        let theta = p.system().highest_root().clone();
        let src = q.vertex_of(&-&theta).unwrap();
        assert!(q.arrows().iter().all(|a| a.source == src));
    }

    #[test]
    fn a3_arrow_counts() {
        let p = borel(Series::A, 3);
        let red = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Reduced).unwrap();
        let full = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Full).unwrap();
        assert_eq!(red.arrows().len(), 6);
        assert_eq!(full.arrows().len(), 8);
        for a in red.arrows() {
            assert!(full.arrow_from(a.source, a.label_id).is_some());
        }
        for a in full.arrows() {
            assert_eq!(&full.vertices()[a.target] - &full.vertices()[a.source], a.label);
        }
    }

    #[test]
    fn rejects_non_dominant_and_duplicates() {
        let sys = Arc::new(RootSystemData::new(Series::A, 3).unwrap());
        let p = ParabolicData::new(sys.clone(), &[1, 3]).unwrap();
        let bad = -sys.simple_root(1);
        assert_eq!(
            InducedQuiver::new(&p, std::slice::from_ref(&bad), ArrowMode::Full).unwrap_err(),
            Error::NotLeviDominant(bad)
        );
        let z = sys.zero();
        assert!(matches!(
            InducedQuiver::new(&p, &[z.clone(), z], ArrowMode::Full),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn a3_commuting_square_relation() {
        let p = borel(Series::A, 3);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Full).unwrap();
        let sys = p.system();
        let rels = relation_instances(&q).unwrap();
        let src = q.vertex_of(&-sys.highest_root()).unwrap();
        let a1 = sys.root_id(sys.simple_root(0)).unwrap();
        let a3 = sys.root_id(sys.simple_root(2)).unwrap();
        let r = rels
            .iter()
            .find(|r| r.source == src && r.alpha == a1.min(a3) && r.beta == a1.max(a3))
            .expect("commutativity relation at −θ");
        assert!(r.is_commutativity());
        assert!(r.alpha_then_beta.is_some() && r.beta_then_alpha.is_some());
    }

    #[test]
    fn a2_relations_truncate() {
        let p = borel(Series::A, 2);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Full).unwrap();
        assert!(relation_instances(&q).unwrap().is_empty());
    }

    #[test]
    fn relations_need_borel() {
        let sys = Arc::new(RootSystemData::new(Series::A, 3).unwrap());
        let p = ParabolicData::new(sys.clone(), &[2]).unwrap();
        let q = InducedQuiver::new(&p, &[sys.zero()], ArrowMode::Full).unwrap();
        assert_eq!(relation_instances(&q).unwrap_err(), Error::UnsupportedParabolic);
    }

    #[test]
    fn zero_maps_are_flat() {
        let p = borel(Series::A, 3);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Full).unwrap();
        let rep = QuiverRep::zero_maps(q, vec![2; 6]).unwrap();
        assert!(verify_flatness(&rep).unwrap().flat);
        let red = rep.reduced_view().unwrap();
        assert_eq!(verify_flatness(&red).unwrap_err(), Error::ModeMismatch);
    }

    #[test]
    fn shape_checked() {
        let p = borel(Series::A, 2);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Full).unwrap();
        let n = q.arrows().len();
        let maps = vec![QMatrix::zeros(2, 2); n];
        assert!(matches!(
            QuiverRep::new(q, vec![1; 3], maps),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn dot_output() {
        let p = borel(Series::A, 2);
        let q = InducedQuiver::new(&p, p.tangent_weights(), ArrowMode::Reduced).unwrap();
        let dot = q.to_dot();
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot.matches("[label=").count(), 5);
        assert!(dot.starts_with("digraph quiver {"));
    }
}
