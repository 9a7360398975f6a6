//! The tangent bundle of `G/P` as a quiver representation, and the
//! simplicity certificate built on it.
//!
//! The Borel-level representation lives on the Borel quiver: its vertices are
//! the weights `Φ⁻_P` of `g/p` (all of multiplicity one) and `e_α` acts on
//! `e_β` by the bracket projected to `g/p`, so every positive root labels an
//! arrow. The Levi-level representation has one vertex per irreducible
//! summand of `g/p` as a Levi module.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix, RowEchelon, Q};
use crate::parabolic::{LeviComponent, ParabolicData};
use crate::quiver::{ArrowMode, InducedQuiver, QuiverRep};
use crate::rootsys::Weight;

#[derive(Clone, Debug)]
pub struct TangentRep {
    pub rep: QuiverRep,
    pub levi_rep: QuiverRep,
    pub components: Vec<LeviComponent>,
    pub parabolic: ParabolicData,
}

pub fn tangent_rep(p: &ParabolicData) -> Result<TangentRep> {
    let sys = p.system();
    let borel = ParabolicData::borel(p.system_arc().clone());
    let quiver = InducedQuiver::new(&borel, p.tangent_weights(), ArrowMode::Full)?;
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            let beta = sys
                .root_id(&quiver.vertices()[a.source])
                .expect("tangent weights are roots");
            QMatrix::scalar(q(sys.chevalley_by_id(a.label_id, beta) as i64))
        })
        .collect();
    let dims = vec![1; quiver.vertices().len()];
    let rep = QuiverRep::new(quiver, dims, maps)?;

    let components = p.levi_components()?;
    let levi_rep = levi_level_rep(p, &components)?;
    Ok(TangentRep {
        rep,
        levi_rep,
        components,
        parabolic: p.clone(),
    })
}

/// Component `i` maps to component `j` when some weight of `j` is a weight of
/// `i` plus a nilradical root. Each such pair must also be an arrow between
/// the highest weights.
fn levi_level_rep(p: &ParabolicData, comps: &[LeviComponent]) -> Result<QuiverRep> {
    let nil: HashSet<Weight> = p.nilradical_weights().into_iter().collect();
    let mut linked: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, ci) in comps.iter().enumerate() {
        for (j, cj) in comps.iter().enumerate() {
            if i == j {
                continue;
            }
            let hit = ci
                .weights
                .iter()
                .any(|l| cj.weights.iter().any(|m| nil.contains(&(m - l))));
            if hit {
                linked.insert((i, j));
            }
        }
    }
    let highest: Vec<Weight> = comps.iter().map(|c| c.highest_weight.clone()).collect();
    let quiver = InducedQuiver::new(p, &highest, ArrowMode::Full)?;
    for &(i, j) in &linked {
        if !quiver.arrows().iter().any(|a| a.source == i && a.target == j) {
            return Err(Error::ComponentVerificationFailed(format!(
                "bracket links {} to {} but no arrow joins their highest weights",
                highest[i], highest[j]
            )));
        }
    }
    // Several labels can join the same pair; only the first carries the map.
    let mut seen = HashSet::new();
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            let on = linked.contains(&(a.source, a.target)) && seen.insert((a.source, a.target));
            QMatrix::scalar(q(on as i64))
        })
        .collect();
    QuiverRep::new(quiver, vec![1; comps.len()], maps)
}

/// (multiplicity free, number of connected components of the support).
pub fn structure_report(rep: &QuiverRep) -> (bool, usize) {
    let dims = rep.dims();
    let mf = dims.iter().all(|&d| d <= 1);
    (mf, support_components(rep).len())
}

/// Connected components of the support under nonzero-map arrows, each sorted.
pub fn support_components(rep: &QuiverRep) -> Vec<Vec<usize>> {
    let n = rep.dims().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for a in rep.nonzero_arrows() {
        let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
        if x != y {
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in rep.support() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Dimension of `{φ : g_{λμ} φ_λ = φ_μ g_{λμ}}` by exact elimination.
pub fn hom_dimension(rep: &QuiverRep) -> usize {
    let dims = rep.dims();
    let mut offset = vec![0usize; dims.len()];
    let mut nvars = 0;
    for (v, &d) in dims.iter().enumerate() {
        offset[v] = nvars;
        nvars += d * d;
    }
    let mut ech = RowEchelon::new(nvars);
    'arrows: for (k, a) in rep.quiver().arrows().iter().enumerate() {
        let g = rep.map(k);
        let (ds, dt) = (dims[a.source], dims[a.target]);
        if ds == 0 || dt == 0 || g.is_zero() {
            continue;
        }
        for i in 0..dt {
            for j in 0..ds {
                let mut row = vec![Q::default(); nvars];
                for kk in 0..ds {
                    row[offset[a.source] + kk * ds + j] += g.get(i, kk);
                }
                for kk in 0..dt {
                    row[offset[a.target] + i * dt + kk] -= g.get(kk, j);
                }
                ech.insert(row);
                if ech.is_full() {
                    break 'arrows;
                }
            }
        }
    }
    nvars - ech.rank()
}

/// Proper nonempty subsets of the support closed under nonzero-map arrows.
/// With `reduce`, subsets whose induced graph is disconnected are dropped,
/// since they split as disjoint unions of smaller closed subsets.
pub fn closed_subsets(rep: &QuiverRep, reduce: bool) -> Result<Vec<Vec<usize>>> {
    if rep.dims().iter().any(|&d| d > 1) {
        return Err(Error::NotMultiplicityFree);
    }
    let support = rep.support();
    let n = rep.dims().len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in rep.nonzero_arrows() {
        if !succ[a.source].contains(&a.target) {
            succ[a.source].push(a.target);
        }
    }
    let order = sinks_first(&support, &succ)?;

    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    enumerate_upsets(&order, 0, &succ, &mut chosen, &mut out);
    out.retain(|s| !s.is_empty() && s.len() < support.len());
    if reduce {
        out.retain(|s| induced_connected(s, &succ));
    }
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn sinks_first(support: &[usize], succ: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = succ.len();
    let mut state = vec![0u8; n];
    let mut order = Vec::with_capacity(support.len());
    fn visit(v: usize, succ: &[Vec<usize>], state: &mut [u8], order: &mut Vec<usize>) -> bool {
        match state[v] {
            2 => return true,
            1 => return false,
            _ => {}
        }
        state[v] = 1;
        for &w in &succ[v] {
            if !visit(w, succ, state, order) {
                return false;
            }
        }
        state[v] = 2;
        order.push(v);
        true
    }
    for &v in support {
        if !visit(v, succ, &mut state, &mut order) {
            return Err(Error::Invalid("quiver has an oriented cycle".into()));
        }
    }
    Ok(order)
}

fn enumerate_upsets(
    order: &[usize],
    k: usize,
    succ: &[Vec<usize>],
    chosen: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if k == order.len() {
        out.push(order.iter().copied().filter(|&v| chosen[v]).collect());
        return;
    }
    let v = order[k];
    enumerate_upsets(order, k + 1, succ, chosen, out);
    if succ[v].iter().all(|&w| chosen[w]) {
        chosen[v] = true;
        enumerate_upsets(order, k + 1, succ, chosen, out);
        chosen[v] = false;
    }
}

fn induced_connected(s: &[usize], succ: &[Vec<usize>]) -> bool {
    let members: HashSet<usize> = s.iter().copied().collect();
    let mut seen = HashSet::from([s[0]]);
    let mut stack = vec![s[0]];
    while let Some(v) = stack.pop() {
        for &u in s {
            if seen.contains(&u) {
                continue;
            }
            if succ[v].contains(&u) || succ[u].contains(&v) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen.len() == members.len()
}

/// `{α + β : α ∈ −Φ⁻_P, β ∈ Φ⁻_P, α + β dominant}`.
pub fn dominant_sum_check(p: &ParabolicData) -> BTreeSet<Weight> {
    let sys = p.system();
    let nil = p.nilradical_weights();
    let mut out = BTreeSet::new();
    for a in &nil {
        for b in p.tangent_weights() {
            let s = a + b;
            if sys.is_dominant(&s) {
                out.insert(s);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Simple,
    WeaklySimpleOnly,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Simple => "SIMPLE",
            Verdict::WeaklySimpleOnly => "WEAKLY_SIMPLE_ONLY",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub multiplicity_free: bool,
    pub connected_components: usize,
    pub hom_dimension: usize,
    pub dominant_sums: BTreeSet<Weight>,
    pub verdict: Verdict,
}

pub fn simplicity_report(p: &ParabolicData) -> Result<SimplicityReport> {
    let t = tangent_rep(p)?;
    Ok(assemble_report(&t.rep, dominant_sum_check(p)))
}

pub(crate) fn assemble_report(rep: &QuiverRep, dominant_sums: BTreeSet<Weight>) -> SimplicityReport {
    let (multiplicity_free, connected_components) = structure_report(rep);
    let hom_dimension = hom_dimension(rep);
    let only_zero = dominant_sums.len() == 1 && dominant_sums.iter().all(Weight::is_zero);
    let verdict = match (multiplicity_free && connected_components == 1, only_zero) {
        (true, true) => Verdict::Simple,
        (true, false) => Verdict::WeaklySimpleOnly,
        _ => Verdict::Inconclusive,
    };
    SimplicityReport {
        multiplicity_free,
        connected_components,
        hom_dimension,
        dominant_sums,
        verdict,
    }
}
