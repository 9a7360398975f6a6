//! Parabolic subgroups `P(Σ)` and the weights of `g/p`.
//!
//! `Σ` lists the simple roots (1-based Bourbaki labels) that are *removed*
//! from the Levi factor; `Σ = Δ` is the Borel subgroup. The tangent bundle of
//! `G/P` has weights `Φ⁻_P`, the negative roots outside the Levi.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, Weight};

#[derive(Clone, Debug)]
pub struct ParabolicData {
    system: Arc<RootSystemData>,
    sigma: Vec<usize>,
    levi_positive: Vec<usize>,
    nilradical: Vec<usize>,
    tangent_weights: Vec<Weight>,
}

/// A Levi-irreducible summand of `g/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    pub weights: Vec<Weight>,
    pub highest_weight: Weight,
    pub rank: usize,
}

pub fn build_parabolic(system: Arc<RootSystemData>, sigma: &[usize]) -> Result<ParabolicData> {
    ParabolicData::new(system, sigma)
}

impl ParabolicData {
    pub fn new(system: Arc<RootSystemData>, sigma: &[usize]) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::EmptySigma);
        }
        let rank = system.rank();
        let set: BTreeSet<usize> = sigma.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::SigmaOutOfRange { index: bad, rank });
        }
        let sigma: Vec<usize> = set.into_iter().collect();
        let mut levi_positive = Vec::new();
        let mut nilradical = Vec::new();
        for id in 0..system.positive_roots().len() {
            let c = system.positive_coeffs(id);
            if sigma.iter().all(|&s| c[s - 1] == 0) {
                levi_positive.push(id);
            } else {
                nilradical.push(id);
            }
        }
        let tangent_weights = nilradical
            .iter()
            .map(|&id| -&system.positive_roots()[id])
            .collect();
        Ok(ParabolicData {
            system,
            sigma,
            levi_positive,
            nilradical,
            tangent_weights,
        })
    }

    pub fn borel(system: Arc<RootSystemData>) -> Self {
        let all: Vec<usize> = (1..=system.rank()).collect();
        Self::new(system, &all).expect("Borel is always valid")
    }

    pub fn system(&self) -> &RootSystemData {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<RootSystemData> {
        &self.system
    }

    /// Removed simple roots, 1-based and increasing.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_borel(&self) -> bool {
        self.sigma.len() == self.system.rank()
    }

    pub fn in_sigma(&self, simple_index: usize) -> bool {
        self.sigma.binary_search(&(simple_index + 1)).is_ok()
    }

    /// 0-based indices of the simple roots kept in the Levi.
    pub fn levi_simple(&self) -> Vec<usize> {
        (0..self.system.rank()).filter(|&i| !self.in_sigma(i)).collect()
    }

    /// Positive root ids of the Levi subsystem.
    pub fn levi_positive(&self) -> &[usize] {
        &self.levi_positive
    }

    pub fn levi_positive_roots(&self) -> Vec<Weight> {
        self.levi_positive
            .iter()
            .map(|&id| self.system.positive_roots()[id].clone())
            .collect()
    }

    /// Positive root ids in the nilradical `n`.
    pub fn nilradical(&self) -> &[usize] {
        &self.nilradical
    }

    pub fn nilradical_weights(&self) -> Vec<Weight> {
        self.nilradical
            .iter()
            .map(|&id| self.system.positive_roots()[id].clone())
            .collect()
    }

    pub fn tangent_weights(&self) -> &[Weight] {
        &self.tangent_weights
    }

    pub fn dimension(&self) -> usize {
        self.tangent_weights.len()
    }

    pub fn picard_rank(&self) -> usize {
        self.sigma.len()
    }

    /// Σ-graded degree of a positive root id (coefficients on `Σ`).
    pub fn sigma_degree(&self, id: usize) -> Vec<i64> {
        let c = self.system.positive_coeffs(id);
        self.sigma.iter().map(|&s| c[s - 1]).collect()
    }

    /// True for nilradical roots of total Σ-degree one, the weights of `n/[n,n]`.
    pub fn is_degree_one(&self, id: usize) -> bool {
        self.sigma_degree(id).iter().sum::<i64>() == 1
    }

    pub fn is_levi_dominant(&self, lambda: &Weight) -> bool {
        (0..self.system.rank())
            .filter(|&i| !self.in_sigma(i))
            .all(|i| self.system.simple_pairing(lambda, i) >= 0)
    }

    pub fn levi_weyl_dimension(&self, lambda: &Weight) -> BigUint {
        self.system.weyl_dimension_over(lambda, &self.levi_positive)
    }

    /// Splits `Φ⁻_P` into Levi-irreducible pieces by connectivity under
    /// addition of Levi roots, then checks each piece has a unique highest
    /// weight whose Levi–Weyl dimension equals the piece size.
    pub fn levi_components(&self) -> Result<Vec<LeviComponent>> {
        let weights = &self.tangent_weights;
        let pos: HashMap<&Weight, usize> = weights.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let levi = self.levi_positive_roots();
        let n = weights.len();
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let c = comps.len();
            comp_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for g in &levi {
                    for nb in [&weights[v] + g, &weights[v] - g] {
                        if let Some(&u) = pos.get(&nb) {
                            if comp_of[u] == usize::MAX {
                                comp_of[u] = c;
                                members.push(u);
                                queue.push_back(u);
                            }
                        }
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }

        let mut out = Vec::with_capacity(comps.len());
        for members in comps {
            let in_comp: BTreeSet<usize> = members.iter().copied().collect();
            let tops: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&v| {
                    levi.iter().all(|g| {
                        pos.get(&(&weights[v] + g))
                            .is_none_or(|u| !in_comp.contains(u))
                    })
                })
                .collect();
            if tops.len() != 1 {
                return Err(Error::ComponentVerificationFailed(format!(
                    "component of {} has {} maximal weights",
                    weights[members[0]],
                    tops.len()
                )));
            }
            let highest = weights[tops[0]].clone();
            let dim = self.levi_weyl_dimension(&highest);
            if dim != BigUint::from(members.len()) {
                return Err(Error::ComponentVerificationFailed(format!(
                    "highest weight {highest} has Levi dimension {dim}, component has {} weights",
                    members.len()
                )));
            }
            out.push((
                tops[0],
                LeviComponent {
                    rank: members.len(),
                    weights: members.iter().map(|&v| weights[v].clone()).collect(),
                    highest_weight: highest,
                },
            ));
        }
        out.sort_by_key(|(top, _)| *top);
        Ok(out.into_iter().map(|(_, c)| c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    fn par(s: Series, r: usize, sigma: &[usize]) -> ParabolicData {
        let sys = Arc::new(RootSystemData::new(s, r).unwrap());
        ParabolicData::new(sys, sigma).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(par(Series::A, 3, &[1, 2, 3]).dimension(), 6);
        for n in 2..7 {
            assert_eq!(par(Series::A, n, &[1, n]).dimension(), 2 * n - 1);
        }
        assert_eq!(par(Series::A, 3, &[2]).dimension(), 4);
        let sys = Arc::new(RootSystemData::new(Series::A, 3).unwrap());
        assert_eq!(ParabolicData::new(sys.clone(), &[]).unwrap_err(), Error::EmptySigma);
        assert!(matches!(
            ParabolicData::new(sys, &[4]),
            Err(Error::SigmaOutOfRange { index: 4, rank: 3 })
        ));
    }

    #[test]
    fn borel_tangent_is_all_negative_roots() {
        let p = par(Series::D, 5, &[1, 2, 3, 4, 5]);
        let mut t = p.tangent_weights().to_vec();
        let mut neg = p.system().negative_roots();
        t.sort();
        neg.sort();
        assert_eq!(t, neg);
        assert!(p.levi_positive().is_empty());
    }

    #[test]
    fn levi_dominance() {
        let b = par(Series::A, 3, &[1, 2, 3]);
        assert!(b.is_levi_dominant(&b.system().weight(&[0, 0, 3, -7])));
        let p = par(Series::A, 3, &[1, 3]);
        let sys = p.system();
        assert!(!p.is_levi_dominant(&-sys.simple_root(1)));
        assert!(p.is_levi_dominant(&sys.weight(&[0, 1, 0, -1])));
    }

    #[test]
    fn component_examples() {
        let b = par(Series::E, 6, &[1, 2, 3, 4, 5, 6]);
        let comps = b.levi_components().unwrap();
        assert_eq!(comps.len(), 36);
        assert!(comps.iter().all(|c| c.rank == 1));

        let f = par(Series::A, 3, &[1, 3]);
        let mut ranks: Vec<usize> = f.levi_components().unwrap().iter().map(|c| c.rank).collect();
        ranks.sort();
        assert_eq!(ranks, vec![1, 2, 2]);

        let gr = par(Series::A, 3, &[2]);
        let comps = gr.levi_components().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].rank, 4);
    }

    #[test]
    fn component_ranks_sum_to_dimension() {
        for n in 1..=5 {
            for mask in 1u32..(1 << n) {
                let sigma: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                let p = par(Series::A, n, &sigma);
                let comps = p.levi_components().unwrap();
                assert_eq!(comps.iter().map(|c| c.rank).sum::<usize>(), p.dimension());
            }
        }
        for r in [4, 5] {
            for mask in 1u32..(1 << r) {
                let sigma: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                let p = par(Series::D, r, &sigma);
                let comps = p.levi_components().unwrap();
                assert_eq!(comps.iter().map(|c| c.rank).sum::<usize>(), p.dimension());
            }
        }
    }

    #[test]
    fn root_partition() {
        let p = par(Series::D, 5, &[2, 5]);
        let sys = p.system();
        let mut all: Vec<Weight> = p.tangent_weights().to_vec();
        all.extend(p.levi_positive_roots());
        all.extend(p.nilradical_weights());
        all.extend(p.levi_positive_roots().iter().map(|r| -r));
        all.sort();
        let mut roots: Vec<Weight> = (0..sys.num_roots()).map(|i| sys.root(i)).collect();
        roots.sort();
        assert_eq!(all, roots);
    }
}
