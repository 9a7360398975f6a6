//! Slope stability of the tangent bundle and King stability of its quiver
//! representation.
//!
//! First Chern classes are written in the basis of the Σ divisors. With the
//! tangent weights `Φ⁻_P`, `c₁(E) = −(⟨Σ weights, αᵢ∨⟩)_{i∈Σ}`, so that
//! `c₁(T) = −K` is ample. A polarization `H = Σ aᵢHᵢ` enters through the
//! intersection polynomials `qᵢ(a) = Hᵢ·H^{d−1}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, solve, QMatrix, Q};
use crate::parabolic::ParabolicData;
use crate::poly::Poly;
use crate::quiver::QuiverRep;
use crate::rootsys::Weight;
use crate::schubert::{SchubertCalculus, DEFAULT_BUDGET};
use crate::surd::{real_roots, Surd};
use crate::tangentrep::{closed_subsets, tangent_rep, TangentRep};

/// `c₁` of a Levi representation from its weights.
pub fn c1_picard(weights: &[Weight], p: &ParabolicData) -> Result<Vec<i64>> {
    let sys = p.system();
    let mut total = sys.zero();
    for w in weights {
        if w.tag() != sys.tag() {
            return Err(Error::MismatchedSystem);
        }
        total = &total + w;
    }
    let levi: Vec<i64> = p
        .levi_simple()
        .iter()
        .map(|&j| sys.simple_pairing(&total, j))
        .collect();
    if levi.iter().any(|&x| x != 0) {
        return Err(Error::NotLeviTrivialDeterminant(levi));
    }
    Ok(p.sigma()
        .iter()
        .map(|&s| -sys.simple_pairing(&total, s - 1))
        .collect())
}

/// `c₁` of the irreducible Levi module with highest weight `λ`: its rank
/// times the pairing of the projection of `λ` to the centre of the Levi.
pub fn c1_irreducible(p: &ParabolicData, lambda: &Weight) -> Result<Vec<i64>> {
    if !p.is_levi_dominant(lambda) {
        return Err(Error::NotLeviDominant(lambda.clone()));
    }
    let sys = p.system();
    let levi = p.levi_simple();
    let cartan = sys.cartan_matrix();
    let coeffs: Vec<Q> = if levi.is_empty() {
        Vec::new()
    } else {
        let a = QMatrix::from_rows(
            levi.iter()
                .map(|&k| levi.iter().map(|&j| q(cartan[j][k])).collect())
                .collect(),
        );
        let b: Vec<Q> = levi.iter().map(|&k| q(sys.simple_pairing(lambda, k))).collect();
        solve(&a, &b).ok_or_else(|| Error::Invalid("singular Levi Cartan matrix".into()))?
    };
    let dim = BigInt::from(p.levi_weyl_dimension(lambda));
    let mut out = Vec::with_capacity(p.sigma().len());
    for &s in p.sigma() {
        let i = s - 1;
        let mut pair = q(sys.simple_pairing(lambda, i));
        for (c, &j) in coeffs.iter().zip(&levi) {
            pair -= c * q(cartan[j][i]);
        }
        let v = -(pair * Q::from_integer(dim.clone()));
        if !v.is_integer() {
            return Err(Error::Invalid(format!("non-integral first Chern class for {lambda}")));
        }
        out.push(v.to_integer().to_i64().ok_or(Error::Overflow)?);
    }
    Ok(out)
}

/// `rk(K)·c₁(T)·H^{d−1} − rk(T)·c₁(K)·H^{d−1} > 0`, divided by its content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeInequality {
    /// Vertices of the Levi-level representation forming the subbundle.
    pub subbundle: Vec<usize>,
    pub polynomial: Poly,
    pub strict: bool,
}

impl ConeInequality {
    /// The polynomial with its monomial factor and content removed; it has
    /// the same sign on the ample cone.
    pub fn reduced(&self) -> Poly {
        self.polynomial.primitive_part()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConeVerdict {
    Stable,
    StrictlySemistableBoundary,
    Unstable,
}

impl std::fmt::Display for ConeVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConeVerdict::Stable => "STABLE",
            ConeVerdict::StrictlySemistableBoundary => "STRICTLY_SEMISTABLE_BOUNDARY",
            ConeVerdict::Unstable => "UNSTABLE",
        })
    }
}

/// Everything needed to test stability of `T_{G/P}` at many polarizations.
#[derive(Clone, Debug)]
pub struct TangentStability {
    pub tangent: TangentRep,
    /// `qᵢ = Hᵢ·H^{d−1}`.
    pub intersection: Vec<Poly>,
    /// Rank of the bundle at each Levi-level vertex.
    pub vertex_rank: Vec<i64>,
    pub vertex_c1: Vec<Vec<i64>>,
    /// `c₁(E_λ)·H^{d−1}` per vertex.
    pub vertex_degree: Vec<Poly>,
    pub rank: i64,
    pub c1: Vec<i64>,
    pub degree: Poly,
    /// All closed subsets of the Levi-level representation.
    pub subsets: Vec<Vec<usize>>,
    pub reduced_subsets: Vec<Vec<usize>>,
}

fn linear_combination(coeffs: &[i64], polys: &[Poly], nvars: usize) -> Result<Poly> {
    let mut out = Poly::zero(nvars);
    for (&c, p) in coeffs.iter().zip(polys) {
        out = out.checked_add(&p.checked_scale(c as i128)?)?;
    }
    Ok(out)
}

impl TangentStability {
    pub fn new(p: &ParabolicData, budget: usize) -> Result<Self> {
        let tangent = tangent_rep(p)?;
        let calc = SchubertCalculus::new(p, budget)?;
        let d = p.dimension();
        let k = p.picard_rank();
        let intersection = calc.intersection_polynomial(d - 1)?;
        let levi = &tangent.levi_rep;
        let mut vertex_rank = Vec::new();
        let mut vertex_c1 = Vec::new();
        let mut vertex_degree = Vec::new();
        for (v, comp) in levi.quiver().vertices().iter().zip(&tangent.components) {
            let c1 = c1_picard(&comp.weights, p)?;
            debug_assert_eq!(c1, c1_irreducible(p, v)?);
            vertex_degree.push(linear_combination(&c1, &intersection, k)?);
            vertex_c1.push(c1);
            vertex_rank.push(comp.rank as i64);
        }
        let rank = vertex_rank.iter().sum();
        let c1 = c1_picard(p.tangent_weights(), p)?;
        let degree = linear_combination(&c1, &intersection, k)?;
        let subsets = closed_subsets(levi, false)?;
        let reduced_subsets = closed_subsets(levi, true)?;
        Ok(TangentStability {
            tangent,
            intersection,
            vertex_rank,
            vertex_c1,
            vertex_degree,
            rank,
            c1,
            degree,
            subsets,
            reduced_subsets,
        })
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.tangent.parabolic
    }

    /// `c₁(K)` summed over a vertex subset.
    pub fn subset_c1(&self, subset: &[usize]) -> Vec<i64> {
        let mut out = vec![0; self.c1.len()];
        for &v in subset {
            for (o, c) in out.iter_mut().zip(&self.vertex_c1[v]) {
                *o += c;
            }
        }
        out
    }

    pub fn subset_rank(&self, subset: &[usize]) -> i64 {
        subset.iter().map(|&v| self.vertex_rank[v]).sum()
    }

    /// Unnormalized `rk(K)·c₁(T)H^{d−1} − rk(T)·c₁(K)H^{d−1}`.
    pub fn raw_inequality(&self, subset: &[usize]) -> Result<Poly> {
        let mut deg_k = Poly::zero(self.c1.len());
        for &v in subset {
            deg_k = deg_k.checked_add(&self.vertex_degree[v])?;
        }
        self.degree
            .checked_scale(self.subset_rank(subset) as i128)?
            .checked_sub(&deg_k.checked_scale(self.rank as i128)?)
    }

    pub fn inequalities(&self) -> Result<Vec<ConeInequality>> {
        self.reduced_subsets
            .iter()
            .map(|s| {
                let raw = self.raw_inequality(s)?;
                let g = raw.content();
                let polynomial = if g > 1 { raw.div_exact(g) } else { raw };
                Ok(ConeInequality {
                    subbundle: s.clone(),
                    polynomial,
                    strict: true,
                })
            })
            .collect()
    }

    pub fn sigma(&self, h: &[i64]) -> Result<SigmaCharacter> {
        check_ample(h, self.c1.len())?;
        let point: Vec<i128> = h.iter().map(|&x| x as i128).collect();
        let deg_t = self.degree.eval(&point)?;
        let mut values = Vec::with_capacity(self.vertex_rank.len());
        for (dv, &rv) in self.vertex_degree.iter().zip(&self.vertex_rank) {
            let a = (self.rank as i128).checked_mul(dv.eval(&point)?).ok_or(Error::Overflow)?;
            let b = deg_t.checked_mul(rv as i128).ok_or(Error::Overflow)?;
            values.push(a.checked_sub(b).ok_or(Error::Overflow)?);
        }
        let sigma = SigmaCharacter {
            values,
            polarization: h.to_vec(),
        };
        let total = sigma.evaluate(&(0..sigma.values.len()).collect::<Vec<_>>(), self.tangent.levi_rep.dims());
        if total != 0 {
            return Err(Error::CharacterNotBalanced(total));
        }
        Ok(sigma)
    }

    pub fn king(&self, h: &[i64]) -> Result<KingVerdict> {
        let sigma = self.sigma(h)?;
        king_from_subsets(&self.subsets, self.tangent.levi_rep.dims(), &sigma)
    }
}

fn check_ample(h: &[i64], k: usize) -> Result<()> {
    if h.len() != k || h.iter().any(|&x| x <= 0) {
        return Err(Error::NotAmple {
            expected: k,
            got: h.to_vec(),
        });
    }
    Ok(())
}

pub fn stability_cone(p: &ParabolicData) -> Result<Vec<ConeInequality>> {
    TangentStability::new(p, DEFAULT_BUDGET)?.inequalities()
}

fn sign_at(poly: &Poly, h: &[i64]) -> i32 {
    let mut total = BigInt::zero();
    for (e, c) in poly.terms() {
        let mut t = BigInt::from(c);
        for (&x, &k) in h.iter().zip(e) {
            t *= BigInt::from(x).pow(k);
        }
        total += t;
    }
    if total.is_zero() {
        0
    } else if total.is_positive() {
        1
    } else {
        -1
    }
}

pub fn cone_membership(inequalities: &[ConeInequality], h: &[i64]) -> Result<ConeVerdict> {
    let k = inequalities.first().map_or(h.len(), |i| i.polynomial.nvars());
    check_ample(h, k)?;
    let mut boundary = false;
    for ineq in inequalities {
        match sign_at(&ineq.reduced(), h) {
            -1 => return Ok(ConeVerdict::Unstable),
            0 => boundary = true,
            _ => {}
        }
    }
    Ok(if boundary {
        ConeVerdict::StrictlySemistableBoundary
    } else {
        ConeVerdict::Stable
    })
}

/// Stable slopes `t = b/a` form the open interval `(lower, upper)`; `None`
/// stands for `0` and `∞` respectively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeInterval {
    pub lower: Option<Surd>,
    pub upper: Option<Surd>,
    /// Some finite endpoint is rational, so lattice points may lie on the boundary.
    pub rational_endpoint: bool,
}

/// Binary form of degree ≤ 2 as `(c₀, c₁, c₂)` of `c₂t² + c₁t + c₀` in `t = b/a`.
fn slope_quadratic(p: &Poly) -> Result<(i128, i128, i128)> {
    let c = p.binary_form().ok_or(Error::NotTwoParameter)?;
    match c.len() {
        0..=3 => Ok((
            c.first().copied().unwrap_or(0),
            c.get(1).copied().unwrap_or(0),
            c.get(2).copied().unwrap_or(0),
        )),
        _ => Err(Error::NotQuadratic),
    }
}

/// Sign of `c₂t² + c₁t + c₀` on the cell just above `left`, where no root
/// lies strictly between `left` and the next critical point.
fn sign_above(quad: (i128, i128, i128), roots: &[Surd], left: &Surd) -> i32 {
    let (c0, c1, c2) = quad;
    let lead = [c2, c1, c0].into_iter().find(|&c| c != 0).map_or(0, |c| c.signum() as i32);
    let mult = if c2 != 0 && roots.len() == 1 { 2 } else { 1 };
    let above = roots.iter().filter(|r| *r > left).count() * mult;
    if above % 2 == 0 {
        lead
    } else {
        -lead
    }
}

pub fn boundary_2d(inequalities: &[ConeInequality]) -> Result<SlopeInterval> {
    if inequalities.iter().any(|i| i.polynomial.nvars() != 2) {
        return Err(Error::NotTwoParameter);
    }
    let quads: Vec<(i128, i128, i128)> = inequalities
        .iter()
        .map(|i| slope_quadratic(&i.reduced()))
        .collect::<Result<_>>()?;
    let zero = Surd::rational(0, 1);
    let roots: Vec<Vec<Surd>> = quads.iter().map(|&(c0, c1, c2)| real_roots(c0, c1, c2)).collect();
    let mut crit: Vec<Surd> = roots.iter().flatten().copied().filter(|r| *r > zero).collect();
    crit.sort();
    crit.dedup();
    // Cells: (0, crit[0]), (crit[0], crit[1]), …, (crit[last], ∞).
    let ncells = crit.len() + 1;
    let feasible: Vec<bool> = (0..ncells)
        .map(|cell| {
            let left = if cell == 0 { zero } else { crit[cell - 1] };
            quads
                .iter()
                .zip(&roots)
                .all(|(&q, rs)| sign_above(q, rs, &left) > 0)
        })
        .collect();
    let first = feasible.iter().position(|&f| f).ok_or(Error::NotAnInterval)?;
    let last = feasible.iter().rposition(|&f| f).unwrap();
    if first != last {
        return Err(Error::NotAnInterval);
    }
    let lower = (first > 0).then(|| crit[first - 1]);
    let upper = (last < crit.len()).then(|| crit[last]);
    let rational_endpoint = lower.iter().chain(upper.iter()).any(Surd::is_rational);
    Ok(SlopeInterval {
        lower,
        upper,
        rational_endpoint,
    })
}

/// Integer points `1 ≤ a, b ≤ max` where the binary form vanishes, by
/// exhaustive evaluation.
pub fn lattice_zeros(poly: &Poly, max: i64) -> Result<Vec<(i64, i64)>> {
    let (c0, c1, c2) = slope_quadratic(poly)?;
    let bound = c0.abs() + c1.abs() + c2.abs();
    let sq = (max as i128) * (max as i128);
    if bound.checked_mul(sq).is_none_or(|x| x > i64::MAX as i128) {
        return Err(Error::Overflow);
    }
    let (c0, c1, c2) = (c0 as i64, c1 as i64, c2 as i64);
    let mut hits: Vec<(i64, i64)> = (1..=max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let (k0, k1) = (c0 * a * a, c1 * a);
            (1..=max)
                .filter(move |&b| k0 + (k1 + c2 * b) * b == 0)
                .map(move |b| (a, b))
        })
        .collect();
    hits.sort_unstable();
    Ok(hits)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaCharacter {
    /// `σ_λ` per vertex.
    pub values: Vec<i128>,
    pub polarization: Vec<i64>,
}

impl SigmaCharacter {
    pub fn zero(n: usize) -> Self {
        SigmaCharacter {
            values: vec![0; n],
            polarization: Vec::new(),
        }
    }

    /// `Σ_{λ∈S} σ_λ α_λ`.
    pub fn evaluate(&self, subset: &[usize], dims: &[usize]) -> i128 {
        subset.iter().map(|&v| self.values[v] * dims[v] as i128).sum()
    }
}

/// `σ_H` on a Levi-level representation, with `c₁` and ranks per vertex from
/// the highest weights.
pub fn sigma_from_polarization(rep: &QuiverRep, p: &ParabolicData, h: &[i64]) -> Result<SigmaCharacter> {
    check_ample(h, p.picard_rank())?;
    let calc = SchubertCalculus::new(p, DEFAULT_BUDGET)?;
    let qs = calc.intersection_polynomial(p.dimension() - 1)?;
    let point: Vec<i128> = h.iter().map(|&x| x as i128).collect();
    let mut ranks = Vec::new();
    let mut degs = Vec::new();
    for v in rep.quiver().vertices() {
        let c1 = c1_irreducible(p, v)?;
        let deg = linear_combination(&c1, &qs, p.picard_rank())?.eval(&point)?;
        ranks.push(p.levi_weyl_dimension(v).to_i64().ok_or(Error::Overflow)? as i128);
        degs.push(deg);
    }
    let dims = rep.dims();
    let mut rank: i128 = 0;
    let mut deg: i128 = 0;
    for v in 0..dims.len() {
        rank += ranks[v] * dims[v] as i128;
        deg = deg.checked_add(degs[v].checked_mul(dims[v] as i128).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
    }
    let mut values = Vec::with_capacity(dims.len());
    for v in 0..dims.len() {
        let a = rank.checked_mul(degs[v]).ok_or(Error::Overflow)?;
        let b = deg.checked_mul(ranks[v]).ok_or(Error::Overflow)?;
        values.push(a - b);
    }
    let sigma = SigmaCharacter {
        values,
        polarization: h.to_vec(),
    };
    let total = sigma.evaluate(&(0..dims.len()).collect::<Vec<_>>(), dims);
    if total != 0 {
        return Err(Error::CharacterNotBalanced(total));
    }
    Ok(sigma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KingVerdict {
    pub semistable: bool,
    pub stable: bool,
    /// A subrepresentation with `σ > 0`, or with `σ = 0` when only stability fails.
    pub witness: Option<Vec<usize>>,
}

pub fn is_sigma_semistable(rep: &QuiverRep, sigma: &SigmaCharacter) -> Result<KingVerdict> {
    let subsets = closed_subsets(rep, false)?;
    king_from_subsets(&subsets, rep.dims(), sigma)
}

fn king_from_subsets(subsets: &[Vec<usize>], dims: &[usize], sigma: &SigmaCharacter) -> Result<KingVerdict> {
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let total = sigma.evaluate(&support, dims);
    if total != 0 {
        return Err(Error::CharacterNotBalanced(total));
    }
    let mut zero_witness = None;
    for s in subsets {
        let v = sigma.evaluate(s, dims);
        if v > 0 {
            return Ok(KingVerdict {
                semistable: false,
                stable: false,
                witness: Some(s.clone()),
            });
        }
        if v == 0 && zero_witness.is_none() {
            zero_witness = Some(s.clone());
        }
    }
    Ok(KingVerdict {
        semistable: true,
        stable: zero_witness.is_none(),
        witness: zero_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub polarization: Vec<i64>,
    pub cone: ConeVerdict,
    pub king: KingVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub checked: usize,
    pub counts: BTreeMap<String, usize>,
    pub disagreements: Vec<Disagreement>,
}

/// Compares King's verdict (all subrepresentations) with the cone verdict
/// (reduced subbundles only) at every polarization of the grid.
pub fn equivalence_check(p: &ParabolicData, grid: &[Vec<i64>]) -> Result<EquivalenceReport> {
    let st = TangentStability::new(p, DEFAULT_BUDGET)?;
    equivalence_on(&st, grid)
}

pub fn equivalence_on(st: &TangentStability, grid: &[Vec<i64>]) -> Result<EquivalenceReport> {
    let ineqs = st.inequalities()?;
    let rows: Vec<(Vec<i64>, ConeVerdict, KingVerdict)> = grid
        .par_iter()
        .map(|h| Ok((h.clone(), cone_membership(&ineqs, h)?, st.king(h)?)))
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    let mut disagreements = Vec::new();
    for (h, cone, king) in rows {
        *counts.entry(cone.to_string()).or_insert(0) += 1;
        let agree = king.semistable == (cone != ConeVerdict::Unstable)
            && king.stable == (cone == ConeVerdict::Stable);
        if !agree {
            disagreements.push(Disagreement {
                polarization: h,
                cone,
                king,
            });
        }
    }
    Ok(EquivalenceReport {
        checked: grid.len(),
        counts,
        disagreements,
    })
}

/// All integer tuples with entries in `1..=max`, lexicographic.
pub fn cube_grid(k: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Two stable polarizations in `1..=max` whose sum is unstable, searching in
/// lexicographic order.
pub fn nonconvexity_witness(inequalities: &[ConeInequality], max: i64) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let k = inequalities.first().map_or(0, |i| i.polynomial.nvars());
    let side = 2 * max;
    let cube = cube_grid(k, side);
    let verdicts: Vec<ConeVerdict> = cube
        .par_iter()
        .map(|h| cone_membership(inequalities, h))
        .collect::<Result<_>>()?;
    let idx = |h: &[i64]| h.iter().fold(0usize, |acc, &x| acc * side as usize + (x - 1) as usize);
    let stable: Vec<&Vec<i64>> = cube
        .iter()
        .zip(&verdicts)
        .filter(|(h, v)| **v == ConeVerdict::Stable && h.iter().all(|&x| x <= max))
        .map(|(h, _)| h)
        .collect();
    let found = stable.par_iter().enumerate().find_map_first(|(i, h1)| {
        stable[i + 1..].iter().find_map(|h2| {
            let sum: Vec<i64> = h1.iter().zip(h2.iter()).map(|(a, b)| a + b).collect();
            (verdicts[idx(&sum)] == ConeVerdict::Unstable).then(|| ((*h1).clone(), (*h2).clone()))
        })
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSystemData, Series};
    use std::sync::Arc;

    fn par(s: Series, r: usize, sigma: &[usize]) -> ParabolicData {
        ParabolicData::new(Arc::new(RootSystemData::new(s, r).unwrap()), sigma).unwrap()
    }

    #[test]
    fn chern_classes() {
        let b = par(Series::A, 3, &[1, 2, 3]);
        assert_eq!(c1_picard(b.tangent_weights(), &b).unwrap(), vec![2, 2, 2]);
        for n in 2..=6 {
            let p = par(Series::A, n, &[1, n]);
            let n = n as i64;
            assert_eq!(c1_picard(p.tangent_weights(), &p).unwrap(), vec![n, n]);
            let comps = p.levi_components().unwrap();
            let mut c1s: Vec<Vec<i64>> = comps.iter().map(|c| c1_picard(&c.weights, &p).unwrap()).collect();
            for (c, v) in comps.iter().zip(&c1s) {
                assert_eq!(&c1_irreducible(&p, &c.highest_weight).unwrap(), v);
            }
            c1s.sort();
            assert!(c1s.contains(&vec![-1, n]));
        }
        let f = par(Series::A, 3, &[1, 3]);
        let not_levi = vec![f.system().weight(&[0, 1, 0, 0])];
        assert!(matches!(
            c1_picard(&not_levi, &f),
            Err(Error::NotLeviTrivialDeterminant(_))
        ));
    }

    #[test]
    fn flag_cone() {
        let p = par(Series::A, 2, &[1, 2]);
        let mut polys: Vec<String> = stability_cone(&p).unwrap().iter().map(|i| i.polynomial.to_string()).collect();
        polys.sort();
        assert_eq!(polys, vec!["-4a^2 + 2ab + 5b^2", "5a^2 + 2ab - 4b^2"]);
        let ineqs = stability_cone(&p).unwrap();
        assert_eq!(cone_membership(&ineqs, &[1, 1]).unwrap(), ConeVerdict::Stable);
        assert_eq!(cone_membership(&ineqs, &[1, 10]).unwrap(), ConeVerdict::Unstable);
        assert!(matches!(cone_membership(&ineqs, &[0, 1]), Err(Error::NotAmple { .. })));
        let iv = boundary_2d(&ineqs).unwrap();
        assert_eq!(iv.lower, Some(Surd::new(-1, 1, 21, 5)));
        assert_eq!(iv.upper, Some(Surd::new(1, 1, 21, 4)));
        assert!(!iv.rational_endpoint);
    }

    #[test]
    fn king_on_flag() {
        let p = par(Series::A, 2, &[1, 2]);
        let st = TangentStability::new(&p, DEFAULT_BUDGET).unwrap();
        let k = st.king(&[1, 1]).unwrap();
        assert!(k.semistable && k.stable);
        let k = st.king(&[1, 10]).unwrap();
        assert!(!k.semistable);
        assert!(k.witness.is_some());
        let levi = &st.tangent.levi_rep;
        let direct = sigma_from_polarization(levi, &p, &[1, 1]).unwrap();
        assert_eq!(direct, st.sigma(&[1, 1]).unwrap());
        let zero = is_sigma_semistable(levi, &SigmaCharacter::zero(levi.dims().len())).unwrap();
        assert!(zero.semistable && !zero.stable);
    }

    #[test]
    fn borel_a3_anticanonical_is_stable() {
        let p = par(Series::A, 3, &[1, 2, 3]);
        let ineqs = stability_cone(&p).unwrap();
        assert_eq!(ineqs.len(), 6);
        assert_eq!(cone_membership(&ineqs, &[2, 2, 2]).unwrap(), ConeVerdict::Stable);
    }

    #[test]
    fn grid_helpers() {
        assert_eq!(cube_grid(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        let p = Poly::monomial(vec![2, 0], 1).checked_sub(&Poly::monomial(vec![0, 2], 1)).unwrap();
        assert_eq!(lattice_zeros(&p, 5).unwrap().len(), 5);
    }
}
