//! Schubert calculus on `G/P` through minimal coset representatives.
//!
//! Elements of `W^P` are stored by their image of `ρ` together with the images
//! of the simple roots. Divisor products follow the Chevalley formula
//! `σ_{s_i}·σ_w = Σ ⟨ω_i, β∨⟩ σ_{w s_β}` over positive roots `β` with
//! `w s_β ∈ W^P` of length `ℓ(w) + 1`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::poly::{compositions, multinomial, Poly};
use crate::rootsys::{RootSystemData, Weight};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// `w(ρ)`.
    pub key: Weight,
    pub length: usize,
    simple_images: Vec<Weight>,
}

impl WeylElement {
    fn identity(sys: &RootSystemData) -> Self {
        WeylElement {
            key: sys.rho().clone(),
            length: 0,
            simple_images: sys.simple_roots().to_vec(),
        }
    }

    /// `w(α_j)` for each simple root.
    pub fn simple_images(&self) -> &[Weight] {
        &self.simple_images
    }

    /// `w(β)` for a root given by simple-root coefficients.
    pub fn apply_coeffs(&self, coeffs: &[i64]) -> Weight {
        let mut out = self.key.scale(0);
        for (c, img) in coeffs.iter().zip(&self.simple_images) {
            if *c != 0 {
                out = &out + &img.scale(*c);
            }
        }
        out
    }

    fn left_reflect(&self, sys: &RootSystemData, i: usize) -> WeylElement {
        let a = sys.simple_root(i);
        let refl = |w: &Weight| w - &a.scale(sys.simple_pairing(w, i));
        let up = sys.simple_pairing(&self.key, i) > 0;
        WeylElement {
            key: refl(&self.key),
            length: if up { self.length + 1 } else { self.length - 1 },
            simple_images: self.simple_images.iter().map(refl).collect(),
        }
    }
}

/// `|W|` from the height distribution of the positive roots whose ids are given.
fn weyl_order(sys: &RootSystemData, roots: &[usize]) -> BigUint {
    let mut count: BTreeMap<i64, i64> = BTreeMap::new();
    for &r in roots {
        *count.entry(sys.height(r)).or_default() += 1;
    }
    let max = count.keys().next_back().copied().unwrap_or(0);
    let mut out = BigUint::from(1u32);
    for j in 1..=max {
        let nj = count.get(&j).copied().unwrap_or(0);
        let next = count.get(&(j + 1)).copied().unwrap_or(0);
        for _ in 0..(nj - next) {
            out *= BigUint::from((j + 1) as u64);
        }
    }
    out
}

/// `|W^P| = |W| / |W_L|`.
pub fn coset_count(p: &ParabolicData) -> BigUint {
    let sys = p.system();
    let all: Vec<usize> = (0..sys.positive_roots().len()).collect();
    weyl_order(sys, &all) / weyl_order(sys, p.levi_positive())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertCycle {
    /// Index into [`SchubertCalculus::elements`] → coefficient.
    pub coefficients: BTreeMap<usize, i128>,
    pub codimension: usize,
}

impl SchubertCycle {
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// The full table of `W^P` with Chevalley multiplication.
#[derive(Clone, Debug)]
pub struct SchubertCalculus {
    parabolic: ParabolicData,
    elements: Vec<WeylElement>,
    index: HashMap<Weight, usize>,
    /// Per Σ-divisor, per nilradical root: (coefficient ⟨ω_i, β∨⟩, root id).
    divisor_roots: Vec<Vec<(i128, usize)>>,
}

impl SchubertCalculus {
    pub fn new(p: &ParabolicData, budget: usize) -> Result<Self> {
        let needed = coset_count(p);
        if needed > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                needed: needed.to_string(),
                budget,
            });
        }
        let sys = p.system();
        let levi = p.levi_simple();
        let positive = |w: &Weight| w.inner4(sys.rho()) > 0;
        let in_wp = |w: &WeylElement| levi.iter().all(|&j| positive(&w.simple_images[j]));

        let mut elements = vec![WeylElement::identity(sys)];
        let mut index = HashMap::from([(sys.rho().clone(), 0usize)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next: Vec<WeylElement> = Vec::new();
            for &e in &frontier {
                for i in 0..sys.rank() {
                    if sys.simple_pairing(&elements[e].key, i) <= 0 {
                        continue;
                    }
                    let w = elements[e].left_reflect(sys, i);
                    if in_wp(&w) && !index.contains_key(&w.key) && !next.iter().any(|x| x.key == w.key) {
                        next.push(w);
                    }
                }
            }
            next.sort_by(|a, b| a.key.cmp(&b.key));
            frontier.clear();
            for w in next {
                index.insert(w.key.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(w);
            }
        }
        debug_assert_eq!(BigUint::from(elements.len()), needed);

        let divisor_roots = p
            .sigma()
            .iter()
            .map(|&s| {
                p.nilradical()
                    .iter()
                    .filter_map(|&id| {
                        let c = sys.positive_coeffs(id)[s - 1];
                        (c != 0).then_some((c as i128, id))
                    })
                    .collect()
            })
            .collect();
        Ok(SchubertCalculus {
            parabolic: p.clone(),
            elements,
            index,
            divisor_roots,
        })
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    /// All of `W^P`, sorted by length then key.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn minimal_coset_reps(&self, up_to_length: usize) -> Vec<WeylElement> {
        self.elements
            .iter()
            .filter(|w| w.length <= up_to_length)
            .cloned()
            .collect()
    }

    pub fn element_index(&self, key: &Weight) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn dimension(&self) -> usize {
        self.parabolic.dimension()
    }

    pub fn top_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// The fundamental class `σ_e`.
    pub fn unit(&self) -> SchubertCycle {
        SchubertCycle {
            coefficients: BTreeMap::from([(0, 1)]),
            codimension: 0,
        }
    }

    /// Multiplies by the divisor of the `i`-th element of Σ (0-based).
    pub fn chevalley_multiply(&self, c: &SchubertCycle, i: usize) -> Result<SchubertCycle> {
        let sys = self.parabolic.system();
        let roots = self
            .divisor_roots
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("divisor index {i} out of range")))?;
        let mut out: BTreeMap<usize, i128> = BTreeMap::new();
        for (&e, &coef) in &c.coefficients {
            let w = &self.elements[e];
            for &(mult, id) in roots {
                let wb = w.apply_coeffs(sys.positive_coeffs(id));
                let key = &w.key - &wb.scale(sys.height(id));
                let Some(&t) = self.index.get(&key) else {
                    continue;
                };
                if self.elements[t].length != w.length + 1 {
                    continue;
                }
                let add = coef.checked_mul(mult).ok_or(Error::Overflow)?;
                let slot = out.entry(t).or_insert(0);
                *slot = slot.checked_add(add).ok_or(Error::Overflow)?;
            }
        }
        out.retain(|_, v| *v != 0);
        Ok(SchubertCycle {
            coefficients: out,
            codimension: c.codimension + 1,
        })
    }

    fn check_exponents(&self, exponents: &[u32]) -> Result<()> {
        let k = self.parabolic.picard_rank();
        let d = self.dimension();
        if exponents.len() != k || exponents.iter().sum::<u32>() as usize != d {
            return Err(Error::BadExponents {
                expected: k,
                degree: d,
            });
        }
        Ok(())
    }

    /// `∫ ∏ H_i^{e_i}` by multiplying in the given divisor order.
    pub fn intersection_number_ordered(&self, order: &[usize]) -> Result<i128> {
        let mut exps = vec![0u32; self.parabolic.picard_rank()];
        for &i in order {
            if i >= exps.len() {
                return Err(Error::Invalid(format!("divisor index {i} out of range")));
            }
            exps[i] += 1;
        }
        self.check_exponents(&exps)?;
        let mut c = self.unit();
        for &i in order {
            c = self.chevalley_multiply(&c, i)?;
            if c.is_zero() {
                return Ok(0);
            }
        }
        Ok(c.coefficients.get(&self.top_index()).copied().unwrap_or(0))
    }

    pub fn intersection_number(&self, exponents: &[u32]) -> Result<i128> {
        self.check_exponents(exponents)?;
        let order: Vec<usize> = exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        self.intersection_number_ordered(&order)
    }

    /// Every degree-`dim` monomial with its intersection number, sharing
    /// partial products across monomials.
    pub fn intersection_table(&self) -> Result<Vec<(Vec<u32>, i128)>> {
        let k = self.parabolic.picard_rank();
        let d = self.dimension() as u32;
        let mut level: BTreeMap<Vec<u32>, SchubertCycle> = BTreeMap::from([(vec![0; k], self.unit())]);
        for _ in 0..d {
            let mut next = BTreeMap::new();
            for (e, c) in &level {
                let last = e.iter().rposition(|&x| x > 0).unwrap_or(0);
                for i in last..k {
                    let mut e2 = e.clone();
                    e2[i] += 1;
                    next.insert(e2, self.chevalley_multiply(c, i)?);
                }
            }
            level = next;
        }
        let top = self.top_index();
        Ok(compositions(d, k)
            .into_iter()
            .map(|e| {
                let v = level
                    .get(&e)
                    .and_then(|c| c.coefficients.get(&top).copied())
                    .unwrap_or(0);
                (e, v)
            })
            .collect())
    }

    /// `q_i(a) = H_i · (Σ a_j H_j)^{degree}` for each divisor `i`.
    pub fn intersection_polynomial(&self, degree: usize) -> Result<Vec<Poly>> {
        let k = self.parabolic.picard_rank();
        let d = self.dimension();
        if degree + 1 != d {
            return Err(Error::BadExponents {
                expected: k,
                degree: d,
            });
        }
        let table: HashMap<Vec<u32>, i128> = self.intersection_table()?.into_iter().collect();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let mut q = Poly::zero(k);
            for m in compositions(degree as u32, k) {
                let mut full = m.clone();
                full[i] += 1;
                let v = table[&full];
                if v != 0 {
                    q.add_term(&m, multinomial(&m)?.checked_mul(v).ok_or(Error::Overflow)?)?;
                }
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Degree `(Σ a_j H_j)^{dim}` as a polynomial, computed by carrying
    /// polynomial coefficients through the Chevalley rule.
    pub fn degree_polynomial(&self) -> Result<Poly> {
        let k = self.parabolic.picard_rank();
        let sys = self.parabolic.system();
        let mut cur: BTreeMap<usize, Poly> = BTreeMap::from([(0, Poly::constant(k, 1))]);
        for _ in 0..self.dimension() {
            let mut next: BTreeMap<usize, Poly> = BTreeMap::new();
            for (&e, coef) in &cur {
                let w = &self.elements[e];
                for (i, roots) in self.divisor_roots.iter().enumerate() {
                    let xi = coef.checked_mul(&Poly::var(k, i))?;
                    for &(mult, id) in roots {
                        let key = &w.key - &w.apply_coeffs(sys.positive_coeffs(id)).scale(sys.height(id));
                        let Some(&t) = self.index.get(&key) else {
                            continue;
                        };
                        if self.elements[t].length != w.length + 1 {
                            continue;
                        }
                        let slot = next.entry(t).or_insert_with(|| Poly::zero(k));
                        *slot = slot.checked_add(&xi.checked_scale(mult)?)?;
                    }
                }
            }
            cur = next;
        }
        Ok(cur.remove(&self.top_index()).unwrap_or_else(|| Poly::zero(k)))
    }
}

pub fn minimal_coset_reps(p: &ParabolicData, up_to_length: usize, budget: usize) -> Result<Vec<WeylElement>> {
    Ok(SchubertCalculus::new(p, budget)?.minimal_coset_reps(up_to_length))
}

pub fn intersection_number(p: &ParabolicData, exponents: &[u32]) -> Result<i128> {
    SchubertCalculus::new(p, DEFAULT_BUDGET)?.intersection_number(exponents)
}

pub fn intersection_polynomial(p: &ParabolicData, degree: usize) -> Result<Vec<Poly>> {
    SchubertCalculus::new(p, DEFAULT_BUDGET)?.intersection_polynomial(degree)
}

/// `|W^P|` as a machine integer when it fits.
pub fn coset_count_usize(p: &ParabolicData) -> Option<usize> {
    coset_count(p).to_usize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;
    use std::sync::Arc;

    fn calc(s: Series, r: usize, sigma: &[usize]) -> SchubertCalculus {
        let p = ParabolicData::new(Arc::new(RootSystemData::new(s, r).unwrap()), sigma).unwrap();
        SchubertCalculus::new(&p, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn coset_sizes() {
        for n in 1..=5 {
            let c = calc(Series::A, n, &[1]);
            let lens: Vec<usize> = c.elements().iter().map(|w| w.length).collect();
            assert_eq!(lens, (0..=n).collect::<Vec<_>>());
            if n >= 2 {
                assert_eq!(calc(Series::A, n, &[1, n]).elements().len(), (n + 1) * n);
            }
        }
        assert_eq!(calc(Series::A, 2, &[1, 2]).elements().len(), 6);
        let e8 = ParabolicData::borel(Arc::new(RootSystemData::new(Series::E, 8).unwrap()));
        assert_eq!(coset_count(&e8).to_string(), "696729600");
        assert!(matches!(
            SchubertCalculus::new(&e8, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn lengths_match_inversions() {
        let c = calc(Series::D, 4, &[1, 2, 3, 4]);
        let sys = c.parabolic().system();
        assert_eq!(c.elements().len(), 192);
        for w in c.elements() {
            let inv = (0..sys.positive_roots().len())
                .filter(|&id| w.apply_coeffs(sys.positive_coeffs(id)).inner4(sys.rho()) < 0)
                .count();
            assert_eq!(inv, w.length);
        }
    }

    #[test]
    fn monk_in_s3() {
        let c = calc(Series::A, 2, &[1, 2]);
        let f = c.chevalley_multiply(&c.unit(), 0).unwrap();
        assert_eq!(f.coefficients.len(), 1);
        let fg = c.chevalley_multiply(&f, 1).unwrap();
        assert_eq!(fg.coefficients.values().copied().collect::<Vec<_>>(), vec![1, 1]);
        let ff = c.chevalley_multiply(&f, 0).unwrap();
        assert_eq!(ff.coefficients.values().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(c.intersection_number(&[1, 2]).unwrap(), 1);
        assert_eq!(c.intersection_number(&[2, 1]).unwrap(), 1);
        assert_eq!(c.intersection_number(&[3, 0]).unwrap(), 0);
        let p1 = calc(Series::A, 1, &[1]);
        let pt = p1.chevalley_multiply(&p1.unit(), 0).unwrap();
        assert!(p1.chevalley_multiply(&pt, 0).unwrap().is_zero());
    }

    #[test]
    fn projective_space_degree() {
        for n in 1..=6 {
            assert_eq!(calc(Series::A, n, &[1]).intersection_number(&[n as u32]).unwrap(), 1);
        }
        let q = calc(Series::A, 2, &[1]).intersection_polynomial(1).unwrap();
        assert_eq!(q[0].to_string(), "a");
    }

    #[test]
    fn flag_polynomials() {
        let q = calc(Series::A, 2, &[1, 2]).intersection_polynomial(2).unwrap();
        assert_eq!(q[0].to_string(), "2ab + b^2");
        assert_eq!(q[1].to_string(), "a^2 + 2ab");
        assert_eq!(q[0].eval(&[1, 1]).unwrap(), 3);
    }

    #[test]
    fn a3_borel_table() {
        let c = calc(Series::A, 3, &[1, 2, 3]);
        assert_eq!(c.intersection_number(&[1, 4, 1]).unwrap(), 2);
        assert_eq!(c.intersection_number(&[3, 2, 1]).unwrap(), 1);
        assert_eq!(c.intersection_number(&[6, 0, 0]).unwrap(), 0);
        let total: i128 = c
            .intersection_table()
            .unwrap()
            .iter()
            .map(|(e, v)| multinomial(e).unwrap() * v)
            .sum();
        assert_eq!(total, 720);
        assert_eq!(c.degree_polynomial().unwrap().eval(&[1, 1, 1]).unwrap(), 720);
    }
}
