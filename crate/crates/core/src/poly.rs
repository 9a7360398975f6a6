//! Multivariate integer polynomials with overflow-checked arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    nvars: usize,
    /// Exponent vector → nonzero coefficient.
    terms: BTreeMap<Vec<u32>, i128>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<u32>, c: i128) -> Self {
        let mut p = Self::zero(exps.len());
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i128)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> i128 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add_term(&mut self, exps: &[u32], c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(exps);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: i128) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars);
        if k == 0 {
            return Ok(out);
        }
        for (e, c) in self.terms() {
            out.terms
                .insert(e.to_vec(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[i128]) -> Result<i128> {
        let mut total: i128 = 0;
        for (e, c) in self.terms() {
            let mut t = c;
            for (x, &k) in point.iter().zip(e) {
                let pw = x.checked_pow(k).ok_or(Error::Overflow)?;
                t = t.checked_mul(pw).ok_or(Error::Overflow)?;
            }
            total = total.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Evaluation in floating point, for plotting and root seeding only.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c as f64, |acc, (&k, x)| acc * x.powi(k as i32))
            })
            .sum()
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> i128 {
        self.terms.values().fold(0i128, |g, &c| g.gcd(&c))
    }

    pub fn div_exact(&self, k: i128) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    debug_assert_eq!(c % k, 0);
                    (e.clone(), c / k)
                })
                .collect(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_factor(&self) -> Vec<u32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        it.fold(first.clone(), |acc, e| {
            acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()
        })
    }

    pub fn div_monomial(&self, m: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(m).map(|(a, b)| a - b).collect(), c))
                .collect(),
        }
    }

    /// Removes the monomial factor and the content.
    pub fn primitive_part(&self) -> Poly {
        let p = self.div_monomial(&self.monomial_factor());
        match p.content() {
            0 | 1 => p,
            g => p.div_exact(g),
        }
    }

    /// Coefficients `[c₀, c₁, …]` of a two-variable form `Σ cᵢ a^{d−i} b^i`.
    pub fn binary_form(&self) -> Option<Vec<i128>> {
        if self.nvars != 2 || !self.is_homogeneous() {
            return None;
        }
        let d = self.degree().unwrap_or(0) as usize;
        let mut c = vec![0; d + 1];
        for (e, v) in self.terms() {
            c[e[1] as usize] = v;
        }
        Some(c)
    }

    pub fn variable_name(i: usize, nvars: usize) -> String {
        if nvars <= 26 {
            ((b'a' + i as u8) as char).to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for Poly {
    /// Terms in decreasing lexicographic order of exponents, e.g. `a^2 + 2ab`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    let v = Poly::variable_name(i, self.nvars);
                    if p == 1 {
                        v
                    } else {
                        format!("{v}^{p}")
                    }
                })
                .collect::<Vec<_>>()
                .join("");
            let mag = c.unsigned_abs();
            let body = match (mag, mono.is_empty()) {
                (1, false) => mono,
                (_, true) => mag.to_string(),
                _ => format!("{mag}{mono}"),
            };
            match (k, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Multinomial coefficient `(Σk)! / ∏ kᵢ!`.
pub fn multinomial(ks: &[u32]) -> Result<i128> {
    let mut out: i128 = 1;
    let mut n: i128 = 0;
    for &k in ks {
        for j in 1..=k as i128 {
            n += 1;
            out = out.checked_mul(n).ok_or(Error::Overflow)? / j;
        }
    }
    Ok(out)
}

/// All exponent vectors of `nvars` entries with the given total, in
/// lexicographic order.
pub fn compositions(total: u32, nvars: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=rest {
            cur.push(k);
            rec(rest - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(total, nvars, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let p = b.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&b).unwrap().checked_scale(2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "2ab + b^2");
        assert_eq!(p.eval(&[1, 1]).unwrap(), 3);
        assert_eq!(p.checked_sub(&p).unwrap(), Poly::zero(2));
        assert_eq!(Poly::constant(2, -3).to_string(), "-3");
        assert_eq!(p.binary_form().unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn factor_stripping() {
        let p = Poly::monomial(vec![2, 1], 6).checked_add(&Poly::monomial(vec![1, 3], -4)).unwrap();
        assert_eq!(p.monomial_factor(), vec![1, 1]);
        assert_eq!(p.content(), 2);
        assert_eq!(p.primitive_part().to_string(), "3a - 2b^2");
    }

    #[test]
    fn overflow_is_reported() {
        let p = Poly::constant(1, i128::MAX);
        assert_eq!(p.checked_add(&Poly::constant(1, 1)).unwrap_err(), Error::Overflow);
        assert_eq!(Poly::var(1, 0).eval(&[i128::MAX / 2 + 1]).unwrap(), i128::MAX / 2 + 1);
        assert_eq!(Poly::monomial(vec![3], 1).eval(&[1 << 50]).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1]).unwrap(), 3);
        assert_eq!(multinomial(&[1, 1, 1]).unwrap(), 6);
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(6, 3).len(), 28);
    }
}
