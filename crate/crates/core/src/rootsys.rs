//! Simply-laced root systems in doubled orthonormal coordinates.
//!
//! Every weight is stored as `2·x` where `x` is its vector of ε-coordinates,
//! so the half-integral roots of E-type systems stay integral. Inner products
//! of stored vectors are therefore four times the true inner product.
//!
//! Simple roots follow the Bourbaki numbering. Positive roots are generated
//! from the simple roots by the simply-laced string rule (β + αᵢ is a root
//! exactly when (β, αᵢ) = −1) and sorted by height, then by coordinates.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    D,
    E,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::D => "D",
            Series::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            other => Err(Error::UnsupportedType {
                series: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// Identifies the root system a weight lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemTag {
    pub series: Series,
    pub rank: usize,
}

impl fmt::Display for SystemTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A weight in doubled ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    tag: SystemTag,
    coords2: Vec<i64>,
}

impl Weight {
    pub fn new(tag: SystemTag, coords2: Vec<i64>) -> Self {
        Weight { tag, coords2 }
    }

    pub fn tag(&self) -> SystemTag {
        self.tag
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    pub fn is_zero(&self) -> bool {
        self.coords2.iter().all(|&c| c == 0)
    }

    /// Four times the standard inner product.
    pub fn inner4(&self, other: &Weight) -> i64 {
        self.coords2
            .iter()
            .zip(&other.coords2)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            tag: self.tag,
            coords2: self.coords2.iter().map(|c| c * k).collect(),
        }
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        debug_assert_eq!(self.tag, other.tag);
        Weight {
            tag: self.tag,
            coords2: self
                .coords2
                .iter()
                .zip(&other.coords2)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords2.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{}/2", c)?;
            }
        }
        f.write_str(")")
    }
}

/// An ADE root system with its positive roots and Chevalley sign table.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    tag: SystemTag,
    ambient_dim: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    /// Simple-root coefficients of each positive root.
    positive_coeffs: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    /// Root id: `i` for the i-th positive root, `P + i` for its negative.
    index: HashMap<Vec<i64>, usize>,
    /// `N_{αβ}` for every ordered pair of root ids, row-major.
    chevalley_sign: Vec<i8>,
    rho: Weight,
}

fn unit2(n: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 2 * s;
    v
}

fn add_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystemData> {
    RootSystemData::new(series, rank)
}

impl RootSystemData {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let valid = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
        };
        if !valid {
            return Err(Error::UnsupportedType {
                series: series.to_string(),
                rank,
            });
        }
        let tag = SystemTag { series, rank };
        let (ambient_dim, simple): (usize, Vec<Vec<i64>>) = match series {
            Series::A => {
                let n = rank + 1;
                let roots = (0..rank)
                    .map(|i| add_vec(&unit2(n, i, 1), &unit2(n, i + 1, -1)))
                    .collect();
                (n, roots)
            }
            Series::D => {
                let n = rank;
                let mut roots: Vec<Vec<i64>> = (0..rank - 1)
                    .map(|i| add_vec(&unit2(n, i, 1), &unit2(n, i + 1, -1)))
                    .collect();
                roots.push(add_vec(&unit2(n, n - 2, 1), &unit2(n, n - 1, 1)));
                (n, roots)
            }
            Series::E => {
                let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
                roots.push(add_vec(&unit2(8, 0, 1), &unit2(8, 1, 1)));
                for i in 0..6 {
                    roots.push(add_vec(&unit2(8, i, -1), &unit2(8, i + 1, 1)));
                }
                roots.truncate(rank);
                (8, roots)
            }
        };
        Ok(Self::from_simple_roots(tag, ambient_dim, simple))
    }

    /// Parses names such as `("E", 8)`; non-ADE series are rejected.
    pub fn from_name(series: &str, rank: usize) -> Result<Self> {
        let s: Series = series.parse().map_err(|_| Error::UnsupportedType {
            series: series.to_string(),
            rank,
        })?;
        Self::new(s, rank)
    }

    fn from_simple_roots(tag: SystemTag, ambient_dim: usize, simple: Vec<Vec<i64>>) -> Self {
        let rank = simple.len();
        let inner4 = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| inner4(&simple[i], &simple[j]) / 4).collect())
            .collect();

        // Generate positive roots in simple-root coordinates.
        let mut coeffs: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut c = vec![0; rank];
                c[i] = 1;
                c
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = coeffs.iter().cloned().collect();
        let mut head = 0;
        while head < coeffs.len() {
            let beta = coeffs[head].clone();
            head += 1;
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                if pairing == -1 {
                    let mut next = beta.clone();
                    next[i] += 1;
                    if seen.insert(next.clone()) {
                        coeffs.push(next);
                    }
                }
            }
        }
        let to_coords = |c: &[i64]| -> Vec<i64> {
            let mut v = vec![0; ambient_dim];
            for (k, &ck) in c.iter().enumerate() {
                for (vi, si) in v.iter_mut().zip(&simple[k]) {
                    *vi += ck * si;
                }
            }
            v
        };
        let mut roots: Vec<(i64, Vec<i64>, Vec<i64>)> = coeffs
            .into_iter()
            .map(|c| (c.iter().sum(), to_coords(&c), c))
            .collect();
        roots.sort();

        let positive_roots: Vec<Weight> = roots
            .iter()
            .map(|(_, v, _)| Weight::new(tag, v.clone()))
            .collect();
        let positive_coeffs: Vec<Vec<i64>> = roots.into_iter().map(|(_, _, c)| c).collect();
        let p = positive_roots.len();

        let mut index = HashMap::with_capacity(2 * p);
        for (i, r) in positive_roots.iter().enumerate() {
            index.insert(r.coords2.clone(), i);
            index.insert((-r).coords2, p + i);
        }

        let mut rho2 = vec![0i64; ambient_dim];
        for r in &positive_roots {
            for (a, b) in rho2.iter_mut().zip(&r.coords2) {
                *a += b;
            }
        }
        let rho = Weight::new(tag, rho2.iter().map(|c| c / 2).collect());

        let mut data = RootSystemData {
            tag,
            ambient_dim,
            simple_roots: simple.into_iter().map(|v| Weight::new(tag, v)).collect(),
            positive_roots,
            positive_coeffs,
            cartan,
            index,
            chevalley_sign: Vec::new(),
            rho,
        };
        data.chevalley_sign = data.build_sign_table();
        data
    }

    /// Bimultiplicative asymmetry function on the root lattice:
    /// ε(αᵢ, αᵢ) = −1, ε(αᵢ, αⱼ) = −1 for a Dynkin edge with i > j, else +1.
    fn asymmetry(&self, a: &[i64], b: &[i64]) -> i8 {
        let rank = self.rank();
        let mut parity = 0i64;
        for p in 0..rank {
            if a[p] == 0 {
                continue;
            }
            parity += a[p] * b[p];
            for (q, bq) in b.iter().enumerate().take(p) {
                if self.cartan[p][q] == -1 {
                    parity += a[p] * bq;
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    fn build_sign_table(&self) -> Vec<i8> {
        let total = self.num_roots();
        let mut table = vec![0i8; total * total];
        for x in 0..total {
            let cx = self.root_coeffs(x);
            for y in 0..total {
                let sum = &self.root(x) + &self.root(y);
                if self.index.contains_key(&sum.coords2) {
                    table[x * total + y] = self.asymmetry(&cx, &self.root_coeffs(y));
                }
            }
        }
        table
    }

    pub fn tag(&self) -> SystemTag {
        self.tag
    }

    pub fn series(&self) -> Series {
        self.tag.series
    }

    pub fn rank(&self) -> usize {
        self.tag.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn negative_roots(&self) -> Vec<Weight> {
        self.positive_roots.iter().map(|r| -r).collect()
    }

    /// Simple-root coefficients of the i-th positive root.
    pub fn positive_coeffs(&self, i: usize) -> &[i64] {
        &self.positive_coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.positive_coeffs[i].iter().sum()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn zero(&self) -> Weight {
        Weight::new(self.tag, vec![0; self.ambient_dim])
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// Root by id (see [`RootSystemData::root_id`]).
    pub fn root(&self, id: usize) -> Weight {
        let p = self.positive_roots.len();
        if id < p {
            self.positive_roots[id].clone()
        } else {
            -&self.positive_roots[id - p]
        }
    }

    fn root_coeffs(&self, id: usize) -> Vec<i64> {
        let p = self.positive_roots.len();
        if id < p {
            self.positive_coeffs[id].clone()
        } else {
            self.positive_coeffs[id - p].iter().map(|c| -c).collect()
        }
    }

    /// Ids `0..P` are the positive roots in canonical order, `P..2P` their negatives.
    pub fn root_id(&self, w: &Weight) -> Option<usize> {
        if w.tag != self.tag {
            return None;
        }
        self.index.get(&w.coords2).copied()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_id(w).is_some()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        matches!(self.root_id(w), Some(id) if id < self.positive_roots.len())
    }

    /// Weight from ordinary (undoubled) ε-coordinates.
    pub fn weight(&self, coords: &[i64]) -> Weight {
        assert_eq!(coords.len(), self.ambient_dim, "wrong ambient dimension");
        Weight::new(self.tag, coords.iter().map(|c| 2 * c).collect())
    }

    pub fn weight2(&self, coords2: Vec<i64>) -> Weight {
        assert_eq!(coords2.len(), self.ambient_dim, "wrong ambient dimension");
        Weight::new(self.tag, coords2)
    }

    /// Integer combination of simple roots.
    pub fn from_simple_coeffs(&self, coeffs: &[i64]) -> Weight {
        let mut v = vec![0; self.ambient_dim];
        for (c, s) in coeffs.iter().zip(&self.simple_roots) {
            for (vi, si) in v.iter_mut().zip(&s.coords2) {
                *vi += c * si;
            }
        }
        Weight::new(self.tag, v)
    }

    /// ⟨λ, αᵢ∨⟩ for the i-th simple root (0-based); no lattice check.
    pub fn simple_pairing(&self, lambda: &Weight, i: usize) -> i64 {
        lambda.inner4(&self.simple_roots[i]) / 4
    }

    /// Coordinates of λ in the fundamental-weight basis.
    pub fn fundamental_coords(&self, lambda: &Weight) -> Vec<i64> {
        (0..self.rank()).map(|i| self.simple_pairing(lambda, i)).collect()
    }

    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        if lambda.tag != self.tag || alpha.tag != self.tag {
            return Err(Error::MismatchedSystem);
        }
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.clone()));
        }
        let p = lambda.inner4(alpha);
        if p % 4 != 0 {
            return Err(Error::Invalid(format!(
                "{lambda} is not in the weight lattice of {}",
                self.tag
            )));
        }
        Ok(p / 4)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        (0..self.rank()).all(|i| self.simple_pairing(lambda, i) >= 0)
    }

    /// `N_{αβ}` with `[e_α, e_β] = N_{αβ} e_{α+β}`.
    pub fn chevalley_constant(&self, alpha: &Weight, beta: &Weight) -> Result<i8> {
        if alpha.tag != self.tag || beta.tag != self.tag {
            return Err(Error::MismatchedSystem);
        }
        let a = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.clone()))?;
        let b = self
            .root_id(beta)
            .ok_or_else(|| Error::NotARoot(beta.clone()))?;
        if (alpha + beta).is_zero() {
            return Err(Error::OppositeRoots);
        }
        Ok(self.chevalley_by_id(a, b))
    }

    /// Table lookup by root ids; zero for opposite roots.
    pub fn chevalley_by_id(&self, a: usize, b: usize) -> i8 {
        self.chevalley_sign[a * self.num_roots() + b]
    }

    /// Weyl dimension of λ over the subsystem whose positive roots are the
    /// given ids. Heights are measured in the ambient simple roots, which is
    /// correct for Levi subsystems. Non-positive products are reported as 0.
    pub(crate) fn weyl_dimension_over(&self, lambda: &Weight, roots: &[usize]) -> BigUint {
        use num_bigint::BigInt;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &r in roots {
            let ht = self.height(r);
            let pairing = lambda.inner4(&self.positive_roots[r]) / 4;
            num *= BigInt::from(pairing + ht);
            den *= BigInt::from(ht);
        }
        if num.sign() == num_bigint::Sign::Minus || num.sign() == num_bigint::Sign::NoSign {
            return BigUint::default();
        }
        (num / den).to_biguint().unwrap_or_default()
    }

    /// dim H⁰(E_λ): Weyl dimension for dominant λ, zero otherwise.
    pub fn h0_dimension(&self, lambda: &Weight) -> BigUint {
        if !self.is_dominant(lambda) {
            return BigUint::default();
        }
        let all: Vec<usize> = (0..self.positive_roots.len()).collect();
        self.weyl_dimension_over(lambda, &all)
    }

    /// Highest root (last in canonical order).
    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn is_dynkin_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] == -1
    }
}
