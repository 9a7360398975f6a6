//! Real quadratic numbers `(p + q√r)/s` with exact sign and comparison.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surd {
    pub p: i128,
    pub q: i128,
    /// Squarefree; `1` with `q = 0` for rationals.
    pub r: i128,
    pub s: i128,
}

impl Surd {
    /// Normalizes `(p + q√r)/s` with `r ≥ 0`, `s ≠ 0`.
    pub fn new(p: i128, q: i128, r: i128, s: i128) -> Surd {
        assert!(r >= 0 && s != 0, "invalid surd");
        let (mut p, mut q) = (p, q);
        let (f, core) = split_square(r);
        q *= f;
        let mut r = core;
        if r <= 1 || q == 0 {
            p += q * r;
            q = 0;
            r = 1;
        }
        let (p, q, s) = if s < 0 { (-p, -q, -s) } else { (p, q, s) };
        let g = p.gcd(&q).gcd(&s);
        Surd {
            p: p / g,
            q: q / g,
            r,
            s: s / g,
        }
    }

    pub fn rational(p: i128, s: i128) -> Surd {
        Surd::new(p, 0, 1, s)
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.r as f64).sqrt()) / self.s as f64
    }

    pub fn signum(&self) -> i32 {
        sign2(&BigInt::from(self.p), &BigInt::from(self.q), &BigInt::from(self.r))
    }
}

/// `r = f²·core` with `core` squarefree.
fn split_square(mut r: i128) -> (i128, i128) {
    if r == 0 {
        return (0, 0);
    }
    let mut f = 1;
    let mut d = 2;
    while d * d <= r {
        while r % (d * d) == 0 {
            r /= d * d;
            f *= d;
        }
        d += 1;
    }
    (f, r)
}

fn sgn(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `a + b√r` for `r ≥ 0`.
pub fn sign2(a: &BigInt, b: &BigInt, r: &BigInt) -> i32 {
    let (sa, sb) = (sgn(a), if r.is_zero() { 0 } else { sgn(b) });
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    match (a * a).cmp(&(b * b * r)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Sign of `a + b√r + c√t` for `r, t ≥ 0`.
pub fn sign3(a: &BigInt, b: &BigInt, r: &BigInt, c: &BigInt, t: &BigInt) -> i32 {
    let sx = sign2(a, b, r);
    let sy = if t.is_zero() { 0 } else { sgn(c) };
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // Compare (a + b√r)² with c²t.
    let d = sign2(&(a * a + b * b * r - c * c * t), &(BigInt::from(2) * a * b), r);
    match d {
        1 => sx,
        -1 => sy,
        _ => 0,
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        let big = BigInt::from;
        let a = big(self.p) * big(other.s) - big(other.p) * big(self.s);
        let b = big(self.q) * big(other.s);
        let c = -(big(other.q) * big(self.s));
        match sign3(&a, &b, &big(self.r), &c, &big(other.r)) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.q == 0 {
            self.p.to_string()
        } else {
            let q = match self.q.abs() {
                1 => String::new(),
                k => k.to_string(),
            };
            let sign = if self.q < 0 { "-" } else { "+" };
            match self.p {
                0 if self.q < 0 => format!("-{q}√{}", self.r),
                0 => format!("{q}√{}", self.r),
                p => format!("{p}{sign}{q}√{}", self.r),
            }
        };
        match (self.s, self.q == 0 || self.p == 0) {
            (1, _) => f.write_str(&num),
            (s, true) => write!(f, "{num}/{s}"),
            (s, false) => write!(f, "({num})/{s}"),
        }
    }
}

/// Real roots of `c₂t² + c₁t + c₀` (degree ≤ 2), ascending.
pub fn real_roots(c0: i128, c1: i128, c2: i128) -> Vec<Surd> {
    if c2 == 0 {
        if c1 == 0 {
            return Vec::new();
        }
        return vec![Surd::rational(-c0, c1)];
    }
    let disc = c1 * c1 - 4 * c2 * c0;
    match disc.signum() {
        -1 => Vec::new(),
        0 => vec![Surd::rational(-c1, 2 * c2)],
        _ => {
            let mut v = vec![Surd::new(-c1, -1, disc, 2 * c2), Surd::new(-c1, 1, disc, 2 * c2)];
            v.sort();
            v
        }
    }
}
