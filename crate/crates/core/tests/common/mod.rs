//! Independent models used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use twistclass::laurent::LaurentPoly;
use twistclass::nilpotent::{N22Element, N23Element};
use twistclass::wreath::WreathElement;

/// Noncommutative polynomials in `X`, `Y` with words longer than `deg` dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated {
    pub deg: usize,
    pub terms: BTreeMap<Vec<u8>, i128>,
}

impl Truncated {
    pub fn one(deg: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        Truncated { deg, terms }
    }

    fn letter(deg: usize, l: u8) -> Self {
        let mut t = Self::one(deg);
        t.terms.insert(vec![l], 1);
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u8>, i128> = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                if w1.len() + w2.len() > self.deg {
                    continue;
                }
                let mut w = w1.clone();
                w.extend(w2);
                *terms.entry(w).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| *c != 0);
        Truncated {
            deg: self.deg,
            terms,
        }
    }

    /// Inverse of `1 + N` with `N` nilpotent: `Σ (−N)^k`.
    pub fn inv(&self) -> Self {
        let mut n = self.clone();
        *n.terms.entry(Vec::new()).or_default() -= 1;
        n.terms.retain(|_, c| *c != 0);
        let mut minus_n = n.clone();
        for c in minus_n.terms.values_mut() {
            *c = -*c;
        }
        let mut acc = Self::one(self.deg);
        let mut power = Self::one(self.deg);
        for _ in 0..self.deg {
            power = power.mul(&minus_n);
            for (w, c) in &power.terms {
                *acc.terms.entry(w.clone()).or_default() += c;
            }
        }
        acc.terms.retain(|_, c| *c != 0);
        acc
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::one(self.deg), |acc, _| acc.mul(&base))
    }

    pub fn comm(&self, o: &Self) -> Self {
        self.inv().mul(&o.inv()).mul(self).mul(o)
    }
}

fn small(b: &num_bigint::BigInt) -> i64 {
    b.to_i64().expect("small exponent")
}

/// Magnus image of `x^a y^b [x,y]^c`, faithful modulo degree 3.
pub fn magnus22(g: &N22Element) -> Truncated {
    let x = Truncated::letter(2, 0);
    let y = Truncated::letter(2, 1);
    x.pow(small(&g.a))
        .mul(&y.pow(small(&g.b)))
        .mul(&x.comm(&y).pow(small(&g.c)))
}

/// Magnus image of `x^a y^b u^c v^d w^f`, faithful modulo degree 4.
pub fn magnus23(g: &N23Element) -> Truncated {
    let x = Truncated::letter(3, 0);
    let y = Truncated::letter(3, 1);
    let u = y.comm(&x);
    x.pow(small(&g.a))
        .mul(&y.pow(small(&g.b)))
        .mul(&u.pow(small(&g.c)))
        .mul(&u.comm(&y).pow(small(&g.d)))
        .mul(&u.comm(&x).pow(small(&g.f)))
}

/// Laurent polynomial with `i64` exponents and coefficients.
pub type Lp = BTreeMap<i64, i64>;

pub fn lp(p: &LaurentPoly) -> Lp {
    p.terms().map(|(k, c)| (small(k), small(c))).collect()
}

pub fn lp_add(a: &Lp, b: &Lp) -> Lp {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(*k).or_default() += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn lp_mul(a: &Lp, b: &Lp) -> Lp {
    let mut out = Lp::new();
    for (k1, c1) in a {
        for (k2, c2) in b {
            *out.entry(k1 + k2).or_default() += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn lp_mono(k: i64, c: i64) -> Lp {
    if c == 0 {
        Lp::new()
    } else {
        Lp::from([(k, c)])
    }
}

/// 2×2 matrix over the Laurent ring.
pub type Mat = [[Lp; 2]; 2];

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| lp_add(&lp_mul(&a[i][0], &b[0][j]), &lp_mul(&a[i][1], &b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `d^m t(μ) = [[λ^m, λ^m μ], [0, 1]]`.
pub fn matrix(u: &WreathElement) -> Mat {
    let m = small(&u.m);
    let dm = lp_mono(m, 1);
    [
        [dm.clone(), lp_mul(&dm, &lp(&u.mu))],
        [Lp::new(), lp_mono(0, 1)],
    ]
}

/// Inverse of an upper unitriangular-by-monomial matrix `[[λ^m, b], [0, 1]]`.
pub fn mat_inv(a: &Mat) -> Mat {
    let (&m, &c) = a[0][0].iter().next().expect("monomial diagonal");
    assert!(a[0][0].len() == 1 && c == 1, "diagonal must be λ^m");
    let inv_d = lp_mono(-m, 1);
    let neg_b: Lp = lp_mul(&inv_d, &a[0][1])
        .into_iter()
        .map(|(k, c)| (k, -c))
        .collect();
    [[inv_d, neg_b], [Lp::new(), lp_mono(0, 1)]]
}

pub fn mat_comm(a: &Mat, b: &Mat) -> Mat {
    mat_mul(&mat_mul(&mat_mul(&mat_inv(a), &mat_inv(b)), a), b)
}
