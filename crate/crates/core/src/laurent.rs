//! Sparse integer Laurent polynomials in one variable `λ`.
//!
//! Text form uses `l` for `λ`: `1-l^-1`, `3*l^2+l-4`, `0`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent → coefficient, with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<BigInt, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·λ^k`.
    pub fn monomial(c: impl Into<BigInt>, k: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(k.into(), c.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, K, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (K, C)>,
        K: Into<BigInt>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k.into(), c.into());
        }
        p
    }

    /// `1 − λ^{−k}`.
    pub fn one_minus_inverse_power(k: &BigInt) -> Self {
        &Self::one() - &Self::monomial(1, -k)
    }

    fn add_term(&mut self, k: BigInt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &BigInt) -> BigInt {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// Multiplication by `λ^k`.
    pub fn shift(&self, k: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Sum of coefficients, the value at `λ = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Image in `ℤ[λ]/(λ^k − 1)`: entry `r` sums the coefficients of the
    /// exponents congruent to `r` mod `k`.
    pub fn fold_mod(&self, k: usize) -> Vec<BigInt> {
        assert!(k > 0, "modulus must be positive");
        let modulus = BigInt::from(k);
        let mut out = vec![BigInt::zero(); k];
        for (e, c) in &self.terms {
            let r: usize = e.mod_floor(&modulus).try_into().expect("residue below k");
            out[r] += c;
        }
        out
    }

    /// `self / divisor` when the quotient is again an integer Laurent polynomial.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let dmin = divisor.min_exponent()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Normalize to ordinary polynomials with nonzero constant term in the divisor.
        let d = divisor.shift(&-&dmin);
        let smin = self.min_exponent().expect("nonzero").clone();
        let mut rem = self.shift(&-&smin);
        let dtop = d.max_exponent().expect("nonzero").clone();
        let lead = d.coefficient(&dtop);
        let mut quotient = Self::zero();
        while let Some(top) = rem.max_exponent().cloned() {
            if top < dtop {
                return None;
            }
            let (q, r) = rem.coefficient(&top).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, &top - &dtop);
            rem = &rem - &(&step * &d);
            quotient = &quotient + &step;
        }
        Some(quotient.shift(&(smin - dmin)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;

            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            write!(f, "{sign}")?;
            if k.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k.is_one() {
                write!(f, "l")?;
            } else {
                write!(f, "l^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = |what: &str| Error::Parse(format!("polynomial {s:?}: {what}"));
        let bytes = text.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad("expected '+' or '-'"));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<BigInt> =
                (pos > start).then(|| text[start..pos].parse().expect("digits"));
            let mut exponent = BigInt::zero();
            let has_var = pos < bytes.len() && (bytes[pos] == b'*' || bytes[pos] == b'l');
            if has_var {
                if bytes[pos] == b'*' {
                    if coeff.is_none() {
                        return Err(bad("'*' without a coefficient"));
                    }
                    pos += 1;
                }
                if pos >= bytes.len() || bytes[pos] != b'l' {
                    return Err(bad("expected 'l'"));
                }
                pos += 1;
                exponent = BigInt::one();
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exponent = text[es..pos].parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(bad("expected a term"));
            }
            out.add_term(exponent, sign * coeff.unwrap_or_else(BigInt::one));
        }
        Ok(out)
    }
}
