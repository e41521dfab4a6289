//! The wreath product `ℤ ≀ ℤ` as the matrices `d^m t(μ) = [[λ^m, λ^m μ], [0, 1]]`
//! over `ℤ[λ^{±1}]`, where `d = diag(λ, 1)` and `t(μ)` is the unitriangular
//! matrix with corner `μ`.
//!
//! Conjugation gives `d⁻¹ t(μ) d = t(λ⁻¹μ)`, hence
//! `d^{m₁}t(μ₁) · d^{m₂}t(μ₂) = d^{m₁+m₂} t(λ^{−m₂}μ₁ + μ₂)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub m: BigInt,
    pub mu: LaurentPoly,
}

impl WreathElement {
    pub fn new(m: impl Into<BigInt>, mu: LaurentPoly) -> Self {
        WreathElement { m: m.into(), mu }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `t(μ)`.
    pub fn t(mu: LaurentPoly) -> Self {
        Self::new(0, mu)
    }

    /// `d^m`.
    pub fn d_pow(m: impl Into<BigInt>) -> Self {
        Self::new(m, LaurentPoly::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_zero() && self.mu.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        WreathElement {
            m: &self.m + &other.m,
            mu: &self.mu.shift(&-&other.m) + &other.mu,
        }
    }

    pub fn inv(&self) -> Self {
        WreathElement {
            m: -&self.m,
            mu: -self.mu.shift(&self.m),
        }
    }

    /// `u⁻¹ h⁻¹ u h` by multiplication.
    pub fn commutator(&self, other: &Self) -> Self {
        self.inv().mul(&other.inv()).mul(self).mul(other)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{} t({})", self.m, self.mu)
    }
}

/// `[d^l t(ν), d^m t(μ)] = t(μ(1 − λ^{−l}) − ν(1 − λ^{−m}))`.
pub fn wreath_commutator(u: &WreathElement, h: &WreathElement) -> WreathElement {
    let a = &h.mu * &LaurentPoly::one_minus_inverse_power(&u.m);
    let b = &u.mu * &LaurentPoly::one_minus_inverse_power(&h.m);
    WreathElement::t(&a - &b)
}

/// Answer to "is `t(target)` in `[e]_h = [G, h]`?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `t(target) = [d^l t(ν), h]`.
    Member {
        l: BigInt,
        nu: LaurentPoly,
    },
    NonMember,
    /// `h` is the identity, so the class is `{e}`.
    TrivialClass {
        member: bool,
    },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        match self {
            Membership::Member { .. } => true,
            Membership::NonMember => false,
            Membership::TrivialClass { member } => *member,
        }
    }
}

fn modulus(m: &BigInt) -> Result<usize> {
    m.abs()
        .to_usize()
        .filter(|&k| k <= 1 << 20)
        .ok_or_else(|| Error::Precondition(format!("|m| = {} is too large", m.abs())))
}

/// Decides `target ∈ {μ(1 − λ^{−l}) − ν(1 − λ^{−m}) : l ∈ ℤ, ν ∈ ℤ[λ^{±1}]}`.
///
/// For `m = 0` the target must be `μ(1 − λ^{−l})`, read off by exact
/// division. For `m ≠ 0`, `λ^{−m} ≡ 1` modulo `(1 − λ^{−m})`, so only
/// `l mod |m|` matters and each residue is a divisibility test.
pub fn unit_class_membership(h: &WreathElement, target: &LaurentPoly) -> Result<Membership> {
    if h.m.is_zero() {
        if h.mu.is_zero() {
            return Ok(Membership::TrivialClass {
                member: target.is_zero(),
            });
        }
        if target.is_zero() {
            return Ok(Membership::Member {
                l: BigInt::zero(),
                nu: LaurentPoly::zero(),
            });
        }
        let Some(q) = target.div_exact(&h.mu) else {
            return Ok(Membership::NonMember);
        };
        // q must be 1 − λ^{−l} with l ≠ 0
        let mut terms = q.terms();
        return Ok(match (terms.next(), terms.next(), terms.next()) {
            (Some((k1, c1)), Some((k2, c2)), None) => {
                let one = BigInt::from(1);
                if k2.is_zero() && *c2 == one && *c1 == -&one {
                    Membership::Member {
                        l: -k1,
                        nu: LaurentPoly::zero(),
                    }
                } else if k1.is_zero() && *c1 == one && *c2 == -&one {
                    Membership::Member {
                        l: -k2,
                        nu: LaurentPoly::zero(),
                    }
                } else {
                    Membership::NonMember
                }
            }
            _ => Membership::NonMember,
        });
    }
    let k = modulus(&h.m)?;
    let ideal = LaurentPoly::one_minus_inverse_power(&h.m);
    for l in 0..k {
        let l = BigInt::from(l);
        let base = &h.mu * &LaurentPoly::one_minus_inverse_power(&l);
        if let Some(nu) = (&base - target).div_exact(&ideal) {
            return Ok(Membership::Member { l, nu });
        }
    }
    Ok(Membership::NonMember)
}

/// Two members of `[e]_h` whose product is not a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonClosure {
    pub l1: BigInt,
    pub l2: BigInt,
    pub first: LaurentPoly,
    pub second: LaurentPoly,
    pub product: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureVerdict {
    NotSubgroup(NonClosure),
    /// The class is a subgroup; this happens when `μ(1 − λ⁻¹)` is divisible
    /// by `1 − λ^{−m}`, for example whenever `|m| = 1`.
    Subgroup,
}

fn member_at(h: &WreathElement, l: i64) -> LaurentPoly {
    &h.mu * &LaurentPoly::one_minus_inverse_power(&BigInt::from(l))
}

/// Decides whether `[e]_h` is closed under multiplication and returns a
/// witness pair `t(μ(1 − λ^{−l₁}))`, `t(μ(1 − λ^{−l₂}))` when it is not.
///
/// Modulo `1 − λ^{−m}` the class is a finite set of residues `μ(1 − λ^{−l})`
/// in a torsion-free group, so it is closed only if all of them vanish;
/// otherwise some pair with `0 ≤ l₁ ≤ l₂ < |m|` escapes. For `m = 0` the
/// pair `l₁ = l₂ = 1` always escapes when `μ ≠ 0`.
pub fn nonclosure_witness(h: &WreathElement) -> Result<ClosureVerdict> {
    if h.is_identity() {
        return Ok(ClosureVerdict::Subgroup);
    }
    let range: Vec<i64> = if h.m.is_zero() {
        vec![1]
    } else {
        (0..modulus(&h.m)? as i64).collect()
    };
    for (i, &l1) in range.iter().enumerate() {
        for &l2 in &range[i..] {
            let first = member_at(h, l1);
            let second = member_at(h, l2);
            let product = &first + &second;
            if !unit_class_membership(h, &product)?.is_member() {
                return Ok(ClosureVerdict::NotSubgroup(NonClosure {
                    l1: l1.into(),
                    l2: l2.into(),
                    first,
                    second,
                    product,
                }));
            }
        }
    }
    Ok(ClosureVerdict::Subgroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_and_conjugation() {
        let u = WreathElement::new(3, p("2-l^-1+l^4"));
        assert!(u.mul(&u.inv()).is_identity());
        assert!(u.inv().mul(&u).is_identity());
        let d = WreathElement::d_pow(1);
        let t = WreathElement::t(p("1+l"));
        assert_eq!(d.inv().mul(&t).mul(&d), WreathElement::t(p("l^-1+1")));
        assert_eq!(d.mul(&t).mul(&d.inv()), WreathElement::t(p("l+l^2")));
    }

    #[test]
    fn commutator_closed_form() {
        let l = WreathElement::d_pow(2);
        let t = WreathElement::t(p("1+l"));
        assert_eq!(l.commutator(&t), WreathElement::t(&p("1+l") * &p("1-l^-2")));
        let u = WreathElement::new(1, LaurentPoly::zero());
        let h = WreathElement::t(p("1"));
        assert_eq!(wreath_commutator(&u, &h), WreathElement::t(p("1-l^-1")));
        assert_eq!(wreath_commutator(&u, &u), WreathElement::identity());
    }

    #[test]
    fn m_zero_membership() {
        let h = WreathElement::t(p("1"));
        assert_eq!(
            unit_class_membership(&h, &p("1-l^-1")).unwrap(),
            Membership::Member {
                l: 1.into(),
                nu: LaurentPoly::zero()
            }
        );
        assert_eq!(
            unit_class_membership(&h, &p("1-l^3")).unwrap(),
            Membership::Member {
                l: (-3).into(),
                nu: LaurentPoly::zero()
            }
        );
        assert!(unit_class_membership(&h, &LaurentPoly::zero())
            .unwrap()
            .is_member());
        assert!(!unit_class_membership(&h, &p("2-2*l^-1"))
            .unwrap()
            .is_member());
        assert!(!unit_class_membership(&h, &p("l^-1-1+l"))
            .unwrap()
            .is_member());
        let trivial = WreathElement::identity();
        assert_eq!(
            unit_class_membership(&trivial, &p("1")).unwrap(),
            Membership::TrivialClass { member: false }
        );
    }

    #[test]
    fn m_nonzero_membership_has_valid_witness() {
        let h = WreathElement::new(2, p("1+l"));
        for target in ["0", "1-l^-2", "l^-2-1", "1-l^-1", "3", "1+l-l^-1-1"] {
            let target = p(target);
            if let Membership::Member { l, nu } = unit_class_membership(&h, &target).unwrap() {
                let z = WreathElement::new(l, nu);
                assert_eq!(wreath_commutator(&z, &h), WreathElement::t(target));
            }
        }
        assert!(!unit_class_membership(&h, &p("3")).unwrap().is_member());
    }

    #[test]
    fn closure_verdicts() {
        match nonclosure_witness(&WreathElement::t(p("1"))).unwrap() {
            ClosureVerdict::NotSubgroup(w) => {
                assert_eq!(w.first, p("1-l^-1"));
                assert_eq!(w.second, p("1-l^-1"));
                assert_eq!(w.product, p("2-2*l^-1"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            nonclosure_witness(&WreathElement::new(1, p("1"))).unwrap(),
            ClosureVerdict::Subgroup
        );
        assert_eq!(
            nonclosure_witness(&WreathElement::new(-1, p("3+l^2"))).unwrap(),
            ClosureVerdict::Subgroup
        );
        assert!(matches!(
            nonclosure_witness(&WreathElement::new(2, p("1"))).unwrap(),
            ClosureVerdict::NotSubgroup(_)
        ));
        assert_eq!(
            nonclosure_witness(&WreathElement::new(2, p("1+l"))).unwrap(),
            ClosureVerdict::Subgroup
        );
    }
}
