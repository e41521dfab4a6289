//! Free nilpotent groups of class 2 and 3 on two generators `x`, `y`, in
//! normal form with arbitrary-precision exponents.
//!
//! * `N22`: `x^a y^b t^c` with `t = [x,y]` central.
//! * `N23`: `x^a y^b u^c v^d w^f` with `u = [y,x]`, `v = [u,y]`, `w = [u,x]`;
//!   `v`, `w` are central and `u` commutes with both.
//!
//! Commutators are `[a,b] = a⁻¹b⁻¹ab`. Endomorphisms are given by the images
//! of `x` and `y`, which always extend because the groups are free in their
//! variety.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::morphisms::split_top_level;

fn choose2(n: &BigInt) -> BigInt {
    (n * (n - 1)) / 2
}

/// Group operations shared by both normal forms.
pub trait NilElement: Clone + Eq + fmt::Debug + fmt::Display + FromStr<Err = Error> {
    /// Nilpotency class of the ambient free group.
    const CLASS: u8;

    fn identity() -> Self;
    fn x() -> Self;
    fn y() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    /// Exponent vector of the normal form.
    fn exponents(&self) -> Vec<BigInt>;
    fn from_exponents(e: &[BigInt]) -> Result<Self>;
    /// Whether the element lies in the centre.
    fn is_central(&self) -> bool;

    /// Image in the abelianization `ℤ²`.
    fn abelianization(&self) -> (BigInt, BigInt) {
        let e = self.exponents();
        (e[0].clone(), e[1].clone())
    }

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    fn pow(&self, n: &BigInt) -> Self {
        let (mut base, mut k) = if n.is_negative() {
            (self.inv(), -n)
        } else {
            (self.clone(), n.clone())
        };
        let mut acc = Self::identity();
        while !k.is_zero() {
            if k.is_odd() {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    fn commutator(&self, other: &Self) -> Self {
        self.inv().mul(&other.inv()).mul(self).mul(other)
    }

    /// Evaluates the normal form with `x`, `y` replaced by `images`.
    fn substitute(&self, x: &Self, y: &Self) -> Self;
}

/// `x^a y^b [x,y]^c` in the free nilpotent group of class 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct N22Element {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl N22Element {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        N22Element {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// `[x,y]`.
    pub fn t() -> Self {
        Self::new(0, 0, 1)
    }
}

impl NilElement for N22Element {
    const CLASS: u8 = 2;

    fn identity() -> Self {
        Self::new(0, 0, 0)
    }

    fn x() -> Self {
        Self::new(1, 0, 0)
    }

    fn y() -> Self {
        Self::new(0, 1, 0)
    }

    // y^b x^a = x^a y^b t^{-ab}
    fn mul(&self, o: &Self) -> Self {
        N22Element {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c - &o.a * &self.b,
        }
    }

    fn inv(&self) -> Self {
        N22Element {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c - &self.a * &self.b,
        }
    }

    fn exponents(&self) -> Vec<BigInt> {
        vec![self.a.clone(), self.b.clone(), self.c.clone()]
    }

    fn from_exponents(e: &[BigInt]) -> Result<Self> {
        match e {
            [a, b, c] => Ok(N22Element {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            }),
            _ => Err(Error::ArityMismatch {
                expected: 3,
                got: e.len(),
            }),
        }
    }

    fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn substitute(&self, x: &Self, y: &Self) -> Self {
        x.pow(&self.a)
            .mul(&y.pow(&self.b))
            .mul(&x.commutator(y).pow(&self.c))
    }
}

/// `x^a y^b [y,x]^c [[y,x],y]^d [[y,x],x]^f` in the free nilpotent group of class 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct N23Element {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub f: BigInt,
}

impl N23Element {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        f: impl Into<BigInt>,
    ) -> Self {
        N23Element {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            f: f.into(),
        }
    }

    fn basis(i: usize) -> Self {
        let mut e = vec![BigInt::zero(); 5];
        e[i] = BigInt::one();
        Self::from_exponents(&e).expect("five exponents")
    }

    /// `[y,x]`.
    pub fn u() -> Self {
        Self::basis(2)
    }

    /// `[[y,x],y]`.
    pub fn v() -> Self {
        Self::basis(3)
    }

    /// `[[y,x],x]`.
    pub fn w() -> Self {
        Self::basis(4)
    }
}

impl NilElement for N23Element {
    const CLASS: u8 = 3;

    fn identity() -> Self {
        Self::new(0, 0, 0, 0, 0)
    }

    fn x() -> Self {
        Self::basis(0)
    }

    fn y() -> Self {
        Self::basis(1)
    }

    // Collection rules: y^b x = x y^b u^b v^{C(b,2)}, u^c x = x u^c w^c,
    // u^c y = y u^c v^c.
    fn mul(&self, o: &Self) -> Self {
        let c_mid = &self.c + &o.a * &self.b;
        N23Element {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: &self.d + &o.d + &o.a * choose2(&self.b) + &c_mid * &o.b,
            f: &self.f + &o.f + &o.a * &self.c + &self.b * choose2(&o.a),
            c: c_mid + &o.c,
        }
    }

    fn inv(&self) -> Self {
        let parts = [
            Self::new(0, 0, 0, 0, -&self.f),
            Self::new(0, 0, 0, -&self.d, 0),
            Self::new(0, 0, -&self.c, 0, 0),
            Self::new(0, -&self.b, 0, 0, 0),
            Self::new(-&self.a, 0, 0, 0, 0),
        ];
        parts.iter().fold(Self::identity(), |acc, p| acc.mul(p))
    }

    fn exponents(&self) -> Vec<BigInt> {
        vec![
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.f.clone(),
        ]
    }

    fn from_exponents(e: &[BigInt]) -> Result<Self> {
        match e {
            [a, b, c, d, f] => Ok(N23Element {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                d: d.clone(),
                f: f.clone(),
            }),
            _ => Err(Error::ArityMismatch {
                expected: 5,
                got: e.len(),
            }),
        }
    }

    fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    fn substitute(&self, x: &Self, y: &Self) -> Self {
        let u = y.commutator(x);
        x.pow(&self.a)
            .mul(&y.pow(&self.b))
            .mul(&u.pow(&self.c))
            .mul(&u.commutator(y).pow(&self.d))
            .mul(&u.commutator(x).pow(&self.f))
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, names: &[&str], exps: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (name, e) in names.iter().zip(exps) {
        if e.is_zero() {
            continue;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        if e.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    if first {
        write!(f, "e")?;
    }
    Ok(())
}

impl fmt::Display for N22Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &["x", "y", "[x,y]"], &self.exponents())
    }
}

impl fmt::Display for N23Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &["x", "y", "[y,x]", "[[y,x],y]", "[[y,x],x]"],
            &self.exponents(),
        )
    }
}

/// Parses a product of factors `atom` or `atom^k`, where an atom is `x`,
/// `y`, `e` or a bracket `[p,q]` of products. Factors are separated by
/// whitespace or `*`.
fn parse_product<E: NilElement>(text: &str) -> Result<E> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = Parser { chars, pos: 0 };
    let value = p.product::<E>()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in {text:?}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn product<E: NilElement>(&mut self) -> Result<E> {
        let mut acc = E::identity();
        let mut any = false;
        loop {
            self.skip_ws();
            if any && self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
            }
            match self.peek() {
                Some('x' | 'y' | 'e' | '[') => {
                    acc = acc.mul(&self.factor::<E>()?);
                    any = true;
                }
                _ if any => return Ok(acc),
                _ => return Err(self.error("expected a factor")),
            }
        }
    }

    fn factor<E: NilElement>(&mut self) -> Result<E> {
        let atom = match self.peek() {
            Some('x') => {
                self.pos += 1;
                E::x()
            }
            Some('y') => {
                self.pos += 1;
                E::y()
            }
            Some('e') => {
                self.pos += 1;
                E::identity()
            }
            Some('[') => {
                self.pos += 1;
                let a = self.product::<E>()?;
                self.skip_ws();
                if self.peek() != Some(',') {
                    return Err(self.error("expected ','"));
                }
                self.pos += 1;
                let b = self.product::<E>()?;
                self.skip_ws();
                if self.peek() != Some(']') {
                    return Err(self.error("expected ']'"));
                }
                self.pos += 1;
                a.commutator(&b)
            }
            _ => return Err(self.error("expected a factor")),
        };
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let k: BigInt = digits.parse().map_err(|_| self.error("bad exponent"))?;
        Ok(atom.pow(&k))
    }
}

impl FromStr for N22Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_product(s)
    }
}

impl FromStr for N23Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_product(s)
    }
}

/// Endomorphism determined by the images of `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilMap<E> {
    pub x_image: E,
    pub y_image: E,
}

impl<E: NilElement> NilMap<E> {
    pub fn new(x_image: E, y_image: E) -> Self {
        NilMap { x_image, y_image }
    }

    pub fn identity() -> Self {
        Self::new(E::x(), E::y())
    }

    /// Inner automorphism `g ↦ h⁻¹gh`.
    pub fn inner(h: &E) -> Self {
        let conj = |g: &E| h.inv().mul(g).mul(h);
        Self::new(conj(&E::x()), conj(&E::y()))
    }

    /// Parses `x->…, y->…`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut x_image = None;
        let mut y_image = None;
        for part in split_top_level(spec) {
            let (lhs, rhs) = part
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected `gen->image` in {part:?}")))?;
            let image: E = rhs.trim().parse()?;
            let slot = match lhs.trim() {
                "x" => &mut x_image,
                "y" => &mut y_image,
                other => return Err(Error::Parse(format!("unknown generator {other:?}"))),
            };
            if slot.replace(image).is_some() {
                return Err(Error::Parse(format!(
                    "generator {} given twice",
                    lhs.trim()
                )));
            }
        }
        Ok(Self::new(
            x_image.unwrap_or_else(E::x),
            y_image.unwrap_or_else(E::y),
        ))
    }

    pub fn apply(&self, g: &E) -> E {
        g.substitute(&self.x_image, &self.y_image)
    }

    /// `z⁻¹ φ(z)`.
    pub fn displacement(&self, z: &E) -> E {
        z.inv().mul(&self.apply(z))
    }

    /// Integer matrix of the induced map on `ℤ²`, rows are images of `x`, `y`.
    pub fn abelianization_matrix(&self) -> [[BigInt; 2]; 2] {
        let (p, q) = self.x_image.abelianization();
        let (r, s) = self.y_image.abelianization();
        [[p, q], [r, s]]
    }

    /// An endomorphism of a free nilpotent group is bijective exactly when
    /// the induced map on the abelianization is.
    pub fn is_automorphism(&self) -> bool {
        let [[p, q], [r, s]] = self.abelianization_matrix();
        (p * s - q * r).abs().is_one()
    }

    /// Acts as the identity modulo the derived subgroup.
    pub fn is_ia(&self) -> bool {
        self.x_image.abelianization() == E::x().abelianization()
            && self.y_image.abelianization() == E::y().abelianization()
    }

    /// `x⁻¹φ(x)` and `y⁻¹φ(y)` are central.
    pub fn is_central(&self) -> bool {
        self.displacement(&E::x()).is_central() && self.displacement(&E::y()).is_central()
    }

    /// Searches `z` with every exponent in `[-bound, bound]` for
    /// `z⁻¹φ(z) = target`; returns the first witness in lexicographic order.
    pub fn find_displacement(&self, target: &E, bound: u32) -> Option<E> {
        let n = E::identity().exponents().len();
        let lo = -(bound as i64);
        let mut e = vec![lo; n];
        loop {
            let z = E::from_exponents(&e.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
                .expect("length matches");
            if &self.displacement(&z) == target {
                return Some(z);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if e[i] < bound as i64 {
                    e[i] += 1;
                    break;
                }
                e[i] = lo;
            }
        }
    }
}

impl<E: NilElement> fmt::Display for NilMap<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x->{}, y->{}", self.x_image, self.y_image)
    }
}

/// The three class-2 maps with closed-form unit classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PinnedN22Map {
    /// `x ↦ x⁻¹, y ↦ y`.
    InvertX,
    /// `x ↦ x, y ↦ y⁻¹`.
    InvertY,
    /// `x ↦ x⁻¹, y ↦ y⁻¹`, the composite of the other two.
    InvertBoth,
}

impl PinnedN22Map {
    pub const ALL: [PinnedN22Map; 3] = [Self::InvertX, Self::InvertY, Self::InvertBoth];

    pub fn map(self) -> NilMap<N22Element> {
        let x = N22Element::x();
        let y = N22Element::y();
        match self {
            Self::InvertX => NilMap::new(x.inv(), y),
            Self::InvertY => NilMap::new(x, y.inv()),
            Self::InvertBoth => NilMap::new(x.inv(), y.inv()),
        }
    }

    pub fn recognize(map: &NilMap<N22Element>) -> Option<Self> {
        Self::ALL.into_iter().find(|p| &p.map() == map)
    }

    /// Closed-form displacement `z⁻¹φ(z)` for `z = x^a y^b t^c`.
    pub fn displacement_formula(self, z: &N22Element) -> N22Element {
        let (a, b, c) = (&z.a, &z.b, &z.c);
        let two = BigInt::from(2);
        match self {
            Self::InvertX => N22Element {
                a: -&two * a,
                b: BigInt::zero(),
                c: -&two * a * b - &two * c,
            },
            Self::InvertY => N22Element {
                a: BigInt::zero(),
                b: -&two * b,
                c: -&two * c,
            },
            Self::InvertBoth => N22Element {
                a: -&two * a,
                b: -&two * b,
                c: -&two * a * b,
            },
        }
    }

    /// Closed-form membership in `[e]_φ`.
    pub fn unit_class_contains(self, t: &N22Element) -> bool {
        let even = |n: &BigInt| n.is_even();
        match self {
            Self::InvertX => even(&t.a) && t.b.is_zero() && even(&t.c),
            Self::InvertY => t.a.is_zero() && even(&t.b) && even(&t.c),
            Self::InvertBoth => even(&t.a) && even(&t.b) && t.c == -(&t.a * &t.b) / BigInt::from(2),
        }
    }

    /// `None` when `[e]_φ` is a subgroup, otherwise members `p`, `q` with
    /// `pq` outside the class.
    pub fn nonclosure_witness(self) -> Option<(N22Element, N22Element, N22Element)> {
        match self {
            Self::InvertX | Self::InvertY => None,
            Self::InvertBoth => {
                let p = N22Element::new(2, 0, 0);
                let q = N22Element::new(0, 2, 0);
                let pq = p.mul(&q);
                Some((p, q, pq))
            }
        }
    }
}

/// Membership of `t` in `[e]_φ` for a recognized pinned map.
pub fn n22_unit_class_membership(map: &NilMap<N22Element>, t: &N22Element) -> Result<bool> {
    if map.is_identity_map() {
        return Ok(t.is_identity());
    }
    PinnedN22Map::recognize(map)
        .map(|p| p.unit_class_contains(t))
        .ok_or_else(|| Error::UnsupportedMap(format!("no closed form for {map}")))
}

impl<E: NilElement> NilMap<E> {
    pub fn is_identity_map(&self) -> bool {
        self.x_image == E::x() && self.y_image == E::y()
    }
}

/// `[g, y]` by the closed form `(0, 0, −a, c − ab, −a(a−1)/2)`.
pub fn n23_commutator_with_y(g: &N23Element) -> N23Element {
    N23Element {
        a: BigInt::zero(),
        b: BigInt::zero(),
        c: -&g.a,
        d: &g.c - &g.a * &g.b,
        f: -choose2(&g.a),
    }
}

/// Membership in `[e]_ŷ = [N₂,₃, y]` for the inner automorphism of `y`.
pub fn n23_inner_y_membership(t: &N23Element) -> bool {
    if !t.a.is_zero() || !t.b.is_zero() {
        return false;
    }
    let a = -&t.c;
    t.f == -choose2(&a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n22_basics() {
        let x = N22Element::x();
        let y = N22Element::y();
        assert_eq!(x.commutator(&y), N22Element::t());
        assert_eq!(y.mul(&x), N22Element::new(1, 1, -1));
        let g = N22Element::new(3, -2, 5);
        assert!(g.mul(&g.inv()).is_identity());
        assert_eq!(
            g.pow(&BigInt::from(-3)).pow(&BigInt::from(-1)),
            g.mul(&g).mul(&g)
        );
    }

    #[test]
    fn n23_basics() {
        let x = N23Element::x();
        let y = N23Element::y();
        let u = y.commutator(&x);
        assert_eq!(u, N23Element::u());
        assert_eq!(u.commutator(&y), N23Element::v());
        assert_eq!(u.commutator(&x), N23Element::w());
        assert!(N23Element::v().commutator(&x).is_identity());
        let g = N23Element::new(2, -1, 3, 4, -5);
        assert!(g.mul(&g.inv()).is_identity());
        assert!(g.inv().mul(&g).is_identity());
    }

    #[test]
    fn text_round_trip() {
        let g = N22Element::new(-2, 1, 7);
        assert_eq!(g.to_string(), "x^-2 y [x,y]^7");
        assert_eq!(g.to_string().parse::<N22Element>().unwrap(), g);
        assert_eq!("e".parse::<N22Element>().unwrap(), N22Element::identity());
        assert_eq!(
            "x*x".parse::<N22Element>().unwrap(),
            N22Element::new(2, 0, 0)
        );
        let h = N23Element::new(1, 0, -1, 2, 3);
        assert_eq!(h.to_string(), "x [y,x]^-1 [[y,x],y]^2 [[y,x],x]^3");
        assert_eq!(h.to_string().parse::<N23Element>().unwrap(), h);
        assert!("x^".parse::<N22Element>().is_err());
        assert!("[x y]".parse::<N22Element>().is_err());
    }

    #[test]
    fn map_parsing_and_flags() {
        let m: NilMap<N23Element> = NilMap::parse("x->x [x,y], y->y").unwrap();
        assert!(m.is_ia() && m.is_automorphism() && !m.is_central());
        let m2: NilMap<N22Element> = NilMap::parse("x->x [x,y], y->y").unwrap();
        assert!(m2.is_ia() && m2.is_central());
        let id = NilMap::<N23Element>::identity();
        assert!(id.is_ia() && id.is_central());
        let swap: NilMap<N22Element> = NilMap::parse("x->y, y->x").unwrap();
        assert!(swap.is_automorphism() && !swap.is_ia());
        let square: NilMap<N22Element> = NilMap::parse("x->x^2").unwrap();
        assert!(!square.is_automorphism());
    }

    #[test]
    fn pinned_maps_recognized() {
        for p in PinnedN22Map::ALL {
            assert_eq!(PinnedN22Map::recognize(&p.map()), Some(p));
        }
        let m: NilMap<N22Element> = NilMap::parse("x->y, y->x").unwrap();
        assert!(matches!(
            n22_unit_class_membership(&m, &N22Element::identity()),
            Err(Error::UnsupportedMap(_))
        ));
        let id = NilMap::<N22Element>::identity();
        assert!(n22_unit_class_membership(&id, &N22Element::identity()).unwrap());
        assert!(!n22_unit_class_membership(&id, &N22Element::t()).unwrap());
    }

    #[test]
    fn inner_y_examples() {
        let t = N23Element::x().commutator(&N23Element::y());
        assert_eq!(t, N23Element::new(0, 0, -1, 0, 0));
        assert!(n23_inner_y_membership(&t));
        assert!(!n23_inner_y_membership(&t.mul(&t)));
        assert!(n23_inner_y_membership(&N23Element::identity()));
        assert_eq!(
            n23_commutator_with_y(&N23Element::new(2, 1, 0, 0, 0)),
            N23Element::new(0, 0, -2, -2, -1)
        );
    }
}
