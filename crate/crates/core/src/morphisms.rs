//! Endomorphisms and automorphisms of finite groups.
//!
//! Maps are stored as full `id → id` tables and act on the right: the
//! composite `compose(φ, ψ)` sends `x` to `ψ(φ(x))`, i.e. `x^{φψ} = (x^φ)^ψ`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset, Word};

/// Upper bound on `|G|^{#generators}` for [`enumerate_homomorphisms`].
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Endomorphism,
    Automorphism,
}

/// A homomorphism `G → G`, checked against the full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMap {
    parent: u64,
    identity: Elem,
    table: Vec<Elem>,
    kind: MapKind,
    kernel_trivial: bool,
}

impl GroupMap {
    /// Wraps a table after checking `φ(ab) = φ(a)φ(b)` on every pair.
    pub fn from_table(g: &FiniteGroup, table: Vec<Elem>) -> Result<Self> {
        if table.len() != g.order() {
            return Err(Error::ArityMismatch {
                expected: g.order(),
                got: table.len(),
            });
        }
        for &v in &table {
            g.check_element(v)?;
        }
        for a in g.elements() {
            for b in g.elements() {
                if table[g.mult(a, b)] != g.mult(table[a], table[b]) {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(Self::trusted(g, table))
    }

    fn trusted(g: &FiniteGroup, table: Vec<Elem>) -> Self {
        Self::classify(g.fingerprint(), g.identity(), table)
    }

    fn classify(parent: u64, identity: Elem, table: Vec<Elem>) -> Self {
        let mut hit = vec![false; table.len()];
        for &v in &table {
            hit[v] = true;
        }
        let bijective = hit.iter().all(|&h| h);
        let kernel_trivial = table.iter().filter(|&&v| v == identity).count() == 1;
        GroupMap {
            parent,
            identity,
            table,
            kind: if bijective {
                MapKind::Automorphism
            } else {
                MapKind::Endomorphism
            },
            kernel_trivial,
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::trusted(g, g.elements().collect())
    }

    /// The endomorphism sending everything to `e`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::trusted(g, vec![g.identity(); g.order()])
    }

    /// Extends generator images to a homomorphism. Every relator must map to
    /// the identity; the extension is then re-checked on the full table.
    pub fn from_generator_images(g: &FiniteGroup, images: &[Elem]) -> Result<Self> {
        let relators = g.relators().ok_or(Error::MissingRelators)?;
        if images.len() != g.generators().len() {
            return Err(Error::ArityMismatch {
                expected: g.generators().len(),
                got: images.len(),
            });
        }
        for (index, w) in relators.iter().enumerate() {
            if g.evaluate_word_with(w, images)? != g.identity() {
                return Err(Error::RelatorViolated {
                    index,
                    word: w.display_with(g.generator_names()),
                });
            }
        }
        extend(g, images).ok_or(Error::NotHomomorphism)
    }

    /// `x ↦ h⁻¹ x h`.
    pub fn inner(g: &FiniteGroup, h: Elem) -> Self {
        Self::trusted(g, g.elements().map(|x| g.conjugate(x, h)).collect())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_automorphism(&self) -> bool {
        self.kind == MapKind::Automorphism
    }

    pub fn kernel_trivial(&self) -> bool {
        self.kernel_trivial
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn acts_on(&self, g: &FiniteGroup) -> bool {
        self.parent == g.fingerprint() && self.table.len() == g.order()
    }

    pub fn kernel(&self, g: &FiniteGroup) -> Subset {
        g.elements()
            .filter(|&x| self.apply(x) == g.identity())
            .collect()
    }

    pub fn image(&self) -> Subset {
        self.table.iter().copied().collect()
    }

    /// Images of the generators, in generator order.
    pub fn generator_images(&self, g: &FiniteGroup) -> Vec<Elem> {
        g.generators().iter().map(|&s| self.apply(s)).collect()
    }

    /// `x->a, y->b` using generator names and element labels.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        g.generator_names()
            .iter()
            .zip(self.generator_images(g))
            .map(|(name, img)| format!("{name}->{}", g.label(img)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_automorphism() {
            return Err(Error::NotAutomorphism);
        }
        let mut table = vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Ok(GroupMap {
            table,
            ..self.clone()
        })
    }
}

/// Breadth-first extension of generator images along right multiplication;
/// `None` if the assignment is inconsistent or not multiplicative.
fn extend(g: &FiniteGroup, images: &[Elem]) -> Option<GroupMap> {
    let mut table: Vec<Option<Elem>> = vec![None; g.order()];
    table[g.identity()] = Some(g.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = table[x].expect("queued elements are assigned");
        for (&s, &img) in g.generators().iter().zip(images) {
            let next = g.mult(x, s);
            let value = g.mult(fx, img);
            match table[next] {
                Some(v) if v != value => return None,
                Some(_) => {}
                None => {
                    table[next] = Some(value);
                    queue.push_back(next);
                }
            }
        }
    }
    let table: Vec<Elem> = table.into_iter().collect::<Option<_>>()?;
    GroupMap::from_table(g, table).ok()
}

/// Every endomorphism of `g`, in lexicographic order of generator images.
pub fn enumerate_homomorphisms(g: &FiniteGroup) -> Result<Vec<GroupMap>> {
    let relators = g.relators().ok_or(Error::MissingRelators)?;
    let k = g.generators().len();
    let space = (g.order() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if space > ENUMERATION_LIMIT {
        return Err(Error::SearchTooLarge(space));
    }
    let mut images = vec![0; k];
    let mut maps = Vec::new();
    loop {
        let satisfies = relators.iter().all(|w| {
            g.evaluate_word_with(w, &images)
                .map(|v| v == g.identity())
                .unwrap_or(false)
        });
        if satisfies {
            if let Some(map) = extend(g, &images) {
                maps.push(map);
            }
        }
        // odometer, last generator fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(maps);
            }
            i -= 1;
            images[i] += 1;
            if images[i] < g.order() {
                break;
            }
            images[i] = 0;
        }
    }
}

/// `x ↦ h⁻¹ x h`.
pub fn inner_automorphism(g: &FiniteGroup, h: Elem) -> Result<GroupMap> {
    g.check_element(h)?;
    Ok(GroupMap::inner(g, h))
}

/// Right-action composite: `x ↦ ψ(φ(x))`.
pub fn compose(phi: &GroupMap, psi: &GroupMap) -> Result<GroupMap> {
    if phi.parent != psi.parent || phi.table.len() != psi.table.len() {
        return Err(Error::ParentMismatch);
    }
    let table = phi.table.iter().map(|&y| psi.apply(y)).collect();
    Ok(GroupMap::classify(phi.parent, phi.identity, table))
}

/// `φ^θ = θ⁻¹ φ θ`, i.e. `x ↦ θ(φ(θ⁻¹(x)))`.
pub fn conjugate_map(phi: &GroupMap, theta: &GroupMap) -> Result<GroupMap> {
    if phi.parent != theta.parent || phi.table.len() != theta.table.len() {
        return Err(Error::ParentMismatch);
    }
    let theta_inv = theta.inverse()?;
    compose(&compose(&theta_inv, phi)?, theta)
}

/// Whether `x⁻¹ φ(x)` lies in the center for every `x`.
pub fn is_central_morphism(g: &FiniteGroup, phi: &GroupMap) -> bool {
    let center = g.center();
    g.elements()
        .all(|x| center.contains(g.mult(g.inv(x), phi.apply(x))))
}

/// `Aut G` as a group under right composition, with the map behind each id.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub group: FiniteGroup,
    pub maps: Vec<GroupMap>,
}

impl AutGroup {
    pub fn index_of(&self, map: &GroupMap) -> Option<Elem> {
        self.maps.iter().position(|m| m.table == map.table)
    }
}

pub fn aut_group(g: &FiniteGroup) -> Result<AutGroup> {
    let maps: Vec<GroupMap> = enumerate_homomorphisms(g)?
        .into_iter()
        .filter(GroupMap::is_automorphism)
        .collect();
    let index = |m: &GroupMap| {
        maps.iter()
            .position(|n| n.table == m.table)
            .ok_or_else(|| Error::Internal("automorphisms not closed under composition".into()))
    };
    let n = maps.len();
    let mut mult = Vec::with_capacity(n * n);
    for a in &maps {
        for b in &maps {
            mult.push(index(&compose(a, b)?)?);
        }
    }
    // greedy generating set
    let mut generators: Vec<Elem> = Vec::new();
    let provisional_identity = index(&GroupMap::identity(g))?;
    let mut reached = Subset::singleton(provisional_identity);
    for candidate in 0..n {
        if reached.len() == n {
            break;
        }
        if !reached.contains(candidate) {
            generators.push(candidate);
            reached = closure_in(&mult, n, provisional_identity, &generators);
        }
    }
    let names = (0..generators.len()).map(|i| format!("a{i}")).collect();
    let labels = maps.iter().map(|m| m.describe(g)).collect();
    let group = FiniteGroup::from_table(n, mult, generators)?
        .with_generator_names(names)
        .with_labels(labels);
    Ok(AutGroup { group, maps })
}

fn closure_in(mult: &[Elem], n: usize, identity: Elem, seed: &[Elem]) -> Subset {
    let mut inside = vec![false; n];
    inside[identity] = true;
    let mut queue = VecDeque::from([identity]);
    let mut members = vec![identity];
    while let Some(x) = queue.pop_front() {
        for &s in seed {
            let y = mult[x * n + s];
            if !inside[y] {
                inside[y] = true;
                members.push(y);
                queue.push_back(y);
            }
        }
    }
    Subset::new(members)
}

/// One orbit of `End G` under conjugation by `Aut G`.
#[derive(Clone, Debug, Serialize)]
pub struct EndoOrbit {
    pub size: usize,
    pub kind: MapKind,
    /// Indices into the list returned by [`enumerate_homomorphisms`].
    pub members: Vec<usize>,
}

/// Orbits of `End G` under `φ ↦ θ⁻¹ φ θ`, ordered by least member index.
pub fn endo_orbit_census(g: &FiniteGroup) -> Result<Vec<EndoOrbit>> {
    let endos = enumerate_homomorphisms(g)?;
    let auts: Vec<&GroupMap> = endos.iter().filter(|m| m.is_automorphism()).collect();
    let mut orbit_of: Vec<Option<usize>> = vec![None; endos.len()];
    let mut orbits = Vec::new();
    for start in 0..endos.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let mut members = Vec::new();
        for theta in &auts {
            let conj = conjugate_map(&endos[start], theta)?;
            let idx = endos
                .iter()
                .position(|m| m.table == conj.table)
                .ok_or_else(|| Error::Internal("conjugate endomorphism missing".into()))?;
            if orbit_of[idx].is_none() {
                orbit_of[idx] = Some(orbits.len());
                members.push(idx);
            }
        }
        members.sort_unstable();
        orbits.push(EndoOrbit {
            size: members.len(),
            kind: endos[start].kind(),
            members,
        });
    }
    Ok(orbits)
}

/// Parses `x->y, y->x` into a map: the right-hand sides are element labels
/// or products of generator names with optional `^k` exponents.
pub fn parse_map_spec(g: &FiniteGroup, spec: &str) -> Result<GroupMap> {
    let names = g.generator_names();
    let mut images: Vec<Option<Elem>> = vec![None; names.len()];
    for part in split_top_level(spec) {
        let (lhs, rhs) = part
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("expected `gen->image` in `{part}`")))?;
        let i = names
            .iter()
            .position(|n| n == lhs.trim())
            .ok_or_else(|| Error::Parse(format!("unknown generator `{}`", lhs.trim())))?;
        images[i] = Some(parse_element(g, rhs.trim())?);
    }
    let images: Vec<Elem> = images
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("no image for `{}`", names[i]))))
        .collect::<Result<_>>()?;
    GroupMap::from_generator_images(g, &images)
}

/// Splits on commas outside square brackets, so labels like `y[x,y]` survive.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

/// An element given by label, or by a product of generator names such as
/// `x y^-1` or `x*y^2`.
pub fn parse_element(g: &FiniteGroup, text: &str) -> Result<Elem> {
    let text = text.trim();
    if let Some(e) = g.element_by_label(text) {
        return Ok(e);
    }
    if text == "e" || text == "1" {
        return Ok(g.identity());
    }
    let names = g.generator_names();
    let mut word = Word::empty();
    for token in text.split([' ', '*']).filter(|t| !t.is_empty()) {
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?,
            ),
            None => (token, 1),
        };
        let i = names
            .iter()
            .position(|n| n == base)
            .ok_or_else(|| Error::Parse(format!("unknown element `{text}`")))?;
        let letter = if exp < 0 {
            Word::generator(i).inverse()
        } else {
            Word::generator(i)
        };
        word = word.concat(&letter.pow(exp.unsigned_abs()));
    }
    g.evaluate_word(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, klein4, two_involutions};

    #[test]
    fn identity_images_give_identity() {
        let g = two_involutions().unwrap();
        let m = GroupMap::from_generator_images(&g, g.generators()).unwrap();
        assert!(m.is_identity());
        assert!(m.is_automorphism());
        assert!(m.kernel_trivial());
    }

    #[test]
    fn swap_is_automorphism_and_projection_is_not() {
        let g = two_involutions().unwrap();
        let l = |s: &str| g.element_by_label(s).unwrap();
        let swap = GroupMap::from_generator_images(&g, &[l("y"), l("x")]).unwrap();
        assert!(swap.is_automorphism());
        let proj = GroupMap::from_generator_images(&g, &[l("x"), l("e")]).unwrap();
        assert_eq!(proj.kind(), MapKind::Endomorphism);
        assert!(!proj.kernel_trivial());
        assert_eq!(proj.kernel(&g).len(), 4);
    }

    #[test]
    fn relator_violation_is_named() {
        let g = two_involutions().unwrap();
        let xy = g.element_by_label("xy").unwrap();
        let err = GroupMap::from_generator_images(&g, &[xy, g.identity()]).unwrap_err();
        assert_eq!(
            err,
            Error::RelatorViolated {
                index: 0,
                word: "x x".into()
            }
        );
        let err = GroupMap::from_generator_images(&g, &[xy]).unwrap_err();
        assert!(matches!(err, Error::ArityMismatch { .. }));
    }

    #[test]
    fn missing_relators_rejected() {
        let g = FiniteGroup::from_table(2, vec![0, 1, 1, 0], vec![1]).unwrap();
        assert_eq!(
            enumerate_homomorphisms(&g).unwrap_err(),
            Error::MissingRelators
        );
    }

    #[test]
    fn klein_endomorphisms_match_brute_force() {
        // Oracle: every assignment of the two generators is a homomorphism of
        // an elementary abelian 2-group; it is bijective iff the two images are
        // distinct and nontrivial.
        let k = klein4().unwrap();
        let mut autos = 0;
        for a in 0..4 {
            for b in 0..4 {
                if a != 0 && b != 0 && a != b {
                    autos += 1;
                }
            }
        }
        let endos = enumerate_homomorphisms(&k).unwrap();
        assert_eq!(endos.len(), 16);
        assert_eq!(endos.iter().filter(|m| m.is_automorphism()).count(), autos);
        assert_eq!(autos, 6);
    }

    #[test]
    fn inner_automorphism_in_s3() {
        let s3 = catalog("S3").unwrap();
        let l = |s: &str| s3.element_by_label(s).unwrap();
        let m = inner_automorphism(&s3, l("(123)")).unwrap();
        assert_eq!(m.apply(l("(12)")), l("(23)"));
        assert!(inner_automorphism(&s3, s3.identity())
            .unwrap()
            .is_identity());
        assert!(!is_central_morphism(&s3, &GroupMap::inner(&s3, l("(12)"))));
        assert!(is_central_morphism(&s3, &GroupMap::identity(&s3)));
    }

    #[test]
    fn compose_and_conjugate_basics() {
        let g = two_involutions().unwrap();
        let id = GroupMap::identity(&g);
        let xy = g.element_by_label("xy").unwrap();
        let phi = GroupMap::inner(&g, xy);
        assert_eq!(compose(&phi, &id).unwrap(), phi);
        assert_eq!(conjugate_map(&id, &phi).unwrap(), id);
        assert!(is_central_morphism(&g, &phi));
        let trivial = GroupMap::trivial(&g);
        assert_eq!(
            conjugate_map(&phi, &trivial).unwrap_err(),
            Error::NotAutomorphism
        );
        let s3 = catalog("S3").unwrap();
        assert_eq!(
            compose(&phi, &GroupMap::identity(&s3)).unwrap_err(),
            Error::ParentMismatch
        );
    }

    #[test]
    fn right_action_order() {
        let s3 = catalog("S3").unwrap();
        let l = |s: &str| s3.element_by_label(s).unwrap();
        let a = GroupMap::inner(&s3, l("(12)"));
        let b = GroupMap::inner(&s3, l("(123)"));
        let ab = compose(&a, &b).unwrap();
        // x^{ab} = (x^a)^b = b⁻¹a⁻¹ x a b, the inner map of ab.
        assert_eq!(ab, GroupMap::inner(&s3, s3.mult(l("(12)"), l("(123)"))));
    }

    #[test]
    fn parse_map_spec_forms() {
        let g = two_involutions().unwrap();
        let m = parse_map_spec(&g, "x->y, y->x").unwrap();
        assert_eq!(m.describe(&g), "x->y, y->x");
        let m = parse_map_spec(&g, "x -> x y x y, y->y").unwrap();
        assert_eq!(m.describe(&g), "x->[x,y], y->y");
        assert!(parse_map_spec(&g, "x->y").is_err());
        assert!(parse_map_spec(&g, "z->y, y->x").is_err());
        assert!(matches!(
            parse_map_spec(&g, "x->xy, y->y"),
            Err(Error::RelatorViolated { .. })
        ));
    }
}
