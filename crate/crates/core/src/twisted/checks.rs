//! Executable forms of the structural facts about unit classes.
//!
//! Checks with a hypothesis that may fail on a given group return a
//! [`Verdict`] so that an unmet hypothesis is reported as such rather than
//! as a vacuous pass.

use serde::Serialize;

use super::{all_inner_unit_classes_subgroups, inner_unit_class, twisted_class, unit_class};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset};
use crate::morphisms::{aut_group, compose, conjugate_map, GroupMap};
use crate::perm::{symmetric_group, Parity, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails(String),
    Inapplicable(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

fn need_subgroup(g: &FiniteGroup, class: &Subset, what: &str) -> Result<()> {
    if g.is_subgroup(class) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not a subgroup")))
    }
}

/// `[x]_h = (x h⁻¹)^G · h`.
pub fn inner_class_via_conjugacy(g: &FiniteGroup, x: Elem, h: Elem) -> Result<bool> {
    g.check_element(h)?;
    let class = twisted_class(g, &GroupMap::inner(g, h), x)?.members;
    let shifted: Subset = g
        .conjugacy_class(g.mult(x, g.inv(h)))
        .iter()
        .map(|c| g.mult(c, h))
        .collect();
    Ok(class == shifted)
}

/// `|[x]_h| = |G : C_G(x h⁻¹)|`.
pub fn class_size_matches_centralizer_index(g: &FiniteGroup, x: Elem, h: Elem) -> Result<bool> {
    g.check_element(h)?;
    let class = twisted_class(g, &GroupMap::inner(g, h), x)?.members;
    let centralizer = g.centralizer(g.mult(x, g.inv(h)));
    Ok(class.len() * centralizer.len() == g.order())
}

/// `h ∉ [e]_h` for `h ≠ e`.
pub fn unit_class_excludes_twist(g: &FiniteGroup, h: Elem) -> Result<bool> {
    g.check_element(h)?;
    if h == g.identity() {
        return Err(Error::Precondition("h must be nontrivial".into()));
    }
    Ok(!inner_unit_class(g, h).contains(h))
}

/// `h ∉ ⟨[g, h] : g ∈ G⟩`.
pub fn robinson_criterion(g: &FiniteGroup, h: Elem) -> Result<bool> {
    g.check_element(h)?;
    let generated = g.closure(inner_unit_class(g, h).as_slice());
    Ok(!generated.contains(h))
}

/// For a subgroup `[e]_h` with `h ≠ e`, the coset of `h` is a nontrivial
/// central element of `G / [e]_h`.
pub fn quotient_center_nontrivial(g: &FiniteGroup, h: Elem) -> Result<bool> {
    g.check_element(h)?;
    if h == g.identity() {
        return Err(Error::Precondition("h must be nontrivial".into()));
    }
    let class = inner_unit_class(g, h);
    need_subgroup(g, &class, "[e]_h")?;
    let q = g.quotient(&class)?;
    let image = q.projection[h];
    Ok(image != q.group.identity() && q.group.center().contains(image))
}

/// `[e]_{φψ} ⊆ [e]_φ · [e]_ψ` when both factors are subgroups.
pub fn unit_class_product_inclusion(
    g: &FiniteGroup,
    phi: &GroupMap,
    psi: &GroupMap,
) -> Result<bool> {
    let a = unit_class(g, phi)?;
    let b = unit_class(g, psi)?;
    need_subgroup(g, &a, "[e]_φ")?;
    need_subgroup(g, &b, "[e]_ψ")?;
    let product: Subset = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (x, y)))
        .map(|(x, y)| g.mult(x, y))
        .collect();
    Ok(unit_class(g, &compose(phi, psi)?)?.is_subset_of(&product))
}

/// `θ([e]_φ) = [e]_{θ⁻¹φθ}` for an automorphism `θ`.
pub fn unit_class_conjugation(g: &FiniteGroup, phi: &GroupMap, theta: &GroupMap) -> Result<bool> {
    if !theta.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    let image: Subset = unit_class(g, phi)?.iter().map(|x| theta.apply(x)).collect();
    Ok(image == unit_class(g, &conjugate_map(phi, theta)?)?)
}

/// The intersections `⋂_{φ ∈ Aut G} [e]_φ` and `⋂_{g ∉ Z(G)} [e]_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacteristicReport {
    pub over_automorphisms: Subset,
    pub over_noncentral: Subset,
    /// `θ(M) = M` for every automorphism `θ`, where `M` is the first intersection.
    pub invariant: bool,
    /// `over_automorphisms ⊆ over_noncentral ⊆ Z(G)`.
    pub chain_holds: bool,
}

pub fn characteristic_intersection(g: &FiniteGroup) -> Result<CharacteristicReport> {
    let aut = aut_group(g)?;
    let everything: Subset = g.elements().collect();
    let mut over_automorphisms = everything.clone();
    for phi in &aut.maps {
        over_automorphisms = over_automorphisms.intersection(&unit_class(g, phi)?);
    }
    let center = g.center();
    let over_noncentral = g
        .elements()
        .filter(|&h| !center.contains(h))
        .fold(everything, |m, h| m.intersection(&inner_unit_class(g, h)));
    let invariant = aut.maps.iter().all(|theta| {
        over_automorphisms
            .iter()
            .map(|x| theta.apply(x))
            .collect::<Subset>()
            == over_automorphisms
    });
    let chain_holds =
        over_automorphisms.is_subset_of(&over_noncentral) && over_noncentral.is_subset_of(&center);
    Ok(CharacteristicReport {
        over_automorphisms,
        over_noncentral,
        invariant,
        chain_holds,
    })
}

fn all_subgroups_or_inapplicable(g: &FiniteGroup) -> Option<Verdict> {
    if all_inner_unit_classes_subgroups(g) {
        None
    } else {
        let h = g
            .class_representatives()
            .into_iter()
            .find(|&h| !g.is_subgroup(&inner_unit_class(g, h)))
            .expect("some class fails");
        Some(Verdict::Inapplicable(format!(
            "[e]_{} is not a subgroup",
            g.label(h)
        )))
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// If every `[e]_h` is a subgroup, each maximal normal subgroup has prime
/// index and a cyclic quotient.
pub fn maximal_quotients_prime_cyclic(g: &FiniteGroup) -> Result<Verdict> {
    if let Some(v) = all_subgroups_or_inapplicable(g) {
        return Ok(v);
    }
    for n in g.maximal_normal_subgroups() {
        let index = g.order() / n.len();
        let q = g.quotient(&n)?.group;
        let cyclic = q.elements().any(|a| q.element_order(a) == q.order());
        if !is_prime(index) || !cyclic {
            return Ok(Verdict::Fails(format!(
                "quotient by a normal subgroup of order {} has order {index}",
                n.len()
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// If every `[e]_h` is a subgroup and every nontrivial one has an abelian
/// quotient, then `G′ ⊆ Z(G)`.
pub fn derived_in_center(g: &FiniteGroup) -> Result<Verdict> {
    if let Some(v) = all_subgroups_or_inapplicable(g) {
        return Ok(v);
    }
    for h in g.class_representatives() {
        let class = inner_unit_class(g, h);
        if class.len() > 1 && !g.quotient(&class)?.group.is_abelian() {
            return Ok(Verdict::Inapplicable(format!(
                "G / [e]_{} is not abelian",
                g.label(h)
            )));
        }
    }
    if g.derived_subgroup().is_subset_of(&g.center()) {
        Ok(Verdict::Holds)
    } else {
        Ok(Verdict::Fails("derived subgroup is not central".into()))
    }
}

/// If every `[e]_h` is a subgroup of `G`, the same holds in every quotient `G/N`.
pub fn quotients_inherit_inner_subgroups(g: &FiniteGroup) -> Result<Verdict> {
    if let Some(v) = all_subgroups_or_inapplicable(g) {
        return Ok(v);
    }
    for n in g.normal_subgroups() {
        let q = g.quotient(&n)?.group;
        if !all_inner_unit_classes_subgroups(&q) {
            return Ok(Verdict::Fails(format!(
                "quotient by a normal subgroup of order {} has a non-subgroup unit class",
                n.len()
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// Indices `|Aᵢ : [e]_{φᵢ}|` on the factors `Aᵢ = ζᵢ₊₁/ζᵢ` of the upper
/// central series, and their product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralSeriesProduct {
    pub factors: Vec<usize>,
    pub product: usize,
}

/// The product is not claimed to equal `R(φ)`.
pub fn central_series_index_product(
    g: &FiniteGroup,
    phi: &GroupMap,
) -> Result<CentralSeriesProduct> {
    super::check_map(g, phi)?;
    if !phi.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let series = g.upper_central_series();
    let mut factors = Vec::new();
    for pair in series.windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        if !upper.iter().all(|z| upper.contains(phi.apply(z))) {
            return Err(Error::Internal(
                "automorphism moves a central series term".into(),
            ));
        }
        // [e]_{φᵢ} pulled back to ζᵢ₊₁: all z⁻¹φ(z)·c with c ∈ ζᵢ.
        let lifted: Subset = upper
            .iter()
            .map(|z| g.mult(g.inv(z), phi.apply(z)))
            .flat_map(|d| lower.iter().map(move |c| (d, c)))
            .map(|(d, c)| g.mult(d, c))
            .collect();
        if !g.is_subgroup(&lifted) {
            return Err(Error::Internal(
                "induced unit class on a central factor is not a subgroup".into(),
            ));
        }
        factors.push(upper.len() / lifted.len());
    }
    Ok(CentralSeriesProduct {
        product: factors.iter().product(),
        factors,
    })
}

/// Sweep of `[e]_h` over conjugacy class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerScan {
    pub representatives: Vec<Elem>,
    /// Representatives whose unit class is not a subgroup.
    pub failures: Vec<Elem>,
    pub all_subgroups: bool,
    pub nilpotency_class: Option<usize>,
}

/// Since `[e]_{y⁻¹hy} = y⁻¹[e]_h y`, one `h` per conjugacy class suffices.
/// A group where every class passes must be nilpotent; otherwise an
/// internal error is returned.
pub fn scan_all_inner(g: &FiniteGroup) -> Result<InnerScan> {
    let representatives = g.class_representatives();
    let failures: Vec<Elem> = representatives
        .iter()
        .copied()
        .filter(|&h| !g.is_subgroup(&inner_unit_class(g, h)))
        .collect();
    let all_subgroups = failures.is_empty();
    let nilpotency_class = g.nilpotency_class();
    if all_subgroups && nilpotency_class.is_none() {
        return Err(Error::Internal(
            "every inner unit class is a subgroup in a non-nilpotent group".into(),
        ));
    }
    Ok(InnerScan {
        representatives,
        failures,
        all_subgroups,
        nilpotency_class,
    })
}

/// For a simple non-abelian `G`, no `[e]_h` with `h ≠ e` is a subgroup.
pub fn simple_group_scan(g: &FiniteGroup) -> Result<bool> {
    if g.is_abelian() || !g.is_simple() {
        return Err(Error::Precondition(
            "group is not simple and non-abelian".into(),
        ));
    }
    Ok(g.class_representatives()
        .into_iter()
        .filter(|&h| h != g.identity())
        .all(|h| !g.is_subgroup(&inner_unit_class(g, h))))
}

/// In `Sₙ` with `n ≥ 5`, no `[e]_h` with `h` even and nontrivial is a subgroup.
pub fn symmetric_even_scan(n: usize) -> Result<bool> {
    if n < 5 {
        return Err(Error::Precondition("needs n >= 5".into()));
    }
    let g = symmetric_group(n)?;
    let mut checked = 0;
    for h in g.class_representatives() {
        let p = Permutation::parse(n, &g.label(h))?;
        if h == g.identity() || p.parity() != Parity::Even {
            continue;
        }
        checked += 1;
        if g.is_subgroup(&inner_unit_class(&g, h)) {
            return Ok(false);
        }
    }
    Ok(checked > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::morphisms::parse_map_spec;

    #[test]
    fn conjugacy_identities_on_small_groups() {
        for name in ["S3", "A4", "prop14"] {
            let g = catalog(name).unwrap();
            for x in g.elements() {
                for h in g.elements() {
                    assert!(inner_class_via_conjugacy(&g, x, h).unwrap(), "{name}");
                    assert!(
                        class_size_matches_centralizer_index(&g, x, h).unwrap(),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn twist_excluded_and_identity_rejected() {
        let g = catalog("A5").unwrap();
        for h in g.class_representatives().into_iter().skip(1) {
            assert!(unit_class_excludes_twist(&g, h).unwrap());
        }
        assert!(unit_class_excludes_twist(&g, g.identity()).is_err());
    }

    #[test]
    fn robinson_examples() {
        let g = catalog("prop14").unwrap();
        let l = |s: &str| g.element_by_label(s).unwrap();
        assert!(robinson_criterion(&g, l("x")).unwrap());
        assert!(!robinson_criterion(&g, g.identity()).unwrap());
        let s3 = catalog("S3").unwrap();
        assert!(!robinson_criterion(&s3, s3.element_by_label("(123)").unwrap()).unwrap());
    }

    #[test]
    fn quotient_center_on_a4() {
        let g = catalog("A4").unwrap();
        let h = g.element_by_label("(123)").unwrap();
        assert!(quotient_center_nontrivial(&g, h).unwrap());
        let bad = g.element_by_label("(12)(34)").unwrap();
        assert!(matches!(
            quotient_center_nontrivial(&g, bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn product_and_conjugation_over_automorphisms() {
        let g = catalog("prop14").unwrap();
        let aut = aut_group(&g).unwrap();
        assert_eq!(aut.maps.len(), 8);
        for phi in &aut.maps {
            for theta in &aut.maps {
                assert!(unit_class_conjugation(&g, phi, theta).unwrap());
                let a = unit_class(&g, phi).unwrap();
                let b = unit_class(&g, theta).unwrap();
                if g.is_subgroup(&a) && g.is_subgroup(&b) {
                    assert!(unit_class_product_inclusion(&g, phi, theta).unwrap());
                }
            }
        }
        let r = characteristic_intersection(&g).unwrap();
        assert!(r.invariant && r.chain_holds);
    }

    #[test]
    fn conditional_checks() {
        let d4 = catalog("prop14").unwrap();
        assert_eq!(maximal_quotients_prime_cyclic(&d4).unwrap(), Verdict::Holds);
        assert_eq!(derived_in_center(&d4).unwrap(), Verdict::Holds);
        assert_eq!(
            quotients_inherit_inner_subgroups(&d4).unwrap(),
            Verdict::Holds
        );
        assert_eq!(
            maximal_quotients_prime_cyclic(&catalog("C6").unwrap()).unwrap(),
            Verdict::Holds
        );
        assert!(matches!(
            maximal_quotients_prime_cyclic(&catalog("S3").unwrap()).unwrap(),
            Verdict::Inapplicable(_)
        ));
    }

    #[test]
    fn index_product_differs_from_reidemeister_number() {
        let g = catalog("prop14").unwrap();
        let swap = parse_map_spec(&g, "x->y, y->x").unwrap();
        let p = central_series_index_product(&g, &swap).unwrap();
        assert_eq!(p.factors, [2, 2]);
        assert_eq!(p.product, 4);
        assert_eq!(super::super::reidemeister_number(&g, &swap).unwrap(), 3);
        let c4 = catalog("C4").unwrap();
        assert_eq!(
            central_series_index_product(&c4, &GroupMap::identity(&c4))
                .unwrap()
                .product,
            4
        );
        let s3 = catalog("S3").unwrap();
        assert_eq!(
            central_series_index_product(&s3, &GroupMap::identity(&s3)).unwrap_err(),
            Error::NotNilpotent
        );
    }

    #[test]
    fn scans() {
        let d4 = catalog("prop14").unwrap();
        let s = scan_all_inner(&d4).unwrap();
        assert!(s.all_subgroups);
        assert_eq!(s.nilpotency_class, Some(2));
        assert!(simple_group_scan(&catalog("A5").unwrap()).unwrap());
        assert!(simple_group_scan(&catalog("S5").unwrap()).is_err());
        assert!(symmetric_even_scan(5).unwrap());
    }
}
