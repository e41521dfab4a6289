//! Twisted conjugacy classes `[x]_φ = { z⁻¹ x φ(z) : z ∈ G }`, Reidemeister
//! numbers and the subgroup test for the class of the identity.
//!
//! Classes are computed by sweeping `z` over the whole group. For an inner
//! automorphism `ĥ: x ↦ h⁻¹xh` the unit class is the commutator set
//! `[G, h] = { [z, h] : z ∈ G }`.

mod checks;
mod series;
mod words;

pub use checks::*;
pub use series::*;
pub use words::*;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, SubgroupTest, Subset};
use crate::morphisms::GroupMap;

/// One `φ`-conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedClass {
    pub representative: Elem,
    pub members: Subset,
}

/// The partition of `G` into `φ`-conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedPartition {
    /// Ordered by representative, which is the least member of each class.
    pub classes: Vec<TwistedClass>,
    pub reidemeister: usize,
}

pub(crate) fn check_map(g: &FiniteGroup, phi: &GroupMap) -> Result<()> {
    if phi.acts_on(g) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

fn sweep(g: &FiniteGroup, phi: &GroupMap, x: Elem) -> Subset {
    g.elements()
        .map(|z| g.mult(g.mult(g.inv(z), x), phi.apply(z)))
        .collect()
}

pub fn twisted_class(g: &FiniteGroup, phi: &GroupMap, x: Elem) -> Result<TwistedClass> {
    check_map(g, phi)?;
    g.check_element(x)?;
    Ok(TwistedClass {
        representative: x,
        members: sweep(g, phi, x),
    })
}

pub fn twisted_partition(g: &FiniteGroup, phi: &GroupMap) -> Result<TwistedPartition> {
    check_map(g, phi)?;
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let members = sweep(g, phi, x);
        for m in members.iter() {
            seen[m] = true;
        }
        classes.push(TwistedClass {
            representative: x,
            members,
        });
    }
    Ok(TwistedPartition {
        reidemeister: classes.len(),
        classes,
    })
}

/// Number of `φ`-conjugacy classes.
pub fn reidemeister_number(g: &FiniteGroup, phi: &GroupMap) -> Result<usize> {
    Ok(twisted_partition(g, phi)?.reidemeister)
}

/// `[e]_φ = { z⁻¹ φ(z) }`.
pub fn unit_class(g: &FiniteGroup, phi: &GroupMap) -> Result<Subset> {
    Ok(twisted_class(g, phi, g.identity())?.members)
}

/// `[e]_h = [G, h]` for the inner automorphism of `h`.
pub fn inner_unit_class(g: &FiniteGroup, h: Elem) -> Subset {
    g.elements().map(|z| g.commutator(z, h)).collect()
}

/// Subgroup verdict for `[e]_φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitClassReport {
    pub class: Subset,
    pub test: SubgroupTest,
    /// Set when the class is a subgroup.
    pub is_normal: Option<bool>,
    /// `|G : [e]_φ|` when the class is a subgroup.
    pub index: Option<usize>,
}

impl UnitClassReport {
    pub fn is_subgroup(&self) -> bool {
        self.test.is_subgroup()
    }
}

/// Computes `[e]_φ` and tests it; a subgroup must be normal, and a failure
/// of normality is reported as an internal error.
pub fn unit_class_subgroup_report(g: &FiniteGroup, phi: &GroupMap) -> Result<UnitClassReport> {
    report_for(g, unit_class(g, phi)?)
}

pub(crate) fn report_for(g: &FiniteGroup, class: Subset) -> Result<UnitClassReport> {
    let test = g.subgroup_test(&class);
    if !test.is_subgroup() {
        return Ok(UnitClassReport {
            class,
            test,
            is_normal: None,
            index: None,
        });
    }
    if !g.is_normal(&class)? {
        return Err(Error::Internal(
            "unit class is a subgroup but not normal".into(),
        ));
    }
    Ok(UnitClassReport {
        index: Some(g.order() / class.len()),
        is_normal: Some(true),
        class,
        test,
    })
}

/// Whether `[e]_h` is a subgroup for every `h`, checked on class representatives.
pub fn all_inner_unit_classes_subgroups(g: &FiniteGroup) -> bool {
    g.class_representatives()
        .into_iter()
        .all(|h| g.is_subgroup(&inner_unit_class(g, h)))
}
