//! Descending chains of inner unit classes `G ⊳ [e]_{h₀} ⊳ [e]_{h₁} ⊳ …`
//! with `hₖ` picked inside the previous term.

use serde::Serialize;

use super::inner_unit_class;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, SubgroupTest, Subset};

/// Picks the next twisting element from the current chain term.
pub trait Chooser {
    fn choose(&mut self, g: &FiniteGroup, current: &Subset, step: usize) -> Option<Elem>;
}

/// Least non-identity id in the current term.
#[derive(Clone, Copy, Debug, Default)]
pub struct MinElement;

impl Chooser for MinElement {
    fn choose(&mut self, g: &FiniteGroup, current: &Subset, _step: usize) -> Option<Elem> {
        current.iter().find(|&x| x != g.identity())
    }
}

/// A fixed list of choices, one per step.
#[derive(Clone, Debug, Default)]
pub struct Sequence(pub Vec<Elem>);

impl Chooser for Sequence {
    fn choose(&mut self, _g: &FiniteGroup, _current: &Subset, step: usize) -> Option<Elem> {
        self.0.get(step).copied()
    }
}

impl<F> Chooser for F
where
    F: FnMut(&FiniteGroup, &Subset, usize) -> Option<Elem>,
{
    fn choose(&mut self, g: &FiniteGroup, current: &Subset, step: usize) -> Option<Elem> {
        self(g, current, step)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeriesTerminal {
    /// The last class was `{e}`, so the last chosen element is central.
    ReachedTrivial {
        central: Elem,
    },
    ClassNotSubgroup {
        step: usize,
        h: Elem,
        class: Subset,
        witness: SubgroupTest,
    },
    ChooserExhausted {
        step: usize,
    },
    /// Every element of the supplied tuple was consumed.
    Completed,
    StepCeiling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub chain: Vec<Subset>,
    pub chosen: Vec<Elem>,
    pub terminal: SeriesTerminal,
}

/// Builds `G = G₀ ⊳ G₁ = [e]_{h₀} ⊳ G₂ = [e]_{h₁} ⊳ …` with `hₖ ∈ Gₖ \ {e}`.
///
/// Stops when a class fails the subgroup test or when `{e}` is reached.
/// Every produced term is checked to be normal and strictly inside the
/// previous one, and a final `{e}` certifies the last `hₖ` as central; any
/// violation is an [`Error::Internal`].
pub fn descending_unit_class_series(
    g: &FiniteGroup,
    chooser: &mut dyn Chooser,
) -> Result<SeriesReport> {
    let mut chain = vec![Subset::new(g.elements().collect())];
    let mut chosen = Vec::new();
    for step in 0..=g.order() {
        let current = chain.last().expect("chain starts with G");
        if current.len() == 1 {
            let central = *chosen.last().ok_or_else(|| {
                Error::Precondition("trivial group has no nontrivial element".into())
            })?;
            if !g.center().contains(central) {
                return Err(Error::Internal(format!(
                    "{} closes the series but is not central",
                    g.label(central)
                )));
            }
            return Ok(SeriesReport {
                chain,
                chosen,
                terminal: SeriesTerminal::ReachedTrivial { central },
            });
        }
        let Some(h) = chooser.choose(g, current, step) else {
            return Ok(SeriesReport {
                chain,
                chosen,
                terminal: SeriesTerminal::ChooserExhausted { step },
            });
        };
        if h == g.identity() || !current.contains(h) {
            return Err(Error::Precondition(format!(
                "chosen element {} is not a nontrivial member of the current term",
                g.label(h)
            )));
        }
        chosen.push(h);
        let class = inner_unit_class(g, h);
        let witness = g.subgroup_test(&class);
        if !witness.is_subgroup() {
            return Ok(SeriesReport {
                chain,
                chosen,
                terminal: SeriesTerminal::ClassNotSubgroup {
                    step,
                    h,
                    class,
                    witness,
                },
            });
        }
        if !g.is_normal(&class)? {
            return Err(Error::Internal("subgroup unit class is not normal".into()));
        }
        if class.len() >= current.len() || !class.is_subset_of(current) {
            return Err(Error::Internal(
                "series term does not strictly descend".into(),
            ));
        }
        chain.push(class);
    }
    Ok(SeriesReport {
        chain,
        chosen,
        terminal: SeriesTerminal::StepCeiling,
    })
}

/// Chain `[e]_{c₁} ⊇ [e]_{c₂} ⊇ …` for `c₁ = g₁`, `cᵢ₊₁ = [cᵢ, gᵢ₊₁]`.
///
/// Requires every inner unit class of `G` to be a subgroup. Each step is
/// checked to be an inclusion, strict whenever `cᵢ₊₁ ≠ e`. When a term is
/// `{e}` the first such `cᵢ` is reported as central.
pub fn commutator_chain(g: &FiniteGroup, values: &[Elem]) -> Result<SeriesReport> {
    if values.is_empty() {
        return Err(Error::Precondition("empty tuple".into()));
    }
    for &v in values {
        g.check_element(v)?;
    }
    if !super::all_inner_unit_classes_subgroups(g) {
        return Err(Error::Precondition(
            "some inner unit class is not a subgroup".into(),
        ));
    }
    let mut c = values[0];
    let mut chain = vec![inner_unit_class(g, c)];
    let mut chosen = vec![c];
    for &next in &values[1..] {
        let prev = chain.last().expect("nonempty chain");
        c = g.commutator(c, next);
        let class = inner_unit_class(g, c);
        if !class.is_subset_of(prev) {
            return Err(Error::Internal(format!(
                "[e]_{} is not inside the previous term",
                g.label(c)
            )));
        }
        if c != g.identity() && class.len() == prev.len() {
            return Err(Error::Internal(format!(
                "[e]_{} does not shrink the chain",
                g.label(c)
            )));
        }
        chain.push(class);
        chosen.push(c);
    }
    let first_trivial = chain.iter().position(|s| s.len() == 1);
    let terminal = match first_trivial {
        Some(i) => SeriesTerminal::ReachedTrivial { central: chosen[i] },
        None => SeriesTerminal::Completed,
    };
    Ok(SeriesReport {
        chain,
        chosen,
        terminal,
    })
}
