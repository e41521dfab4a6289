//! Finite groups stored as full Cayley tables.
//!
//! Elements are dense ids `0..order`. Every structural routine here works by
//! direct sweeps over the table; the groups this crate targets are small
//! (the table ceiling is [`MAX_ORDER`]).

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};

/// Element id inside a [`FiniteGroup`].
pub type Elem = usize;

/// Largest group order that will be materialized as a table.
pub const MAX_ORDER: usize = 5000;

/// Up to this order associativity is checked on every triple.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const RANDOM_ASSOCIATIVITY_TRIPLES: usize = 100_000;

/// One letter of a [`Word`]: a generator index raised to `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

/// A word in the generators of a group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(index: usize) -> Self {
        Word {
            letters: vec![Letter {
                generator: index,
                exponent: 1,
            }],
        }
    }

    /// Builds a word from `(generator, ±1)` pairs.
    ///
    /// Panics if an exponent is not `1` or `-1`.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        Word {
            letters: letters
                .into_iter()
                .map(|(generator, exponent)| {
                    assert!(exponent == 1 || exponent == -1, "word exponents are ±1");
                    Letter {
                        generator,
                        exponent,
                    }
                })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * n as usize);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Renders the word with the given generator names, e.g. `x y^-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = names
                    .get(l.generator)
                    .cloned()
                    .unwrap_or_else(|| format!("g{}", l.generator));
                if l.exponent == 1 {
                    name
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A set of element ids kept sorted and deduplicated, so set equality is
/// plain `Vec` equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subset(Vec<Elem>);

impl Subset {
    pub fn new(mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subset(members)
    }

    pub fn singleton(g: Elem) -> Self {
        Subset(vec![g])
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn min(&self) -> Option<Elem> {
        self.0.first().copied()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.iter().all(|g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.iter().filter(|&g| other.contains(g)).collect())
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut members = self.0.clone();
        members.extend_from_slice(&other.0);
        Subset::new(members)
    }
}

impl FromIterator<Elem> for Subset {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        Subset::new(iter.into_iter().collect())
    }
}

/// Outcome of [`FiniteGroup::subgroup_test`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupTest {
    Subgroup,
    Empty,
    /// The lexicographically least pair `(a, b)` of members with `ab` outside.
    NotClosed {
        a: Elem,
        b: Elem,
        product: Elem,
    },
    MissingInverse {
        a: Elem,
        inverse: Elem,
    },
}

impl SubgroupTest {
    pub fn is_subgroup(&self) -> bool {
        matches!(self, SubgroupTest::Subgroup)
    }
}

/// A factor group together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset id of `g`.
    pub projection: Vec<Elem>,
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<Elem>,
    inv: Vec<Elem>,
    identity: Elem,
    generators: Vec<Elem>,
    generator_names: Vec<String>,
    relators: Option<Vec<Word>>,
    labels: Option<Vec<String>>,
    fingerprint: u64,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.order == other.order
            && self.identity == other.identity
            && self.mult == other.mult
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a row-major table (`mult[a * order + b] = ab`),
    /// checking every group axiom and that `generators` generate.
    pub fn from_table(order: usize, mult: Vec<Elem>, generators: Vec<Elem>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge);
        }
        if mult.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, got {}",
                order * order,
                mult.len()
            )));
        }
        if let Some(&bad) = mult.iter().find(|&&v| v >= order) {
            return Err(Error::BadElement { id: bad, order });
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mult[e * order + g] == g && mult[g * order + e] == g))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        let mut inv = Vec::with_capacity(order);
        for g in 0..order {
            let h = (0..order)
                .find(|&h| mult[g * order + h] == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {g} has no inverse")))?;
            if mult[h * order + g] != identity {
                return Err(Error::InvalidTable(format!(
                    "element {g} has no two-sided inverse"
                )));
            }
            inv.push(h);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g >= order) {
            return Err(Error::BadElement { id: bad, order });
        }
        let mut hasher = DefaultHasher::new();
        mult.hash(&mut hasher);
        let generator_names = (0..generators.len()).map(|i| format!("g{i}")).collect();
        let group = FiniteGroup {
            order,
            mult,
            inv,
            identity,
            generators,
            generator_names,
            relators: None,
            labels: None,
            fingerprint: hasher.finish(),
        };
        group.check_associativity()?;
        if group.closure(&group.generators).len() != order {
            return Err(Error::InvalidTable(
                "generators do not generate the whole group".into(),
            ));
        }
        Ok(group)
    }

    /// Closes `gens` under `op` starting from `identity`, sorts the resulting
    /// elements and returns the table together with the sorted carrier.
    pub fn from_closure<T, F>(gens: &[T], identity: T, op: F) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Ord + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut seen: HashMap<T, ()> = HashMap::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity, ());
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for s in gens {
                let next = op(&elements[i], s);
                if !seen.contains_key(&next) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::TooLarge);
                    }
                    seen.insert(next.clone(), ());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        elements.sort();
        let index: HashMap<&T, Elem> = elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mult.push(index[&op(a, b)]);
            }
        }
        let generators = gens.iter().map(|s| index[s]).collect();
        let group = FiniteGroup::from_table(n, mult, generators)?;
        Ok((group, elements))
    }

    pub fn with_generator_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.generators.len(), "one name per generator");
        self.generator_names = names;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    /// Attaches relators after checking that each evaluates to the identity.
    pub fn with_relators(mut self, relators: Vec<Word>) -> Result<Self> {
        for (index, w) in relators.iter().enumerate() {
            if self.evaluate_word(w)? != self.identity {
                return Err(Error::RelatorViolated {
                    index,
                    word: w.display_with(&self.generator_names),
                });
            }
        }
        self.relators = Some(relators);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> Option<&[Word]> {
        self.relators.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn label(&self, g: Elem) -> String {
        match &self.labels {
            Some(labels) => labels[g].clone(),
            None => format!("#{g}"),
        }
    }

    /// Labels of a subset, in id order.
    pub fn labels_of(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|g| self.label(g)).collect()
    }

    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn check_element(&self, g: Elem) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::BadElement {
                id: g,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn mult(&self, a: Elem, b: Elem) -> Elem {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mult(acc, base))
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.mult(x, g);
            n += 1;
        }
        n
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let l = self.mult(self.inv(x), self.inv(y));
        self.mult(l, self.mult(x, y))
    }

    /// `a^y = y⁻¹ a y`.
    #[inline]
    pub fn conjugate(&self, a: Elem, y: Elem) -> Elem {
        self.mult(self.mult(self.inv(y), a), y)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order).all(|b| self.mult(a, b) == self.mult(b, a)))
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Elem> {
        self.evaluate_word_with(w, &self.generators)
    }

    /// Evaluates `w` with generator `i` replaced by `images[i]`.
    pub fn evaluate_word_with(&self, w: &Word, images: &[Elem]) -> Result<Elem> {
        let mut acc = self.identity;
        for l in w.letters() {
            let &g = images.get(l.generator).ok_or(Error::ArityMismatch {
                expected: l.generator + 1,
                got: images.len(),
            })?;
            self.check_element(g)?;
            let g = if l.exponent < 0 { self.inv(g) } else { g };
            acc = self.mult(acc, g);
        }
        Ok(acc)
    }

    /// A shortest word in the generators for every element.
    pub fn shortest_words(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.order];
        words[self.identity] = Some(Word::empty());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            let w = words[g].clone().expect("queued elements have words");
            for (i, &s) in self.generators.iter().enumerate() {
                for (exp, step) in [(1i8, s), (-1, self.inv(s))] {
                    let next = self.mult(g, step);
                    if words[next].is_none() {
                        words[next] = Some(w.concat(&Word::from_letters([(i, exp)])));
                        queue.push_back(next);
                    }
                }
            }
        }
        words
            .into_iter()
            .map(|w| w.expect("generators generate"))
            .collect()
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: Elem, b: Elem, c: Elem| {
            self.mult(self.mult(a, b), c) != self.mult(a, self.mult(b, c))
        };
        let fail = |a, b, c| {
            Err(Error::InvalidTable(format!(
                "associativity fails on ({a}, {b}, {c})"
            )))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x7157_c1a5);
            for _ in 0..RANDOM_ASSOCIATIVITY_TRIPLES {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if bad(a, b, c) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    /// Re-runs the construction-time axiom checks plus the attached relators.
    pub fn check_axioms(&self) -> Result<()> {
        for g in self.elements() {
            if self.mult(self.identity, g) != g || self.mult(g, self.identity) != g {
                return Err(Error::InvalidTable(format!("identity fails on {g}")));
            }
            if self.mult(g, self.inv(g)) != self.identity {
                return Err(Error::InvalidTable(format!("inverse fails on {g}")));
            }
        }
        self.check_associativity()?;
        if self.closure(&self.generators).len() != self.order {
            return Err(Error::InvalidTable("generators do not generate".into()));
        }
        for (index, w) in self.relators().unwrap_or_default().iter().enumerate() {
            if self.evaluate_word(w)? != self.identity {
                return Err(Error::RelatorViolated {
                    index,
                    word: w.display_with(&self.generator_names),
                });
            }
        }
        Ok(())
    }

    /// Smallest subgroup containing `seed`; `{e}` for an empty seed.
    pub fn closure(&self, seed: &[Elem]) -> Subset {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for &s in seed {
                let next = self.mult(g, s);
                if !inside[next] {
                    inside[next] = true;
                    members.push(next);
                    queue.push_back(next);
                }
            }
        }
        Subset::new(members)
    }

    /// Subgroup test with a deterministic failure witness.
    pub fn subgroup_test(&self, s: &Subset) -> SubgroupTest {
        if s.is_empty() {
            return SubgroupTest::Empty;
        }
        for a in s.iter() {
            for b in s.iter() {
                let product = self.mult(a, b);
                if !s.contains(product) {
                    return SubgroupTest::NotClosed { a, b, product };
                }
            }
        }
        for a in s.iter() {
            if !s.contains(self.inv(a)) {
                return SubgroupTest::MissingInverse {
                    a,
                    inverse: self.inv(a),
                };
            }
        }
        SubgroupTest::Subgroup
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        self.subgroup_test(s).is_subgroup()
    }

    /// Whether the subgroup `s` is normal; rejects non-subgroups.
    pub fn is_normal(&self, s: &Subset) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::NotSubgroup);
        }
        Ok(self.is_conjugation_invariant(s))
    }

    fn is_conjugation_invariant(&self, s: &Subset) -> bool {
        s.iter()
            .all(|x| self.elements().all(|g| s.contains(self.conjugate(x, g))))
    }

    pub fn centralizer(&self, g: Elem) -> Subset {
        self.elements()
            .filter(|&z| self.mult(z, g) == self.mult(g, z))
            .collect()
    }

    pub fn center(&self) -> Subset {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mult(z, g) == self.mult(g, z)))
            .collect()
    }

    pub fn derived_subgroup(&self) -> Subset {
        let mut commutators: Vec<Elem> = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                commutators.push(self.commutator(x, y));
            }
        }
        commutators.sort_unstable();
        commutators.dedup();
        self.closure(&commutators)
    }

    pub fn conjugacy_class(&self, g: Elem) -> Subset {
        self.elements().map(|z| self.conjugate(g, z)).collect()
    }

    /// Conjugacy classes ordered by their least member.
    pub fn conjugacy_classes(&self) -> Vec<Subset> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let class = self.conjugacy_class(g);
            for x in class.iter() {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Least member of every conjugacy class.
    pub fn class_representatives(&self) -> Vec<Elem> {
        self.conjugacy_classes()
            .iter()
            .map(|c| c.min().expect("classes are nonempty"))
            .collect()
    }

    pub fn normal_closure(&self, seed: &[Elem]) -> Subset {
        let mut conjugates: Vec<Elem> = seed
            .iter()
            .flat_map(|&s| self.elements().map(move |z| (s, z)))
            .map(|(s, z)| self.conjugate(s, z))
            .collect();
        conjugates.sort_unstable();
        conjugates.dedup();
        self.closure(&conjugates)
    }

    /// Left coset key of `g` modulo `n`: the least member of `gN`.
    fn coset_key(&self, g: Elem, n: &Subset) -> Elem {
        n.iter()
            .map(|x| self.mult(g, x))
            .min()
            .expect("subgroups are nonempty")
    }

    /// The factor group `G/N` with its projection. Cosets are numbered by
    /// their least member; the quotient carries the parent's relators plus a
    /// word for every generator of `N`, which presents it.
    pub fn quotient(&self, n: &Subset) -> Result<Quotient> {
        if !self.is_normal(n)? {
            return Err(Error::NotNormal);
        }
        let keys: Vec<Elem> = self.elements().map(|g| self.coset_key(g, n)).collect();
        let mut reps = keys.clone();
        reps.sort_unstable();
        reps.dedup();
        let projection: Vec<Elem> = keys
            .iter()
            .map(|k| reps.binary_search(k).expect("key is a representative"))
            .collect();
        let m = reps.len();
        let mut mult = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mult.push(projection[self.mult(a, b)]);
            }
        }
        let generators = self.generators.iter().map(|&g| projection[g]).collect();
        let mut group = FiniteGroup::from_table(m, mult, generators)?
            .with_generator_names(self.generator_names.clone());
        if self.labels.is_some() {
            group = group.with_labels(
                reps.iter()
                    .map(|&r| format!("[{}]", self.label(r)))
                    .collect(),
            );
        }
        if let Some(relators) = &self.relators {
            let words = self.shortest_words();
            let mut all = relators.clone();
            let mut generated = self.closure(&[]);
            for x in n.iter() {
                if !generated.contains(x) {
                    all.push(words[x].clone());
                    generated = self.closure(&{
                        let mut s = generated.as_slice().to_vec();
                        s.push(x);
                        s
                    });
                }
            }
            group = group.with_relators(all)?;
        }
        Ok(Quotient { group, projection })
    }

    /// `ζ₀ = {e} ≤ ζ₁ = Z(G) ≤ ζ₂ ≤ …`, stopping once the series stabilizes.
    pub fn upper_central_series(&self) -> Vec<Subset> {
        let mut series = vec![Subset::singleton(self.identity)];
        loop {
            let current = series.last().expect("series is nonempty");
            let next: Subset = self
                .elements()
                .filter(|&g| {
                    self.elements()
                        .all(|x| current.contains(self.commutator(g, x)))
                })
                .collect();
            if next == *current {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class, or `None` when the upper central series stalls
    /// below `G`. The trivial group has class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.upper_central_series();
        (series.last().map(Subset::len) == Some(self.order)).then(|| series.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// All normal subgroups, obtained by closing unions of conjugacy classes.
    /// Sorted by order, then by members.
    pub fn normal_subgroups(&self) -> Vec<Subset> {
        let classes = self.conjugacy_classes();
        let trivial = Subset::singleton(self.identity);
        let mut found = vec![trivial.clone()];
        let mut queue = VecDeque::from([trivial]);
        while let Some(n) = queue.pop_front() {
            for c in &classes {
                if c.is_subset_of(&n) {
                    continue;
                }
                let joined = self.closure(n.union(c).as_slice());
                if !found.contains(&joined) {
                    found.push(joined.clone());
                    queue.push_back(joined);
                }
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    /// Proper normal subgroups that are maximal under inclusion.
    pub fn maximal_normal_subgroups(&self) -> Vec<Subset> {
        let proper: Vec<Subset> = self
            .normal_subgroups()
            .into_iter()
            .filter(|n| n.len() < self.order)
            .collect();
        proper
            .iter()
            .filter(|n| {
                !proper
                    .iter()
                    .any(|m| m.len() > n.len() && n.is_subset_of(m))
            })
            .cloned()
            .collect()
    }

    /// Nontrivial and without normal subgroups other than `{e}` and `G`.
    pub fn is_simple(&self) -> bool {
        self.order > 1 && self.normal_subgroups().len() == 2
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {}", self.order)
    }
}
