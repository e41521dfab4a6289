//! Permutations in image form, cycle notation, and the symmetric and
//! alternating groups.
//!
//! Composition is left-to-right: `p.compose(&q)` applies `p` first, then
//! `q`, so `(12)·(13) = (123)`. This matches writing maps on the right,
//! `x^{pq} = (x^p)^q`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Points are 0-based internally and 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || hit[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            hit[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {n}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        p + 1
                    )));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)`, `(123)` or `(12)(34)`.
    /// The compact form without separators takes single-digit points; `e`,
    /// `()` and the empty string denote the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Permutation::from_cycles(n, &parse_cycles(text)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Applies `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Permutation {
    /// Compact cycle notation (`(123)(45)`) for degree ≤ 9, space-separated
    /// points otherwise; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        let sep = if self.degree() <= 9 { "" } else { " " };
        for c in cycles {
            let points: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", points.join(sep))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses with the degree set to the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let n = cycles.iter().flatten().map(|p| p + 1).max().unwrap_or(0);
        Permutation::from_cycles(n, &cycles)
    }
}

/// Cycle notation to 0-based cycles.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    if text.is_empty() || text == "e" || text == "id" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
        let body = open[..close].trim();
        let points: Vec<usize> = if body.contains([' ', ',']) {
            body.split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point `{s}` in `{text}`")))
                })
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad point `{c}` in `{text}`")))
                })
                .collect::<Result<_>>()?
        };
        if points.contains(&0) {
            return Err(Error::Parse(format!("points are 1-based in `{text}`")));
        }
        if !points.is_empty() {
            cycles.push(points.into_iter().map(|p| p - 1).collect());
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Builds the group generated by `gens` with cycle-notation labels.
pub fn permutation_group(gens: &[Permutation]) -> Result<(FiniteGroup, Vec<Permutation>)> {
    let n = gens.first().map_or(1, Permutation::degree);
    if let Some(bad) = gens.iter().find(|p| p.degree() != n) {
        return Err(Error::DegreeMismatch(n, bad.degree()));
    }
    let (group, elements) =
        FiniteGroup::from_closure(gens, Permutation::identity(n), |a, b| a.then(b))?;
    let labels = elements.iter().map(ToString::to_string).collect();
    Ok((group.with_labels(labels), elements))
}

fn check_degree(n: usize) -> Result<()> {
    if (2..=6).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange(n))
    }
}

fn adjacent_transposition(n: usize, i: usize) -> Permutation {
    Permutation::from_cycles(n, &[vec![i, i + 1]]).expect("valid transposition")
}

/// `Sₙ` generated by the adjacent transpositions `sᵢ = (i i+1)`, with the
/// Coxeter relators `sᵢ²`, `(sᵢ sᵢ₊₁)³` and `(sᵢ sⱼ)²` for `|i − j| ≥ 2`.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    let gens: Vec<Permutation> = (0..n - 1).map(|i| adjacent_transposition(n, i)).collect();
    let (group, _) = permutation_group(&gens)?;
    let s = |i: usize| crate::group::Word::generator(i);
    let mut relators = Vec::new();
    for i in 0..n - 1 {
        relators.push(s(i).pow(2));
        for j in i + 1..n - 1 {
            let k = if j == i + 1 { 3 } else { 2 };
            relators.push(s(i).concat(&s(j)).pow(k));
        }
    }
    let names = (1..n).map(|i| format!("s{i}")).collect();
    group.with_generator_names(names).with_relators(relators)
}

/// `Aₙ` generated by the 3-cycles `tᵢ = (1 2 i+2)`, with relators `tᵢ³`
/// and `(tᵢ tⱼ)²` for `i ≠ j`.
pub fn alternating_group(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    if n == 2 {
        let (group, _) = permutation_group(&[Permutation::identity(2)])?;
        let group = group.with_generator_names(vec!["t".into()]);
        return group.with_relators(vec![crate::group::Word::generator(0)]);
    }
    let gens: Vec<Permutation> = (2..n)
        .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]).expect("valid 3-cycle"))
        .collect();
    let (group, _) = permutation_group(&gens)?;
    let t = |i: usize| crate::group::Word::generator(i);
    let mut relators = Vec::new();
    for i in 0..gens.len() {
        relators.push(t(i).pow(3));
        for j in 0..gens.len() {
            if i != j {
                relators.push(t(i).concat(&t(j)).pow(2));
            }
        }
    }
    let names = (1..=gens.len()).map(|i| format!("t{i}")).collect();
    group.with_generator_names(names).with_relators(relators)
}
