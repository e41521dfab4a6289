//! Outer commutator words: bracket trees whose leaves are distinct variables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::inner_unit_class;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset};

/// `Var(i)` is the variable `x_{i+1}`; `Bracket(a, b)` is `[a, b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OuterWord {
    Var(usize),
    Bracket(Box<OuterWord>, Box<OuterWord>),
}

impl OuterWord {
    pub fn var(i: usize) -> Self {
        OuterWord::Var(i)
    }

    pub fn bracket(a: OuterWord, b: OuterWord) -> Self {
        OuterWord::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed `[[x1, x2], …, xn]`.
    pub fn left_normed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition(
                "a word needs at least one variable".into(),
            ));
        }
        Ok((1..n).fold(OuterWord::Var(0), |w, i| {
            OuterWord::bracket(w, OuterWord::Var(i))
        }))
    }

    /// Variable indices in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            OuterWord::Var(i) => out.push(*i),
            OuterWord::Bracket(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            OuterWord::Var(_) => 1,
            OuterWord::Bracket(a, b) => a.arity() + b.arity(),
        }
    }

    /// Checks that the leaves are exactly `0..n`, each once.
    pub fn validate(&self) -> Result<()> {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves.iter().copied().eq(0..leaves.len()) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{self} does not use each of x1..x{} exactly once",
                leaves.len()
            )))
        }
    }

    /// Every bracketing of `x1, …, xn` with leaves in order.
    pub fn all_of_arity(n: usize) -> Vec<OuterWord> {
        fn build(lo: usize, hi: usize) -> Vec<OuterWord> {
            if hi - lo == 1 {
                return vec![OuterWord::Var(lo)];
            }
            let mut out = Vec::new();
            for mid in lo + 1..hi {
                for a in build(lo, mid) {
                    for b in build(mid, hi) {
                        out.push(OuterWord::bracket(a.clone(), b));
                    }
                }
            }
            out
        }
        if n == 0 {
            Vec::new()
        } else {
            build(0, n)
        }
    }
}

impl fmt::Display for OuterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OuterWord::Var(i) => write!(f, "x{}", i + 1),
            OuterWord::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl FromStr for OuterWord {
    type Err = Error;

    /// Parses `x1`, `[x1,x2]`, `[[x1,x2],x3]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in outer word {s:?}")));
        }
        w.validate()?;
        Ok(w)
    }
}

fn parse_word(chars: &[char], pos: &mut usize) -> Result<OuterWord> {
    let bad = |what: &str| Error::Parse(format!("outer word: {what}"));
    match chars.get(*pos) {
        Some('[') => {
            *pos += 1;
            let a = parse_word(chars, pos)?;
            if chars.get(*pos) != Some(&',') {
                return Err(bad("expected ','"));
            }
            *pos += 1;
            let b = parse_word(chars, pos)?;
            if chars.get(*pos) != Some(&']') {
                return Err(bad("expected ']'"));
            }
            *pos += 1;
            Ok(OuterWord::bracket(a, b))
        }
        Some('x') => {
            *pos += 1;
            let start = *pos;
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().collect();
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(OuterWord::Var(i - 1)),
                _ => Err(bad("variables are x1, x2, …")),
            }
        }
        _ => Err(bad("expected '[' or a variable")),
    }
}

/// Evaluates `w` at `values`, with `[a,b] = a⁻¹b⁻¹ab`.
pub fn eval_outer_word(g: &FiniteGroup, w: &OuterWord, values: &[Elem]) -> Result<Elem> {
    w.validate()?;
    if values.len() != w.arity() {
        return Err(Error::ArityMismatch {
            expected: w.arity(),
            got: values.len(),
        });
    }
    for &v in values {
        g.check_element(v)?;
    }
    Ok(eval(g, w, values))
}

fn eval(g: &FiniteGroup, w: &OuterWord, values: &[Elem]) -> Elem {
    match w {
        OuterWord::Var(i) => values[*i],
        OuterWord::Bracket(a, b) => g.commutator(eval(g, a, values), eval(g, b, values)),
    }
}

/// Checks `w(g) ∈ ⋂ᵢ [e]_{gᵢ}` and `[e]_{w(g)} ⊆ ⋂ᵢ [e]_{gᵢ}`.
///
/// Requires every `[e]_{gᵢ}` to be a subgroup.
pub fn outer_word_in_unit_classes(g: &FiniteGroup, w: &OuterWord, values: &[Elem]) -> Result<bool> {
    let value = eval_outer_word(g, w, values)?;
    let mut meet: Option<Subset> = None;
    for &v in values {
        let class = inner_unit_class(g, v);
        if !g.is_subgroup(&class) {
            return Err(Error::Precondition(format!(
                "[e]_{} is not a subgroup",
                g.label(v)
            )));
        }
        meet = Some(match meet {
            None => class,
            Some(m) => m.intersection(&class),
        });
    }
    let meet = meet.expect("words have at least one variable");
    Ok(meet.contains(value) && inner_unit_class(g, value).is_subset_of(&meet))
}
