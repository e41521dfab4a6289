//! Named concrete groups, each carrying generators, generator names,
//! element labels and a defining set of relators.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Word};
use crate::perm::{alternating_group, permutation_group, symmetric_group, Permutation};

fn gen(i: usize) -> Word {
    Word::generator(i)
}

/// Cyclic group `⟨a | aⁿ⟩` with labels `e, a, a^2, …`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownGroup("cyclic(0)".into()));
    }
    let mult = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    FiniteGroup::from_table(n, mult, vec![1 % n])?
        .with_generator_names(vec!["a".into()])
        .with_labels(labels)
        .with_relators(vec![gen(0).pow(n as u32)])
}

/// Dihedral group of order `2n`, `⟨r, s | rⁿ, s², (sr)²⟩`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownGroup("dihedral(0)".into()));
    }
    // (k, j) stands for r^k s^j; s r = r⁻¹ s.
    let op = |a: &(usize, usize), b: &(usize, usize)| {
        let k = if a.1 == 0 { a.0 + b.0 } else { a.0 + n - b.0 };
        (k % n, (a.1 + b.1) % 2)
    };
    let (group, elements) = FiniteGroup::from_closure(&[(1 % n, 0), (0, 1)], (0, 0), op)?;
    let labels = elements
        .iter()
        .map(|&(k, j)| {
            let r = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (true, _) => "s".to_string(),
                (false, 0) => r,
                (false, _) => format!("{r}s"),
            }
        })
        .collect();
    let r = gen(0);
    let s = gen(1);
    group
        .with_generator_names(vec!["r".into(), "s".into()])
        .with_labels(labels)
        .with_relators(vec![r.pow(n as u32), s.pow(2), s.concat(&r).pow(2)])
}

/// Quaternion group `⟨i, j | i⁴, i² j⁻², j⁻¹ i j i⟩`.
pub fn quaternion8() -> Result<FiniteGroup> {
    // (negative, unit) with units 0 = 1, 1 = i, 2 = j, 3 = k.
    const TABLE: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let op = |a: &(bool, usize), b: &(bool, usize)| {
        let (neg, unit) = TABLE[a.1][b.1];
        (a.0 ^ b.0 ^ neg, unit)
    };
    let (group, elements) = FiniteGroup::from_closure(&[(false, 1), (false, 2)], (false, 0), op)?;
    let labels = elements
        .iter()
        .map(|&(neg, unit)| {
            format!(
                "{}{}",
                if neg { "-" } else { "" },
                ["1", "i", "j", "k"][unit]
            )
        })
        .collect();
    let (i, j) = (gen(0), gen(1));
    group
        .with_generator_names(vec!["i".into(), "j".into()])
        .with_labels(labels)
        .with_relators(vec![
            i.pow(4),
            i.pow(2).concat(&j.inverse().pow(2)),
            j.inverse().concat(&i).concat(&j).concat(&i),
        ])
}

/// Klein four-group `⟨a, b | a², b², [a, b]⟩`.
pub fn klein4() -> Result<FiniteGroup> {
    let mult = (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect();
    let (a, b) = (gen(0), gen(1));
    FiniteGroup::from_table(4, mult, vec![1, 2])?
        .with_generator_names(vec!["a".into(), "b".into()])
        .with_labels(vec!["e".into(), "a".into(), "b".into(), "ab".into()])
        .with_relators(vec![a.pow(2), b.pow(2), Word::commutator(&a, &b)])
}

/// The order-8 group `⟨x, y | x², y², [x,y]², [[x,y],x], [[x,y],y]⟩`,
/// realized on the vertices of a square by `x = (2 4)`, `y = (1 2)(3 4)`.
/// Elements are labelled `e, x, y, xy, [x,y], x[x,y], y[x,y], xy[x,y]`.
pub fn two_involutions() -> Result<FiniteGroup> {
    let x = Permutation::parse(4, "(24)")?;
    let y = Permutation::parse(4, "(12)(34)")?;
    let (group, _) = permutation_group(&[x, y])?;
    let (xw, yw) = (gen(0), gen(1));
    let c = Word::commutator(&xw, &yw);
    let named = [
        ("e", Word::empty()),
        ("x", xw.clone()),
        ("y", yw.clone()),
        ("xy", xw.concat(&yw)),
        ("[x,y]", c.clone()),
        ("x[x,y]", xw.concat(&c)),
        ("y[x,y]", yw.concat(&c)),
        ("xy[x,y]", xw.concat(&yw).concat(&c)),
    ];
    let mut labels = vec![String::new(); group.order()];
    for (name, w) in &named {
        let g = group.evaluate_word(w)?;
        if !labels[g].is_empty() {
            return Err(Error::Internal(format!(
                "{name} coincides with {}",
                labels[g]
            )));
        }
        labels[g] = name.to_string();
    }
    group
        .with_generator_names(vec!["x".into(), "y".into()])
        .with_labels(labels)
        .with_relators(vec![
            xw.pow(2),
            yw.pow(2),
            c.pow(2),
            Word::commutator(&c, &xw),
            Word::commutator(&c, &yw),
        ])
}

/// `G × H` with pair labels `(g,h)`. Relators are those of both factors
/// plus the commutators between their generators.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let id = |a: usize, b: usize| a * n + b;
    let mut mult = Vec::with_capacity(m * n * m * n);
    for a1 in 0..m {
        for b1 in 0..n {
            for a2 in 0..m {
                for b2 in 0..n {
                    mult.push(id(g.mult(a1, a2), h.mult(b1, b2)));
                }
            }
        }
    }
    let mut generators: Vec<usize> = g
        .generators()
        .iter()
        .map(|&a| id(a, h.identity()))
        .collect();
    generators.extend(h.generators().iter().map(|&b| id(g.identity(), b)));
    let shift = g.generators().len();
    let mut names: Vec<String> = g.generator_names().to_vec();
    for name in h.generator_names() {
        names.push(if names.contains(name) {
            format!("{name}'")
        } else {
            name.clone()
        });
    }
    let labels = (0..m)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
        .collect();
    let mut group = FiniteGroup::from_table(m * n, mult, generators)?
        .with_generator_names(names)
        .with_labels(labels);
    if let (Some(rg), Some(rh)) = (g.relators(), h.relators()) {
        let mut relators = rg.to_vec();
        relators.extend(rh.iter().map(|w| {
            Word::from_letters(
                w.letters()
                    .iter()
                    .map(|l| (l.generator + shift, l.exponent)),
            )
        }));
        for i in 0..shift {
            for j in 0..h.generators().len() {
                relators.push(Word::commutator(&gen(i), &gen(shift + j)));
            }
        }
        group = group.with_relators(relators)?;
    }
    Ok(group)
}

fn parse_index(text: &str, prefix: &str) -> Option<usize> {
    let rest = text.strip_prefix(prefix)?;
    let rest = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    rest.parse().ok()
}

fn single(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownGroup(name.to_string());
    match name {
        "quaternion8" | "Q8" => return quaternion8(),
        "klein4" | "K4" | "V4" => return klein4(),
        "prop14" | "two-involutions" => return two_involutions(),
        _ => {}
    }
    for prefix in ["cyclic", "C", "Z"] {
        if let Some(n) = parse_index(name, prefix) {
            return cyclic(n);
        }
    }
    for prefix in ["dihedral", "D"] {
        if let Some(n) = parse_index(name, prefix) {
            return dihedral(n);
        }
    }
    if let Some(n) = parse_index(name, "S") {
        return symmetric_group(n);
    }
    if let Some(n) = parse_index(name, "A") {
        return alternating_group(n);
    }
    Err(unknown())
}

/// Looks up a group by name: `cyclic(n)`/`Cn`, `dihedral(n)`/`Dn` (order
/// `2n`), `quaternion8`/`Q8`, `klein4`/`K4`, `prop14`, `S(n)`/`Sn`,
/// `A(n)`/`An`, and direct products joined by `x` or `*` (e.g. `C2xS3`).
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let parts: Vec<&str> = name.split(['x', '*']).map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::UnknownGroup(name.to_string()));
    }
    let mut group = single(parts[0])?;
    for part in &parts[1..] {
        group = direct_product(&group, &single(part)?)?;
    }
    Ok(group)
}

/// Names of the catalog groups used by the sweeping checks, all of order ≤ 60.
pub const SWEEP_GROUPS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C8", "K4", "C2xC4", "C2xC2xC2", "D3", "D4", "D5", "D6",
    "Q8", "prop14", "S3", "S4", "A4", "A5", "C3xS3", "C2xQ8", "C2xD4", "C3xQ8", "C2xA4",
];
