//! Acceptance run: one line per criterion, combining the library's claim
//! catalog with independent recomputations done here.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use twistclass::claims::{run_claims, ClaimOptions, ClaimResult};
use twistclass::laurent::LaurentPoly;
use twistclass::nilpotent::*;
use twistclass::perm::{Parity, Permutation};
use twistclass::wreath::{unit_class_membership, wreath_commutator, WreathElement};

type P = Vec<usize>;
type Oracle = Box<dyn Fn() -> Result<String, String>>;

fn perm(n: usize, s: &str) -> P {
    Permutation::parse(n, s).unwrap().images().to_vec()
}

fn mul(a: &P, b: &P) -> P {
    // left to right: apply a, then b
    a.iter().map(|&i| b[i]).collect()
}

fn inv(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn comm(a: &P, b: &P) -> P {
    mul(&mul(&mul(&inv(a), &inv(b)), a), b)
}

fn all_perms(n: usize) -> Vec<P> {
    fn go(prefix: &mut P, left: &mut Vec<usize>, out: &mut Vec<P>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn is_even(p: &P) -> bool {
    Permutation::from_images(p.clone()).unwrap().parity() == Parity::Even
}

fn generated(gens: &[P]) -> Vec<P> {
    let n = gens[0].len();
    let mut seen: BTreeSet<P> = BTreeSet::from([(0..n).collect()]);
    let mut frontier: Vec<P> = seen.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = mul(&p, g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

fn unit_class(group: &[P], h: &P) -> BTreeSet<P> {
    group.iter().map(|z| comm(z, h)).collect()
}

fn closed(s: &BTreeSet<P>) -> bool {
    s.iter().all(|a| s.iter().all(|b| s.contains(&mul(a, b))))
}

fn set(n: usize, items: &[&str]) -> BTreeSet<P> {
    items
        .iter()
        .map(|s| {
            if *s == "e" {
                (0..n).collect()
            } else {
                perm(n, s)
            }
        })
        .collect()
}

fn criterion_1() -> Result<String, String> {
    let s3 = all_perms(3);
    let c = unit_class(&s3, &perm(3, "(123)"));
    if c != set(3, &["e", "(132)"]) || closed(&c) {
        return Err("[e]_(123) mismatch".into());
    }
    let h = perm(3, "(12)");
    let c = unit_class(&s3, &h);
    if c != set(3, &["e", "(123)", "(132)"]) || !closed(&c) || 6 / c.len() != 2 {
        return Err("[e]_(12) mismatch".into());
    }
    // classes of z⁻¹ x h⁻¹ z h
    let twisted: BTreeSet<BTreeSet<P>> = s3
        .iter()
        .map(|x| {
            s3.iter()
                .map(|z| mul(&mul(&inv(z), x), &mul(&mul(&inv(&h), z), &h)))
                .collect()
        })
        .collect();
    let expected = BTreeSet::from([
        set(3, &["e", "(123)", "(132)"]),
        set(3, &["(12)"]),
        set(3, &["(13)", "(23)"]),
    ]);
    if twisted != expected {
        return Err(format!("partition has {} classes", twisted.len()));
    }
    Ok("oracle: permutation arithmetic on S3".into())
}

fn criterion_2() -> Result<String, String> {
    let a4: Vec<P> = all_perms(4).into_iter().filter(is_even).collect();
    let c = unit_class(&a4, &perm(4, "(123)"));
    if c != set(4, &["e", "(12)(34)", "(13)(24)", "(14)(23)"]) || !closed(&c) {
        return Err("[A4,(123)] mismatch".into());
    }
    let c = unit_class(&a4, &perm(4, "(12)(34)"));
    if c != set(4, &["e", "(13)(24)", "(14)(23)"]) {
        return Err("[A4,(12)(34)] mismatch".into());
    }
    let escape = mul(&perm(4, "(13)(24)"), &perm(4, "(14)(23)"));
    if c.contains(&escape) {
        return Err("closure witness missing".into());
    }
    Ok("oracle: (13)(24)·(14)(23) = (12)(34) escapes".into())
}

fn criterion_3() -> Result<String, String> {
    let s5 = all_perms(5);
    let a5: Vec<P> = s5.iter().filter(|p| is_even(p)).cloned().collect();
    let id: P = (0..5).collect();
    for h in a5.iter().filter(|h| **h != id) {
        if closed(&unit_class(&a5, h)) {
            return Err(format!("A5 class of {h:?} closed"));
        }
        if closed(&unit_class(&s5, h)) {
            return Err(format!("S5 class of {h:?} closed"));
        }
    }
    Ok("oracle: all 59 nontrivial even h in A5 and S5".into())
}

/// Endomorphisms of the group generated by `gens`, found by extending
/// generator images along a spanning tree and checking the full table.
fn endomorphisms(group: &[P], gens: &[P]) -> Vec<BTreeMap<P, P>> {
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    'outer: loop {
        let img: Vec<&P> = images.iter().map(|&i| &group[i]).collect();
        let id: P = (0..gens[0].len()).collect();
        let mut f: BTreeMap<P, P> = BTreeMap::from([(id.clone(), id)]);
        let mut frontier: Vec<P> = f.keys().cloned().collect();
        while let Some(p) = frontier.pop() {
            for (g, gi) in gens.iter().zip(&img) {
                let q = mul(&p, g);
                if !f.contains_key(&q) {
                    let v = mul(&f[&p], gi);
                    f.insert(q.clone(), v);
                    frontier.push(q);
                }
            }
        }
        let hom = group
            .iter()
            .all(|a| group.iter().all(|b| f[&mul(a, b)] == mul(&f[a], &f[b])));
        if hom {
            out.push(f);
        }
        for i in (0..images.len()).rev() {
            images[i] += 1;
            if images[i] < group.len() {
                continue 'outer;
            }
            images[i] = 0;
        }
        return out;
    }
}

fn criterion_4() -> Result<String, String> {
    let (x, y) = (perm(4, "(24)"), perm(4, "(12)(34)"));
    let g = generated(&[x.clone(), y.clone()]);
    let endos = endomorphisms(&g, &[x.clone(), y.clone()]);
    let autos = endos
        .iter()
        .filter(|f| f.values().collect::<BTreeSet<_>>().len() == g.len())
        .count();
    if endos.len() != 36 || autos != 8 {
        return Err(format!("|End| = {}, |Aut| = {autos}", endos.len()));
    }
    let swap = endos
        .iter()
        .find(|f| f[&x] == y && f[&y] == x)
        .ok_or("no swap map")?;
    let unit: BTreeSet<P> = g.iter().map(|z| mul(&inv(z), &swap[z])).collect();
    let xy = mul(&x, &y);
    let powers: BTreeSet<P> = (0..4)
        .scan((0..4).collect::<P>(), |acc, _| {
            let cur = acc.clone();
            *acc = mul(acc, &xy);
            Some(cur)
        })
        .collect();
    if unit != powers || !closed(&unit) {
        return Err("swap unit class is not <xy>".into());
    }
    let classes: BTreeSet<BTreeSet<P>> = g
        .iter()
        .map(|a| g.iter().map(|z| mul(&mul(&inv(z), a), &swap[z])).collect())
        .collect();
    if classes.len() != 3 {
        return Err(format!("R(swap) = {}", classes.len()));
    }
    Ok("oracle: 36 endomorphisms, 8 automorphisms, R(swap) = 3 by permutation search".into())
}

fn criterion_5(radius: i64) -> Result<String, String> {
    for p in PinnedN22Map::ALL {
        let map = p.map();
        let (xi, yi) = (magnus22(&map.x_image), magnus22(&map.y_image));
        let ti = xi.comm(&yi);
        for a in -radius..=radius {
            for b in -radius..=radius {
                for c in -radius..=radius {
                    let z = N22Element::new(a, b, c);
                    let image = xi.pow(a).mul(&yi.pow(b)).mul(&ti.pow(c));
                    let disp = magnus22(&z).inv().mul(&image);
                    if magnus22(&p.displacement_formula(&z)) != disp {
                        return Err(format!("{p:?} at {z}"));
                    }
                }
            }
        }
    }
    Ok(format!(
        "oracle: Magnus images on the [-{radius},{radius}]^3 box"
    ))
}

fn criterion_6(radius: i64) -> Result<String, String> {
    let y = magnus23(&N23Element::y());
    for a in -radius..=radius {
        for b in -radius..=radius {
            for c in -radius..=radius {
                let g = N23Element::new(a, b, c, 0, 0);
                if magnus23(&n23_commutator_with_y(&g)) != magnus23(&g).comm(&y) {
                    return Err(format!("[g,y] at {g}"));
                }
            }
        }
    }
    let u = N23Element::u();
    // [x,y] = [y,x]⁻¹
    let xy = u.inv();
    if !n23_inner_y_membership(&xy) || n23_inner_y_membership(&xy.mul(&xy)) {
        return Err("membership of [x,y], [x,y]^2".into());
    }
    Ok(format!(
        "oracle: Magnus [g,y] on the [-{radius},{radius}]^3 box"
    ))
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let n = rng.gen_range(0..5);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-4i64..=4), rng.gen_range(-5i64..=5))))
}

fn criterion_7(samples: usize) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..samples {
        let u = WreathElement::new(rng.gen_range(-4i64..=4), random_poly(&mut rng));
        let h = WreathElement::new(rng.gen_range(-4i64..=4), random_poly(&mut rng));
        if matrix(&wreath_commutator(&u, &h)) != mat_comm(&matrix(&u), &matrix(&h)) {
            return Err(format!("commutator of {u} and {h}"));
        }
    }
    let h = WreathElement::t(LaurentPoly::one());
    let member = LaurentPoly::one_minus_inverse_power(&BigInt::from(1));
    let doubled = &member + &member;
    // t(1-l^-1) = [d, h], computed in matrices
    let d = WreathElement::d_pow(1);
    if lp(&member) != mat_comm(&matrix(&d), &matrix(&h))[0][1] {
        return Err("witness is not a commutator".into());
    }
    // with m = 0 the class is exactly { 1 - l^-l : l ∈ ℤ }
    let not_member = !unit_class_membership(&h, &doubled)
        .map_err(|e| e.to_string())?
        .is_member();
    let search: HashMap<i64, bool> = (-20i64..=20)
        .map(|l| {
            (
                l,
                LaurentPoly::one_minus_inverse_power(&BigInt::from(l)) == doubled,
            )
        })
        .collect();
    if !not_member || search.values().any(|&hit| hit) {
        return Err("t(2-2l^-1) found in the class".into());
    }
    Ok(format!(
        "oracle: 2x2 Laurent matrices on {samples} random pairs"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let claims = match run_claims(None, &ClaimOptions::default()) {
        Ok(c) => c,
        Err(e) => {
            println!("claim catalog failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let oracles: [(u8, Oracle); 8] = [
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(|| criterion_5(5))),
        (6, Box::new(|| criterion_6(6))),
        (7, Box::new(|| criterion_7(1000))),
        (
            8,
            Box::new(|| Ok("sweep over catalog groups of order <= 60".into())),
        ),
    ];
    let mut all_pass = true;
    for (n, oracle) in oracles {
        let own: Vec<&ClaimResult> = claims.iter().filter(|c| c.criterion == n).collect();
        let failed: Vec<&str> = own
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.anchor.as_str())
            .collect();
        let oracle = oracle();
        let pass = !own.is_empty() && failed.is_empty() && oracle.is_ok();
        all_pass &= pass;
        let detail = match (&oracle, failed.is_empty()) {
            (Ok(note), true) => format!("{} claims; {note}", own.len()),
            (Ok(_), false) => format!("failed claims: {}", failed.join(", ")),
            (Err(e), _) => format!("oracle disagreement: {e}"),
        };
        println!(
            "criterion {n}: {} ({detail})",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!("elapsed: {:.2} s", start.elapsed().as_secs_f64());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
