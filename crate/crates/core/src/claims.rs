//! A catalog of checkable statements with expected and computed values,
//! grouped by topic. Drives the `verify-paper` command and the acceptance
//! suite.

use std::fmt::Display;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::catalog::{catalog, SWEEP_GROUPS};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subset};
use crate::laurent::LaurentPoly;
use crate::morphisms::{
    aut_group, endo_orbit_census, enumerate_homomorphisms, parse_map_spec, GroupMap, MapKind,
};
use crate::nilpotent::{
    n23_commutator_with_y, n23_inner_y_membership, N22Element, N23Element, NilElement, NilMap,
    PinnedN22Map,
};
use crate::twisted::{self, MinElement, OuterWord, SeriesTerminal, Verdict};
use crate::wreath::{
    nonclosure_witness, unit_class_membership, wreath_commutator, ClosureVerdict, WreathElement,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub anchor: String,
    pub topic: &'static str,
    /// Acceptance criterion the claim belongs to.
    pub criterion: u8,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Topics in run order.
pub const TOPICS: &[&str] = &[
    "s3",
    "a4",
    "simple",
    "two-involutions",
    "free-nilpotent-2",
    "free-nilpotent-3",
    "wreath",
    "invariants",
];

/// Resolves a topic name or one of the short aliases accepted by `--only`.
pub fn resolve_topic(name: &str) -> Option<&'static str> {
    let name = name.trim().to_ascii_lowercase();
    let alias = match name.as_str() {
        "example1" => "free-nilpotent-2",
        "example2" => "s3",
        "example3" => "wreath",
        "prop14" => "two-involutions",
        other => other,
    };
    TOPICS.iter().copied().find(|t| *t == alias)
}

#[derive(Clone, Copy, Debug)]
pub struct ClaimOptions {
    pub seed: u64,
    /// Box radius for the class-2 nilpotent sweeps.
    pub n22_box: i64,
    /// Box radius for the class-3 brute-force cross-check.
    pub n23_box: i64,
    /// Number of random wreath inputs.
    pub wreath_samples: usize,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        ClaimOptions {
            seed: 0x0771_57ed,
            n22_box: 5,
            n23_box: 6,
            wreath_samples: 1000,
        }
    }
}

struct Sink {
    topic: &'static str,
    criterion: u8,
    out: Vec<ClaimResult>,
}

impl Sink {
    fn check(&mut self, anchor: &str, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.out.push(ClaimResult {
            anchor: anchor.to_string(),
            topic: self.topic,
            criterion: self.criterion,
            pass: expected == actual,
            expected,
            actual,
        });
    }
}

/// Runs every claim in the selected topics, in [`TOPICS`] order.
pub fn run_claims(only: Option<&str>, opts: &ClaimOptions) -> Result<Vec<ClaimResult>> {
    let selected: Vec<&'static str> =
        match only {
            None => TOPICS.to_vec(),
            Some(name) => vec![resolve_topic(name)
                .ok_or_else(|| Error::Parse(format!("unknown topic `{name}`")))?],
        };
    let mut out = Vec::new();
    for topic in selected {
        let mut sink = Sink {
            topic,
            criterion: 0,
            out: Vec::new(),
        };
        match topic {
            "s3" => s3(&mut sink)?,
            "a4" => a4(&mut sink)?,
            "simple" => simple(&mut sink)?,
            "two-involutions" => two_involutions(&mut sink)?,
            "free-nilpotent-2" => free_nilpotent_2(&mut sink, opts)?,
            "free-nilpotent-3" => free_nilpotent_3(&mut sink, opts)?,
            "wreath" => wreath(&mut sink, opts)?,
            "invariants" => invariants(&mut sink)?,
            _ => unreachable!("topics are listed in TOPICS"),
        }
        out.extend(sink.out);
    }
    Ok(out)
}

/// Labels with the identity first, then in byte order.
pub fn sorted_labels(g: &FiniteGroup, s: &Subset) -> Vec<String> {
    let mut labels: Vec<(bool, String)> =
        s.iter().map(|x| (x != g.identity(), g.label(x))).collect();
    labels.sort();
    labels.into_iter().map(|(_, l)| l).collect()
}

fn set_text(g: &FiniteGroup, s: &Subset) -> String {
    format!("{{{}}}", sorted_labels(g, s).join(", "))
}

fn elem(g: &FiniteGroup, label: &str) -> Result<usize> {
    g.element_by_label(label)
        .ok_or_else(|| Error::Internal(format!("missing element {label}")))
}

fn s3(s: &mut Sink) -> Result<()> {
    s.criterion = 1;
    let g = catalog("S3")?;
    let h = elem(&g, "(123)")?;
    let r = twisted::unit_class_subgroup_report(&g, &GroupMap::inner(&g, h))?;
    s.check(
        "s3-inner-123-unit-class",
        "{e, (132)}",
        set_text(&g, &r.class),
    );
    s.check("s3-inner-123-not-subgroup", false, r.is_subgroup());
    let h = elem(&g, "(12)")?;
    let phi = GroupMap::inner(&g, h);
    let r = twisted::unit_class_subgroup_report(&g, &phi)?;
    s.check(
        "s3-inner-12-unit-class",
        "{e, (123), (132)}",
        set_text(&g, &r.class),
    );
    s.check(
        "s3-inner-12-subgroup-index",
        "Some(2)",
        format!("{:?}", r.index),
    );
    let p = twisted::twisted_partition(&g, &phi)?;
    let mut classes: Vec<String> = p.classes.iter().map(|c| set_text(&g, &c.members)).collect();
    classes.sort();
    s.check(
        "s3-inner-12-partition",
        "{(12)} | {(13), (23)} | {e, (123), (132)}",
        classes.join(" | "),
    );
    s.check("s3-inner-12-reidemeister", 3, p.reidemeister);
    let id = twisted::unit_class(&g, &GroupMap::identity(&g))?;
    s.check("identity-twist-unit-class", "{e}", set_text(&g, &id));
    Ok(())
}

fn a4(s: &mut Sink) -> Result<()> {
    s.criterion = 2;
    let g = catalog("A4")?;
    let r = twisted::unit_class_subgroup_report(&g, &GroupMap::inner(&g, elem(&g, "(123)")?))?;
    s.check(
        "a4-inner-123-unit-class",
        "{e, (12)(34), (13)(24), (14)(23)}",
        set_text(&g, &r.class),
    );
    s.check(
        "a4-inner-123-subgroup-index",
        "Some(3)",
        format!("{:?}", r.index),
    );
    let r = twisted::unit_class_subgroup_report(&g, &GroupMap::inner(&g, elem(&g, "(12)(34)")?))?;
    s.check(
        "a4-inner-12-34-unit-class",
        "{e, (13)(24), (14)(23)}",
        set_text(&g, &r.class),
    );
    s.check("a4-inner-12-34-not-subgroup", false, r.is_subgroup());
    let witness_ok = match r.test {
        crate::group::SubgroupTest::NotClosed { a, b, product } => {
            r.class.contains(a)
                && r.class.contains(b)
                && !r.class.contains(product)
                && g.mult(a, b) == product
        }
        _ => false,
    };
    s.check("a4-inner-12-34-closure-witness", true, witness_ok);
    Ok(())
}

fn simple(s: &mut Sink) -> Result<()> {
    s.criterion = 3;
    let a5 = catalog("A5")?;
    s.check(
        "a5-no-nontrivial-unit-class-subgroup",
        true,
        twisted::simple_group_scan(&a5)?,
    );
    s.check(
        "s5-even-twists-not-subgroups",
        true,
        twisted::symmetric_even_scan(5)?,
    );
    Ok(())
}

fn two_involutions(s: &mut Sink) -> Result<()> {
    s.criterion = 4;
    let g = catalog("prop14")?;
    let endos = enumerate_homomorphisms(&g)?;
    s.check("two-involutions-endomorphism-count", 36, endos.len());
    let auts = endos.iter().filter(|m| m.is_automorphism()).count();
    s.check("two-involutions-automorphism-count", 8, auts);
    let census = endo_orbit_census(&g)?;
    let singleton = |m: &GroupMap| {
        census
            .iter()
            .any(|o| o.size == 1 && o.members.iter().any(|&i| endos[i].table() == m.table()))
    };
    s.check(
        "two-involutions-trivial-and-identity-singletons",
        true,
        singleton(&GroupMap::trivial(&g)) && singleton(&GroupMap::identity(&g)),
    );
    let proper_four = census
        .iter()
        .any(|o| o.size == 4 && o.kind == MapKind::Endomorphism);
    s.check("two-involutions-size-4-proper-orbit", true, proper_four);
    let mut sizes: Vec<(String, usize)> = census
        .iter()
        .map(|o| (format!("{:?}", o.kind), o.size))
        .collect();
    sizes.sort();
    let aut_sizes: Vec<usize> = sizes
        .iter()
        .filter(|(k, _)| k == "Automorphism")
        .map(|p| p.1)
        .collect();
    s.check(
        "two-involutions-automorphism-orbit-sizes",
        "[1, 1, 2, 2, 2]",
        format!("{aut_sizes:?}"),
    );

    let swap = parse_map_spec(&g, "x->y, y->x")?;
    let r = twisted::unit_class_subgroup_report(&g, &swap)?;
    s.check(
        "two-involutions-swap-unit-class",
        "{e, [x,y], xy, xy[x,y]}",
        set_text(&g, &r.class),
    );
    let xy = elem(&g, "xy")?;
    let powers: Subset = (0..4).map(|k| g.pow(xy, k)).collect();
    s.check(
        "two-involutions-swap-unit-class-is-cyclic",
        true,
        powers == r.class,
    );
    s.check(
        "two-involutions-swap-index",
        "Some(2)",
        format!("{:?}", r.index),
    );
    let p = twisted::twisted_partition(&g, &swap)?;
    s.check("two-involutions-swap-reidemeister", 3, p.reidemeister);
    let x_class = twisted::twisted_class(&g, &swap, elem(&g, "x")?)?;
    s.check(
        "two-involutions-swap-class-of-x",
        "{x, y}",
        set_text(&g, &x_class.members),
    );
    let kr = twisted::central_series_index_product(&g, &swap)?;
    s.check(
        "two-involutions-swap-index-product",
        "[2, 2] -> 4",
        format!("{:?} -> {}", kr.factors, kr.product),
    );
    s.check(
        "two-involutions-index-product-differs",
        true,
        kr.product != p.reidemeister,
    );

    let bad_aut = parse_map_spec(&g, "x->y[x,y], y->x")?;
    let r = twisted::unit_class_subgroup_report(&g, &bad_aut)?;
    s.check(
        "two-involutions-automorphism-with-non-subgroup-class",
        false,
        r.is_subgroup(),
    );
    let mut proper_ok = true;
    for m in endos.iter().filter(|m| !m.is_automorphism()) {
        proper_ok &= twisted::unit_class_subgroup_report(&g, m)?.is_subgroup();
    }
    s.check(
        "two-involutions-proper-endomorphisms-give-subgroups",
        true,
        proper_ok,
    );
    let scan = twisted::scan_all_inner(&g)?;
    s.check(
        "two-involutions-inner-scan",
        "all subgroups, class Some(2)",
        format!(
            "{}, class {:?}",
            if scan.all_subgroups {
                "all subgroups"
            } else {
                "failures"
            },
            scan.nilpotency_class
        ),
    );
    Ok(())
}

fn free_nilpotent_2(s: &mut Sink, opts: &ClaimOptions) -> Result<()> {
    s.criterion = 5;
    let r = opts.n22_box;
    let box_points: Vec<N22Element> = (-r..=r)
        .flat_map(|a| (-r..=r).flat_map(move |b| (-r..=r).map(move |c| N22Element::new(a, b, c))))
        .collect();
    for p in PinnedN22Map::ALL {
        let map = p.map();
        let agree = box_points
            .iter()
            .all(|z| map.displacement(z) == p.displacement_formula(z));
        s.check(
            &format!("n22-{}-displacement-formula", pinned_name(p)),
            true,
            agree,
        );
        // every box target with a preimage in the box, versus the closed form
        let image: std::collections::HashSet<N22Element> =
            box_points.iter().map(|z| map.displacement(z)).collect();
        let consistent = box_points
            .iter()
            .all(|t| p.unit_class_contains(t) == image.contains(t));
        s.check(
            &format!("n22-{}-membership-matches-search", pinned_name(p)),
            true,
            consistent,
        );
    }
    let both = PinnedN22Map::InvertBoth;
    let x2 = N22Element::new(2, 0, 0);
    let y2 = N22Element::new(0, 2, 0);
    s.check(
        "n22-x-squared-in-class",
        true,
        both.unit_class_contains(&x2),
    );
    s.check(
        "n22-y-squared-in-class",
        true,
        both.unit_class_contains(&y2),
    );
    s.check(
        "n22-x2y2-not-in-class",
        false,
        both.unit_class_contains(&x2.mul(&y2)),
    );
    for p in [PinnedN22Map::InvertX, PinnedN22Map::InvertY] {
        let members: Vec<&N22Element> = box_points
            .iter()
            .filter(|t| p.unit_class_contains(t))
            .collect();
        let closed = members.iter().all(|a| {
            members
                .iter()
                .all(|b| p.unit_class_contains(&a.mul(b)) && p.unit_class_contains(&a.inv()))
        });
        s.check(
            &format!("n22-{}-closed-on-box", pinned_name(p)),
            true,
            closed,
        );
    }
    let witness = both
        .nonclosure_witness()
        .map(|(a, b, ab)| format!("{a} * {b} = {ab}"))
        .unwrap_or_else(|| "none".into());
    s.check("n22-invert-both-nonclosure", "x^2 * y^2 = x^2 y^2", witness);
    let cor: NilMap<N22Element> = NilMap::parse("x->x [x,y], y->y")?;
    s.check(
        "n22-ia-map-is-central",
        true,
        cor.is_ia() && cor.is_central(),
    );
    Ok(())
}

fn pinned_name(p: PinnedN22Map) -> &'static str {
    match p {
        PinnedN22Map::InvertX => "invert-x",
        PinnedN22Map::InvertY => "invert-y",
        PinnedN22Map::InvertBoth => "invert-both",
    }
}

fn free_nilpotent_3(s: &mut Sink, opts: &ClaimOptions) -> Result<()> {
    s.criterion = 6;
    let y = N23Element::y();
    let r = 3i64;
    let mut agree = true;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    for f in -r..=r {
                        let g = N23Element::new(a, b, c, d, f);
                        agree &= n23_commutator_with_y(&g) == g.inv().mul(&y.inv()).mul(&g).mul(&y);
                    }
                }
            }
        }
    }
    s.check("n23-commutator-with-y-formula", true, agree);
    let t = N23Element::x().commutator(&y);
    let t2 = t.mul(&t);
    s.check("n23-commutator-in-class", true, n23_inner_y_membership(&t));
    s.check(
        "n23-commutator-squared-not-in-class",
        false,
        n23_inner_y_membership(&t2),
    );
    // brute force over z = x^a y^b [y,x]^c in the box
    let inner = NilMap::inner(&y);
    let b = opts.n23_box;
    let mut image = std::collections::HashSet::new();
    for a in -b..=b {
        for bb in -b..=b {
            for c in -b..=b {
                image.insert(inner.displacement(&N23Element::new(a, bb, c, 0, 0)));
            }
        }
    }
    s.check(
        "n23-commutator-in-class-by-search",
        true,
        image.contains(&t),
    );
    s.check(
        "n23-commutator-squared-not-in-class-by-search",
        false,
        image.contains(&t2),
    );
    let consistent = image.iter().all(n23_inner_y_membership);
    s.check("n23-search-image-satisfies-closed-form", true, consistent);
    let m: NilMap<N23Element> = NilMap::parse("x->x [x,y], y->y")?;
    s.check(
        "n23-ia-map-not-central",
        "ia=true central=false",
        format!("ia={} central={}", m.is_ia(), m.is_central()),
    );
    Ok(())
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let n = rng.gen_range(0..=4);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-3i64..=3), rng.gen_range(-5i64..=5))))
}

fn wreath(s: &mut Sink, opts: &ClaimOptions) -> Result<()> {
    s.criterion = 7;
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut agree = true;
    for _ in 0..opts.wreath_samples {
        let u = WreathElement::new(rng.gen_range(-3i64..=3), random_poly(&mut rng));
        let h = WreathElement::new(rng.gen_range(-3i64..=3), random_poly(&mut rng));
        agree &= wreath_commutator(&u, &h) == u.commutator(&h);
    }
    s.check("wreath-commutator-formula", true, agree);
    let mu: LaurentPoly = "1+l^2".parse()?;
    let lhs = WreathElement::d_pow(3).commutator(&WreathElement::t(mu.clone()));
    let rhs = WreathElement::t(&mu * &LaurentPoly::one_minus_inverse_power(&BigInt::from(3)));
    s.check("wreath-d-power-commutator", true, lhs == rhs);

    let h = WreathElement::t(LaurentPoly::one());
    let verdict = match nonclosure_witness(&h)? {
        ClosureVerdict::NotSubgroup(w) => format!("({}) + ({}) = {}", w.first, w.second, w.product),
        ClosureVerdict::Subgroup => "subgroup".into(),
    };
    s.check(
        "wreath-t1-nonclosure-witness",
        "(1-l^-1) + (1-l^-1) = 2-2*l^-1",
        verdict,
    );
    let product: LaurentPoly = "2-2*l^-1".parse()?;
    s.check(
        "wreath-t1-product-not-member",
        false,
        unit_class_membership(&h, &product)?.is_member(),
    );
    // products of two members: a member exactly when one factor is trivial
    let mut dichotomy = true;
    for l in -3i64..=3 {
        for l1 in -3i64..=3 {
            let p = LaurentPoly::one_minus_inverse_power(&BigInt::from(l));
            let q = LaurentPoly::one_minus_inverse_power(&BigInt::from(l1));
            let member = unit_class_membership(&h, &(&p + &q))?.is_member();
            dichotomy &= member == (l == 0 || l1 == 0);
        }
    }
    s.check("wreath-t1-product-dichotomy", true, dichotomy);
    let scaled = WreathElement::t("l^2".parse()?);
    let scaled_ok = matches!(nonclosure_witness(&scaled)?, ClosureVerdict::NotSubgroup(_));
    s.check("wreath-scaled-t-not-subgroup", true, scaled_ok);
    // for |m| = 1 the class is the ideal (1 - l^-1), a subgroup
    let m1 = WreathElement::new(1, LaurentPoly::one());
    let m1_verdict = matches!(nonclosure_witness(&m1)?, ClosureVerdict::Subgroup);
    s.check("wreath-m1-class-is-subgroup", true, m1_verdict);
    let m2 = WreathElement::new(2, LaurentPoly::one());
    let m2_verdict = matches!(nonclosure_witness(&m2)?, ClosureVerdict::NotSubgroup(_));
    s.check("wreath-m2-class-not-subgroup", true, m2_verdict);
    Ok(())
}

#[derive(Default)]
struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn summary(&self) -> String {
        match self.failures.first() {
            None => "0 failures".into(),
            Some(first) => format!("{} failures, first: {first}", self.failures.len()),
        }
    }
}

fn invariants(s: &mut Sink) -> Result<()> {
    s.criterion = 8;
    let groups: Vec<(&str, FiniteGroup)> = SWEEP_GROUPS
        .iter()
        .map(|name| catalog(name).map(|g| (*name, g)))
        .collect::<Result<_>>()?;
    let groups: Vec<(&str, FiniteGroup)> = groups
        .into_iter()
        .filter(|(_, g)| g.order() <= 60)
        .collect();

    let mut normal = Tally::default();
    let mut excludes = Tally::default();
    let mut identities = Tally::default();
    let mut conjugation = Tally::default();
    let mut product = Tally::default();
    let mut quotient_center = Tally::default();
    let mut series = Tally::default();
    let mut nilpotent = Tally::default();
    for (name, g) in &groups {
        let inner: Vec<GroupMap> = g.elements().map(|h| GroupMap::inner(g, h)).collect();
        let mut subgroup_twists = Vec::new();
        for h in g.elements() {
            match twisted::unit_class_subgroup_report(g, &inner[h]) {
                Ok(r) if r.is_subgroup() => subgroup_twists.push(h),
                Ok(_) => {}
                Err(e) => normal
                    .failures
                    .push(format!("{name} h={}: {e}", g.label(h))),
            }
            if h != g.identity() {
                excludes.require(twisted::unit_class_excludes_twist(g, h)?, || {
                    format!("{name} h={}", g.label(h))
                });
            }
        }
        for &h in &subgroup_twists {
            if h != g.identity() {
                quotient_center.require(twisted::quotient_center_nontrivial(g, h)?, || {
                    format!("{name} h={}", g.label(h))
                });
            }
            for &k in &subgroup_twists {
                product.require(
                    twisted::unit_class_product_inclusion(g, &inner[h], &inner[k])?,
                    || format!("{name} ({}, {})", g.label(h), g.label(k)),
                );
            }
        }
        if g.order() <= 24 {
            for x in g.elements() {
                for h in g.elements() {
                    identities.require(
                        twisted::inner_class_via_conjugacy(g, x, h)?
                            && twisted::class_size_matches_centralizer_index(g, x, h)?,
                        || format!("{name} x={} h={}", g.label(x), g.label(h)),
                    );
                }
            }
        }
        let aut = aut_group(g)?;
        for phi in &inner {
            for theta in &aut.maps {
                conjugation.require(twisted::unit_class_conjugation(g, phi, theta)?, || {
                    format!("{name} {}", theta.describe(g))
                });
            }
        }
        let centerless = g.center().len() == 1;
        for h0 in g.elements().filter(|&h| h != g.identity()) {
            let mut first = Some(h0);
            let mut chooser = |g: &FiniteGroup, cur: &Subset, step: usize| {
                if step == 0 {
                    first.take()
                } else {
                    cur.iter().find(|&x| x != g.identity())
                }
            };
            match twisted::descending_unit_class_series(g, &mut chooser) {
                Ok(r) => series.require(
                    !centerless || matches!(r.terminal, SeriesTerminal::ClassNotSubgroup { .. }),
                    || format!("{name} h0={} reached {:?}", g.label(h0), r.terminal),
                ),
                Err(e) => series
                    .failures
                    .push(format!("{name} h0={}: {e}", g.label(h0))),
            }
        }
        if g.order() > 1 {
            if let Err(e) = twisted::descending_unit_class_series(g, &mut MinElement) {
                series.failures.push(format!("{name}: {e}"));
            }
        }
        match twisted::scan_all_inner(g) {
            Ok(_) => {}
            Err(e) => nilpotent.failures.push(format!("{name}: {e}")),
        }
    }
    s.check(
        "inv-subgroup-class-is-normal",
        "0 failures",
        normal.summary(),
    );
    s.check(
        "inv-unit-class-excludes-twist",
        "0 failures",
        excludes.summary(),
    );
    s.check(
        "inv-class-via-conjugacy-and-centralizer",
        "0 failures",
        identities.summary(),
    );
    s.check(
        "inv-class-conjugation-by-automorphisms",
        "0 failures",
        conjugation.summary(),
    );
    s.check(
        "inv-unit-class-product-inclusion",
        "0 failures",
        product.summary(),
    );
    s.check(
        "inv-quotient-center-nontrivial",
        "0 failures",
        quotient_center.summary(),
    );
    s.check("inv-descending-series", "0 failures", series.summary());
    s.check(
        "inv-all-subgroups-implies-nilpotent",
        "0 failures",
        nilpotent.summary(),
    );

    let d4 = catalog("prop14")?;
    let verdict = |v: Verdict| match v {
        Verdict::Holds => "holds".to_string(),
        other => format!("{other:?}"),
    };
    s.check(
        "inv-quotients-inherit-subgroups",
        "holds",
        verdict(twisted::quotients_inherit_inner_subgroups(&d4)?),
    );
    s.check(
        "inv-maximal-quotients-prime-cyclic",
        "holds",
        verdict(twisted::maximal_quotients_prime_cyclic(&d4)?),
    );
    s.check(
        "inv-derived-in-center",
        "holds",
        verdict(twisted::derived_in_center(&d4)?),
    );
    let ch = twisted::characteristic_intersection(&d4)?;
    s.check(
        "inv-characteristic-intersection",
        true,
        ch.invariant && ch.chain_holds,
    );

    let mut words = Tally::default();
    let mut chains = Tally::default();
    for name in ["prop14", "Q8"] {
        let g = catalog(name)?;
        for n in 2..=3 {
            for w in OuterWord::all_of_arity(n) {
                for_each_tuple(g.order(), n, |t| match twisted::outer_word_in_unit_classes(
                    &g, &w, t,
                ) {
                    Ok(ok) => words.require(ok, || format!("{name} {w} {t:?}")),
                    Err(e) => words.failures.push(format!("{name} {w}: {e}")),
                });
            }
        }
        for_each_tuple(g.order(), 3, |t| {
            if let Err(e) = twisted::commutator_chain(&g, t) {
                chains.failures.push(format!("{name} {t:?}: {e}"));
            }
        });
    }
    s.check(
        "inv-outer-words-in-unit-classes",
        "0 failures",
        words.summary(),
    );
    s.check("inv-commutator-chains", "0 failures", chains.summary());
    Ok(())
}

fn for_each_tuple(order: usize, n: usize, mut f: impl FnMut(&[usize])) {
    let mut t = vec![0; n];
    loop {
        f(&t);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < order {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topic_aliases() {
        assert_eq!(resolve_topic("example3"), Some("wreath"));
        assert_eq!(resolve_topic("S3"), Some("s3"));
        assert_eq!(resolve_topic("nope"), None);
        assert!(run_claims(Some("nope"), &ClaimOptions::default()).is_err());
    }

    #[test]
    fn small_topics_pass() {
        let claims = run_claims(Some("s3"), &ClaimOptions::default()).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:#?}");
        assert!(claims.iter().all(|c| c.criterion == 1));
    }
}
