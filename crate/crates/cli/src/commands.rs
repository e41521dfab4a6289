use std::time::Instant;

use serde_json::{json, Value};
use twistclass::claims::{run_claims, sorted_labels, ClaimOptions, TOPICS};
use twistclass::morphisms::{
    endo_orbit_census, enumerate_homomorphisms, parse_element, parse_map_spec, GroupMap,
};
use twistclass::perm::Permutation;
use twistclass::twisted::{self, Chooser, MinElement, Sequence, SeriesTerminal};
use twistclass::{Elem, Error, FiniteGroup, Result, SubgroupTest, Subset};

use crate::report::{ClaimRow, Report};

fn labels(g: &FiniteGroup, s: &Subset) -> Vec<String> {
    sorted_labels(g, s)
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

/// An element by label, generator word, or cycle notation in any rotation.
pub fn element(g: &FiniteGroup, text: &str) -> Result<Elem> {
    match parse_element(g, text) {
        Ok(e) => Ok(e),
        Err(first) => {
            let canonical = text.parse::<Permutation>().map(|p| p.to_string());
            canonical
                .ok()
                .and_then(|c| g.element_by_label(&c))
                .ok_or(first)
        }
    }
}

fn element_list(g: &FiniteGroup, text: &str) -> Result<Vec<Elem>> {
    // commas inside brackets belong to labels such as `[x,y]`
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0usize, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            ',' | ';' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
        .into_iter()
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| element(g, p))
        .collect()
}

pub struct Twist {
    pub inner: Option<String>,
    pub map: Option<String>,
}

impl Twist {
    fn resolve(&self, g: &FiniteGroup) -> Result<(GroupMap, String)> {
        match (&self.inner, &self.map) {
            (Some(h), None) => {
                let h = element(g, h)?;
                let map = GroupMap::inner(g, h);
                Ok((map, format!("inner by {}", g.label(h))))
            }
            (None, Some(spec)) => {
                let map = parse_map_spec(g, spec)?;
                let text = map.describe(g);
                Ok((map, text))
            }
            (None, None) => Ok((GroupMap::identity(g), "identity".into())),
            (Some(_), Some(_)) => Err(Error::Parse(
                "give either --inner or --map, not both".into(),
            )),
        }
    }

    fn echo(&self, report: Report) -> Report {
        let report = match &self.inner {
            Some(h) => report.input("inner", h.as_str()),
            None => report,
        };
        match &self.map {
            Some(m) => report.input("map", m.as_str()),
            None => report,
        }
    }
}

fn witness_json(g: &FiniteGroup, test: &SubgroupTest) -> Value {
    match *test {
        SubgroupTest::Subgroup => Value::Null,
        SubgroupTest::Empty => json!({"kind": "empty"}),
        SubgroupTest::NotClosed { a, b, product } => json!({
            "kind": "not_closed",
            "a": g.label(a),
            "b": g.label(b),
            "product": g.label(product),
        }),
        SubgroupTest::MissingInverse { a, inverse } => json!({
            "kind": "missing_inverse",
            "a": g.label(a),
            "inverse": g.label(inverse),
        }),
    }
}

fn witness_text(g: &FiniteGroup, test: &SubgroupTest) -> String {
    match *test {
        SubgroupTest::Subgroup => "subgroup".into(),
        SubgroupTest::Empty => "empty".into(),
        SubgroupTest::NotClosed { a, b, product } => format!(
            "not a subgroup: {} * {} = {} is outside",
            g.label(a),
            g.label(b),
            g.label(product)
        ),
        SubgroupTest::MissingInverse { a, inverse } => format!(
            "not a subgroup: inverse {} of {} is outside",
            g.label(inverse),
            g.label(a)
        ),
    }
}

pub fn group(name: &str) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let mut r = Report::new("group").input("group", name);
    let center = labels(&g, &g.center());
    let derived = labels(&g, &g.derived_subgroup());
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Subset::len).collect();
    sizes.sort_unstable();
    let class = g.nilpotency_class();
    let simple = g.is_simple();
    r.result = json!({
        "order": g.order(),
        "generators": g.generator_names(),
        "abelian": g.is_abelian(),
        "simple": simple,
        "center": center,
        "derived_subgroup": derived,
        "class_sizes": sizes,
        "nilpotency_class": class,
    });
    r.line(format!("group {name}: order {}", g.order()));
    r.line(format!("generators: {}", g.generator_names().join(", ")));
    r.line(format!("abelian: {}, simple: {simple}", g.is_abelian()));
    r.line(format!(
        "center (order {}): {}",
        center.len(),
        braces(&center)
    ));
    r.line(format!(
        "derived subgroup (order {}): {}",
        derived.len(),
        braces(&derived)
    ));
    let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
    r.line(format!("conjugacy class sizes: {}", sizes.join(" ")));
    r.line(match class {
        Some(c) => format!("nilpotency class: {c}"),
        None => "nilpotency class: not nilpotent".into(),
    });
    Ok(r)
}

pub fn twisted_class(name: &str, twist: &Twist, x: &str) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let (phi, desc) = twist.resolve(&g)?;
    let x = element(&g, x)?;
    let mut r = twist
        .echo(Report::new("twisted-class").input("group", name))
        .input("element", g.label(x));
    let class = twisted::twisted_class(&g, &phi, x)?.members;
    let test = g.subgroup_test(&class);
    let (normal, index) = if test.is_subgroup() {
        (Some(g.is_normal(&class)?), Some(g.order() / class.len()))
    } else {
        (None, None)
    };
    let members = labels(&g, &class);
    r.result = json!({
        "twist": desc,
        "class": members,
        "size": class.len(),
        "subgroup": test.is_subgroup(),
        "normal": normal,
        "index": index,
        "witness": witness_json(&g, &test),
    });
    r.line(format!("group {name}, twist {desc}"));
    r.line(format!(
        "[{}] = {} (size {})",
        g.label(x),
        braces(&members),
        class.len()
    ));
    r.line(witness_text(&g, &test));
    if let Some(i) = index {
        r.line(format!("index {i}, normal {}", normal.unwrap_or(false)));
    }
    Ok(r)
}

/// Classes with the identity's class first, then by sorted labels.
fn ordered_classes(g: &FiniteGroup, classes: Vec<Subset>) -> Vec<Vec<String>> {
    let mut keyed: Vec<(bool, Vec<String>)> = classes
        .iter()
        .map(|c| (!c.contains(g.identity()), labels(g, c)))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, l)| l).collect()
}

pub fn reidemeister(name: &str, twist: &Twist) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let (phi, desc) = twist.resolve(&g)?;
    let mut r = twist.echo(Report::new("reidemeister").input("group", name));
    let p = twisted::twisted_partition(&g, &phi)?;
    let classes = ordered_classes(&g, p.classes.into_iter().map(|c| c.members).collect());
    r.result = json!({
        "twist": desc,
        "reidemeister": p.reidemeister,
        "classes": classes,
    });
    r.line(format!("group {name}, twist {desc}"));
    r.line(format!("R = {}", p.reidemeister));
    for c in &classes {
        r.line(format!("  {}", braces(c)));
    }
    Ok(r)
}

pub fn scan(name: &str) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let mut r = Report::new("scan").input("group", name);
    let s = twisted::scan_all_inner(&g)?;
    let mut rows = Vec::new();
    r.line(format!(
        "group {name}: inner unit classes over conjugacy class representatives"
    ));
    let mut reps: Vec<Elem> = s.representatives.clone();
    reps.sort_by_key(|&h| (h != g.identity(), g.label(h)));
    for h in reps {
        let class = twisted::inner_unit_class(&g, h);
        let test = g.subgroup_test(&class);
        let robinson = twisted::robinson_criterion(&g, h)?;
        let members = labels(&g, &class);
        r.line(format!(
            "  h = {}: {} -> {}; h outside <[G,h]>: {robinson}",
            g.label(h),
            braces(&members),
            witness_text(&g, &test)
        ));
        rows.push(json!({
            "h": g.label(h),
            "class": members,
            "subgroup": test.is_subgroup(),
            "witness": witness_json(&g, &test),
            "robinson": robinson,
        }));
    }
    r.line(format!("all subgroups: {}", s.all_subgroups));
    r.line(match s.nilpotency_class {
        Some(c) => format!("nilpotency class: {c}"),
        None => "nilpotency class: not nilpotent".into(),
    });
    r.result = json!({
        "representatives": rows,
        "all_subgroups": s.all_subgroups,
        "nilpotency_class": s.nilpotency_class,
    });
    Ok(r)
}

fn terminal_json(g: &FiniteGroup, t: &SeriesTerminal) -> Value {
    match t {
        SeriesTerminal::ReachedTrivial { central } => {
            json!({"kind": "reached_trivial", "central": g.label(*central)})
        }
        SeriesTerminal::ClassNotSubgroup {
            step,
            h,
            class,
            witness,
        } => json!({
            "kind": "class_not_subgroup",
            "step": step,
            "h": g.label(*h),
            "class": labels(g, class),
            "witness": witness_json(g, witness),
        }),
        SeriesTerminal::ChooserExhausted { step } => {
            json!({"kind": "chooser_exhausted", "step": step})
        }
        SeriesTerminal::Completed => json!({"kind": "completed"}),
        SeriesTerminal::StepCeiling => json!({"kind": "step_ceiling"}),
    }
}

fn terminal_text(g: &FiniteGroup, t: &SeriesTerminal) -> String {
    match t {
        SeriesTerminal::ReachedTrivial { central } => {
            format!("reached {{e}}; {} is central", g.label(*central))
        }
        SeriesTerminal::ClassNotSubgroup {
            step, h, witness, ..
        } => format!(
            "stopped at step {step}: [e]_{} is {}",
            g.label(*h),
            witness_text(g, witness)
        ),
        SeriesTerminal::ChooserExhausted { step } => format!("no choice supplied for step {step}"),
        SeriesTerminal::Completed => "every supplied element used".into(),
        SeriesTerminal::StepCeiling => "step ceiling reached".into(),
    }
}

pub fn series(name: &str, choose: Option<&str>, chain: Option<&str>) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let mut r = Report::new("series").input("group", name);
    let mut starts_with_g = true;
    let report = match (choose, chain) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "give either --choose or --chain, not both".into(),
            ));
        }
        (None, Some(values)) => {
            r = r.input("chain", values);
            starts_with_g = false;
            twisted::commutator_chain(&g, &element_list(&g, values)?)?
        }
        (choose, None) => {
            let mut chooser: Box<dyn Chooser> = match choose {
                Some(list) => {
                    r = r.input("choose", list);
                    Box::new(Sequence(element_list(&g, list)?))
                }
                None => Box::new(MinElement),
            };
            twisted::descending_unit_class_series(&g, chooser.as_mut())?
        }
    };
    let chain: Vec<Vec<String>> = report.chain.iter().map(|s| labels(&g, s)).collect();
    let chosen: Vec<String> = report.chosen.iter().map(|&h| g.label(h)).collect();
    r.line(format!("group {name}"));
    for (i, term) in chain.iter().enumerate() {
        let via = match (starts_with_g, i) {
            (true, 0) => "G".to_string(),
            (true, i) => format!("[e]_{}", chosen[i - 1]),
            (false, i) => format!("[e]_{}", chosen[i]),
        };
        r.line(format!(
            "  {i}: {via} = {} (order {})",
            braces(term),
            term.len()
        ));
    }
    r.line(terminal_text(&g, &report.terminal));
    r.result = json!({
        "chosen": chosen,
        "chain": chain,
        "terminal": terminal_json(&g, &report.terminal),
    });
    Ok(r)
}

pub fn endo_table(name: &str) -> Result<Report> {
    let g = twistclass::catalog::catalog(name)?;
    let mut r = Report::new("endo-table").input("group", name);
    let endos = enumerate_homomorphisms(&g)?;
    let census = endo_orbit_census(&g)?;
    let mut orbit_of = vec![0; endos.len()];
    for (i, o) in census.iter().enumerate() {
        for &m in &o.members {
            orbit_of[m] = i;
        }
    }
    r.line(format!(
        "group {name}: {} endomorphisms, {} automorphisms",
        endos.len(),
        endos.iter().filter(|m| m.is_automorphism()).count()
    ));
    let mut rows = Vec::new();
    for (i, phi) in endos.iter().enumerate() {
        let report = twisted::unit_class_subgroup_report(&g, phi)?;
        let rn = twisted::reidemeister_number(&g, phi)?;
        let kind = if phi.is_automorphism() {
            "automorphism"
        } else {
            "endomorphism"
        };
        let members = labels(&g, &report.class);
        r.line(format!(
            "  #{i} {} [{kind}, orbit {}]: [e] = {}, {}, R = {rn}",
            phi.describe(&g),
            orbit_of[i],
            braces(&members),
            if report.is_subgroup() {
                "subgroup"
            } else {
                "not a subgroup"
            },
        ));
        rows.push(json!({
            "index": i,
            "map": phi.describe(&g),
            "kind": kind,
            "orbit": orbit_of[i],
            "unit_class": members,
            "subgroup": report.is_subgroup(),
            "reidemeister": rn,
        }));
    }
    let orbits: Vec<Value> = census
        .iter()
        .map(|o| json!({"size": o.size, "kind": o.kind, "members": o.members}))
        .collect();
    let sizes: Vec<String> = census.iter().map(|o| o.size.to_string()).collect();
    r.line(format!("orbit sizes: {}", sizes.join(" ")));
    r.result = json!({"maps": rows, "orbits": orbits});
    Ok(r)
}

pub fn verify(only: Option<&str>, opts: &ClaimOptions, timing: bool) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("verify-paper");
    if let Some(o) = only {
        r = r.input("only", o);
    }
    r = r
        .input("seed", opts.seed)
        .input("n22_box", opts.n22_box)
        .input("n23_box", opts.n23_box)
        .input("wreath_samples", opts.wreath_samples as u64);
    let claims = run_claims(only, opts)?;
    r.claims = claims.iter().map(ClaimRow::from).collect();
    let passed = claims.iter().filter(|c| c.pass).count();
    let mut topics: Vec<&str> = claims.iter().map(|c| c.topic).collect();
    topics.dedup();
    for c in &claims {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        if c.pass {
            r.line(format!("{mark} {} [{}]: {}", c.anchor, c.topic, c.actual));
        } else {
            r.line(format!(
                "{mark} {} [{}]: expected {}, got {}",
                c.anchor, c.topic, c.expected, c.actual
            ));
        }
    }
    r.line(format!("{passed}/{} claims pass", claims.len()));
    if timing {
        r.line(format!("elapsed: {:.3} s", start.elapsed().as_secs_f64()));
    }
    r.result = json!({
        "topics": topics,
        "total": claims.len(),
        "passed": passed,
        "failed": claims.len() - passed,
    });
    Ok(r)
}

pub fn topic_names() -> String {
    TOPICS.join(", ")
}
