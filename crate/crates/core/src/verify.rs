//! Self-verification: every computed object is checked against closed forms,
//! listed representatives, tables and independent search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aut::{self, closed_form_aut_order, explicit_aut, Automorphism};
use crate::catalog::{self, Family, FamilyDescriptor};
use crate::charfree;
use crate::error::Result;
use crate::group::{Element, GroupInstance};
use crate::maps::{self, chi_form, ChiForm};
use crate::representatives;
use crate::tables;
use crate::triples::{self, expected_orbit_count, GenTuple, TupleKind};

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

impl Check {
    pub fn compare(name: impl Into<String>, expected: impl Display, computed: impl Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Check {
            name: name.into(),
            passed: expected == computed,
            expected,
            computed,
        }
    }

    /// A check whose failure detail is a list of offending items.
    pub fn empty_list(name: impl Into<String>, offending: &[String]) -> Self {
        Check {
            name: name.into(),
            passed: offending.is_empty(),
            expected: "none".into(),
            computed: if offending.is_empty() {
                "none".into()
            } else {
                offending.join("; ")
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub group: Option<FamilyDescriptor>,
    pub label: String,
    pub checks: Vec<Check>,
    /// Orbit counts per tuple kind, when computed.
    pub orbits: BTreeMap<TupleKind, usize>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Cross-check against exhaustive search where the gate allows.
    pub oracle: bool,
    pub seed: u64,
    /// Random triples for the associativity sample.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle: false,
            seed: 0,
            samples: 10_000,
        }
    }
}

/// Largest `ell` at which table rows are checked without enumeration.
pub const TABLE_FORMULA_MAX_ELL: u32 = 12;

fn involution_count(desc: FamilyDescriptor) -> u64 {
    let l = desc.effective_ell();
    let p = |k: u32| 1u64 << k;
    match desc.family() {
        Family::Cyclic | Family::Quaternion => 1,
        Family::CyclicTimesZ2 | Family::Modular => 3,
        Family::Dihedral => 1 + p(l),
        Family::SemiDihedral => 1 + p(l - 1),
        Family::QuaternionCentralZ4 => 3 + p(l),
        Family::DihedralTimesZ2 => 3 + p(l + 1),
        Family::DihedralSemiZ2 => 3 + p(l) + p(l - 1),
        Family::ElementaryAbelian8 => 7,
    }
}

fn random_element(g: &GroupInstance, rng: &mut ChaCha8Rng) -> Element {
    let mut exps = vec![rng.gen_range(0..g.modulus()) as u32];
    exps.extend((0..g.rank()).map(|_| rng.gen_range(0..2u32)));
    g.element(&exps).expect("random normal form")
}

/// Runs every applicable check on one group.
pub fn verify_group(g: &GroupInstance, opts: &VerifyOptions) -> Result<GroupReport> {
    let desc = g.descriptor();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (desc.order() << 8) ^ desc.family() as u64);
    let mut checks = vec![Check::compare("construction", "relations hold", "relations hold")];
    let mut orbits = BTreeMap::new();

    let mut bad = 0usize;
    for _ in 0..opts.samples {
        let (x, y, z) = (
            random_element(g, &mut rng),
            random_element(g, &mut rng),
            random_element(g, &mut rng),
        );
        if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
            bad += 1;
        }
    }
    checks.push(Check::compare("associativity sample failures", 0, bad));
    checks.push(Check::compare(
        "generators generate",
        g.order(),
        g.subgroup_order(&g.generators()),
    ));
    let aut = explicit_aut(g)?;
    checks.push(Check::compare(
        "Aut order (closed form)",
        closed_form_aut_order(desc),
        aut.order(),
    ));

    if !g.is_exhaustive() {
        if g.ell() <= TABLE_FORMULA_MAX_ELL {
            checks.extend(table_formula_checks(g)?);
        }
        return Ok(GroupReport {
            group: Some(desc),
            label: desc.short_name(),
            checks,
            orbits,
        });
    }

    // element level
    let elements = g.elements()?;
    let distinct: BTreeSet<Element> = elements.iter().copied().collect();
    checks.push(Check::compare("normal forms", g.order(), distinct.len()));
    let round_trip = elements
        .iter()
        .enumerate()
        .all(|(i, &u)| g.index_of(u) == i && g.element_at(i) == u);
    checks.push(Check::compare("dense index round trip", true, round_trip));
    checks.push(Check::compare(
        "closure of generators",
        g.order(),
        g.closure(&g.generators())?.order,
    ));
    if g.order() <= 64 {
        let mut failures = 0;
        for &x in &elements {
            if g.mul(x, g.inv(x)) != Element::IDENTITY || g.mul(Element::IDENTITY, x) != x {
                failures += 1;
            }
            for &y in &elements {
                for &z in &elements {
                    if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(Check::compare("exhaustive group axioms failures", 0, failures));
    }
    let mut mismatched = Vec::new();
    for _ in 0..200 {
        let k = rng.gen_range(1..=3);
        let gens: Vec<Element> = (0..k).map(|_| random_element(g, &mut rng)).collect();
        let fast = g.subgroup_order(&gens);
        let slow = g.closure(&gens)?.order;
        if fast != slow {
            mismatched.push(format!("{gens:?}: {fast} vs {slow}"));
        }
    }
    checks.push(Check::empty_list("subgroup order vs closure", &mismatched));
    checks.push(Check::compare(
        "involutions",
        involution_count(desc),
        g.involutions()?.len(),
    ));
    let witness = g.maximal_subgroup_witness()?;
    let shape = if witness.is_cyclic(g) || witness.is_dihedral(g) {
        "cyclic or dihedral"
    } else {
        "neither"
    };
    checks.push(Check::compare(
        "maximal subgroup witness",
        "index 2, cyclic or dihedral",
        format!("index {}, {shape}", g.order() / witness.order),
    ));

    // automorphisms
    let materialized = aut.materialize(g)?;
    checks.push(Check::compare(
        "Aut closure size",
        closed_form_aut_order(desc),
        materialized.len(),
    ));
    if opts.oracle && g.order() <= aut::BRUTE_FORCE_MAX_ORDER {
        let brute = aut::brute_force_automorphisms(g)?;
        checks.push(Check::compare(
            "Aut equals exhaustive search",
            brute.len(),
            if brute == materialized {
                brute.len().to_string()
            } else {
                format!("{} (different sets)", materialized.len())
            },
        ));
    }

    // tuples, orbits and maps
    let classification = maps::classify_full(g)?;
    for kind in TupleKind::ALL {
        let partition = classification.partition(kind).expect("every kind is classified");
        orbits.insert(kind, partition.len());
        checks.push(Check::compare(
            format!("{kind} orbits"),
            expected_orbit_count(desc, kind),
            partition.len(),
        ));
        checks.push(Check::compare(
            format!("{kind} orbits semiregular"),
            true,
            partition.is_semiregular(),
        ));
        let listed = representatives::listed(g, kind)?;
        let report = triples::check_transversal(g, partition, &listed);
        let mut problems: Vec<String> = Vec::new();
        problems.extend(report.invalid.iter().map(|t| format!("invalid {}", t.display(g))));
        problems.extend(
            report
                .collisions
                .iter()
                .map(|(s, t)| format!("{} ~ {}", s.display(g), t.display(g))),
        );
        problems.extend(report.uncovered.iter().map(|t| format!("uncovered {}", t.display(g))));
        checks.push(Check::empty_list(format!("{kind} representatives"), &problems));
        if opts.oracle {
            let tuples = triples::enumerate(g, kind)?;
            let dsu = triples::orbit_partition_union_find(g, &aut, kind, &tuples)?;
            checks.push(Check::compare(
                format!("{kind} union-find partition agrees"),
                true,
                &dsu == partition,
            ));
        }
    }
    let from_reversing: BTreeSet<_> = representatives::regular_from_reversing(g).into_iter().collect();
    let regular: BTreeSet<_> = representatives::regular(g).into_iter().collect();
    checks.push(Check::compare(
        "regular representatives are the commuting reversing ones",
        true,
        from_reversing == regular,
    ));

    let table = tables::check(g, &classification)?;
    checks.push(Check::empty_list("table rows", &table.mismatches));
    checks.push(Check::empty_list("unlisted cells filtered", &table.unlisted_survivors));
    let other: Vec<String> = classification
        .survivors()
        .filter(|r| chi_form(r.chi) == ChiForm::Other)
        .map(|r| format!("{} {} chi = {}", r.map_type, r.tuple.display(g), r.chi))
        .collect();
    checks.push(Check::empty_list("surviving chi forms", &other));

    // Aut-invariance of the realized maps
    let mut drift = Vec::new();
    for rec in &classification.records {
        for _ in 0..10 {
            let f = &materialized[rng.gen_range(0..materialized.len())];
            let moved = GenTuple {
                kind: rec.tuple.kind,
                parts: rec.tuple.parts.iter().map(|&u| f.apply(g, u)).collect(),
            };
            let r = maps::realize(g, &moved, rec.map_type)?;
            if (r.chi, r.vertices, r.edges, r.faces) != (rec.chi, rec.vertices, rec.edges, rec.faces) {
                drift.push(format!("{} {}", rec.map_type, rec.tuple.display(g)));
            }
        }
    }
    checks.push(Check::empty_list("maps invariant under Aut", &drift));

    let flags = catalog::feature_flags(g)?;
    let tab = catalog::tabulated_feature_flags(desc);
    checks.push(Check::compare("feature flags", format!("{tab:?}"), format!("{flags:?}")));

    checks.extend(family_checks(g, &materialized)?);
    Ok(GroupReport {
        group: Some(desc),
        label: desc.short_name(),
        checks,
        orbits,
    })
}

/// Table rows evaluated by formula only, for `ell` beyond enumeration.
fn table_formula_checks(g: &GroupInstance) -> Result<Vec<Check>> {
    let mut mismatches = Vec::new();
    let mut other = Vec::new();
    for row in tables::rows(g) {
        let shown = format!("{} {}", row.map_type, row.tuple.display(g));
        match maps::realize(g, &row.tuple, row.map_type) {
            Ok(r) if r.chi == row.chi => {
                if r.passes_filter && chi_form(r.chi) == ChiForm::Other {
                    other.push(shown);
                }
            }
            Ok(r) => mismatches.push(format!("{shown}: table {} computed {}", row.chi, r.chi)),
            Err(e) => mismatches.push(format!("{shown}: {e}")),
        }
    }
    Ok(vec![
        Check::empty_list("table rows (formula)", &mismatches),
        Check::empty_list("surviving chi forms (formula)", &other),
    ])
}

fn family_checks(g: &GroupInstance, auts: &[Automorphism]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let l = g.ell();
    let el = |w: &str| g.parse_word(w).expect("word");
    match g.descriptor().family() {
        Family::QuaternionCentralZ4 if l <= 4 => {
            let elements = g.elements()?;
            let two_generated = elements
                .iter()
                .any(|&u| elements.iter().any(|&v| g.generates(&[u, v])));
            checks.push(Check::compare("2-generated", false, two_generated));

            let cd = el("c*d");
            let mut wrong = Vec::new();
            for w in [el(&format!("a^{}*d", 1 << (l - 2))), el(&format!("a^{}*d^-1", 1 << (l - 2)))] {
                for i in 0..g.modulus() as i64 {
                    for j in 0..g.modulus() as i64 {
                        let x = g.mul(g.a_pow(i), cd);
                        let y = g.mul(g.a_pow(j), cd);
                        if g.generates(&[w, x, y]) != ((i - j) % 2 != 0) {
                            wrong.push(format!("{} {i} {j}", g.word(w)));
                        }
                    }
                }
            }
            checks.push(Check::empty_list("generation iff i - j odd", &wrong));

            let commuting = triples::enumerate(g, TupleKind::Reversing)?
                .into_iter()
                .filter(|t| {
                    let p = &t.parts;
                    g.commute(p[0], p[1]) || g.commute(p[1], p[2]) || g.commute(p[0], p[2])
                })
                .count();
            checks.push(Check::compare("reversing triples with a commuting pair", 0, commuting));
        }
        family @ (Family::DihedralTimesZ2 | Family::DihedralSemiZ2) => {
            let a2 = g.closure(&[g.a_pow(2)])?;
            let cosets = g.cosets(&a2)?;
            let exponent_two = g.elements()?.iter().all(|&u| a2.contains(g.mul(u, u)));
            checks.push(Check::compare(
                "G/<a^2> elementary abelian of order 8",
                "8 true",
                format!("{} {exponent_two}", cosets.len()),
            ));
            if family == Family::DihedralTimesZ2 {
                let aut = explicit_aut(g)?;
                let pos = |n: &str| aut.names().iter().position(|x| x == n).expect("generator");
                let (tau, sigma) = (&aut.generators()[pos("tau")], &aut.generators()[pos("sigma")]);
                let ts = tau.compose(g, sigma);
                let tsts = ts.compose(g, &ts);
                checks.push(Check::compare(
                    "(tau sigma)^2",
                    format!("{:?}", vec![g.mul(g.a0(), g.a()), el("b"), el("c")]),
                    format!("{:?}", tsts.images()),
                ));
                let mut bad = Vec::new();
                for x in 0..(1i64 << (l - 2)) {
                    let ord = i128::from(g.element_order(g.mul(g.a_pow(2 * x), el("c"))));
                    let chi1 = 4 - (1i128 << (l + 1)) + (1i128 << (l + 2)) / (2 * ord);
                    if chi1.rem_euclid(4) != 0 {
                        bad.push(format!("x = {x}: {chi1}"));
                    }
                }
                checks.push(Check::empty_list("case iii.2 values divisible by 4", &bad));
            } else {
                if l <= 4 {
                    let b = el("b");
                    let mut mixed = 0;
                    for f in auts {
                        for i in (0..g.modulus() as i64).step_by(2) {
                            let img = f.apply(g, g.mul(g.a_pow(i), b));
                            if img.tail_bit(0) && !img.tail_bit(1) && img.a_exponent() % 2 == 1 {
                                mixed += 1;
                            }
                        }
                    }
                    checks.push(Check::compare("Aut mixes a^(even)b with a^(odd)b", 0, mixed));
                }
                let sub = |w: &[&str]| g.closure(&w.iter().map(|s| el(s)).collect::<Vec<_>>());
                let types = format!(
                    "{} {} {}",
                    sub(&["a", "b"])?.is_dihedral(g),
                    sub(&["a", "b*c"])?.is_semidihedral(g),
                    sub(&["a", "c"])?.is_modular(g)
                );
                checks.push(Check::compare(
                    "<a,b> dihedral, <a,bc> semidihedral, <a,c> modular",
                    "true true true",
                    types,
                ));
                let center = g.center()?;
                let derived = g.commutator_subgroup()?;
                checks.push(Check::compare(
                    "center",
                    format!("{:?}", vec![Element::IDENTITY, g.a0()]),
                    format!("{:?}", center.elements),
                ));
                let inside = center.elements.iter().all(|&u| derived.contains(u));
                checks.push(Check::compare("Z(G) <= G'", true, inside));
                checks.push(Check::compare(
                    "G/Z(G) presents D x Z2",
                    true,
                    double_cover_quotient(g, &center.elements),
                ));
            }
        }
        _ => {}
    }
    Ok(checks)
}

/// Whether `G/Z` satisfies the relations of `D_(2^ell) x Z2` on the images
/// of `a, b, c` and has the matching order.
fn double_cover_quotient(g: &GroupInstance, z: &[Element]) -> bool {
    let inz = |u: Element| z.contains(&u);
    let (a, b, c) = (g.a(), g.generators()[1], g.generators()[2]);
    let m = g.modulus() as i64;
    let bar_a_order = (1..=m).find(|&k| inz(g.pow(a, k))).unwrap_or(0);
    bar_a_order == m / 2
        && inz(g.mul(b, b))
        && inz(g.mul(c, c))
        && inz(g.mul(g.conj(a, b), a))
        && inz(g.mul(g.conj(a, c), g.inv(a)))
        && inz(g.commutator(b, c))
        && g.order() / z.len() as u64 == 2 * g.modulus()
}

/// Catalog-wide checks: listing, distinguishing invariants.
pub fn verify_catalog(max_ell: u32) -> Result<GroupReport> {
    let mut checks = Vec::new();
    let names = |n: u64| -> Vec<String> {
        catalog::descriptors_up_to(n)
            .into_iter()
            .map(|d| d.short_name())
            .collect()
    };
    checks.push(Check::compare("catalog up to order 4", "Z4, Z2^2", names(4).join(", ")));
    checks.push(Check::compare(
        "catalog up to order 8",
        "Z4, Z2^2, Z8, Z4xZ2, D8, Q8, Z2^3",
        names(8).join(", "),
    ));
    let mut by_order: BTreeMap<u64, Vec<(String, (u64, usize, u64, u64))>> = BTreeMap::new();
    for d in catalog::descriptors_up_to(1 << (max_ell + 2)) {
        if d.effective_ell() > max_ell {
            continue;
        }
        let g = catalog::build(d)?;
        let exponent = g.elements()?.iter().map(|&u| g.element_order(u)).max().unwrap_or(1);
        let inv = (
            g.order(),
            g.involutions()?.len(),
            g.center()?.order,
            exponent,
        );
        by_order.entry(g.order()).or_default().push((d.short_name(), inv));
    }
    let mut clashes = Vec::new();
    for rows in by_order.values() {
        for (i, (n1, v1)) in rows.iter().enumerate() {
            for (n2, v2) in &rows[i + 1..] {
                if v1 == v2 {
                    clashes.push(format!("{n1} and {n2}: {v1:?}"));
                }
            }
        }
    }
    checks.push(Check::empty_list("distinguishing invariants", &clashes));
    Ok(GroupReport {
        group: None,
        label: "catalog".into(),
        checks,
        orbits: BTreeMap::new(),
    })
}

/// `(d, x)`: `x^2` divides `2^(n d) - 1` for every `n`.
pub const SQUARE_DIVISOR_ROWS: [(u64, u64); 5] = [(6, 3), (20, 5), (21, 7), (110, 11), (136, 17)];

pub fn verify_charfree() -> Result<GroupReport> {
    let mut checks = Vec::new();
    for (d, x) in SQUARE_DIVISOR_ROWS {
        checks.push(Check::compare(
            format!("square divisor of 2^{d} - 1"),
            x,
            charfree::square_divisor_scan(d, 1000)?.map_or("none".into(), |w| w.to_string()),
        ));
        let mut bad = Vec::new();
        for n in 1..=(1000 / d) {
            match charfree::square_divisor_scan(n * d, x)? {
                Some(w) if w <= x => {}
                other => bad.push(format!("d = {}: {other:?}", n * d)),
            }
        }
        checks.push(Check::empty_list(format!("multiples of {d}"), &bad));
    }
    checks.push(Check::compare(
        "2^7 - 1 has no square divisor",
        "none",
        charfree::square_divisor_scan(7, 1000)?.map_or("none".into(), |w| w.to_string()),
    ));
    Ok(GroupReport {
        group: None,
        label: "square divisors".into(),
        checks,
        orbits: BTreeMap::new(),
    })
}
