//! Command-line front end. The bin is a thin wrapper around [`main_with_args`].
//!
//! Every command collects rows, then renders them as an aligned table, JSON
//! (`{schema_version, command, results}`) or CSV. Output carries no timings,
//! so the same arguments always produce the same bytes.
//!
//! Exit codes: 0 when everything requested passed, 1 on a verification
//! mismatch, 2 on usage or parameter errors.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::aut::{closed_form_aut_order, explicit_aut};
use crate::catalog::{self, tabulated_feature_flags, Family, FamilyDescriptor};
use crate::charfree;
use crate::error::{Error, Result};
use crate::group::{GroupInstance, EXHAUSTIVE_MAX_ELL};
use crate::maps::{self, chi_form, MapType};
use crate::triples::{self, expected_orbit_count, TupleKind};
use crate::verify::{self, GroupReport, VerifyOptions};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List catalog groups with order, |Aut| and admissible map kinds.
    Catalog,
    /// Automorphism group generators and order.
    Aut,
    /// Number of generating tuples of each kind.
    Triples,
    /// Aut-orbits of generating tuples with their representatives.
    Orbits,
    /// Every map from an orbit representative with V, E, F and chi.
    Maps,
    /// Run every check; exits 1 on any mismatch.
    Verify,
    /// Square divisors of 2^d - 1, or a squarefree test of n.
    Squarefree,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Catalog => "catalog",
            Command::Aut => "aut",
            Command::Triples => "triples",
            Command::Orbits => "orbits",
            Command::Maps => "maps",
            Command::Verify => "verify",
            Command::Squarefree => "squarefree",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Parsed command line.
#[derive(Clone, Debug, Parser)]
#[command(name = "twogroups", version, about = "Finite 2-groups with a cyclic or dihedral maximal subgroup")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Family name, e.g. Dihedral or DihedralTimesZ2.
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// Every family (plus Z2^3) over the `--ell` range.
    #[arg(long)]
    pub all: bool,
    /// `N` or an inclusive range `A..B`. Defaults to 2..4.
    #[arg(long = "ell", value_parser = parse_ell_range)]
    pub ell_range: Option<RangeInclusive<u32>>,
    /// Restrict to one tuple kind: reversing, regular or rotary.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<TupleKind>,
    /// Restrict maps to one type: 1, 2*, 2P, 2*ex or 2Pex.
    #[arg(long = "type", value_parser = parse_map_type)]
    pub map_type: Option<MapType>,
    /// Only maps that survive the mod-4 filter.
    #[arg(long)]
    pub survivors: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Cross-check against exhaustive search (ell <= 6 only).
    #[arg(long)]
    pub oracle: bool,
    /// Write the report here instead of stdout.
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// squarefree: exponent d of 2^d - 1.
    #[arg(long)]
    pub d: Option<u64>,
    /// squarefree: largest candidate x.
    #[arg(long, default_value_t = 1000)]
    pub x_max: u64,
    /// squarefree: integer to test.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<TupleKind, String> {
    TupleKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_map_type(s: &str) -> std::result::Result<MapType, String> {
    MapType::from_str(s).map_err(|e| e.to_string())
}

/// `"3"` or `"2..5"`.
pub fn parse_ell_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if r.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(r)
}

/// Exit status plus the rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            report: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => Outcome {
            code: if e.use_stderr() { 2 } else { 0 },
            report: e.render().to_string(),
        },
    }
}

/// Groups selected by `--family`/`--all` and `--ell`, deduplicated after
/// normalization.
pub fn selected_groups(config: &RunConfig) -> Result<Vec<FamilyDescriptor>> {
    let range = config.ell_range.clone().unwrap_or(2..=4);
    let families: Vec<Family> = match (config.family, config.all) {
        (Some(f), false) => vec![f],
        (None, true) => Family::ALL.to_vec(),
        (Some(_), true) => return Err(Error::Parse("--family and --all are exclusive".into())),
        (None, false) => return Err(Error::Parse("give --family or --all".into())),
    };
    let mut out = Vec::new();
    for family in families {
        match family.min_ell() {
            None => out.push(FamilyDescriptor::elementary_abelian8()),
            Some(min) => {
                let lo = if config.family.is_some() && range.start() == range.end() {
                    // a single explicit ell must itself be admissible
                    *range.start()
                } else {
                    (*range.start()).max(min)
                };
                for ell in lo..=*range.end() {
                    out.push(FamilyDescriptor::of(family, ell)?);
                }
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|d| seen.insert(*d));
    if out.is_empty() {
        return Err(Error::Parse(format!(
            "no admissible ell in {}..{}",
            range.start(),
            range.end()
        )));
    }
    Ok(out)
}

/// Runs one command.
pub fn run(config: &RunConfig) -> Outcome {
    if config.oracle {
        if let Some(r) = &config.ell_range {
            if *r.end() > EXHAUSTIVE_MAX_ELL {
                return Outcome::usage(format!(
                    "--oracle needs ell <= {EXHAUSTIVE_MAX_ELL}, got {}",
                    r.end()
                ));
            }
        }
    }
    let result = match config.command {
        Command::Squarefree => squarefree(config),
        command => match selected_groups(config) {
            Ok(descs) => match command {
                Command::Catalog => catalog_rows(&descs),
                Command::Aut => aut_rows(&descs),
                Command::Triples => triple_rows(config, &descs),
                Command::Orbits => orbit_rows(config, &descs),
                Command::Maps => map_rows(config, &descs),
                Command::Verify => verify_rows(config, &descs),
                Command::Squarefree => unreachable!(),
            },
            Err(e) => return Outcome::usage(e),
        },
    };
    match result {
        Ok(rows) => Outcome {
            code: if rows.passed { 0 } else { 1 },
            report: rows.render(config.command, config.format),
        },
        Err(e @ Error::InvariantViolation(_)) => Outcome {
            code: 1,
            report: format!("error: {e}\n"),
        },
        Err(e) => Outcome::usage(e),
    }
}

/// A cell of the report.
#[derive(Clone, Debug)]
enum Cell {
    Str(String),
    Int(i128),
    Bool(bool),
    Null,
    List(Vec<String>),
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Str(s) => json!(s),
            Cell::Int(n) => match i64::try_from(*n) {
                Ok(v) => json!(v),
                Err(_) => json!(n.to_string()),
            },
            Cell::Bool(b) => json!(b),
            Cell::Null => Value::Null,
            Cell::List(v) => json!(v),
        }
    }

    fn text(&self, list_sep: &str) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => if *b { "yes" } else { "no" }.into(),
            Cell::Null => String::new(),
            Cell::List(v) => v.join(list_sep),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

macro_rules! int_cell {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(n: $t) -> Self {
                Cell::Int(n as i128)
            }
        }
    )*};
}
int_cell!(i128, u128, u64, u32, usize, i64);

impl From<Option<u32>> for Cell {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Cell::Null, Cell::from)
    }
}

impl From<Vec<String>> for Cell {
    fn from(v: Vec<String>) -> Self {
        Cell::List(v)
    }
}

#[derive(Debug, Default)]
struct Rows {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Free text after the table (table format only).
    notes: Vec<String>,
    passed: bool,
}

impl Rows {
    fn new(headers: &[&'static str]) -> Self {
        Rows {
            headers: headers.to_vec(),
            passed: true,
            ..Rows::default()
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn render(&self, command: Command, format: Format) -> String {
        match format {
            Format::Json => {
                let results: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(r)
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command.name(),
                    "passed": self.passed,
                    "results": results,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                w.write_record(&self.headers).expect("csv");
                for r in &self.rows {
                    w.write_record(r.iter().map(|c| c.text(";"))).expect("csv");
                }
                String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")
            }
            Format::Table => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.text(", ")).collect())
                    .collect();
                let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                for r in &cells {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut out = String::new();
                let line = |out: &mut String, items: &mut dyn Iterator<Item = &str>| {
                    let parts: Vec<String> = items
                        .zip(&width)
                        .map(|(s, w)| format!("{s:<w$}", w = *w))
                        .collect();
                    let _ = writeln!(out, "{}", parts.join("  ").trim_end());
                };
                if !cells.is_empty() {
                    line(&mut out, &mut self.headers.iter().copied());
                    for r in &cells {
                        line(&mut out, &mut r.iter().map(String::as_str));
                    }
                }
                for n in &self.notes {
                    let _ = writeln!(out, "{n}");
                }
                out
            }
        }
    }
}

fn group_cells(d: &FamilyDescriptor) -> Vec<Cell> {
    vec![d.short_name().into(), d.family().name().into(), d.ell().into()]
}

fn catalog_rows(descs: &[FamilyDescriptor]) -> Result<Rows> {
    let mut rows = Rows::new(&[
        "group", "family", "ell", "order", "aut_order", "reversing", "regular", "rotary",
    ]);
    for d in descs {
        let f = tabulated_feature_flags(*d);
        let mut r = group_cells(d);
        r.extend([
            d.order().into(),
            closed_form_aut_order(*d).into(),
            f.reflexible_reversing.into(),
            f.regular.into(),
            f.chiral_rotary.into(),
        ]);
        rows.push(r);
    }
    Ok(rows)
}

fn aut_rows(descs: &[FamilyDescriptor]) -> Result<Rows> {
    let mut rows = Rows::new(&["group", "family", "ell", "aut_order", "generator", "images"]);
    for d in descs {
        let g = catalog::build(*d)?;
        let aut = explicit_aut(&g)?;
        for (name, f) in aut.names().iter().zip(aut.generators()) {
            let mut r = group_cells(d);
            r.extend([aut.order().into(), name.clone().into(), f.words(&g).into()]);
            rows.push(r);
        }
    }
    Ok(rows)
}

fn kinds(config: &RunConfig) -> Vec<TupleKind> {
    match config.kind {
        Some(k) => vec![k],
        None => TupleKind::ALL.to_vec(),
    }
}

fn gated(d: &FamilyDescriptor) -> Result<GroupInstance> {
    let g = catalog::build(*d)?;
    if !g.is_exhaustive() {
        return Err(Error::Scale {
            operation: "tuple enumeration",
            limit: format!("ell <= {EXHAUSTIVE_MAX_ELL}"),
        });
    }
    Ok(g)
}

fn triple_rows(config: &RunConfig, descs: &[FamilyDescriptor]) -> Result<Rows> {
    let mut rows = Rows::new(&["group", "family", "ell", "kind", "tuples"]);
    for d in descs {
        let g = gated(d)?;
        for kind in kinds(config) {
            let n = triples::enumerate(&g, kind)?.len();
            let mut r = group_cells(d);
            r.extend([kind.name().into(), n.into()]);
            rows.push(r);
        }
    }
    Ok(rows)
}

fn orbit_rows(config: &RunConfig, descs: &[FamilyDescriptor]) -> Result<Rows> {
    let mut rows = Rows::new(&[
        "group", "family", "ell", "kind", "orbit", "size", "representative",
    ]);
    for d in descs {
        let g = gated(d)?;
        for kind in kinds(config) {
            let p = triples::orbits(&g, kind)?;
            let expected = expected_orbit_count(*d, kind);
            if p.len() as u64 != expected || !p.is_semiregular() {
                rows.passed = false;
                rows.notes.push(format!(
                    "{} {}: expected {expected} orbits of size {}, computed {} (semiregular: {})",
                    d.short_name(),
                    kind.name(),
                    p.aut_order(),
                    p.len(),
                    p.is_semiregular()
                ));
            }
            for (i, c) in p.classes().iter().enumerate() {
                let mut r = group_cells(d);
                r.extend([
                    kind.name().into(),
                    i.into(),
                    c.size.into(),
                    c.representative.words(&g).into(),
                ]);
                rows.push(r);
            }
        }
    }
    Ok(rows)
}

fn map_rows(config: &RunConfig, descs: &[FamilyDescriptor]) -> Result<Rows> {
    let mut rows = Rows::new(&[
        "family", "ell", "group", "map_type", "tuple", "chi", "V", "E", "F", "passes_filter",
        "chi_form",
    ]);
    for d in descs {
        let g = gated(d)?;
        for rec in maps::classify(&g)? {
            if config.kind.is_some_and(|k| k != rec.tuple.kind)
                || config.map_type.is_some_and(|t| t != rec.map_type)
                || (config.survivors && !rec.passes_filter)
            {
                continue;
            }
            rows.push(vec![
                d.family().name().into(),
                d.ell().into(),
                d.short_name().into(),
                rec.map_type.label().into(),
                rec.tuple.words(&g).into(),
                rec.chi.into(),
                rec.vertices.into(),
                rec.edges.into(),
                rec.faces.into(),
                rec.passes_filter.into(),
                chi_form(rec.chi).to_string().into(),
            ]);
        }
    }
    Ok(rows)
}

fn verify_rows(config: &RunConfig, descs: &[FamilyDescriptor]) -> Result<Rows> {
    let opts = VerifyOptions {
        oracle: config.oracle,
        seed: config.seed,
        ..VerifyOptions::default()
    };
    let reports: Vec<GroupReport> = descs
        .par_iter()
        .map(|d| verify::verify_group(&catalog::build(*d)?, &opts))
        .collect::<Result<_>>()?;
    let mut all = reports;
    if config.all {
        let top = config.ell_range.as_ref().map_or(4, |r| *r.end());
        all.push(verify::verify_catalog(top.clamp(2, 5))?);
        all.push(verify::verify_charfree()?);
    }
    let mut rows = Rows::new(&[
        "label", "family", "ell", "checks", "failed", "passed", "orbits", "failures",
    ]);
    for rep in &all {
        let failures: Vec<String> = rep
            .failures()
            .map(|c| format!("{}: expected {}, computed {}", c.name, c.expected, c.computed))
            .collect();
        rows.passed &= failures.is_empty();
        let orbits: Vec<String> = rep
            .orbits
            .iter()
            .map(|(k, n)| format!("{}={n}", k.name()))
            .collect();
        rows.push(vec![
            rep.label.clone().into(),
            rep.group.map_or(Cell::Null, |d| d.family().name().into()),
            rep.group.map_or(Cell::Null, |d| d.ell().into()),
            rep.checks.len().into(),
            failures.len().into(),
            rep.passed().into(),
            orbits.into(),
            failures.clone().into(),
        ]);
        for f in failures {
            rows.notes.push(format!("{} FAILED {f}", rep.label));
        }
    }
    // one summary line per family, e.g. "orbits: 9 (ℓ=2), 15 (ℓ=3)"
    for family in Family::ALL {
        for kind in TupleKind::ALL {
            let found: Vec<(Option<u32>, usize)> = all
                .iter()
                .filter_map(|r| {
                    let d = r.group?;
                    (d.family() == family)
                        .then(|| r.orbits.get(&kind).map(|n| (d.ell(), *n)))
                        .flatten()
                })
                .collect();
            if found.iter().all(|&(_, n)| n == 0) {
                continue;
            }
            let counts: Vec<String> = found
                .into_iter()
                .map(|(ell, n)| match ell {
                    Some(l) => format!("{n} (ℓ={l})"),
                    None => n.to_string(),
                })
                .collect();
            if !counts.is_empty() {
                rows.notes.push(format!(
                    "{family} {} orbits: {}",
                    kind.name(),
                    counts.join(", ")
                ));
            }
        }
    }
    rows.notes.push(format!(
        "{}: {} of {} reports passed",
        if rows.passed { "PASS" } else { "FAIL" },
        all.iter().filter(|r| r.passed()).count(),
        all.len()
    ));
    Ok(rows)
}

fn squarefree(config: &RunConfig) -> Result<Rows> {
    match (config.d, config.n) {
        (Some(d), None) => {
            let mut rows = Rows::new(&["d", "x_max", "x"]);
            let x = charfree::square_divisor_scan(d, config.x_max)?;
            rows.push(vec![d.into(), config.x_max.into(), x.map_or(Cell::Null, Cell::from)]);
            Ok(rows)
        }
        (None, Some(n)) => {
            let mut rows = Rows::new(&["n", "squarefree"]);
            rows.push(vec![n.into(), charfree::is_squarefree(n)?.into()]);
            Ok(rows)
        }
        _ => Err(Error::Parse("squarefree takes exactly one of --d or --n".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        main_with_args(std::iter::once("twogroups").chain(args.split_whitespace()))
    }

    #[test]
    fn ell_ranges() {
        assert_eq!(parse_ell_range("3"), Ok(3..=3));
        assert_eq!(parse_ell_range("2..5"), Ok(2..=5));
        assert!(parse_ell_range("5..2").is_err());
        assert!(parse_ell_range("x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args("verify --family Dihedral --ell 7 --oracle").code, 2);
        assert_eq!(run_args("maps").code, 2);
        assert_eq!(run_args("maps --family Nope --ell 2").code, 2);
        assert_eq!(run_args("catalog --family SemiDihedral --ell 2").code, 2);
        assert_eq!(run_args("squarefree").code, 2);
    }

    #[test]
    fn quaternion_has_no_maps() {
        let out = run_args("maps --family Quaternion --ell 3");
        assert_eq!(out.code, 0);
        assert!(out.report.is_empty());
    }

    #[test]
    fn squarefree_witness() {
        let out = run_args("squarefree --d 21 --format csv");
        assert_eq!(out.code, 0);
        assert_eq!(out.report, "d,x_max,x\n21,1000,7\n");
    }

    #[test]
    fn json_is_versioned() {
        let out = run_args("catalog --family Dihedral --ell 2..3 --format json");
        let v: Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["command"], "catalog");
        assert_eq!(v["results"][1]["aut_order"], 32);
    }
}
