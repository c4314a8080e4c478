//! Tabulated Euler characteristics and the comparison against computed maps.
//!
//! A row names a tuple, a map type and the expected characteristic as a
//! function of `ell`. Rows written `[x, y, z]` stand for the three cyclic
//! rotations of the tuple. Cells without a row must fail the mod-4 filter.

use std::collections::BTreeMap;

use crate::catalog::Family;
use crate::error::Result;
use crate::group::{Element, GroupInstance};
use crate::maps::{self, Classification, MapType};
use crate::triples::{GenTuple, TupleKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub map_type: MapType,
    pub tuple: GenTuple,
    pub chi: i128,
    pub label: Option<&'static str>,
}

struct Rows<'g> {
    g: &'g GroupInstance,
    out: Vec<TableRow>,
}

impl<'g> Rows<'g> {
    fn el(&self, w: &str) -> Element {
        self.g.parse_word(w).expect("table word")
    }

    fn push(&mut self, kind: TupleKind, mt: MapType, parts: [Element; 3], chi: i128) {
        self.out.push(TableRow {
            map_type: mt,
            tuple: GenTuple { kind, parts: parts.to_vec() },
            chi,
            label: None,
        });
    }

    fn words(&self, w: &str) -> [Element; 3] {
        let v: Vec<Element> = w.split(',').map(|s| self.el(s)).collect();
        [v[0], v[1], v[2]]
    }

    fn rev(&mut self, mt: MapType, w: &str, chi: i128) {
        let p = self.words(w);
        self.push(TupleKind::Reversing, mt, p, chi);
    }

    fn rev_el(&mut self, mt: MapType, p: [Element; 3], chi: i128) {
        self.push(TupleKind::Reversing, mt, p, chi);
    }

    /// `[x, y, z]`: all three rotations.
    fn rev_rot(&mut self, mt: MapType, p: [Element; 3], chi: i128) {
        let [x, y, z] = p;
        for q in [[x, y, z], [z, x, y], [y, z, x]] {
            self.push(TupleKind::Reversing, mt, q, chi);
        }
    }

    fn reg(&mut self, w: &str, chi: i128, label: &'static str) {
        let p = self.words(w);
        self.push(TupleKind::Regular, MapType::Type1, p, chi);
        self.out.last_mut().unwrap().label = Some(label);
    }

    fn rot(&mut self, alpha: &str, z: &str, star: i128, p: i128) {
        let parts = vec![self.el(alpha), self.el(z)];
        for (mt, chi) in [(MapType::Type2StarEx, star), (MapType::Type2PEx, p)] {
            self.out.push(TableRow {
                map_type: mt,
                tuple: GenTuple { kind: TupleKind::RotaryPair, parts: parts.clone() },
                chi,
                label: None,
            });
        }
    }
}

fn pow2(k: u32) -> i128 {
    1i128 << k
}

/// The tabulated rows for `g`.
pub fn rows(g: &GroupInstance) -> Vec<TableRow> {
    use MapType::{Type2P as P, Type2Star as S};
    let l = g.ell();
    let n = i128::from(g.order());
    let ord = |u: Element| i128::from(g.element_order(u));
    let mut r = Rows { g, out: Vec::new() };
    let a0 = format!("a^{}", g.a0_exponent());
    match g.descriptor().family() {
        Family::CyclicTimesZ2 if l == 1 => {
            r.rev(S, "a,a*b,b", 1);
            let p = r.words("a,b,b");
            r.rev_rot(S, p, 2);
            r.rev(P, "a,a,b", 2);
            r.reg("a,a*b,b", 1, "EM1(2)");
            r.reg("a,b,b", 2, "EM5(2)");
            r.reg("b,b,a", 2, "EM6(2)");
            r.rot("a", "b", 2, 2);
        }
        Family::ElementaryAbelian8 => {
            r.rev(S, "a,b,c", 2);
            r.reg("a,b,c", 2, "M2,2(2)");
        }
        Family::Cyclic => r.rot("a", &a0, 1, 2 - pow2(l - 1)),
        Family::CyclicTimesZ2 => r.rot("a", "b", 2, 4 - pow2(l)),
        Family::Modular => r.rot("a", "b", 2 - pow2(l - 1), 4 - pow2(l)),
        Family::SemiDihedral => {
            r.rot("a", "b", 4 - pow2(l), 2 - pow2(l - 1));
            r.rot("a*b", "b", 2 - pow2(l - 1), 2 - pow2(l - 1));
        }
        Family::Dihedral => {
            let (b, ab, a0e) = (r.el("b"), r.el("a*b"), g.a0());
            r.rev_rot(S, [b, ab, a0e], 1);
            r.rev_el(P, [b, ab, a0e], 2 - pow2(l));
            r.rev_el(P, [a0e, b, ab], 0);
            r.rev_el(P, [ab, a0e, b], 0);
            for x in 0..(1i64 << (l - 1)) {
                let a2x = g.a_pow(2 * x);
                let w = g.mul(a2x, b);
                r.rev_rot(S, [b, ab, w], 2 - pow2(l) + pow2(l) / ord(a2x));
                r.rev_el(P, [b, ab, w], 2 - pow2(l));
                r.rev_el(P, [ab, w, b], 2 - pow2(l));
                let a2x2 = g.a_pow(2 * x - 2);
                r.rev_el(P, [w, b, ab], n / (2 * ord(a2x)) - pow2(l) + n / (2 * ord(a2x2)));
            }
            r.reg(&format!("b,a*b,{a0}"), 1, "EM1(2^ell)");
            r.reg(&format!("{a0},b,a*b"), 1, "EM2(2^ell)");
            r.reg(&format!("b,a*b,{a0}*b"), 2 - pow2(l - 1), "EM4(2^ell)");
            r.rot("a", "b", 4 - pow2(l), 2);
            r.rot("a*b", "b", 2, 2);
        }
        Family::QuaternionCentralZ4 if l == 2 => {
            r.rev(S, "a*d,a*c*d,c*d", -2);
        }
        Family::QuaternionCentralZ4 => {
            let w = g.mul(g.a_pow(1 << (l - 2)), r.el("d"));
            let (acd, cd) = (r.el("a*c*d"), r.el("c*d"));
            r.rev_rot(S, [w, cd, acd], 2 - pow2(l));
            r.rev_el(P, [w, acd, cd], -pow2(l));
            r.rev_el(P, [cd, w, acd], -pow2(l));
            r.rev_el(P, [acd, cd, w], 4 - pow2(l + 1));
        }
        family @ (Family::DihedralTimesZ2 | Family::DihedralSemiZ2) => {
            let (b, ab, c) = (r.el("b"), r.el("a*b"), r.el("c"));
            if family == Family::DihedralTimesZ2 {
                r.rev_rot(S, [b, ab, c], 2);
                r.rev_el(P, [b, ab, c], 4 - pow2(l + 1));
                r.rev_el(P, [c, b, ab], 0);
                r.rev_el(P, [ab, c, b], 0);
                r.reg("b,a*b,c", 2, "2^ell-dipole");
                r.reg("c,b,a*b", 2, "2^ell-cycle");
                r.reg("b,a*b,b*c", 4 - pow2(l), "excluded");
            } else {
                r.rev_rot(S, [b, ab, c], 2 - pow2(l - 1));
                r.rev_rot(S, [ab, b, c], 2 - pow2(l - 1));
                r.rev_el(P, [b, ab, c], 4 - pow2(l + 1));
                r.rev_el(P, [ab, b, c], 4 - pow2(l + 1));
                r.rev_el(P, [c, b, ab], 0);
                r.rev_el(P, [b, c, ab], 0);
                // |abc| = 4, so <ab, c> has order 8
                r.rev_el(P, [ab, c, b], -pow2(l));
                r.rev_el(P, [c, ab, b], -pow2(l));
                r.reg("b,a*b,c", 2 - pow2(l - 1), "core-free");
                r.reg("c,a*b,b", 2 - pow2(l - 1), "core-free");
                r.reg("b,a*b,b*c", 4 - pow2(l), "excluded");
            }
            // |a^k c| = max(|a^k|, 2)
            let ord_c = |k: i64| ord(g.a_pow(k)).max(2);
            let bc = r.el("b*c");
            for x in 0..(1i64 << (l - 2)) {
                let w = g.mul(g.a_pow(2 * x), bc);
                let big = pow2(l + 2);
                r.rev_rot(S, [b, ab, w], 4 - pow2(l + 1) + big / (2 * ord_c(2 * x)));
                r.rev_el(P, [b, ab, w], 4 - pow2(l + 1));
                r.rev_el(P, [ab, w, b], 4 - pow2(l + 1));
                r.rev_el(
                    P,
                    [w, b, ab],
                    big / (2 * ord_c(2 * x)) - pow2(l + 1) + big / (2 * ord_c(2 * x - 2)),
                );
            }
        }
        Family::Quaternion => {}
    }
    r.out
}

/// Outcome of comparing a classification with the table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableCheck {
    pub rows: usize,
    /// Rows whose tuple is invalid, whose value differs, or which share a
    /// cell with another row.
    pub mismatches: Vec<String>,
    /// Computed cells without a row that survive the filter.
    pub unlisted_survivors: Vec<String>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.unlisted_survivors.is_empty()
    }
}

/// Compares every row with the computed value and checks that unlisted
/// cells are filtered out.
pub fn check(g: &GroupInstance, classification: &Classification) -> Result<TableCheck> {
    let table = rows(g);
    let mut report = TableCheck {
        rows: table.len(),
        ..TableCheck::default()
    };
    let mut cells: BTreeMap<(TupleKind, usize, MapType), String> = BTreeMap::new();
    for row in &table {
        let shown = format!("{} {}", row.map_type, row.tuple.display(g));
        if let Err(e) = row.tuple.validate(g) {
            report.mismatches.push(format!("{shown}: {e}"));
            continue;
        }
        let computed = maps::realize(g, &row.tuple, row.map_type)?.chi;
        if computed != row.chi {
            report
                .mismatches
                .push(format!("{shown}: table {} computed {computed}", row.chi));
        }
        let kind = row.tuple.kind;
        let Some(class) = classification
            .partition(kind)
            .and_then(|p| p.class_of(g, &row.tuple))
        else {
            report.mismatches.push(format!("{shown}: tuple not in any orbit"));
            continue;
        };
        if let Some(prev) = cells.insert((kind, class, row.map_type), shown.clone()) {
            report
                .mismatches
                .push(format!("{shown}: same orbit as {prev}"));
        }
    }
    for rec in &classification.records {
        let key = (rec.tuple.kind, rec.orbit.unwrap_or(usize::MAX), rec.map_type);
        if !cells.contains_key(&key) && rec.passes_filter {
            report.unlisted_survivors.push(format!(
                "{} {} chi = {}",
                rec.map_type,
                rec.tuple.display(g),
                rec.chi
            ));
        }
    }
    Ok(report)
}
