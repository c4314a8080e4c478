//! Listed orbit representatives for each family.
//!
//! For reversing tuples most families use a rotation pattern
//! `(p, q, w), (w, p, q), (q, w, p)` over a family-dependent list of `w`.

use crate::catalog::Family;
use crate::error::Result;
use crate::group::{Element, GroupInstance};
use crate::triples::{GenTuple, TupleKind};

fn el(g: &GroupInstance, word: &str) -> Element {
    g.parse_word(word).expect("representative word")
}

fn tuple(g: &GroupInstance, kind: TupleKind, words: &[&str]) -> GenTuple {
    GenTuple {
        kind,
        parts: words.iter().map(|w| el(g, w)).collect(),
    }
}

fn rotations(kind: TupleKind, p: Element, q: Element, ws: &[Element]) -> Vec<GenTuple> {
    let mut out = Vec::new();
    for &w in ws {
        out.push(GenTuple { kind, parts: vec![p, q, w] });
        out.push(GenTuple { kind, parts: vec![w, p, q] });
        out.push(GenTuple { kind, parts: vec![q, w, p] });
    }
    out
}

/// `a^(2x) * tail` for `0 <= x < count`.
fn even_shifts(g: &GroupInstance, tail: Element, count: u64) -> Vec<Element> {
    (0..count)
        .map(|x| g.mul(g.a_pow(2 * x as i64), tail))
        .collect()
}

/// The reversing list.
pub fn reversing(g: &GroupInstance) -> Vec<GenTuple> {
    use TupleKind::Reversing as K;
    let l = g.ell();
    match g.descriptor().family() {
        Family::CyclicTimesZ2 if l == 1 => ["a,a*b,b", "a,b,b", "b,a,b", "b,b,a"]
            .iter()
            .map(|s| tuple(g, K, &s.split(',').collect::<Vec<_>>()))
            .collect(),
        Family::ElementaryAbelian8 => vec![tuple(g, K, &["a", "b", "c"])],
        Family::Dihedral => {
            let mut ws = vec![g.a0()];
            ws.extend(even_shifts(g, el(g, "b"), 1 << (l - 1)));
            rotations(K, el(g, "b"), el(g, "a*b"), &ws)
        }
        Family::QuaternionCentralZ4 if l == 2 => vec![tuple(g, K, &["a*d", "a*c*d", "c*d"])],
        Family::QuaternionCentralZ4 => {
            let w = g.mul(g.a_pow(1 << (l - 2)), el(g, "d"));
            rotations(K, w, el(g, "a*c*d"), &[el(g, "c*d")])
        }
        Family::DihedralTimesZ2 => {
            let mut ws = vec![el(g, "c")];
            ws.extend(even_shifts(g, el(g, "b*c"), 1 << (l - 2)));
            rotations(K, el(g, "b"), el(g, "a*b"), &ws)
        }
        Family::DihedralSemiZ2 => {
            let mut out: Vec<GenTuple> = [
                "b,a*b,c", "a*b,b,c", "c,b,a*b", "c,a*b,b", "a*b,c,b", "b,c,a*b",
            ]
            .iter()
            .map(|s| tuple(g, K, &s.split(',').collect::<Vec<_>>()))
            .collect();
            let ws = even_shifts(g, el(g, "b*c"), 1 << (l - 2));
            out.extend(rotations(K, el(g, "b"), el(g, "a*b"), &ws));
            out
        }
        _ => vec![],
    }
}

/// The regular list.
pub fn regular(g: &GroupInstance) -> Vec<GenTuple> {
    use TupleKind::Regular as K;
    let a0 = format!("a^{}", g.a0_exponent());
    let a0b = format!("{a0}*b");
    let rows: Vec<[&str; 3]> = match g.descriptor().family() {
        Family::CyclicTimesZ2 if g.ell() == 1 => {
            vec![["a", "a*b", "b"], ["a", "b", "b"], ["b", "b", "a"]]
        }
        Family::ElementaryAbelian8 => vec![["a", "b", "c"]],
        Family::Dihedral => vec![["b", "a*b", &a0], ["b", "a*b", &a0b], [&a0, "b", "a*b"]],
        Family::DihedralTimesZ2 => {
            vec![["b", "a*b", "c"], ["b", "a*b", "b*c"], ["c", "b", "a*b"]]
        }
        Family::DihedralSemiZ2 => {
            vec![["b", "a*b", "c"], ["c", "a*b", "b"], ["b", "a*b", "b*c"]]
        }
        _ => vec![],
    };
    rows.iter().map(|r| tuple(g, K, r)).collect()
}

/// The rotary-pair list.
pub fn rotary(g: &GroupInstance) -> Vec<GenTuple> {
    use TupleKind::RotaryPair as K;
    let a0 = format!("a^{}", g.a0_exponent());
    let rows: Vec<[&str; 2]> = match g.descriptor().family() {
        Family::Cyclic => vec![["a", &a0]],
        Family::CyclicTimesZ2 | Family::Modular => vec![["a", "b"]],
        Family::Dihedral | Family::SemiDihedral => vec![["a", "b"], ["a*b", "b"]],
        _ => vec![],
    };
    rows.iter().map(|r| tuple(g, K, r)).collect()
}

pub fn listed(g: &GroupInstance, kind: TupleKind) -> Result<Vec<GenTuple>> {
    Ok(match kind {
        TupleKind::Reversing => reversing(g),
        TupleKind::Regular => regular(g),
        TupleKind::RotaryPair => rotary(g),
    })
}

/// Reversing representatives that also satisfy the regular conditions.
pub fn regular_from_reversing(g: &GroupInstance) -> Vec<GenTuple> {
    reversing(g)
        .into_iter()
        .filter(|t| t.parts[0] != t.parts[2] && g.commute(t.parts[0], t.parts[2]))
        .map(|t| t.with_kind(TupleKind::Regular))
        .collect()
}
