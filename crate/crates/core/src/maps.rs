//! Euler characteristics of the orientably-regular and reflexible maps
//! attached to generating tuples.
//!
//! Each tuple kind admits particular map types. For every type the map's
//! vertices, edges and faces are cosets of stabilizer subgroups, so
//! `V - E + F` is a sum of indices `|G| / |H|`.

use std::fmt;

use serde::Serialize;

use crate::catalog::FamilyDescriptor;
use crate::error::{Error, Result};
use crate::group::{Element, GroupInstance};
use crate::triples::{self, GenTuple, OrbitPartition, TupleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MapType {
    /// Regular maps from commuting-end triples.
    Type1,
    /// `2*` from reversing triples.
    Type2Star,
    /// `2^P` from reversing triples.
    Type2P,
    /// `2*ex` from rotary pairs.
    Type2StarEx,
    /// `2^P ex` from rotary pairs.
    Type2PEx,
}

impl MapType {
    pub const ALL: [MapType; 5] = [
        MapType::Type1,
        MapType::Type2Star,
        MapType::Type2P,
        MapType::Type2StarEx,
        MapType::Type2PEx,
    ];

    pub fn kind(self) -> TupleKind {
        match self {
            MapType::Type1 => TupleKind::Regular,
            MapType::Type2Star | MapType::Type2P => TupleKind::Reversing,
            MapType::Type2StarEx | MapType::Type2PEx => TupleKind::RotaryPair,
        }
    }

    pub fn for_kind(kind: TupleKind) -> &'static [MapType] {
        match kind {
            TupleKind::Regular => &[MapType::Type1],
            TupleKind::Reversing => &[MapType::Type2Star, MapType::Type2P],
            TupleKind::RotaryPair => &[MapType::Type2StarEx, MapType::Type2PEx],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MapType::Type1 => "1",
            MapType::Type2Star => "2*",
            MapType::Type2P => "2P",
            MapType::Type2StarEx => "2*ex",
            MapType::Type2PEx => "2Pex",
        }
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for MapType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '^' | '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let key = key.strip_prefix("type").unwrap_or(&key).to_string();
        match key.as_str() {
            "1" => Ok(MapType::Type1),
            "2*" | "2star" => Ok(MapType::Type2Star),
            "2p" => Ok(MapType::Type2P),
            "2*ex" | "2starex" => Ok(MapType::Type2StarEx),
            "2pex" => Ok(MapType::Type2PEx),
            _ => Err(Error::Parse(format!("unknown map type {s:?}"))),
        }
    }
}

/// A realized map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapRecord {
    pub group: FamilyDescriptor,
    pub map_type: MapType,
    pub tuple: GenTuple,
    /// Index of the tuple's orbit in the partition it came from.
    pub orbit: Option<usize>,
    pub chi: i128,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub passes_filter: bool,
    /// Type 1 only, within the exhaustive gate: whether `<x, z>` has
    /// trivial core in `G`.
    pub edge_core_free: Option<bool>,
}

/// Survives the mod-4 filter.
pub fn passes_filter(chi: i128) -> bool {
    chi.rem_euclid(4) != 0
}

fn check_type(t: &GenTuple, mt: MapType) -> Result<()> {
    let ok = match mt {
        // every regular triple is also reversing
        MapType::Type2Star | MapType::Type2P => t.kind != TupleKind::RotaryPair,
        _ => t.kind == mt.kind(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!(
            "type {mt} maps need {} tuples, got {}",
            mt.kind(),
            t.kind
        )))
    }
}

fn index(n: u64, h: u64) -> i128 {
    i128::from(n / h)
}

/// Euler characteristic from the closed formula for the map type.
pub fn chi(g: &GroupInstance, t: &GenTuple, mt: MapType) -> Result<i128> {
    check_type(t, mt)?;
    t.validate(g)?;
    let n = g.order();
    let sub = |gens: &[Element]| g.subgroup_order(gens);
    let p = &t.parts;
    let half = i128::from(n / 2);
    Ok(match mt {
        MapType::Type2Star => {
            index(n, sub(&[p[0], p[1]])) - half
                + index(n, sub(&[p[0], p[2]]))
                + index(n, sub(&[p[1], p[2]]))
        }
        MapType::Type2P => {
            let y_z = g.conj(p[1], p[2]);
            index(n, sub(&[p[0], p[1]])) - half + index(n, sub(&[p[0], y_z]))
        }
        MapType::Type1 => {
            index(n, sub(&[p[0], p[1]])) - i128::from(n / 4) + index(n, sub(&[p[1], p[2]]))
        }
        MapType::Type2StarEx => {
            let z_alpha = g.conj(p[1], p[0]);
            index(n, g.element_order(p[0])) - half + index(n, sub(&[p[1], z_alpha]))
        }
        MapType::Type2PEx => {
            index(n, g.element_order(p[0])) - half
                + index(n, g.element_order(g.mul(p[0], p[1])))
        }
    })
}

/// Counts vertices, edges and faces from stabilizer indices and checks
/// them against `chi`.
pub fn realize(g: &GroupInstance, t: &GenTuple, mt: MapType) -> Result<MapRecord> {
    let expected = chi(g, t, mt)?;
    let n = g.order();
    let sub = |gens: &[Element]| g.subgroup_order(gens);
    let p = &t.parts;
    let (v, e, f) = match mt {
        MapType::Type2Star => (
            n / sub(&[p[0], p[1]]),
            n / sub(&[p[2]]),
            n / sub(&[p[0], p[2]]) + n / sub(&[p[1], p[2]]),
        ),
        MapType::Type2P => (
            n / sub(&[p[0], p[1]]),
            n / sub(&[p[2]]),
            n / sub(&[p[0], g.conj(p[1], p[2])]),
        ),
        MapType::Type1 => (
            n / sub(&[p[0], p[1]]),
            n / sub(&[p[0], p[2]]),
            n / sub(&[p[1], p[2]]),
        ),
        MapType::Type2StarEx => (
            n / sub(&[p[0]]),
            n / sub(&[p[1]]),
            n / sub(&[p[1], g.conj(p[1], p[0])]),
        ),
        MapType::Type2PEx => (
            n / sub(&[p[0]]),
            n / sub(&[p[1]]),
            n / sub(&[g.mul(p[0], p[1])]),
        ),
    };
    let euler = i128::from(v) - i128::from(e) + i128::from(f);
    if euler != expected {
        return Err(Error::InvariantViolation(format!(
            "type {mt} map of {} on {}: V - E + F = {euler} but chi = {expected}",
            g.descriptor(),
            t.display(g)
        )));
    }
    let edge_core_free = if mt == MapType::Type1 && g.is_exhaustive() {
        Some(core_is_trivial(g, &[p[0], p[2]])?)
    } else {
        None
    };
    Ok(MapRecord {
        group: g.descriptor(),
        map_type: mt,
        tuple: t.clone(),
        orbit: None,
        chi: expected,
        vertices: v,
        edges: e,
        faces: f,
        passes_filter: passes_filter(expected),
        edge_core_free,
    })
}

/// Whether the largest normal subgroup of `G` inside `<gens>` is trivial.
pub fn core_is_trivial(g: &GroupInstance, gens: &[Element]) -> Result<bool> {
    let h = g.closure(gens)?;
    let elements = g.elements()?;
    Ok(!h.elements.iter().any(|&u| {
        !u.is_identity() && elements.iter().all(|&w| h.contains(g.conj(u, w)))
    }))
}

/// Orbit partitions and one record per (orbit, admissible map type).
#[derive(Clone, Debug)]
pub struct Classification {
    pub group: FamilyDescriptor,
    pub partitions: Vec<OrbitPartition>,
    pub records: Vec<MapRecord>,
}

impl Classification {
    pub fn partition(&self, kind: TupleKind) -> Option<&OrbitPartition> {
        self.partitions.iter().find(|p| p.kind() == kind)
    }

    pub fn survivors(&self) -> impl Iterator<Item = &MapRecord> {
        self.records.iter().filter(|r| r.passes_filter)
    }
}

/// Every map type on every orbit, ordered by kind, orbit, then type.
pub fn classify_full(g: &GroupInstance) -> Result<Classification> {
    let mut partitions = Vec::new();
    let mut records = Vec::new();
    for kind in TupleKind::ALL {
        let partition = triples::orbits(g, kind)?;
        for (i, class) in partition.classes().iter().enumerate() {
            for &mt in MapType::for_kind(kind) {
                let mut r = realize(g, &class.representative, mt)?;
                r.orbit = Some(i);
                records.push(r);
            }
        }
        partitions.push(partition);
    }
    Ok(Classification {
        group: g.descriptor(),
        partitions,
        records,
    })
}

pub fn classify(g: &GroupInstance) -> Result<Vec<MapRecord>> {
    Ok(classify_full(g)?.records)
}

/// Shapes an Euler characteristic can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChiForm {
    One,
    Two,
    /// `2 - 2^ell`, `ell >= 2`.
    TwoMinusPow { ell: u32 },
    /// `2 - 2^ell + 2^s`, `ell > s > 1`.
    TwoMinusPowPlusPow { ell: u32, s: u32 },
    Other,
}

pub fn chi_form(chi: i128) -> ChiForm {
    match chi {
        1 => return ChiForm::One,
        2 => return ChiForm::Two,
        _ => {}
    }
    let d = 2 - chi;
    if d <= 0 {
        return ChiForm::Other;
    }
    let d = d as u128;
    if d.is_power_of_two() {
        let ell = d.trailing_zeros();
        return if ell >= 2 {
            ChiForm::TwoMinusPow { ell }
        } else {
            ChiForm::Other
        };
    }
    // d = 2^s (2^(ell - s) - 1)
    let s = d.trailing_zeros();
    let odd = d >> s;
    if s > 1 && (odd + 1).is_power_of_two() {
        ChiForm::TwoMinusPowPlusPow {
            ell: s + (odd + 1).trailing_zeros(),
            s,
        }
    } else {
        ChiForm::Other
    }
}

impl fmt::Display for ChiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiForm::One => write!(f, "1"),
            ChiForm::Two => write!(f, "2"),
            ChiForm::TwoMinusPow { ell } => write!(f, "2 - 2^{ell}"),
            ChiForm::TwoMinusPowPlusPow { ell, s } => write!(f, "2 - 2^{ell} + 2^{s}"),
            ChiForm::Other => write!(f, "other"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group, Family};

    #[test]
    fn filter() {
        assert!(passes_filter(1));
        assert!(passes_filter(-2));
        assert!(!passes_filter(0));
        assert!(!passes_filter(-12));
    }

    #[test]
    fn forms() {
        assert_eq!(chi_form(-6), ChiForm::TwoMinusPow { ell: 3 });
        assert_eq!(chi_form(-10), ChiForm::TwoMinusPowPlusPow { ell: 4, s: 2 });
        assert_eq!(chi_form(0), ChiForm::Other);
        assert_eq!(chi_form(3), ChiForm::Other);
        assert_eq!(chi_form(-1), ChiForm::Other);
    }

    #[test]
    fn map_type_parse() {
        for mt in MapType::ALL {
            assert_eq!(mt.label().parse::<MapType>().unwrap(), mt);
        }
        assert_eq!("2^P".parse::<MapType>().unwrap(), MapType::Type2P);
    }

    #[test]
    fn rotary_tuple_rejected_for_type1() {
        let g = group(Family::Dihedral, 3).unwrap();
        let t = GenTuple::parse(&g, TupleKind::RotaryPair, &["a", "b"]).unwrap();
        assert!(matches!(chi(&g, &t, MapType::Type1), Err(Error::KindMismatch(_))));
    }

    #[test]
    fn d8_star_map() {
        let g = group(Family::Dihedral, 3).unwrap();
        let t = GenTuple::parse(&g, TupleKind::Reversing, &["b", "a*b", "a^4"]).unwrap();
        let r = realize(&g, &t, MapType::Type2Star).unwrap();
        assert_eq!(r.chi, 1);
        assert_eq!((r.vertices, r.edges, r.faces), (1, 8, 8));
    }
}
