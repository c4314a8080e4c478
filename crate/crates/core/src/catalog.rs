//! The ten families of 2-groups with a cyclic or dihedral maximal subgroup.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupInstance, TailGenerator, MAX_ELL};
use crate::triples::{self, TupleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Cyclic,
    CyclicTimesZ2,
    Dihedral,
    SemiDihedral,
    Modular,
    Quaternion,
    QuaternionCentralZ4,
    DihedralTimesZ2,
    DihedralSemiZ2,
    ElementaryAbelian8,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Cyclic,
        Family::CyclicTimesZ2,
        Family::Dihedral,
        Family::SemiDihedral,
        Family::Modular,
        Family::Quaternion,
        Family::QuaternionCentralZ4,
        Family::DihedralTimesZ2,
        Family::DihedralSemiZ2,
        Family::ElementaryAbelian8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "Cyclic",
            Family::CyclicTimesZ2 => "CyclicTimesZ2",
            Family::Dihedral => "Dihedral",
            Family::SemiDihedral => "SemiDihedral",
            Family::Modular => "Modular",
            Family::Quaternion => "Quaternion",
            Family::QuaternionCentralZ4 => "QuaternionCentralZ4",
            Family::DihedralTimesZ2 => "DihedralTimesZ2",
            Family::DihedralSemiZ2 => "DihedralSemiZ2",
            Family::ElementaryAbelian8 => "ElementaryAbelian8",
        }
    }

    /// Smallest admissible `ell`; `None` for the parameterless family.
    pub fn min_ell(self) -> Option<u32> {
        match self {
            Family::CyclicTimesZ2 => Some(1),
            Family::Cyclic
            | Family::Dihedral
            | Family::Quaternion
            | Family::QuaternionCentralZ4
            | Family::DihedralTimesZ2 => Some(2),
            Family::SemiDihedral | Family::Modular | Family::DihedralSemiZ2 => Some(3),
            Family::ElementaryAbelian8 => None,
        }
    }

    /// `log2 |G| - ell`.
    pub fn rank(self) -> u32 {
        match self {
            Family::Cyclic => 0,
            Family::CyclicTimesZ2
            | Family::Dihedral
            | Family::SemiDihedral
            | Family::Modular
            | Family::Quaternion => 1,
            Family::QuaternionCentralZ4
            | Family::DihedralTimesZ2
            | Family::DihedralSemiZ2
            | Family::ElementaryAbelian8 => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[derive(Deserialize)]
struct RawDescriptor {
    family: Family,
    #[serde(default)]
    ell: Option<u32>,
}

/// A validated, normalized `(family, ell)` pair.
///
/// Normalization identifies isomorphic parameter choices:
/// `Dihedral(1)` becomes `CyclicTimesZ2(1)` and `Modular(2)` becomes
/// `Dihedral(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor")]
pub struct FamilyDescriptor {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    ell: Option<u32>,
}

impl TryFrom<RawDescriptor> for FamilyDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        FamilyDescriptor::new(raw.family, raw.ell)
    }
}

impl FamilyDescriptor {
    pub fn new(family: Family, ell: Option<u32>) -> Result<Self> {
        let bad = |ell: u32, allowed: String| Error::Parameter {
            family: family.name().into(),
            ell,
            allowed,
        };
        match (family.min_ell(), ell) {
            (None, None) => Ok(FamilyDescriptor { family, ell: None }),
            (None, Some(l)) => Err(bad(l, "no parameter".into())),
            (Some(_), None) => Err(Error::Parse(format!("{family} needs a value for ell"))),
            (Some(min), Some(l)) => {
                let (family, l) = match (family, l) {
                    (Family::Dihedral, 1) => (Family::CyclicTimesZ2, 1),
                    (Family::Modular, 2) => (Family::Dihedral, 2),
                    other => other,
                };
                let min = family.min_ell().unwrap_or(min);
                if l < min || l > MAX_ELL {
                    return Err(bad(l, format!("{min}..={MAX_ELL}")));
                }
                Ok(FamilyDescriptor {
                    family,
                    ell: Some(l),
                })
            }
        }
    }

    /// Shorthand for a parameterized family.
    pub fn of(family: Family, ell: u32) -> Result<Self> {
        Self::new(family, Some(ell))
    }

    pub fn elementary_abelian8() -> Self {
        FamilyDescriptor {
            family: Family::ElementaryAbelian8,
            ell: None,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ell(&self) -> Option<u32> {
        self.ell
    }

    /// `ell` of the built group; `Z2^3` is realized with `|a| = 2`.
    pub fn effective_ell(&self) -> u32 {
        self.ell.unwrap_or(1)
    }

    pub fn order(&self) -> u64 {
        1u64 << (self.effective_ell() + self.family.rank())
    }

    /// True for the small members whose automorphism groups fall outside the
    /// generic closed forms and are taken from exhaustive search.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            (self.family, self.ell),
            (Family::CyclicTimesZ2, Some(1))
                | (Family::Quaternion, Some(2))
                | (Family::QuaternionCentralZ4, Some(2))
                | (Family::ElementaryAbelian8, None)
        )
    }

    /// Conventional name, e.g. `D16xZ2` or `Q8oZ4`.
    pub fn short_name(&self) -> String {
        let m = 1u64 << self.effective_ell();
        let n = 2 * m;
        match self.family {
            Family::Cyclic => format!("Z{m}"),
            Family::CyclicTimesZ2 if m == 2 => "Z2^2".into(),
            Family::CyclicTimesZ2 => format!("Z{m}xZ2"),
            Family::Dihedral => format!("D{n}"),
            Family::SemiDihedral => format!("SD{n}"),
            Family::Modular => format!("M{n}"),
            Family::Quaternion => format!("Q{n}"),
            Family::QuaternionCentralZ4 => format!("Q{n}oZ4"),
            Family::DihedralTimesZ2 => format!("D{n}xZ2"),
            Family::DihedralSemiZ2 => format!("D{n}:Z2"),
            Family::ElementaryAbelian8 => "Z2^3".into(),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ell {
            Some(l) => write!(f, "{}(ell={l})", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

fn tail(name: char, lambda: u64, square: u64) -> TailGenerator {
    TailGenerator {
        name,
        lambda: lambda as u32,
        square: square as u32,
    }
}

/// Builds the group with its defining presentation and checks it.
pub fn build(desc: FamilyDescriptor) -> Result<GroupInstance> {
    let desc = FamilyDescriptor::new(desc.family, desc.ell)?;
    let ell = desc.effective_ell();
    let m = 1u64 << ell;
    let half = m / 2;
    let tails = match desc.family {
        Family::Cyclic => vec![],
        Family::CyclicTimesZ2 => vec![tail('b', 1, 0)],
        Family::Dihedral => vec![tail('b', m - 1, 0)],
        Family::SemiDihedral => vec![tail('b', half - 1, 0)],
        Family::Modular => vec![tail('b', half + 1, 0)],
        Family::Quaternion => vec![tail('c', m - 1, half)],
        Family::QuaternionCentralZ4 => vec![tail('c', m - 1, half), tail('d', 1, half)],
        Family::DihedralTimesZ2 => vec![tail('b', m - 1, 0), tail('c', 1, 0)],
        Family::DihedralSemiZ2 => vec![tail('b', m - 1, 0), tail('c', half + 1, 0)],
        Family::ElementaryAbelian8 => vec![tail('b', 1, 0), tail('c', 1, 0)],
    };
    GroupInstance::from_parts(desc, ell, tails)
}

/// Shorthand for `build(FamilyDescriptor::of(family, ell)?)`.
pub fn group(family: Family, ell: u32) -> Result<GroupInstance> {
    build(FamilyDescriptor::of(family, ell)?)
}

/// Every catalog descriptor of order at most `max_order`, sorted by order,
/// then family, then `ell`.
pub fn descriptors_up_to(max_order: u64) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    for family in Family::ALL {
        match family.min_ell() {
            None => {
                let d = FamilyDescriptor::elementary_abelian8();
                if d.order() <= max_order {
                    out.push(d);
                }
            }
            Some(min) => {
                for ell in min..=MAX_ELL {
                    let d = FamilyDescriptor { family, ell: Some(ell) };
                    if d.order() > max_order {
                        break;
                    }
                    out.push(d);
                }
            }
        }
    }
    out.sort_by_key(|d| (d.order(), d.family, d.ell));
    out
}

/// Every catalog group of order at most `max_order`.
pub fn catalog_all(max_order: u64) -> Result<Vec<GroupInstance>> {
    descriptors_up_to(max_order).into_iter().map(build).collect()
}

/// Which map types a group admits as automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureFlags {
    pub reflexible_reversing: bool,
    pub regular: bool,
    pub chiral_rotary: bool,
}

/// Flags as tabulated for each family.
pub fn tabulated_feature_flags(desc: FamilyDescriptor) -> FeatureFlags {
    let (rev, reg, rot) = match desc.family {
        Family::Cyclic
        | Family::CyclicTimesZ2
        | Family::SemiDihedral
        | Family::Modular => (false, false, true),
        Family::Dihedral => (true, true, true),
        Family::Quaternion => (false, false, false),
        Family::QuaternionCentralZ4 => (true, false, false),
        Family::DihedralTimesZ2 | Family::DihedralSemiZ2 | Family::ElementaryAbelian8 => {
            (true, true, false)
        }
    };
    // Z2^2 is the one small member that also has a rotary pair
    let rev = rev || desc == FamilyDescriptor { family: Family::CyclicTimesZ2, ell: Some(1) };
    let reg = reg || desc == FamilyDescriptor { family: Family::CyclicTimesZ2, ell: Some(1) };
    FeatureFlags {
        reflexible_reversing: rev,
        regular: reg,
        chiral_rotary: rot,
    }
}

/// Flags by search over generating tuples; within the exhaustive gate only.
pub fn feature_flags(g: &GroupInstance) -> Result<FeatureFlags> {
    Ok(FeatureFlags {
        reflexible_reversing: triples::exists(g, TupleKind::Reversing)?,
        regular: triples::exists(g, TupleKind::Regular)?,
        chiral_rotary: triples::exists(g, TupleKind::RotaryPair)?,
    })
}

/// Flags by search when affordable, else from the table.
pub fn feature_flags_any(g: &GroupInstance) -> Result<FeatureFlags> {
    if g.is_exhaustive() {
        feature_flags(g)
    } else {
        Ok(tabulated_feature_flags(g.descriptor()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let d = FamilyDescriptor::of(Family::Dihedral, 1).unwrap();
        assert_eq!(d.family(), Family::CyclicTimesZ2);
        let m = FamilyDescriptor::of(Family::Modular, 2).unwrap();
        assert_eq!(m, FamilyDescriptor::of(Family::Dihedral, 2).unwrap());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            FamilyDescriptor::of(Family::SemiDihedral, 2),
            Err(Error::Parameter { .. })
        ));
        assert!(FamilyDescriptor::of(Family::Cyclic, 31).is_err());
        assert!(FamilyDescriptor::new(Family::ElementaryAbelian8, Some(2)).is_err());
        assert!(FamilyDescriptor::new(Family::Dihedral, None).is_err());
    }

    #[test]
    fn orders_of_order_8_and_16() {
        let names = |n: u64| -> Vec<String> {
            descriptors_up_to(n)
                .into_iter()
                .filter(|d| d.order() == n)
                .map(|d| d.short_name())
                .collect()
        };
        assert_eq!(names(4), ["Z4", "Z2^2"]);
        assert_eq!(names(8), ["Z8", "Z4xZ2", "D8", "Q8", "Z2^3"]);
        let mut sixteen = names(16);
        sixteen.sort();
        let mut expected = vec![
            "Z16", "Z8xZ2", "D16", "SD16", "M16", "Q16", "Q8oZ4", "D8xZ2",
        ];
        expected.sort();
        assert_eq!(sixteen, expected);
    }

    #[test]
    fn descriptor_json() {
        let d = FamilyDescriptor::of(Family::DihedralTimesZ2, 3).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"family":"DihedralTimesZ2","ell":3}"#);
        let back: FamilyDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        let e = serde_json::to_string(&FamilyDescriptor::elementary_abelian8()).unwrap();
        assert_eq!(e, r#"{"family":"ElementaryAbelian8"}"#);
        assert!(serde_json::from_str::<FamilyDescriptor>(r#"{"family":"SemiDihedral","ell":2}"#).is_err());
    }

    #[test]
    fn family_parse() {
        assert_eq!("dihedral-times-z2".parse::<Family>().unwrap(), Family::DihedralTimesZ2);
        assert!("Octonion".parse::<Family>().is_err());
    }
}
