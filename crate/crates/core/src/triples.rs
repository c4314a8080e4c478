//! Generating tuples and their orbits under `Aut(G)`.
//!
//! Tuples are enumerated in lexicographic order of their elements. The
//! exhaustive kernels encode a tuple as a dense integer
//! `((i * n) + j) * n + k` of element indices, so membership and visited
//! sets are plain bitsets and automorphisms act through permutation tables.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{explicit_aut, AutGroup};
use crate::catalog::{Family, FamilyDescriptor};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::group::{Element, GroupInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TupleKind {
    /// `(x, y, z)`: involutions generating `G`.
    Reversing,
    /// Reversing with `x != z` and `xz = zx`.
    Regular,
    /// `(alpha, z)`: `z` an involution, `<alpha, z> = G`.
    RotaryPair,
}

impl TupleKind {
    pub const ALL: [TupleKind; 3] = [TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair];

    pub fn arity(self) -> usize {
        match self {
            TupleKind::RotaryPair => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TupleKind::Reversing => "reversing",
            TupleKind::Regular => "regular",
            TupleKind::RotaryPair => "rotary",
        }
    }
}

impl fmt::Display for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TupleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "reversing" | "reflexible" => Ok(TupleKind::Reversing),
            "regular" => Ok(TupleKind::Regular),
            "rotary" | "rotarypair" | "rotary-pair" => Ok(TupleKind::RotaryPair),
            _ => Err(Error::Parse(format!("unknown tuple kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenTuple {
    pub kind: TupleKind,
    pub parts: Vec<Element>,
}

impl GenTuple {
    pub fn reversing(x: Element, y: Element, z: Element) -> Self {
        GenTuple {
            kind: TupleKind::Reversing,
            parts: vec![x, y, z],
        }
    }

    pub fn regular(x: Element, y: Element, z: Element) -> Self {
        GenTuple {
            kind: TupleKind::Regular,
            parts: vec![x, y, z],
        }
    }

    pub fn rotary(alpha: Element, z: Element) -> Self {
        GenTuple {
            kind: TupleKind::RotaryPair,
            parts: vec![alpha, z],
        }
    }

    /// Parses words like `["b", "a*b", "a^4"]`.
    pub fn parse(g: &GroupInstance, kind: TupleKind, words: &[&str]) -> Result<Self> {
        let parts = words
            .iter()
            .map(|w| g.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        let t = GenTuple { kind, parts };
        t.validate(g)?;
        Ok(t)
    }

    pub fn words(&self, g: &GroupInstance) -> Vec<String> {
        self.parts.iter().map(|&u| g.word(u)).collect()
    }

    pub fn display(&self, g: &GroupInstance) -> String {
        format!("({})", self.words(g).join(", "))
    }

    /// Same elements, different kind label.
    pub fn with_kind(&self, kind: TupleKind) -> Self {
        GenTuple {
            kind,
            parts: self.parts.clone(),
        }
    }

    /// Checks the defining conditions of the tuple's kind.
    pub fn validate(&self, g: &GroupInstance) -> Result<()> {
        if self.parts.len() != self.kind.arity() {
            return Err(Error::KindMismatch(format!(
                "{} tuple needs {} entries, got {}",
                self.kind,
                self.kind.arity(),
                self.parts.len()
            )));
        }
        for &u in &self.parts {
            g.validate(u)?;
        }
        if satisfies(g, self.kind, &self.parts) {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!(
                "{} is not a {} tuple of {}",
                self.display(g),
                self.kind,
                g.descriptor()
            )))
        }
    }
}

fn satisfies(g: &GroupInstance, kind: TupleKind, p: &[Element]) -> bool {
    match kind {
        TupleKind::Reversing => p.iter().all(|&u| g.is_involution(u)) && g.generates(p),
        TupleKind::Regular => {
            satisfies(g, TupleKind::Reversing, p) && p[0] != p[2] && g.commute(p[0], p[2])
        }
        TupleKind::RotaryPair => g.is_involution(p[1]) && g.generates(p),
    }
}

fn candidates(g: &GroupInstance, kind: TupleKind) -> Result<(Vec<Element>, Vec<Element>)> {
    let inv = g.involutions()?;
    let first = match kind {
        TupleKind::RotaryPair => g.elements()?,
        _ => inv.clone(),
    };
    Ok((first, inv))
}

fn tuples_with_first(
    g: &GroupInstance,
    kind: TupleKind,
    x: Element,
    inv: &[Element],
    stop_at_first: bool,
) -> Vec<GenTuple> {
    let mut out = Vec::new();
    match kind {
        TupleKind::RotaryPair => {
            for &z in inv {
                if g.generates(&[x, z]) {
                    out.push(GenTuple::rotary(x, z));
                    if stop_at_first {
                        return out;
                    }
                }
            }
        }
        _ => {
            for &y in inv {
                for &z in inv {
                    if kind == TupleKind::Regular && (x == z || !g.commute(x, z)) {
                        continue;
                    }
                    if g.generates(&[x, y, z]) {
                        out.push(GenTuple {
                            kind,
                            parts: vec![x, y, z],
                        });
                        if stop_at_first {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every tuple of the given kind, in lexicographic order.
pub fn enumerate(g: &GroupInstance, kind: TupleKind) -> Result<Vec<GenTuple>> {
    g.require_exhaustive("tuple enumeration")?;
    let (first, inv) = candidates(g, kind)?;
    let shards: Vec<Vec<GenTuple>> = first
        .par_iter()
        .map(|&x| tuples_with_first(g, kind, x, &inv, false))
        .collect();
    Ok(shards.into_iter().flatten().collect())
}

/// Whether any tuple of the given kind exists.
pub fn exists(g: &GroupInstance, kind: TupleKind) -> Result<bool> {
    g.require_exhaustive("tuple search")?;
    let (first, inv) = candidates(g, kind)?;
    Ok(first
        .par_iter()
        .any(|&x| !tuples_with_first(g, kind, x, &inv, true).is_empty()))
}

/// Dense encoding of tuples over a group of order `n`.
struct Codec {
    n: usize,
    arity: usize,
}

impl Codec {
    fn encode(&self, g: &GroupInstance, parts: &[Element]) -> u32 {
        parts
            .iter()
            .fold(0usize, |acc, &u| acc * self.n + g.index_of(u)) as u32
    }

    fn decode(&self, g: &GroupInstance, mut code: u32) -> Vec<Element> {
        let mut parts = vec![Element::IDENTITY; self.arity];
        for slot in parts.iter_mut().rev() {
            *slot = g.element_at(code as usize % self.n);
            code /= self.n as u32;
        }
        parts
    }

    fn image(&self, perm: &[u32], mut code: u32) -> u32 {
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.arity {
            out += perm[code as usize % self.n] * scale;
            code /= self.n as u32;
            scale *= self.n as u32;
        }
        out
    }

    fn space(&self) -> usize {
        self.n.pow(self.arity as u32)
    }
}

struct Bitset(Vec<u64>);

impl Bitset {
    fn new(len: usize) -> Self {
        Bitset(vec![0; len.div_ceil(64)])
    }

    fn get(&self, i: u32) -> bool {
        self.0[i as usize / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: u32) {
        self.0[i as usize / 64] |= 1 << (i % 64);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Lexicographically least member.
    pub representative: GenTuple,
    pub size: u64,
}

/// Orbits of `Aut(G)` on a set of tuples of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    kind: TupleKind,
    n: usize,
    codes: Vec<u32>,
    class_ids: Vec<u32>,
    classes: Vec<OrbitClass>,
    aut_order: u128,
}

impl OrbitPartition {
    pub fn kind(&self) -> TupleKind {
        self.kind
    }

    /// Classes ordered by their representatives.
    pub fn classes(&self) -> &[OrbitClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of tuples partitioned.
    pub fn total(&self) -> u64 {
        self.codes.len() as u64
    }

    pub fn aut_order(&self) -> u128 {
        self.aut_order
    }

    pub fn representatives(&self) -> Vec<GenTuple> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    /// Every orbit has `|Aut(G)|` elements.
    pub fn is_semiregular(&self) -> bool {
        self.classes.iter().all(|c| u128::from(c.size) == self.aut_order)
    }

    /// Index of the class containing `t`, if `t` was partitioned.
    pub fn class_of(&self, g: &GroupInstance, t: &GenTuple) -> Option<usize> {
        if t.kind != self.kind || t.parts.len() != self.kind.arity() || g.order() as usize != self.n
        {
            return None;
        }
        if t.parts.iter().any(|&u| g.validate(u).is_err()) {
            return None;
        }
        let codec = Codec {
            n: self.n,
            arity: self.kind.arity(),
        };
        let code = codec.encode(g, &t.parts);
        self.codes
            .binary_search(&code)
            .ok()
            .map(|i| self.class_ids[i] as usize)
    }
}

fn prepare(
    g: &GroupInstance,
    kind: Option<TupleKind>,
    tuples: &[GenTuple],
) -> Result<(TupleKind, Codec, Vec<u32>)> {
    g.require_exhaustive("orbit partition")?;
    let kind = kind
        .or_else(|| tuples.first().map(|t| t.kind))
        .unwrap_or(TupleKind::Reversing);
    if let Some(t) = tuples.iter().find(|t| t.kind != kind) {
        return Err(Error::KindMismatch(format!("mixed kinds {kind} and {}", t.kind)));
    }
    let codec = Codec {
        n: g.order() as usize,
        arity: kind.arity(),
    };
    let mut codes = Vec::with_capacity(tuples.len());
    for t in tuples {
        if t.parts.len() != kind.arity() {
            return Err(Error::KindMismatch(format!("{} has wrong arity", t.display(g))));
        }
        for &u in &t.parts {
            g.validate(u)?;
        }
        codes.push(codec.encode(g, &t.parts));
    }
    codes.sort_unstable();
    codes.dedup();
    Ok((kind, codec, codes))
}

/// All tuples of a kind, partitioned into orbits.
pub fn orbits(g: &GroupInstance, kind: TupleKind) -> Result<OrbitPartition> {
    let tuples = enumerate(g, kind)?;
    let aut = explicit_aut(g)?;
    sweep(g, &aut, Some(kind), &tuples)
}

/// Orbits under the explicit automorphism generators.
pub fn orbit_partition(g: &GroupInstance, tuples: &[GenTuple]) -> Result<OrbitPartition> {
    let aut = explicit_aut(g)?;
    orbit_partition_with(g, &aut, tuples)
}

/// Breadth-first orbit sweep: the least unvisited tuple seeds each class.
pub fn orbit_partition_with(
    g: &GroupInstance,
    aut: &AutGroup,
    tuples: &[GenTuple],
) -> Result<OrbitPartition> {
    sweep(g, aut, None, tuples)
}

fn sweep(
    g: &GroupInstance,
    aut: &AutGroup,
    kind: Option<TupleKind>,
    tuples: &[GenTuple],
) -> Result<OrbitPartition> {
    let (kind, codec, codes) = prepare(g, kind, tuples)?;
    let perms = aut.permutations(g)?;
    let mut member = Bitset::new(codec.space());
    for &c in &codes {
        member.set(c);
    }
    let mut visited = Bitset::new(codec.space());
    let mut class_ids = vec![u32::MAX; codes.len()];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    for (pos, &seed) in codes.iter().enumerate() {
        if visited.get(seed) {
            continue;
        }
        let id = classes.len() as u32;
        visited.set(seed);
        class_ids[pos] = id;
        queue.push_back(seed);
        let mut size = 0u64;
        while let Some(c) = queue.pop_front() {
            size += 1;
            for p in &perms {
                let d = codec.image(p, c);
                if !member.get(d) {
                    return Err(Error::InvariantViolation(format!(
                        "tuple set is not closed under Aut({})",
                        g.descriptor()
                    )));
                }
                if !visited.get(d) {
                    visited.set(d);
                    let at = codes.binary_search(&d).expect("member code");
                    class_ids[at] = id;
                    queue.push_back(d);
                }
            }
        }
        classes.push(OrbitClass {
            representative: GenTuple {
                kind,
                parts: codec.decode(g, seed),
            },
            size,
        });
    }
    Ok(OrbitPartition {
        kind,
        n: codec.n,
        codes,
        class_ids,
        classes,
        aut_order: aut.order(),
    })
}

/// The same partition computed by union-find over generator edges.
pub fn orbit_partition_union_find(
    g: &GroupInstance,
    aut: &AutGroup,
    kind: TupleKind,
    tuples: &[GenTuple],
) -> Result<OrbitPartition> {
    let (kind, codec, codes) = prepare(g, Some(kind), tuples)?;
    let perms = aut.permutations(g)?;
    let mut sets = DisjointSets::new(codes.len());
    for (i, &c) in codes.iter().enumerate() {
        for p in &perms {
            let j = codes.binary_search(&codec.image(p, c)).map_err(|_| {
                Error::InvariantViolation("tuple set is not closed under Aut(G)".into())
            })?;
            sets.union(i, j);
        }
    }
    // codes are sorted, so the first position seen for a root is its least member
    let mut root_class = vec![u32::MAX; codes.len()];
    let mut class_ids = vec![0u32; codes.len()];
    let mut classes: Vec<OrbitClass> = Vec::new();
    for (i, &c) in codes.iter().enumerate() {
        let r = sets.find(i);
        if root_class[r] == u32::MAX {
            root_class[r] = classes.len() as u32;
            classes.push(OrbitClass {
                representative: GenTuple {
                    kind,
                    parts: codec.decode(g, c),
                },
                size: 0,
            });
        }
        class_ids[i] = root_class[r];
        classes[root_class[r] as usize].size += 1;
    }
    Ok(OrbitPartition {
        kind,
        n: codec.n,
        codes,
        class_ids,
        classes,
        aut_order: aut.order(),
    })
}

/// Largest `|Aut(G)|` for which `equivalent` walks an orbit.
pub const EQUIVALENCE_AUT_CAP: u128 = 1 << 20;

/// Whether some automorphism maps `t1` to `t2`.
pub fn equivalent(g: &GroupInstance, t1: &GenTuple, t2: &GenTuple) -> Result<bool> {
    if t1.kind != t2.kind {
        return Err(Error::KindMismatch(format!("{} versus {}", t1.kind, t2.kind)));
    }
    t1.validate(g)?;
    t2.validate(g)?;
    let aut = explicit_aut(g)?;
    if aut.order() > EQUIVALENCE_AUT_CAP {
        return Err(Error::Scale {
            operation: "orbit walk",
            limit: format!("|Aut(G)| <= {EQUIVALENCE_AUT_CAP}"),
        });
    }
    let mut seen: HashSet<Vec<Element>> = HashSet::from([t1.parts.clone()]);
    let mut queue = VecDeque::from([t1.parts.clone()]);
    while let Some(p) = queue.pop_front() {
        if p == t2.parts {
            return Ok(true);
        }
        for f in aut.generators() {
            let q: Vec<Element> = p.iter().map(|&u| f.apply(g, u)).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(false)
}

/// Closed-form number of orbits.
pub fn expected_orbit_count(desc: FamilyDescriptor, kind: TupleKind) -> u64 {
    let l = desc.effective_ell();
    let z2sq = desc.family() == Family::CyclicTimesZ2 && l == 1;
    match kind {
        TupleKind::Reversing => match desc.family() {
            Family::CyclicTimesZ2 if z2sq => 4,
            Family::ElementaryAbelian8 => 1,
            Family::Dihedral => 3 + 3 * (1 << (l - 1)),
            Family::QuaternionCentralZ4 if l == 2 => 1,
            Family::QuaternionCentralZ4 => 3,
            Family::DihedralTimesZ2 => 3 + 3 * (1 << (l - 2)),
            Family::DihedralSemiZ2 => 6 + 3 * (1 << (l - 2)),
            _ => 0,
        },
        TupleKind::Regular => match desc.family() {
            Family::CyclicTimesZ2 if z2sq => 3,
            Family::ElementaryAbelian8 => 1,
            Family::Dihedral | Family::DihedralTimesZ2 | Family::DihedralSemiZ2 => 3,
            _ => 0,
        },
        TupleKind::RotaryPair => match desc.family() {
            Family::Cyclic | Family::CyclicTimesZ2 | Family::Modular => 1,
            Family::Dihedral | Family::SemiDihedral => 2,
            _ => 0,
        },
    }
}

/// Outcome of checking a list of representatives against a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalReport {
    pub kind: TupleKind,
    pub orbit_count: usize,
    pub listed: usize,
    /// Listed tuples that are not tuples of the kind.
    pub invalid: Vec<GenTuple>,
    /// Pairs of listed tuples in the same orbit.
    pub collisions: Vec<(GenTuple, GenTuple)>,
    /// Orbit representatives not hit by any listed tuple.
    pub uncovered: Vec<GenTuple>,
}

impl TransversalReport {
    pub fn passed(&self) -> bool {
        self.invalid.is_empty() && self.collisions.is_empty() && self.uncovered.is_empty()
    }
}

/// Checks that `listed` meets every orbit exactly once.
pub fn check_transversal(
    g: &GroupInstance,
    partition: &OrbitPartition,
    listed: &[GenTuple],
) -> TransversalReport {
    let mut hit: Vec<Option<&GenTuple>> = vec![None; partition.len()];
    let mut invalid = Vec::new();
    let mut collisions = Vec::new();
    for t in listed {
        match partition.class_of(g, t) {
            None => invalid.push(t.clone()),
            Some(i) => match hit[i] {
                Some(prev) => collisions.push((prev.clone(), t.clone())),
                None => hit[i] = Some(t),
            },
        }
    }
    let uncovered = partition
        .classes()
        .iter()
        .zip(&hit)
        .filter(|(_, h)| h.is_none())
        .map(|(c, _)| c.representative.clone())
        .collect();
    TransversalReport {
        kind: partition.kind(),
        orbit_count: partition.len(),
        listed: listed.len(),
        invalid,
        collisions,
        uncovered,
    }
}

/// Enumerates, partitions and checks the listed representatives.
pub fn match_representatives(g: &GroupInstance, kind: TupleKind) -> Result<TransversalReport> {
    let partition = orbits(g, kind)?;
    let listed = crate::representatives::listed(g, kind)?;
    Ok(check_transversal(g, &partition, &listed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::group;

    #[test]
    fn d8_reversing_count() {
        let g = group(Family::Dihedral, 2).unwrap();
        let t = enumerate(&g, TupleKind::Reversing).unwrap();
        let p = orbit_partition(&g, &t).unwrap();
        assert_eq!(p.len(), 9);
        assert!(p.is_semiregular());
        assert_eq!(p.total(), 9 * 8);
    }

    #[test]
    fn enumeration_is_sorted() {
        let g = group(Family::DihedralSemiZ2, 3).unwrap();
        for kind in TupleKind::ALL {
            let t = enumerate(&g, kind).unwrap();
            assert!(t.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn union_find_agrees() {
        let g = group(Family::DihedralTimesZ2, 3).unwrap();
        let aut = explicit_aut(&g).unwrap();
        let t = enumerate(&g, TupleKind::Reversing).unwrap();
        assert_eq!(
            orbit_partition_with(&g, &aut, &t).unwrap(),
            orbit_partition_union_find(&g, &aut, TupleKind::Reversing, &t).unwrap()
        );
    }

    #[test]
    fn partial_sets_are_rejected() {
        let g = group(Family::Dihedral, 3).unwrap();
        let t = enumerate(&g, TupleKind::Reversing).unwrap();
        assert!(matches!(
            orbit_partition(&g, &t[1..]),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn equivalence_kind_mismatch() {
        let g = group(Family::Dihedral, 3).unwrap();
        let t = GenTuple::parse(&g, TupleKind::Reversing, &["b", "a*b", "a^4"]).unwrap();
        let r = GenTuple::parse(&g, TupleKind::Regular, &["b", "a*b", "a^4"]).unwrap();
        assert!(matches!(equivalent(&g, &t, &r), Err(Error::KindMismatch(_))));
        assert!(equivalent(&g, &t, &t).unwrap());
    }

    #[test]
    fn rotary_pairs_z8() {
        let g = group(Family::Cyclic, 3).unwrap();
        let t = enumerate(&g, TupleKind::RotaryPair).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(orbit_partition(&g, &t).unwrap().len(), 1);
    }
}
