//! Automorphisms as images of the distinguished generators.
//!
//! Composition is left to right: `(u)(f * h) = ((u)f)h`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Family, FamilyDescriptor};
use crate::error::{Error, Result};
use crate::group::{Element, GroupInstance};

/// Largest automorphism group that `AutGroup::materialize` will list.
pub const MATERIALIZE_CAP: u128 = 1 << 16;

/// Largest group the brute-force search accepts.
pub const BRUTE_FORCE_MAX_ORDER: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<Element>,
}

/// Whether `images` satisfy the defining relations of `g` and generate it.
pub fn is_automorphism(g: &GroupInstance, images: &[Element]) -> bool {
    check_images(g, images).is_ok()
}

fn check_images(g: &GroupInstance, images: &[Element]) -> Result<()> {
    let gens = g.generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidAutomorphism(format!(
            "expected {} images, got {}",
            gens.len(),
            images.len()
        )));
    }
    for &u in images {
        g.validate(u).map_err(|e| Error::InvalidAutomorphism(e.to_string()))?;
    }
    let a = images[0];
    if !g.pow(a, g.modulus() as i64).is_identity() {
        return Err(Error::InvalidAutomorphism("image of a has too large an order".into()));
    }
    for (i, t) in g.tails().iter().enumerate() {
        let ti = images[i + 1];
        if g.mul(ti, ti) != g.pow(a, i64::from(t.square)) {
            return Err(Error::InvalidAutomorphism(format!("square relation for {}", t.name)));
        }
        if g.conj(a, ti) != g.pow(a, i64::from(t.lambda)) {
            return Err(Error::InvalidAutomorphism(format!("action relation for {}", t.name)));
        }
        for &tj in &images[i + 2..] {
            if !g.commute(ti, tj) {
                return Err(Error::InvalidAutomorphism("tail images do not commute".into()));
            }
        }
    }
    if !g.generates(images) {
        return Err(Error::InvalidAutomorphism("images do not generate the group".into()));
    }
    Ok(())
}

impl Automorphism {
    /// Validates the relations; a homomorphism onto a finite group of the
    /// same order is bijective.
    pub fn new(g: &GroupInstance, images: Vec<Element>) -> Result<Self> {
        check_images(g, &images)?;
        Ok(Automorphism { images })
    }

    pub fn identity(g: &GroupInstance) -> Self {
        Automorphism {
            images: g.generators(),
        }
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, g: &GroupInstance, u: Element) -> Element {
        let mut acc = g.pow(self.images[0], i64::from(u.a_exponent()));
        for (i, &img) in self.images[1..].iter().enumerate() {
            if u.tail_bit(i) {
                acc = g.mul(acc, img);
            }
        }
        acc
    }

    /// `self` followed by `other`.
    pub fn compose(&self, g: &GroupInstance, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: self.images.iter().map(|&u| other.apply(g, u)).collect(),
        }
    }

    /// Dense permutation table over element indices.
    pub fn permutation(&self, g: &GroupInstance) -> Result<Vec<u32>> {
        Ok(g.elements()?
            .into_iter()
            .map(|u| g.index_of(self.apply(g, u)) as u32)
            .collect())
    }

    pub fn words(&self, g: &GroupInstance) -> Vec<String> {
        self.images.iter().map(|&u| g.word(u)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AutSource {
    /// Explicit generators from the family presentation.
    Explicit,
    /// Exhaustive search over generator images.
    Search,
}

#[derive(Clone, Debug)]
pub struct AutGroup {
    generators: Vec<Automorphism>,
    names: Vec<String>,
    order: u128,
    source: AutSource,
}

impl AutGroup {
    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn source(&self) -> AutSource {
        self.source
    }

    /// All automorphisms, sorted, by closure under the generators.
    pub fn materialize(&self, g: &GroupInstance) -> Result<Vec<Automorphism>> {
        let all = close(g, &self.generators, MATERIALIZE_CAP)?;
        Ok(all.into_iter().collect())
    }

    /// Generator permutation tables over element indices.
    pub fn permutations(&self, g: &GroupInstance) -> Result<Vec<Vec<u32>>> {
        self.generators.iter().map(|f| f.permutation(g)).collect()
    }
}

fn close(g: &GroupInstance, gens: &[Automorphism], cap: u128) -> Result<BTreeSet<Automorphism>> {
    let id = Automorphism::identity(g);
    let mut seen: HashSet<Automorphism> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(f) = queue.pop_front() {
        for h in gens {
            let fh = f.compose(g, h);
            if !seen.contains(&fh) {
                if seen.len() as u128 >= cap {
                    return Err(Error::Scale {
                        operation: "automorphism materialization",
                        limit: format!("{cap} elements"),
                    });
                }
                seen.insert(fh.clone());
                queue.push_back(fh);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `|Aut(G)|` from the closed forms; degenerate members use known values.
pub fn closed_form_aut_order(desc: FamilyDescriptor) -> u128 {
    let l = desc.effective_ell();
    let p = |k: u32| 1u128 << k;
    match (desc.family(), desc.ell()) {
        (Family::CyclicTimesZ2, Some(1)) => 6,
        (Family::Quaternion, Some(2)) => 24,
        (Family::QuaternionCentralZ4, Some(2)) => 48,
        (Family::ElementaryAbelian8, _) => 168,
        (Family::Cyclic, _) => p(l - 1),
        (Family::CyclicTimesZ2 | Family::Modular, _) => p(l + 1),
        (Family::Dihedral | Family::Quaternion, _) => p(2 * l - 1),
        (Family::SemiDihedral, _) => p(2 * l - 2),
        (Family::QuaternionCentralZ4 | Family::DihedralSemiZ2, _) => p(2 * l),
        (Family::DihedralTimesZ2, _) => p(2 * l + 2),
    }
}

fn words(g: &GroupInstance, ws: &[&str]) -> Vec<Element> {
    ws.iter()
        .map(|w| g.parse_word(w).expect("generator word"))
        .collect()
}

/// Named generator images for the non-degenerate members.
fn explicit_images(g: &GroupInstance) -> Vec<(&'static str, Vec<Element>)> {
    let a0 = format!("a^{}", g.a0_exponent());
    let a0c = format!("{a0}*c");
    let a0b = format!("{a0}*b");
    let mut rows: Vec<(&'static str, Vec<&str>)> = Vec::new();
    let rest: Vec<String> = g.generator_names()[1..].iter().map(|c| c.to_string()).collect();
    let rest: Vec<&str> = rest.iter().map(String::as_str).collect();
    let mut rho5 = vec!["a^5"];
    rho5.extend(&rest);
    let mut rho_inv = vec!["a^-1"];
    rho_inv.extend(&rest);
    rows.push(("rho5", rho5));
    rows.push(("rho-1", rho_inv));
    match g.descriptor().family() {
        Family::Cyclic => {}
        Family::CyclicTimesZ2 | Family::Modular => {
            rows.push(("tau", vec!["a*b", "b"]));
            rows.push(("sigma", vec!["a", &a0b]));
        }
        Family::Dihedral => rows.push(("eta", vec!["a", "a*b"])),
        Family::SemiDihedral => rows.push(("eta0", vec!["a", "a^2*b"])),
        Family::Quaternion => rows.push(("eta", vec!["a", "a*c"])),
        Family::QuaternionCentralZ4 => {
            rows.push(("eta", vec!["a", "a*c", "d"]));
            rows.push(("tau", vec!["a", "c", "d^-1"]));
        }
        Family::DihedralTimesZ2 => {
            rows.push(("eta", vec!["a", "a*b", "c"]));
            rows.push(("tau", vec!["a*c", "b", "c"]));
            rows.push(("sigma", vec!["a", "b", &a0c]));
        }
        Family::DihedralSemiZ2 => {
            rows.push(("eta0", vec!["a", "a^2*b", "c"]));
            rows.push(("tau", vec!["a*c", "b*c", "c"]));
            rows.push(("sigma", vec!["a", "b", &a0c]));
        }
        Family::ElementaryAbelian8 => {}
    }
    rows.into_iter().map(|(n, w)| (n, words(g, &w))).collect()
}

/// Generators and order of `Aut(G)`.
///
/// Non-degenerate members get explicit generators and the closed-form order.
/// The four degenerate members (`Z2^2`, `Q8`, `Q8oZ4`, `Z2^3`) fall back to
/// exhaustive search.
pub fn explicit_aut(g: &GroupInstance) -> Result<AutGroup> {
    let desc = g.descriptor();
    if desc.is_degenerate() {
        let mut aut = brute_force_aut(g)?;
        if aut.order != closed_form_aut_order(desc) {
            return Err(Error::InvariantViolation(format!(
                "search found {} automorphisms of {desc}",
                aut.order
            )));
        }
        aut.source = AutSource::Explicit;
        return Ok(aut);
    }
    let mut generators = Vec::new();
    let mut names = Vec::new();
    for (name, images) in explicit_images(g) {
        generators.push(Automorphism::new(g, images)?);
        names.push(name.to_string());
    }
    Ok(AutGroup {
        generators,
        names,
        order: closed_form_aut_order(desc),
        source: AutSource::Explicit,
    })
}

/// All automorphisms by search over image tuples; `|G| <= 64` only.
///
/// Returns a greedily chosen generating set and the exact count.
pub fn brute_force_aut(g: &GroupInstance) -> Result<AutGroup> {
    let all = brute_force_automorphisms(g)?;
    let mut generators: Vec<Automorphism> = Vec::new();
    let mut span: BTreeSet<Automorphism> = BTreeSet::from([Automorphism::identity(g)]);
    for f in &all {
        if !span.contains(f) {
            generators.push(f.clone());
            span = close(g, &generators, u128::MAX)?;
        }
    }
    let names = (1..=generators.len()).map(|i| format!("g{i}")).collect();
    Ok(AutGroup {
        generators,
        names,
        order: all.len() as u128,
        source: AutSource::Search,
    })
}

/// Every automorphism of `g`, sorted; `|G| <= 64` only.
pub fn brute_force_automorphisms(g: &GroupInstance) -> Result<Vec<Automorphism>> {
    if g.order() > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::Scale {
            operation: "automorphism search",
            limit: format!("|G| <= {BRUTE_FORCE_MAX_ORDER}"),
        });
    }
    let elements = g.elements()?;
    let k = g.rank();
    let firsts: Vec<Element> = elements
        .iter()
        .copied()
        .filter(|&u| g.pow(u, g.modulus() as i64).is_identity())
        .collect();
    let found: Vec<Vec<Automorphism>> = firsts
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            let mut images = vec![first];
            search(g, &elements, k, &mut images, &mut out);
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

fn search(
    g: &GroupInstance,
    elements: &[Element],
    k: usize,
    images: &mut Vec<Element>,
    out: &mut Vec<Automorphism>,
) {
    if images.len() == k + 1 {
        if is_automorphism(g, images) {
            out.push(Automorphism {
                images: images.clone(),
            });
        }
        return;
    }
    let t = &g.tails()[images.len() - 1];
    let a = images[0];
    let sq = g.pow(a, i64::from(t.square));
    let act = g.pow(a, i64::from(t.lambda));
    for &u in elements {
        if g.mul(u, u) == sq && g.conj(a, u) == act {
            images.push(u);
            search(g, elements, k, images, out);
            images.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, descriptors_up_to, group};

    #[test]
    fn explicit_generators_are_automorphisms() {
        for d in descriptors_up_to(256) {
            let g = build(d).unwrap();
            explicit_aut(&g).unwrap();
        }
    }

    #[test]
    fn rejects_non_automorphism() {
        let g = group(Family::Dihedral, 3).unwrap();
        let a = g.a();
        let b = g.generator('b').unwrap();
        assert!(Automorphism::new(&g, vec![g.mul(a, a), b]).is_err());
        assert!(Automorphism::new(&g, vec![b, a]).is_err());
    }

    #[test]
    fn compose_is_left_to_right() {
        let g = group(Family::DihedralTimesZ2, 3).unwrap();
        let aut = explicit_aut(&g).unwrap();
        let f = &aut.generators()[2];
        let h = &aut.generators()[3];
        let fh = f.compose(&g, h);
        for u in g.elements().unwrap() {
            assert_eq!(fh.apply(&g, u), h.apply(&g, f.apply(&g, u)));
        }
    }

    #[test]
    fn materialized_orders_small() {
        for d in descriptors_up_to(64) {
            let g = build(d).unwrap();
            let aut = explicit_aut(&g).unwrap();
            assert_eq!(aut.materialize(&g).unwrap().len() as u128, aut.order(), "{d}");
        }
    }

    #[test]
    fn brute_force_gate() {
        let g = group(Family::Dihedral, 6).unwrap();
        assert!(matches!(brute_force_aut(&g), Err(Error::Scale { .. })));
    }
}
