//! Small hand-checkable facts about specific groups.

use twogroups::aut::{brute_force_aut, explicit_aut, Automorphism};
use twogroups::catalog::{self, descriptors_up_to, feature_flags, Family, FamilyDescriptor};
use twogroups::maps::{self, chi_form, ChiForm, MapType};
use twogroups::triples::{self, GenTuple, TupleKind};
use twogroups::{Error, GroupInstance};

fn g(family: Family, ell: u32) -> GroupInstance {
    catalog::group(family, ell).unwrap()
}

fn w(g: &GroupInstance, s: &str) -> twogroups::Element {
    g.parse_word(s).unwrap()
}

fn words(g: &GroupInstance, xs: &[twogroups::Element]) -> Vec<String> {
    xs.iter().map(|&u| g.word(u)).collect()
}

#[test]
fn normal_forms() {
    let d8 = g(Family::Dihedral, 2);
    assert_eq!(d8.exponents(d8.mul(w(&d8, "a"), w(&d8, "b"))), vec![1, 1]);
    assert_eq!(d8.exponents(d8.mul(w(&d8, "b"), w(&d8, "a"))), vec![3, 1]);
    let q = g(Family::QuaternionCentralZ4, 3);
    let cd = w(&q, "c*d");
    assert!(q.mul(cd, cd).is_identity());
    assert_eq!(d8.word(twogroups::Element::IDENTITY), "1");
}

#[test]
fn element_orders() {
    let sd = g(Family::SemiDihedral, 3);
    for i in 0..8 {
        let u = w(&sd, &format!("a^{i}*b"));
        assert_eq!(sd.element_order(u) == 2, i % 2 == 0, "a^{i}b");
    }
    let ds = g(Family::DihedralSemiZ2, 3);
    let abc = w(&ds, "a*b*c");
    assert_eq!(ds.element_order(abc), 4);
    assert_eq!(ds.mul(abc, abc), ds.a0());
}

#[test]
fn involutions() {
    let d8 = g(Family::Dihedral, 2);
    let mut inv = words(&d8, &d8.involutions().unwrap());
    inv.sort();
    assert_eq!(inv, ["a*b", "a^2", "a^2*b", "a^3*b", "b"]);
    let q16 = g(Family::Quaternion, 3);
    assert_eq!(words(&q16, &q16.involutions().unwrap()), ["a^4"]);
    let qz = g(Family::QuaternionCentralZ4, 3);
    let inv = qz.involutions().unwrap();
    assert_eq!(inv.len(), 11);
    for s in ["a^4", "a^2*d", "a^6*d", "c*d", "a^5*c*d"] {
        assert!(inv.contains(&w(&qz, s)), "{s}");
    }
}

#[test]
fn centers_and_derived_subgroups() {
    let dz = g(Family::DihedralTimesZ2, 3);
    let mut z = words(&dz, &dz.center().unwrap().elements);
    z.sort();
    assert_eq!(z, ["1", "a^4", "a^4*c", "c"]);
    let ds = g(Family::DihedralSemiZ2, 3);
    assert_eq!(words(&ds, &ds.center().unwrap().elements), ["1", "a^4"]);
    assert!(ds.commutator_subgroup().unwrap().contains(ds.a0()));
    let e8 = catalog::build(FamilyDescriptor::elementary_abelian8()).unwrap();
    assert_eq!(e8.center().unwrap().order, 8);
    assert_eq!(e8.commutator_subgroup().unwrap().order, 1);
    let d16 = g(Family::Dihedral, 3);
    let dd = d16.commutator_subgroup().unwrap();
    assert_eq!(dd.order, 4);
    assert!(dd.contains(w(&d16, "a^2")));
}

#[test]
fn subgroup_closures() {
    let d16 = g(Family::Dihedral, 3);
    let h = d16.closure(&[w(&d16, "a^2"), w(&d16, "b")]).unwrap();
    assert_eq!(h.order, 8);
    assert!(h.is_dihedral(&d16));
    let qz = g(Family::QuaternionCentralZ4, 3);
    let m = qz.closure(&[qz.a(), w(&qz, "c*d")]).unwrap();
    assert_eq!(m.order, 16);
    assert!(m.is_dihedral(&qz));
    let z8 = g(Family::Cyclic, 3);
    let m = z8.maximal_subgroup_witness().unwrap();
    assert_eq!(m.order, 4);
    assert!(m.is_cyclic(&z8));
}

#[test]
fn parameter_errors() {
    assert!(matches!(
        catalog::group(Family::SemiDihedral, 2),
        Err(Error::Parameter { .. })
    ));
    let qz = g(Family::QuaternionCentralZ4, 2);
    assert_eq!(qz.order(), 16);
    let a2 = qz.a_pow(2);
    assert_eq!(qz.pow(w(&qz, "c"), 2), a2);
    assert_eq!(qz.pow(w(&qz, "d"), 2), a2);
}

#[test]
fn catalog_listing() {
    let names = |n| -> Vec<String> { descriptors_up_to(n).iter().map(|d| d.short_name()).collect() };
    assert_eq!(names(4), ["Z4", "Z2^2"]);
    let mut eight = names(8);
    eight.sort();
    assert_eq!(eight, ["D8", "Q8", "Z2^2", "Z2^3", "Z4", "Z4xZ2", "Z8"]);
    let sixteen: Vec<String> = names(16).into_iter().filter(|n| !names(8).contains(n)).collect();
    assert_eq!(sixteen, ["Z16", "Z8xZ2", "D16", "SD16", "M16", "Q16", "Q8oZ4", "D8xZ2"]);
}

#[test]
fn admissible_map_kinds() {
    let f = feature_flags(&g(Family::Dihedral, 3)).unwrap();
    assert!(f.reflexible_reversing && f.regular && f.chiral_rotary);
    let f = feature_flags(&g(Family::Quaternion, 3)).unwrap();
    assert!(!f.reflexible_reversing && !f.regular && !f.chiral_rotary);
    let f = feature_flags(&g(Family::QuaternionCentralZ4, 2)).unwrap();
    assert!(f.reflexible_reversing && !f.regular && !f.chiral_rotary);
}

fn named<'a>(aut: &'a twogroups::AutGroup, name: &str) -> &'a Automorphism {
    let i = aut.names().iter().position(|n| n == name).unwrap();
    &aut.generators()[i]
}

#[test]
fn automorphism_groups() {
    let d16 = g(Family::Dihedral, 3);
    let aut = explicit_aut(&d16).unwrap();
    assert_eq!(aut.order(), 32);
    assert_eq!(aut.names(), ["rho5", "rho-1", "eta"]);
    assert_eq!(explicit_aut(&g(Family::QuaternionCentralZ4, 2)).unwrap().order(), 48);
    assert_eq!(explicit_aut(&g(Family::DihedralTimesZ2, 3)).unwrap().order(), 256);
    let e8 = catalog::build(FamilyDescriptor::elementary_abelian8()).unwrap();
    assert_eq!(brute_force_aut(&e8).unwrap().order(), 168);
    assert_eq!(brute_force_aut(&g(Family::Quaternion, 2)).unwrap().order(), 24);
    let z8 = g(Family::Cyclic, 3);
    let all = twogroups::aut::brute_force_automorphisms(&z8).unwrap();
    let mut images: Vec<String> = all.iter().map(|f| z8.word(f.images()[0])).collect();
    images.sort();
    assert_eq!(images, ["a", "a^3", "a^5", "a^7"]);
}

#[test]
fn automorphism_action() {
    let d16 = g(Family::Dihedral, 3);
    let aut = explicit_aut(&d16).unwrap();
    let (rho5, rho_m1, eta) = (named(&aut, "rho5"), named(&aut, "rho-1"), named(&aut, "eta"));
    assert_eq!(rho_m1.apply(&d16, d16.a()), d16.inv(d16.a()));
    let u = w(&d16, "a^3*b");
    assert_eq!(Automorphism::identity(&d16).apply(&d16, u), u);
    // rho5 then rho-1 sends a to a^-5
    assert_eq!(words(&d16, rho5.compose(&d16, rho_m1).images()), ["a^3", "b"]);
    assert_eq!(words(&d16, eta.compose(&d16, eta).images()), ["a", "a^2*b"]);

    let dz = g(Family::DihedralTimesZ2, 3);
    let aut = explicit_aut(&dz).unwrap();
    let (tau, sigma) = (named(&aut, "tau"), named(&aut, "sigma"));
    assert_eq!(dz.word(tau.apply(&dz, w(&dz, "a*b"))), "a*b*c");
    let tsts = tau.compose(&dz, sigma).compose(&dz, tau).compose(&dz, sigma);
    assert_eq!(words(&dz, tsts.images()), ["a^5", "b", "c"]);
}

#[test]
fn tuple_counts() {
    let d8 = g(Family::Dihedral, 2);
    let all = triples::enumerate(&d8, TupleKind::Reversing).unwrap();
    assert_eq!(all.len(), 72);
    assert_eq!(all.iter().filter(|t| t.parts.contains(&d8.a0())).count(), 24);
    assert!(triples::enumerate(&g(Family::Quaternion, 3), TupleKind::Reversing)
        .unwrap()
        .is_empty());
    assert_eq!(triples::enumerate(&g(Family::Dihedral, 3), TupleKind::RotaryPair).unwrap().len(), 64);
}

#[test]
fn orbit_partitions() {
    let p = triples::orbits(&g(Family::Dihedral, 2), TupleKind::Reversing).unwrap();
    assert_eq!(p.len(), 9);
    assert!(p.classes().iter().all(|c| c.size == 8));
    let p = triples::orbits(&g(Family::Dihedral, 3), TupleKind::Reversing).unwrap();
    assert_eq!(p.len(), 15);
    assert!(p.classes().iter().all(|c| c.size == 32));
    let e8 = catalog::build(FamilyDescriptor::elementary_abelian8()).unwrap();
    assert_eq!(triples::orbits(&e8, TupleKind::Reversing).unwrap().len(), 1);
    let z8 = g(Family::Cyclic, 3);
    let reps = triples::orbits(&z8, TupleKind::RotaryPair).unwrap().representatives();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].words(&z8), ["a", "a^4"]);
}

#[test]
fn equivalence() {
    let d16 = g(Family::Dihedral, 3);
    let t1 = GenTuple::parse(&d16, TupleKind::Reversing, &["b", "a*b", "a^4"]).unwrap();
    let t2 = GenTuple::parse(&d16, TupleKind::Reversing, &["a^4", "b", "a*b"]).unwrap();
    assert!(!triples::equivalent(&d16, &t1, &t2).unwrap());
    assert!(triples::equivalent(&d16, &t1, &t1).unwrap());
    let k = g(Family::CyclicTimesZ2, 1);
    let t1 = GenTuple::parse(&k, TupleKind::Reversing, &["a", "b", "b"]).unwrap();
    let t2 = GenTuple::parse(&k, TupleKind::Reversing, &["b", "a", "a"]).unwrap();
    assert!(triples::equivalent(&k, &t1, &t2).unwrap());
}

#[test]
fn representative_sets() {
    for (family, ell, n) in [(Family::DihedralTimesZ2, 3, 9), (Family::DihedralSemiZ2, 3, 12)] {
        let grp = g(family, ell);
        let r = triples::match_representatives(&grp, TupleKind::Reversing).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.listed, r.orbit_count), (n, n));
    }
}

fn chi_of(g: &GroupInstance, kind: TupleKind, parts: &[&str], mt: MapType) -> i128 {
    maps::chi(g, &GenTuple::parse(g, kind, parts).unwrap(), mt).unwrap()
}

#[test]
fn euler_characteristics() {
    use MapType::*;
    use TupleKind::*;
    let d16 = g(Family::Dihedral, 3);
    assert_eq!(chi_of(&d16, Reversing, &["b", "a*b", "a^4"], Type2Star), 1);
    let qz = g(Family::QuaternionCentralZ4, 2);
    assert_eq!(chi_of(&qz, Reversing, &["a*d", "a*c*d", "c*d"], Type2Star), -2);
    let z8 = g(Family::Cyclic, 3);
    assert_eq!(chi_of(&z8, RotaryPair, &["a", "a^4"], Type2PEx), -2);
    assert_eq!(chi_of(&d16, Regular, &["b", "a*b", "a^4*b"], Type1), -2);
    let k = g(Family::CyclicTimesZ2, 1);
    assert_eq!(chi_of(&k, Regular, &["a", "a*b", "b"], Type1), 1);
    let dz = g(Family::DihedralTimesZ2, 3);
    assert_eq!(chi_of(&dz, Regular, &["b", "a*b", "c"], Type1), 2);
    assert_eq!(chi_of(&d16, RotaryPair, &["a", "b"], Type2StarEx), 4 - 8);
    assert_eq!(chi_of(&d16, RotaryPair, &["a*b", "b"], Type2StarEx), 2);
}

#[test]
fn surviving_maps() {
    let ds = g(Family::DihedralSemiZ2, 3);
    let regular: Vec<(Vec<String>, i128)> = maps::classify(&ds)
        .unwrap()
        .into_iter()
        .filter(|r| r.map_type == MapType::Type1 && r.passes_filter)
        .map(|r| (r.tuple.words(&ds), r.chi))
        .collect();
    let mut tuples: Vec<&Vec<String>> = regular.iter().map(|(t, _)| t).collect();
    tuples.sort();
    assert_eq!(tuples, [&vec!["b", "a*b", "c"], &vec!["c", "a*b", "b"]]);
    assert!(regular.iter().all(|&(_, chi)| chi == -2));
    assert!(maps::classify(&g(Family::Quaternion, 3)).unwrap().is_empty());
    let d16 = g(Family::Dihedral, 3);
    let c = maps::classify_full(&d16).unwrap();
    let survives = |parts: &[&str]| {
        let t = GenTuple::parse(&d16, TupleKind::RotaryPair, parts).unwrap();
        let orbit = c.partition(TupleKind::RotaryPair).unwrap().class_of(&d16, &t);
        let rec = c
            .records
            .iter()
            .find(|r| r.map_type == MapType::Type2StarEx && r.orbit == orbit)
            .unwrap();
        (rec.passes_filter, rec.chi)
    };
    assert_eq!(survives(&["a", "b"]), (false, -4));
    assert_eq!(survives(&["a*b", "b"]), (true, 2));
}

#[test]
fn chi_shapes() {
    assert_eq!(chi_form(1), ChiForm::One);
    assert_eq!(chi_form(-6), ChiForm::TwoMinusPow { ell: 3 });
    assert_eq!(chi_form(-10), ChiForm::TwoMinusPowPlusPow { ell: 4, s: 2 });
    assert_eq!(chi_form(3), ChiForm::Other);
}
