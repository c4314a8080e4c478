//! Invariants over random elements, tuples and integers.

use proptest::prelude::*;
use twogroups::aut::explicit_aut;
use twogroups::catalog::{self, FamilyDescriptor};
use twogroups::charfree::{is_squarefree, square_divisor_scan};
use twogroups::maps::{self, chi_form, ChiForm, MapType};
use twogroups::triples::{self, TupleKind};
use twogroups::{Element, GroupInstance};

fn descriptors(max_ell: u32) -> Vec<FamilyDescriptor> {
    catalog::descriptors_up_to(1 << (max_ell + 2))
        .into_iter()
        .filter(|d| d.effective_ell() <= max_ell)
        .collect()
}

fn element(g: &GroupInstance, seed: &[u64]) -> Element {
    let mut exps = vec![(seed[0] % g.modulus()) as u32];
    exps.extend((0..g.rank()).map(|i| (seed[i + 1] & 1) as u32));
    g.element(&exps).unwrap()
}

fn group_and_elements(max_ell: u32, n: usize) -> impl Strategy<Value = (GroupInstance, Vec<Element>)> {
    let ds = descriptors(max_ell);
    (0..ds.len(), prop::collection::vec(prop::collection::vec(any::<u64>(), 4), n)).prop_map(
        move |(i, seeds)| {
            let g = catalog::build(ds[i]).unwrap();
            let els = seeds.iter().map(|s| element(&g, s)).collect();
            (g, els)
        },
    )
}

proptest! {
    #[test]
    fn group_axioms((g, e) in group_and_elements(12, 3)) {
        let (x, y, z) = (e[0], e[1], e[2]);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), Element::IDENTITY);
        prop_assert_eq!(g.mul(Element::IDENTITY, x), x);
        prop_assert_eq!(g.conj(x, y), g.mul(g.mul(g.inv(y), x), y));
        prop_assert_eq!(g.commute(x, y), g.mul(x, y) == g.mul(y, x));
    }

    #[test]
    fn powers((g, e) in group_and_elements(12, 1), m in -50i64..50, n in -50i64..50) {
        let x = e[0];
        prop_assert_eq!(g.pow(x, m + n), g.mul(g.pow(x, m), g.pow(x, n)));
        let k = g.element_order(x);
        prop_assert!(k.is_power_of_two());
        prop_assert!(g.pow(x, k as i64).is_identity());
        if k > 1 {
            prop_assert!(!g.pow(x, (k / 2) as i64).is_identity());
        }
    }

    #[test]
    fn words_round_trip((g, e) in group_and_elements(12, 1)) {
        let x = e[0];
        prop_assert_eq!(g.parse_word(&g.word(x)).unwrap(), x);
        prop_assert_eq!(g.element(&g.exponents(x)).unwrap(), x);
    }

    #[test]
    fn order_is_lexicographic((g, e) in group_and_elements(8, 2)) {
        let (x, y) = (e[0], e[1]);
        prop_assert_eq!(x.cmp(&y), g.exponents(x).cmp(&g.exponents(y)));
    }

    #[test]
    fn subgroup_order_matches_closure((g, e) in group_and_elements(5, 3), k in 0usize..=3) {
        let gens = &e[..k];
        let c = g.closure(gens).unwrap();
        prop_assert_eq!(g.subgroup_order(gens), c.order);
        prop_assert_eq!(g.generates(gens), c.order == g.order());
    }

    #[test]
    fn automorphisms_are_homomorphisms((g, e) in group_and_elements(10, 2), picks in prop::collection::vec(any::<usize>(), 0..6)) {
        let aut = explicit_aut(&g).unwrap();
        let gens = aut.generators();
        let mut f = twogroups::Automorphism::identity(&g);
        for p in picks {
            f = f.compose(&g, &gens[p % gens.len()]);
        }
        let (x, y) = (e[0], e[1]);
        prop_assert_eq!(f.apply(&g, g.mul(x, y)), g.mul(f.apply(&g, x), f.apply(&g, y)));
        prop_assert_eq!(g.element_order(f.apply(&g, x)), g.element_order(x));
    }

    #[test]
    fn filter_is_mod_four(chi in -1_000_000i128..1_000_000) {
        prop_assert_eq!(maps::passes_filter(chi), chi % 4 != 0);
    }

    #[test]
    fn scan_agrees_with_naive_powers(d in 1u64..300, x_max in 2u64..300) {
        let naive = (2..=x_max).find(|&x| {
            let m = x * x;
            (0..d).fold(1 % m, |acc, _| acc * 2 % m) == 1
        });
        prop_assert_eq!(square_divisor_scan(d, x_max).unwrap(), naive);
    }
}

/// Every tuple is equivalent to its orbit representative and realizes its
/// characteristic as V - E + F.
#[test]
fn orbits_and_euler_formula() {
    for d in descriptors(4) {
        let g = catalog::build(d).unwrap();
        for kind in TupleKind::ALL {
            let p = triples::orbits(&g, kind).unwrap();
            let tuples = triples::enumerate(&g, kind).unwrap();
            assert_eq!(p.total(), tuples.len() as u64);
            for t in tuples.iter().step_by(7) {
                let i = p.class_of(&g, t).unwrap();
                let rep = &p.classes()[i].representative;
                assert!(triples::equivalent(&g, t, rep).unwrap());
                for &mt in MapType::for_kind(kind) {
                    let r = maps::realize(&g, t, mt).unwrap();
                    assert_eq!(
                        i128::from(r.vertices) - i128::from(r.edges) + i128::from(r.faces),
                        r.chi
                    );
                    let rr = maps::realize(&g, rep, mt).unwrap();
                    assert_eq!(rr.chi, r.chi, "{} {}", d, t.display(&g));
                }
            }
        }
    }
}

#[test]
fn squarefree_matches_sieve() {
    const N: usize = 1_000_000;
    let mut square_free = vec![true; N + 1];
    let mut p = 2;
    while p * p <= N {
        for m in (p * p..=N).step_by(p * p) {
            square_free[m] = false;
        }
        p += 1;
    }
    for n in 1..=N {
        assert_eq!(is_squarefree(n as i64).unwrap(), square_free[n], "{n}");
        assert_eq!(is_squarefree(-(n as i64)).unwrap(), square_free[n], "-{n}");
    }
    assert!(is_squarefree(0).is_err());
    assert!(is_squarefree(i64::MAX).is_err());
}

#[test]
fn chi_forms_match_scan() {
    let mut forms = std::collections::BTreeMap::new();
    forms.insert(1i128, ChiForm::One);
    forms.insert(2, ChiForm::Two);
    for ell in 2..40u32 {
        forms.insert(2 - (1i128 << ell), ChiForm::TwoMinusPow { ell });
    }
    // 2 - 2^(s+1) + 2^s = 2 - 2^s keeps the shorter form
    for ell in 2..40u32 {
        for s in 2..ell {
            forms
                .entry(2 - (1i128 << ell) + (1i128 << s))
                .or_insert(ChiForm::TwoMinusPowPlusPow { ell, s });
        }
    }
    for chi in -(1i128 << 20)..=10 {
        let expected = forms.get(&chi).copied().unwrap_or(ChiForm::Other);
        assert_eq!(chi_form(chi), expected, "{chi}");
    }
}
