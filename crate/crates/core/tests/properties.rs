use duality::lab::families::{c2, e0, p2, powerset, w5};
use duality::lab::{enumerate_structures, random_p0set, random_structure, sweep_structures};
use duality::saturation::saturate;
use duality::spectrum::{separativity_chain, spectrum_vs_stone, tight_characters};
use duality::tight::{
    all_assignments, enveloping_algebra, is_tight, is_tightish, map_properties, verify_fgrho,
    StructMap,
};
use duality::{Mask, P0Set};
use proptest::prelude::*;

fn structure() -> impl Strategy<Value = P0Set> {
    (1usize..=7, any::<u64>()).prop_map(|(n, seed)| random_structure(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_structures_are_valid(n in 1usize..=12, seed: u64, reflexive: bool, density in 0.0f64..=1.0) {
        let b = random_p0set(n, seed, reflexive, density).unwrap();
        prop_assert_eq!(b.size(), n);
        for x in 0..n {
            prop_assert!(b.prec(b.zero(), x));
            for y in b.above(x).iter() {
                prop_assert!(b.above(y).is_subset(b.above(x)));
            }
        }
        if reflexive {
            prop_assert!(b.is_reflexive());
        }
    }

    #[test]
    fn derived_order_is_a_preorder(b in structure()) {
        let d = b.derived();
        for x in 0..b.size() {
            prop_assert!(d.preceq(x, x));
            for y in 0..b.size() {
                for z in 0..b.size() {
                    if d.preceq(x, y) && d.preceq(y, z) {
                        prop_assert!(d.preceq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip(b in structure()) {
        prop_assert_eq!(P0Set::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn fgrho_holds(b in structure()) {
        let r = verify_fgrho(&b).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn rho_is_monotone(b in structure()) {
        let s = enveloping_algebra(&b).unwrap();
        let d = b.derived();
        for x in 0..b.size() {
            for y in 0..b.size() {
                if d.preceq(x, y) {
                    prop_assert!(s.leq(s.rho(x), s.rho(y)));
                }
            }
        }
    }

    #[test]
    fn spectrum_matches_envelope(b in structure()) {
        let r = spectrum_vs_stone(&b).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn separativity_chain_respected(b in structure()) {
        prop_assert!(separativity_chain(&b).holds("chain_respected"));
    }

    #[test]
    fn characters_exclude_zero_class(b in structure()) {
        let zc = b.derived().zero_class();
        for c in tight_characters(&b).unwrap().chars {
            prop_assert!(!c.intersects(zc));
            prop_assert!(!c.is_empty());
        }
    }

    #[test]
    fn identity_is_tight(b in structure()) {
        prop_assert!(is_tight(&StructMap::identity(&b)).unwrap());
    }

    #[test]
    fn saturation_is_idempotent_on_powersets(n in 1usize..=3, bits: u64) {
        let b = powerset(n).unwrap();
        let a = Mask(bits) & b.carrier();
        let once = saturate(&b, a).unwrap();
        prop_assert_eq!(saturate(&b, once).unwrap(), once);
    }
}

#[test]
fn tight_implies_tightish_on_small_maps() {
    for b in sweep_structures(4, 4).unwrap() {
        for target in [powerset(1).unwrap(), powerset(2).unwrap()] {
            for a in all_assignments(b.size(), b.zero(), target.size(), target.zero()) {
                let beta = StructMap::new(b.clone(), target.clone(), a).unwrap();
                if is_tight(&beta).unwrap() {
                    assert!(is_tightish(&beta).unwrap(), "{:?}", beta.assignment);
                }
            }
        }
    }
}

#[test]
fn category_laws() {
    let objects = [e0(), c2(), p2(), w5()];
    let maps = |x: &P0Set, y: &P0Set| -> Vec<StructMap> {
        all_assignments(x.size(), x.zero(), y.size(), y.zero())
            .map(|a| StructMap::new(x.clone(), y.clone(), a).unwrap())
            .filter(|m| is_tight(m).unwrap())
            .collect()
    };
    for x in &objects {
        for y in &objects[..3] {
            for f in maps(x, y) {
                assert_eq!(StructMap::identity(x).then(&f).unwrap(), f);
                assert_eq!(f.then(&StructMap::identity(y)).unwrap(), f);
                for z in &objects[..3] {
                    for g in maps(y, z) {
                        let fg = f.then(&g).unwrap();
                        assert!(is_tight(&fg).unwrap(), "tight maps compose");
                        for h in maps(z, &objects[2]) {
                            assert_eq!(
                                fg.then(&h).unwrap(),
                                f.then(&g.then(&h).unwrap()).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for n in 1..=4 {
        let all = enumerate_structures(n, false).unwrap();
        let mut rows: Vec<Vec<Mask>> = all
            .iter()
            .map(|b| (0..n).map(|x| b.above(x)).collect())
            .collect();
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), all.len());
    }
}

#[test]
fn character_flag_matches_tight_characters() {
    for b in sweep_structures(4, 3).unwrap() {
        let chars = tight_characters(&b).unwrap().chars;
        let two = powerset(1).unwrap();
        for a in all_assignments(b.size(), b.zero(), 2, 0) {
            let ones: Mask = (0..b.size()).filter(|&x| a[x] == 1).collect();
            let beta = StructMap::new(b.clone(), two.clone(), a).unwrap();
            let literal = map_properties(&beta).unwrap().holds("tight");
            assert_eq!(literal, chars.contains(&ones));
        }
    }
}
