//! Worked examples on the small named structures, end to end.

use duality::axioms::{check_basic_semilattice, is_basic_lattice, phi_holds};
use duality::lab::families::{c2, d3, e0, make_family, one_point, p2, powerset, w5};
use duality::lab::search::search_counterexample;
use duality::saturation::{saturated_family, verify_frame, Generators};
use duality::spectrum::{
    is_pseudobasis, separativity_chain, spectrum_homeomorphism, spectrum_space,
    spectrum_vs_stone, tight_characters, verify_pseudochar,
};
use duality::stone::{enumerate_ultrafilters, stone_space, verify_duality};
use duality::structure::order_predicates;
use duality::tight::{
    covers, enveloping_algebra, factor_tight, map_properties, naturality_square, StructMap,
};
use duality::{Error, FiniteTopology, Mask, P0Set};

fn m(items: &[usize]) -> Mask {
    Mask::from_indices(items.iter().copied())
}

#[test]
fn three_point_structure_from_json() {
    let b = P0Set::from_json(r#"{"size":3,"zero":0,"prec":[[0,0],[0,1],[0,2],[1,1],[2,2]]}"#).unwrap();
    assert_eq!(b.above(1), e0().above(1));
    assert_eq!(b.above(0), e0().above(0));
    let err = P0Set::from_json(r#"{"size":3,"zero":0,"prec":[[0,1],[1,2]]}"#).unwrap_err();
    assert!(matches!(err, Error::NotTransitive(0, 1, 2)));
}

#[test]
fn order_flags() {
    assert!(order_predicates(&p2()).passed());
    let d = order_predicates(&d3());
    assert!(d.holds("lattice") && !d.holds("distributive"));
    let c = order_predicates(&c2());
    assert!(!c.holds("separative") && !c.holds("ssc"));
}

#[test]
fn semilattice_axioms() {
    assert!(check_basic_semilattice(&e0()).passed());
    assert!(check_basic_semilattice(&p2()).passed());
    assert!(!check_basic_semilattice(&c2()).holds("theta"));
    let w = w5();
    let (x, y) = (w.index_of("x").unwrap(), w.index_of("y").unwrap());
    assert!(phi_holds(&w, x, y, 1) && !phi_holds(&w, x, y, 2));
}

#[test]
fn stone_spaces() {
    assert_eq!(enumerate_ultrafilters(&p2()).unwrap().len(), 2);
    assert_eq!(enumerate_ultrafilters(&e0()).unwrap(), vec![m(&[1]), m(&[2])]);
    assert_eq!(enumerate_ultrafilters(&c2()).unwrap(), vec![m(&[1, 2])]);
    let c = stone_space(&c2()).unwrap();
    assert_eq!(c.basic_open(1), c.basic_open(2));
    assert!(is_basic_lattice(&p2()));
    assert!(verify_duality(&p2()).unwrap().passed());
}

#[test]
fn saturation_families() {
    let f = saturated_family(&p2(), Generators::All).unwrap();
    assert_eq!(f.len(), 4);
    assert_eq!(saturated_family(&e0(), Generators::All).unwrap().len(), 4);
    assert_eq!(saturated_family(&one_point(), Generators::All).unwrap().len(), 1);
    assert!(verify_frame(&e0()).unwrap().passed());
}

#[test]
fn covers_on_three_points() {
    let b = e0();
    assert!(covers(&b, Mask::EMPTY, m(&[1, 2])));
    assert!(!covers(&b, m(&[1]), m(&[2])));
    assert!(covers(&b, m(&[1, 2]), m(&[1, 2])));
}

#[test]
fn codomain_decides_tightness() {
    let wide = StructMap::new(e0(), powerset(3).unwrap(), vec![0, 1, 2]).unwrap();
    let r = map_properties(&wide).unwrap();
    assert!(r.holds("tightish") && !r.holds("tight"));
    let narrow = StructMap::new(e0(), p2(), vec![0, 1, 2]).unwrap();
    assert!(map_properties(&narrow).unwrap().holds("tight"));
    let id = map_properties(&StructMap::identity(&p2())).unwrap();
    assert!(id.holds("tight") && id.holds("coinitial"));
}

#[test]
fn enveloping_algebras() {
    assert_eq!(enveloping_algebra(&e0()).unwrap().len(), 4);
    assert_eq!(enveloping_algebra(&c2()).unwrap().len(), 2);
    assert_eq!(enveloping_algebra(&p2()).unwrap().len(), 4);
}

#[test]
fn factoring_through_the_envelope() {
    let beta = StructMap::new(e0(), p2(), vec![0, 1, 2]).unwrap();
    let f = factor_tight(&beta).unwrap();
    assert!(f.report.passed());
    let mut values = f.values.clone();
    values.sort();
    assert_eq!(values, vec![0, 1, 2, 3]);
    assert!(naturality_square(&beta).unwrap().passed());

    let chain = StructMap::new(c2(), powerset(1).unwrap(), vec![0, 1, 1]).unwrap();
    let f = factor_tight(&chain).unwrap();
    let top = f.algebra.top();
    assert_eq!(f.values[top], 1);
}

#[test]
fn characters_and_spectra() {
    assert_eq!(tight_characters(&e0()).unwrap().chars, vec![m(&[1]), m(&[2])]);
    assert_eq!(tight_characters(&c2()).unwrap().chars, vec![m(&[1, 2])]);
    assert_eq!(tight_characters(&p2()).unwrap().len(), 2);
    assert_eq!(spectrum_space(&one_point()).unwrap().characters.len(), 0);
    let c = spectrum_space(&c2()).unwrap();
    assert_eq!(c.pseudobasis[1], c.pseudobasis[2]);
}

#[test]
fn pseudobases() {
    let x = FiniteTopology::discrete(2).unwrap();
    let r = is_pseudobasis(&x, &[Mask::EMPTY, m(&[0]), m(&[1])]).unwrap();
    assert!(r.passed() && r.all_clopen());
    let r = is_pseudobasis(&x, &[Mask::EMPTY, m(&[0, 1])]).unwrap();
    assert!(!r.report.holds("t0"));
    let h = spectrum_homeomorphism(&x, &[Mask::EMPTY, m(&[0]), m(&[1])]).unwrap();
    assert!(h.report.passed());
}

#[test]
fn separativity() {
    assert!(verify_pseudochar(&e0()).unwrap().passed());
    assert!(verify_pseudochar(&p2()).unwrap().passed());
    assert!(!verify_pseudochar(&c2()).unwrap().holds("injective"));
    let c = separativity_chain(&c2());
    assert!(!c.holds("separative") && !c.holds("rho_injective") && !c.holds("ssc"));
    assert!(c.holds("chain_respected"));
    for b in [e0(), c2(), w5(), p2(), d3()] {
        assert!(spectrum_vs_stone(&b).unwrap().passed());
    }
}

#[test]
fn lab_searches() {
    assert_eq!(make_family("diamond", 3).unwrap().size(), 5);
    assert!(search_counterexample("separative_implies_rho_injective", 5, 10_000, 1)
        .unwrap()
        .is_none());
    assert_eq!(
        search_counterexample("decomposition_holds_on_D3", 0, 1, 0).unwrap(),
        Some(d3())
    );
}
