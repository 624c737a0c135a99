//! Tight characters, the tight spectrum, pseudobases of finite spaces and
//! the separativity characterization.
//!
//! A character `φ : B → {0,1}` is stored as its 1-set. Because `⪅` shrinks
//! with its left argument and grows with its right one, `φ` preserves `⪅`
//! exactly when `φ⁻¹(1) ⪅ φ⁻¹(0)` fails, which makes enumeration cheap.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::stone::enumerate_ultrafilters;
use crate::structure::{is_separative, is_ssc, OrderTables, P0Set};
use crate::tight::{covers, enveloping_algebra, lower_bounds, rho, RegularOpenAlgebra};
use crate::topology::FiniteTopology;

/// Largest carrier for character enumeration.
pub const CHARACTER_CAP: usize = 16;
/// Largest carrier for maximal centred set enumeration.
pub const CENTRED_CAP: usize = 16;
/// Largest carrier for comparing the spectrum with the envelope's Stone space.
pub const STONE_COMPARISON_CAP: usize = 8;
/// Envelopes up to this size are also checked by literal character and
/// ultrafilter enumeration.
const LITERAL_ENVELOPE_LIMIT: usize = 16;

fn cap(b: &P0Set, limit: usize, what: &'static str) -> Result<()> {
    if b.size() > limit {
        return Err(Error::CapExceeded {
            what,
            size: b.size(),
            limit,
        });
    }
    Ok(())
}

/// Whether the indicator of `ones` is a tight character.
pub fn is_tight_character(b: &P0Set, ones: Mask) -> bool {
    !ones.contains(b.zero()) && !covers(b, ones, b.carrier().minus(ones))
}

/// Whether the indicator of `ones` is a tightish character.
pub fn is_tightish_character(b: &P0Set, ones: Mask) -> bool {
    !ones.contains(b.zero()) && (ones.is_empty() || is_tight_character(b, ones))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    pub base: P0Set,
    /// 1-sets, sorted.
    pub chars: Vec<Mask>,
}

impl CharacterSet {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// `O_x = {φ : φ(x) = 1}` as a mask over character indices.
    pub fn basic_open(&self, x: usize) -> Mask {
        (0..self.chars.len())
            .filter(|&i| self.chars[i].contains(x))
            .collect()
    }

    pub fn index_of(&self, ones: Mask) -> Option<usize> {
        self.chars.binary_search(&ones).ok()
    }
}

fn nonzero_candidates(b: &P0Set) -> impl Iterator<Item = Mask> + '_ {
    let rest = b.carrier().without(b.zero());
    rest.subsets().skip(1)
}

/// All nonzero tight characters.
pub fn tight_characters(b: &P0Set) -> Result<CharacterSet> {
    cap(b, CHARACTER_CAP, "character carrier")?;
    let mut chars: Vec<Mask> = nonzero_candidates(b)
        .filter(|&m| is_tight_character(b, m))
        .collect();
    chars.sort();
    Ok(CharacterSet {
        base: b.clone(),
        chars,
    })
}

/// All nonzero tightish characters.
pub fn tightish_characters(b: &P0Set) -> Result<Vec<Mask>> {
    cap(b, CHARACTER_CAP, "character carrier")?;
    let mut out: Vec<Mask> = nonzero_candidates(b)
        .filter(|&m| is_tightish_character(b, m))
        .collect();
    out.sort();
    Ok(out)
}

fn is_centred(b: &P0Set, c: Mask) -> bool {
    !lower_bounds(b, c).is_subset(b.derived().zero_class())
}

/// Maximal `C` all of whose finite subsets have a nonzero lower bound.
pub fn maximal_centred_sets(b: &P0Set) -> Result<Vec<Mask>> {
    cap(b, CENTRED_CAP, "centred set carrier")?;
    let centred: Vec<Mask> = Mask::all(b.size()).filter(|&c| is_centred(b, c)).collect();
    let mut out: Vec<Mask> = centred
        .iter()
        .copied()
        .filter(|&c| (0..b.size()).all(|x| c.contains(x) || !is_centred(b, c.with(x))))
        .collect();
    out.sort();
    Ok(out)
}

/// Pseudobasis conditions plus per-member clopen and compact flags.
#[derive(Clone, Debug)]
pub struct PseudobasisReport {
    pub report: Report,
    pub clopen: Vec<bool>,
    pub compact: Vec<bool>,
}

impl PseudobasisReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn all_clopen(&self) -> bool {
        self.clopen.iter().all(|&c| c)
    }
}

/// `minimum`, `cover`, `coinitiality` and `t0` for a family of opens.
pub fn is_pseudobasis(x: &FiniteTopology, family: &[Mask]) -> Result<PseudobasisReport> {
    if let Some(i) = family.iter().position(|&m| !x.is_open(m)) {
        return Err(Error::NotOpen(i));
    }
    let mut r = Report::new("pseudobasis");
    r.push(Verdict::flag("minimum", family.contains(&Mask::EMPTY)));
    let union = family.iter().fold(Mask::EMPTY, |a, &m| a | m);
    r.push(Verdict::check(
        "cover",
        x.whole().minus(union).first().map(|p| vec![p]),
    ));
    let coinitial = x.opens().iter().position(|&o| {
        !o.is_empty() && !family.iter().any(|&n| !n.is_empty() && n.is_subset(o))
    });
    r.push(Verdict::check("coinitiality", coinitial.map(|i| vec![i])));
    let mut t0 = None;
    'pairs: for p in 0..x.points() {
        for q in (p + 1)..x.points() {
            if !family.iter().any(|&o| o.contains(p) != o.contains(q)) {
                t0 = Some(vec![p, q]);
                break 'pairs;
            }
        }
    }
    r.push(Verdict::check("t0", t0));
    let clopen = family.iter().map(|&o| x.is_closed(o)).collect();
    Ok(PseudobasisReport {
        report: r,
        clopen,
        compact: vec![true; family.len()],
    })
}

/// The tight spectrum with its designated pseudobasis `(O_x)`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub characters: CharacterSet,
    pub topology: FiniteTopology,
    /// `O_x` for each element `x` of the base.
    pub pseudobasis: Vec<Mask>,
    pub report: Report,
}

pub fn spectrum_space(b: &P0Set) -> Result<Spectrum> {
    let characters = tight_characters(b)?;
    let topology = FiniteTopology::discrete(characters.len())?;
    let pseudobasis: Vec<Mask> = (0..b.size()).map(|x| characters.basic_open(x)).collect();
    let mut report = is_pseudobasis(&topology, &pseudobasis)?.report;
    let dense = maximal_centred_sets(b)? == characters.chars;
    report.push(Verdict::flag("centred_characters_dense", dense));
    Ok(Spectrum {
        characters,
        topology,
        pseudobasis,
        report,
    })
}

/// The point map `x ↦ φ_x` of a clopen pseudobasis.
#[derive(Clone, Debug)]
pub struct Homeomorphism {
    /// The family as a structure ordered by inclusion.
    pub structure: P0Set,
    pub characters: CharacterSet,
    /// `map[p]` is the index of `φ_p` among the characters, if it is one.
    pub map: Vec<Option<usize>>,
    pub report: Report,
}

pub fn spectrum_homeomorphism(x: &FiniteTopology, family: &[Mask]) -> Result<Homeomorphism> {
    let pb = is_pseudobasis(x, family)?;
    if !pb.passed() {
        return Err(Error::NotPseudobasis);
    }
    if let Some(i) = pb.clopen.iter().position(|&c| !c) {
        return Err(Error::NotClopen(i));
    }
    let zero = family
        .iter()
        .position(|m| m.is_empty())
        .ok_or(Error::MissingEmptySet)?;
    let structure = P0Set::from_fn(family.len(), zero, |i, j| family[i].is_subset(family[j]))?;
    let characters = tight_characters(&structure)?;
    let phis: Vec<Mask> = (0..x.points())
        .map(|p| (0..family.len()).filter(|&i| family[i].contains(p)).collect())
        .collect();
    let map: Vec<Option<usize>> = phis.iter().map(|&phi| characters.index_of(phi)).collect();
    let mut r = Report::new("spectrum homeomorphism");
    r.push(Verdict::check(
        "tight_nonzero",
        (0..x.points())
            .find(|&p| phis[p].is_empty() || !is_tight_character(&structure, phis[p]))
            .map(|p| vec![p]),
    ));
    let mut injective = None;
    'pairs: for p in 0..x.points() {
        for q in (p + 1)..x.points() {
            if phis[p] == phis[q] {
                injective = Some(vec![p, q]);
                break 'pairs;
            }
        }
    }
    r.push(Verdict::check("injective", injective));
    r.push(Verdict::check(
        "surjective",
        (0..characters.len())
            .find(|&c| !map.contains(&Some(c)))
            .map(|c| vec![c]),
    ));
    let opens = (0..family.len()).find(|&i| {
        let image: Mask = family[i].iter().filter_map(|p| map[p]).collect();
        image != characters.basic_open(i)
    });
    r.push(Verdict::check("opens_correspond", opens.map(|i| vec![i])));
    Ok(Homeomorphism {
        structure,
        characters,
        map,
        report: r,
    })
}

/// First `(x, y)` with `ρ(x) = ρ(y)` although `x` and `y` are not
/// `⪯`-equivalent.
pub fn rho_collision(b: &P0Set) -> Option<Vec<usize>> {
    let d = b.derived();
    let images: Vec<Mask> = (0..b.size()).map(|x| rho(b, x)).collect();
    for x in 0..b.size() {
        for y in (x + 1)..b.size() {
            let equivalent = d.preceq(x, y) && d.preceq(y, x);
            if images[x] == images[y] && !equivalent {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

pub fn rho_injective(b: &P0Set) -> bool {
    rho_collision(b).is_none()
}

/// Separativity, injectivity of `x ↦ O_x` and `x ⪯ y ⇔ O_x ⊆ O_y`, and that
/// `(O_x)` is a clopen pseudobasis of the spectrum.
pub fn verify_pseudochar(b: &P0Set) -> Result<Report> {
    let space = spectrum_space(b)?;
    let d = b.derived();
    let o = &space.pseudobasis;
    let mut r = Report::new("pseudobasis characterization");
    r.push(Verdict::check(
        "separative",
        crate::structure::separativity_counterexample(b),
    ));
    let pb = is_pseudobasis(&space.topology, o)?;
    let clopen = pb.all_clopen();
    r.absorb("pseudobasis.", pb.report);
    r.push(Verdict::flag("clopen", clopen));
    let mut iso = None;
    let mut injective = None;
    for x in 0..b.size() {
        for y in 0..b.size() {
            if iso.is_none() && d.preceq(x, y) != o[x].is_subset(o[y]) {
                iso = Some(vec![x, y]);
            }
            let equivalent = d.preceq(x, y) && d.preceq(y, x);
            if injective.is_none() && x < y && o[x] == o[y] && !equivalent {
                injective = Some(vec![x, y]);
            }
        }
    }
    r.push(Verdict::check("xOxIso", iso));
    r.push(Verdict::check("injective", injective));
    Ok(r)
}

/// `separative ⇒ ρ injective ⇒ ssc`, and all three equal on meet semilattices.
pub fn separativity_chain(b: &P0Set) -> Report {
    let sep = is_separative(b);
    let inj = rho_injective(b);
    let ssc = is_ssc(b);
    let mut r = Report::new("separativity chain");
    r.push(Verdict::flag("separative", sep));
    r.push(Verdict::flag("rho_injective", inj));
    r.push(Verdict::flag("ssc", ssc));
    r.push(Verdict::flag("chain_respected", (!sep || inj) && (!inj || ssc)));
    if OrderTables::new(b).is_meet_semilattice() {
        r.push(Verdict::flag("semilattice_equivalence", sep == inj && inj == ssc));
    } else {
        r.push(Verdict::skip("semilattice_equivalence", "not a meet semilattice"));
    }
    r
}

/// Nonzero tight characters of the envelope, as sorted element lists: the
/// principal filters `↑a` whose indicator is a lattice homomorphism keeping
/// the top.
fn envelope_characters(s: &RegularOpenAlgebra) -> Vec<Vec<usize>> {
    let n = s.len();
    let top = s.top();
    let mut out = Vec::new();
    for a in 1..n {
        let phi = |i: usize| s.leq(a, i);
        let hom = phi(top)
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    phi(s.meet(i, j)) == (phi(i) && phi(j)) && phi(s.join(i, j)) == (phi(i) || phi(j))
                })
            });
        if hom {
            out.push((0..n).filter(|&i| phi(i)).collect());
        }
    }
    out.sort();
    out
}

/// `φ ↦ φ∘ρ` from characters of the envelope onto the tight characters, and
/// characters of the envelope against its ultrafilters.
pub fn spectrum_vs_stone(b: &P0Set) -> Result<Report> {
    cap(b, STONE_COMPARISON_CAP, "spectrum comparison carrier")?;
    let s = enveloping_algebra(b)?;
    let ours = tight_characters(b)?;
    let mut env_chars = envelope_characters(&s);
    let mut ultra = s.ultrafilters();
    ultra.sort();
    let mut r = Report::new("spectrum vs Stone space");
    if s.len() <= LITERAL_ENVELOPE_LIMIT {
        let sp = s.as_p0set()?;
        let literal: Vec<Vec<usize>> = tight_characters(&sp)?
            .chars
            .iter()
            .map(|m| m.iter().collect())
            .collect();
        let mut literal_sorted = literal;
        literal_sorted.sort();
        r.push(Verdict::flag("envelope_characters_literal", literal_sorted == env_chars));
        let mut stone: Vec<Vec<usize>> = enumerate_ultrafilters(&sp)?
            .iter()
            .map(|m| m.iter().collect())
            .collect();
        stone.sort();
        r.push(Verdict::flag("envelope_ultrafilters_literal", stone == ultra));
        env_chars = literal_sorted;
    }
    let pulled: Vec<Mask> = env_chars
        .iter()
        .map(|ones| (0..b.size()).filter(|&x| ones.contains(&s.rho(x))).collect())
        .collect();
    let mut distinct = pulled.clone();
    distinct.sort();
    distinct.dedup();
    r.push(Verdict::flag("pullback_injective", distinct.len() == pulled.len()));
    r.push(Verdict::flag("pullback_onto_tight_characters", distinct == ours.chars));
    r.push(Verdict::flag("characters_are_ultrafilters", env_chars == ultra));
    let centred = maximal_centred_sets(b)?;
    r.push(Verdict::flag("characters_are_maximal_centred", centred == ours.chars));
    r.push(Verdict::flag(
        "counts_agree",
        ours.len() == ultra.len() && ours.len() == centred.len(),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, d3, e0, one_point, p2, powerset, w5};
    use crate::tight::{map_properties, StructMap};

    fn m(v: &[usize]) -> Mask {
        Mask::from_indices(v.iter().copied())
    }

    fn literal(b: &P0Set, tightish: bool) -> Vec<Mask> {
        let two = powerset(1).unwrap();
        let mut out = Vec::new();
        for ones in b.carrier().without(b.zero()).subsets().skip(1) {
            let a = (0..b.size()).map(|x| usize::from(ones.contains(x))).collect();
            let beta = StructMap::new(b.clone(), two.clone(), a).unwrap();
            let r = map_properties(&beta).unwrap();
            if r.holds(if tightish { "tightish" } else { "tight" }) {
                out.push(ones);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn character_examples() {
        assert_eq!(tight_characters(&e0()).unwrap().chars, vec![m(&[1]), m(&[2])]);
        assert_eq!(tight_characters(&c2()).unwrap().chars, vec![m(&[1, 2])]);
        assert_eq!(tight_characters(&p2()).unwrap().len(), 2);
        assert!(tight_characters(&one_point()).unwrap().is_empty());
    }

    #[test]
    fn characters_match_the_literal_definition() {
        for b in [e0(), c2(), p2(), d3(), w5(), one_point()] {
            assert_eq!(tight_characters(&b).unwrap().chars, literal(&b, false));
            assert_eq!(tightish_characters(&b).unwrap(), literal(&b, true));
            assert_eq!(tight_characters(&b).unwrap().chars, maximal_centred_sets(&b).unwrap());
        }
    }

    #[test]
    fn centred_examples() {
        assert_eq!(maximal_centred_sets(&e0()).unwrap(), vec![m(&[1]), m(&[2])]);
        assert_eq!(maximal_centred_sets(&c2()).unwrap(), vec![m(&[1, 2])]);
    }

    #[test]
    fn pseudobasis_examples() {
        let x = FiniteTopology::discrete(2).unwrap();
        let r = is_pseudobasis(&x, &[m(&[]), m(&[0]), m(&[1])]).unwrap();
        assert!(r.passed() && r.all_clopen());
        let r = is_pseudobasis(&x, &[m(&[]), m(&[0, 1])]).unwrap();
        assert_eq!(r.report.witness("t0"), Some(&[0, 1][..]));
        let r = is_pseudobasis(&x, &[m(&[0]), m(&[1])]).unwrap();
        assert!(!r.report.holds("minimum"));
    }

    #[test]
    fn spectrum_examples() {
        let s = spectrum_space(&e0()).unwrap();
        assert_eq!(s.characters.len(), 2);
        assert_eq!(s.pseudobasis[1].len(), 1);
        assert!(s.report.passed(), "{}", s.report);
        let s = spectrum_space(&c2()).unwrap();
        assert_eq!(s.characters.len(), 1);
        assert_eq!(s.pseudobasis[1], s.pseudobasis[2]);
        assert_eq!(spectrum_space(&one_point()).unwrap().characters.len(), 0);
    }

    #[test]
    fn homeomorphism_examples() {
        let x = FiniteTopology::discrete(2).unwrap();
        let h = spectrum_homeomorphism(&x, &[m(&[]), m(&[0]), m(&[1])]).unwrap();
        assert!(h.report.passed());
        assert_eq!(h.characters.chars, vec![m(&[1]), m(&[2])]);
        let h = spectrum_homeomorphism(&x, &[m(&[]), m(&[0]), m(&[1]), m(&[0, 1])]).unwrap();
        assert!(h.report.passed());
        let x = FiniteTopology::discrete(1).unwrap();
        let h = spectrum_homeomorphism(&x, &[m(&[]), m(&[0])]).unwrap();
        assert_eq!(h.map, vec![Some(0)]);
    }

    #[test]
    fn pseudochar_examples() {
        assert!(verify_pseudochar(&e0()).unwrap().passed());
        assert!(verify_pseudochar(&p2()).unwrap().passed());
        let r = verify_pseudochar(&c2()).unwrap();
        assert!(!r.holds("separative") && !r.holds("injective"));
    }

    #[test]
    fn chain_examples() {
        for (b, v) in [(e0(), true), (c2(), false), (p2(), true)] {
            let r = separativity_chain(&b);
            for f in ["separative", "rho_injective", "ssc"] {
                assert_eq!(r.holds(f), v, "{f}");
            }
            assert!(r.holds("chain_respected") && r.holds("semilattice_equivalence"));
        }
    }

    #[test]
    fn stone_comparison_examples() {
        for b in [e0(), c2(), w5(), p2(), d3(), one_point()] {
            let r = spectrum_vs_stone(&b).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
