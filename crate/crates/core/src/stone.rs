//! Filters, ultrafilters, Stone spaces and the duality checks between
//! basic lattices and finite spaces with a distinguished basis.

use crate::axioms::is_basic_lattice;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::structure::{OrderTables, P0Set};
use crate::topology::FiniteTopology;

/// Largest carrier for which filters are enumerated.
pub const FILTER_CAP: usize = 20;

fn check_cap(b: &P0Set) -> Result<()> {
    if b.size() > FILTER_CAP {
        return Err(Error::CapExceeded {
            what: "filter enumeration carrier",
            size: b.size(),
            limit: FILTER_CAP,
        });
    }
    Ok(())
}

/// `x ≻ y ∈ U ⇒ x ∈ U`.
pub fn is_succ_closed(b: &P0Set, u: Mask) -> bool {
    b.up_prec(u).is_subset(u)
}

/// `x, y ∈ U ⇒ ∃z∈U (z ≺ x, y)`.
pub fn is_prec_directed(b: &P0Set, u: Mask) -> bool {
    u.iter()
        .all(|x| u.iter().all(|y| !(u & b.below(x) & b.below(y)).is_empty()))
}

pub fn is_filter(b: &P0Set, u: Mask) -> bool {
    is_succ_closed(b, u) && is_prec_directed(b, u)
}

/// `x, y ∈ U ⇒ ∃z∈U (z ⪯ x, y)`.
pub fn is_preceq_directed(b: &P0Set, u: Mask) -> bool {
    let d = b.derived();
    u.iter()
        .all(|x| u.iter().all(|y| !(u & d.down(x) & d.down(y)).is_empty()))
}

/// `⪰`-closed and `⪯`-directed.
pub fn is_preceq_filter(b: &P0Set, u: Mask) -> bool {
    b.derived().up_closure(u).is_subset(u) && is_preceq_directed(b, u)
}

/// `U ⊆ U^≺`.
pub fn is_prec_coinitial(b: &P0Set, u: Mask) -> bool {
    u.is_subset(b.up_prec(u))
}

/// `⪯`-closed downwards and `⪯`-directed upwards.
pub fn is_preceq_ideal(b: &P0Set, i: Mask) -> bool {
    let d = b.derived();
    d.down_closure(i).is_subset(i)
        && i.iter()
            .all(|x| i.iter().all(|y| !(i & d.up(x) & d.up(y)).is_empty()))
}

/// All `≻`-closed sets, by branching on membership of each element.
fn succ_closed_sets(b: &P0Set) -> Vec<Mask> {
    fn go(b: &P0Set, i: usize, inside: Mask, outside: Mask, out: &mut Vec<Mask>) {
        if i == b.size() {
            out.push(inside);
            return;
        }
        if inside.contains(i) || outside.contains(i) {
            go(b, i + 1, inside, outside, out);
            return;
        }
        let add = b.above(i).with(i);
        if !add.intersects(outside) {
            go(b, i + 1, inside | add, outside, out);
        }
        let remove = b.below(i).with(i);
        if !remove.intersects(inside) {
            go(b, i + 1, inside, outside | remove, out);
        }
    }
    let mut out = Vec::new();
    go(b, 0, Mask::EMPTY, Mask::EMPTY, &mut out);
    out
}

/// Every `≺`-filter, including `∅` and `B`, in increasing mask order.
pub fn enumerate_filters(b: &P0Set) -> Result<Vec<Mask>> {
    check_cap(b)?;
    let mut filters: Vec<Mask> = succ_closed_sets(b)
        .into_iter()
        .filter(|&u| is_prec_directed(b, u))
        .collect();
    filters.sort();
    Ok(filters)
}

/// Nonempty proper filters not strictly contained in another proper filter.
pub fn enumerate_ultrafilters(b: &P0Set) -> Result<Vec<Mask>> {
    let full = b.carrier();
    let proper: Vec<Mask> = enumerate_filters(b)?
        .into_iter()
        .filter(|&u| u != full)
        .collect();
    Ok(maximal_nonempty(&proper))
}

fn maximal_nonempty(proper: &[Mask]) -> Vec<Mask> {
    proper
        .iter()
        .copied()
        .filter(|u| !u.is_empty())
        .filter(|&u| !proper.iter().any(|&v| v != u && u.is_subset(v)))
        .collect()
}

/// Ultrafilter criteria for a nonempty proper filter: maximality, the
/// complement being a `⪯`-ideal, and the `⊥`-witness description of the
/// complement. Their agreement is asserted only on basic lattices.
pub fn ultrafilter_properties(b: &P0Set, u: Mask) -> Result<Report> {
    check_cap(b)?;
    if u.is_empty() || u == b.carrier() || !u.is_subset(b.carrier()) || !is_filter(b, u) {
        return Err(Error::NotAFilter(u.to_string()));
    }
    let d = b.derived();
    let proper: Vec<Mask> = enumerate_filters(b)?
        .into_iter()
        .filter(|&v| v != b.carrier())
        .collect();
    let extension = proper.iter().find(|&&v| v != u && u.is_subset(v));
    let complement = b.carrier().minus(u);
    let described: Mask = (0..b.size())
        .filter(|&y| {
            b.below(y)
                .iter()
                .all(|x| u.iter().any(|w| d.perp(w, x)))
        })
        .collect();

    let maximal = extension.is_none();
    let prime = is_preceq_ideal(b, complement);
    let compy = described == complement;
    let mut r = Report::new("ultrafilter criteria");
    r.push(Verdict::check(
        "maximal",
        extension.map(|v| vec![v.bits() as usize]),
    ));
    r.push(Verdict::check(
        "complement_is_ideal",
        (!prime).then(|| complement.iter().collect()),
    ));
    r.push(Verdict::check(
        "complement_characterization",
        (!compy).then(|| {
            let diff = Mask(described.bits() ^ complement.bits());
            diff.iter().collect()
        }),
    ));
    if is_basic_lattice(b) {
        r.push(Verdict::flag("equivalence", maximal == prime && prime == compy));
    } else {
        r.push(Verdict::skip("equivalence", "requires basic lattice"));
    }
    Ok(r)
}

/// Ultrafilters of a structure together with their topology; point `i` is
/// `ultrafilters[i]` and basis member `x` is `O_x = {U : x ∈ U}`.
#[derive(Clone, Debug)]
pub struct StoneSpace {
    pub ultrafilters: Vec<Mask>,
    pub topology: FiniteTopology,
}

impl StoneSpace {
    /// `O_x` as a set of points.
    pub fn basic_open(&self, x: usize) -> Mask {
        self.topology.basis()[x]
    }

    pub fn points(&self) -> usize {
        self.ultrafilters.len()
    }
}

pub fn stone_space(b: &P0Set) -> Result<StoneSpace> {
    let ultrafilters = enumerate_ultrafilters(b)?;
    let basis: Vec<Mask> = (0..b.size())
        .map(|x| {
            ultrafilters
                .iter()
                .enumerate()
                .filter(|(_, u)| u.contains(x))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let topology = FiniteTopology::generated(ultrafilters.len(), basis)?
        .with_provenance((0..b.size()).collect());
    Ok(StoneSpace {
        ultrafilters,
        topology,
    })
}

/// The duality equations for a basic lattice and its Stone space.
pub fn verify_duality(b: &P0Set) -> Result<Report> {
    if !is_basic_lattice(b) {
        return Err(Error::PreconditionFailed(
            "structure is not a basic lattice".into(),
        ));
    }
    let s = stone_space(b)?;
    Ok(duality_report(b, &s))
}

fn duality_report(b: &P0Set, s: &StoneSpace) -> Report {
    let t = OrderTables::new(b);
    let d = b.derived();
    let n = b.size();
    let top = &s.topology;
    let o = |x: usize| s.basic_open(x);
    let cl: Vec<Mask> = (0..n).map(|x| top.closure(o(x))).collect();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));

    let mut r = Report::new("duality");
    let capwedge = pairs().find(|&(x, y)| t.meet(x, y).map(o) != Some(o(x) & o(y)));
    r.push(Verdict::check("capwedge", capwedge.map(|(x, y)| vec![x, y])));
    let cupvee = pairs().find(|&(x, y)| t.join(x, y).map(o) != Some(o(x) | o(y)));
    r.push(Verdict::check("cupvee", cupvee.map(|(x, y)| vec![x, y])));
    let perpperp = pairs().find(|&(x, y)| o(x).intersects(o(y)) == d.perp(x, y));
    r.push(Verdict::check("perpperp", perpperp.map(|(x, y)| vec![x, y])));
    let subprec = pairs().find(|&(x, y)| cl[x].is_subset(o(y)) != b.prec(x, y));
    r.push(Verdict::check("subprec", subprec.map(|(x, y)| vec![x, y])));
    let oxclosure = (0..n).find(|&x| {
        let meet = b.above(x).iter().fold(top.whole(), |acc, y| acc & o(y));
        cl[x] != meet
    });
    r.push(Verdict::check("Oxclosure", oxclosure.map(|x| vec![x])));
    r.push(Verdict::check(
        "Hausdorff",
        top.hausdorff_counterexample().map(|(p, q)| vec![p, q]),
    ));
    r.push(Verdict::pass("locally_compact"));
    let iso = pairs().find(|&(x, y)| d.preceq(x, y) != o(x).is_subset(o(y)) || (x != y && o(x) == o(y)));
    r.push(Verdict::check("iso", iso.map(|(x, y)| vec![x, y])));
    r
}

/// The structure on `family` with `O ≺ N ⇔ cl(O) ⊆ N`; zero is the first `∅`.
pub fn basis_to_structure(x: &FiniteTopology, family: &[Mask]) -> Result<P0Set> {
    if let Some(i) = family.iter().position(|&m| !x.is_open(m)) {
        return Err(Error::NotOpen(i));
    }
    let zero = family
        .iter()
        .position(|m| m.is_empty())
        .ok_or(Error::MissingEmptySet)?;
    let closures: Vec<Mask> = family.iter().map(|&m| x.closure(m)).collect();
    P0Set::from_fn(family.len(), zero, |i, j| closures[i].is_subset(family[j]))
}

/// `{O ∈ family : p ∈ O}` as a mask over family indices.
pub fn point_filter(family: &[Mask], p: usize) -> Mask {
    family
        .iter()
        .enumerate()
        .filter(|(_, m)| m.contains(p))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, e0, one_point, p2, w5};

    fn masks(v: &[&[usize]]) -> Vec<Mask> {
        v.iter().map(|s| Mask::from_indices(s.iter().copied())).collect()
    }

    #[test]
    fn filters_of_the_powerset() {
        let f = enumerate_filters(&p2()).unwrap();
        // elements: 0=∅, 1={1}, 2={2}, 3=⊤
        let want = {
            let mut w = masks(&[&[], &[3], &[1, 3], &[2, 3], &[0, 1, 2, 3]]);
            w.sort();
            w
        };
        assert_eq!(f, want);
        assert_eq!(enumerate_ultrafilters(&p2()).unwrap(), masks(&[&[1, 3], &[2, 3]]));
    }

    #[test]
    fn filters_match_brute_force() {
        for b in [p2(), e0(), c2(), w5()] {
            let brute: Vec<Mask> = Mask::all(b.size()).filter(|&u| is_filter(&b, u)).collect();
            assert_eq!(enumerate_filters(&b).unwrap(), brute);
        }
    }

    #[test]
    fn small_ultrafilter_sets() {
        assert_eq!(enumerate_ultrafilters(&e0()).unwrap(), masks(&[&[1], &[2]]));
        assert_eq!(enumerate_ultrafilters(&c2()).unwrap(), masks(&[&[1, 2]]));
        assert_eq!(
            enumerate_filters(&one_point()).unwrap(),
            masks(&[&[], &[0]])
        );
        assert!(enumerate_ultrafilters(&one_point()).unwrap().is_empty());
        assert!(enumerate_filters(&e0())
            .unwrap()
            .iter()
            .all(|&u| u != Mask::from_indices([1, 2])));
    }

    #[test]
    fn ultrafilter_criteria() {
        let r = ultrafilter_properties(&p2(), Mask::from_indices([1, 3])).unwrap();
        assert!(r.passed(), "{r}");
        let r = ultrafilter_properties(&p2(), Mask::from_indices([3])).unwrap();
        assert!(!r.holds("maximal"));
        assert!(!r.holds("complement_is_ideal"));
        assert!(!r.holds("complement_characterization"));
        assert!(r.holds("equivalence"));
        let r = ultrafilter_properties(&e0(), Mask::from_indices([1])).unwrap();
        assert!(r.holds("maximal"));
        assert!(r.get("equivalence").unwrap().is_skipped());
        assert!(matches!(
            ultrafilter_properties(&e0(), Mask::from_indices([1, 2])),
            Err(Error::NotAFilter(_))
        ));
    }

    #[test]
    fn stone_spaces() {
        let s = stone_space(&p2()).unwrap();
        assert_eq!(s.points(), 2);
        assert!(s.topology.is_discrete());
        assert_eq!(s.basic_open(1).len(), 1);
        assert_eq!(s.basic_open(2).len(), 1);
        assert_eq!(s.basic_open(3), Mask::full(2));
        assert_eq!(s.basic_open(0), Mask::EMPTY);

        let s = stone_space(&e0()).unwrap();
        assert_eq!(s.points(), 2);
        assert!(s.topology.is_discrete());

        let s = stone_space(&c2()).unwrap();
        assert_eq!(s.points(), 1);
        assert_eq!(s.basic_open(1), s.basic_open(2));
    }

    #[test]
    fn duality_on_powersets() {
        let r = verify_duality(&p2()).unwrap();
        assert!(r.passed(), "{r}");
        let two = crate::lab::families::chain(1).unwrap();
        let r = verify_duality(&two).unwrap();
        assert!(r.passed(), "{r}");
        assert!(matches!(verify_duality(&c2()), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn bases_to_structures() {
        let x = FiniteTopology::discrete(2).unwrap();
        let full: Vec<Mask> = Mask::all(2).collect();
        assert_eq!(basis_to_structure(&x, &full).unwrap(), P0Set::from_fn(4, 0, |i, j| i & j == i).unwrap());
        let fam = masks(&[&[], &[0], &[1]]);
        let b = basis_to_structure(&x, &fam).unwrap();
        assert_eq!(b, P0Set::new(3, 0, [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]).unwrap());
        let b = basis_to_structure(&x, &[Mask::EMPTY]).unwrap();
        assert_eq!(b.size(), 1);
        assert!(matches!(basis_to_structure(&x, &masks(&[&[0]])), Err(Error::MissingEmptySet)));
        let s = FiniteTopology::generated(2, vec![Mask::singleton(0)]).unwrap();
        assert!(matches!(basis_to_structure(&s, &masks(&[&[], &[1]])), Err(Error::NotOpen(1))));
    }

    #[test]
    fn point_filters() {
        let full: Vec<Mask> = Mask::all(2).collect();
        // p = 0 is the first point, i.e. "1" in one-based notation
        assert_eq!(point_filter(&full, 0), Mask::from_indices([1, 3]));
        let fam = masks(&[&[], &[0], &[1]]);
        assert_eq!(point_filter(&fam, 1), Mask::from_indices([2]));
    }
}
