//! The covering relation `⪅`, tight and tightish maps between p0sets, the
//! regular-open envelope `ρ : B → S` and factoring of tight representations
//! through it.
//!
//! Everything here works with the order `⪯`; elements of the zero class
//! `{x : x ⪯ 0}` count as zero.

mod factor;
mod regular_open;

pub use factor::{
    factor_tight, factor_tight_with, functor_law, naturality_square, ExtensionOrder,
    Factorization,
};
pub use regular_open::{
    alexandroff_ops, enveloping_algebra, rho, verify_fgrho, AlexandroffOps, RegularOpenAlgebra,
    ENVELOPE_CAP, FGRHO_CAP,
};

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::structure::{is_generalized_boolean, OrderTables, P0Set};

/// Largest source carrier for exhaustive cover sweeps.
pub const COVER_CAP: usize = 10;
/// Largest carrier for the triple sweep relating `⪅` to the `B^{F,G}` sets.
pub const TRIPLE_CAP: usize = 6;

/// `C_⪰`, the common lower bounds of `C`; the whole carrier when `C = ∅`.
pub fn lower_bounds(b: &P0Set, c: Mask) -> Mask {
    let d = b.derived();
    c.iter().fold(b.carrier(), |acc, x| acc & d.down(x))
}

/// `D^⋒` for the order `⪯`.
pub fn order_meets(b: &P0Set, d: Mask) -> Mask {
    let rel = b.derived();
    d.iter().fold(Mask::EMPTY, |acc, y| acc | rel.ord_meets_set(y))
}

/// `C ⪅ D ⇔ C_⪰ ⊆ D^⋒ ∪ {0}`.
pub fn covers(b: &P0Set, c: Mask, d: Mask) -> bool {
    lower_bounds(b, c).is_subset(order_meets(b, d) | b.derived().zero_class())
}

/// `C ⪍ D` for the order `⪯`: `C^⪰ ∖ {0} ⊆ D^⋒`.
pub fn order_precsim(b: &P0Set, c: Mask, d: Mask) -> bool {
    let rel = b.derived();
    rel.down_closure(c)
        .minus(rel.zero_class())
        .is_subset(order_meets(b, d))
}

/// Covering pairs of a source structure, reduced to those that are minimal
/// in both coordinates. `⪅` shrinks when `C` shrinks and grows with `D`, so
/// a map preserves `⪅` as soon as it preserves it on these pairs.
#[derive(Clone, Debug)]
pub struct CoverTable {
    size: usize,
    lower: Vec<Mask>,
    reach: Vec<Mask>,
    tight_pairs: Vec<(Mask, Mask)>,
    tightish_pairs: Vec<(Mask, Mask)>,
}

impl CoverTable {
    pub fn new(b: &P0Set) -> Result<CoverTable> {
        let n = b.size();
        if n > COVER_CAP {
            return Err(Error::CapExceeded {
                what: "cover table carrier",
                size: n,
                limit: COVER_CAP,
            });
        }
        let zc = b.derived().zero_class();
        let lower: Vec<Mask> = Mask::all(n).map(|c| lower_bounds(b, c)).collect();
        let reach: Vec<Mask> = Mask::all(n).map(|d| order_meets(b, d) | zc).collect();
        let mut table = CoverTable {
            size: n,
            lower,
            reach,
            tight_pairs: Vec::new(),
            tightish_pairs: Vec::new(),
        };
        for f in Mask::all(n) {
            for g in Mask::all(n) {
                if !table.covers(f, g) || g.iter().any(|y| table.covers(f, g.without(y))) {
                    continue;
                }
                let shrinkable = |keep_nonempty: bool| {
                    f.iter().any(|x| {
                        let smaller = f.without(x);
                        !(keep_nonempty && smaller.is_empty()) && table.covers(smaller, g)
                    })
                };
                let (minimal, minimal_nonempty) =
                    (!shrinkable(false), !f.is_empty() && !shrinkable(true));
                if minimal {
                    table.tight_pairs.push((f, g));
                }
                if minimal_nonempty {
                    table.tightish_pairs.push((f, g));
                }
            }
        }
        Ok(table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn covers(&self, c: Mask, d: Mask) -> bool {
        self.lower[c.bits() as usize].is_subset(self.reach[d.bits() as usize])
    }

    /// Minimal covering pairs, over all `F` or over nonempty `F` only.
    pub fn minimal_pairs(&self, nonempty: bool) -> &[(Mask, Mask)] {
        if nonempty {
            &self.tightish_pairs
        } else {
            &self.tight_pairs
        }
    }
}

/// A zero-preserving map between structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructMap {
    pub source: P0Set,
    pub target: P0Set,
    pub assignment: Vec<usize>,
}

impl StructMap {
    pub fn new(source: P0Set, target: P0Set, assignment: Vec<usize>) -> Result<StructMap> {
        if assignment.len() != source.size() {
            return Err(Error::DimensionMismatch(format!(
                "assignment has {} entries for a source of size {}",
                assignment.len(),
                source.size()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&v| v >= target.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        let z = assignment[source.zero()];
        if z != target.zero() {
            return Err(Error::ZeroNotPreserved(z));
        }
        Ok(StructMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(b: &P0Set) -> StructMap {
        StructMap {
            source: b.clone(),
            target: b.clone(),
            assignment: (0..b.size()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn image(&self, s: Mask) -> Mask {
        s.iter().map(|x| self.assignment[x]).collect()
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &StructMap) -> Result<StructMap> {
        if after.source != self.target {
            return Err(Error::DimensionMismatch(
                "maps are not composable".into(),
            ));
        }
        StructMap::new(
            self.source.clone(),
            after.target.clone(),
            self.assignment.iter().map(|&y| after.assignment[y]).collect(),
        )
    }
}

/// Every zero-preserving assignment from a structure of size `source` into
/// one of size `target`, zero fixed at index `zero` on both sides.
pub fn all_assignments(
    source: usize,
    source_zero: usize,
    target: usize,
    target_zero: usize,
) -> impl Iterator<Item = Vec<usize>> {
    let free: Vec<usize> = (0..source).filter(|&x| x != source_zero).collect();
    let total = (target as u64).pow(free.len() as u32);
    (0..total).map(move |mut code| {
        let mut a = vec![target_zero; source];
        for &x in &free {
            a[x] = (code % target as u64) as usize;
            code /= target as u64;
        }
        a
    })
}

fn first_unpreserved(beta: &StructMap, pairs: &[(Mask, Mask)]) -> Option<Vec<usize>> {
    pairs
        .iter()
        .find(|&&(f, g)| !covers(&beta.target, beta.image(f), beta.image(g)))
        .map(|&(f, g)| vec![f.bits() as usize, g.bits() as usize])
}

/// `tight`, `tightish`, `coinitial`, `representation` and `character`.
/// Failure witnesses for the first two are a pair `(F, G)` of source subsets
/// written as bitmasks.
pub fn map_properties(beta: &StructMap) -> Result<Report> {
    let table = CoverTable::new(&beta.source)?;
    map_properties_with(&table, beta)
}

/// [`map_properties`] reusing a precomputed table for the source.
pub fn map_properties_with(table: &CoverTable, beta: &StructMap) -> Result<Report> {
    let z = beta.assignment[beta.source.zero()];
    if z != beta.target.zero() {
        return Err(Error::ZeroNotPreserved(z));
    }
    let a = &beta.target;
    let mut r = Report::new("map properties");
    r.push(Verdict::check(
        "tight",
        first_unpreserved(beta, table.minimal_pairs(false)),
    ));
    r.push(Verdict::check(
        "tightish",
        first_unpreserved(beta, table.minimal_pairs(true)),
    ));
    let zc = a.derived().zero_class();
    let image = beta.image(beta.source.carrier()).minus(zc);
    let reached = a.derived().up_closure(image);
    r.push(Verdict::check(
        "coinitial",
        a.carrier().minus(zc).minus(reached).first().map(|y| vec![y]),
    ));
    let gba = is_generalized_boolean(a);
    r.push(Verdict::flag("representation", gba));
    r.push(Verdict::flag("character", gba && a.size() == 2));
    Ok(r)
}

pub fn is_tight(beta: &StructMap) -> Result<bool> {
    Ok(map_properties(beta)?.holds("tight"))
}

pub fn is_tightish(beta: &StructMap) -> Result<bool> {
    Ok(map_properties(beta)?.holds("tightish"))
}

/// `x ∖ y` for every pair, row-major; `None` outside generalized Boolean algebras.
pub(crate) fn complement_table(t: &OrderTables, n: usize) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            out.push(t.relative_complement(x, y)?);
        }
    }
    Some(out)
}

/// Equivalent descriptions of tightness, one verdict per applicable
/// statement; statements whose hypotheses fail are skipped.
pub fn verify_tight_equivalences(beta: &StructMap) -> Result<Report> {
    let table = CoverTable::new(&beta.source)?;
    let props = map_properties_with(&table, beta)?;
    let tight = props.holds("tight");
    let tightish = props.holds("tightish");
    let b = &beta.source;
    let a = &beta.target;
    let n = b.size();
    let mut r = Report::new("tight equivalences");

    // one covered G suffices to upgrade tightish to tight
    if !tightish {
        r.push(Verdict::skip("unit_cover_upgrade", "map is not tightish"));
    } else {
        let g = Mask::all(n)
            .find(|&g| table.covers(Mask::EMPTY, g) && covers(a, Mask::EMPTY, beta.image(g)));
        match g {
            Some(g) => r.push(Verdict::check(
                "unit_cover_upgrade",
                (!tight).then(|| vec![g.bits() as usize]),
            )),
            None => r.push(Verdict::skip(
                "unit_cover_upgrade",
                "no G with ∅⪅G whose image is also covering",
            )),
        }
    }

    let tb = OrderTables::new(b);
    let ta = OrderTables::new(a);
    let target_gba = is_generalized_boolean(a);
    if tb.is_meet_semilattice() && target_gba {
        let rd = b.derived();
        let meets_kept = (0..n).all(|x| {
            (0..n).all(|y| match tb.meet(x, y) {
                Some(m) => ta.meet(beta.apply(x), beta.apply(y)) == Some(beta.apply(m)),
                None => false,
            })
        });
        let joins_bound = (0..n).all(|x| {
            Mask::all(n).all(|g| {
                let below_x = g.is_subset(rd.down(x));
                let premise = below_x && order_precsim(b, Mask::singleton(x), g);
                !premise
                    || ta
                        .join_all(beta.image(g))
                        .is_some_and(|j| a.derived().preceq(beta.apply(x), j))
            })
        });
        let restricted = meets_kept && joins_bound;
        let top = ta.join_all(a.carrier());
        let unit = Mask::all(n).all(|g| {
            !table.covers(Mask::EMPTY, g) || (top.is_some() && ta.join_all(beta.image(g)) == top)
        });
        r.push(Verdict::flag(
            "restricted_tight_iff_tightish",
            restricted == tightish,
        ));
        r.push(Verdict::flag("unit_iff_tight", (restricted && unit) == tight));
    } else {
        for name in ["restricted_tight_iff_tightish", "unit_iff_tight"] {
            r.push(Verdict::skip(
                name,
                "requires a meet-semilattice source and a generalized Boolean target",
            ));
        }
    }

    if is_generalized_boolean(b) && target_gba {
        let m = a.size();
        let (cb, ca) = (
            complement_table(&tb, n).ok_or(Error::NotGba)?,
            complement_table(&ta, m).ok_or(Error::NotGba)?,
        );
        let mut lattice_hom = true;
        let mut boolean_hom = true;
        for x in 0..n {
            for y in 0..n {
                let (bx, by) = (beta.apply(x), beta.apply(y));
                let meet = tb.meet(x, y).map(|v| beta.apply(v)) == ta.meet(bx, by);
                let join = tb.join(x, y).map(|v| beta.apply(v)) == ta.join(bx, by);
                let diff = beta.apply(cb[x * n + y]) == ca[bx * m + by];
                lattice_hom &= meet && join;
                boolean_hom &= meet && join && diff;
            }
        }
        r.push(Verdict::flag(
            "gba_homomorphism",
            tightish == lattice_hom && lattice_hom == boolean_hom,
        ));
    } else {
        r.push(Verdict::skip(
            "gba_homomorphism",
            "requires generalized Boolean source and target",
        ));
    }

    if n <= TRIPLE_CAP {
        r.push(Verdict::check("covers_via_exel_sets", exel_counterexample(b)));
    } else {
        r.push(Verdict::skip("covers_via_exel_sets", "source too large"));
    }
    Ok(r)
}

/// `B^{F,G} = F_⪰ ∩ G_⊥`.
pub fn exel_set(b: &P0Set, f: Mask, g: Mask) -> Mask {
    let d = b.derived();
    g.iter()
        .fold(lower_bounds(b, f), |acc, y| acc & d.ord_perp_set(y))
}

/// First `(F, G, H)` with `B^{F,G} ⪍ H` differing from `F ⪅ G ∪ H`.
pub fn exel_counterexample(b: &P0Set) -> Option<Vec<usize>> {
    let n = b.size();
    for f in Mask::all(n) {
        for g in Mask::all(n) {
            let e = exel_set(b, f, g);
            for h in Mask::all(n) {
                if order_precsim(b, e, h) != covers(b, f, g | h) {
                    return Some(vec![f.bits() as usize, g.bits() as usize, h.bits() as usize]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, e0, p2, powerset, w5};

    fn m(v: &[usize]) -> Mask {
        Mask::from_indices(v.iter().copied())
    }

    fn naive(beta: &StructMap, nonempty: bool) -> bool {
        let n = beta.source.size();
        Mask::all(n).all(|f| {
            Mask::all(n).all(|g| {
                (nonempty && f.is_empty())
                    || !covers(&beta.source, f, g)
                    || covers(&beta.target, beta.image(f), beta.image(g))
            })
        })
    }

    #[test]
    fn lower_bounds_examples() {
        assert_eq!(lower_bounds(&e0(), m(&[1, 2])), m(&[0]));
        assert_eq!(lower_bounds(&e0(), Mask::EMPTY), m(&[0, 1, 2]));
        assert_eq!(lower_bounds(&c2(), m(&[2])), m(&[0, 1, 2]));
    }

    #[test]
    fn cover_examples() {
        let b = e0();
        assert!(covers(&b, Mask::EMPTY, m(&[1, 2])));
        assert!(!covers(&b, m(&[1]), m(&[2])));
        for c in Mask::all(3).skip(1) {
            assert!(covers(&b, c, c));
        }
    }

    #[test]
    fn the_e0_example() {
        let beta = StructMap::new(e0(), powerset(3).unwrap(), vec![0, 1, 2]).unwrap();
        let r = map_properties(&beta).unwrap();
        assert!(r.holds("tightish") && !r.holds("tight"));
        let beta = StructMap::new(e0(), p2(), vec![0, 1, 2]).unwrap();
        let r = map_properties(&beta).unwrap();
        assert!(r.holds("tight"));
        let eq = verify_tight_equivalences(&beta).unwrap();
        assert!(eq.passed(), "{eq}");
        assert!(!eq.get("unit_cover_upgrade").unwrap().is_skipped());
    }

    #[test]
    fn identity_and_swap_on_p2() {
        let id = StructMap::identity(&p2());
        let r = map_properties(&id).unwrap();
        assert!(r.holds("tight") && r.holds("coinitial"));
        for beta in [id, StructMap::new(p2(), p2(), vec![0, 2, 1, 3]).unwrap()] {
            let eq = verify_tight_equivalences(&beta).unwrap();
            assert!(eq.holds("gba_homomorphism"), "{eq}");
            assert!(eq.passed());
        }
    }

    #[test]
    fn zero_must_be_preserved() {
        assert!(matches!(
            StructMap::new(e0(), p2(), vec![1, 1, 2]),
            Err(Error::ZeroNotPreserved(1))
        ));
    }

    #[test]
    fn minimal_pairs_agree_with_all_pairs() {
        for (src, tgt) in [(e0(), p2()), (c2(), p2()), (w5(), e0()), (p2(), c2())] {
            for a in all_assignments(src.size(), src.zero(), tgt.size(), tgt.zero()) {
                let beta = StructMap::new(src.clone(), tgt.clone(), a).unwrap();
                let r = map_properties(&beta).unwrap();
                assert_eq!(r.holds("tight"), naive(&beta, false));
                assert_eq!(r.holds("tightish"), naive(&beta, true));
            }
        }
    }

    #[test]
    fn equivalences_hold_for_all_small_maps() {
        for (src, tgt) in [(e0(), p2()), (p2(), p2()), (c2(), powerset(1).unwrap())] {
            for a in all_assignments(src.size(), src.zero(), tgt.size(), tgt.zero()) {
                let beta = StructMap::new(src.clone(), tgt.clone(), a).unwrap();
                let r = verify_tight_equivalences(&beta).unwrap();
                assert!(r.passed(), "{:?}\n{r}", beta.assignment);
            }
        }
    }

    #[test]
    fn exel_sets_describe_covers() {
        for b in [e0(), c2(), p2(), w5()] {
            assert_eq!(exel_counterexample(&b), None);
        }
    }
}
