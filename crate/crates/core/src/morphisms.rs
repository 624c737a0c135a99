//! Interpolators: relations between basic lattices playing the role of
//! continuous maps between their Stone spaces.

use crate::axioms::is_basic_lattice;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::stone::{basis_to_structure, stone_space};
use crate::structure::{OrderTables, P0Set};
use crate::topology::FiniteTopology;

/// A relation `⊏` from `source` to `target`; `rel[x] = {y : x ⊏ y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolator {
    pub source: P0Set,
    pub target: P0Set,
    pub rel: Vec<Mask>,
}

impl Interpolator {
    pub fn from_pairs<I>(source: P0Set, target: P0Set, pairs: I) -> Result<Interpolator>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = vec![Mask::EMPTY; source.size()];
        for (x, y) in pairs {
            if x >= source.size() {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    size: source.size(),
                });
            }
            if y >= target.size() {
                return Err(Error::IndexOutOfRange {
                    index: y,
                    size: target.size(),
                });
            }
            rel[x] = rel[x].with(y);
        }
        Ok(Interpolator {
            source,
            target,
            rel,
        })
    }

    /// The structure's own relation, the identity morphism.
    pub fn identity(b: &P0Set) -> Interpolator {
        Interpolator {
            source: b.clone(),
            target: b.clone(),
            rel: (0..b.size()).map(|x| b.above(x)).collect(),
        }
    }

    #[inline]
    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.rel[x].contains(y)
    }

    /// `{x : x ⊏ y}`.
    pub fn column(&self, y: usize) -> Mask {
        (0..self.source.size()).filter(|&x| self.relates(x, y)).collect()
    }

    /// `U^⊏ = {y : ∃x∈U, x ⊏ y}`.
    pub fn image(&self, u: Mask) -> Mask {
        u.iter().fold(Mask::EMPTY, |acc, x| acc | self.rel[x])
    }
}

type Witness = Option<Vec<usize>>;

struct Ctx<'a> {
    r: &'a Interpolator,
    tb: OrderTables,
    tc: OrderTables,
}

impl Ctx<'_> {
    fn minimum(&self) -> Witness {
        let z = self.r.source.zero();
        (0..self.r.target.size())
            .find(|&y| !self.r.relates(z, y))
            .map(|y| vec![y])
    }

    fn cofinality(&self) -> Witness {
        (0..self.r.source.size())
            .find(|&x| self.r.rel[x].is_empty())
            .map(|x| vec![x])
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.r.source.size()).flat_map(move |x| self.r.rel[x].iter().map(move |y| (x, y)))
    }

    /// `x ⊏ y ⇒ ∃z (x ⊏ z < y)`.
    fn target_interpolation(&self) -> Witness {
        self.pairs()
            .find(|&(x, y)| !self.r.rel[x].intersects(self.r.target.below(y)))
            .map(|(x, y)| vec![x, y])
    }

    /// `x ⊏ y ⇒ ∃z (x ≺ z ⊏ y)`.
    fn source_interpolation(&self) -> Witness {
        self.pairs()
            .find(|&(x, y)| !self.r.source.above(x).intersects(self.r.column(y)))
            .map(|(x, y)| vec![x, y])
    }

    fn monotone(
        &self,
        src: impl Fn(usize, usize) -> Option<usize>,
        tgt: impl Fn(usize, usize) -> Option<usize>,
    ) -> Witness {
        let pairs: Vec<(usize, usize)> = self.pairs().collect();
        for &(x, x2) in &pairs {
            for &(y, y2) in &pairs {
                let ok = match (src(x, y), tgt(x2, y2)) {
                    (Some(l), Some(r)) => self.r.relates(l, r),
                    _ => false,
                };
                if !ok {
                    return Some(vec![x, x2, y, y2]);
                }
            }
        }
        None
    }

    fn multiplicativity(&self) -> Witness {
        self.monotone(|a, b| self.tb.meet(a, b), |a, b| self.tc.meet(a, b))
    }

    fn additivity(&self) -> Witness {
        self.monotone(|a, b| self.tb.join(a, b), |a, b| self.tc.join(a, b))
    }

    /// `z ⊏ x∨y ⇒ ∃x'⊏x ∃y'⊏y (z = x'∨y')`.
    fn decomposition(&self) -> Witness {
        let (nb, nc) = (self.r.source.size(), self.r.target.size());
        for z in 0..nb {
            for x in 0..nc {
                for y in 0..nc {
                    let Some(xy) = self.tc.join(x, y) else {
                        return Some(vec![z, x, y]);
                    };
                    if !self.r.relates(z, xy) {
                        continue;
                    }
                    let (cx, cy) = (self.r.column(x), self.r.column(y));
                    let found = cx
                        .iter()
                        .any(|a| cy.iter().any(|c| self.tb.join(a, c) == Some(z)));
                    if !found {
                        return Some(vec![z, x, y]);
                    }
                }
            }
        }
        None
    }

    /// `x ⊏ z ⪯ y ⇒ x ⊏ y`.
    fn target_auxiliarity(&self) -> Witness {
        let d = self.r.target.derived();
        for (x, z) in self.pairs() {
            if let Some(y) = d.up(z).minus(self.r.rel[x]).first() {
                return Some(vec![x, z, y]);
            }
        }
        None
    }

    /// `x ⪯ z ⊏ y ⇒ x ⊏ y`.
    fn source_auxiliarity(&self) -> Witness {
        let d = self.r.source.derived();
        for x in 0..self.r.source.size() {
            for z in d.up(x).iter() {
                if let Some(y) = self.r.rel[z].minus(self.r.rel[x]).first() {
                    return Some(vec![x, z, y]);
                }
            }
        }
        None
    }
}

const DEFINING: [&str; 7] = [
    "Minimum",
    "Cofinality",
    "<-Interpolation",
    "≺-Interpolation",
    "Multiplicativity",
    "Additivity",
    "Decomposition",
];

fn check_endpoints(r: &Interpolator) -> Result<()> {
    if r.rel.len() != r.source.size() || r.rel.iter().any(|m| !m.is_subset(r.target.carrier())) {
        return Err(Error::DimensionMismatch(
            "relation does not fit its source and target".into(),
        ));
    }
    for (side, b) in [("source", &r.source), ("target", &r.target)] {
        if !is_basic_lattice(b) {
            return Err(Error::PreconditionFailed(format!(
                "{side} is not a basic lattice"
            )));
        }
    }
    Ok(())
}

fn context(r: &Interpolator) -> Ctx<'_> {
    Ctx {
        r,
        tb: OrderTables::new(&r.source),
        tc: OrderTables::new(&r.target),
    }
}

/// Interpolator axioms with both interpolation halves, followed by the two
/// auxiliarity consequences. `interpolator` is the overall verdict.
pub fn is_interpolator(r: &Interpolator) -> Result<Report> {
    check_endpoints(r)?;
    let c = context(r);
    let mut rep = Report::new("interpolator axioms");
    rep.push(Verdict::check("Minimum", c.minimum()));
    rep.push(Verdict::check("Cofinality", c.cofinality()));
    rep.push(Verdict::check("<-Interpolation", c.target_interpolation()));
    rep.push(Verdict::check("≺-Interpolation", c.source_interpolation()));
    rep.push(Verdict::check("Multiplicativity", c.multiplicativity()));
    rep.push(Verdict::check("Additivity", c.additivity()));
    rep.push(Verdict::check("Decomposition", c.decomposition()));
    rep.push(Verdict::check("≤-Auxiliarity", c.target_auxiliarity()));
    rep.push(Verdict::check("⪯-Auxiliarity", c.source_auxiliarity()));
    let ok = DEFINING.iter().all(|a| rep.holds(a));
    rep.push(Verdict::flag("interpolator", ok));
    Ok(rep)
}

/// Short-circuiting form of [`is_interpolator`].
pub fn is_valid_interpolator(r: &Interpolator) -> Result<bool> {
    check_endpoints(r)?;
    let c = context(r);
    Ok(c.minimum().is_none()
        && c.cofinality().is_none()
        && c.target_interpolation().is_none()
        && c.source_interpolation().is_none()
        && c.multiplicativity().is_none()
        && c.additivity().is_none()
        && c.decomposition().is_none())
}

/// `x (R∘S) y ⇔ ∃z (x R z S y)`.
pub fn compose_interpolators(r: &Interpolator, s: &Interpolator) -> Result<Interpolator> {
    if r.target != s.source {
        return Err(Error::DimensionMismatch(format!(
            "first relation ends in a {}-element structure, second starts in a different {}-element one",
            r.target.size(),
            s.source.size()
        )));
    }
    let rel = r.rel.iter().map(|&row| s.image(row)).collect();
    Ok(Interpolator {
        source: r.source.clone(),
        target: s.target.clone(),
        rel,
    })
}

/// The map `U ↦ U^⊏` between Stone spaces together with its checks.
#[derive(Clone, Debug)]
pub struct InducedMap {
    /// Point `i` of the source space goes to point `map[i]` of the target space.
    pub map: Vec<usize>,
    pub source_points: Vec<Mask>,
    pub target_points: Vec<Mask>,
    pub report: Report,
}

pub fn induced_stone_map(r: &Interpolator) -> Result<InducedMap> {
    if !is_valid_interpolator(r)? {
        return Err(Error::NotInterpolator);
    }
    let sb = stone_space(&r.source)?;
    let sc = stone_space(&r.target)?;
    let mut map = Vec::with_capacity(sb.points());
    for (i, &u) in sb.ultrafilters.iter().enumerate() {
        let image = r.image(u);
        let j = sc
            .ultrafilters
            .iter()
            .position(|&v| v == image)
            .ok_or(Error::NotUltrafilter(i))?;
        map.push(j);
    }
    let mut report = Report::new("induced map");
    let continuity = sb.topology.continuity_counterexample(&sc.topology, &map);
    report.push(Verdict::check(
        "continuous",
        continuity.map(|o| o.iter().collect()),
    ));
    let apply = |s: Mask| -> Mask { s.iter().map(|p| map[p]).collect() };
    let mut corr = None;
    'outer: for x in 0..r.source.size() {
        let cl = sb.topology.closure(sb.basic_open(x));
        let img = apply(cl);
        for y in 0..r.target.size() {
            if r.relates(x, y) != img.is_subset(sc.basic_open(y)) {
                corr = Some(vec![x, y]);
                break 'outer;
            }
        }
    }
    report.push(Verdict::check("closure_image_characterization", corr));
    Ok(InducedMap {
        map,
        source_points: sb.ultrafilters,
        target_points: sc.ultrafilters,
        report,
    })
}

/// `O ⊏ N ⇔ f[cl(O)] ⊆ N` between the structures of two families.
pub fn interpolator_from_map(
    x: &FiniteTopology,
    y: &FiniteTopology,
    f: &[usize],
    bx: &[Mask],
    by: &[Mask],
) -> Result<Interpolator> {
    if f.len() != x.points() {
        return Err(Error::DimensionMismatch(format!(
            "map has {} entries for {} points",
            f.len(),
            x.points()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&p| p >= y.points()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            size: y.points(),
        });
    }
    if let Some(o) = x.continuity_counterexample(y, f) {
        return Err(Error::NotContinuous(o.to_string()));
    }
    let source = basis_to_structure(x, bx)?;
    let target = basis_to_structure(y, by)?;
    let rel = bx
        .iter()
        .map(|&o| {
            let img: Mask = x.closure(o).iter().map(|p| f[p]).collect();
            by.iter()
                .enumerate()
                .filter(|(_, n)| img.is_subset(**n))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(Interpolator {
        source,
        target,
        rel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{p2, powerset};

    fn discrete(n: usize) -> (FiniteTopology, Vec<Mask>) {
        let t = FiniteTopology::discrete(n).unwrap();
        let fam = Mask::all(n).collect();
        (t, fam)
    }

    #[test]
    fn identity_is_an_interpolator() {
        let r = is_interpolator(&Interpolator::identity(&p2())).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.holds("interpolator"));
    }

    #[test]
    fn empty_relation_fails_cofinality() {
        let b = p2();
        let r = Interpolator::from_pairs(b.clone(), b, []).unwrap();
        let rep = is_interpolator(&r).unwrap();
        assert!(!rep.holds("Cofinality"));
        assert!(!rep.holds("interpolator"));
    }

    #[test]
    fn map_induced_interpolators() {
        let (x, fx) = discrete(2);
        let r = interpolator_from_map(&x, &x, &[0, 1], &fx, &fx).unwrap();
        assert!(is_interpolator(&r).unwrap().holds("interpolator"));
        for o in 0..4 {
            for n in 0..4 {
                assert_eq!(r.relates(o, n), o & n == o);
            }
        }
        let (y, fy) = discrete(1);
        let r = interpolator_from_map(&x, &y, &[0, 0], &fx, &fy).unwrap();
        for o in 0..4 {
            assert!(r.relates(o, 1));
        }
        let m = induced_stone_map(&r).unwrap();
        assert_eq!(m.map, vec![0, 0]);
        assert!(m.report.passed());
    }

    #[test]
    fn composition_with_identity() {
        let b = p2();
        let id = Interpolator::identity(&b);
        assert_eq!(compose_interpolators(&id, &id).unwrap(), id);
        let empty = Interpolator::from_pairs(b.clone(), b.clone(), []).unwrap();
        assert_eq!(compose_interpolators(&empty, &id).unwrap(), empty);
        let other = Interpolator::identity(&powerset(1).unwrap());
        assert!(matches!(
            compose_interpolators(&id, &other),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn identity_induces_identity() {
        let m = induced_stone_map(&Interpolator::identity(&p2())).unwrap();
        assert_eq!(m.map, vec![0, 1]);
        assert!(m.report.passed(), "{}", m.report);
    }

    #[test]
    fn discontinuous_maps_are_rejected() {
        let s = FiniteTopology::generated(2, vec![Mask::singleton(0)]).unwrap();
        let (d, fd) = discrete(2);
        let fs = vec![Mask::EMPTY, Mask::singleton(0), Mask::full(2)];
        assert!(matches!(
            interpolator_from_map(&s, &d, &[0, 1], &fs, &fd),
            Err(Error::NotContinuous(_))
        ));
    }
}
