//! Finite carriers with a transitive relation `≺` and a minimum, plus the
//! relations and partial lattice operations derived from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};

/// Largest carrier accepted by [`P0Set`].
pub const MAX_SIZE: usize = 24;

/// A finite set with a transitive relation `≺` (stored row- and column-wise)
/// and a distinguished minimum `zero`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P0Set {
    size: usize,
    zero: usize,
    above: Vec<Mask>,
    below: Vec<Mask>,
    names: Option<Vec<String>>,
    derived: DerivedRels,
}

/// The preorder `⪯` and the overlap/disjointness relations computed from `≺`.
///
/// `meets`/`perp` use `≺` as in the defining formulas; `ord_meets`/`ord_perp`
/// are the same relations computed from `⪯` instead, which is what the
/// p0set-level constructions (covers, tight maps, spectra) work with. Those
/// treat every element of the zero class `{x : x ⪯ 0}` as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRels {
    up: Vec<Mask>,
    down: Vec<Mask>,
    meets: Vec<Mask>,
    perp: Vec<Mask>,
    ord_meets: Vec<Mask>,
    ord_perp: Vec<Mask>,
    zero_class: Mask,
}

impl DerivedRels {
    fn compute(zero: usize, below: &[Mask]) -> DerivedRels {
        let n = below.len();
        let mut up = vec![Mask::EMPTY; n];
        let mut down = vec![Mask::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if below[x].is_subset(below[y]) {
                    up[x] = up[x].with(y);
                    down[y] = down[y].with(x);
                }
            }
        }
        let zero_class = down[zero];
        let mut meets = vec![Mask::EMPTY; n];
        let mut ord_meets = vec![Mask::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if !(below[x] & below[y]).without(zero).is_empty() {
                    meets[x] = meets[x].with(y);
                }
                if !(down[x] & down[y]).minus(zero_class).is_empty() {
                    ord_meets[x] = ord_meets[x].with(y);
                }
            }
        }
        let perp = meets.iter().map(|m| m.complement(n)).collect();
        let ord_perp = ord_meets.iter().map(|m| m.complement(n)).collect();
        DerivedRels {
            up,
            down,
            meets,
            perp,
            ord_meets,
            ord_perp,
            zero_class,
        }
    }

    /// `x ⪯ y`.
    #[inline]
    pub fn preceq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x ⋒ y` computed from `≺`.
    #[inline]
    pub fn meets(&self, x: usize, y: usize) -> bool {
        self.meets[x].contains(y)
    }

    /// `x ⊥ y` computed from `≺`.
    #[inline]
    pub fn perp(&self, x: usize, y: usize) -> bool {
        self.perp[x].contains(y)
    }

    /// `{y : x ⪯ y}`.
    #[inline]
    pub fn up(&self, x: usize) -> Mask {
        self.up[x]
    }

    /// `{y : y ⪯ x}`.
    #[inline]
    pub fn down(&self, x: usize) -> Mask {
        self.down[x]
    }

    #[inline]
    pub fn meets_set(&self, x: usize) -> Mask {
        self.meets[x]
    }

    #[inline]
    pub fn perp_set(&self, x: usize) -> Mask {
        self.perp[x]
    }

    /// `{x : x ⪯ 0}`, which is `{0}` whenever `⪯` is antisymmetric.
    #[inline]
    pub fn zero_class(&self) -> Mask {
        self.zero_class
    }

    /// `{y : ∃z ⋠ 0, z ⪯ x, z ⪯ y}`.
    #[inline]
    pub fn ord_meets_set(&self, x: usize) -> Mask {
        self.ord_meets[x]
    }

    #[inline]
    pub fn ord_perp_set(&self, x: usize) -> Mask {
        self.ord_perp[x]
    }

    /// Up-closure of a set under `⪯`.
    pub fn up_closure(&self, s: Mask) -> Mask {
        s.iter().fold(Mask::EMPTY, |acc, x| acc | self.up[x])
    }

    /// Down-closure of a set under `⪯`.
    pub fn down_closure(&self, s: Mask) -> Mask {
        s.iter().fold(Mask::EMPTY, |acc, x| acc | self.down[x])
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureFile {
    size: usize,
    zero: usize,
    prec: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl P0Set {
    /// Builds a structure whose relation is exactly the listed pairs.
    pub fn new<I>(size: usize, zero: usize, pairs: I) -> Result<P0Set>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_size(size)?;
        if zero >= size {
            return Err(Error::IndexOutOfRange { index: zero, size });
        }
        let mut above = vec![Mask::EMPTY; size];
        for (x, y) in pairs {
            for i in [x, y] {
                if i >= size {
                    return Err(Error::IndexOutOfRange { index: i, size });
                }
            }
            above[x] = above[x].with(y);
        }
        P0Set::from_rows(zero, above)
    }

    /// Builds a structure from `above[x] = {y : x ≺ y}`.
    pub fn from_rows(zero: usize, above: Vec<Mask>) -> Result<P0Set> {
        let size = above.len();
        check_size(size)?;
        if zero >= size {
            return Err(Error::IndexOutOfRange { index: zero, size });
        }
        let full = Mask::full(size);
        if let Some(bad) = above.iter().find(|r| !r.is_subset(full)) {
            let index = bad.minus(full).first().unwrap_or(size);
            return Err(Error::IndexOutOfRange { index, size });
        }
        for x in 0..size {
            for y in above[x].iter() {
                if let Some(z) = above[y].minus(above[x]).first() {
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        if let Some(missing) = full.minus(above[zero]).first() {
            return Err(Error::MissingMinimum { zero, missing });
        }
        let mut below = vec![Mask::EMPTY; size];
        for x in 0..size {
            for y in above[x].iter() {
                below[y] = below[y].with(x);
            }
        }
        let derived = DerivedRels::compute(zero, &below);
        Ok(P0Set {
            size,
            zero,
            above,
            below,
            names: None,
            derived,
        })
    }

    pub fn from_fn(size: usize, zero: usize, prec: impl Fn(usize, usize) -> bool) -> Result<P0Set> {
        check_size(size)?;
        let rows = (0..size)
            .map(|x| (0..size).filter(|&y| prec(x, y)).collect())
            .collect();
        P0Set::from_rows(zero, rows)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<P0Set> {
        if names.len() != self.size {
            return Err(Error::Invalid(format!(
                "{} names given for {} elements",
                names.len(),
                self.size
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn from_json(text: &str) -> Result<P0Set> {
        let file: StructureFile = serde_json::from_str(text)?;
        let b = P0Set::new(file.size, file.zero, file.prec.iter().map(|p| (p[0], p[1])))?;
        match file.names {
            Some(names) => b.with_names(names),
            None => Ok(b),
        }
    }

    pub fn to_json(&self) -> String {
        let file = StructureFile {
            size: self.size,
            zero: self.zero,
            prec: self.pairs().map(|(x, y)| [x, y]).collect(),
            names: self.names.clone(),
        };
        serde_json::to_string_pretty(&file).expect("structure serializes")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    /// `x ≺ y`.
    #[inline]
    pub fn prec(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// `{y : x ≺ y}`.
    #[inline]
    pub fn above(&self, x: usize) -> Mask {
        self.above[x]
    }

    /// `{z : z ≺ y}`.
    #[inline]
    pub fn below(&self, y: usize) -> Mask {
        self.below[y]
    }

    #[inline]
    pub fn derived(&self) -> &DerivedRels {
        &self.derived
    }

    #[inline]
    pub fn carrier(&self) -> Mask {
        Mask::full(self.size)
    }

    #[inline]
    pub fn nonzero(&self) -> Mask {
        self.carrier().without(self.zero)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |x| self.above[x].iter().map(move |y| (x, y)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|x| self.prec(x, x))
    }

    /// The same carrier with `≺` replaced by `⪯`.
    pub fn reflexivization(&self) -> P0Set {
        let mut b = P0Set::from_rows(self.zero, self.derived.up.clone())
            .expect("the reflexive order of a valid structure is valid");
        b.names = self.names.clone();
        b
    }

    /// `{y : ∃x∈S, x ≺ y}`.
    pub fn up_prec(&self, s: Mask) -> Mask {
        s.iter().fold(Mask::EMPTY, |acc, x| acc | self.above[x])
    }

    /// `{x : ∃y∈S, x ≺ y}`.
    pub fn down_prec(&self, s: Mask) -> Mask {
        s.iter().fold(Mask::EMPTY, |acc, y| acc | self.below[y])
    }
}

fn check_size(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::Invalid("carrier must be nonempty".into()));
    }
    if size > MAX_SIZE {
        return Err(Error::CapExceeded {
            what: "carrier",
            size,
            limit: MAX_SIZE,
        });
    }
    Ok(())
}

pub fn load_structure(text: &str) -> Result<P0Set> {
    P0Set::from_json(text)
}

pub fn derived_relations(b: &P0Set) -> DerivedRels {
    b.derived.clone()
}

fn bounds(candidates: Mask, cone: &[Mask]) -> Mask {
    candidates
        .iter()
        .filter(|&g| candidates.is_subset(cone[g]))
        .collect()
}

/// Greatest lower bound of `x` and `y` under `⪯`.
pub fn meet(b: &P0Set, x: usize, y: usize) -> Result<Option<usize>> {
    let d = &b.derived;
    let glbs = bounds(d.down[x] & d.down[y], &d.down);
    resolve(glbs)
}

/// Least upper bound of `x` and `y` under `⪯`.
pub fn join(b: &P0Set, x: usize, y: usize) -> Result<Option<usize>> {
    let d = &b.derived;
    let lubs = bounds(d.up[x] & d.up[y], &d.up);
    resolve(lubs)
}

fn resolve(candidates: Mask) -> Result<Option<usize>> {
    let mut it = candidates.iter();
    match (it.next(), it.next()) {
        (None, _) => Ok(None),
        (Some(g), None) => Ok(Some(g)),
        (Some(a), Some(c)) => Err(Error::NotAntisymmetric(a, c)),
    }
}

/// Precomputed binary meets and joins under `⪯`.
#[derive(Clone, Debug)]
pub struct OrderTables {
    n: usize,
    zero: usize,
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
    antisymmetry: Option<(usize, usize)>,
}

impl OrderTables {
    pub fn new(b: &P0Set) -> OrderTables {
        let n = b.size;
        let d = &b.derived;
        let mut antisymmetry = None;
        'outer: for x in 0..n {
            for y in (x + 1)..n {
                if d.preceq(x, y) && d.preceq(y, x) {
                    antisymmetry = Some((x, y));
                    break 'outer;
                }
            }
        }
        let mut meet = vec![None; n * n];
        let mut join = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = resolve(bounds(d.down[x] & d.down[y], &d.down)).ok().flatten();
                join[x * n + y] = resolve(bounds(d.up[x] & d.up[y], &d.up)).ok().flatten();
            }
        }
        OrderTables {
            n,
            zero: b.zero,
            meet,
            join,
            antisymmetry,
        }
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x * self.n + y]
    }

    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        self.antisymmetry
    }

    pub fn missing_meet(&self) -> Option<(usize, usize)> {
        self.first_missing(&self.meet)
    }

    pub fn missing_join(&self) -> Option<(usize, usize)> {
        self.first_missing(&self.join)
    }

    fn first_missing(&self, table: &[Option<usize>]) -> Option<(usize, usize)> {
        table
            .iter()
            .position(Option::is_none)
            .map(|i| (i / self.n, i % self.n))
    }

    pub fn is_meet_semilattice(&self) -> bool {
        self.antisymmetry.is_none() && self.missing_meet().is_none()
    }

    pub fn is_lattice(&self) -> bool {
        self.is_meet_semilattice() && self.missing_join().is_none()
    }

    /// Join of a set; the empty join is `zero`.
    pub fn join_all(&self, s: Mask) -> Option<usize> {
        s.iter().try_fold(self.zero, |acc, x| self.join(acc, x))
    }

    /// Meet of a nonempty set.
    pub fn meet_all(&self, s: Mask) -> Option<usize> {
        let mut it = s.iter();
        let first = it.next()?;
        it.try_fold(first, |acc, x| self.meet(acc, x))
    }

    /// `x ∖ y` in a generalized Boolean algebra.
    pub fn relative_complement(&self, x: usize, y: usize) -> Option<usize> {
        let m = self.meet(x, y)?;
        (0..self.n).find(|&z| self.meet(z, m) == Some(self.zero) && self.join(z, m) == Some(x))
    }
}

/// Lexicographically first `(x, y)` with `x ⋠ y` and no nonzero `v ⪯ x`
/// disjoint from `y`.
pub fn separativity_counterexample(b: &P0Set) -> Option<Vec<usize>> {
    let d = &b.derived;
    for x in 0..b.size {
        let nz_below = d.down[x].minus(d.zero_class);
        for y in 0..b.size {
            if !d.preceq(x, y) && !nz_below.intersects(d.ord_perp[y]) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// First `(x, y)` with `y` strictly below `x` and no nonzero `z ⪯ x` disjoint from `y`.
pub fn ssc_counterexample(b: &P0Set) -> Option<Vec<usize>> {
    let d = &b.derived;
    for x in 0..b.size {
        let nz_below = d.down[x].minus(d.zero_class);
        for y in 0..b.size {
            if d.preceq(y, x) && !d.preceq(x, y) && !nz_below.intersects(d.ord_perp[y]) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

pub fn is_separative(b: &P0Set) -> bool {
    separativity_counterexample(b).is_none()
}

pub fn is_ssc(b: &P0Set) -> bool {
    ssc_counterexample(b).is_none()
}

fn lattice_counterexample(t: &OrderTables) -> Option<Vec<usize>> {
    if let Some((x, y)) = t.antisymmetry_violation() {
        return Some(vec![x, y]);
    }
    t.missing_meet()
        .or_else(|| t.missing_join())
        .map(|(x, y)| vec![x, y])
}

/// `z ⪯ x∨y ⇒ z ⪯ (x∧z)∨(y∧z)`; witness `(z, x, y)`.
pub fn distributivity_counterexample(b: &P0Set, t: &OrderTables) -> Option<Vec<usize>> {
    let d = &b.derived;
    let n = b.size;
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let xy = t.join(x, y)?;
                if !d.preceq(z, xy) {
                    continue;
                }
                let rhs = t.join(t.meet(x, z)?, t.meet(y, z)?)?;
                if !d.preceq(z, rhs) {
                    return Some(vec![z, x, y]);
                }
            }
        }
    }
    None
}

/// `y ⪯ z ⇒ ∃w (w∧y = 0, w∨y = z)`; witness `(y, z)`.
pub fn section_complement_counterexample(b: &P0Set, t: &OrderTables) -> Option<Vec<usize>> {
    let d = &b.derived;
    let n = b.size;
    for y in 0..n {
        for z in d.up[y].iter() {
            let found = (0..n).any(|w| t.meet(w, y) == Some(b.zero) && t.join(w, y) == Some(z));
            if !found {
                return Some(vec![y, z]);
            }
        }
    }
    None
}

/// Lattice-theoretic flags of `(B, ⪯)`.
pub fn order_predicates(b: &P0Set) -> Report {
    let t = OrderTables::new(b);
    let mut r = Report::new("order predicates");

    let ms = match t.antisymmetry_violation() {
        Some((x, y)) => Some(vec![x, y]),
        None => t.missing_meet().map(|(x, y)| vec![x, y]),
    };
    r.push(Verdict::check("meet_semilattice", ms));
    let lat = lattice_counterexample(&t);
    let is_lattice = lat.is_none();
    r.push(Verdict::check("lattice", lat));

    if is_lattice {
        let dist = distributivity_counterexample(b, &t);
        let sc = section_complement_counterexample(b, &t);
        let gba = dist.clone().or_else(|| sc.clone());
        r.push(Verdict::check("distributive", dist));
        r.push(Verdict::check("section_complemented", sc));
        r.push(Verdict::check("generalized_boolean", gba));
    } else {
        for name in ["distributive", "section_complemented", "generalized_boolean"] {
            r.push(Verdict::skip(name, "requires lattice"));
        }
    }
    r.push(Verdict::check("separative", separativity_counterexample(b)));
    r.push(Verdict::check("ssc", ssc_counterexample(b)));
    r
}

pub fn is_generalized_boolean(b: &P0Set) -> bool {
    let t = OrderTables::new(b);
    t.is_lattice()
        && distributivity_counterexample(b, &t).is_none()
        && section_complement_counterexample(b, &t).is_none()
}

/// The unique `z` with `z∧(x∧y) = 0` and `z∨(x∧y) = x`.
pub fn relative_complement(b: &P0Set, x: usize, y: usize) -> Result<usize> {
    for i in [x, y] {
        if i >= b.size {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: b.size,
            });
        }
    }
    if !is_generalized_boolean(b) {
        return Err(Error::NotGba);
    }
    OrderTables::new(b)
        .relative_complement(x, y)
        .ok_or(Error::NotGba)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reflexive(size: usize, edges: &[(usize, usize)]) -> P0Set {
        // reflexive-transitive closure with 0 at the bottom
        let mut rows: Vec<Mask> = (0..size).map(Mask::singleton).collect();
        rows[0] = Mask::full(size);
        for &(x, y) in edges {
            rows[x] = rows[x].with(y);
        }
        for _ in 0..size {
            for x in 0..size {
                let r = rows[x];
                for y in r.iter() {
                    let ry = rows[y];
                    rows[x] |= ry;
                }
            }
        }
        P0Set::from_rows(0, rows).unwrap()
    }

    fn e0() -> P0Set {
        reflexive(3, &[])
    }
    fn c2() -> P0Set {
        reflexive(3, &[(1, 2)])
    }
    fn p2() -> P0Set {
        P0Set::from_fn(4, 0, |x, y| x & y == x).unwrap()
    }
    fn d3() -> P0Set {
        reflexive(5, &[(1, 4), (2, 4), (3, 4)])
    }

    #[test]
    fn loads_the_three_element_example() {
        let b = load_structure(r#"{"size":3,"zero":0,"prec":[[0,0],[0,1],[0,2],[1,1],[2,2]]}"#)
            .unwrap();
        assert_eq!(b, e0());
        assert!(b.derived().perp(1, 2));
    }

    #[test]
    fn loads_one_point_structure() {
        let b = load_structure(r#"{"size":1,"zero":0,"prec":[[0,0]]}"#).unwrap();
        assert_eq!(b.size(), 1);
    }

    #[test]
    fn load_reports_transitivity_witness() {
        let e = load_structure(r#"{"size":3,"zero":0,"prec":[[0,1],[1,2]]}"#).unwrap_err();
        assert!(matches!(e, Error::NotTransitive(0, 1, 2)), "{e:?}");
    }

    #[test]
    fn load_reports_missing_minimum_and_range() {
        let e = load_structure(r#"{"size":2,"zero":0,"prec":[[0,0]]}"#).unwrap_err();
        assert!(matches!(e, Error::MissingMinimum { zero: 0, missing: 1 }));
        let e = load_structure(r#"{"size":2,"zero":0,"prec":[[0,5]]}"#).unwrap_err();
        assert!(matches!(e, Error::IndexOutOfRange { index: 5, size: 2 }));
    }

    #[test]
    fn load_rejects_unknown_keys() {
        let e = load_structure(r#"{"size":1,"zero":0,"prec":[[0,0]],"extra":1}"#).unwrap_err();
        assert!(matches!(e, Error::Json(_)));
    }

    #[test]
    fn json_round_trip_keeps_names() {
        let b = c2()
            .with_names(vec!["0".into(), "a".into(), "b".into()])
            .unwrap();
        let back = load_structure(&b.to_json()).unwrap();
        assert_eq!(back, b);
        assert_eq!(back.index_of("b"), Some(2));
    }

    #[test]
    fn derived_relations_on_small_examples() {
        assert!(c2().derived().meets(1, 2));
        let b = p2();
        for x in 0..4 {
            assert!(b.derived().preceq(b.zero(), x));
        }
    }

    #[test]
    fn meets_and_joins() {
        assert_eq!(meet(&p2(), 1, 2).unwrap(), Some(0));
        assert_eq!(meet(&e0(), 1, 2).unwrap(), Some(0));
        assert_eq!(join(&e0(), 1, 2).unwrap(), None);
        let pre = P0Set::from_fn(3, 0, |x, y| x == 0 || y != 0).unwrap();
        assert!(matches!(join(&pre, 0, 0), Ok(Some(0))));
        assert!(matches!(meet(&pre, 1, 2), Err(Error::NotAntisymmetric(1, 2))));
    }

    #[test]
    fn predicates_on_powerset_all_hold() {
        let r = order_predicates(&p2());
        assert_eq!(r.verdicts.len(), 7);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn diamond_is_a_nondistributive_lattice() {
        let r = order_predicates(&d3());
        assert!(r.holds("lattice"));
        assert!(!r.holds("distributive"));
        assert_eq!(r.witness("distributive"), Some(&[1, 2, 3][..]));
    }

    #[test]
    fn chain_fails_separativity_and_ssc() {
        let r = order_predicates(&c2());
        assert_eq!(r.witness("separative"), Some(&[2, 1][..]));
        assert_eq!(r.witness("ssc"), Some(&[2, 1][..]));
    }

    #[test]
    fn non_lattice_skips_dependent_flags() {
        let r = order_predicates(&e0());
        assert!(r.holds("meet_semilattice"));
        assert!(!r.holds("lattice"));
        assert!(r.get("distributive").unwrap().is_skipped());
    }

    #[test]
    fn relative_complements() {
        let b = p2();
        assert_eq!(relative_complement(&b, 3, 1).unwrap(), 2);
        for x in 0..4 {
            assert_eq!(relative_complement(&b, x, x).unwrap(), 0);
        }
        assert!(matches!(relative_complement(&d3(), 1, 2), Err(Error::NotGba)));
    }

    #[test]
    fn left_auxiliarity_and_domination() {
        for b in [e0(), c2(), p2(), d3()] {
            let d = b.derived();
            for x in 0..b.size() {
                for y in 0..b.size() {
                    if b.prec(x, y) {
                        assert!(d.preceq(x, y));
                    }
                    for z in 0..b.size() {
                        if b.prec(x, z) && d.preceq(z, y) {
                            assert!(b.prec(x, y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reflexivization_is_idempotent() {
        let b = P0Set::from_fn(3, 0, |x, y| x == 0 || (x == 1 && y == 2)).unwrap();
        let r = b.reflexivization();
        assert_eq!(r.reflexivization(), r);
        assert!(r.is_reflexive());
    }
}
