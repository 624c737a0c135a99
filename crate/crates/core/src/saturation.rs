//! Relations between subsets of a structure, the saturation operator
//! `A ↦ A^∪ = {y : {y} ⪻ A}`, and verification that saturated sets form a
//! continuous frame.

use crate::axioms::{check_basic_lattice, is_basic_semilattice};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::structure::{OrderTables, P0Set};

/// Largest carrier for exact saturation.
pub const SATURATION_CAP: usize = 12;
/// Largest carrier for building saturated families.
pub const FAMILY_CAP: usize = 10;
/// Largest carrier for frame verification.
pub const FRAME_CAP: usize = 8;

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

/// `D^⋒ = {x : ∃y∈D, x ⋒ y}`.
pub fn meets_of(b: &P0Set, d: Mask) -> Mask {
    let rel = b.derived();
    d.iter().fold(Mask::EMPTY, |acc, y| acc | rel.meets_set(y))
}

/// `C ≺ D ⇔ C ⊆ D^≻`.
pub fn prec_sets(b: &P0Set, c: Mask, d: Mask) -> bool {
    c.is_subset(b.down_prec(d))
}

/// `C ⪍ D ⇔ C^≻ ⊆ D^⋒ ∪ {0}`.
pub fn precsim(b: &P0Set, c: Mask, d: Mask) -> bool {
    b.down_prec(c).without(b.zero()).is_subset(meets_of(b, d))
}

/// `C ⪯ D ⇔ C ⊆ D^⪰`.
pub fn preceq_sets(b: &P0Set, c: Mask, d: Mask) -> bool {
    c.is_subset(b.derived().down_closure(d))
}

/// `C^⪰ ⊆ D^⋒ ∪ {0}`.
pub fn precsim_tilde(b: &P0Set, c: Mask, d: Mask) -> bool {
    b.derived()
        .down_closure(c)
        .without(b.zero())
        .is_subset(meets_of(b, d))
}

/// `C ⪻ D ⇔ ∃F (C ⪍ F ≺ D)`. `⪍` only grows with its right side, so the
/// largest admissible `F = D^≻` decides the existential.
pub fn way_below(b: &P0Set, c: Mask, d: Mask) -> bool {
    precsim(b, c, b.down_prec(d))
}

/// [`way_below`] by searching every `F ⊆ D^≻`.
pub fn way_below_exhaustive(b: &P0Set, c: Mask, d: Mask) -> Result<bool> {
    cap(b, SATURATION_CAP, "way-below search carrier")?;
    Ok(b.down_prec(d).subsets().any(|f| precsim(b, c, f)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetRelations {
    pub prec: bool,
    pub precsim: bool,
    pub wayb: bool,
}

pub fn subset_relations(b: &P0Set, c: Mask, d: Mask) -> Result<SubsetRelations> {
    cap(b, SATURATION_CAP, "subset relation carrier")?;
    Ok(SubsetRelations {
        prec: prec_sets(b, c, d),
        precsim: precsim(b, c, d),
        wayb: way_below(b, c, d),
    })
}

fn saturate_unchecked(b: &P0Set, a: Mask) -> Mask {
    let target = meets_of(b, b.down_prec(a));
    (0..b.size())
        .filter(|&y| b.below(y).without(b.zero()).is_subset(target))
        .collect()
}

/// `A^∪ = {y : {y} ⪻ A}`.
pub fn saturate(b: &P0Set, a: Mask) -> Result<Mask> {
    cap(b, SATURATION_CAP, "saturation carrier")?;
    Ok(saturate_unchecked(b, a))
}

/// `C ∧ D = {x∧y : x∈C, y∈D}`; `None` when some meet does not exist.
pub fn meet_sets(t: &OrderTables, c: Mask, d: Mask) -> Option<Mask> {
    let mut out = Mask::EMPTY;
    for x in c.iter() {
        for y in d.iter() {
            out = out.with(t.meet(x, y)?);
        }
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    Singletons,
    Finite,
    All,
}

/// Distinct saturated sets in a linear extension of `⊆`, with the join
/// `(S∪T)^∪` and meet `S∩T` where these land back in the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedFamily {
    pub sets: Vec<Mask>,
    join: Vec<Option<usize>>,
    meet: Vec<Option<usize>>,
}

impl SaturatedFamily {
    fn build(b: &P0Set, mut sets: Vec<Mask>) -> SaturatedFamily {
        sets.sort_by_key(|m| (m.len(), m.bits()));
        sets.dedup();
        let n = sets.len();
        let pos = |m: Mask| sets.iter().position(|&s| s == m);
        let mut join = vec![None; n * n];
        let mut meet = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = pos(saturate_unchecked(b, sets[i] | sets[j]));
                meet[i * n + j] = pos(sets[i] & sets[j]);
            }
        }
        SaturatedFamily { sets, join, meet }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, m: Mask) -> Option<usize> {
        self.sets.iter().position(|&s| s == m)
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.join[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.meet[i * self.len() + j]
    }

    /// Least member containing both, by inclusion.
    pub fn lub(&self, i: usize, j: usize) -> Option<usize> {
        let u = self.sets[i] | self.sets[j];
        self.least_above(u)
    }

    fn least_above(&self, u: Mask) -> Option<usize> {
        let above: Vec<usize> = (0..self.len()).filter(|&k| u.is_subset(self.sets[k])).collect();
        above
            .iter()
            .copied()
            .find(|&k| above.iter().all(|&l| self.sets[k].is_subset(self.sets[l])))
    }

    /// Greatest member contained in both.
    pub fn glb(&self, i: usize, j: usize) -> Option<usize> {
        let m = self.sets[i] & self.sets[j];
        let below: Vec<usize> = (0..self.len()).filter(|&k| self.sets[k].is_subset(m)).collect();
        below
            .iter()
            .copied()
            .find(|&k| below.iter().all(|&l| self.sets[l].is_subset(self.sets[k])))
    }
}

pub fn saturated_family(b: &P0Set, generators: Generators) -> Result<SaturatedFamily> {
    cap(b, FAMILY_CAP, "saturated family carrier")?;
    let sets = match generators {
        Generators::Singletons => (0..b.size())
            .map(|x| saturate_unchecked(b, Mask::singleton(x)))
            .collect(),
        Generators::All => Mask::all(b.size())
            .map(|a| saturate_unchecked(b, a))
            .collect(),
        Generators::Finite => {
            // joins of singleton saturations, starting from the empty join
            let singles: Vec<Mask> = (0..b.size())
                .map(|x| saturate_unchecked(b, Mask::singleton(x)))
                .collect();
            let mut seen = vec![saturate_unchecked(b, Mask::EMPTY)];
            let mut i = 0;
            while i < seen.len() {
                for &s in &singles {
                    let j = saturate_unchecked(b, seen[i] | s);
                    if !seen.contains(&j) {
                        seen.push(j);
                    }
                }
                i += 1;
            }
            seen
        }
    };
    Ok(SaturatedFamily::build(b, sets))
}

/// Directed subfamilies are enumerated literally up to this many members.
const DIRECTED_ENUMERATION_LIMIT: usize = 16;

/// `S ≪ T` in `(family, ⊆)`: every directed subfamily whose union-join
/// reaches `T` has a member above `S`.
fn way_below_in_family(fam: &SaturatedFamily, s: usize, t: usize) -> bool {
    let n = fam.len();
    if n <= DIRECTED_ENUMERATION_LIMIT {
        for z in Mask::all(n).skip(1) {
            let directed = z.iter().all(|i| {
                z.iter().all(|j| {
                    z.iter()
                        .any(|k| (fam.sets[i] | fam.sets[j]).is_subset(fam.sets[k]))
                })
            });
            if !directed {
                continue;
            }
            let mut members = z.iter();
            let first = members.next().expect("nonempty subfamily");
            let Some(join) = members.try_fold(first, |acc, i| fam.lub(acc, i)) else {
                continue;
            };
            if fam.sets[t].is_subset(fam.sets[join])
                && !z.iter().any(|k| fam.sets[s].is_subset(fam.sets[k]))
            {
                return false;
            }
        }
        true
    } else {
        // a finite directed family contains its own join
        fam.sets[s].is_subset(fam.sets[t])
    }
}

/// Frame, way-below and density properties of the saturated sets of a basic
/// semilattice.
pub fn verify_frame(b: &P0Set) -> Result<Report> {
    cap(b, FRAME_CAP, "frame verification carrier")?;
    if !is_basic_semilattice(b) {
        return Err(Error::PreconditionFailed(
            "structure is not a basic semilattice".into(),
        ));
    }
    verify_frame_unchecked(b)
}

/// [`verify_frame`] without the basic-semilattice precondition.
pub fn verify_frame_unchecked(b: &P0Set) -> Result<Report> {
    cap(b, FRAME_CAP, "frame verification carrier")?;
    let n = b.size();
    let t = OrderTables::new(b);
    let subsets = 1usize << n;
    let sat: Vec<Mask> = Mask::all(n).map(|a| saturate_unchecked(b, a)).collect();
    let all = SaturatedFamily::build(b, sat.clone());
    let finite = saturated_family(b, Generators::Finite)?;
    let singles = saturated_family(b, Generators::Singletons)?;
    let idx = |m: Mask| all.index_of(m).expect("saturated set is in the family");
    let mut r = Report::new("saturation frame");

    r.push(Verdict::check(
        "idempotent",
        (0..subsets)
            .find(|&a| saturate_unchecked(b, sat[a]) != sat[a])
            .map(|a| vec![a]),
    ));

    let mut sup = None;
    'sup: for a in 0..subsets {
        for c in a..subsets {
            let lub = all.lub(idx(sat[a]), idx(sat[c])).map(|k| all.sets[k]);
            if lub != Some(sat[a | c]) {
                sup = Some(vec![a, c]);
                break 'sup;
            }
        }
    }
    if sup.is_none() && all.least_above(Mask::EMPTY).map(|k| all.sets[k]) != Some(sat[0]) {
        sup = Some(vec![0, 0]);
    }
    r.push(Verdict::check("supP", sup));

    let mut ccap = None;
    'cap: for a in 0..subsets {
        for c in a..subsets {
            let inter = sat[a] & sat[c];
            let glb = all.glb(idx(sat[a]), idx(sat[c])).map(|k| all.sets[k]);
            let wedge = meet_sets(&t, Mask(a as u64), Mask(c as u64)).map(|m| sat[m.bits() as usize]);
            if glb != Some(inter) || wedge != Some(inter) {
                ccap = Some(vec![a, c]);
                break 'cap;
            }
        }
    }
    r.push(Verdict::check("CcapD", ccap));

    let m = all.len();
    let mut dist = None;
    'dist: for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let lhs = all.lub(j, k).and_then(|jk| all.glb(i, jk));
                let rhs = all
                    .glb(i, j)
                    .zip(all.glb(i, k))
                    .and_then(|(p, q)| all.lub(p, q));
                if lhs.is_none() || lhs != rhs {
                    dist = Some(vec![i, j, k]);
                    break 'dist;
                }
            }
        }
    }
    r.push(Verdict::check("frame_distributivity", dist));

    let mut wb = None;
    'wb: for i in 0..m {
        for j in 0..m {
            if way_below_in_family(&all, i, j) != way_below(b, all.sets[i], all.sets[j]) {
                wb = Some(vec![i, j]);
                break 'wb;
            }
        }
    }
    r.push(Verdict::check("way_below", wb));

    let single: Vec<Mask> = (0..n).map(|x| sat[1 << x]).collect();
    let mut iso = None;
    'iso: for x in 0..n {
        for y in 0..n {
            let same = x != y && single[x] == single[y];
            if same || b.prec(x, y) != way_below(b, single[x], single[y]) {
                iso = Some(vec![x, y]);
                break 'iso;
            }
        }
    }
    r.push(Verdict::check("semicor_iso", iso));

    let fbl = P0Set::from_fn(finite.len(), 0, |i, j| {
        way_below(b, finite.sets[i], finite.sets[j])
    });
    match fbl {
        Ok(fb) => {
            let rep = check_basic_lattice(&fb);
            r.push(Verdict::check(
                "semicor_fbl",
                rep.witness("basic_lattice").map(<[usize]>::to_vec),
            ));
        }
        Err(_) => r.push(Verdict::fail("semicor_fbl", vec![])),
    }

    let mut mssl = None;
    for i in 0..singles.len() {
        for j in 0..singles.len() {
            let inter = singles.sets[i] & singles.sets[j];
            if singles.index_of(inter).is_none() || finite.glb(
                finite.index_of(singles.sets[i]).unwrap_or(0),
                finite.index_of(singles.sets[j]).unwrap_or(0),
            ).map(|k| finite.sets[k]) != Some(inter)
            {
                mssl.get_or_insert(vec![i, j]);
            }
        }
    }
    r.push(Verdict::check("singleton_meet_subsemilattice", mssl));

    // every member of F(B)^∪ is a finite join of singleton saturations below it
    let join_dense = finite.sets.iter().position(|&s| {
        let below = singles.sets.iter().filter(|g| g.is_subset(s));
        let joined = below.fold(sat[0], |acc, &g| saturate_unchecked(b, acc | g));
        joined != s
    });
    r.push(Verdict::check("join_dense", join_dense.map(|i| vec![i])));

    let sup_dense = all.sets.iter().position(|&s| {
        let below = finite.sets.iter().filter(|g| g.is_subset(s));
        let joined = below.fold(sat[0], |acc, &g| saturate_unchecked(b, acc | g));
        joined != s
    });
    r.push(Verdict::check("sup_dense", sup_dense.map(|i| vec![i])));

    r.push(Verdict::flag("generator_modes_agree", finite.sets == all.sets));
    Ok(r)
}

/// Precomputed subset operations for exhaustive law checks.
struct Tables<'a> {
    b: &'a P0Set,
    t: OrderTables,
    down_prec: Vec<Mask>,
    meets: Vec<Mask>,
    down_eq: Vec<Mask>,
    sat: Vec<Mask>,
}

impl<'a> Tables<'a> {
    fn new(b: &'a P0Set) -> Tables<'a> {
        let n = b.size();
        let d = b.derived();
        let down_prec: Vec<Mask> = Mask::all(n).map(|a| b.down_prec(a)).collect();
        let meets: Vec<Mask> = Mask::all(n).map(|a| meets_of(b, a)).collect();
        let down_eq = Mask::all(n).map(|a| d.down_closure(a)).collect();
        let sat = Mask::all(n).map(|a| saturate_unchecked(b, a)).collect();
        Tables {
            b,
            t: OrderTables::new(b),
            down_prec,
            meets,
            down_eq,
            sat,
        }
    }

    fn prec(&self, c: usize, d: usize) -> bool {
        Mask(c as u64).is_subset(self.down_prec[d])
    }

    fn precsim(&self, c: usize, d: usize) -> bool {
        self.down_prec[c].without(self.b.zero()).is_subset(self.meets[d])
    }

    fn preceq(&self, c: usize, d: usize) -> bool {
        Mask(c as u64).is_subset(self.down_eq[d])
    }

    fn tilde(&self, c: usize, d: usize) -> bool {
        self.down_eq[c].without(self.b.zero()).is_subset(self.meets[d])
    }

    fn wayb(&self, c: usize, d: usize) -> bool {
        self.precsim(c, self.down_prec[d].bits() as usize)
    }

    fn wedge(&self, c: usize, d: usize) -> Option<usize> {
        meet_sets(&self.t, Mask(c as u64), Mask(d as u64)).map(|m| m.bits() as usize)
    }
}

/// Which subsets of the quadruple space to visit for the multiplicativity
/// clauses: all of them, or a fixed pseudo-random sample of this size.
#[derive(Clone, Copy, Debug)]
pub enum QuadrupleScope {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

type Rel<'t> = &'t dyn Fn(usize, usize) -> bool;

/// Clause-by-clause check of the subset-relation laws: transitivity,
/// union-additivity and meet-multiplicativity of `≺`, `⪍` and `⪻`, the
/// comparisons among `⪯`, `⪍` and its tilde form, the `⪻` interpolation
/// laws, and the saturation identities. Pairs and triples are exhaustive;
/// quadruples follow `scope`.
pub fn check_saturation_laws(b: &P0Set, scope: QuadrupleScope) -> Result<Report> {
    cap(b, FRAME_CAP, "saturation law carrier")?;
    let tb = Tables::new(b);
    let n = b.size();
    let s = 1usize << n;
    let mut r = Report::new("saturation laws");

    let prec = |c, d| tb.prec(c, d);
    let precsim = |c, d| tb.precsim(c, d);
    let wayb = |c, d| tb.wayb(c, d);
    let rels: [(&str, Rel); 3] = [("prec", &prec), ("precsim", &precsim), ("wayb", &wayb)];

    for (name, rel) in rels.iter() {
        let mut trans = None;
        let mut add = None;
        'outer: for c in 0..s {
            for d in 0..s {
                if !rel(c, d) {
                    continue;
                }
                for e in 0..s {
                    if trans.is_none() && rel(d, e) && !rel(c, e) {
                        trans = Some(vec![c, d, e]);
                    }
                    if add.is_none() && rel(e, d) && !rel(c | e, d) {
                        add = Some(vec![c, e, d]);
                    }
                    if trans.is_some() && add.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        if add.is_none() {
            add = (0..s).find(|&d| !rel(0, d)).map(|d| vec![0, 0, d]);
        }
        r.push(Verdict::check(format!("{name}_transitive"), trans));
        r.push(Verdict::check(format!("{name}_union_additive"), add));
    }

    let quads: Vec<(usize, usize, usize, usize)> = match scope {
        QuadrupleScope::Exhaustive => {
            let mut v = Vec::new();
            for c in 0..s {
                for c2 in 0..s {
                    for d in 0..s {
                        for d2 in 0..s {
                            v.push((c, c2, d, d2));
                        }
                    }
                }
            }
            v
        }
        QuadrupleScope::Sample { count, seed } => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    (
                        rng.gen_range(0..s),
                        rng.gen_range(0..s),
                        rng.gen_range(0..s),
                        rng.gen_range(0..s),
                    )
                })
                .collect()
        }
    };
    for (name, rel) in rels.iter() {
        let mut mult = None;
        for &(c, c2, d, d2) in &quads {
            if !(rel(c, c2) && rel(d, d2)) {
                continue;
            }
            let ok = match (tb.wedge(c, d), tb.wedge(c2, d2)) {
                (Some(l), Some(rr)) => rel(l, rr),
                _ => false,
            };
            if !ok {
                mult = Some(vec![c, c2, d, d2]);
                break;
            }
        }
        r.push(Verdict::check(format!("{name}_meet_multiplicative"), mult));
    }

    let pairs = || (0..s).flat_map(move |c| (0..s).map(move |d| (c, d)));
    let w = |o: Option<(usize, usize)>| o.map(|(c, d)| vec![c, d]);
    r.push(Verdict::check(
        "preceq_implies_precsim",
        w(pairs().find(|&(c, d)| tb.preceq(c, d) && !tb.precsim(c, d))),
    ));
    r.push(Verdict::check(
        "precsim_iff_tilde",
        w(pairs().find(|&(c, d)| tb.precsim(c, d) != tb.tilde(c, d))),
    ));

    r.push(Verdict::check(
        "FprecD",
        w(pairs().find(|&(f, d)| tb.prec(f, d) && !tb.wayb(f, d))),
    ));
    r.push(Verdict::check(
        "CppD",
        w(pairs().find(|&(c, d)| {
            let via = (0..s).any(|g| tb.wayb(c, g) && tb.prec(g, d));
            via != tb.wayb(c, d)
        })),
    ));
    let mut ce = None;
    'ce: for c in 0..s {
        for e in 0..s {
            if !tb.precsim(c, e) {
                continue;
            }
            for d in 0..s {
                if tb.wayb(e, d) && !tb.wayb(c, d) {
                    ce = Some(vec![c, e, d]);
                    break 'ce;
                }
            }
        }
    }
    r.push(Verdict::check("CprecsimEppD", ce));
    r.push(Verdict::check(
        "wayb_implies_precsim",
        w(pairs().find(|&(c, d)| tb.wayb(c, d) && !tb.precsim(c, d))),
    ));

    let sat = |a: usize| tb.sat[a].bits() as usize;
    r.push(Verdict::check(
        "FppA",
        w(pairs().find(|&(f, a)| Mask(f as u64).is_subset(tb.sat[a]) != tb.wayb(f, a))),
    ));
    r.push(Verdict::check(
        "CppA",
        w(pairs().find(|&(c, a)| {
            let mid = tb.wayb(c, a);
            tb.wayb(c, sat(a)) != mid || tb.wayb(sat(c), a) != mid
        })),
    ));

    let chain = (0..s).find(|&a| {
        let am = Mask(a as u64);
        let cup = tb.sat[a];
        let finitary = am
            .subsets()
            .fold(Mask::EMPTY, |acc, g| acc | tb.sat[g.bits() as usize]);
        !(tb.down_prec[a].is_subset(cup)
            && tb.down_eq[cup.bits() as usize] == cup
            && tb.sat[tb.down_eq[a].bits() as usize] == cup
            && tb.sat[tb.down_prec[a].bits() as usize] == cup
            && tb.sat[sat(a)] == cup
            && finitary == cup
            && tb.precsim(sat(a), a))
    });
    r.push(Verdict::check("Acup_chain", chain.map(|a| vec![a])));
    Ok(r)
}

/// Clauses that hold for every structure, whatever its axioms.
pub const UNCONDITIONAL_LAWS: [&str; 4] = [
    "prec_transitive",
    "prec_union_additive",
    "precsim_union_additive",
    "wayb_union_additive",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, d3, e0, one_point, p2, w5};

    fn m(v: &[usize]) -> Mask {
        Mask::from_indices(v.iter().copied())
    }

    #[test]
    fn powerset_subset_relations() {
        let r = subset_relations(&p2(), m(&[1, 2]), m(&[3])).unwrap();
        assert!(r.prec && r.wayb);
    }

    #[test]
    fn precsim_is_reflexive() {
        for b in [p2(), e0(), c2(), w5()] {
            for c in Mask::all(b.size()) {
                assert!(precsim(&b, c, c));
            }
        }
    }

    #[test]
    fn e0_atoms_are_not_precsim() {
        assert!(!subset_relations(&e0(), m(&[1]), m(&[2])).unwrap().precsim);
    }

    #[test]
    fn fast_way_below_agrees_with_search() {
        for b in [p2(), e0(), c2(), w5(), d3()] {
            for c in Mask::all(b.size()) {
                for d in Mask::all(b.size()) {
                    assert_eq!(way_below(&b, c, d), way_below_exhaustive(&b, c, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn saturations_of_the_powerset() {
        let b = p2();
        assert_eq!(saturate(&b, m(&[1, 2])).unwrap(), m(&[0, 1, 2, 3]));
        assert_eq!(saturate(&b, Mask::EMPTY).unwrap(), m(&[0]));
    }

    #[test]
    fn saturation_is_idempotent_on_e0() {
        let b = e0();
        for a in Mask::all(3) {
            let s = saturate(&b, a).unwrap();
            assert_eq!(saturate(&b, s).unwrap(), s);
        }
    }

    #[test]
    fn families() {
        let f = saturated_family(&p2(), Generators::All).unwrap();
        assert_eq!(f.sets, vec![m(&[0]), m(&[0, 1]), m(&[0, 2]), m(&[0, 1, 2, 3])]);
        let f = saturated_family(&e0(), Generators::All).unwrap();
        assert_eq!(f.len(), 4);
        let f = saturated_family(&one_point(), Generators::All).unwrap();
        assert_eq!(f.sets, vec![m(&[0])]);
        for b in [p2(), e0(), c2(), w5()] {
            assert_eq!(
                saturated_family(&b, Generators::All).unwrap(),
                saturated_family(&b, Generators::Finite).unwrap()
            );
        }
    }

    #[test]
    fn frames() {
        for b in [e0(), p2(), d3()] {
            let r = verify_frame(&b).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(matches!(verify_frame(&c2()), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn w5_frame_report_matches_the_semilattice_check() {
        let b = w5();
        let r = verify_frame_unchecked(&b).unwrap();
        assert!(!r.verdicts.is_empty());
        assert_eq!(crate::axioms::is_basic_semilattice(&b), verify_frame(&b).is_ok());
    }

    #[test]
    fn laws_on_small_semilattices() {
        for b in [e0(), p2(), d3(), one_point()] {
            let r = check_saturation_laws(&b, QuadrupleScope::Exhaustive).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn unconditional_laws_hold_everywhere() {
        for b in [c2(), w5()] {
            let r = check_saturation_laws(&b, QuadrupleScope::Sample { count: 500, seed: 1 }).unwrap();
            for law in UNCONDITIONAL_LAWS {
                assert!(r.holds(law), "{law}: {r}");
            }
        }
    }
}
