//! The acceptance criteria as runnable checks, shared by the acceptance
//! test target and the `verify` command.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::axioms::{
    check_alternate_axioms, check_basic_lattice, check_basic_semilattice,
    cofinality_counterexample, is_basic_lattice, is_basic_semilattice, phi_holds,
};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::saturation::{check_saturation_laws, verify_frame, QuadrupleScope, UNCONDITIONAL_LAWS};
use crate::spectrum::{
    is_pseudobasis, separativity_chain, spectrum_homeomorphism, spectrum_vs_stone,
    verify_pseudochar,
};
use crate::stone::{
    basis_to_structure, enumerate_filters, point_filter, stone_space, ultrafilter_properties,
    verify_duality,
};
use crate::structure::{is_generalized_boolean, is_separative, OrderTables, P0Set};
use crate::tight::{
    all_assignments, covers, factor_tight, functor_law, lower_bounds, map_properties,
    map_properties_with, naturality_square, CoverTable, RegularOpenAlgebra, StructMap,
};
use crate::topology::FiniteTopology;

use super::enumerate::{enumerate_structures, sweep_structures};
use super::families::{c2, e0, p2, powerset, w5};
use super::random::{random_p0set, random_structure, rng};
use super::search::search_random;

/// Identifier, title and runtime limit in seconds.
pub const CRITERIA: [(usize, &str, u64); 15] = [
    (1, "covering example on E0", 1),
    (2, "duality round trip", 60),
    (3, "duality equations", 120),
    (4, "ultrafilter characterizations", 60),
    (5, "reflexive collapse", 60),
    (6, "alternate axioms", 60),
    (7, "semilattice characterization", 300),
    (8, "type witness", 1),
    (9, "FG-rho", 120),
    (10, "universality", 300),
    (11, "naturality and functor laws", 60),
    (12, "spectrum identifications", 300),
    (13, "pseudobasis characterization", 300),
    (14, "implication chain", 300),
    (15, "saturation laws", 300),
];

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub holds: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub detail: String,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed < self.limit
    }

    pub fn passed(&self) -> bool {
        self.holds && self.within_limit()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:02} [{}] {} ({:.2}s of {}s): {}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

/// Runs one criterion; errors raised inside count as failures.
pub fn run(id: usize) -> Result<Outcome> {
    let &(_, title, limit) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::Invalid(format!("no criterion {id}")))?;
    let start = Instant::now();
    let result = match id {
        1 => c01(),
        2 => c02(),
        3 => c03(),
        4 => c04(),
        5 => c05(),
        6 => c06(),
        7 => c07(),
        8 => c08(),
        9 => c09(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        13 => c13(),
        14 => c14(),
        _ => c15(),
    };
    let elapsed = start.elapsed();
    let (holds, detail) = match result {
        Ok(Check { holds, detail }) => (holds, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    Ok(Outcome {
        id,
        title,
        holds,
        elapsed,
        limit: Duration::from_secs(limit),
        detail,
    })
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|c| run(c.0).expect("registered criterion"))
        .collect()
}

struct Check {
    holds: bool,
    detail: String,
}

impl Check {
    fn pass(detail: impl Into<String>) -> Result<Check> {
        Ok(Check {
            holds: true,
            detail: detail.into(),
        })
    }

    fn fail(detail: impl Into<String>) -> Result<Check> {
        Ok(Check {
            holds: false,
            detail: detail.into(),
        })
    }
}

fn describe(b: &P0Set) -> String {
    let rows: Vec<String> = (0..b.size()).map(|x| b.above(x).to_string()).collect();
    format!("size {} rows {}", b.size(), rows.join(" "))
}

/// A cover `C ⪅ D` is trivial when `C` has no nonzero lower bound or a
/// single member of `D` lies above every lower bound of `C`.
fn trivial_cover(b: &P0Set, c: Mask, d: Mask) -> bool {
    let lb = lower_bounds(b, c);
    let zc = b.derived().zero_class();
    lb.is_subset(zc) || d.iter().any(|y| lb.is_subset(b.derived().down(y)))
}

fn c01() -> Result<Check> {
    let b = e0();
    let small: Vec<Mask> = Mask::all(3).filter(|m| m.len() <= 2).collect();
    let mut nontrivial = Vec::new();
    for &c in &small {
        for &d in &small {
            if covers(&b, c, d) && !trivial_cover(&b, c, d) {
                nontrivial.push((c, d));
            }
        }
    }
    let only = nontrivial == vec![(Mask::EMPTY, Mask::from_indices([1, 2]))];
    let wide = map_properties(&StructMap::new(b.clone(), powerset(3)?, vec![0, 1, 2])?)?;
    let narrow = map_properties(&StructMap::new(b, p2(), vec![0, 1, 2])?)?;
    let ok = only
        && wide.holds("tightish")
        && !wide.holds("tight")
        && narrow.holds("tight");
    let detail = format!(
        "nontrivial covers {:?}; into P3 tightish={} tight={}; into P2 tight={}",
        nontrivial,
        wide.holds("tightish"),
        wide.holds("tight"),
        narrow.holds("tight")
    );
    if ok {
        Check::pass(detail)
    } else {
        Check::fail(detail)
    }
}

/// Whether a family over `points` contains ∅, covers, separates points
/// (each point lies in a member avoiding any other given point) and is
/// closed under binary unions and intersections.
fn admissible_family(points: usize, family: &[Mask]) -> bool {
    let whole = Mask::full(points);
    let union = family.iter().fold(Mask::EMPTY, |a, &m| a | m);
    let separates = (0..points).all(|p| {
        (0..points).all(|q| p == q || family.iter().any(|o| o.contains(p) && !o.contains(q)))
    });
    let closed = family.iter().all(|&a| {
        family
            .iter()
            .all(|&b| family.contains(&(a & b)) && family.contains(&(a | b)))
    });
    family.contains(&Mask::EMPTY) && union == whole && separates && closed
}

fn close_family(mut family: Vec<Mask>) -> Vec<Mask> {
    family.sort();
    family.dedup();
    let mut i = 0;
    while i < family.len() {
        for j in 0..=i {
            for m in [family[i] & family[j], family[i] | family[j]] {
                if !family.contains(&m) {
                    family.push(m);
                }
            }
        }
        i += 1;
    }
    family.sort_by_key(|m| (m.len(), m.bits()));
    family
}

fn round_trip(points: usize, family: &[Mask]) -> Result<Option<String>> {
    let x = FiniteTopology::discrete(points)?;
    let b = basis_to_structure(&x, family)?;
    let report = check_basic_lattice(&b);
    if !report.passed() {
        return Ok(Some(format!("family {family:?} fails basic lattice axioms")));
    }
    let space = stone_space(&b)?;
    if space.points() != points {
        return Ok(Some(format!(
            "family {family:?} has {} ultrafilters for {points} points",
            space.points()
        )));
    }
    let filters: Vec<Mask> = (0..points).map(|p| point_filter(family, p)).collect();
    let mut sorted = filters.clone();
    sorted.sort();
    sorted.dedup();
    let mut ultra = space.ultrafilters.clone();
    ultra.sort();
    if sorted != ultra {
        return Ok(Some(format!("point filters of {family:?} are not the ultrafilters")));
    }
    Ok(None)
}

fn c02() -> Result<Check> {
    let mut exhaustive = 0;
    for points in 1..=3usize {
        let subsets: Vec<Mask> = Mask::all(points).collect();
        for code in 0u64..(1 << subsets.len()) {
            let family: Vec<Mask> = Mask(code).iter().map(|i| subsets[i]).collect();
            if !admissible_family(points, &family) {
                continue;
            }
            exhaustive += 1;
            if let Some(why) = round_trip(points, &family)? {
                return Check::fail(why);
            }
        }
    }
    let mut random = 0;
    let mut distinct = Vec::new();
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let family = loop {
            let raw: Vec<Mask> = Mask::all(4).filter(|_| r.gen_bool(0.5)).collect();
            let mut with_empty = raw;
            with_empty.push(Mask::EMPTY);
            let closed = close_family(with_empty);
            if admissible_family(4, &closed) {
                break closed;
            }
        };
        random += 1;
        if !distinct.contains(&family) {
            distinct.push(family.clone());
        }
        if let Some(why) = round_trip(4, &family)? {
            return Check::fail(format!("seed {seed}: {why}"));
        }
    }
    Check::pass(format!(
        "{exhaustive} exhaustive families over |X| ≤ 3, {random} random families over |X| = 4 ({} distinct)",
        distinct.len()
    ))
}

fn basic_lattices_up_to_five() -> Result<Vec<P0Set>> {
    Ok(sweep_structures(5, 5)?
        .into_iter()
        .filter(is_basic_lattice)
        .collect())
}

fn c03() -> Result<Check> {
    let lattices = basic_lattices_up_to_five()?;
    for b in &lattices {
        let r = verify_duality(b)?;
        for name in ["capwedge", "cupvee", "perpperp", "subprec", "Oxclosure", "Hausdorff"] {
            if !r.holds(name) {
                return Check::fail(format!("{name} fails on {}", describe(b)));
            }
        }
    }
    Check::pass(format!("{} basic lattices of size ≤ 5", lattices.len()))
}

fn c04() -> Result<Check> {
    let lattices = basic_lattices_up_to_five()?;
    let mut filters = 0;
    for b in &lattices {
        for u in enumerate_filters(b)? {
            if u.is_empty() || u == b.carrier() {
                continue;
            }
            filters += 1;
            if !ultrafilter_properties(b, u)?.holds("equivalence") {
                return Check::fail(format!("filter {u} of {}", describe(b)));
            }
        }
    }
    Check::pass(format!(
        "{filters} nonempty proper filters across {} basic lattices",
        lattices.len()
    ))
}

fn c05() -> Result<Check> {
    let mut count = 0;
    let mut basic = 0;
    for n in 1..=5 {
        for b in enumerate_structures(n, true)? {
            count += 1;
            let bl = is_basic_lattice(&b);
            basic += usize::from(bl);
            if bl != is_generalized_boolean(&b) {
                return Check::fail(format!("mismatch on {}", describe(&b)));
            }
        }
    }
    Check::pass(format!("{count} partial orders, {basic} basic lattices"))
}

fn c06() -> Result<Check> {
    let mut count = 0;
    for b in sweep_structures(5, 5)? {
        if !OrderTables::new(&b).is_lattice() || cofinality_counterexample(&b).is_some() {
            continue;
        }
        count += 1;
        if !check_alternate_axioms(&b)?.holds("equivalence") {
            return Check::fail(format!("equivalence fails on {}", describe(&b)));
        }
    }
    Check::pass(format!("{count} lattices with Cofinality"))
}

fn c07() -> Result<Check> {
    if !is_basic_semilattice(&e0()) {
        return Check::fail("E0 is not a basic semilattice");
    }
    let c = check_basic_semilattice(&c2());
    if c.holds("theta") || c.witness("theta").and_then(|w| w.first().copied()) != Some(1) {
        return Check::fail(format!("C2 does not fail at theta_1: {c}"));
    }
    let lattices = basic_lattices_up_to_five()?;
    if let Some(b) = lattices.iter().find(|b| !is_basic_semilattice(b)) {
        return Check::fail(format!("basic lattice not a basic semilattice: {}", describe(b)));
    }
    let mut semilattices = 0;
    for b in sweep_structures(5, 5)? {
        if !is_basic_semilattice(&b) {
            continue;
        }
        semilattices += 1;
        let r = verify_frame(&b)?;
        if !(r.passed() && r.holds("semicor_iso") && r.holds("semicor_fbl")) {
            return Check::fail(format!("frame verification fails on {}: {r}", describe(&b)));
        }
    }
    Check::pass(format!(
        "{} basic lattices, {semilattices} basic semilattices with verified frames",
        lattices.len()
    ))
}

fn c08() -> Result<Check> {
    let w = w5();
    let (x, y) = (
        w.index_of("x").expect("named"),
        w.index_of("y").expect("named"),
    );
    let one = phi_holds(&w, x, y, 1);
    let two = phi_holds(&w, x, y, 2);
    let detail = format!("phi_1(x,y)={one}, phi_2(x,y)={two}");
    if one && !two {
        Check::pass(detail)
    } else {
        Check::fail(detail)
    }
}

fn c09() -> Result<Check> {
    let all = sweep_structures(5, 5)?;
    for b in &all {
        if !crate::tight::verify_fgrho(b)?.passed() {
            return Check::fail(format!("fails on {}", describe(b)));
        }
    }
    for seed in 0..500u64 {
        let b = random_structure(7, seed)?;
        if !crate::tight::verify_fgrho(&b)?.passed() {
            return Check::fail(format!("fails on random seed {seed}: {}", describe(&b)));
        }
    }
    Check::pass(format!("{} enumerated and 500 random structures", all.len()))
}

/// Number of maps `S → A` (up to two) that agree with `fixed` wherever it
/// is set and preserve meets, joins and relative complements.
fn homomorphic_extensions(
    s: &RegularOpenAlgebra,
    a: &OrderTables,
    diff: &[usize],
    m: usize,
    fixed: &[Option<usize>],
) -> usize {
    fn consistent(
        s: &RegularOpenAlgebra,
        a: &OrderTables,
        diff: &[usize],
        m: usize,
        v: &[Option<usize>],
    ) -> bool {
        for i in 0..v.len() {
            let Some(x) = v[i] else { continue };
            for j in 0..v.len() {
                let Some(y) = v[j] else { continue };
                let pairs = [
                    (s.meet(i, j), a.meet(x, y)),
                    (s.join(i, j), a.join(x, y)),
                    (s.diff(i, j), Some(diff[x * m + y])),
                ];
                for (at, want) in pairs {
                    if let Some(have) = v[at] {
                        if Some(have) != want {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn go(
        s: &RegularOpenAlgebra,
        a: &OrderTables,
        diff: &[usize],
        m: usize,
        v: &mut Vec<Option<usize>>,
        count: &mut usize,
    ) {
        if *count >= 2 || !consistent(s, a, diff, m, v) {
            return;
        }
        match v.iter().position(Option::is_none) {
            None => *count += 1,
            Some(i) => {
                for val in 0..m {
                    v[i] = Some(val);
                    go(s, a, diff, m, v, count);
                }
                v[i] = None;
            }
        }
    }
    let mut v = fixed.to_vec();
    let mut count = 0;
    go(s, a, diff, m, &mut v, &mut count);
    count
}

fn c10() -> Result<Check> {
    let sources = sweep_structures(4, 4)?;
    let targets = [powerset(2)?, powerset(3)?];
    let mut tightish = 0;
    let mut tight = 0;
    for b in &sources {
        let table = CoverTable::new(b)?;
        for a in &targets {
            let ta = OrderTables::new(a);
            let m = a.size();
            let diff: Vec<usize> = (0..m * m)
                .map(|k| ta.relative_complement(k / m, k % m).expect("Boolean target"))
                .collect();
            for assignment in all_assignments(b.size(), b.zero(), m, a.zero()) {
                let beta = StructMap::new(b.clone(), a.clone(), assignment)?;
                let props = map_properties_with(&table, &beta)?;
                if !props.holds("tightish") {
                    continue;
                }
                tightish += 1;
                let f = factor_tight(&beta)?;
                let rep = &f.report;
                if !(rep.holds("factors") && rep.holds("gba_homomorphism")) {
                    return Check::fail(format!("{:?} on {}: {rep}", beta.assignment, describe(b)));
                }
                if props.holds("tight") {
                    tight += 1;
                    if !rep.holds("tight") {
                        return Check::fail(format!(
                            "tight {:?} on {} gives non-tight π",
                            beta.assignment,
                            describe(b)
                        ));
                    }
                }
                let s = &f.algebra;
                let mut fixed = vec![None; s.len()];
                for x in 0..b.size() {
                    fixed[s.rho(x)] = Some(beta.apply(x));
                }
                if homomorphic_extensions(s, &ta, &diff, m, &fixed) != 1 {
                    return Check::fail(format!(
                        "π not unique for {:?} on {}",
                        beta.assignment,
                        describe(b)
                    ));
                }
            }
        }
    }
    Check::pass(format!(
        "{} sources, {tightish} tightish maps factored ({tight} tight)",
        sources.len()
    ))
}

fn c11() -> Result<Check> {
    let objects = [e0(), p2(), c2()];
    let mut tight_maps: Vec<Vec<Vec<StructMap>>> = Vec::new();
    for x in &objects {
        let mut row = Vec::new();
        for y in &objects {
            let mut maps = Vec::new();
            for a in all_assignments(x.size(), x.zero(), y.size(), y.zero()) {
                let beta = StructMap::new(x.clone(), y.clone(), a)?;
                if map_properties(&beta)?.holds("tight") {
                    maps.push(beta);
                }
            }
            row.push(maps);
        }
        tight_maps.push(row);
    }
    let mut squares = 0;
    let mut pairs = 0;
    for i in 0..3 {
        for j in 0..3 {
            for beta in &tight_maps[i][j] {
                squares += 1;
                let r = naturality_square(beta)?;
                if !r.passed() {
                    return Check::fail(format!("square fails for {:?}: {r}", beta.assignment));
                }
                for k in 0..3 {
                    for beta2 in &tight_maps[j][k] {
                        pairs += 1;
                        let r = functor_law(beta, beta2)?;
                        if !r.passed() {
                            return Check::fail(format!(
                                "functor law fails for {:?} then {:?}",
                                beta.assignment, beta2.assignment
                            ));
                        }
                    }
                }
            }
        }
    }
    Check::pass(format!("{squares} tight maps, {pairs} composable pairs"))
}

fn c12() -> Result<Check> {
    let all = sweep_structures(6, 5)?;
    for b in &all {
        let r = spectrum_vs_stone(b)?;
        if !r.passed() {
            return Check::fail(format!("{}: {r}", describe(b)));
        }
    }
    Check::pass(format!("{} structures", all.len()))
}

fn c13() -> Result<Check> {
    let all = sweep_structures(6, 5)?;
    let mut separative = 0;
    for b in &all {
        let r = verify_pseudochar(b)?;
        if is_separative(b) {
            separative += 1;
            if !r.passed() {
                return Check::fail(format!("separative {}: {r}", describe(b)));
            }
        } else if r.holds("injective") && r.holds("xOxIso") {
            return Check::fail(format!("non-separative {} passes", describe(b)));
        }
    }
    let mut families = 0;
    for points in 1..=3usize {
        let x = FiniteTopology::discrete(points)?;
        let subsets: Vec<Mask> = Mask::all(points).collect();
        for code in 0u64..(1 << subsets.len()) {
            let family: Vec<Mask> = Mask(code).iter().map(|i| subsets[i]).collect();
            let pb = is_pseudobasis(&x, &family)?;
            if !(pb.passed() && pb.all_clopen()) {
                continue;
            }
            families += 1;
            let h = spectrum_homeomorphism(&x, &family)?;
            if !h.report.passed() {
                return Check::fail(format!("family {family:?}: {}", h.report));
            }
        }
    }
    Check::pass(format!(
        "{} structures ({separative} separative), {families} clopen pseudobases",
        all.len()
    ))
}

fn c14() -> Result<Check> {
    let all = sweep_structures(6, 5)?;
    let mut semilattices = 0;
    for b in &all {
        let r = separativity_chain(b);
        if !r.holds("chain_respected") {
            return Check::fail(format!("chain broken on {}: {r}", describe(b)));
        }
        if let Some(v) = r.get("semilattice_equivalence") {
            if !v.is_skipped() {
                semilattices += 1;
                if !v.holds {
                    return Check::fail(format!("equivalence fails on {}", describe(b)));
                }
            }
        }
    }
    if let Some(b) = search_random("separativity_chain", 8, 10_000, 0)? {
        return Check::fail(format!("random counterexample {}", describe(&b)));
    }
    Check::pass(format!(
        "{} structures, {semilattices} meet semilattices, 10000 random structures",
        all.len()
    ))
}

/// A random basic semilattice: `∅`, every singleton of a small set and a
/// few random subsets, closed under intersection, ordered by inclusion and
/// shuffled.
fn random_set_semilattice(seed: u64, max_size: usize) -> Result<P0Set> {
    let mut r = rng(seed);
    let points = r.gen_range(1..=(max_size - 1).min(4));
    let mut family: Vec<Mask> = vec![Mask::EMPTY];
    family.extend((0..points).map(Mask::singleton));
    let extras = r.gen_range(0..=3);
    for _ in 0..extras {
        let s = Mask(r.gen_range(0..1u64 << points));
        let mut next = family.clone();
        next.push(s);
        let mut i = 0;
        while i < next.len() {
            for j in 0..i {
                let m = next[i] & next[j];
                if !next.contains(&m) {
                    next.push(m);
                }
            }
            i += 1;
        }
        if next.len() <= max_size {
            family = next;
        }
    }
    family.shuffle(&mut r);
    let zero = family.iter().position(|m| m.is_empty()).expect("contains ∅");
    P0Set::from_fn(family.len(), zero, |i, j| family[i].is_subset(family[j]))
}

fn saturation_laws_hold(b: &P0Set, scope: QuadrupleScope) -> Result<Option<String>> {
    let r = check_saturation_laws(b, scope)?;
    let basic = is_basic_semilattice(b);
    let ok = if basic {
        r.passed()
    } else {
        UNCONDITIONAL_LAWS.iter().all(|l| r.holds(l))
    };
    Ok((!ok).then(|| format!("{} (basic semilattice: {basic}): {r}", describe(b))))
}

fn c15() -> Result<Check> {
    let all = sweep_structures(4, 4)?;
    let basic = all.iter().filter(|b| is_basic_semilattice(b)).count();
    for b in &all {
        if let Some(why) = saturation_laws_hold(b, QuadrupleScope::Exhaustive)? {
            return Check::fail(why);
        }
    }
    let mut random_basic = 0;
    for seed in 0..500u64 {
        let scope = QuadrupleScope::Sample {
            count: 20_000,
            seed,
        };
        let semi = random_set_semilattice(seed, 6)?;
        random_basic += usize::from(is_basic_semilattice(&semi));
        let other = random_p0set(
            (seed % 6) as usize + 1,
            seed,
            seed % 2 == 0,
            0.4,
        )?;
        for b in [&semi, &other] {
            if let Some(why) = saturation_laws_hold(b, scope)? {
                return Check::fail(format!("seed {seed}: {why}"));
            }
        }
    }
    Check::pass(format!(
        "{} structures of size ≤ 4 ({basic} basic semilattices), 1000 random of size ≤ 6 ({random_basic} set semilattices passing the axioms)",
        all.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria_pass() {
        for id in [1, 5, 8] {
            let o = run(id).unwrap();
            assert!(o.passed(), "{o}");
        }
    }

    #[test]
    fn random_set_semilattices_are_valid() {
        for seed in 0..50 {
            let b = random_set_semilattice(seed, 6).unwrap();
            assert!(b.size() <= 6 && b.is_reflexive());
        }
    }

    #[test]
    fn unknown_criterion() {
        assert!(run(16).is_err());
    }
}
