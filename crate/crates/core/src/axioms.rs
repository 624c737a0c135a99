//! Verifiers for the basic-lattice axioms, the alternate axiomatization via
//! Riesz interpolation, and the type-omission conditions of basic semilattices.
//!
//! Each `*_counterexample` function returns the first violating tuple in
//! lexicographic order of the quantified variables, or `None`.

use crate::error::{Error, Result};
use crate::mask::{min_cover, Mask};
use crate::report::{Report, Verdict};
use crate::structure::{OrderTables, P0Set};

type Witness = Option<Vec<usize>>;

pub fn minimum_counterexample(b: &P0Set) -> Witness {
    (0..b.size())
        .find(|&x| !b.prec(b.zero(), x))
        .map(|x| vec![x])
}

pub fn transitivity_counterexample(b: &P0Set) -> Witness {
    for x in 0..b.size() {
        for y in b.above(x).iter() {
            if let Some(z) = b.above(y).minus(b.above(x)).first() {
                return Some(vec![x, y, z]);
            }
        }
    }
    None
}

pub fn coinitiality_counterexample(b: &P0Set) -> Witness {
    b.nonzero()
        .iter()
        .find(|&x| !b.derived().meets(x, x))
        .map(|x| vec![x])
}

pub fn cofinality_counterexample(b: &P0Set) -> Witness {
    (0..b.size())
        .find(|&x| b.above(x).is_empty())
        .map(|x| vec![x])
}

pub fn interpolation_counterexample(b: &P0Set) -> Witness {
    b.pairs()
        .find(|&(x, y)| !b.above(x).intersects(b.below(y)))
        .map(|(x, y)| vec![x, y])
}

/// `x ≺ x', y ≺ y' ⇒ op(x,y) ≺ op(x',y')`; witness `(x, x', y, y')`.
fn monotone_counterexample(b: &P0Set, op: impl Fn(usize, usize) -> Option<usize>) -> Witness {
    let n = b.size();
    for x in 0..n {
        for x2 in b.above(x).iter() {
            for y in 0..n {
                for y2 in b.above(y).iter() {
                    let ok = match (op(x, y), op(x2, y2)) {
                        (Some(l), Some(r)) => b.prec(l, r),
                        _ => false,
                    };
                    if !ok {
                        return Some(vec![x, x2, y, y2]);
                    }
                }
            }
        }
    }
    None
}

pub fn multiplicativity_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    monotone_counterexample(b, |x, y| t.meet(x, y))
}

pub fn additivity_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    monotone_counterexample(b, |x, y| t.join(x, y))
}

/// `z ≺ x∨y ⇒ ∃x'≺x ∃y'≺y (z = x'∨y')`; witness `(z, x, y)`.
pub fn decomposition_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    let n = b.size();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = t.join(x, y) else {
                    return Some(vec![z, x, y]);
                };
                if !b.prec(z, xy) {
                    continue;
                }
                let found = b.below(x).iter().any(|x2| {
                    b.below(y).iter().any(|y2| t.join(x2, y2) == Some(z))
                });
                if !found {
                    return Some(vec![z, x, y]);
                }
            }
        }
    }
    None
}

/// `x ≺ y ≺ z ⇒ ∃w⊥x (w∨y = z)`; witness `(x, y, z)`.
pub fn complementation_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    let d = b.derived();
    for x in 0..b.size() {
        for y in b.above(x).iter() {
            for z in b.above(y).iter() {
                if !d.perp_set(x).iter().any(|w| t.join(w, y) == Some(z)) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Both directions of `z ⪯ x∨y ⇔ z ⪯ (x∧z)∨(y∧z)`; witness `(z, x, y)`.
pub fn distributivity_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    let d = b.derived();
    let n = b.size();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let lhs = t.join(x, y).map(|j| d.preceq(z, j));
                let rhs = t
                    .meet(x, z)
                    .zip(t.meet(y, z))
                    .and_then(|(a, c)| t.join(a, c))
                    .map(|j| d.preceq(z, j));
                match (lhs, rhs) {
                    (Some(l), Some(r)) if l == r => {}
                    _ => return Some(vec![z, x, y]),
                }
            }
        }
    }
    None
}

fn rather_below(b: &P0Set, t: &OrderTables, x: usize, y: usize) -> bool {
    let d = b.derived();
    (0..b.size()).all(|z| {
        d.perp_set(x)
            .iter()
            .any(|w| t.join(w, y).is_some_and(|j| d.preceq(z, j)))
    })
}

/// `x ≺ y ⇔ ∀z ∃w⊥x (z ⪯ w∨y)`; witness `(x, y)`.
pub fn rather_below_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    for x in 0..b.size() {
        for y in 0..b.size() {
            if b.prec(x, y) != rather_below(b, t, x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// `x ≺ y ⇒ ∀z ∃w⊥x (z ≺ w∨y)`; witness `(x, y, z)`.
pub fn prec_below_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    let d = b.derived();
    for (x, y) in b.pairs() {
        for z in 0..b.size() {
            let ok = d
                .perp_set(x)
                .iter()
                .any(|w| t.join(w, y).is_some_and(|j| b.prec(z, j)));
            if !ok {
                return Some(vec![x, y, z]);
            }
        }
    }
    None
}

/// `x ⪯ z ≺ y ⇒ x ≺ y`; witness `(x, z, y)`.
pub fn right_auxiliarity_counterexample(b: &P0Set) -> Witness {
    let d = b.derived();
    for x in 0..b.size() {
        for z in d.up(x).iter() {
            if let Some(y) = b.above(z).minus(b.above(x)).first() {
                return Some(vec![x, z, y]);
            }
        }
    }
    None
}

/// `x, x' ≺ y, y' ⇒ ∃z (x, x' ≺ z ≺ y, y')`; witness `(x, x', y, y')`.
pub fn riesz_counterexample(b: &P0Set) -> Witness {
    let n = b.size();
    for x in 0..n {
        for x2 in 0..n {
            let above = b.above(x) & b.above(x2);
            for y in above.iter() {
                for y2 in above.iter() {
                    if !(above & b.below(y) & b.below(y2)).is_empty() {
                        continue;
                    }
                    return Some(vec![x, x2, y, y2]);
                }
            }
        }
    }
    None
}

/// `z ≺ x∨y ⇒ ∃x'≺x ∃y'≺y (z ≺ x'∨y')`; witness `(z, x, y)`.
pub fn vee_interpolation_counterexample(b: &P0Set, t: &OrderTables) -> Witness {
    let n = b.size();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = t.join(x, y) else {
                    return Some(vec![z, x, y]);
                };
                if !b.prec(z, xy) {
                    continue;
                }
                let found = b.below(x).iter().any(|x2| {
                    b.below(y)
                        .iter()
                        .any(|y2| t.join(x2, y2).is_some_and(|j| b.prec(z, j)))
                });
                if !found {
                    return Some(vec![z, x, y]);
                }
            }
        }
    }
    None
}

fn lattice_witness(t: &OrderTables) -> Witness {
    if let Some((x, y)) = t.antisymmetry_violation() {
        return Some(vec![x, y]);
    }
    t.missing_meet()
        .or_else(|| t.missing_join())
        .map(|(x, y)| vec![x, y])
}

const LATTICE_AXIOMS: [&str; 7] = [
    "Coinitiality",
    "Cofinality",
    "Interpolation",
    "Multiplicativity",
    "Additivity",
    "Decomposition",
    "Complementation",
];

/// Every basic-lattice axiom plus the derived properties, each with a witness
/// on failure. The final `basic_lattice` verdict is the overall outcome.
pub fn check_basic_lattice(b: &P0Set) -> Report {
    let t = OrderTables::new(b);
    let mut r = Report::new("basic lattice axioms");
    let lat = lattice_witness(&t);
    let is_lattice = lat.is_none();
    r.push(Verdict::check("Lattice", lat.clone()));
    r.push(Verdict::check("Minimum", minimum_counterexample(b)));
    r.push(Verdict::check("Transitivity", transitivity_counterexample(b)));
    r.push(Verdict::check("Coinitiality", coinitiality_counterexample(b)));
    r.push(Verdict::check("Cofinality", cofinality_counterexample(b)));
    r.push(Verdict::check("Interpolation", interpolation_counterexample(b)));
    if t.is_meet_semilattice() {
        r.push(Verdict::check(
            "Multiplicativity",
            multiplicativity_counterexample(b, &t),
        ));
    } else {
        r.push(Verdict::skip("Multiplicativity", "requires binary meets"));
    }
    let lattice_only: [(&str, fn(&P0Set, &OrderTables) -> Witness); 7] = [
        ("Additivity", additivity_counterexample),
        ("Decomposition", decomposition_counterexample),
        ("Complementation", complementation_counterexample),
        ("Distributivity", distributivity_counterexample),
        ("RatherBelow", rather_below_counterexample),
        ("PrecBelow", prec_below_counterexample),
        ("VeeInterpolation", vee_interpolation_counterexample),
    ];
    for (name, f) in lattice_only {
        if is_lattice {
            r.push(Verdict::check(name, f(b, &t)));
        } else {
            r.push(Verdict::skip(name, "requires lattice"));
        }
    }
    r.push(Verdict::check(
        "RightAuxiliarity",
        right_auxiliarity_counterexample(b),
    ));
    r.push(Verdict::check("RieszInterpolation", riesz_counterexample(b)));

    let overall = match lat {
        Some(w) => Verdict::fail("basic_lattice", w),
        None => match LATTICE_AXIOMS.iter().find(|a| !r.holds(a)) {
            Some(a) => {
                let w = r.witness(a).map(<[usize]>::to_vec).unwrap_or_default();
                Verdict {
                    axiom: "basic_lattice".into(),
                    holds: false,
                    witness: Some(w),
                    skipped: None,
                }
            }
            None => Verdict::pass("basic_lattice"),
        },
    };
    r.push(overall);
    r
}

/// Fast overall test, short-circuiting on the first failing axiom.
pub fn is_basic_lattice(b: &P0Set) -> bool {
    let t = OrderTables::new(b);
    t.is_lattice()
        && coinitiality_counterexample(b).is_none()
        && cofinality_counterexample(b).is_none()
        && interpolation_counterexample(b).is_none()
        && multiplicativity_counterexample(b, &t).is_none()
        && additivity_counterexample(b, &t).is_none()
        && decomposition_counterexample(b, &t).is_none()
        && complementation_counterexample(b, &t).is_none()
}

/// Compares {Interpolation, Multiplicativity, Additivity} with
/// {RightAuxiliarity, RieszInterpolation} on a lattice with Cofinality.
pub fn check_alternate_axioms(b: &P0Set) -> Result<Report> {
    let t = OrderTables::new(b);
    if !t.is_lattice() {
        return Err(Error::PreconditionFailed(
            "structure is not a lattice under its reflexive order".into(),
        ));
    }
    if let Some(w) = cofinality_counterexample(b) {
        return Err(Error::PreconditionFailed(format!(
            "Cofinality fails at {}",
            w[0]
        )));
    }
    let first = interpolation_counterexample(b)
        .or_else(|| multiplicativity_counterexample(b, &t))
        .or_else(|| additivity_counterexample(b, &t));
    let second = right_auxiliarity_counterexample(b).or_else(|| riesz_counterexample(b));
    let same = first.is_none() == second.is_none();
    let mut r = Report::new("alternate axioms");
    r.push(Verdict::check("Interpolation+Multiplicativity+Additivity", first));
    r.push(Verdict::check("RightAuxiliarity+RieszInterpolation", second));
    r.push(Verdict::flag("equivalence", same));
    Ok(r)
}

/// Recovers `≺` from `⪯` on a lattice: `x R y ⇔ ∀z ∃w (w∧x = 0, z ⪯ w∨y)`.
pub fn recover_prec(b: &P0Set) -> Result<Vec<Mask>> {
    let t = OrderTables::new(b);
    if !t.is_lattice() {
        return Err(Error::NotLattice);
    }
    let d = b.derived();
    let n = b.size();
    let disjoint: Vec<Mask> = (0..n)
        .map(|x| (0..n).filter(|&w| t.meet(w, x) == Some(b.zero())).collect())
        .collect();
    Ok((0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| {
                    (0..n).all(|z| {
                        disjoint[x]
                            .iter()
                            .any(|w| t.join(w, y).is_some_and(|j| d.preceq(z, j)))
                    })
                })
                .collect()
        })
        .collect())
}

/// Nonzero elements strictly below `x`.
fn nonzero_below(b: &P0Set, x: usize) -> Mask {
    b.below(x).without(b.zero())
}

/// `{v : ∃w ≺ y, v ≺ w}`.
fn second_level_below(b: &P0Set, y: usize) -> Mask {
    b.down_prec(b.below(y))
}

/// Fewest `v_i ≺ w_i ≺ y` such that every nonzero `x' ≺ x` meets some `v_i`;
/// `None` when no finite choice works. The chosen `v`s are returned.
pub fn phi_cover(b: &P0Set, x: usize, y: usize) -> Option<Vec<usize>> {
    let d = b.derived();
    let vs: Vec<usize> = second_level_below(b, y).iter().collect();
    let universe = nonzero_below(b, x);
    let sets: Vec<Mask> = vs.iter().map(|&v| d.meets_set(v) & universe).collect();
    if vs.is_empty() {
        return None;
    }
    min_cover(universe, &sets).map(|idx| idx.into_iter().map(|i| vs[i]).collect())
}

/// `φ_n(x, y)`.
pub fn phi_holds(b: &P0Set, x: usize, y: usize, n: usize) -> bool {
    b.prec(x, y) && phi_cover(b, x, y).is_none_or(|c| c.len() > n)
}

/// The `(w_i, v_i)` choices refuting `φ_n(x, y)`, when `x ≺ y` and they exist.
pub fn phi_refutation(b: &P0Set, x: usize, y: usize, n: usize) -> Option<Vec<(usize, usize)>> {
    if !b.prec(x, y) || n == 0 {
        return None;
    }
    let mut vs = phi_cover(b, x, y).filter(|c| c.len() <= n)?;
    let pad = vs.first().copied().unwrap_or(b.zero());
    vs.resize(n, pad);
    Some(
        vs.into_iter()
            .map(|v| {
                let w = (b.below(y) & b.above(v)).first().expect("v is two steps below y");
                (w, v)
            })
            .collect(),
    )
}

/// For fixed `x`, `y' ` and `z`: fewest `v_i ≺ w_i ⊥ x` such that every nonzero
/// `z' ≺ z` meets `y'` or some `v_i`. `None` means no finite choice exists
/// (including when there is nothing to choose from).
fn psi_cover(b: &P0Set, x: usize, y2: usize, z: usize) -> Option<usize> {
    let d = b.derived();
    let vs = b.down_prec(d.perp_set(x));
    if vs.is_empty() {
        return None;
    }
    let universe = nonzero_below(b, z) & d.perp_set(y2);
    let sets: Vec<Mask> = vs.iter().map(|v| d.meets_set(v) & universe).collect();
    min_cover(universe, &sets).map(|c| c.len())
}

/// `ψ_n(x, y, z)`.
pub fn psi_holds(b: &P0Set, x: usize, y: usize, z: usize, n: usize) -> bool {
    b.prec(x, y)
        && b
            .below(y)
            .iter()
            .all(|y2| psi_cover(b, x, y2, z).is_none_or(|c| c > n))
}

/// Fewest `w_i ≺ y` such that every nonzero `v ≺ x` meets some `w_i`.
fn theta_cover(b: &P0Set, x: usize, y: usize) -> Option<usize> {
    let d = b.derived();
    let ws = b.below(y);
    if ws.is_empty() {
        return None;
    }
    let universe = nonzero_below(b, x);
    let sets: Vec<Mask> = ws.iter().map(|w| d.meets_set(w) & universe).collect();
    min_cover(universe, &sets).map(|c| c.len().max(1))
}

/// First `(x, y)` with `x ⊀ y` whose antecedent in `θ_n` holds.
pub fn theta_counterexample(b: &P0Set, n: usize) -> Option<(usize, usize)> {
    for x in 0..b.size() {
        for y in 0..b.size() {
            if !b.prec(x, y) && theta_cover(b, x, y).is_some_and(|c| c <= n) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn theta_holds(b: &P0Set, n: usize) -> bool {
    theta_counterexample(b, n).is_none()
}

/// Evaluation bound for the type-omission checks: `|B|²`.
pub fn type_bound(b: &P0Set) -> usize {
    b.size() * b.size()
}

/// First `(x, y)` satisfying `φ_n` for every `n ≤ bound`.
pub fn phi_realized(b: &P0Set, bound: usize) -> Option<(usize, usize)> {
    b.pairs().find(|&(x, y)| phi_holds(b, x, y, bound))
}

/// First `(x, y, z)` satisfying `ψ_n` for every `n ≤ bound`.
pub fn psi_realized(b: &P0Set, bound: usize) -> Option<(usize, usize, usize)> {
    let n = b.size();
    for (x, y) in b.pairs() {
        for z in 0..n {
            if psi_holds(b, x, y, z, bound) {
                return Some((x, y, z));
            }
        }
    }
    None
}

/// Smallest `n ≤ bound` at which `θ_n` fails, with its witness pair.
fn theta_failure(b: &P0Set, bound: usize) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..b.size() {
        for y in 0..b.size() {
            if b.prec(x, y) {
                continue;
            }
            if let Some(c) = theta_cover(b, x, y) {
                if c <= bound && best.is_none_or(|(bc, _, _)| c < bc) {
                    best = Some((c, x, y));
                }
            }
        }
    }
    best
}

/// Semilattice axioms with `θ_n` checked for all `n ≤ |B|²` and the types
/// `φ`, `ψ` checked for omission at the same bound. The bound is re-evaluated
/// at `|B|² + 1` and reported as `type_bound_stable`.
pub fn check_basic_semilattice(b: &P0Set) -> Report {
    let t = OrderTables::new(b);
    let mut r = Report::new("basic semilattice axioms");
    let ms = match t.antisymmetry_violation() {
        Some((x, y)) => Some(vec![x, y]),
        None => t.missing_meet().map(|(x, y)| vec![x, y]),
    };
    let is_ms = ms.is_none();
    r.push(Verdict::check("meet_semilattice", ms.clone()));
    r.push(Verdict::check("Minimum", minimum_counterexample(b)));
    r.push(Verdict::check("Transitivity", transitivity_counterexample(b)));
    r.push(Verdict::check("Coinitiality", coinitiality_counterexample(b)));
    if is_ms {
        r.push(Verdict::check(
            "Multiplicativity",
            multiplicativity_counterexample(b, &t),
        ));
    } else {
        r.push(Verdict::skip("Multiplicativity", "requires binary meets"));
    }
    let bound = type_bound(b);
    let theta = theta_failure(b, bound);
    r.push(Verdict::check(
        "theta",
        theta.map(|(n, x, y)| vec![n, x, y]),
    ));
    let phi = phi_realized(b, bound);
    r.push(Verdict::check("phi_omitted", phi.map(|(x, y)| vec![x, y])));
    let psi = psi_realized(b, bound);
    r.push(Verdict::check(
        "psi_omitted",
        psi.map(|(x, y, z)| vec![x, y, z]),
    ));

    let stable = theta_failure(b, bound + 1).is_some() == theta.is_some()
        && phi_realized(b, bound + 1).is_some() == phi.is_some()
        && psi_realized(b, bound + 1).is_some() == psi.is_some();
    r.push(Verdict::flag("type_bound_stable", stable));

    let names = [
        "meet_semilattice",
        "Minimum",
        "Transitivity",
        "Coinitiality",
        "Multiplicativity",
        "theta",
        "phi_omitted",
        "psi_omitted",
    ];
    let overall = match names.iter().find(|a| !r.holds(a)) {
        None => Verdict::pass("basic_semilattice"),
        Some(a) => Verdict::fail(
            "basic_semilattice",
            r.witness(a).map(<[usize]>::to_vec).unwrap_or_default(),
        ),
    };
    r.push(overall);
    r
}

pub fn is_basic_semilattice(b: &P0Set) -> bool {
    check_basic_semilattice(b).holds("basic_semilattice")
}
