use super::regular_open::{enveloping_algebra, RegularOpenAlgebra};
use super::{complement_table, covers, map_properties, StructMap};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::structure::{is_generalized_boolean, OrderTables, P0Set};

/// Which generator the relative-complement stage extends by first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtensionOrder {
    #[default]
    LowestFirst,
    HighestFirst,
}

/// A map `π : S → A` out of the enveloping algebra with `π∘ρ = β`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub algebra: RegularOpenAlgebra,
    /// `values[i]` is the image of the `i`-th element of the algebra.
    pub values: Vec<usize>,
    pub report: Report,
}

impl Factorization {
    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `π` as a map of structures, when the algebra is small enough to be one.
    pub fn as_struct_map(&self, target: &P0Set) -> Result<StructMap> {
        StructMap::new(self.algebra.as_p0set()?, target.clone(), self.values.clone())
    }
}

struct Partial {
    values: Vec<Option<usize>>,
}

impl Partial {
    fn assign(&mut self, s: &RegularOpenAlgebra, i: usize, v: usize) -> Result<()> {
        match self.values[i] {
            Some(w) if w != v => Err(Error::ConstructionIncomplete(format!(
                "two values {w} and {v} for {}",
                s.element(i)
            ))),
            _ => {
                self.values[i] = Some(v);
                Ok(())
            }
        }
    }

    fn defined(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| self.values[i].is_some())
            .collect()
    }

    fn get(&self, i: usize) -> usize {
        self.values[i].expect("value assigned")
    }
}

pub fn factor_tight(beta: &StructMap) -> Result<Factorization> {
    factor_tight_with(beta, ExtensionOrder::LowestFirst)
}

/// Extends `π(ρ(x)) = β(x)` to the enveloping algebra: first to meets of
/// images, then to joins of those, then through repeated extensions
/// `L_x = {y ∨ (z ∖ x) : y, z ∈ L, y ⊆ x}` until every element is reached.
pub fn factor_tight_with(beta: &StructMap, order: ExtensionOrder) -> Result<Factorization> {
    let props = map_properties(beta)?;
    if !props.holds("tightish") {
        return Err(Error::NotTightish);
    }
    let a = &beta.target;
    if !is_generalized_boolean(a) {
        return Err(Error::NotGba);
    }
    let ta = OrderTables::new(a);
    let m = a.size();
    let diff_a = complement_table(&ta, m).ok_or(Error::NotGba)?;
    let a_join = |x: usize, y: usize| ta.join(x, y).expect("lattice join");
    let s = enveloping_algebra(&beta.source)?;
    let len = s.len();
    let mut p = Partial {
        values: vec![None; len],
    };

    p.assign(&s, 0, a.zero())?;
    let n = beta.source.size();
    for f in Mask::all(n).skip(1) {
        let mut it = f.iter();
        let first = it.next().expect("nonempty");
        let at = it.fold(s.rho(first), |acc, x| s.meet(acc, s.rho(x)));
        let val = ta.meet_all(beta.image(f)).expect("lattice meet");
        p.assign(&s, at, val)?;
    }

    let mut lattice = p.defined();
    let mut k = 0;
    while k < lattice.len() {
        for j in 0..=k {
            let (x, y) = (lattice[k], lattice[j]);
            let at = s.join(x, y);
            let fresh = p.values[at].is_none();
            p.assign(&s, at, a_join(p.get(x), p.get(y)))?;
            if fresh {
                lattice.push(at);
            }
        }
        k += 1;
    }

    while lattice.len() < len {
        lattice.sort_unstable();
        let mut candidates = lattice.clone();
        if order == ExtensionOrder::HighestFirst {
            candidates.reverse();
        }
        let mut grown = false;
        for &x in &candidates {
            let mut fresh = Vec::new();
            for &y in lattice.iter().filter(|&&y| s.leq(y, x)) {
                for &z in &lattice {
                    let at = s.join(y, s.diff(z, x));
                    let val = a_join(p.get(y), diff_a[p.get(z) * m + p.get(x)]);
                    match p.values[at] {
                        Some(w) if w != val => {
                            return Err(Error::ConstructionIncomplete(format!(
                                "extension by {} disagrees at {}",
                                s.element(x),
                                s.element(at)
                            )));
                        }
                        Some(_) => {}
                        None => {
                            p.values[at] = Some(val);
                            fresh.push(at);
                        }
                    }
                }
            }
            if !fresh.is_empty() {
                lattice.extend(fresh);
                grown = true;
                break;
            }
        }
        if !grown {
            return Err(Error::ConstructionIncomplete(format!(
                "{} of {} elements reached",
                lattice.len(),
                len
            )));
        }
    }

    let values: Vec<usize> = (0..len).map(|i| p.get(i)).collect();
    let mut report = Report::new("factorization");
    report.push(Verdict::check(
        "factors",
        (0..n)
            .find(|&x| values[s.rho(x)] != beta.apply(x))
            .map(|x| vec![x]),
    ));
    let mut hom = None;
    'pairs: for i in 0..len {
        for j in 0..len {
            let (u, v) = (values[i], values[j]);
            let ok = values[s.meet(i, j)] == ta.meet(u, v).expect("lattice meet")
                && values[s.join(i, j)] == a_join(u, v)
                && values[s.diff(i, j)] == diff_a[u * m + v];
            if !ok {
                hom = Some(vec![i, j]);
                break 'pairs;
            }
        }
    }
    report.push(Verdict::check("gba_homomorphism", hom));
    if props.holds("tight") {
        // with the top of S covering ∅, tightness of π is the cover ∅ ⪅ {π(top)}
        let top = values[s.top()];
        report.push(Verdict::flag(
            "tight",
            covers(a, Mask::EMPTY, Mask::singleton(top)),
        ));
    } else {
        report.push(Verdict::skip("tight", "β is only tightish"));
    }
    Ok(Factorization {
        algebra: s,
        values,
        report,
    })
}

/// `π_β : S_B → S_A` with `ρ_A∘β = π_β∘ρ_B`.
fn induced(beta: &StructMap) -> Result<(Factorization, RegularOpenAlgebra)> {
    let sa = enveloping_algebra(&beta.target)?;
    let via = beta.then(&sa.rho_map()?)?;
    Ok((factor_tight(&via)?, sa))
}

/// The square `ρ_A∘β = π_β∘ρ_B` and the identity laws `π_id = id` on both
/// ends.
pub fn naturality_square(beta: &StructMap) -> Result<Report> {
    if !map_properties(beta)?.holds("tightish") {
        return Err(Error::NotTightish);
    }
    let (pi, sa) = induced(beta)?;
    let sb = &pi.algebra;
    let mut r = Report::new("naturality");
    r.push(Verdict::check(
        "square_commutes",
        (0..beta.source.size())
            .find(|&x| pi.values[sb.rho(x)] != sa.rho(beta.apply(x)))
            .map(|x| vec![x]),
    ));
    r.absorb("pi.", pi.report.clone());
    for (name, b) in [("identity_source", &beta.source), ("identity_target", &beta.target)] {
        let (id_pi, _) = induced(&StructMap::identity(b))?;
        r.push(Verdict::check(
            name,
            (0..id_pi.values.len())
                .find(|&i| id_pi.values[i] != i)
                .map(|i| vec![i]),
        ));
    }
    Ok(r)
}

/// `π_{β′∘β} = π_{β′}∘π_β` for composable tight(ish) maps.
pub fn functor_law(beta: &StructMap, beta2: &StructMap) -> Result<Report> {
    let composite = beta.then(beta2)?;
    for map in [beta, beta2] {
        if !map_properties(map)?.holds("tightish") {
            return Err(Error::NotTightish);
        }
    }
    let (p1, _) = induced(beta)?;
    let (p2, _) = induced(beta2)?;
    let (p12, _) = induced(&composite)?;
    let mut r = Report::new("functor law");
    r.push(Verdict::check(
        "composition",
        (0..p12.values.len())
            .find(|&i| p12.values[i] != p2.values[p1.values[i]])
            .map(|i| vec![i]),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, e0, p2, powerset};
    use crate::tight::all_assignments;

    #[test]
    fn e0_into_p2_is_an_isomorphism() {
        let beta = StructMap::new(e0(), p2(), vec![0, 1, 2]).unwrap();
        let f = factor_tight(&beta).unwrap();
        assert!(f.report.passed(), "{}", f.report);
        let mut v = f.values.clone();
        v.sort();
        assert_eq!(v, vec![0, 1, 2, 3]);
    }

    #[test]
    fn factoring_rho_gives_the_identity() {
        for b in [e0(), c2(), p2()] {
            let s = enveloping_algebra(&b).unwrap();
            let f = factor_tight(&s.rho_map().unwrap()).unwrap();
            assert_eq!(f.values, (0..s.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn c2_onto_one_point() {
        let beta = StructMap::new(c2(), powerset(1).unwrap(), vec![0, 1, 1]).unwrap();
        let f = factor_tight(&beta).unwrap();
        assert_eq!(f.values, vec![0, 1]);
    }

    #[test]
    fn extension_order_does_not_matter() {
        for (src, tgt) in [(e0(), powerset(3).unwrap()), (c2(), p2()), (p2(), powerset(3).unwrap())] {
            for a in all_assignments(src.size(), src.zero(), tgt.size(), tgt.zero()) {
                let beta = StructMap::new(src.clone(), tgt.clone(), a).unwrap();
                match factor_tight(&beta) {
                    Ok(f) => {
                        assert!(f.report.passed(), "{}", f.report);
                        let g = factor_tight_with(&beta, ExtensionOrder::HighestFirst).unwrap();
                        assert_eq!(f.values, g.values);
                    }
                    Err(Error::NotTightish) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn naturality_examples() {
        let beta = StructMap::new(e0(), p2(), vec![0, 1, 2]).unwrap();
        assert!(naturality_square(&beta).unwrap().passed());
        assert!(naturality_square(&StructMap::identity(&e0())).unwrap().passed());
        let swap = StructMap::new(p2(), p2(), vec![0, 2, 1, 3]).unwrap();
        assert!(functor_law(&beta, &swap).unwrap().passed());
    }
}
