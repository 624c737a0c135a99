use std::collections::HashMap;

use super::{covers, StructMap};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::report::{Report, Verdict};
use crate::structure::P0Set;

/// Largest carrier accepted by [`enveloping_algebra`].
pub const ENVELOPE_CAP: usize = 14;
/// Largest carrier accepted by [`verify_fgrho`].
pub const FGRHO_CAP: usize = 8;
/// Largest enveloping algebra that is built at all.
const ELEMENT_LIMIT: usize = 1 << 14;

/// `B′ = B ∖ {0}` with closed sets the `⪯`-up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Alexandroff {
    points: Mask,
    up: Vec<Mask>,
    down: Vec<Mask>,
}

impl Alexandroff {
    fn new(b: &P0Set) -> Alexandroff {
        let d = b.derived();
        let points = b.carrier().minus(d.zero_class());
        Alexandroff {
            points,
            up: (0..b.size()).map(|x| d.up(x) & points).collect(),
            down: (0..b.size()).map(|x| d.down(x) & points).collect(),
        }
    }

    fn closure(&self, y: Mask) -> Mask {
        (y & self.points)
            .iter()
            .fold(Mask::EMPTY, |acc, x| acc | self.up[x])
    }

    fn interior(&self, y: Mask) -> Mask {
        self.points
            .iter()
            .filter(|&x| self.down[x].is_subset(y))
            .collect()
    }

    fn regularize(&self, y: Mask) -> Mask {
        self.interior(self.closure(y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlexandroffOps {
    pub closure: Mask,
    pub interior: Mask,
    pub regularize: Mask,
}

/// Closure, interior and regularization of `Y` in `B′`; members of the zero
/// class are ignored.
pub fn alexandroff_ops(b: &P0Set, y: Mask) -> AlexandroffOps {
    let space = Alexandroff::new(b);
    let y = y & space.points;
    AlexandroffOps {
        closure: space.closure(y),
        interior: space.interior(y),
        regularize: space.regularize(y),
    }
}

/// `ρ(x)`, the regularization of `{x}^⪰ ∖ {0}`.
pub fn rho(b: &P0Set, x: usize) -> Mask {
    let space = Alexandroff::new(b);
    space.regularize(space.down[x])
}

/// The generalized Boolean algebra of regular open subsets of `B′`
/// generated by `ρ[B]`, with elements listed by size then bit pattern, so
/// the empty set comes first.
#[derive(Clone, Debug)]
pub struct RegularOpenAlgebra {
    base: P0Set,
    space: Alexandroff,
    elements: Vec<Mask>,
    index: HashMap<Mask, usize>,
    rho: Vec<usize>,
}

pub fn enveloping_algebra(b: &P0Set) -> Result<RegularOpenAlgebra> {
    if b.size() > ENVELOPE_CAP {
        return Err(Error::CapExceeded {
            what: "enveloping algebra carrier",
            size: b.size(),
            limit: ENVELOPE_CAP,
        });
    }
    let space = Alexandroff::new(b);
    let rho_masks: Vec<Mask> = (0..b.size())
        .map(|x| space.regularize(space.down[x]))
        .collect();
    let mut elements = vec![Mask::EMPTY];
    for &r in &rho_masks {
        if !elements.contains(&r) {
            elements.push(r);
        }
    }
    let mut seen: std::collections::HashSet<Mask> = elements.iter().copied().collect();
    let mut i = 0;
    while i < elements.len() {
        for j in 0..=i {
            let (p, q) = (elements[i], elements[j]);
            for v in [
                p & q,
                space.regularize(p | q),
                p & space.interior(space.points.minus(q)),
                q & space.interior(space.points.minus(p)),
            ] {
                if seen.insert(v) {
                    elements.push(v);
                }
            }
        }
        if elements.len() > ELEMENT_LIMIT {
            return Err(Error::CapExceeded {
                what: "enveloping algebra elements",
                size: elements.len(),
                limit: ELEMENT_LIMIT,
            });
        }
        i += 1;
    }
    elements.sort_by_key(|m| (m.len(), m.bits()));
    let index: HashMap<Mask, usize> = elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let rho = rho_masks.iter().map(|m| index[m]).collect();
    Ok(RegularOpenAlgebra {
        base: b.clone(),
        space,
        elements,
        index,
        rho,
    })
}

impl RegularOpenAlgebra {
    pub fn base(&self) -> &P0Set {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Mask] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Mask {
        self.elements[i]
    }

    pub fn index_of(&self, m: Mask) -> Option<usize> {
        self.index.get(&m).copied()
    }

    /// Index of `ρ(x)`.
    pub fn rho(&self, x: usize) -> usize {
        self.rho[x]
    }

    pub fn rho_indices(&self) -> &[usize] {
        &self.rho
    }

    fn lookup(&self, m: Mask) -> usize {
        *self
            .index
            .get(&m)
            .expect("enveloping algebra is closed under its operations")
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lookup(self.elements[i] & self.elements[j])
    }

    /// Regularized union.
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lookup(self.space.regularize(self.elements[i] | self.elements[j]))
    }

    /// `a ∖ b = a ∩ int(B′ ∖ b)`.
    pub fn diff(&self, i: usize, j: usize) -> usize {
        let rest = self.space.interior(self.space.points.minus(self.elements[j]));
        self.lookup(self.elements[i] & rest)
    }

    /// Join of every element.
    pub fn top(&self) -> usize {
        (0..self.len()).fold(0, |acc, i| self.join(acc, i))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(self.elements[j])
    }

    /// Minimal nonzero elements.
    pub fn atoms(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| (1..self.len()).all(|j| j == i || !self.elements[j].is_subset(self.elements[i])))
            .collect()
    }

    /// Ultrafilters as sorted element lists. Every filter of a finite
    /// lattice is principal, so these are the maximal proper principal
    /// filters `↑a`.
    pub fn ultrafilters(&self) -> Vec<Vec<usize>> {
        let up = |a: usize| -> Vec<usize> { (0..self.len()).filter(|&j| self.leq(a, j)).collect() };
        let proper: Vec<Vec<usize>> = (1..self.len()).map(up).collect();
        proper
            .iter()
            .filter(|f| {
                !proper
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|x| g.contains(x)))
            })
            .cloned()
            .collect()
    }

    /// The algebra as an abstract structure ordered by inclusion.
    pub fn as_p0set(&self) -> Result<P0Set> {
        P0Set::from_fn(self.len(), 0, |i, j| self.leq(i, j))
    }

    /// `ρ` as a map into [`RegularOpenAlgebra::as_p0set`].
    pub fn rho_map(&self) -> Result<StructMap> {
        StructMap::new(self.base.clone(), self.as_p0set()?, self.rho.clone())
    }

    /// Regularity, closure under the three operations, distributivity and a
    /// maximum.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("enveloping algebra");
        let s = &self.space;
        r.push(Verdict::check(
            "regular",
            (0..self.len())
                .find(|&i| s.regularize(self.elements[i]) != self.elements[i])
                .map(|i| vec![i]),
        ));
        let mut closed = None;
        let mut distributive = None;
        'pairs: for i in 0..self.len() {
            for j in 0..self.len() {
                let (p, q) = (self.elements[i], self.elements[j]);
                let outs = [
                    p & q,
                    s.regularize(p | q),
                    p & s.interior(s.points.minus(q)),
                ];
                if outs.iter().any(|o| !self.index.contains_key(o)) {
                    closed = Some(vec![i, j]);
                    break 'pairs;
                }
            }
        }
        r.push(Verdict::check("closed", closed.clone()));
        if closed.is_none() && self.len() <= 64 {
            'triples: for i in 0..self.len() {
                for j in 0..self.len() {
                    for k in 0..self.len() {
                        if self.meet(i, self.join(j, k)) != self.join(self.meet(i, j), self.meet(i, k)) {
                            distributive = Some(vec![i, j, k]);
                            break 'triples;
                        }
                    }
                }
            }
            r.push(Verdict::check("distributive", distributive));
        } else {
            r.push(Verdict::skip("distributive", "algebra too large or not closed"));
        }
        if closed.is_none() {
            let top = self.top();
            r.push(Verdict::check(
                "has_maximum",
                (0..self.len()).find(|&i| !self.leq(i, top)).map(|i| vec![i]),
            ));
            let complemented = (0..self.len()).find(|&i| {
                let c = self.diff(top, i);
                self.meet(i, c) != 0 || self.join(i, c) != top
            });
            r.push(Verdict::check("complemented", complemented.map(|i| vec![i])));
        }
        r
    }
}

/// `F ⪅ G ⇔ ⋀ρ[F] ⊆ ⋁ρ[G]` for every pair of subsets; the witness is the
/// first failing pair as bitmasks.
pub fn verify_fgrho(b: &P0Set) -> Result<Report> {
    let n = b.size();
    if n > FGRHO_CAP {
        return Err(Error::CapExceeded {
            what: "FG-rho carrier",
            size: n,
            limit: FGRHO_CAP,
        });
    }
    let space = Alexandroff::new(b);
    let rho: Vec<Mask> = (0..n).map(|x| space.regularize(space.down[x])).collect();
    let meets: Vec<Mask> = Mask::all(n)
        .map(|f| f.iter().fold(space.points, |acc, x| acc & rho[x]))
        .collect();
    let joins: Vec<Mask> = Mask::all(n)
        .map(|g| space.regularize(g.iter().fold(Mask::EMPTY, |acc, y| acc | rho[y])))
        .collect();
    let mut witness = None;
    'outer: for f in Mask::all(n) {
        for g in Mask::all(n) {
            let via_rho = meets[f.bits() as usize].is_subset(joins[g.bits() as usize]);
            if via_rho != covers(b, f, g) {
                witness = Some(vec![f.bits() as usize, g.bits() as usize]);
                break 'outer;
            }
        }
    }
    let mut r = Report::new("FG-rho");
    r.push(Verdict::check("fgrho", witness));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, d3, e0, one_point, p2, w5};
    use crate::stone::enumerate_ultrafilters;
    use crate::structure::is_generalized_boolean;

    fn m(v: &[usize]) -> Mask {
        Mask::from_indices(v.iter().copied())
    }

    #[test]
    fn regularization_examples() {
        assert_eq!(alexandroff_ops(&c2(), m(&[1])).regularize, m(&[1, 2]));
        assert_eq!(alexandroff_ops(&e0(), m(&[1])).regularize, m(&[1]));
        for b in [c2(), e0(), p2()] {
            assert_eq!(alexandroff_ops(&b, Mask::EMPTY).regularize, Mask::EMPTY);
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&c2(), 1), m(&[1, 2]));
        assert_eq!(rho(&c2(), 2), m(&[1, 2]));
        assert_eq!(rho(&e0(), 1), m(&[1]));
        for b in [c2(), e0(), p2(), w5()] {
            assert_eq!(rho(&b, b.zero()), Mask::EMPTY);
        }
    }

    #[test]
    fn envelope_examples() {
        let s = enveloping_algebra(&e0()).unwrap();
        assert_eq!(s.len(), 4);
        assert!(is_generalized_boolean(&s.as_p0set().unwrap()));
        let s = enveloping_algebra(&c2()).unwrap();
        assert_eq!(s.elements(), &[Mask::EMPTY, m(&[1, 2])]);
        let s = enveloping_algebra(&p2()).unwrap();
        assert_eq!(s.len(), 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(p2().derived().preceq(x, y), s.leq(s.rho(x), s.rho(y)));
            }
        }
        assert_eq!(enveloping_algebra(&one_point()).unwrap().len(), 1);
    }

    #[test]
    fn envelopes_verify() {
        for b in [e0(), c2(), p2(), d3(), w5(), one_point()] {
            let s = enveloping_algebra(&b).unwrap();
            let r = s.verify();
            assert!(r.passed(), "{r}");
            let ours = s.ultrafilters();
            let literal = enumerate_ultrafilters(&s.as_p0set().unwrap()).unwrap();
            let literal: Vec<Vec<usize>> = literal.iter().map(|u| u.iter().collect()).collect();
            let mut ours_sorted = ours.clone();
            ours_sorted.sort();
            let mut lit_sorted = literal;
            lit_sorted.sort();
            assert_eq!(ours_sorted, lit_sorted);
        }
    }

    #[test]
    fn fgrho_examples() {
        for b in [e0(), c2(), w5(), p2(), d3()] {
            assert!(verify_fgrho(&b).unwrap().passed());
        }
    }
}
