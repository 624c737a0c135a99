//! Finite topological spaces given by their full lattice of open sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::{Mask, MAX_WIDTH};

/// Upper bound on the number of opens materialized for a single space.
pub const MAX_OPENS: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    points: usize,
    opens: Vec<Mask>,
    basis: Vec<Mask>,
    provenance: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopologyFile {
    points: usize,
    opens: Vec<Vec<usize>>,
    basis: Vec<Vec<usize>>,
}

fn check_points(points: usize) -> Result<()> {
    if points > MAX_WIDTH {
        return Err(Error::CapExceeded {
            what: "points",
            size: points,
            limit: MAX_WIDTH,
        });
    }
    Ok(())
}

/// Closes a family under binary intersection, starting from the whole space.
fn intersection_closure(points: usize, family: &[Mask]) -> Result<Vec<Mask>> {
    let mut sets = vec![Mask::full(points)];
    let mut i = 0;
    while i < sets.len() {
        for &g in family {
            let m = sets[i] & g;
            if !sets.contains(&m) {
                sets.push(m);
                if sets.len() > MAX_OPENS {
                    return Err(Error::CapExceeded {
                        what: "open sets",
                        size: sets.len(),
                        limit: MAX_OPENS,
                    });
                }
            }
        }
        i += 1;
    }
    Ok(sets)
}

/// All unions of members of `family`, including the empty union.
fn union_closure(family: &[Mask]) -> Result<Vec<Mask>> {
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Mask::EMPTY);
    let mut frontier = vec![Mask::EMPTY];
    while let Some(s) = frontier.pop() {
        for &g in family {
            let u = s | g;
            if seen.insert(u) {
                if seen.len() > MAX_OPENS {
                    return Err(Error::CapExceeded {
                        what: "open sets",
                        size: seen.len(),
                        limit: MAX_OPENS,
                    });
                }
                frontier.push(u);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

impl FiniteTopology {
    /// The topology generated by `generators`, which also become the
    /// designated basis.
    pub fn generated(points: usize, generators: Vec<Mask>) -> Result<FiniteTopology> {
        check_points(points)?;
        let full = Mask::full(points);
        if let Some(g) = generators.iter().find(|g| !g.is_subset(full)) {
            return Err(Error::InvalidTopology(format!(
                "generator {g} is not a subset of {points} points"
            )));
        }
        let base = intersection_closure(points, &generators)?;
        let opens = union_closure(&base)?;
        Ok(FiniteTopology {
            points,
            opens,
            basis: generators,
            provenance: None,
        })
    }

    pub fn discrete(points: usize) -> Result<FiniteTopology> {
        check_points(points)?;
        if points > 16 {
            return Err(Error::CapExceeded {
                what: "discrete points",
                size: points,
                limit: 16,
            });
        }
        Ok(FiniteTopology {
            points,
            opens: Mask::all(points).collect(),
            basis: (0..points).map(Mask::singleton).collect(),
            provenance: None,
        })
    }

    /// Validates an explicit open-set lattice and basis.
    pub fn from_opens(points: usize, opens: Vec<Mask>, basis: Vec<Mask>) -> Result<FiniteTopology> {
        check_points(points)?;
        let full = Mask::full(points);
        let mut opens = opens;
        opens.sort();
        opens.dedup();
        let bad = |msg: String| Err(Error::InvalidTopology(msg));
        if let Some(o) = opens.iter().chain(&basis).find(|o| !o.is_subset(full)) {
            return bad(format!("{o} is not a subset of {points} points"));
        }
        if opens.binary_search(&Mask::EMPTY).is_err() {
            return bad("the empty set is not open".into());
        }
        if opens.binary_search(&full).is_err() {
            return bad("the whole space is not open".into());
        }
        for &a in &opens {
            for &c in &opens {
                if opens.binary_search(&(a | c)).is_err() || opens.binary_search(&(a & c)).is_err() {
                    return bad(format!("opens {a} and {c} are not closed under union and intersection"));
                }
            }
        }
        if let Some(b) = basis.iter().find(|b| opens.binary_search(b).is_err()) {
            return bad(format!("basis member {b} is not open"));
        }
        for &o in &opens {
            let covered = basis
                .iter()
                .filter(|b| b.is_subset(o))
                .fold(Mask::EMPTY, |acc, &b| acc | b);
            if covered != o {
                return bad(format!("open {o} is not a union of basis members"));
            }
        }
        Ok(FiniteTopology {
            points,
            opens,
            basis,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: Vec<usize>) -> FiniteTopology {
        debug_assert_eq!(provenance.len(), self.basis.len());
        self.provenance = Some(provenance);
        self
    }

    pub fn from_json(text: &str) -> Result<FiniteTopology> {
        let file: TopologyFile = serde_json::from_str(text)?;
        check_points(file.points)?;
        let to_mask = |v: &Vec<usize>| -> Result<Mask> {
            match v.iter().find(|&&i| i >= file.points) {
                Some(&index) => Err(Error::IndexOutOfRange {
                    index,
                    size: file.points,
                }),
                None => Ok(Mask::from_indices(v.iter().copied())),
            }
        };
        let opens = file.opens.iter().map(to_mask).collect::<Result<Vec<_>>>()?;
        let basis = file.basis.iter().map(to_mask).collect::<Result<Vec<_>>>()?;
        FiniteTopology::from_opens(file.points, opens, basis)
    }

    pub fn to_json(&self) -> String {
        let file = TopologyFile {
            points: self.points,
            opens: self.opens.iter().map(|m| m.iter().collect()).collect(),
            basis: self.basis.iter().map(|m| m.iter().collect()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("topology serializes")
    }

    #[inline]
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn basis(&self) -> &[Mask] {
        &self.basis
    }

    pub fn provenance(&self) -> Option<&[usize]> {
        self.provenance.as_deref()
    }

    pub fn whole(&self) -> Mask {
        Mask::full(self.points)
    }

    pub fn is_open(&self, s: Mask) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: Mask) -> bool {
        self.is_open(s.complement(self.points))
    }

    /// Complement of the union of all opens disjoint from `s`.
    pub fn closure(&self, s: Mask) -> Mask {
        let outside = self
            .opens
            .iter()
            .filter(|o| !o.intersects(s))
            .fold(Mask::EMPTY, |acc, &o| acc | o);
        outside.complement(self.points)
    }

    pub fn interior(&self, s: Mask) -> Mask {
        self.opens
            .iter()
            .filter(|o| o.is_subset(s))
            .fold(Mask::EMPTY, |acc, &o| acc | o)
    }

    /// Smallest open set containing `p`.
    pub fn neighbourhood(&self, p: usize) -> Mask {
        self.opens
            .iter()
            .filter(|o| o.contains(p))
            .fold(self.whole(), |acc, &o| acc & o)
    }

    /// First pair of distinct points without disjoint neighbourhoods.
    pub fn hausdorff_counterexample(&self) -> Option<(usize, usize)> {
        let nbhd: Vec<Mask> = (0..self.points).map(|p| self.neighbourhood(p)).collect();
        for p in 0..self.points {
            for q in (p + 1)..self.points {
                if nbhd[p].intersects(nbhd[q]) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.points).all(|p| self.is_open(Mask::singleton(p)))
    }

    /// Whether `f` (point `i` of `self` to point `f[i]` of `target`) pulls
    /// every open back to an open; returns the first offending target open.
    pub fn continuity_counterexample(&self, target: &FiniteTopology, f: &[usize]) -> Option<Mask> {
        target.opens.iter().copied().find(|&o| {
            let pre: Mask = (0..self.points).filter(|&i| o.contains(f[i])).collect();
            !self.is_open(pre)
        })
    }
}
