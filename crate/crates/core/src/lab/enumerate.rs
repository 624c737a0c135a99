//! Exhaustive labeled enumeration of small structures.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::structure::P0Set;

use super::families::make_family;
use super::random::random_p0set;

/// Largest size enumerated for partial orders.
pub const REFLEXIVE_ENUM_CAP: usize = 6;
/// Largest size enumerated for arbitrary transitive relations.
pub const GENERAL_ENUM_CAP: usize = 5;

fn transitive(rows: &[Mask]) -> bool {
    (0..rows.len()).all(|x| rows[x].iter().all(|y| rows[y].is_subset(rows[x])))
}

/// Every transitive relation on `n` labeled points with `0 ≺ x` for all `x`,
/// in a fixed order. `reflexive_only` keeps only partial orders.
pub fn enumerate_structures(n: usize, reflexive_only: bool) -> Result<Vec<P0Set>> {
    let limit = if reflexive_only {
        REFLEXIVE_ENUM_CAP
    } else {
        GENERAL_ENUM_CAP
    };
    if n == 0 || n > limit {
        return Err(Error::CapExceeded {
            what: "enumeration size",
            size: n,
            limit,
        });
    }
    let full = Mask::full(n);
    let mut out = Vec::new();
    if reflexive_only {
        // row x holds x and a subset of the other nonzero points
        let free: Vec<Vec<usize>> = (1..n)
            .map(|x| (1..n).filter(|&y| y != x).collect())
            .collect();
        let per_row = n.saturating_sub(2);
        let total = 1u64 << (per_row * (n - 1));
        for code in 0..total {
            let mut rows = vec![full; n];
            for x in 1..n {
                let bits = (code >> (per_row * (x - 1))) & ((1u64 << per_row) - 1);
                rows[x] = Mask::singleton(x)
                    | Mask(bits).iter().map(|k| free[x - 1][k]).collect::<Mask>();
            }
            let antisymmetric = (1..n).all(|x| rows[x].iter().all(|y| y == x || !rows[y].contains(x)));
            if antisymmetric && transitive(&rows) {
                out.push(P0Set::from_rows(0, rows)?);
            }
        }
    } else {
        let total = 1u64 << (n * (n - 1));
        for code in 0..total {
            let mut rows = vec![full; n];
            for x in 1..n {
                rows[x] = Mask((code >> (n * (x - 1))) & full.bits());
            }
            if transitive(&rows) {
                out.push(P0Set::from_rows(0, rows)?);
            }
        }
    }
    Ok(out)
}

/// Partial orders up to `reflexive_max` points followed by the remaining
/// (non-reflexive) transitive relations up to `general_max` points, each
/// structure listed once.
pub fn sweep_structures(reflexive_max: usize, general_max: usize) -> Result<Vec<P0Set>> {
    let mut out = Vec::new();
    for n in 1..=reflexive_max {
        out.extend(enumerate_structures(n, true)?);
    }
    for n in 1..=general_max {
        out.extend(
            enumerate_structures(n, false)?
                .into_iter()
                .filter(|b| !b.is_reflexive() || n > reflexive_max),
        );
    }
    Ok(out)
}

/// A reproducible description of a stream of structures.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Named { name: String, n: usize },
    Random {
        n: usize,
        seed: u64,
        reflexive: bool,
        density: f64,
    },
    Exhaustive { n: usize, reflexive_only: bool },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Vec<P0Set>> {
        match self {
            GeneratorSpec::Named { name, n } => Ok(vec![make_family(name, *n)?]),
            GeneratorSpec::Random {
                n,
                seed,
                reflexive,
                density,
            } => Ok(vec![random_p0set(*n, *seed, *reflexive, *density)?]),
            GeneratorSpec::Exhaustive { n, reflexive_only } => {
                enumerate_structures(*n, *reflexive_only)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::families::{c2, e0};

    /// Bottomed transitive relations by brute force over all matrices.
    fn naive_count(n: usize, reflexive_only: bool) -> usize {
        let mut count = 0;
        for code in 0u64..(1 << (n * n)) {
            let rel = |x: usize, y: usize| code >> (x * n + y) & 1 == 1;
            if !(0..n).all(|x| rel(0, x)) {
                continue;
            }
            let mut ok = true;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if rel(x, y) && rel(y, z) && !rel(x, z) {
                            ok = false;
                        }
                    }
                    if reflexive_only && (!rel(x, x) || (x != y && rel(x, y) && rel(y, x))) {
                        ok = false;
                    }
                }
            }
            count += usize::from(ok);
        }
        count
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=4 {
            for r in [true, false] {
                assert_eq!(enumerate_structures(n, r).unwrap().len(), naive_count(n, r), "{n} {r}");
            }
        }
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_structures(n, true).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn three_points_include_the_named_examples() {
        let all = enumerate_structures(3, true).unwrap();
        let strip = |b: P0Set| P0Set::from_fn(b.size(), 0, |x, y| b.prec(x, y)).unwrap();
        assert!(all.contains(&strip(e0())));
        assert!(all.contains(&strip(c2())));
    }

    #[test]
    fn sweep_has_no_duplicates() {
        let s = sweep_structures(4, 3).unwrap();
        for i in 0..s.len() {
            for j in (i + 1)..s.len() {
                assert_ne!(s[i], s[j]);
            }
        }
    }

    #[test]
    fn generator_specs_are_deterministic() {
        let spec = GeneratorSpec::Random {
            n: 5,
            seed: 9,
            reflexive: false,
            density: 0.4,
        };
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }
}
