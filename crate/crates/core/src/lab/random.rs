//! Seeded random structures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::structure::P0Set;

pub const RANDOM_CAP: usize = 12;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn transitive_closure(rows: &mut [Mask]) {
    loop {
        let mut changed = false;
        for x in 0..rows.len() {
            let closed = rows[x].iter().fold(rows[x], |acc, y| acc | rows[y]);
            if closed != rows[x] {
                rows[x] = closed;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// A random structure on `n` points with zero at index 0.
///
/// Reflexive mode closes a random acyclic graph over a shuffled ranking of
/// the nonzero points into a partial order. Otherwise every pair, diagonal
/// included, is an edge with probability `density` before closing under
/// transitivity together with the pairs `0 ≺ x`.
pub fn random_p0set(n: usize, seed: u64, reflexive: bool, density: f64) -> Result<P0Set> {
    if n == 0 || n > RANDOM_CAP {
        return Err(Error::CapExceeded {
            what: "random structure size",
            size: n,
            limit: RANDOM_CAP,
        });
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Invalid(format!("density {density} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut rows = vec![Mask::EMPTY; n];
    rows[0] = Mask::full(n);
    if reflexive {
        let mut rank: Vec<usize> = (1..n).collect();
        rank.shuffle(&mut rng);
        for x in 1..n {
            rows[x] = Mask::singleton(x);
        }
        for i in 0..rank.len() {
            for j in (i + 1)..rank.len() {
                if rng.gen_bool(density) {
                    rows[rank[i]] = rows[rank[i]].with(rank[j]);
                }
            }
        }
    } else {
        for row in rows.iter_mut().skip(1) {
            for y in 0..n {
                if rng.gen_bool(density) {
                    *row = row.with(y);
                }
            }
        }
    }
    transitive_closure(&mut rows);
    P0Set::from_rows(0, rows)
}

/// Random size, mode and density drawn from `seed`, for sweeps.
pub fn random_structure(max_size: usize, seed: u64) -> Result<P0Set> {
    let mut r = rng(seed ^ 0x5eed_0f_5eed);
    let n = r.gen_range(1..=max_size.clamp(1, RANDOM_CAP));
    let reflexive = r.gen_bool(0.5);
    let density = r.gen_range(0.1..0.7);
    random_p0set(n, r.gen(), reflexive, density)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = random_p0set(4, 42, true, 0.3).unwrap();
        let b = random_p0set(4, 42, true, 0.3).unwrap();
        assert_eq!(a, b);
        assert!(a.is_reflexive());
    }

    #[test]
    fn one_point() {
        for reflexive in [true, false] {
            assert_eq!(random_p0set(1, 7, reflexive, 0.5).unwrap().size(), 1);
        }
    }

    #[test]
    fn outputs_are_valid() {
        for seed in 0..10_000u64 {
            let n = (seed % 8) as usize + 1;
            let b = random_p0set(n, seed, seed % 2 == 0, 0.35).unwrap();
            assert_eq!(b.size(), n);
            assert!((0..n).all(|x| b.prec(0, x)));
        }
    }

    #[test]
    fn caps() {
        assert!(random_p0set(13, 0, true, 0.5).is_err());
        assert!(random_p0set(3, 0, true, 1.5).is_err());
    }
}
