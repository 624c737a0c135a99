//! Named deterministic structures.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::structure::P0Set;

/// Reflexive-transitive closure of `edges` over `size` points with `0` at the bottom.
pub fn order_from_edges(size: usize, edges: &[(usize, usize)]) -> Result<P0Set> {
    if size == 0 || size > crate::structure::MAX_SIZE {
        return Err(Error::CapExceeded {
            what: "family size",
            size,
            limit: crate::structure::MAX_SIZE,
        });
    }
    let mut rows: Vec<Mask> = (0..size).map(Mask::singleton).collect();
    rows[0] = Mask::full(size);
    for &(x, y) in edges {
        if x >= size || y >= size {
            return Err(Error::IndexOutOfRange {
                index: x.max(y),
                size,
            });
        }
        rows[x] = rows[x].with(y);
    }
    loop {
        let mut changed = false;
        for x in 0..size {
            let closed = rows[x].iter().fold(rows[x], |acc, y| acc | rows[y]);
            if closed != rows[x] {
                rows[x] = closed;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    P0Set::from_rows(0, rows)
}

fn named(b: P0Set, names: &[&str]) -> P0Set {
    b.with_names(names.iter().map(|s| s.to_string()).collect())
        .expect("name count matches")
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("a{i}")
            }
        })
        .collect()
}

/// `0`, `n` pairwise incomparable atoms, and a top.
pub fn diamond(n: usize) -> Result<P0Set> {
    let top = n + 1;
    let edges: Vec<_> = (1..=n).map(|a| (a, top)).collect();
    let b = order_from_edges(n + 2, &edges)?;
    let mut names = vec!["0".to_string()];
    names.extend(letters(n));
    names.push("1".into());
    b.with_names(names)
}

/// All subsets of `{1..n}` under inclusion; element `i` is the subset with bitmask `i`.
pub fn powerset(n: usize) -> Result<P0Set> {
    if n > 4 {
        return Err(Error::CapExceeded {
            what: "powerset exponent",
            size: n,
            limit: 4,
        });
    }
    let size = 1usize << n;
    let b = P0Set::from_fn(size, 0, |x, y| x & y == x)?;
    let names = (0..size)
        .map(|i| Mask(i as u64).iter().map(|k| k + 1).collect::<Mask>().to_string())
        .collect();
    b.with_names(names)
}

/// `0 < a < b < ...` with `n + 1` elements.
pub fn chain(n: usize) -> Result<P0Set> {
    let edges: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    let b = order_from_edges(n + 1, &edges)?;
    let mut names = vec!["0".to_string()];
    names.extend(letters(n));
    b.with_names(names)
}

/// `0` below `n` incomparable atoms.
pub fn antichain(n: usize) -> Result<P0Set> {
    let b = order_from_edges(n + 1, &[])?;
    let mut names = vec!["0".to_string()];
    names.extend(letters(n));
    b.with_names(names)
}

/// `{0, x, y}` with `x ∧ y = 0` and no join.
pub fn e0() -> P0Set {
    named(order_from_edges(3, &[]).expect("valid"), &["0", "x", "y"])
}

/// The chain `0 ≺ a ≺ b`.
pub fn c2() -> P0Set {
    chain(2).expect("valid")
}

pub fn p2() -> P0Set {
    powerset(2).expect("valid")
}

pub fn d3() -> P0Set {
    diamond(3).expect("valid")
}

/// Non-reflexive five-element structure where `p`, `q` sit below `x ≺ y`.
pub fn w5() -> P0Set {
    let (p, q, x, y) = (1, 2, 3, 4);
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (0, i)).collect();
    pairs.extend([(p, p), (q, q), (p, x), (q, x), (x, y), (p, y), (q, y)]);
    named(P0Set::new(5, 0, pairs).expect("valid"), &["0", "p", "q", "x", "y"])
}

pub fn one_point() -> P0Set {
    named(P0Set::new(1, 0, [(0, 0)]).expect("valid"), &["0"])
}

pub const FAMILY_NAMES: &[&str] = &[
    "diamond",
    "powerset",
    "chain",
    "antichain",
    "three_point",
    "witness",
];

pub fn make_family(name: &str, n: usize) -> Result<P0Set> {
    match name {
        "diamond" => diamond(n),
        "powerset" => powerset(n),
        "chain" => chain(n),
        "antichain" => antichain(n),
        "three_point" | "e0" => Ok(e0()),
        "witness" | "w5" => Ok(w5()),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(make_family("diamond", 3).unwrap().size(), 5);
        assert_eq!(make_family("powerset", 2).unwrap().size(), 4);
        assert_eq!(make_family("chain", 2).unwrap().size(), 3);
        assert_eq!(make_family("three_point", 0).unwrap(), e0());
    }

    #[test]
    fn unknown_family_is_rejected() {
        assert!(matches!(make_family("torus", 1), Err(Error::UnknownFamily(_))));
        assert!(make_family("powerset", 5).is_err());
    }

    #[test]
    fn powerset_names_follow_bitmasks() {
        let p = p2();
        assert_eq!(p.name(0), "{}");
        assert_eq!(p.name(3), "{1,2}");
        assert!(p.prec(1, 3) && !p.prec(1, 2));
    }

    #[test]
    fn w5_is_not_reflexive() {
        let w = w5();
        assert!(!w.is_reflexive());
        assert!(!w.prec(3, 3));
        assert!(w.prec(1, 4));
    }
}
