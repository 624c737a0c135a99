//! Fixed-width subsets of a finite carrier.
//!
//! Every subset of a structure's carrier (filters, ideals, covers, saturated
//! sets, open sets of a finite space, characters) is stored as a [`Mask`].
//! Bit `i` set means element `i` belongs to the subset. The width is implied
//! by the owning structure; nothing here checks it.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

/// Largest carrier a mask can describe.
pub const MAX_WIDTH: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    /// The whole carrier `{0, .., width-1}`.
    pub fn full(width: usize) -> Mask {
        debug_assert!(width <= MAX_WIDTH);
        if width >= 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << width) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        debug_assert!(i < MAX_WIDTH);
        Mask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Mask {
        items.into_iter().fold(Mask::EMPTY, |m, i| m.with(i))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_WIDTH && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Mask {
        Mask(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Mask {
        Mask(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Mask) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    /// Complement relative to a carrier of the given width.
    #[inline]
    pub fn complement(self, width: usize) -> Mask {
        Mask::full(width).minus(self)
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> MaskIter {
        MaskIter(self.0)
    }

    /// All submasks of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            of: self.0,
            next: Some(0),
        }
    }

    /// Every subset of a carrier of the given width, in increasing numeric order.
    pub fn all(width: usize) -> impl Iterator<Item = Mask> {
        debug_assert!(width < 64);
        (0..1u64 << width).map(Mask)
    }
}

impl BitAnd for Mask {
    type Output = Mask;
    fn bitand(self, rhs: Mask) -> Mask {
        Mask(self.0 & rhs.0)
    }
}

impl BitOr for Mask {
    type Output = Mask;
    fn bitor(self, rhs: Mask) -> Mask {
        Mask(self.0 | rhs.0)
    }
}

impl BitAndAssign for Mask {
    fn bitand_assign(&mut self, rhs: Mask) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for Mask {
    fn bitor_assign(&mut self, rhs: Mask) {
        self.0 |= rhs.0;
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Mask {
        Mask::from_indices(iter)
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

pub struct MaskIter(u64);

impl Iterator for MaskIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for MaskIter {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    of: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            // standard trick: next submask above `cur`
            Some((cur.wrapping_sub(self.of)) & self.of)
        };
        Some(Mask(cur))
    }
}

/// Smallest selection of `sets` (by index, repeats never needed) whose union
/// contains `universe`, or `None` when even all of them together fall short.
pub fn min_cover(universe: Mask, sets: &[Mask]) -> Option<Vec<usize>> {
    let reach = sets.iter().fold(Mask::EMPTY, |a, &s| a | s);
    if !universe.is_subset(reach) {
        return None;
    }
    let mut chosen = Vec::new();
    for depth in 0..=universe.len() {
        if cover_within(universe, sets, depth, &mut chosen) {
            return Some(chosen);
        }
    }
    unreachable!("one set per element always suffices")
}

fn cover_within(uncovered: Mask, sets: &[Mask], depth: usize, chosen: &mut Vec<usize>) -> bool {
    let Some(e) = uncovered.first() else {
        return true;
    };
    if depth == 0 {
        return false;
    }
    for (i, &s) in sets.iter().enumerate() {
        if s.contains(e) {
            chosen.push(i);
            if cover_within(uncovered.minus(s), sets, depth - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
