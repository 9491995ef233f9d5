//! Subsets of a ground set `{1, ..., n}` with `n <= 64`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of `{1, ..., n}`. Element `e` is stored in bit `e - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroundSubset(u64);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        GroundSubset(mask)
    }

    /// The whole ground set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            GroundSubset(u64::MAX)
        } else {
            GroundSubset((1u64 << n) - 1)
        }
    }

    /// Builds a subset from 1-based elements. Panics on 0 or elements above 64.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut mask = 0u64;
        for e in elements {
            assert!((1..=MAX_GROUND).contains(&e), "element {e} outside 1..=64");
            mask |= 1 << (e - 1);
        }
        GroundSubset(mask)
    }

    pub fn singleton(e: usize) -> Self {
        Self::from_elements([e])
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        GroundSubset(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Self {
        GroundSubset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        GroundSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        GroundSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        GroundSubset(self.0 & !other.0)
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        GroundSubset::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Cardinality first, then lexicographic on the sorted element lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for GroundSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        GroundSubset::from_elements(iter)
    }
}

/// Iterator over the elements of a [`GroundSubset`].
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

/// All `k`-subsets of `{1, ..., n}` in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_GROUND);
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(GroundSubset::full(k).mask())
    };
    KSubsets { n, next }
}

pub struct KSubsets {
    n: usize,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            if overflow {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if self.n < MAX_GROUND && nxt >> self.n != 0 {
                    None
                } else {
                    Some(nxt)
                }
            }
        };
        Some(GroundSubset(cur))
    }
}

/// Sorts in cardinality-then-lexicographic order.
pub fn sort_canonical(sets: &mut [GroundSubset]) {
    sets.sort_by(|a, b| a.canonical_cmp(b));
}
