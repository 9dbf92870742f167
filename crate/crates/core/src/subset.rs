use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of criteria. 2^24 values of `f64` is 128 MiB.
pub const MAX_CRITERIA: usize = 24;

/// A subset of the criteria `{0, .., n-1}` stored as a bitmask.
///
/// Bit `i` set means criterion `i` (shown as `i + 1` in text) belongs to the
/// set. The mask doubles as the index into a dense `2^n` value table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_criteria<I: IntoIterator<Item = usize>>(criteria: I) -> Self {
        Subset(criteria.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub const fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 & !self.0)
    }

    pub const fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub const fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    /// Whether the subset fits in an `n`-criteria universe.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset_of(Subset::full(n))
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`, in ascending mask order.
    pub fn subsets(self) -> Submasks {
        Submasks {
            set: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `{0..n-1}` in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(Subset)
    }

    /// `1,3` style label with 1-based ascending indices; empty for `∅`.
    pub fn key(self) -> String {
        self.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse a `1,3` style label. Indices must be ascending, distinct and
    /// within `1..=n`.
    pub fn parse_key(key: &str, n: usize) -> Result<Subset> {
        let key = key.trim();
        if key.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut mask = 0u32;
        let mut last = 0usize;
        for part in key.split(',') {
            let c: usize = part.trim().parse().map_err(|_| {
                Error::Parse(format!("bad criterion '{part}' in subset key '{key}'"))
            })?;
            if c == 0 || c > n {
                return Err(Error::Parse(format!(
                    "criterion {c} in '{key}' outside 1..={n}"
                )));
            }
            if c <= last {
                return Err(Error::Parse(format!(
                    "subset key '{key}' is not strictly ascending"
                )));
            }
            last = c;
            mask |= 1 << (c - 1);
        }
        Ok(Subset(mask))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "{{{}}}", self.key())
        }
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Parses a key without a universe bound (up to [`MAX_CRITERIA`]).
    fn from_str(s: &str) -> Result<Self> {
        Subset::parse_key(s.trim_matches(|c| c == '{' || c == '}'), MAX_CRITERIA)
    }
}

pub struct Members(u32);

impl Iterator for Members {
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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Carry-rippler enumeration of the submasks of a set.
pub struct Submasks {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.set {
            None
        } else {
            Some(cur.wrapping_sub(self.set) & self.set)
        };
        Some(Subset(cur))
    }
}
