use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result, WeightFunction};

/// An upper half-circle joining two integers, drawn above the number line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cap {
    start: i64,
    end: i64,
}

impl Cap {
    /// A cap runs left to right and encloses an even number of integers, so
    /// `end - start` must be positive and odd.
    pub fn new(start: i64, end: i64) -> Result<Self> {
        if start >= end || (end - start) % 2 == 0 {
            return Err(Error::InvalidCap { start, end });
        }
        Ok(Self { start, end })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.end
    }

    /// True iff `z` lies strictly between the endpoints.
    pub fn encloses(&self, z: i64) -> bool {
        self.start < z && z < self.end
    }

    fn overlaps_illegally(&self, other: &Cap) -> bool {
        let nested = (self.start < other.start && other.end < self.end)
            || (other.start < self.start && self.end < other.end);
        let disjoint = self.end < other.start || other.end < self.start;
        !(nested || disjoint)
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// A noncrossing set of caps whose interiors contain nothing but endpoints of
/// nested caps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CapDiagram {
    caps: BTreeSet<Cap>,
}

impl CapDiagram {
    /// Validates the full diagram invariants: distinct endpoints, no two caps
    /// crossing (shared endpoints count as crossings), and saturated
    /// interiors.
    pub fn new(caps: impl IntoIterator<Item = Cap>) -> Result<Self> {
        let caps: BTreeSet<Cap> = caps.into_iter().collect();
        let mut endpoints = BTreeSet::new();
        for cap in &caps {
            for z in [cap.start, cap.end] {
                if !endpoints.insert(z) {
                    return Err(Error::InvalidCapDiagram(format!(
                        "point {z} is an endpoint of two caps"
                    )));
                }
            }
        }
        for (i, a) in caps.iter().enumerate() {
            for b in caps.iter().skip(i + 1) {
                if a.overlaps_illegally(b) {
                    return Err(Error::InvalidCapDiagram(format!("caps {a} and {b} cross")));
                }
            }
        }
        for cap in &caps {
            for z in (cap.start + 1)..cap.end {
                if !endpoints.contains(&z) {
                    return Err(Error::InvalidCapDiagram(format!(
                        "point {z} inside {cap} is not an endpoint of a nested cap"
                    )));
                }
            }
        }
        Ok(Self { caps })
    }

    /// The canonical cap diagram of `f`: one cap starts at each marked point.
    /// Working from the largest entry to the smallest, the cap starting at
    /// `b` ends at the leftmost unmarked integer right of `b` that no earlier
    /// cap already ends on. Unmarked integers are unbounded to the right, so
    /// the rule always terminates.
    pub fn of(f: &WeightFunction) -> Self {
        let mut used_ends = BTreeSet::new();
        let mut caps = BTreeSet::new();
        for &start in f.entries().iter().rev() {
            let mut end = start + 1;
            while f.contains(end) || used_ends.contains(&end) {
                end += 1;
            }
            used_ends.insert(end);
            caps.insert(Cap { start, end });
        }
        Self { caps }
    }

    /// True iff, superimposed on the line of `f`, the diagram pairs each
    /// marked point of `f` with an unmarked one: the cap count equals the
    /// rank, every entry of `f` is an endpoint, and each cap has exactly one
    /// endpoint among the entries.
    pub fn matches(&self, f: &WeightFunction) -> bool {
        self.caps.len() == f.rank()
            && f.entries()
                .iter()
                .all(|&a| self.caps.iter().any(|c| c.start == a || c.end == a))
            && self
                .caps
                .iter()
                .all(|c| f.contains(c.start) != f.contains(c.end))
    }

    pub fn caps(&self) -> impl Iterator<Item = &Cap> {
        self.caps.iter()
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }

    pub fn contains(&self, cap: &Cap) -> bool {
        self.caps.contains(cap)
    }

    /// Number of caps strictly enclosing `cap`.
    pub fn depth(&self, cap: &Cap) -> usize {
        self.caps
            .iter()
            .filter(|c| c.start < cap.start && cap.end < c.end)
            .count()
    }

    /// Leftmost start and rightmost end over all caps.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.caps.iter().map(|c| c.start).min()?;
        let hi = self.caps.iter().map(|c| c.end).max()?;
        Some((lo, hi))
    }
}

impl fmt::Display for CapDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, cap) in self.caps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{cap}")?;
        }
        write!(f, "}}")
    }
}
