use std::fmt;

use crate::{Error, Result};

/// A weight function: finitely many integers marked `x` on the number line,
/// identified with the strictly increasing list of marked positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeightFunction {
    entries: Vec<i64>,
}

impl WeightFunction {
    /// Builds a weight function from its marked positions, which must be
    /// strictly increasing.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(entries));
        }
        Ok(Self { entries })
    }

    /// The rank-zero weight function (every integer unmarked).
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses a comma-separated list such as `"2,4"`; an empty or
    /// whitespace-only string yields the empty weight function.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim().is_empty() {
            return Ok(Self::empty());
        }
        let entries = input
            .split(',')
            .map(|part| {
                part.trim().parse::<i64>().map_err(|e| Error::Parse {
                    input: input.to_string(),
                    reason: format!("{:?} is not an integer ({e})", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    /// Number of marked points.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// True iff `z` is marked, i.e. f(z) = x.
    pub fn contains(&self, z: i64) -> bool {
        self.entries.binary_search(&z).is_ok()
    }

    /// Smallest marked point, if any.
    pub fn min_entry(&self) -> Option<i64> {
        self.entries.first().copied()
    }

    /// Largest marked point (the anchor), if any.
    pub fn max_entry(&self) -> Option<i64> {
        self.entries.last().copied()
    }

    /// Translates every marked point by `shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            entries: self.entries.iter().map(|a| a + shift).collect(),
        }
    }

    /// Drops the largest marked point; identity on the empty function.
    pub fn drop_last(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.pop();
        Self { entries }
    }

    /// Appends a new largest marked point. Errors unless `z` exceeds every
    /// current entry.
    pub fn with_appended(&self, z: i64) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries.push(z);
        Self::new(entries)
    }

    /// True iff the marked points form a run of consecutive integers.
    pub fn is_consecutive_run(&self) -> bool {
        !self.entries.is_empty() && self.entries.windows(2).all(|w| w[1] - w[0] == 1)
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_increasing_entries() {
        assert!(matches!(
            WeightFunction::new(vec![4, 2]),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(matches!(
            WeightFunction::new(vec![2, 2]),
            Err(Error::NotStrictlyIncreasing(_))
        ));
    }

    #[test]
    fn parse_round_trip() {
        let f = WeightFunction::parse("2, 4").unwrap();
        assert_eq!(f.entries(), &[2, 4]);
        assert_eq!(f.to_string(), "(2,4)");
        assert_eq!(WeightFunction::parse("").unwrap(), WeightFunction::empty());
        assert!(WeightFunction::parse("2,a").is_err());
        assert!(WeightFunction::parse("2,,4").is_err());
        assert!(WeightFunction::parse("4,2").is_err());
    }

    #[test]
    fn membership_and_shift() {
        let f = WeightFunction::new(vec![-3, 0, 7]).unwrap();
        assert!(f.contains(-3) && f.contains(0) && f.contains(7));
        assert!(!f.contains(1));
        assert_eq!(f.shifted(3).entries(), &[0, 3, 10]);
        assert_eq!(f.rank(), 3);
        assert_eq!(f.min_entry(), Some(-3));
        assert_eq!(f.max_entry(), Some(7));
    }

    #[test]
    fn consecutive_run_detection() {
        assert!(WeightFunction::new(vec![3, 4, 5])
            .unwrap()
            .is_consecutive_run());
        assert!(!WeightFunction::new(vec![3, 5])
            .unwrap()
            .is_consecutive_run());
        assert!(!WeightFunction::empty().is_consecutive_run());
    }
}
