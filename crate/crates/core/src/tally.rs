use std::ops::RangeInclusive;

use crate::{Error, Result, WeightFunction};

/// Local shape of a tally profile at one integer. Steps are always ±1, so
/// every interior point falls in exactly one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    LocalMax,
    LocalMin,
    SlopeUp,
    SlopeDown,
}

/// Integer tally of a weight function over a window: the value steps up by
/// one across each marked point and down by one across each unmarked point,
/// normalized to 1 at the largest entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TallyProfile {
    f: WeightFunction,
    lo: i64,
    values: Vec<i64>,
}

impl TallyProfile {
    /// Tally over the default window, which always certifies the zero set:
    /// `[a_1 - 2r - 1, a_r + 2]`.
    pub fn new(f: &WeightFunction) -> Result<Self> {
        let r = f.rank() as i64;
        let (a1, ar) = match (f.min_entry(), f.max_entry()) {
            (Some(a1), Some(ar)) => (a1, ar),
            _ => return Err(Error::EmptyWeightFunction),
        };
        Self::over_window(f, (a1 - 2 * r - 1)..=(ar + 2))
    }

    /// Tally over an explicit window, which must contain `[a_1 - 1, a_r]`.
    pub fn over_window(f: &WeightFunction, window: RangeInclusive<i64>) -> Result<Self> {
        let (a1, ar) = match (f.min_entry(), f.max_entry()) {
            (Some(a1), Some(ar)) => (a1, ar),
            _ => return Err(Error::EmptyWeightFunction),
        };
        let (lo, hi) = (*window.start(), *window.end());
        if lo > a1 - 1 || hi < ar {
            return Err(Error::WindowTooSmall {
                lo,
                hi,
                need_lo: a1 - 1,
                need_hi: ar,
            });
        }
        let len = (hi - lo + 1) as usize;
        let mut values = vec![0i64; len];
        let idx = |z: i64| (z - lo) as usize;
        values[idx(ar)] = 1;
        for z in (ar + 1)..=hi {
            values[idx(z)] = values[idx(z - 1)] + if f.contains(z) { 1 } else { -1 };
        }
        for z in (lo..ar).rev() {
            values[idx(z)] = values[idx(z + 1)] - if f.contains(z + 1) { 1 } else { -1 };
        }
        Ok(Self {
            f: f.clone(),
            lo,
            values,
        })
    }

    pub fn base(&self) -> &WeightFunction {
        &self.f
    }

    pub fn window(&self) -> RangeInclusive<i64> {
        self.lo..=(self.lo + self.values.len() as i64 - 1)
    }

    /// Largest entry of the base weight function; the profile is pinned to
    /// value 1 there.
    pub fn anchor(&self) -> i64 {
        self.f.max_entry().expect("profile requires rank >= 1")
    }

    /// Tally value at `z`, if `z` lies in the window.
    pub fn value(&self, z: i64) -> Option<i64> {
        if self.window().contains(&z) {
            Some(self.values[(z - self.lo) as usize])
        } else {
            None
        }
    }

    /// All zeros at or left of the anchor, ascending. Errors unless the
    /// window provably captures every zero: left of the support the tally
    /// only grows leftward, so it suffices that the window starts left of
    /// the support with a nonnegative value there.
    pub fn zeros_left_of_anchor(&self) -> Result<Vec<i64>> {
        let a1 = self.f.min_entry().expect("profile requires rank >= 1");
        let leftmost = self.value(self.lo).expect("window start");
        if self.lo > a1 - 1 || leftmost < 0 {
            return Err(Error::ZeroWindowIncomplete {
                lo: self.lo,
                value: leftmost,
            });
        }
        Ok((self.lo..=self.anchor())
            .filter(|&z| self.value(z) == Some(0))
            .collect())
    }

    /// Classifies the local shape at `c` from the two adjacent steps; errors
    /// if either neighbor falls outside the window.
    pub fn classify(&self, c: i64) -> Result<PointClass> {
        let (prev, here, next) = match (self.value(c - 1), self.value(c), self.value(c + 1)) {
            (Some(p), Some(h), Some(n)) => (p, h, n),
            _ => return Err(Error::WindowEdge(c)),
        };
        Ok(match (here - prev, next - here) {
            (1, -1) => PointClass::LocalMax,
            (-1, 1) => PointClass::LocalMin,
            (1, 1) => PointClass::SlopeUp,
            (-1, -1) => PointClass::SlopeDown,
            _ => unreachable!("tally steps are always +-1"),
        })
    }
}

/// True iff the marked points form an arithmetic progression of step 2, so
/// the tally alternates 1,0,1,0,... across the support with `rank` maxima of
/// value 1 and `rank` minima of value 0.
pub fn is_zigzag(f: &WeightFunction) -> bool {
    !f.is_empty() && f.entries().windows(2).all(|w| w[1] - w[0] == 2)
}
