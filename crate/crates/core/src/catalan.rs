use std::collections::BTreeSet;
use std::sync::Mutex;

use crate::{Error, Result, WeightFunction};

static TABLE: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// Exact n-th Catalan number, memoized, computed from the fundamental
/// recurrence C_{r+1} = sum_{i=1}^{r+1} C_{r-i+1} C_{i-1} with C_0 = 1.
/// Errors instead of wrapping once the value leaves 64-bit range.
pub fn catalan(n: usize) -> Result<u64> {
    let mut table = TABLE.lock().expect("catalan table lock");
    if table.is_empty() {
        table.push(1);
    }
    while table.len() <= n {
        let m = table.len(); // computing C_m from C_0..C_{m-1}
        let mut sum: u64 = 0;
        for i in 1..=m {
            let term = table[m - i]
                .checked_mul(table[i - 1])
                .ok_or(Error::CatalanOverflow(m))?;
            sum = sum.checked_add(term).ok_or(Error::CatalanOverflow(m))?;
        }
        table.push(sum);
    }
    Ok(table[n])
}

/// A noncrossing perfect matching of the points `0..2n-1` by arcs above the
/// line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcSystem {
    n: usize,
    arcs: Vec<(i64, i64)>,
}

impl ArcSystem {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Arcs as (left, right) pairs, sorted by left endpoint.
    pub fn arcs(&self) -> &[(i64, i64)] {
        &self.arcs
    }
}

/// All noncrossing perfect matchings of consecutive integers `lo..=hi`.
/// The first point must pair with a point at odd distance so both sides of
/// the arc stay even; recursing on the enclosed and remaining segments
/// produces each matching exactly once.
fn matchings_of_block(lo: i64, hi: i64) -> Vec<Vec<(i64, i64)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut partner = lo + 1;
    while partner <= hi {
        for inside in matchings_of_block(lo + 1, partner - 1) {
            for rest in matchings_of_block(partner + 1, hi) {
                let mut arcs = vec![(lo, partner)];
                arcs.extend(inside.iter().copied());
                arcs.extend(rest);
                arcs.sort_unstable();
                out.push(arcs);
            }
        }
        partner += 2;
    }
    out
}

/// Enumerates the set A_n of noncrossing arc systems on `{0, ..., 2n-1}`.
pub fn enumerate_arc_systems(n: usize) -> BTreeSet<ArcSystem> {
    matchings_of_block(0, 2 * n as i64 - 1)
        .into_iter()
        .map(|arcs| ArcSystem { n, arcs })
        .collect()
}

/// Counts noncrossing perfect matchings confined to a block of `2m`
/// consecutive integers (no arc may leave the block). The count equals C_m.
pub fn exercise2_confined_count(m: usize) -> u64 {
    matchings_of_block(1, 2 * m as i64).len() as u64
}

/// Compares |A_k| with the number of cap diagrams matching the evenly spaced
/// weight function (2, 4, ..., 2k-2) of rank k-1; both counts should be C_k.
pub fn exercise1_count_check(k: usize) -> (u64, u64, bool) {
    assert!(k >= 1, "exercise 1 is stated for k >= 1");
    let arc_count = enumerate_arc_systems(k).len() as u64;
    let f = WeightFunction::new((1..k as i64).map(|i| 2 * i).collect())
        .expect("even entries are strictly increasing");
    let matching_count = crate::flat_oracle(&f).len() as u64;
    (arc_count, matching_count, arc_count == matching_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let want: [u64; 16] = [
            1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440,
            9694845,
        ];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(catalan(n).unwrap(), c, "C_{n}");
        }
    }

    #[test]
    fn catalan_overflow_is_detected() {
        assert!(catalan(30).is_ok());
        assert_eq!(catalan(80), Err(Error::CatalanOverflow(37)));
        // The table stays usable after a failed extension.
        assert_eq!(catalan(3).unwrap(), 5);
    }

    #[test]
    fn fundamental_recurrence_holds() {
        for n in 0..=15usize {
            let direct = catalan(n + 1).unwrap();
            let sum: u64 = (1..=n + 1)
                .map(|i| catalan(n + 1 - i).unwrap() * catalan(i - 1).unwrap())
                .sum();
            assert_eq!(direct, sum, "recurrence at n = {n}");
        }
    }

    #[test]
    fn six_point_systems_match_the_five_pictures() {
        let systems = enumerate_arc_systems(3);
        let got: BTreeSet<Vec<(i64, i64)>> = systems.iter().map(|s| s.arcs().to_vec()).collect();
        let want: BTreeSet<Vec<(i64, i64)>> = [
            vec![(0, 1), (2, 3), (4, 5)],
            vec![(0, 1), (2, 5), (3, 4)],
            vec![(0, 3), (1, 2), (4, 5)],
            vec![(0, 5), (1, 2), (3, 4)],
            vec![(0, 5), (1, 4), (2, 3)],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn enumeration_counts_follow_catalan() {
        for n in 0..=8usize {
            assert_eq!(
                enumerate_arc_systems(n).len() as u64,
                catalan(n).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(enumerate_arc_systems(0).len(), 1);
    }

    #[test]
    fn arc_systems_are_noncrossing_perfect_matchings() {
        for system in enumerate_arc_systems(4) {
            let mut seen = BTreeSet::new();
            for &(p, q) in system.arcs() {
                assert!(p < q);
                assert!(seen.insert(p) && seen.insert(q));
            }
            assert_eq!(seen, (0..8).collect());
            for &(p, q) in system.arcs() {
                for &(p2, q2) in system.arcs() {
                    let crosses = p < p2 && p2 < q && q < q2;
                    assert!(!crosses, "{:?} crosses {:?}", (p, q), (p2, q2));
                }
            }
        }
    }

    #[test]
    fn confined_counts() {
        assert_eq!(exercise2_confined_count(0), 1);
        assert_eq!(exercise2_confined_count(2), 2);
        assert_eq!(exercise2_confined_count(3), 5);
        for m in 0..=8usize {
            assert_eq!(exercise2_confined_count(m), catalan(m).unwrap());
        }
    }

    #[test]
    fn exercise1_counts_agree() {
        assert_eq!(exercise1_count_check(1), (1, 1, true));
        assert_eq!(exercise1_count_check(2), (2, 2, true));
        assert_eq!(exercise1_count_check(3), (5, 5, true));
        for k in 1..=5 {
            let (a, b, equal) = exercise1_count_check(k);
            assert!(equal);
            assert_eq!(a, catalan(k).unwrap());
            assert_eq!(b, catalan(k).unwrap());
        }
    }
}
