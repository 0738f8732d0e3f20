//! Exhaustive verification sweeps: for a fixed rank, walk every weight
//! function with the anchor pinned (shifting changes nothing that is being
//! checked) and test the size bounds, the move-count bound, the
//! decomposition laws and the oracle agreement on each one.

use std::collections::BTreeSet;

use capflat_core::{
    catalan, flat_oracle, flat_oracle_with_margin, flat_recursive, is_zigzag, legal_move_indices,
    Cap, CapDiagram, MoveIndex, PointClass, TallyProfile, WeightFunction,
};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// How much of the sweep gets the brute-force oracle treatment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OraclePolicy {
    /// Every weight function in the sweep.
    All,
    /// A fixed-size sample, drawn deterministically from the seed.
    Sample(usize),
}

impl OraclePolicy {
    /// Full oracle up to rank 4; 200 deterministic samples beyond that.
    pub fn default_for_rank(rank: usize) -> Self {
        if rank <= 4 {
            OraclePolicy::All
        } else {
            OraclePolicy::Sample(200)
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub rank: usize,
    /// Window width: the smallest entry may sit up to this far left of the
    /// pinned anchor `2 * rank`.
    pub window: i64,
    pub oracle: OraclePolicy,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            window: 2 * rank as i64 + 6,
            oracle: OraclePolicy::default_for_rank(rank),
            seed: 0x5EED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub f: Vec<i64>,
    pub detail: String,
}

/// Outcome of one sweep. `violations` is empty exactly when every checked
/// statement held on every tested weight function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rank: usize,
    pub window: i64,
    pub anchor: i64,
    pub normalization: String,
    pub tested: usize,
    pub max_flat_size: usize,
    pub catalan_bound: u64,
    pub extremal: Vec<Vec<i64>>,
    pub min_flat_size: usize,
    pub rank_plus_one: usize,
    pub minimal: Vec<Vec<i64>>,
    pub oracle_checked: usize,
    pub stability_checked: usize,
    pub incomplete: bool,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "rank {}  window {}  anchor {}  ({})\n",
            self.rank, self.window, self.anchor, self.normalization
        ));
        out.push_str(&format!(
            "tested {} weight functions; oracle on {}, window stability on {}\n",
            self.tested, self.oracle_checked, self.stability_checked
        ));
        out.push_str(&format!(
            "max |flat f| = {}  (bound C_{} = {})  extremal: {:?}\n",
            self.max_flat_size,
            self.rank + 1,
            self.catalan_bound,
            self.extremal
        ));
        out.push_str(&format!(
            "min |flat f| = {}  (bound r+1 = {})  minimal: {:?}\n",
            self.min_flat_size, self.rank_plus_one, self.minimal
        ));
        if self.incomplete {
            out.push_str("sweep INCOMPLETE\n");
        }
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str(&format!("violations ({}):\n", self.violations.len()));
            for v in &self.violations {
                out.push_str(&format!("  [{}] f={:?}: {}\n", v.check, v.f, v.detail));
            }
        }
        out
    }
}

struct PerWeight {
    f: WeightFunction,
    size: usize,
    violations: Vec<Violation>,
}

fn violation(f: &WeightFunction, check: &str, detail: String) -> Violation {
    Violation {
        check: check.to_string(),
        f: f.entries().to_vec(),
        detail,
    }
}

/// All weight functions of the sweep: rank entries inside
/// `[2r - window, 2r]` with the anchor pinned at `2r`.
pub fn sweep_space(rank: usize, window: i64) -> Vec<WeightFunction> {
    let anchor = 2 * rank as i64;
    if rank == 0 {
        return vec![WeightFunction::empty()];
    }
    (anchor - window..anchor)
        .combinations(rank - 1)
        .map(|mut entries| {
            entries.push(anchor);
            WeightFunction::new(entries).expect("combinations are increasing")
        })
        .collect()
}

fn check_one(f: &WeightFunction, with_oracle: bool, with_stability: bool) -> PerWeight {
    let r = f.rank();
    let mut violations = Vec::new();
    let d = flat_recursive(f);
    let size = d.size();
    let bound = catalan(r + 1).expect("desk-scale Catalan numbers fit in u64");
    let zigzag = is_zigzag(f);

    if size as u64 > bound {
        violations.push(violation(f, "theorem1-bound", format!("{size} > {bound}")));
    }
    if (size as u64 == bound) != zigzag {
        violations.push(violation(
            f,
            "theorem1-equality",
            format!("size {size}, bound {bound}, zigzag {zigzag}"),
        ));
    }

    let lm = legal_move_indices(f).expect("rank >= 1").len();
    if lm > r + 1 {
        violations.push(violation(f, "prop1-bound", format!("{lm} > {}", r + 1)));
    }
    if (lm == r + 1) != zigzag {
        violations.push(violation(
            f,
            "prop1-equality",
            format!("|LM*| {lm}, rank+1 {}, zigzag {zigzag}", r + 1),
        ));
    }

    if size < r + 1 {
        violations.push(violation(
            f,
            "exercise4-bound",
            format!("{size} < {}", r + 1),
        ));
    }
    if (size == r + 1) != f.is_consecutive_run() {
        violations.push(violation(
            f,
            "exercise4-equality",
            format!(
                "size {size}, rank+1 {}, consecutive {}",
                r + 1,
                f.is_consecutive_run()
            ),
        ));
    }

    // Decomposition laws: pieces are disjoint, each is a product of its
    // left and under factors within the Catalan bounds, and every member of
    // the half piece really keeps the anchor under its own adjacent cap.
    let half = d.half().expect("rank >= 1 has a half piece");
    let a = f.max_entry().expect("rank >= 1");
    let anchor_cap = Cap::new(a, a + 1).expect("adjacent cap");
    for h in &half.members {
        if h.max_entry() != Some(a) || !CapDiagram::of(h).contains(&anchor_cap) {
            violations.push(violation(
                f,
                "lemma1-shape",
                format!("{h} lacks the anchor cap"),
            ));
        }
    }
    let piecewise: usize = d.pieces().iter().map(|p| p.size()).sum();
    if piecewise != size {
        violations.push(violation(
            f,
            "lemma2-disjoint",
            format!("piece sizes sum to {piecewise}, union has {size}"),
        ));
    }
    for c in d.counts() {
        if c.size != c.left_size * c.under_size {
            violations.push(violation(
                f,
                "lemma2-product",
                format!(
                    "{}: {} != {} * {}",
                    c.index, c.size, c.left_size, c.under_size
                ),
            ));
        }
        if let MoveIndex::Step(i) = c.index {
            let left_bound = catalan(r - i + 1).expect("desk scale");
            let under_bound = catalan(i - 1).expect("desk scale");
            if c.left_size as u64 > left_bound || c.under_size as u64 > under_bound {
                violations.push(violation(
                    f,
                    "lemma3-bounds",
                    format!(
                        "step-{i}: left {} (bound {left_bound}), under {} (bound {under_bound})",
                        c.left_size, c.under_size
                    ),
                ));
            }
        }
    }

    // Local tally shapes agree with the symbols on [a_1 - 1, a_r).
    let tally = TallyProfile::new(f).expect("rank >= 1");
    let a1 = f.min_entry().expect("rank >= 1");
    for c in (a1 - 1)..a {
        let class = tally.classify(c).expect("inside default window");
        let points_up = matches!(class, PointClass::LocalMax | PointClass::SlopeUp);
        if f.contains(c) != points_up {
            violations.push(violation(
                f,
                "le1-partition",
                format!("at {c}: class {class:?}, marked {}", f.contains(c)),
            ));
        }
    }

    if with_oracle {
        let oracle = flat_oracle(f);
        if &oracle != d.members() {
            violations.push(violation(
                f,
                "oracle-equivalence",
                format!("recursion {} members, oracle {}", size, oracle.len()),
            ));
        }
        if with_stability && flat_oracle_with_margin(f, 5) != oracle {
            violations.push(violation(
                f,
                "window-stability",
                "oracle output changed when the window grew by 5".to_string(),
            ));
        }
    }

    PerWeight {
        f: f.clone(),
        size,
        violations,
    }
}

/// Runs the sweep. Partitions are evaluated in parallel; the report is
/// assembled from results sorted by weight function, so it does not depend
/// on scheduling.
pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let space = sweep_space(config.rank, config.window);
    let oracle_set: BTreeSet<usize> = match config.oracle {
        OraclePolicy::All => (0..space.len()).collect(),
        OraclePolicy::Sample(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rand::seq::index::sample(&mut rng, space.len(), n.min(space.len()))
                .into_iter()
                .collect()
        }
    };
    let stability = config.rank <= 3;

    let mut results: Vec<PerWeight> = space
        .par_iter()
        .enumerate()
        .map(|(k, f)| check_one(f, oracle_set.contains(&k), stability))
        .collect();
    results.sort_by(|x, y| x.f.cmp(&y.f));

    let max_flat_size = results.iter().map(|p| p.size).max().unwrap_or(0);
    let min_flat_size = results.iter().map(|p| p.size).min().unwrap_or(0);
    let collect_at = |target: usize| -> Vec<Vec<i64>> {
        results
            .iter()
            .filter(|p| p.size == target)
            .map(|p| p.f.entries().to_vec())
            .collect()
    };
    let mut violations: Vec<Violation> =
        results.iter().flat_map(|p| p.violations.clone()).collect();
    violations.sort_by(|x, y| (&x.check, &x.f).cmp(&(&y.check, &y.f)));

    SweepReport {
        rank: config.rank,
        window: config.window,
        anchor: 2 * config.rank as i64,
        normalization: "anchor pinned at 2*rank; every checked statement is shift-invariant"
            .to_string(),
        tested: results.len(),
        max_flat_size,
        catalan_bound: catalan(config.rank + 1).expect("desk scale"),
        extremal: collect_at(max_flat_size),
        min_flat_size,
        rank_plus_one: config.rank + 1,
        minimal: collect_at(min_flat_size),
        oracle_checked: oracle_set.len(),
        stability_checked: if stability { oracle_set.len() } else { 0 },
        incomplete: false,
        violations,
    }
}
