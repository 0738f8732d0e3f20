use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::{Cap, CapDiagram, Error, Result, TallyProfile, WeightFunction};

/// Index of a piece in the flat-set decomposition: the formal identity index
/// `Half`, or `Step(i)` for the move whose target sits `2i - 1` left of the
/// anchor. `Half` is a sentinel, not an integer, and sorts before every step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveIndex {
    Half,
    Step(usize),
}

impl fmt::Display for MoveIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveIndex::Half => write!(f, "half"),
            MoveIndex::Step(i) => write!(f, "step-{i}"),
        }
    }
}

/// Swaps the mark at `a` for the unmarked point `b <= a`; `b = a` is the
/// identity move. The rank never changes.
pub fn apply_move(f: &WeightFunction, a: i64, b: i64) -> Result<WeightFunction> {
    if !f.contains(a) {
        return Err(Error::MoveSourceNotEntry(a));
    }
    if b == a {
        return Ok(f.clone());
    }
    if b > a {
        return Err(Error::MoveTargetRightOfSource { from: a, to: b });
    }
    if f.contains(b) {
        return Err(Error::MoveTargetOccupied(b));
    }
    let entries = f
        .entries()
        .iter()
        .copied()
        .filter(|&z| z != a)
        .chain(std::iter::once(b))
        .sorted()
        .collect();
    WeightFunction::new(entries)
}

/// A move validated against the tally condition: the tally at the source
/// stays at least one above the tally everywhere in `[target, source)` and
/// exceeds the target value by exactly one. The identity move is always
/// legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegalMove {
    source: i64,
    target: i64,
}

impl LegalMove {
    pub fn new(f: &WeightFunction, source: i64, target: i64) -> Result<Self> {
        if !f.contains(source) {
            return Err(Error::MoveSourceNotEntry(source));
        }
        if target == source {
            return Ok(Self { source, target });
        }
        if target > source {
            return Err(Error::MoveTargetRightOfSource {
                from: source,
                to: target,
            });
        }
        if f.contains(target) {
            return Err(Error::MoveTargetOccupied(target));
        }
        let tally = TallyProfile::over_window(
            f,
            (target.min(f.min_entry().expect("nonempty") - 1))
                ..=(source.max(f.max_entry().expect("nonempty"))),
        )?;
        let at_source = tally.value(source).expect("source in window");
        let at_target = tally.value(target).expect("target in window");
        let interior_ok =
            (target..source).all(|x| at_source - tally.value(x).expect("window") >= 1);
        if at_source - at_target == 1 && interior_ok {
            Ok(Self { source, target })
        } else {
            Err(Error::IllegalMove {
                from: source,
                to: target,
            })
        }
    }

    pub fn source(&self) -> i64 {
        self.source
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }
}

/// The index set LM* f: `Half` plus `Step(i)` for every tally zero
/// `z = a + 1 - 2i` at or left of `a - 1` that is an unmarked point of `f`
/// (a marked zero admits no move, and no matching diagram can hang a cap
/// there). Requires rank >= 1.
pub fn legal_move_indices(f: &WeightFunction) -> Result<BTreeSet<MoveIndex>> {
    let a = f.max_entry().ok_or(Error::EmptyWeightFunction)?;
    let tally = TallyProfile::new(f)?;
    let mut indices: BTreeSet<MoveIndex> = [MoveIndex::Half].into();
    for z in tally.zeros_left_of_anchor()? {
        if z < a && !f.contains(z) {
            indices.insert(MoveIndex::Step(((a + 1 - z) / 2) as usize));
        }
    }
    Ok(indices)
}

/// Returns |LM* f| and whether it attains the bound `rank + 1`.
pub fn lm_star_count_bound_check(f: &WeightFunction) -> Result<(usize, bool)> {
    let count = legal_move_indices(f)?.len();
    Ok((count, count == f.rank() + 1))
}

/// One piece of the decomposition of a flat set, together with the sizes of
/// the two independent regions its members factor through: configurations
/// strictly left of the distinguished cap and strictly under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatPiece {
    pub index: MoveIndex,
    /// Start of the distinguished cap ending at the anchor (for `Half`, the
    /// anchor itself: the cap joins the anchor to the point right of it).
    pub target: i64,
    pub members: BTreeSet<WeightFunction>,
    pub left_size: usize,
    pub under_size: usize,
}

impl FlatPiece {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Per-piece cardinalities reported by [`FlatDecomposition::counts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PieceCount {
    pub index: MoveIndex,
    pub size: usize,
    pub left_size: usize,
    pub under_size: usize,
}

/// The flat set of `f` (all g of equal rank whose cap diagram matches the
/// line of `f`), partitioned into the piece keeping the anchor and one piece
/// per legal move off the anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatDecomposition {
    f: WeightFunction,
    pieces: Vec<FlatPiece>,
    members: BTreeSet<WeightFunction>,
}

impl FlatDecomposition {
    pub fn base(&self) -> &WeightFunction {
        &self.f
    }

    /// Pieces in index order: `Half` first, then steps ascending. Empty at
    /// rank zero.
    pub fn pieces(&self) -> &[FlatPiece] {
        &self.pieces
    }

    pub fn half(&self) -> Option<&FlatPiece> {
        self.pieces.first().filter(|p| p.index == MoveIndex::Half)
    }

    /// The full flat set, lexicographically ordered.
    pub fn members(&self) -> &BTreeSet<WeightFunction> {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Cardinality report: piece size plus left/under factor sizes.
    pub fn counts(&self) -> Vec<PieceCount> {
        self.pieces
            .iter()
            .map(|p| PieceCount {
                index: p.index,
                size: p.size(),
                left_size: p.left_size,
                under_size: p.under_size,
            })
            .collect()
    }
}

/// Members split by region relative to the open interval `(b, e)`: the
/// number of distinct entry sets strictly left of `b` and strictly inside
/// `(b, e)`.
fn region_factor_sizes(members: &BTreeSet<WeightFunction>, b: i64, e: i64) -> (usize, usize) {
    let left: BTreeSet<Vec<i64>> = members
        .iter()
        .map(|g| g.entries().iter().copied().filter(|&z| z < b).collect())
        .collect();
    let under: BTreeSet<Vec<i64>> = members
        .iter()
        .map(|g| {
            g.entries()
                .iter()
                .copied()
                .filter(|&z| b < z && z < e)
                .collect()
        })
        .collect();
    (left.len(), under.len())
}

/// Enumerates the flat set of `f` by recursion on the rank: the flat set of
/// `f` minus its anchor lifts to the piece keeping the anchor (append the
/// anchor to each member), and each legal move index contributes the piece
/// obtained by moving the anchor mark onto the move target, kept only where
/// the move is defined and the resulting cap diagram still matches `f`.
pub fn flat_recursive(f: &WeightFunction) -> FlatDecomposition {
    let Some(a) = f.max_entry() else {
        return FlatDecomposition {
            f: f.clone(),
            pieces: Vec::new(),
            members: [WeightFunction::empty()].into(),
        };
    };

    let sub = flat_recursive(&f.drop_last());
    let half_members: BTreeSet<WeightFunction> = sub
        .members()
        .iter()
        .map(|g| {
            g.with_appended(a)
                .expect("sub-flat entries stay left of the anchor")
        })
        .collect();

    let (left_size, under_size) = region_factor_sizes(&half_members, a, a + 1);
    let mut pieces = vec![FlatPiece {
        index: MoveIndex::Half,
        target: a,
        members: half_members,
        left_size,
        under_size,
    }];

    let indices = legal_move_indices(f).expect("rank >= 1 here");
    for index in indices {
        let MoveIndex::Step(i) = index else { continue };
        let b = a + 1 - 2 * i as i64;
        let big_cap = Cap::new(b, a).expect("b < a with odd span");
        let members: BTreeSet<WeightFunction> = pieces[0]
            .members
            .iter()
            .filter(|h| !h.contains(b))
            .map(|h| apply_move(h, a, b).expect("move is defined after the filter"))
            .filter(|g| {
                // The piece owns exactly the members whose anchor-covering
                // cap starts at this move target; without the containment
                // check a member can be produced by two different moves.
                let d = CapDiagram::of(g);
                d.matches(f) && d.contains(&big_cap)
            })
            .collect();
        let (left_size, under_size) = region_factor_sizes(&members, b, a);
        pieces.push(FlatPiece {
            index,
            target: b,
            members,
            left_size,
            under_size,
        });
    }

    let members = pieces
        .iter()
        .flat_map(|p| p.members.iter().cloned())
        .collect();
    FlatDecomposition {
        f: f.clone(),
        pieces,
        members,
    }
}

/// Brute-force oracle for the flat set, straight from the definition: try
/// every strictly increasing tuple of the right rank inside a window wide
/// enough to hold any matching diagram, and keep those whose cap diagram
/// matches `f`. Any cap spans at most `2r` integers and touches a mark of
/// `f`, so no start can lie left of `a_1 - 2r + 1` or right of `a_r`.
pub fn flat_oracle(f: &WeightFunction) -> BTreeSet<WeightFunction> {
    flat_oracle_with_margin(f, 0)
}

/// Same oracle over a window enlarged by `margin` on each side; the output
/// must not depend on `margin`.
pub fn flat_oracle_with_margin(f: &WeightFunction, margin: i64) -> BTreeSet<WeightFunction> {
    let r = f.rank();
    let (Some(a1), Some(ar)) = (f.min_entry(), f.max_entry()) else {
        return [WeightFunction::empty()].into();
    };
    let lo = a1 - 2 * r as i64 - margin;
    let hi = ar + margin;
    (lo..=hi)
        .combinations(r)
        .map(|entries| WeightFunction::new(entries).expect("combinations are increasing"))
        .filter(|g| CapDiagram::of(g).matches(f))
        .collect()
}
