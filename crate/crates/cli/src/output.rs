//! Typed output schema for the `flat` command, shared by the text and JSON
//! formats. The JSON form round-trips byte-identically through this type.

use capflat_core::{catalan, flat_recursive, CapDiagram, WeightFunction};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    pub size: usize,
    pub left_size: usize,
    pub under_size: usize,
}

/// Everything `flat` prints about one weight function: the flat set in
/// lexicographic order, the per-piece decomposition keyed by "half" and
/// "step-i", and the two bounds the size is squeezed between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatReport {
    pub f: Vec<i64>,
    pub rank: usize,
    /// Canonical cap diagram of `f` as [start, end] pairs.
    pub cap_diagram: Vec<[i64; 2]>,
    pub size: usize,
    pub flat: Vec<Vec<i64>>,
    pub decomposition: IndexMap<String, PieceReport>,
    pub catalan_bound: u64,
    pub extremal: bool,
    pub lower_bound: usize,
    pub minimal: bool,
}

impl FlatReport {
    pub fn for_weight_function(f: &WeightFunction) -> capflat_core::Result<Self> {
        let d = flat_recursive(f);
        let rank = f.rank();
        let bound = catalan(rank + 1)?;
        let decomposition = d
            .counts()
            .into_iter()
            .map(|c| {
                (
                    c.index.to_string(),
                    PieceReport {
                        size: c.size,
                        left_size: c.left_size,
                        under_size: c.under_size,
                    },
                )
            })
            .collect();
        Ok(Self {
            f: f.entries().to_vec(),
            rank,
            cap_diagram: CapDiagram::of(f)
                .caps()
                .map(|c| [c.start(), c.end()])
                .collect(),
            size: d.size(),
            flat: d.members().iter().map(|g| g.entries().to_vec()).collect(),
            decomposition,
            catalan_bound: bound,
            extremal: d.size() as u64 == bound,
            lower_bound: rank + 1,
            minimal: d.size() == rank + 1,
        })
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let show = |entries: &[i64]| {
            let inner: Vec<String> = entries.iter().map(i64::to_string).collect();
            format!("({})", inner.join(","))
        };
        out.push_str(&format!("f = {}   rank {}\n", show(&self.f), self.rank));
        out.push_str(&format!("flat set ({} elements):\n", self.size));
        for g in &self.flat {
            out.push_str(&format!("  {}\n", show(g)));
        }
        if !self.decomposition.is_empty() {
            out.push_str("decomposition:\n");
            for (key, piece) in &self.decomposition {
                out.push_str(&format!(
                    "  {:<8} size {} = {} * {}\n",
                    key, piece.size, piece.left_size, piece.under_size
                ));
            }
        }
        out.push_str(&format!(
            "{} \u{2264} C_{} = {}{}\n",
            self.size,
            self.rank + 1,
            self.catalan_bound,
            if self.extremal { " (extremal)" } else { "" }
        ));
        out.push_str(&format!(
            "{} \u{2265} r+1 = {}{}\n",
            self.size,
            self.lower_bound,
            if self.minimal { " (minimal)" } else { "" }
        ));
        out
    }
}
