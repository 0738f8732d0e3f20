//! Exact combinatorics of weight diagrams, cap diagrams and tally functions.
//!
//! A weight function marks finitely many integers on the number line with `x`
//! (all others read `.`). Its canonical cap diagram pairs every marked point
//! with an unmarked one by noncrossing caps, and the central object is the
//! *flat set* of a weight function `f`: all weight functions of the same rank
//! whose cap diagram matches the line of `f`. The crate enumerates flat sets
//! two independent ways (a recursion over legal moves and a brute-force
//! oracle), computes the tally profile that controls which moves are legal,
//! and provides exact Catalan numbers plus noncrossing arc-system enumeration
//! for the counting identities the flat sets satisfy.

mod cap;
mod catalan;
mod error;
mod moves;
mod render;
mod tally;
mod weight;

pub use cap::{Cap, CapDiagram};
pub use catalan::{
    catalan, enumerate_arc_systems, exercise1_count_check, exercise2_confined_count, ArcSystem,
};
pub use error::Error;
pub use moves::{
    apply_move, flat_oracle, flat_oracle_with_margin, flat_recursive, legal_move_indices,
    lm_star_count_bound_check, FlatDecomposition, FlatPiece, LegalMove, MoveIndex, PieceCount,
};
pub use render::{render, render_in_window, RenderStyle};
pub use tally::{is_zigzag, PointClass, TallyProfile};
pub use weight::WeightFunction;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
