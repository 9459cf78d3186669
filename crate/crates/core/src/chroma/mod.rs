//! Conflict graphs, colorings, cliques and the certificates built on them.

pub mod census;
pub mod clique;
pub mod color;
pub mod graph;
pub mod search;
pub mod surd;

pub use census::{evaluate_bound, thm33_denominator, triangle_census, triangle_length, BoundVariant, TriangleCensus};
pub use clique::{clique_index, max_clique, CliqueResult};
pub use color::{exact_chromatic_index, greedy_color, ChromaticBounds};
pub use graph::{conflict_graph, parts_conflict_graph, verify_coloring, Coloring, ConflictGraph};
pub use search::{max_intersecting_family, tau_point, verify_intersecting_family, FamilyResult};
pub use surd::QuadSurd;
