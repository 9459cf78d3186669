//! Decompositions of complete geometric graphs into edge-disjoint complete
//! subgraphs, their colorings, and exact verification of both.

pub mod chroma;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod exactgeom;
pub mod experiment;
pub mod io;
pub mod planecut;
pub mod render;
mod wide;

pub use error::{GeoError, Result};
