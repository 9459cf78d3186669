//! Finite fields, projective planes and triple systems.

pub mod field;
pub mod plane;
pub mod triples;

pub use field::FiniteField;
pub use plane::{Pencil, ProjectivePlane};
pub use triples::{
    cyclic_sts, difference_triples, sts9, validate_design, BlockDesign, Column, DesignReport, DifferenceTripleTable,
    Sts9, TableRow,
};
