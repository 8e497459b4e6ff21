//! Finite-model workbench for BL-algebras and their generalized fuzzy
//! filters.
//!
//! * [`algebra`] parses and validates finite BL-algebras given by tables.
//! * [`filters`] decides the four crisp filter kinds and enumerates them.
//! * [`rational`] and [`fuzzy`] provide exact-rational fuzzy sets, fuzzy
//!   points and level sets.
//! * [`taxonomy`] classifies a fuzzy set into ordinary, `(∈,∈∨q)`,
//!   `(∈̄,∈̄∨q̄)` and thresholded filters of every kind.
//! * [`verify`] checks the characterization theorems exhaustively and audits
//!   annotated example files.
//! * [`cli`] renders deterministic `key = value` reports.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod filters;
pub mod fuzzy;
pub mod interval;
pub mod rational;
pub mod taxonomy;
pub mod verify;

pub use algebra::{Elem, FiniteBLAlgebra};
pub use filters::{CrispSubset, FilterKind};
pub use fuzzy::FuzzySet;
pub use interval::IntervalSet;
pub use rational::UnitRational;
