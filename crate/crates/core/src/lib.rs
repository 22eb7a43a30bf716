//! Exact structure-constant toolkit for finite-dimensional Leibniz and Lie
//! algebras: identities, series, derivations, cohomology and gradings, plus a
//! catalog of quasi-filiform algebras of maximum length and their solvable
//! extensions.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod derivations;
pub mod gradings;
pub mod linalg;

pub use algebra::{Algebra, AlgebraError, SeriesKind, SeriesReport};
pub use catalog::{CatalogId, Family};
pub use linalg::{q, qi, Matrix, Rational, Subspace};
