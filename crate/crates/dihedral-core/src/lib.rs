//! Dihedral 2-representations from bipartite graphs.
//!
//! The crate builds zigzag algebras of two-colored graphs, attaches graded
//! bimodules to words in `s, t`, and evaluates two-color Soergel diagrams as
//! bimodule maps over cyclotomic fields. On top of that it checks the defining
//! relations, the Hecke algebra action on Grothendieck groups, and the ADE
//! classification of the resulting 2-representations.

pub mod bigraph;
pub mod bimod;
pub mod calculus;
pub mod classify;
pub mod error;
pub mod hecke;
pub mod report;
pub mod scalars;
pub mod zigzag;

pub use bigraph::{AdeType, BipartiteGraph, Color, Family};
pub use bimod::{BimoduleMorphism, Bimodules, WordBimodule};
pub use calculus::{Diagram, DiagramExpr, Weighting};
pub use classify::{equivalence_classes, graphs_for_coxeter, ClassificationReport};
pub use error::{Error, Result};
pub use hecke::{CoxeterOrder, DihedralWord};
pub use report::Check;
pub use scalars::{CyclotomicField, CyclotomicNumber, LaurentPoly, Rational};
pub use zigzag::{Path, ZigzagAlgebra};
