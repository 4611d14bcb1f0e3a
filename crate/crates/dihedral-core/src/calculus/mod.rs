//! Two-color diagrammatic calculus: diagrams, their text syntax, weightings,
//! and evaluation as bimodule maps.

pub mod diagram;
pub mod eval;
pub mod parse;
pub mod qscalar;
pub mod relations;
pub mod weighting;

pub use diagram::{Diagram, DiagramExpr, GenKind, Generator};
pub use eval::{jw_expr, jw_gadget, Evaluator, Morphism, Scaling};
pub use parse::parse;
pub use qscalar::{QPoly, QScalar};
pub use relations::{coinvariant_checks, relation_suite, Relation};
pub use weighting::{
    check_bf2, weighting_pf, weighting_table, weighting_table_ade, weighting_table_float,
    PfWeighting, Weighting,
};
