//! Root-system combinatorics for uniform flag bundles.
//!
//! Given a Dynkin diagram, a tag recording the degrees of the relative
//! canonical divisors on minimal sections, and the contractibility dimension
//! of the family's evaluation morphism, [`analyze`] decides whether the
//! criteria implemented here certify the bundle as trivial, diagonalizable,
//! or reducible to smaller flag bundles.

pub mod analyzer;
pub mod dynkin;
pub mod error;
pub mod nodeset;
pub mod ordering;
pub mod rootsys;
pub mod tagging;

pub use analyzer::{
    analyze, check_splitting_corollary, criterion_reducible, minimal_reducible_set, reduce_step,
    reducibility_defect, AnalysisReport, Analyzer, Event, Hypotheses, Hypothesis, MinimalSet,
    Reduced, Stage, TraceStep, Verdict, CRITERIA_VERSION,
};
pub use dynkin::{build_diagram, CartanMatrix, CartanType, DynkinDiagram, Family};
pub use error::{Error, Result};
pub use nodeset::NodeSet;
pub use ordering::{admissible_order, filtration_plan, is_admissible, Admissibility, Chain};
pub use rootsys::{positive_roots, Root, RootSystem};
pub use tagging::{
    component_of_one, degree_on_minimal_section, m_closed_form, m_value, splitting_from_tag,
    tag_from_splitting, zero_sets, SplittingType, Tag,
};
