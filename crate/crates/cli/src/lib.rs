//! Command-line front end for `uniflag-core`: argument handling, the JSON
//! request and report formats, and ASCII pictures of tagged diagrams.

pub mod app;
pub mod render;
pub mod request;

pub use app::{run, Output, SCHEMA_VERSION};
pub use render::{parse, render, RenderedDiagram};
pub use request::AnalysisRequest;
