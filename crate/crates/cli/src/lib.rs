//! Front end for `leibniz-core`: the algebra interchange document, report
//! rendering, and the subcommands behind the `leibniz` binary.

pub mod commands;
pub mod document;
pub mod report;

pub use document::AlgebraDocument;
pub use report::{Format, Report};
