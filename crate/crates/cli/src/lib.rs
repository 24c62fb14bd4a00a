//! Front end for the `cusp-atlas` binary: argument parsing, command
//! dispatch and report rendering. Kept as a library so the integration tests
//! can deserialize what the binary prints.

pub mod args;
pub mod commands;
pub mod document;
pub mod render;

pub use args::{Cli, Command, OutputFormat};
pub use commands::{run, Exit, Outcome};
pub use document::{
    Body, Document, EnumerationDoc, FamiliesReport, IdentifyReport, InvariantsReport,
};
