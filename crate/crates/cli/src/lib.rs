//! Instance files, reports and subcommands of the `fano212` tool.

pub mod commands;
pub mod instance;
pub mod report;

pub use commands::{run, Command, Options, Output};
pub use instance::{parse_instance, serialize_instance, Diagnostic, DiagnosticCode, InstanceFile};
pub use report::{Format, Report};
