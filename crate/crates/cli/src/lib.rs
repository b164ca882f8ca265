//! Library side of the `ltsig` command: catalog loading, command
//! implementations and output formats.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod output;

pub use catalog::{load_catalog, parse_catalog, Catalog, CatalogEntry, Source};
pub use commands::{OutputFormat, RunConfig};
pub use error::CliError;
