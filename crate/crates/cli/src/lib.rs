//! File formats, report rendering and the command-line driver for
//! [`ovmetrics_core`].
//!
//! * [`edgelist`]: `u v [w]` edge lists in, canonical edge lists out
//! * [`coverfmt`]: crisp (`a b c`) and fuzzy (`a:0.5 b:1`) cover files
//! * [`manifest`]: `param<TAB>cover_path` sweep manifests
//! * [`table`]: metric tables as TSV, read back for consensus-only runs
//! * [`render`]: TSV and JSON reports
//! * [`app`]: the `ovmetrics` command line

pub mod app;
pub mod coverfmt;
pub mod edgelist;
mod error;
pub mod manifest;
pub mod numfmt;
pub mod render;
pub mod table;

pub use error::{CliError, ParseError};
