//! File formats and command-line driver for the `polycomplete` library.

pub mod app;
pub mod format;

pub use app::{run, Cli, Streams};
