//! File format, report rendering and the command-line interface for `cellsym-core`.

pub mod cli;
pub mod format;
pub mod render;
