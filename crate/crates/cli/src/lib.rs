//! Library side of the `builtmat` command-line tool.

pub mod commands;
pub mod spec;
