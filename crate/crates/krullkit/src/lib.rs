//! File formats and helpers for the `krullkit` command line.

pub mod formats;
