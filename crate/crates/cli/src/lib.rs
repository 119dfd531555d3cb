//! Library surface of the CLI: the on-disk structure format.

pub mod format;
