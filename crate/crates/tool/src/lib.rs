//! File formats, spec parsing, JSON output and parallel verification for
//! the `quandle` command-line tool.

pub mod format;
pub mod json;
pub mod parallel;
pub mod spec;

/// The corpus `verify` uses when none is given.
pub const DEFAULT_CORPUS: &str = "dihedral 3; dihedral 5; dihedral 7; dihedral 9; conj symmetric 3 all";
