//! Cyclic peaks and valleys of permutations.
//!
//! A permutation is read in cycle form; an entry is a cyclic peak (valley)
//! when it exceeds (falls below) both of its neighbours inside its cycle.
//! The crate counts these statistics jointly with cycles and fixed points.
//!
//! - [`perm`]: words, written cycle forms, statistics, patterns, enumeration.
//! - [`poly`]: exact polynomials in `q`, `x`, `y` over big integers.
//! - [`recurrence`]: the generating polynomial families and their triangles.
//! - [`oracle`]: brute-force distributions over the symmetric group.
//! - [`egf`]: truncated exponential generating functions and the identities
//!   they satisfy.
//! - [`identities`]: verification suites comparing all of the above.
//! - [`cli`]: the `cyclic-stats` command line.

pub mod cli;
pub mod egf;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod recurrence;
pub mod report;

pub use error::{Error, Result};
