//! Permutations, cycle forms and the statistics read from them.

mod cycle;
mod enumerate;
mod pattern;
mod permutation;
mod stats;

pub use cycle::{CycleForm, Flattened};
pub use enumerate::{
    check_cap, enumerate_symmetric_group, for_each_with_first, next_permutation, Lexicographic, DEFAULT_CAP, MAX_CAP,
};
pub use pattern::Pattern;
pub use permutation::Permutation;
pub use stats::{standard_cycle_stats, CycleStats, LinearStats};
