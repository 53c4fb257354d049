use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Default largest `n` for exhaustive enumeration.
pub const DEFAULT_CAP: usize = 9;
/// Hard ceiling; `12!` is already 479 million permutations.
pub const MAX_CAP: usize = 12;

pub fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap.min(MAX_CAP) {
        return Err(Error::CapExceeded {
            n,
            cap: cap.min(MAX_CAP),
        });
    }
    Ok(())
}

/// Rearranges `w` into its lexicographic successor. Returns `false` (leaving
/// `w` untouched) when `w` is already the last arrangement.
pub fn next_permutation(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order of one-line words.
pub struct Lexicographic {
    current: Option<Vec<u32>>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.current.as_mut()?;
        let out = Permutation::from_word_unchecked(word.clone());
        if !next_permutation(word) {
            self.current = None;
        }
        Some(out)
    }
}

/// Streams `S_n`; `n = 0` yields the single empty permutation.
pub fn enumerate_symmetric_group(n: usize, cap: usize) -> Result<Lexicographic> {
    check_cap(n, cap)?;
    Ok(Lexicographic {
        current: Some((1..=n as u32).collect()),
    })
}

/// Visits, in lexicographic order, every permutation of `1..=n` whose first
/// letter is `first`. The slices of `S_n` for `first = 1..=n` are disjoint
/// and cover it, which is how the oracle splits work across threads.
pub fn for_each_with_first<F: FnMut(&[u32])>(n: usize, first: u32, mut f: F) {
    assert!(first >= 1 && first as usize <= n);
    let mut w: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        f(&w);
        if !next_permutation(&mut w[1..]) {
            break;
        }
    }
}
