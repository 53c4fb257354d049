use std::fmt;
use std::str::FromStr;

use super::cycle::CycleForm;
use super::stats::{standard_cycle_stats, CycleStats, LinearStats};
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `pi(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// Standard cycle decomposition: every cycle starts at its minimum and
    /// cycles appear by increasing minimum.
    pub fn cycle_form(&self) -> CycleForm {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur as usize - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        CycleForm::from_cycles_unchecked(cycles, n)
    }

    /// Statistics of the standard cycle form.
    pub fn cycle_stats(&self) -> CycleStats {
        standard_cycle_stats(&self.word)
    }

    pub fn linear_stats(&self) -> LinearStats {
        let w = &self.word;
        let n = w.len();
        let mut s = LinearStats {
            runs: n.min(1),
            ..LinearStats::default()
        };
        for i in 1..n.saturating_sub(1) {
            if w[i - 1] < w[i] && w[i] > w[i + 1] {
                s.pk += 1;
            } else if w[i - 1] > w[i] && w[i] < w[i + 1] {
                s.val += 1;
            }
        }
        s.runs += s.pk + s.val;
        // Left peaks: positions 1..n-1 with a virtual 0 in front.
        for i in 0..n.saturating_sub(1) {
            let left = if i == 0 { 0 } else { w[i - 1] };
            if left < w[i] && w[i] > w[i + 1] {
                s.lpk += 1;
            }
        }
        s
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits when every entry is a single digit, otherwise
    /// comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let separated = s.contains(',') || s.contains(char::is_whitespace);
        let mut word = Vec::new();
        if separated {
            let mut offset = 0;
            for part in s.split(|c: char| c == ',' || c.is_whitespace()) {
                if !part.is_empty() {
                    let v = part.parse::<u32>().map_err(|_| Error::Parse {
                        pos: offset,
                        msg: format!("expected a positive integer, found '{part}'"),
                    })?;
                    word.push(v);
                }
                offset += part.len() + 1;
            }
        } else {
            for (pos, c) in s.char_indices() {
                let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                })?;
                word.push(d);
            }
        }
        Permutation::new(word)
    }
}

impl From<&CycleForm> for Permutation {
    fn from(c: &CycleForm) -> Self {
        c.to_permutation()
    }
}
