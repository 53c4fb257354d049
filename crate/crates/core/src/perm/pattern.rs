use std::fmt;
use std::str::FromStr;

use super::cycle::{CycleForm, Flattened};
use crate::error::{Error, Result};

/// Longest pattern accepted.
pub const MAX_PATTERN_LEN: usize = 4;

/// A vincular pattern in dash notation: `"132"` needs all three letters
/// adjacent, `"13-2"` only the first two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    letters: Vec<u32>,
    /// `adjacent[j]`: letters `j` and `j + 1` must sit in consecutive positions.
    adjacent: Vec<bool>,
}

impl Pattern {
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Maximal runs of positions that must be adjacent, as 0-based ranges.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (j, &adj) in self.adjacent.iter().enumerate() {
            if !adj {
                out.push(start..j + 1);
                start = j + 1;
            }
        }
        if !self.letters.is_empty() {
            out.push(start..self.letters.len());
        }
        out
    }

    /// Occurrences in a plain word, no boundaries.
    pub fn count_in_word(&self, word: &[u32]) -> u64 {
        self.count(&Flattened {
            word: word.to_vec(),
            boundaries: Vec::new(),
        })
    }

    /// Cyclic occurrences in a standard cycle form: occurrences in the
    /// flattened word whose required adjacencies stay inside one cycle.
    pub fn cyclic_count(&self, c: &CycleForm) -> Result<u64> {
        Ok(self.count(&c.flatten()?))
    }

    fn count(&self, f: &Flattened) -> u64 {
        let mut chosen = Vec::with_capacity(self.letters.len());
        self.extend(f, &mut chosen)
    }

    fn extend(&self, f: &Flattened, chosen: &mut Vec<usize>) -> u64 {
        let k = chosen.len();
        if k == self.letters.len() {
            return 1;
        }
        let n = f.word.len();
        let candidates = match chosen.last() {
            None => 0..n,
            Some(&prev) if self.adjacent[k - 1] => {
                if prev + 1 >= n || f.straddles(prev) {
                    return 0;
                }
                prev + 1..prev + 2
            }
            Some(&prev) => prev + 1..n,
        };
        let mut total = 0;
        for i in candidates {
            let v = f.word[i];
            let consistent = chosen
                .iter()
                .zip(&self.letters)
                .all(|(&pos, &letter)| (f.word[pos] < v) == (letter < self.letters[k]));
            if consistent {
                chosen.push(i);
                total += self.extend(f, chosen);
                chosen.pop();
            }
        }
        total
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut adjacent = Vec::new();
        let mut pending_dash = false;
        for ch in s.chars() {
            match ch {
                '-' => {
                    if letters.is_empty() || pending_dash {
                        return Err(Error::InvalidPattern(format!("misplaced dash in '{s}'")));
                    }
                    pending_dash = true;
                }
                c if c.is_ascii_digit() => {
                    if !letters.is_empty() {
                        adjacent.push(!pending_dash);
                    }
                    pending_dash = false;
                    letters.push(c.to_digit(10).unwrap());
                }
                c => return Err(Error::InvalidPattern(format!("unexpected character '{c}' in '{s}'"))),
            }
        }
        if pending_dash {
            return Err(Error::InvalidPattern(format!("trailing dash in '{s}'")));
        }
        let m = letters.len();
        if m == 0 || m > MAX_PATTERN_LEN {
            return Err(Error::InvalidPattern(format!(
                "pattern length must be 1..={MAX_PATTERN_LEN}, got {m}"
            )));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted != (1..=m as u32).collect::<Vec<_>>() {
            return Err(Error::InvalidPattern(format!(
                "letters of '{s}' are not a permutation of 1..{m}"
            )));
        }
        Ok(Pattern { letters, adjacent })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, l) in self.letters.iter().enumerate() {
            if j > 0 && !self.adjacent[j - 1] {
                f.write_str("-")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn cf(s: &str) -> CycleForm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_patterns() {
        assert_eq!(pat("13-2").blocks(), vec![0..2, 2..3]);
        assert_eq!(pat("1-2-3-4").blocks().len(), 4);
        assert_eq!(pat("132").blocks(), vec![0..3]);
        assert_eq!(pat("13-2").to_string(), "13-2");
        for bad in ["", "-12", "12-", "1--2", "12345", "113", "24", "1a"] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad}");
        }
    }

    #[test]
    fn linear_occurrences() {
        let w: Permutation = "64713258".parse().unwrap();
        assert_eq!(pat("1-2-3-4").count_in_word(w.word()), 2);
        let peaks = pat("132").count_in_word(w.word()) + pat("231").count_in_word(w.word());
        assert_eq!(peaks as usize, w.linear_stats().pk);
    }

    #[test]
    fn cyclic_occurrences() {
        let c = cf("(1,6,2,4)(3,7,5)(8)");
        let peaks = pat("132").cyclic_count(&c).unwrap() + pat("231").cyclic_count(&c).unwrap();
        assert_eq!(peaks, 2);

        let small = cf("(1)(2,4,5)(3)");
        assert_eq!(pat("132").cyclic_count(&small).unwrap(), 0);
        // The literal boundary rule leaves a single occurrence (2,4 | 3).
        assert_eq!(pat("13-2").cyclic_count(&small).unwrap(), 1);
        // Reading the one-line word 14352 instead would give two.
        assert_eq!(pat("13-2").count_in_word(&[1, 4, 3, 5, 2]), 2);

        let id = cf("(1)(2)(3)(4)(5)");
        for p in ["21", "1-32", "3-1-2", "2-1", "4321"] {
            assert_eq!(pat(p).cyclic_count(&id).unwrap(), 0, "{p}");
        }
        assert!(pat("12").cyclic_count(&cf("(2,1)")).is_err());
    }
}
