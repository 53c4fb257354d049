use serde::Serialize;

/// Statistics of a written cycle form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CycleStats {
    /// Cyclic peaks: interior entries larger than both written neighbours.
    pub cpk: usize,
    /// Cyclic valleys: interior entries smaller than both written neighbours.
    pub cval: usize,
    pub cyc: usize,
    pub fix: usize,
}

/// Statistics of the one-line word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LinearStats {
    /// Interior peaks.
    pub pk: usize,
    /// Interior valleys.
    pub val: usize,
    /// Left peaks, reading `pi(0) = 0`.
    pub lpk: usize,
    /// Alternating runs. One for a single letter, zero for the empty word.
    pub runs: usize,
}

/// Peaks and valleys among the interior entries of one written cycle.
pub(crate) fn interior_extrema(cycle: &[u32]) -> (usize, usize) {
    let mut peaks = 0;
    let mut valleys = 0;
    for w in cycle.windows(3) {
        if w[0] < w[1] && w[1] > w[2] {
            peaks += 1;
        } else if w[0] > w[1] && w[1] < w[2] {
            valleys += 1;
        }
    }
    (peaks, valleys)
}

/// Cycle statistics of the standard cycle form of the one-line `word`,
/// computed without building the form.
///
/// `word` must be a permutation of `1..=n`.
pub fn standard_cycle_stats(word: &[u32]) -> CycleStats {
    let n = word.len();
    let mut seen = vec![false; n];
    let mut stats = CycleStats::default();
    for start in 1..=n as u32 {
        if seen[start as usize - 1] {
            continue;
        }
        stats.cyc += 1;
        // Walk the cycle keeping the last two written entries.
        let mut prev2 = 0u32;
        let mut prev1 = start;
        let mut len = 1usize;
        seen[start as usize - 1] = true;
        let mut cur = word[start as usize - 1];
        while cur != start {
            seen[cur as usize - 1] = true;
            if len >= 2 {
                if prev2 < prev1 && prev1 > cur {
                    stats.cpk += 1;
                } else if prev2 > prev1 && prev1 < cur {
                    stats.cval += 1;
                }
            }
            prev2 = prev1;
            prev1 = cur;
            len += 1;
            cur = word[cur as usize - 1];
        }
        if len == 1 {
            stats.fix += 1;
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extrema_of_written_cycle() {
        assert_eq!(interior_extrema(&[1, 6, 2, 4]), (1, 1));
        assert_eq!(interior_extrema(&[3, 7, 5]), (1, 0));
        assert_eq!(interior_extrema(&[8]), (0, 0));
        assert_eq!(interior_extrema(&[]), (0, 0));
    }

    #[test]
    fn direct_stats_on_example() {
        let s = standard_cycle_stats(&[6, 4, 7, 1, 3, 2, 5, 8]);
        assert_eq!(
            s,
            CycleStats {
                cpk: 2,
                cval: 1,
                cyc: 3,
                fix: 1
            }
        );
        assert_eq!(standard_cycle_stats(&[]), CycleStats::default());
    }
}
