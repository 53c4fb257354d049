use std::fmt;
use std::str::FromStr;

use super::permutation::Permutation;
use super::stats::{interior_extrema, CycleStats};
use crate::error::{Error, Result};

/// A cycle decomposition exactly as written. Statistics are read from the
/// written order, so `(1,6,2,4)` and `(6,1,4,2)`-style rewrites are kept
/// distinct even when they describe related permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<u32>>,
    n: usize,
}

/// A standard cycle form concatenated into one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flattened {
    pub word: Vec<u32>,
    /// 1-based positions `p` such that positions `p` and `p + 1` lie in
    /// different cycles.
    pub boundaries: Vec<usize>,
}

impl Flattened {
    /// Does a required adjacency between 0-based positions `i` and `i + 1`
    /// cross from one cycle into the next?
    pub fn straddles(&self, i: usize) -> bool {
        self.boundaries.binary_search(&(i + 1)).is_ok()
    }
}

impl CycleForm {
    /// Builds a written form, checking that the cycles partition `1..=n`.
    pub fn new(cycles: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidCycleForm("empty cycle".into()));
            }
            for &v in cycle {
                let idx = v as usize;
                if idx == 0 || idx > n {
                    return Err(Error::InvalidCycleForm(format!("entry {v} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[idx - 1], true) {
                    return Err(Error::InvalidCycleForm(format!("entry {v} repeated")));
                }
            }
        }
        Ok(CycleForm { cycles, n })
    }

    pub(crate) fn from_cycles_unchecked(cycles: Vec<Vec<u32>>, n: usize) -> Self {
        CycleForm { cycles, n }
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_standard(&self) -> bool {
        let min_first = self.cycles.iter().all(|c| c.iter().all(|&v| v >= c[0]));
        let ordered = self.cycles.windows(2).all(|w| w[0][0] < w[1][0]);
        min_first && ordered
    }

    /// Rotates each cycle to start at its minimum and sorts cycles by
    /// their minima.
    pub fn standardize(&self) -> CycleForm {
        let mut cycles: Vec<Vec<u32>> = self
            .cycles
            .iter()
            .map(|c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                let mut r = c.clone();
                r.rotate_left(pos);
                r
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        CycleForm { cycles, n: self.n }
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0u32; self.n];
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                word[v as usize - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_word_unchecked(word)
    }

    /// Statistics of the form as written.
    pub fn cycle_stats(&self) -> CycleStats {
        let mut s = CycleStats {
            cyc: self.cycles.len(),
            ..CycleStats::default()
        };
        for c in &self.cycles {
            let (p, v) = interior_extrema(c);
            s.cpk += p;
            s.cval += v;
            if c.len() == 1 {
                s.fix += 1;
            }
        }
        s
    }

    /// Replaces every entry by its mirror image inside the sorted support of
    /// its own cycle. Positions are kept and nothing is restandardized, so
    /// cyclic peaks and valleys trade places.
    pub fn switching(&self) -> CycleForm {
        let cycles = self
            .cycles
            .iter()
            .map(|c| {
                let mut support = c.clone();
                support.sort_unstable();
                let last = support.len() - 1;
                c.iter()
                    .map(|v| {
                        let rank = support.binary_search(v).expect("entry in own support");
                        support[last - rank]
                    })
                    .collect()
            })
            .collect();
        CycleForm { cycles, n: self.n }
    }

    /// Concatenation of the cycles of a standard form.
    pub fn flatten(&self) -> Result<Flattened> {
        if !self.is_standard() {
            return Err(Error::NotStandard(self.to_string()));
        }
        let mut word = Vec::with_capacity(self.n);
        let mut boundaries = Vec::new();
        for (j, c) in self.cycles.iter().enumerate() {
            word.extend_from_slice(c);
            if j + 1 < self.cycles.len() {
                boundaries.push(word.len());
            }
        }
        Ok(Flattened { word, boundaries })
    }

    /// Sends a single cycle `(1, a_1, ..., a_n)` on `1..=n+1` to the word
    /// `(a_1 - 1) ... (a_n - 1)`.
    pub fn unwrap_circular(&self) -> Result<Permutation> {
        if self.cycles.len() != 1 {
            return Err(Error::NotSingleCycle(self.cycles.len()));
        }
        let c = &self.standardize().cycles[0];
        Ok(Permutation::from_word_unchecked(c[1..].iter().map(|v| v - 1).collect()))
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    /// Parses `(1,6,2,4)(3,7,5)(8)`; whitespace is ignored anywhere.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let mut cycles = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut number: Option<(usize, u32)> = None;
        let mut expect_entry = false;
        for (pos, ch) in s.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            if let Some(d) = ch.to_digit(10) {
                if current.is_none() {
                    return Err(err(pos, "digit outside a cycle"));
                }
                let (start, acc) = number.unwrap_or((pos, 0));
                let acc = acc
                    .checked_mul(10)
                    .and_then(|a| a.checked_add(d))
                    .ok_or_else(|| err(start, "entry too large"))?;
                number = Some((start, acc));
                expect_entry = false;
                continue;
            }
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(err(pos, "nested '('"));
                    }
                    current = Some(Vec::new());
                    expect_entry = true;
                }
                ',' | ')' => {
                    let cycle = current.as_mut().ok_or_else(|| err(pos, "unexpected delimiter"))?;
                    match number.take() {
                        Some((_, v)) => cycle.push(v),
                        None if expect_entry || ch == ',' => {
                            return Err(err(pos, "expected an entry"));
                        }
                        None => {}
                    }
                    if ch == ')' {
                        cycles.push(current.take().unwrap());
                        expect_entry = false;
                    } else {
                        expect_entry = true;
                    }
                }
                _ => return Err(err(pos, &format!("unexpected character '{ch}'"))),
            }
        }
        if current.is_some() {
            return Err(err(s.len(), "unterminated cycle"));
        }
        CycleForm::new(cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(s: &str) -> CycleForm {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        // Rotation keeps cyclic order: (7,3,5) becomes (3,5,7).
        assert_eq!(cf("(6,1,4,2)(7,3,5)(8)").standardize(), cf("(1,4,2,6)(3,5,7)(8)"));
        let std = cf("(1,6,2,4)(3,7,5)(8)");
        assert_eq!(std.standardize(), std);
        assert_eq!(cf("(2,3)(1)").standardize(), cf("(1)(2,3)"));
        assert!(!cf("(2,3)(1)").is_standard());
        assert!(std.is_standard());
    }

    #[test]
    fn written_stats() {
        let s = cf("(1,6,2,4)(3,7,5)(8)").cycle_stats();
        assert_eq!((s.cpk, s.cval, s.cyc, s.fix), (2, 1, 3, 1));
        let s = cf("(6,1,4,2)(7,3,5)(8)").cycle_stats();
        assert_eq!((s.cpk, s.cval, s.cyc, s.fix), (1, 2, 3, 1));
        let s = cf("(1)(2)(3)(4)").cycle_stats();
        assert_eq!((s.cpk, s.cval, s.cyc, s.fix), (0, 0, 4, 4));
    }

    #[test]
    fn switching_examples() {
        assert_eq!(cf("(1,6,2,4)(3,7,5)(8)").switching(), cf("(6,1,4,2)(7,3,5)(8)"));
        assert_eq!(cf("(1)(2)(3)").switching(), cf("(1)(2)(3)"));
    }

    #[test]
    fn flatten_examples() {
        let f = cf("(1,6,2,4)(3,7,5)(8)").flatten().unwrap();
        assert_eq!(f.word, vec![1, 6, 2, 4, 3, 7, 5, 8]);
        assert_eq!(f.boundaries, vec![4, 7]);
        let f = cf("(1)(2)(3)").flatten().unwrap();
        assert_eq!(f.boundaries, vec![1, 2]);
        let f = cf("(1,2,3)").flatten().unwrap();
        assert!(f.boundaries.is_empty());
        assert!(matches!(cf("(2,1)").flatten(), Err(Error::NotStandard(_))));
    }

    #[test]
    fn unwrap_circular_examples() {
        assert_eq!(cf("(1,2,3)").unwrap_circular().unwrap().to_string(), "12");
        assert_eq!(cf("(1,3,2)").unwrap_circular().unwrap().to_string(), "21");
        let c = cf("(1,4,2,3)");
        let p = c.unwrap_circular().unwrap();
        assert_eq!(p.to_string(), "312");
        assert_eq!(c.cycle_stats().cpk, 1);
        assert_eq!(p.linear_stats().lpk, 1);
        assert_eq!(cf("(1)(2,3)").unwrap_circular(), Err(Error::NotSingleCycle(2)));
    }

    #[test]
    fn parse_and_print() {
        let c = cf(" ( 1, 6,2 ,4)(3,7,5) (8) ");
        assert_eq!(c.to_string(), "(1,6,2,4)(3,7,5)(8)");
        assert_eq!(cf("(10,1)(2,3,4,5,6,7,8,9)").to_string(), "(10,1)(2,3,4,5,6,7,8,9)");
        assert_eq!(cf("").len(), 0);
        for bad in ["(1,2", "(1,,2)", "()", "(1)(1)", "(1)(3)", "1(2)", "(1,(2))", "(1)x"] {
            assert!(bad.parse::<CycleForm>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn parse_error_location() {
        match "(1,2)(3,x)".parse::<CycleForm>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("unexpected {other:?}"),
        }
    }
}
