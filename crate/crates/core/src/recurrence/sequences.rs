//! Classical integer sequences, each from its own defining recurrence.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntKind {
    Bell,
    Pell,
    Euler,
    Factorial,
    Derangement,
}

impl FromStr for IntKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "bell" => IntKind::Bell,
            "pell" => IntKind::Pell,
            "euler" => IntKind::Euler,
            "factorial" => IntKind::Factorial,
            "derangement" => IntKind::Derangement,
            _ => return Err(Error::Usage(format!("unknown sequence '{s}'"))),
        })
    }
}

impl fmt::Display for IntKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntKind::Bell => "bell",
            IntKind::Pell => "pell",
            IntKind::Euler => "euler",
            IntKind::Factorial => "factorial",
            IntKind::Derangement => "derangement",
        })
    }
}

/// Terms `a_0..=a_n` of the sequence.
pub fn int_sequence(kind: IntKind, n: usize) -> Vec<BigInt> {
    match kind {
        IntKind::Bell => bell(n),
        IntKind::Pell => pell(n),
        IntKind::Euler => euler(n),
        IntKind::Factorial => factorials(n),
        IntKind::Derangement => derangements(n),
    }
}

/// Bell numbers through the Aitken/Peirce triangle: each row opens with the
/// last entry of the previous row and B_n is the first entry of row n.
fn bell(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

fn pell(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(), BigInt::one()];
    while out.len() <= n {
        let k = out.len();
        let next = BigInt::from(2) * &out[k - 1] + &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// Zigzag numbers from the Seidel-Entringer boustrophedon:
/// `E(m,0) = 0` for `m > 0`, `E(m,k) = E(m,k-1) + E(m-1,m-k)`, `E_m = E(m,m)`.
fn euler(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            next[k] = &next[k - 1] + &row[m - k];
        }
        out.push(next[m].clone());
        row = next;
    }
    out
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for k in 1..=n {
        let next = out.last().unwrap() * BigInt::from(k);
        out.push(next);
    }
    out
}

/// `d_n = (n - 1)(d_{n-1} + d_{n-2})`, `d_0 = 1`, `d_1 = 0`.
fn derangements(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one(), BigInt::zero()];
    while out.len() <= n {
        let k = out.len();
        let next = BigInt::from(k - 1) * (&out[k - 1] + &out[k - 2]);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_symmetric_group, MAX_CAP};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn printed_prefixes() {
        assert_eq!(int_sequence(IntKind::Euler, 7), ints(&[1, 1, 1, 2, 5, 16, 61, 272]));
        assert_eq!(int_sequence(IntKind::Pell, 6), ints(&[0, 1, 2, 5, 12, 29, 70]));
        assert_eq!(int_sequence(IntKind::Bell, 7), ints(&[1, 1, 2, 5, 15, 52, 203, 877]));
        assert_eq!(int_sequence(IntKind::Bell, 10)[10], BigInt::from(115975));
        assert_eq!(int_sequence(IntKind::Pell, 11)[11], BigInt::from(5741));
        assert_eq!(int_sequence(IntKind::Derangement, 6), ints(&[1, 0, 1, 2, 9, 44, 265]));
        assert_eq!(int_sequence(IntKind::Factorial, 5), ints(&[1, 1, 2, 6, 24, 120]));
        assert_eq!(int_sequence(IntKind::Pell, 0), ints(&[0]));
    }

    #[test]
    fn euler_counts_alternating_permutations() {
        let e = int_sequence(IntKind::Euler, 6);
        for (n, e_n) in e.iter().enumerate() {
            let alternating = enumerate_symmetric_group(n, MAX_CAP)
                .unwrap()
                .filter(|p| {
                    p.word()
                        .windows(2)
                        .enumerate()
                        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
                })
                .count();
            assert_eq!(&BigInt::from(alternating), e_n, "n = {n}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
