use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Families;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleFamily {
    M,
    Mbar,
    D,
    Dbar,
    Runs,
    CombinedR,
    CombinedI,
    StirlingS,
    StirlingT,
}

impl TriangleFamily {
    pub const ALL: [TriangleFamily; 9] = [
        TriangleFamily::M,
        TriangleFamily::Mbar,
        TriangleFamily::D,
        TriangleFamily::Dbar,
        TriangleFamily::Runs,
        TriangleFamily::CombinedR,
        TriangleFamily::CombinedI,
        TriangleFamily::StirlingS,
        TriangleFamily::StirlingT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleFamily::M => "M",
            TriangleFamily::Mbar => "Mbar",
            TriangleFamily::D => "D",
            TriangleFamily::Dbar => "Dbar",
            TriangleFamily::Runs => "runs",
            TriangleFamily::CombinedR => "combinedR",
            TriangleFamily::CombinedI => "combinedI",
            TriangleFamily::StirlingS => "stirlingS",
            TriangleFamily::StirlingT => "stirlingT",
        }
    }

    /// Column index of the first stored entry of each row.
    ///
    /// The runs triangle starts at `k = 1`; its first row is the lone
    /// `R(1,0) = 1` and is stored as `[1]` regardless.
    pub fn offset(self) -> usize {
        match self {
            TriangleFamily::Runs | TriangleFamily::StirlingS | TriangleFamily::StirlingT => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for TriangleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TriangleFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown triangle family '{s}'")))
    }
}

/// Coefficient rows `1..=N` of a specialized polynomial family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub family: TriangleFamily,
    pub offset: usize,
    /// `rows[n - 1]` is row `n`.
    pub rows: Vec<Vec<BigInt>>,
}

/// Dense row of a univariate polynomial starting at column `offset`. A zero
/// polynomial gives `[0]`; a polynomial living entirely below the offset
/// keeps its full coefficient list.
fn row_of(poly: &MPoly, var: Var, offset: usize) -> Vec<BigInt> {
    let coeffs = poly.univariate_coeffs(var);
    if coeffs.is_empty() {
        return vec![BigInt::zero()];
    }
    if coeffs.len() <= offset {
        return coeffs;
    }
    debug_assert!(coeffs[..offset].iter().all(Zero::is_zero));
    coeffs[offset..].to_vec()
}

impl Triangle {
    pub fn from_families(fams: &Families, family: TriangleFamily, rows: usize) -> Triangle {
        assert!(
            rows <= fams.n_max,
            "triangle needs rows up to {rows}, families stop at {}",
            fams.n_max
        );
        let offset = family.offset();
        let rows = (1..=rows)
            .map(|n| match family {
                TriangleFamily::M | TriangleFamily::Mbar | TriangleFamily::D | TriangleFamily::Dbar => {
                    row_of(&fams.specialized(family, n), Var::Q, offset)
                }
                TriangleFamily::Runs => row_of(fams.runs.at(n), Var::Q, offset),
                TriangleFamily::CombinedR => row_of(fams.combined_r.at(n), Var::Q, offset),
                TriangleFamily::CombinedI => row_of(fams.combined_i.at(n), Var::Q, offset),
                TriangleFamily::StirlingS => row_of(fams.s.at(n), Var::X, offset),
                TriangleFamily::StirlingT => row_of(fams.t.at(n), Var::X, offset),
            })
            .collect();
        Triangle { family, offset, rows }
    }

    /// Rows `1..=rows` computed from scratch.
    pub fn compute(family: TriangleFamily, rows: usize) -> Result<Triangle> {
        if rows < 1 {
            return Err(Error::Usage("a triangle needs at least one row".into()));
        }
        Ok(Families::compute(rows).triangle(family, rows))
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.row(n).iter().sum()
    }
}

/// `R(n,k)` for `n = 1..=n_max`, `k = 0..=n`, straight from
/// `R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)` with
/// `R(1,0) = 1`. `table[n - 1][k]` holds `R(n,k)`.
pub fn runs_numbers(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::new();
    if n_max == 0 {
        return table;
    }
    table.push(vec![BigInt::from(1), BigInt::zero()]);
    for n in 2..=n_max {
        let prev = &table[n - 2];
        let at = |k: isize| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let mut row = vec![BigInt::zero(); n + 1];
        for (k, slot) in row.iter_mut().enumerate().skip(1) {
            let k_i = k as isize;
            *slot = BigInt::from(k) * at(k_i)
                + BigInt::from(2) * at(k_i - 1)
                + BigInt::from(n as isize - k_i) * at(k_i - 2);
        }
        table.push(row);
    }
    table
}
