//! Brute-force ground truth.
//!
//! Every distribution here is obtained by walking all of `S_n`, reading the
//! standard cycle form of each permutation and counting. Nothing in this
//! module consults the recurrences; it exists to check them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Result;
use crate::perm::{check_cap, for_each_with_first, standard_cycle_stats, Permutation};
use crate::poly::{MPoly, Monomial};
use crate::recurrence::Families;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// `(cpk, cyc, fix)`
    Peak,
    /// `(cval, cyc, fix)`
    Valley,
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StatKind::Peak => "peak",
            StatKind::Valley => "valley",
        })
    }
}

/// Exhaustive counts `(t, s, r) -> #{pi : stat = t, cyc = s, fix = r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDistribution {
    pub n: usize,
    pub kind: StatKind,
    pub counts: BTreeMap<(usize, usize, usize), u64>,
}

impl JointDistribution {
    pub fn get(&self, t: usize, s: usize, r: usize) -> u64 {
        self.counts.get(&(t, s, r)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `sum counts(t,s,r) q^t x^s y^r`.
    pub fn to_poly(&self) -> MPoly {
        MPoly::from_terms(
            self.counts
                .iter()
                .map(|(&(t, s, r), &c)| (Monomial::new(t as u32, s as u32, r as u32), c)),
        )
    }
}

/// Dense accumulator for both kinds at once.
#[derive(Clone)]
struct Accumulator {
    n: usize,
    peak: Vec<u64>,
    valley: Vec<u64>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        let len = (n / 2 + 1) * (n + 1) * (n + 1);
        Accumulator {
            n,
            peak: vec![0; len],
            valley: vec![0; len],
        }
    }

    fn index(&self, t: usize, s: usize, r: usize) -> usize {
        (t * (self.n + 1) + s) * (self.n + 1) + r
    }

    fn record(&mut self, word: &[u32]) {
        let st = standard_cycle_stats(word);
        let i = self.index(st.cpk, st.cyc, st.fix);
        self.peak[i] += 1;
        let i = self.index(st.cval, st.cyc, st.fix);
        self.valley[i] += 1;
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        for (a, b) in self.peak.iter_mut().zip(other.peak) {
            *a += b;
        }
        for (a, b) in self.valley.iter_mut().zip(other.valley) {
            *a += b;
        }
        self
    }

    fn into_distributions(self) -> (JointDistribution, JointDistribution) {
        let n = self.n;
        let unpack = |dense: &[u64], kind| {
            let mut counts = BTreeMap::new();
            for (i, &c) in dense.iter().enumerate() {
                if c > 0 {
                    let r = i % (n + 1);
                    let s = (i / (n + 1)) % (n + 1);
                    let t = i / ((n + 1) * (n + 1));
                    counts.insert((t, s, r), c);
                }
            }
            JointDistribution { n, kind, counts }
        };
        (
            unpack(&self.peak, StatKind::Peak),
            unpack(&self.valley, StatKind::Valley),
        )
    }
}

/// Peak and valley distributions of `S_n` in one pass. With `jobs > 1` the
/// permutations are split by first letter across a thread pool; the merged
/// counts do not depend on the split.
pub fn joint_distributions(n: usize, cap: usize, jobs: usize) -> Result<(JointDistribution, JointDistribution)> {
    check_cap(n, cap)?;
    let mut acc = Accumulator::new(n);
    if n == 0 {
        acc.record(&[]);
        return Ok(acc.into_distributions());
    }
    let slice = |first: u32| {
        let mut local = Accumulator::new(n);
        for_each_with_first(n, first, |w| local.record(w));
        local
    };
    if jobs <= 1 {
        for first in 1..=n as u32 {
            acc = acc.merge(slice(first));
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        acc = pool.install(|| {
            (1..=n as u32)
                .into_par_iter()
                .map(slice)
                .reduce(|| Accumulator::new(n), Accumulator::merge)
        });
    }
    Ok(acc.into_distributions())
}

pub fn joint_distribution(n: usize, kind: StatKind, cap: usize) -> Result<JointDistribution> {
    let (peak, valley) = joint_distributions(n, cap, 1)?;
    Ok(match kind {
        StatKind::Peak => peak,
        StatKind::Valley => valley,
    })
}

/// Distributions of one-line statistics, indexed by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDistributions {
    pub n: usize,
    pub pk: Vec<u64>,
    pub lpk: Vec<u64>,
    pub runs: Vec<u64>,
}

impl LinearDistributions {
    fn poly(counts: &[u64]) -> MPoly {
        MPoly::from_coeffs(crate::poly::Var::Q, counts.iter().map(|&c| BigInt::from(c)))
    }

    pub fn pk_poly(&self) -> MPoly {
        Self::poly(&self.pk)
    }

    pub fn lpk_poly(&self) -> MPoly {
        Self::poly(&self.lpk)
    }

    /// `sum_pi q^runs(pi)`.
    pub fn runs_poly(&self) -> MPoly {
        Self::poly(&self.runs)
    }
}

pub fn linear_distributions(n: usize, cap: usize) -> Result<LinearDistributions> {
    check_cap(n, cap)?;
    let mut d = LinearDistributions {
        n,
        pk: vec![0; n + 1],
        lpk: vec![0; n + 1],
        runs: vec![0; n + 1],
    };
    for p in crate::perm::enumerate_symmetric_group(n, cap)? {
        let s = p.linear_stats();
        d.pk[s.pk] += 1;
        d.lpk[s.lpk] += 1;
        d.runs[s.runs] += 1;
    }
    Ok(d)
}

/// Exhaustive tables for `n = 0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTables {
    pub cap: usize,
    pub peak: Vec<JointDistribution>,
    pub valley: Vec<JointDistribution>,
    pub linear: Vec<LinearDistributions>,
}

impl OracleTables {
    pub fn compute(cap: usize, jobs: usize) -> Result<Self> {
        let mut t = OracleTables {
            cap,
            peak: Vec::new(),
            valley: Vec::new(),
            linear: Vec::new(),
        };
        for n in 0..=cap {
            let (p, v) = joint_distributions(n, cap, jobs)?;
            t.peak.push(p);
            t.valley.push(v);
            t.linear.push(linear_distributions(n, cap)?);
        }
        Ok(t)
    }

    pub fn distribution(&self, n: usize, kind: StatKind) -> &JointDistribution {
        match kind {
            StatKind::Peak => &self.peak[n],
            StatKind::Valley => &self.valley[n],
        }
    }
}

/// Term-by-term comparison of `P_n` and `V_n` against the exhaustive counts
/// for `1 <= n <= n_max`.
pub fn compare_with_recurrence(n_max: usize, fams: &Families, tables: &OracleTables) -> CheckReport {
    let n_max = n_max.min(tables.cap).min(fams.n_max);
    let mut report = CheckReport::new("oracle", format!("n=1..{n_max}"));
    for n in 1..=n_max {
        for (kind, family, seq) in [(StatKind::Peak, "P", &fams.p), (StatKind::Valley, "V", &fams.v)] {
            let counted = tables.distribution(n, kind).to_poly();
            let computed = seq.at(n);
            let mut monomials: Vec<Monomial> = counted.terms().chain(computed.terms()).map(|(m, _)| *m).collect();
            monomials.sort();
            monomials.dedup();
            for m in monomials {
                report.expect_eq(
                    format!("{family}_{n} (t={},s={},r={})", m.q, m.x, m.y),
                    &counted.coeff(&m),
                    &computed.coeff(&m),
                );
            }
        }
    }
    if report.passed() {
        report.detail(format!("P_n and V_n equal exhaustive counts for n <= {n_max}"));
    }
    report
}

/// Distribution of `(cpk, cyc, fix)` read after switching each standard
/// cycle form. Switching exchanges peaks and valleys, so this must equal the
/// valley distribution.
pub fn switched_peak_distribution(n: usize, cap: usize) -> Result<JointDistribution> {
    let mut counts = BTreeMap::new();
    for p in crate::perm::enumerate_symmetric_group(n, cap)? {
        let st = p.cycle_form().switching().cycle_stats();
        *counts.entry((st.cpk, st.cyc, st.fix)).or_insert(0) += 1;
    }
    Ok(JointDistribution {
        n,
        kind: StatKind::Valley,
        counts,
    })
}

/// Brute-force list of `S_n` for small tests.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    crate::perm::enumerate_symmetric_group(n, crate::perm::MAX_CAP)
        .expect("n within cap")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::DEFAULT_CAP;

    fn lit(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_distributions() {
        let d3 = joint_distribution(3, StatKind::Peak, DEFAULT_CAP).unwrap();
        assert_eq!(d3.get(1, 1, 0), 1);
        assert_eq!(d3.total(), 6);
        let d1 = joint_distribution(1, StatKind::Peak, DEFAULT_CAP).unwrap();
        assert_eq!(d1.counts.into_iter().collect::<Vec<_>>(), vec![((0, 1, 1), 1)]);
        let d0 = joint_distribution(0, StatKind::Valley, DEFAULT_CAP).unwrap();
        assert_eq!(d0.to_poly(), MPoly::one());
    }

    #[test]
    fn printed_polynomials_by_counting() {
        assert_eq!(
            joint_distribution(2, StatKind::Peak, DEFAULT_CAP).unwrap().to_poly(),
            lit("x+x^2y^2")
        );
        assert_eq!(
            joint_distribution(4, StatKind::Valley, DEFAULT_CAP).unwrap().to_poly(),
            lit("(4+2q)x+(3+8y)x^2+6x^3y^2+x^4y^4")
        );
        assert_eq!(
            joint_distribution(5, StatKind::Valley, DEFAULT_CAP).unwrap().to_poly(),
            lit("(8+16q)x+(20+20y+10qy)x^2+(15y+20y^2)x^3+10x^4y^3+x^5y^5")
        );
    }

    #[test]
    fn linear_counts() {
        assert_eq!(
            linear_distributions(4, DEFAULT_CAP).unwrap().runs_poly(),
            lit("2q+12q^2+10q^3")
        );
        assert_eq!(linear_distributions(3, DEFAULT_CAP).unwrap().pk_poly(), lit("4+2q"));
        assert_eq!(linear_distributions(2, DEFAULT_CAP).unwrap().lpk_poly(), lit("1+q"));
    }

    #[test]
    fn parallel_split_is_deterministic() {
        let serial = joint_distributions(7, DEFAULT_CAP, 1).unwrap();
        let parallel = joint_distributions(7, DEFAULT_CAP, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn support_bounds() {
        for n in 1..=7 {
            let (p, v) = joint_distributions(n, DEFAULT_CAP, 1).unwrap();
            for d in [&p, &v] {
                assert_eq!(d.total(), (1..=n as u64).product::<u64>());
                for &(t, s, r) in d.counts.keys() {
                    assert!(s >= r && s <= n);
                    assert!(t + 2 * s <= n + r, "interior bound n={n} {t} {s} {r}");
                }
            }
            for &(t, _, _) in p.counts.keys() {
                assert!(t <= (n - 1) / 2);
            }
        }
    }

    #[test]
    fn cap_exceeded() {
        assert!(joint_distribution(10, StatKind::Peak, DEFAULT_CAP).is_err());
        assert!(linear_distributions(10, 9).is_err());
    }

    #[test]
    fn compare_detects_perturbation() {
        let fams = Families::compute(6);
        let tables = OracleTables::compute(6, 1).unwrap();
        assert!(compare_with_recurrence(6, &fams, &tables).passed());
        assert!(compare_with_recurrence(1, &fams, &tables).passed());

        let mut bad = fams.clone();
        bad.v
            .get_mut(5)
            .unwrap()
            .add_term(Monomial::new(1, 2, 1), BigInt::from(1));
        let r = compare_with_recurrence(6, &bad, &tables);
        assert!(!r.passed());
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].location, "V_5 (t=1,s=2,r=1)");
        assert_eq!(r.mismatches[0].expected, "10");
        assert_eq!(r.mismatches[0].actual, "11");
    }
}
