//! Cross-identities between the polynomial families and classical
//! sequences, each run as a machine check with a structured report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::egf;
use crate::error::{Error, Result};
use crate::oracle::{self, OracleTables, StatKind};
use crate::perm::{check_cap, enumerate_symmetric_group, MAX_CAP};
use crate::poly::{MPoly, Monomial, Var};
use crate::recurrence::{int_sequence, runs_numbers, Families, IntKind, TriangleFamily};
use crate::report::{Aggregate, CheckReport};

/// Largest `n` for the exhaustive switching check.
pub const SWITCHING_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub oracle_cap: usize,
    pub egf_order: usize,
    /// Worker threads for the oracle only.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 14,
            oracle_cap: 8,
            egf_order: egf::DEFAULT_ORDER,
            jobs: 1,
        }
    }
}

impl VerifyConfig {
    /// Families index needed by every check under this config.
    pub fn families_needed(&self) -> usize {
        (self.max_n + 1)
            .max(self.egf_order + 2)
            .max(self.oracle_cap.min(self.max_n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Bell,
    Pell,
    Euler,
    Stirling,
    Degrees,
    XCoeff,
    LogConcave,
    Egf,
    Oracle,
    RowSums,
    Switching,
    Linear,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::All,
        Suite::Bell,
        Suite::Pell,
        Suite::Euler,
        Suite::Stirling,
        Suite::Degrees,
        Suite::XCoeff,
        Suite::LogConcave,
        Suite::Egf,
        Suite::Oracle,
        Suite::RowSums,
        Suite::Switching,
        Suite::Linear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Bell => "bell",
            Suite::Pell => "pell",
            Suite::Euler => "euler",
            Suite::Stirling => "stirling",
            Suite::Degrees => "degrees",
            Suite::XCoeff => "xcoeff",
            Suite::LogConcave => "logconcave",
            Suite::Egf => "egf",
            Suite::Oracle => "oracle",
            Suite::RowSums => "rowsums",
            Suite::Switching => "switching",
            Suite::Linear => "linear",
        }
    }

    /// Does this suite read exhaustive counts?
    pub fn needs_oracle(self) -> bool {
        matches!(
            self,
            Suite::All | Suite::Pell | Suite::Stirling | Suite::Oracle | Suite::Switching | Suite::Linear
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite '{s}'")))
    }
}

fn q_pow(i: u32) -> Monomial {
    Monomial::ONE.with_exp(Var::Q, i)
}

/// `M_{n,0} = combinedR_{n,0} = B_n` for `1 <= n <= n_max`.
pub fn check_bell(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let bell = int_sequence(IntKind::Bell, n_max);
    let mut r = CheckReport::new("bell", format!("n=1..{n_max}"));
    for (n, b_n) in bell.iter().enumerate().skip(1) {
        let m0 = fams.specialized(TriangleFamily::M, n).coeff(&Monomial::ONE);
        let r0 = fams.combined_r.at(n).coeff(&Monomial::ONE);
        let a = r.expect_eq(format!("M_{{{n},0}}"), b_n, &m0);
        let b = r.expect_eq(format!("combinedR_{{{n},0}}"), b_n, &r0);
        if a && b {
            r.detail(format!("n={n}: {m0} = B_{n}"));
        }
    }
    r
}

/// `V_n(-1,1,0) = Pell(n-1)` for `1 <= n <= n_max`, and the signed
/// derangement sums `sum (-1)^cval` from the exhaustive counts for
/// `n <= oracle.cap`.
pub fn check_pell(fams: &Families, tables: &OracleTables, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let pell = int_sequence(IntKind::Pell, n_max.saturating_sub(1));
    let mut r = CheckReport::new("pell", format!("n=1..{n_max}; counted n=1..{}", n_max.min(tables.cap)));
    for n in 1..=n_max {
        let value = fams.v.at(n).evaluate(-1, 1, 0);
        if r.expect_eq(format!("V_{n}(-1,1,0)"), &pell[n - 1], &value) {
            r.detail(format!("n={n}: {value} = Pell({})", n - 1));
        }
    }
    for n in 1..=n_max.min(tables.cap) {
        let dist = tables.distribution(n, StatKind::Valley);
        let signed: BigInt = dist
            .counts
            .iter()
            .filter(|(&(_, _, fix), _)| fix == 0)
            .map(|(&(t, _, _), &c)| if t % 2 == 0 { BigInt::from(c) } else { -BigInt::from(c) })
            .sum();
        r.expect_eq(
            format!("counted sum (-1)^cval over derangements n={n}"),
            &pell[n - 1],
            &signed,
        );
    }
    r
}

/// The coefficient of `q^n` in `combinedR_{n+1}` and `I_{n+1}` is `E_n`
/// and is the top one, for `0 <= n <= n_max`.
pub fn check_euler(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max.saturating_sub(1));
    let euler = int_sequence(IntKind::Euler, n_max);
    let mut r = CheckReport::new("euler", format!("n=0..{n_max}"));
    for (n, e_n) in euler.iter().enumerate() {
        let mut ok = true;
        for (label, seq) in [("combinedR", &fams.combined_r), ("combinedI", &fams.combined_i)] {
            let p = seq.at(n + 1);
            let deg = p.degree_in(Var::Q).map_or("none".to_string(), |d| d.to_string());
            ok &= r.expect_eq(format!("deg {label}_{}", n + 1), &n.to_string(), &deg);
            ok &= r.expect_eq(format!("{label}_{{{},{n}}}", n + 1), e_n, &p.coeff(&q_pow(n as u32)));
        }
        if ok {
            r.detail(format!("n={n}: top coefficient {e_n} = E_{n}"));
        }
    }
    r
}

/// `P_n(0,x,1) = S_n(x)`, `P_n(0,x,0) = T_n(x)`, `D_{n,0} = sum_k T(n,k)`
/// for `n <= n_max`; from the counts, the cpk-free permutations with `s`
/// cycles number `S(n,s)` and the cpk-free derangements `T(n,s)`.
pub fn check_stirling(fams: &Families, tables: &OracleTables, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let counted = n_max.min(tables.cap);
    let mut r = CheckReport::new("stirling", format!("n=1..{n_max}; counted n=1..{counted}"));
    for n in 1..=n_max {
        let p0 = fams.p.at(n).eval_var(Var::Q, 0);
        r.expect_eq(format!("P_{n}(0,x,1)"), fams.s.at(n), &p0.eval_var(Var::Y, 1));
        r.expect_eq(format!("P_{n}(0,x,0)"), fams.t.at(n), &p0.eval_var(Var::Y, 0));
        let d0 = fams.specialized(TriangleFamily::D, n).coeff(&Monomial::ONE);
        r.expect_eq(format!("D_{{{n},0}}"), &fams.t.at(n).evaluate(0, 1, 0), &d0);
    }
    for n in 1..=counted {
        let dist = tables.distribution(n, StatKind::Peak);
        for s in 1..=n {
            let all: u64 = (0..=n).map(|fix| dist.get(0, s, fix)).sum();
            let stirling_s = fams.s.at(n).coeff(&Monomial::ONE.with_exp(Var::X, s as u32));
            r.expect_eq(format!("counted cpk=0 cyc={s} n={n}"), &stirling_s, &BigInt::from(all));
            let stirling_t = fams.t.at(n).coeff(&Monomial::ONE.with_exp(Var::X, s as u32));
            r.expect_eq(
                format!("counted cpk=0 cyc={s} fix=0 n={n}"),
                &stirling_t,
                &BigInt::from(dist.get(0, s, 0)),
            );
        }
    }
    if r.passed() {
        r.detail(format!("Stirling specializations hold through n={n_max}"));
    }
    r
}

/// `deg M_n = deg D_n = floor((n-1)/2)` and
/// `deg Mbar_n = deg Dbar_n = floor(n/2) - 1` for `2 <= n <= n_max`.
pub fn check_degrees(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let mut r = CheckReport::new("degrees", format!("n=2..{n_max}"));
    for n in 2..=n_max {
        for fam in [
            TriangleFamily::M,
            TriangleFamily::D,
            TriangleFamily::Mbar,
            TriangleFamily::Dbar,
        ] {
            let expected = match fam {
                TriangleFamily::M | TriangleFamily::D => (n - 1) / 2,
                _ => n / 2 - 1,
            };
            let actual = fams
                .specialized(fam, n)
                .degree_in(Var::Q)
                .map_or("none".to_string(), |d| d.to_string());
            r.expect_eq(format!("deg {fam}_{n}"), &expected.to_string(), &actual);
        }
    }
    if r.passed() {
        r.detail(format!("degree formulas hold through n={n_max}"));
    }
    r
}

/// `[x^1] P_{n+1}(q,x,1) = Wbar_n(q)` and `[x^1] V_{n+1}(q,x,1) = W_n(q)`
/// for `1 <= n <= n_max`.
pub fn check_x_coefficient(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max.saturating_sub(1));
    let mut r = CheckReport::new("xcoeff", format!("n=1..{n_max}"));
    for n in 1..=n_max {
        let p = fams.p.at(n + 1).eval_var(Var::Y, 1).coefficient_of(Var::X, 1);
        let v = fams.v.at(n + 1).eval_var(Var::Y, 1).coefficient_of(Var::X, 1);
        r.expect_eq(format!("[x^1]P_{}", n + 1), fams.wbar.at(n), &p);
        r.expect_eq(format!("[x^1]V_{}", n + 1), fams.w.at(n), &v);
    }
    if r.passed() {
        r.detail(format!("x-coefficients match W and Wbar through n={n_max}"));
    }
    r
}

/// `a_{i-1} a_{i+1} <= a_i^2` along the coefficients of `combinedR_n` and
/// `I_n`, `1 <= n <= n_max`. A counterexample is a finding.
pub fn check_log_concavity(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let mut r = CheckReport::new("logconcave", format!("n=1..{n_max}")).conjecture();
    for n in 1..=n_max {
        for (label, seq) in [("combinedR", &fams.combined_r), ("combinedI", &fams.combined_i)] {
            let a = seq.at(n).univariate_coeffs(Var::Q);
            for i in 1..a.len().saturating_sub(1) {
                let lhs = &a[i - 1] * &a[i + 1];
                let rhs = &a[i] * &a[i];
                if lhs > rhs {
                    r.mismatch(
                        format!("{label}_{n} index {i}"),
                        format!("a_{}*a_{} <= a_{i}^2 = {rhs}", i - 1, i + 1),
                        lhs,
                    );
                }
            }
        }
    }
    if r.passed() {
        r.detail(format!("combinedR_n and I_n are log-concave for n <= {n_max}"));
    }
    r
}

/// Row sums: `M`, `Mbar` and runs give `n!`, `D` and `Dbar` give `d_n`,
/// `combinedR_n(1) = 2 n!` for `n >= 3` and `I_n(1) = 2 d_n` for `n >= 2`.
pub fn check_row_sums(fams: &Families, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let fact = int_sequence(IntKind::Factorial, n_max);
    let der = int_sequence(IntKind::Derangement, n_max);
    let two = BigInt::from(2);
    let mut r = CheckReport::new("rowsums", format!("n=1..{n_max}"));
    for n in 1..=n_max {
        for fam in [
            TriangleFamily::M,
            TriangleFamily::Mbar,
            TriangleFamily::D,
            TriangleFamily::Dbar,
        ] {
            let expected = match fam {
                TriangleFamily::M | TriangleFamily::Mbar => &fact[n],
                _ => &der[n],
            };
            let sum = fams.specialized(fam, n).evaluate(1, 1, 1);
            r.expect_eq(format!("{fam}_{n}(1)"), expected, &sum);
        }
        r.expect_eq(format!("runs_{n}(1)"), &fact[n], &fams.runs.at(n).evaluate(1, 1, 1));
        if n >= 3 {
            let sum = fams.combined_r.at(n).evaluate(1, 1, 1);
            r.expect_eq(format!("combinedR_{n}(1)"), &(&two * &fact[n]), &sum);
        }
        if n >= 2 {
            let sum = fams.combined_i.at(n).evaluate(1, 1, 1);
            r.expect_eq(format!("combinedI_{n}(1)"), &(&two * &der[n]), &sum);
        }
    }
    if r.passed() {
        r.detail(format!("row sums are n! and derangement numbers through n={n_max}"));
    }
    r
}

/// Switching is an involution on standard forms of `S_n` that swaps cpk and
/// cval and keeps cyc and fix, for `n <= n_max`; the switched peak counts
/// equal the counted valley table for `n <= tables.cap`.
pub fn check_switching(tables: &OracleTables, n_max: usize) -> Result<CheckReport> {
    check_cap(n_max, MAX_CAP)?;
    let mut r = CheckReport::new("switching", format!("n=1..{n_max}"));
    for n in 1..=n_max {
        let mut bad = 0usize;
        for p in enumerate_symmetric_group(n, MAX_CAP)? {
            let c = p.cycle_form();
            let s = c.switching();
            let (a, b) = (c.cycle_stats(), s.cycle_stats());
            let swapped = a.cpk == b.cval && a.cval == b.cpk && a.cyc == b.cyc && a.fix == b.fix;
            if s.switching() != c || !swapped {
                if bad == 0 {
                    r.mismatch(format!("n={n} {c}"), "involution swapping cpk and cval", s);
                }
                bad += 1;
            }
        }
        if n <= tables.cap {
            let switched = oracle::switched_peak_distribution(n, MAX_CAP)?;
            let valley = tables.distribution(n, StatKind::Valley);
            let mut keys: Vec<_> = switched.counts.keys().chain(valley.counts.keys()).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            for (t, s, f) in keys {
                r.expect_eq(
                    format!("n={n} (t={t},s={s},r={f})"),
                    &valley.get(t, s, f),
                    &switched.get(t, s, f),
                );
            }
        }
    }
    if r.passed() {
        r.detail(format!("switching is a cpk/cval-swapping involution for n <= {n_max}"));
    }
    Ok(r)
}

/// Linear statistics: the runs polynomials against the `R(n,k)` table for
/// `2 <= n <= n_max`, and `W`, `Wbar`, runs against counted `pk`, `lpk`,
/// runs for `1 <= n <= tables.cap` (runs from `n = 2`).
pub fn check_linear(fams: &Families, tables: &OracleTables, n_max: usize) -> CheckReport {
    let n_max = n_max.min(fams.n_max);
    let counted = n_max.min(tables.cap);
    let mut r = CheckReport::new("linear", format!("n=2..{n_max}; counted n=1..{counted}"));
    let table = runs_numbers(n_max);
    for n in 2..=n_max {
        let from_table = MPoly::from_coeffs(Var::Q, table[n - 1].iter().cloned());
        r.expect_eq(format!("runs_{n} vs R({n},k)"), &from_table, fams.runs.at(n));
    }
    for n in 1..=counted {
        let lin = &tables.linear[n];
        r.expect_eq(format!("W_{n} vs counted pk"), &lin.pk_poly(), fams.w.at(n));
        r.expect_eq(format!("Wbar_{n} vs counted lpk"), &lin.lpk_poly(), fams.wbar.at(n));
        if n >= 2 {
            r.expect_eq(format!("runs_{n} vs counted runs"), &lin.runs_poly(), fams.runs.at(n));
        }
    }
    if r.passed() {
        r.detail(format!(
            "W, Wbar and runs agree with their definitions through n={n_max}"
        ));
    }
    r
}

/// Families and exhaustive tables sized for `config`.
pub struct Inputs {
    pub families: Families,
    pub tables: OracleTables,
}

impl Inputs {
    /// Computes everything `suite` reads. Suites that never look at counts
    /// get a trivial table.
    pub fn compute(suite: Suite, config: &VerifyConfig) -> Result<Inputs> {
        check_cap(config.oracle_cap, MAX_CAP)?;
        let cap = if suite.needs_oracle() { config.oracle_cap } else { 0 };
        Ok(Inputs {
            families: Families::compute(config.families_needed()),
            tables: OracleTables::compute(cap, config.jobs.max(1))?,
        })
    }
}

/// Runs one suite on precomputed inputs.
pub fn run_suite_with(suite: Suite, config: &VerifyConfig, inputs: &Inputs) -> Result<Aggregate> {
    let (f, t) = (&inputs.families, &inputs.tables);
    let n = config.max_n;
    let reports = match suite {
        Suite::All => {
            let mut all = vec![
                check_bell(f, n),
                check_pell(f, t, n),
                check_euler(f, n),
                check_stirling(f, t, n),
                check_degrees(f, n),
                check_x_coefficient(f, n),
                check_log_concavity(f, n),
                check_row_sums(f, n),
                check_switching(t, t.cap.min(SWITCHING_MAX_N))?,
                check_linear(f, t, n),
                oracle::compare_with_recurrence(n, f, t),
            ];
            all.extend(egf::verify_all(f, config.egf_order));
            all
        }
        Suite::Bell => vec![check_bell(f, n)],
        Suite::Pell => vec![check_pell(f, t, n)],
        Suite::Euler => vec![check_euler(f, n)],
        Suite::Stirling => vec![check_stirling(f, t, n)],
        Suite::Degrees => vec![check_degrees(f, n)],
        Suite::XCoeff => vec![check_x_coefficient(f, n)],
        Suite::LogConcave => vec![check_log_concavity(f, n)],
        Suite::Egf => egf::verify_all(f, config.egf_order),
        Suite::Oracle => vec![oracle::compare_with_recurrence(n, f, t)],
        Suite::RowSums => vec![check_row_sums(f, n)],
        Suite::Switching => vec![check_switching(t, t.cap.min(SWITCHING_MAX_N))?],
        Suite::Linear => vec![check_linear(f, t, n)],
    };
    Ok(Aggregate::new(reports))
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<Aggregate> {
    let inputs = Inputs::compute(suite, config)?;
    run_suite_with(suite, config, &inputs)
}

/// Every check: identities, exhaustive comparison and series identities.
pub fn run_all(config: &VerifyConfig) -> Result<Aggregate> {
    run_suite(Suite::All, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn small() -> (Families, OracleTables) {
        (Families::compute(17), OracleTables::compute(6, 1).unwrap())
    }

    #[test]
    fn every_check_passes_on_true_data() {
        let (f, t) = small();
        for r in [
            check_bell(&f, 14),
            check_pell(&f, &t, 14),
            check_euler(&f, 14),
            check_stirling(&f, &t, 14),
            check_degrees(&f, 16),
            check_x_coefficient(&f, 14),
            check_log_concavity(&f, 7),
            check_row_sums(&f, 14),
            check_switching(&t, 6).unwrap(),
            check_linear(&f, &t, 14),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn printed_values_appear_in_details() {
        let (f, t) = small();
        let bell = check_bell(&f, 10);
        assert!(bell.details.contains(&"n=7: 877 = B_7".to_string()));
        assert!(bell.details.contains(&"n=10: 115975 = B_10".to_string()));
        let pell = check_pell(&f, &t, 12);
        assert_eq!(pell.details.len(), 12);
        assert_eq!(pell.details[5], "n=6: 29 = Pell(5)");
        assert_eq!(pell.details[6], "n=7: 70 = Pell(6)");
        assert_eq!(pell.details[11], "n=12: 5741 = Pell(11)");
        let euler = check_euler(&f, 7);
        assert_eq!(euler.details[7], "n=7: top coefficient 272 = E_7");
    }

    #[test]
    fn perturbations_are_located() {
        let (base, t) = small();

        let mut f = base.clone();
        f.p.get_mut(7).unwrap().add_term(Monomial::new(0, 2, 1), BigInt::one());
        let r = check_bell(&f, 10);
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].location, "M_{7,0}");
        assert_eq!(r.mismatches[0].actual, "878");

        let mut f = base.clone();
        f.v.get_mut(7).unwrap().add_term(Monomial::new(1, 3, 0), BigInt::one());
        let r = check_pell(&f, &t, 10);
        assert_eq!(r.mismatches[0].location, "V_7(-1,1,0)");

        let mut f = base.clone();
        f.combined_i.get_mut(6).unwrap().add_term(q_pow(5), BigInt::one());
        assert_eq!(check_euler(&f, 10).mismatches[0].location, "combinedI_{6,5}");

        let mut f = base.clone();
        f.t.get_mut(5).unwrap().add_term(Monomial::new(0, 2, 0), BigInt::one());
        assert_eq!(check_stirling(&f, &t, 10).mismatches[0].location, "P_5(0,x,0)");

        let mut f = base.clone();
        f.v.get_mut(8).unwrap().add_term(Monomial::new(4, 1, 0), BigInt::one());
        assert_eq!(check_degrees(&f, 10).mismatches[0].location, "deg Mbar_8");

        let mut f = base.clone();
        f.w.get_mut(4).unwrap().add_term(Monomial::ONE, BigInt::one());
        assert_eq!(check_x_coefficient(&f, 10).mismatches[0].location, "[x^1]V_5");

        let mut f = base.clone();
        f.runs.get_mut(6).unwrap().add_term(q_pow(2), BigInt::one());
        assert_eq!(check_row_sums(&f, 10).mismatches[0].location, "runs_6(1)");
        let r = check_linear(&f, &t, 10);
        assert_eq!(r.mismatches[0].location, "runs_6 vs R(6,k)");
        assert_eq!(r.mismatches[1].location, "runs_6 vs counted runs");

        let mut t2 = t.clone();
        *t2.valley[5].counts.get_mut(&(1, 1, 0)).unwrap() += 1;
        let r = check_switching(&t2, 5).unwrap();
        assert_eq!(r.mismatches[0].location, "n=5 (t=1,s=1,r=0)");
    }

    #[test]
    fn log_concavity_breaks_at_eight() {
        let (f, _) = small();
        assert!(check_log_concavity(&f, 7).passed());
        let r = check_log_concavity(&f, 8);
        assert!(!r.passed() && !r.is_blocking());
        // I_8 = 715 + 4033q + 5191q^2 + 7060q^3 + ...: 4033 * 7060 > 5191^2.
        assert_eq!(r.mismatches.len(), 2);
        assert_eq!(r.mismatches[0].location, "combinedI_8 index 2");
        assert_eq!(r.mismatches[0].actual, "28472980");
        assert_eq!(r.mismatches[1].location, "combinedI_8 index 5");
    }

    #[test]
    fn log_concavity_failure_is_a_finding() {
        let (mut f, _) = small();
        f.combined_r.get_mut(6).unwrap().add_term(q_pow(5), BigInt::from(1000));
        let r = check_log_concavity(&f, 7);
        assert!(!r.passed() && !r.is_blocking());
        assert_eq!(r.mismatches[0].location, "combinedR_6 index 4");
        assert!(Aggregate::new(vec![r]).passed());
    }

    #[test]
    fn suites_by_name() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn minimal_run_passes() {
        let cfg = VerifyConfig {
            max_n: 1,
            oracle_cap: 1,
            egf_order: 1,
            jobs: 1,
        };
        let agg = run_all(&cfg).unwrap();
        assert!(agg.passed(), "{agg}");
    }

    #[test]
    fn perturbation_fails_only_the_affected_checks() {
        let cfg = VerifyConfig {
            max_n: 10,
            oracle_cap: 6,
            egf_order: 8,
            jobs: 1,
        };
        let mut inputs = Inputs::compute(Suite::All, &cfg).unwrap();
        assert!(run_suite_with(Suite::All, &cfg, &inputs).unwrap().passed());
        inputs
            .families
            .wbar
            .get_mut(3)
            .unwrap()
            .add_term(q_pow(1), BigInt::one());
        let agg = run_suite_with(Suite::All, &cfg, &inputs).unwrap();
        assert_eq!(agg.failing(), vec!["xcoeff", "linear", "egf-V-from-left-peaks"]);
    }
}
