//! Every polynomial family generated by its recurrence, plus the triangles
//! obtained by specializing them.
//!
//! All recurrences are run in exact arithmetic. Indices follow the usual
//! conventions: `P_0 = V_0 = 1` so that the exponential generating function
//! sums can start at zero, while `W`, `Wbar`, the alternating-runs
//! polynomials and the combined polynomials start at 1.

mod sequences;
mod triangle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};

pub use sequences::{binomial, int_sequence, IntKind};
pub use triangle::{runs_numbers, Triangle, TriangleFamily};

/// Polynomial families exposed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Cyclic peaks, cycles and fixed points jointly.
    P,
    /// Cyclic valleys, cycles and fixed points jointly.
    V,
    /// `P_n(q,x,0)`, the derangement part of `P`.
    Pder,
    /// `V_n(q,x,0)`.
    Vder,
    /// Interior peaks of one-line words.
    W,
    /// Left peaks of one-line words.
    Wbar,
    /// Stirling numbers of the second kind.
    S,
    /// Associated Stirling numbers (blocks of size at least two).
    T,
    /// Alternating runs.
    Runs,
    /// `M_n(q^2) + q Mbar_n(q^2)`.
    CombinedR,
    /// `D_n(q^2) + q Dbar_n(q^2)`.
    CombinedI,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::P,
        Family::V,
        Family::Pder,
        Family::Vder,
        Family::W,
        Family::Wbar,
        Family::S,
        Family::T,
        Family::Runs,
        Family::CombinedR,
        Family::CombinedI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::V => "V",
            Family::Pder => "Pder",
            Family::Vder => "Vder",
            Family::W => "W",
            Family::Wbar => "Wbar",
            Family::S => "S",
            Family::T => "T",
            Family::Runs => "runs",
            Family::CombinedR => "combinedR",
            Family::CombinedI => "combinedI",
        }
    }

    /// Smallest valid index.
    pub fn start(self) -> usize {
        match self {
            Family::P | Family::V | Family::Pder | Family::Vder | Family::S | Family::T => 0,
            Family::W | Family::Wbar | Family::Runs | Family::CombinedR | Family::CombinedI => 1,
        }
    }

    /// The family through index `n`.
    pub fn sequence(self, n: usize) -> PolySequence {
        match self {
            Family::P => pnqxy_sequence(n),
            Family::V => vnqxy_sequence(n),
            Family::Pder => derangement_p_sequence(n),
            Family::Vder => derangement_v_sequence(n),
            Family::W => w_sequences(n.max(1)).0,
            Family::Wbar => w_sequences(n.max(1)).1,
            Family::S => stirling_sequences(n).0,
            Family::T => stirling_sequences(n).1,
            Family::Runs => runs_sequence(n.max(1)),
            Family::CombinedR => combined_sequences(n.max(1)).0,
            Family::CombinedI => combined_sequences(n.max(1)).1,
        }
    }

    /// The `n`-th member, rejecting indices before the family starts.
    pub fn nth(self, n: usize) -> Result<MPoly> {
        if n < self.start() {
            return Err(Error::Usage(format!(
                "family {} starts at n = {}",
                self.name(),
                self.start()
            )));
        }
        Ok(self.sequence(n).get(n).cloned().expect("sequence reaches n"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown polynomial family '{s}'")))
    }
}

/// Consecutive members `start..=start + len - 1` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    family: Family,
    start: usize,
    polys: Vec<MPoly>,
}

impl PolySequence {
    pub fn new(family: Family, start: usize, polys: Vec<MPoly>) -> Self {
        PolySequence { family, start, polys }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Largest stored index.
    pub fn last_index(&self) -> usize {
        self.start + self.polys.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&MPoly> {
        n.checked_sub(self.start).and_then(|i| self.polys.get(i))
    }

    pub fn get_mut(&mut self, n: usize) -> Option<&mut MPoly> {
        n.checked_sub(self.start).and_then(|i| self.polys.get_mut(i))
    }

    /// Panicking accessor for indices known to be in range.
    pub fn at(&self, n: usize) -> &MPoly {
        self.get(n).unwrap_or_else(|| {
            panic!(
                "{} has indices {}..={}, asked for {n}",
                self.family,
                self.start,
                self.last_index()
            )
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &MPoly)> {
        self.polys.iter().enumerate().map(move |(i, p)| (i + self.start, p))
    }

    fn truncated(mut self, last: usize) -> Self {
        self.polys.truncate(last + 1 - self.start);
        self
    }
}

fn lit(s: &str) -> MPoly {
    s.parse().expect("literal polynomial")
}

fn int(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `P_{n+1}` from `P_n`:
/// `(nq+xy)P + 2q(1-q)P_q + x(1-q)P_x + (1-y)P_y`.
pub fn p_step(n: usize, p: &MPoly) -> MPoly {
    let mut out = &(&MPoly::q().scale(&int(n)) + &lit("xy")) * p;
    out += &lit("2q-2q^2") * &p.partial(Var::Q);
    out += &lit("x-qx") * &p.partial(Var::X);
    out += &lit("1-y") * &p.partial(Var::Y);
    out
}

/// `V_{n+1}` from `V_n`:
/// `(nq+xy)V + 2q(1-q)V_q + 2x(1-q)V_x + (1-2y+qy)V_y`.
pub fn v_step(n: usize, v: &MPoly) -> MPoly {
    let mut out = &(&MPoly::q().scale(&int(n)) + &lit("xy")) * v;
    out += &lit("2q-2q^2") * &v.partial(Var::Q);
    out += &lit("2x-2qx") * &v.partial(Var::X);
    out += &lit("1-2y+qy") * &v.partial(Var::Y);
    out
}

/// `P_n(q,x,y)` for `n = 0..=n_max`, from `P_1 = xy`.
pub fn pnqxy_sequence(n_max: usize) -> PolySequence {
    let mut polys = vec![MPoly::one(), lit("xy")];
    for n in 1..n_max {
        let next = p_step(n, &polys[n]);
        polys.push(next);
    }
    PolySequence::new(Family::P, 0, polys).truncated(n_max)
}

/// `V_n(q,x,y)` for `n = 0..=n_max`, from `V_1 = xy`.
pub fn vnqxy_sequence(n_max: usize) -> PolySequence {
    let mut polys = vec![MPoly::one(), lit("xy")];
    for n in 1..n_max {
        let next = v_step(n, &polys[n]);
        polys.push(next);
    }
    PolySequence::new(Family::V, 0, polys).truncated(n_max)
}

/// Shared shape of the two derangement recurrences: `x_coeff` is 1 for `P`
/// and 2 for `V`.
fn derangement_sequence(family: Family, x_coeff: i64, seeds: [&str; 4], n_max: usize) -> PolySequence {
    let mut polys: Vec<MPoly> = seeds.iter().map(|s| lit(s)).collect();
    let x_term = lit("x-qx").scale_i64(x_coeff);
    for n in 3..n_max {
        let cur = &polys[n];
        let mut next = cur.shift(&crate::poly::Monomial::new(1, 0, 0)).scale(&int(n));
        next += &lit("2q-2q^2") * &cur.partial(Var::Q);
        next += &x_term * &cur.partial(Var::X);
        next += polys[n - 1].shift(&crate::poly::Monomial::new(0, 1, 0)).scale(&int(n));
        polys.push(next);
    }
    PolySequence::new(family, 0, polys).truncated(n_max)
}

/// `P_n(q,x,0)` for `n = 0..=n_max`:
/// `P_{n+1} = nqP_n + 2q(1-q)∂qP_n + x(1-q)∂xP_n + nxP_{n-1}`.
pub fn derangement_p_sequence(n_max: usize) -> PolySequence {
    derangement_sequence(Family::Pder, 1, ["1", "0", "x", "(1+q)x"], n_max)
}

/// `V_n(q,x,0)` for `n = 0..=n_max`, same shape with `2x(1-q)∂xV_n`.
pub fn derangement_v_sequence(n_max: usize) -> PolySequence {
    derangement_sequence(Family::Vder, 2, ["1", "0", "x", "2x"], n_max)
}

/// Interior-peak and left-peak polynomials `(W_n, Wbar_n)`, `n = 1..=n_max`.
pub fn w_sequences(n_max: usize) -> (PolySequence, PolySequence) {
    let mut w = vec![MPoly::one()];
    let mut wbar = vec![MPoly::one()];
    let drift = lit("2q-2q^2");
    for n in 1..n_max {
        let cur = &w[n - 1];
        // (nq - q + 2) W_n + 2q(1-q) W_n'
        let factor = &MPoly::q().scale(&BigInt::from(n as i64 - 1)) + &MPoly::constant(2);
        w.push(&(&factor * cur) + &(&drift * &cur.partial(Var::Q)));
        let cur = &wbar[n - 1];
        let factor = &MPoly::q().scale(&int(n)) + &MPoly::one();
        wbar.push(&(&factor * cur) + &(&drift * &cur.partial(Var::Q)));
    }
    (
        PolySequence::new(Family::W, 1, w),
        PolySequence::new(Family::Wbar, 1, wbar),
    )
}

/// `(S_n(x), T_n(x))` for `n = 0..=n_max`, with `S_0 = T_0 = 1`, `T_1 = 0`.
pub fn stirling_sequences(n_max: usize) -> (PolySequence, PolySequence) {
    let x = MPoly::x();
    let mut s = vec![MPoly::one()];
    let mut t = vec![MPoly::one(), MPoly::zero()];
    for n in 0..n_max {
        let next = &(&x * &s[n]) + &(&x * &s[n].partial(Var::X));
        s.push(next);
    }
    for n in 1..n_max {
        let next = &(&x * &t[n].partial(Var::X)) + &(&x * &t[n - 1]).scale(&int(n));
        t.push(next);
    }
    (
        PolySequence::new(Family::S, 0, s),
        PolySequence::new(Family::T, 0, t).truncated(n_max),
    )
}

/// Alternating-runs polynomials `R_n(q) = sum_k R(n,k) q^k`, `n = 1..=n_max`:
/// `R_{n+2} = q(nq+2) R_{n+1} + q(1-q^2) R_{n+1}'`, `R_1 = 1`.
pub fn runs_sequence(n_max: usize) -> PolySequence {
    let mut polys = vec![MPoly::one()];
    let outer = lit("q-q^3");
    for n in 0..n_max.saturating_sub(1) {
        let cur = &polys[n];
        let factor = &MPoly::q().pow(2).scale(&int(n)) + &lit("2q");
        polys.push(&(&factor * cur) + &(&outer * &cur.partial(Var::Q)));
    }
    PolySequence::new(Family::Runs, 1, polys)
}

/// Interleave `a(q^2) + q b(q^2)`.
fn interleave(a: &MPoly, b: &MPoly) -> MPoly {
    &a.square_var(Var::Q) + &(&MPoly::q() * &b.square_var(Var::Q))
}

/// Combined polynomials built from the specializations of `P` and `V`.
/// Below the thresholds where the interleaving is defined the fixed values
/// `R_1 = 1`, `R_2 = 2 + q`, `I_1 = 1` are used.
pub fn combined_from(p: &PolySequence, v: &PolySequence, n_max: usize) -> (PolySequence, PolySequence) {
    let at_x1 = |poly: &MPoly, y: i64| poly.eval_var(Var::X, 1).eval_var(Var::Y, y);
    let mut r = Vec::new();
    let mut i = Vec::new();
    for n in 1..=n_max {
        r.push(match n {
            1 => MPoly::one(),
            2 => lit("2+q"),
            _ => interleave(&at_x1(p.at(n), 1), &at_x1(v.at(n), 1)),
        });
        i.push(match n {
            1 => MPoly::one(),
            _ => interleave(&at_x1(p.at(n), 0), &at_x1(v.at(n), 0)),
        });
    }
    (
        PolySequence::new(Family::CombinedR, 1, r),
        PolySequence::new(Family::CombinedI, 1, i),
    )
}

/// `(combinedR_n, I_n)` for `n = 1..=n_max`.
pub fn combined_sequences(n_max: usize) -> (PolySequence, PolySequence) {
    combined_from(&pnqxy_sequence(n_max), &vnqxy_sequence(n_max), n_max)
}

/// Every family computed through one common index. Verification routines
/// read their inputs from here, so a single perturbed coefficient flows
/// into every check that depends on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families {
    pub n_max: usize,
    pub p: PolySequence,
    pub v: PolySequence,
    pub pder: PolySequence,
    pub vder: PolySequence,
    pub w: PolySequence,
    pub wbar: PolySequence,
    pub s: PolySequence,
    pub t: PolySequence,
    pub runs: PolySequence,
    pub combined_r: PolySequence,
    pub combined_i: PolySequence,
}

impl Families {
    pub fn compute(n_max: usize) -> Self {
        let n_max = n_max.max(1);
        let p = pnqxy_sequence(n_max);
        let v = vnqxy_sequence(n_max);
        let (w, wbar) = w_sequences(n_max);
        let (s, t) = stirling_sequences(n_max);
        let (combined_r, combined_i) = combined_from(&p, &v, n_max);
        Families {
            n_max,
            pder: derangement_p_sequence(n_max),
            vder: derangement_v_sequence(n_max),
            runs: runs_sequence(n_max),
            p,
            v,
            w,
            wbar,
            s,
            t,
            combined_r,
            combined_i,
        }
    }

    pub fn get(&self, family: Family) -> &PolySequence {
        match family {
            Family::P => &self.p,
            Family::V => &self.v,
            Family::Pder => &self.pder,
            Family::Vder => &self.vder,
            Family::W => &self.w,
            Family::Wbar => &self.wbar,
            Family::S => &self.s,
            Family::T => &self.t,
            Family::Runs => &self.runs,
            Family::CombinedR => &self.combined_r,
            Family::CombinedI => &self.combined_i,
        }
    }

    pub fn get_mut(&mut self, family: Family) -> &mut PolySequence {
        match family {
            Family::P => &mut self.p,
            Family::V => &mut self.v,
            Family::Pder => &mut self.pder,
            Family::Vder => &mut self.vder,
            Family::W => &mut self.w,
            Family::Wbar => &mut self.wbar,
            Family::S => &mut self.s,
            Family::T => &mut self.t,
            Family::Runs => &mut self.runs,
            Family::CombinedR => &mut self.combined_r,
            Family::CombinedI => &mut self.combined_i,
        }
    }

    /// `M_n(q)`, `Mbar_n(q)`, `D_n(q)` or `Dbar_n(q)`.
    pub fn specialized(&self, fam: TriangleFamily, n: usize) -> MPoly {
        let (src, y) = match fam {
            TriangleFamily::M => (&self.p, 1),
            TriangleFamily::Mbar => (&self.v, 1),
            TriangleFamily::D => (&self.p, 0),
            TriangleFamily::Dbar => (&self.v, 0),
            other => panic!("{other} is not a specialization of P or V"),
        };
        src.at(n).eval_var(Var::X, 1).eval_var(Var::Y, y)
    }

    /// Rows `1..=rows` of a triangle; `rows` must not exceed `n_max`.
    pub fn triangle(&self, fam: TriangleFamily, rows: usize) -> Triangle {
        Triangle::from_families(self, fam, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_p_polynomials() {
        let p = pnqxy_sequence(4);
        assert_eq!(p.at(1), &lit("xy"));
        assert_eq!(p.at(2), &lit("x+x^2y^2"));
        assert_eq!(p.at(3), &lit("(1+q)x+3x^2y+x^3y^3"));
        assert_eq!(p.at(4), &lit("(1+5q)x+(3+4y+4qy)x^2+6x^3y^2+x^4y^4"));
        assert_eq!(p.last_index(), 4);
    }

    #[test]
    fn printed_v_polynomials() {
        let v = vnqxy_sequence(5);
        assert_eq!(v.at(1), &lit("xy"));
        assert_eq!(v.at(2), &lit("x+x^2y^2"));
        assert_eq!(v.at(3), &lit("2x+3x^2y+x^3y^3"));
        assert_eq!(v.at(4), &lit("(4+2q)x+(3+8y)x^2+6x^3y^2+x^4y^4"));
        assert_eq!(
            v.at(5),
            &lit("(8+16q)x+(20+20y+10qy)x^2+(15y+20y^2)x^3+10x^4y^3+x^5y^5")
        );
    }

    #[test]
    fn derangement_sequences() {
        let p = derangement_p_sequence(4);
        assert_eq!(p.at(1), &MPoly::zero());
        assert_eq!(p.at(3), &lit("(1+q)x"));
        assert_eq!(p.at(4), &lit("(1+5q)x+3x^2"));
        let v = derangement_v_sequence(5);
        assert_eq!(v.at(3), &lit("2x"));
        assert_eq!(v.at(4), &lit("(4+2q)x+3x^2"));
        assert_eq!(v.at(5), &lit("(8+16q)x+20x^2"));
        assert_eq!(derangement_p_sequence(1).last_index(), 1);
    }

    #[test]
    fn derangement_recurrence_reproduces_its_seeds() {
        // Running the step from n = 1 and n = 2 regenerates P_2 and P_3.
        let full = derangement_p_sequence(8);
        let seeds_only = ["1", "0"].map(lit);
        let step = |n: usize, cur: &MPoly, prev: &MPoly| {
            let mut next = (&MPoly::q() * cur).scale(&int(n));
            next += &lit("2q-2q^2") * &cur.partial(Var::Q);
            next += &lit("x-qx") * &cur.partial(Var::X);
            next += (&MPoly::x() * prev).scale(&int(n));
            next
        };
        let p2 = step(1, &seeds_only[1], &seeds_only[0]);
        let p3 = step(2, &p2, &seeds_only[1]);
        assert_eq!(&p2, full.at(2));
        assert_eq!(&p3, full.at(3));
    }

    #[test]
    fn derangement_parts_agree_with_y_constant_terms() {
        let p = pnqxy_sequence(12);
        let v = vnqxy_sequence(12);
        let pd = derangement_p_sequence(12);
        let vd = derangement_v_sequence(12);
        for n in 0..=12 {
            assert_eq!(&p.at(n).coefficient_of(Var::Y, 0), pd.at(n), "P n={n}");
            assert_eq!(&v.at(n).coefficient_of(Var::Y, 0), vd.at(n), "V n={n}");
        }
    }

    #[test]
    fn w_polynomials() {
        let (w, wbar) = w_sequences(4);
        assert_eq!(w.at(1), &lit("1"));
        assert_eq!(w.at(2), &lit("2"));
        assert_eq!(w.at(3), &lit("4+2q"));
        assert_eq!(w.at(4), &lit("8+16q"));
        assert_eq!(wbar.at(2), &lit("1+q"));
        assert_eq!(wbar.at(3), &lit("1+5q"));
    }

    #[test]
    fn stirling_polynomials() {
        let (s, t) = stirling_sequences(4);
        assert_eq!(s.at(1), &lit("x"));
        assert_eq!(s.at(4), &lit("x+7x^2+6x^3+x^4"));
        assert_eq!(t.at(1), &MPoly::zero());
        assert_eq!(t.at(2), &lit("x"));
        assert_eq!(t.at(3), &lit("x"));
        assert_eq!(t.at(4), &lit("x+3x^2"));
        assert_eq!(stirling_sequences(0).1.last_index(), 0);
    }

    #[test]
    fn runs_polynomials() {
        let r = runs_sequence(5);
        assert_eq!(r.at(1), &lit("1"));
        assert_eq!(r.at(2), &lit("2q"));
        assert_eq!(r.at(3), &lit("2q+4q^2"));
        assert_eq!(r.at(4), &lit("2q+12q^2+10q^3"));
        assert_eq!(r.at(5), &lit("2q+28q^2+58q^3+32q^4"));
    }

    #[test]
    fn combined_polynomials() {
        let (r, i) = combined_sequences(6);
        assert_eq!(r.at(2), &lit("2+q"));
        assert_eq!(r.at(5).univariate_coeffs(Var::Q), ints(&[52, 94, 63, 26, 5]));
        assert_eq!(i.at(5).univariate_coeffs(Var::Q), ints(&[11, 28, 28, 16, 5]));
        assert_eq!(i.at(1), &MPoly::one());
    }

    #[test]
    fn fixed_point_factorization() {
        let p = pnqxy_sequence(12);
        let v = vnqxy_sequence(12);
        let pd = derangement_p_sequence(12);
        let vd = derangement_v_sequence(12);
        let xy = lit("xy");
        for n in 0..=12 {
            let mut sum_p = MPoly::zero();
            let mut sum_v = MPoly::zero();
            for k in 0..=n {
                let w = xy.pow(k as u32).scale(&binomial(n, k));
                sum_p += &w * pd.at(n - k);
                sum_v += &w * vd.at(n - k);
                // Coefficient of y^k in P_n is C(n,k) x^k P_{n-k}(q,x,0).
                let dk = pd
                    .at(n - k)
                    .shift(&crate::poly::Monomial::new(0, k as u32, 0))
                    .scale(&binomial(n, k));
                assert_eq!(p.at(n).coefficient_of(Var::Y, k as u32), dk);
            }
            assert_eq!(&sum_p, p.at(n));
            assert_eq!(&sum_v, v.at(n));
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("Q".parse::<Family>().is_err());
        assert!(Family::W.nth(0).is_err());
        assert_eq!(Family::W.nth(3).unwrap(), lit("4+2q"));
        assert_eq!(Family::P.nth(0).unwrap(), MPoly::one());
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }
}
