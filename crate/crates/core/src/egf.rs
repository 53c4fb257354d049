//! Truncated exponential generating functions with polynomial coefficients.
//!
//! A series `A = sum a_n z^n / n!` is stored as `a_0..=a_N`. Products are
//! binomial convolutions and `d/dz` is a left shift, so every identity below
//! is checked with integer arithmetic only.
//!
//! The closed forms involve `sqrt(q-1)`, `sqrt(q)` and fractional powers.
//! Each is checked through its logarithmic derivative with denominators
//! cleared, which leaves a polynomial identity between series. Together with
//! the value at `z = 0` such a first-order identity pins the series down, so
//! a zero residual is equivalent to the closed form. Every residual is
//! formed through the requested order, so identities involving `d/dz` read
//! one more input term than that.
//!
//! With `C = cos(z sqrt b)` and `S = sin(z sqrt b) / sqrt b` (both power
//! series in `b`), `C' = -b S` and `S' = C`:
//!
//! * `V(q,x,0,z) = e^{-xz/q} (C - S)^{-x/q}`, `b = q - 1`, gives
//!   `(C - S) V' = x S V`.
//! * `P(q,x,0,z) = e^{-xz} [k (sqrt q + A) / (sqrt q - A)]^{x / 2 sqrt q}` with
//!   `A = C + (q-1) S` and `A' = (q-1)(C - S)` gives
//!   `(q - A^2) P' = x [(q-1)(C - S) - (q - A^2)] P`.
//! * The runs series `R(q,z) = (q-1)/(q+1) * (q + A2)/(q - A2)` with
//!   `b = q^2 - 1` becomes `(q+1)(q - A2) R = (q-1)(q + A2)`.
//! * `V(q,x,y,z) = e^{xz(y - 1/q)} Wbar(q,z)^{x/q}` gives
//!   `q Wbar V' = x (qy - 1) Wbar V + x Wbar' V`.
//! * `P(q^2,x,y,z) = e^{xz(y-1)} R(q,z)^{x/2q}` gives
//!   `2q R P' = x [2q(y-1) R + R'] P`.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};
use crate::recurrence::{binomial, Families, PolySequence};
use crate::report::CheckReport;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<MPoly>,
}

impl EgfSeries {
    /// Series with `coeffs[n]` as its `z^n/n!` coefficient.
    pub fn new(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries::new(vec![MPoly::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::constant(MPoly::one(), order)
    }

    pub fn constant(c: MPoly, order: usize) -> Self {
        let mut s = EgfSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `e^{cz}`: coefficients `c^n`.
    pub fn exp_linear(c: &MPoly, order: usize) -> Self {
        let mut coeffs = vec![MPoly::one()];
        for n in 1..=order {
            let next = &coeffs[n - 1] * c;
            coeffs.push(next);
        }
        EgfSeries::new(coeffs)
    }

    /// `sum_{n=0}^{order} seq_{n + shift} z^n / n!`.
    pub fn from_sequence(seq: &PolySequence, shift: usize, order: usize) -> Self {
        EgfSeries::new((0..=order).map(|n| seq.at(n + shift).clone()).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> EgfSeries {
        assert!(order <= self.order());
        EgfSeries::new(self.coeffs[..=order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    /// Binomial convolution `c_n = sum_k C(n,k) a_k b_{n-k}`.
    pub fn product(&self, other: &EgfSeries) -> Result<EgfSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let coeffs = (0..=self.order())
            .map(|n| {
                let mut acc = MPoly::zero();
                for k in 0..=n {
                    if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                        continue;
                    }
                    acc += (&self.coeffs[k] * &other.coeffs[n - k]).scale(&binomial(n, k));
                }
                acc
            })
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// `d/dz`, one order shorter.
    pub fn dz(&self) -> Result<EgfSeries> {
        if self.order() == 0 {
            return Err(Error::Usage("cannot differentiate an order-0 series".into()));
        }
        Ok(EgfSeries::new(self.coeffs[1..].to_vec()))
    }

    /// Multiply every coefficient by a `z`-free polynomial.
    pub fn scale(&self, c: &MPoly) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    fn zip_with(&self, other: &EgfSeries, f: impl Fn(&MPoly, &MPoly) -> MPoly) -> EgfSeries {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        EgfSeries::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect())
    }

    /// Product that panics on order mismatch, for internal identities where
    /// the orders are arranged by construction.
    fn mul(&self, other: &EgfSeries) -> EgfSeries {
        self.product(other).expect("orders aligned")
    }
}

impl<'b> Add<&'b EgfSeries> for &EgfSeries {
    type Output = EgfSeries;
    fn add(self, rhs: &'b EgfSeries) -> EgfSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'b> Sub<&'b EgfSeries> for &EgfSeries {
    type Output = EgfSeries;
    fn sub(self, rhs: &'b EgfSeries) -> EgfSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// `(cos(z sqrt b), sin(z sqrt b)/sqrt b)` through order `order`.
pub fn trig_pair(b: &MPoly, order: usize) -> (EgfSeries, EgfSeries) {
    let mut c = EgfSeries::zero(order);
    let mut s = EgfSeries::zero(order);
    let neg_b = -b;
    let mut power = MPoly::one();
    for k in 0..=order / 2 {
        if 2 * k <= order {
            c.coeffs[2 * k] = power.clone();
        }
        if 2 * k < order {
            s.coeffs[2 * k + 1] = power.clone();
        }
        power = &power * &neg_b;
    }
    (c, s)
}

fn lit(s: &str) -> MPoly {
    s.parse().expect("literal polynomial")
}

fn residual_report(name: &str, residual: &EgfSeries, inputs: &str) -> CheckReport {
    let mut report = CheckReport::new(name, format!("orders 0..={}", residual.order()));
    for (n, r) in residual.coeffs().iter().enumerate() {
        if !r.is_zero() {
            report.mismatch(format!("order {n} (z^{n}/{n}!)"), "0", r);
        }
    }
    if report.passed() {
        report.detail(format!(
            "residual vanishes through order {}; inputs: {inputs}",
            residual.order()
        ));
    }
    report
}

/// A failing report when the families stop before index `needed`.
fn check_available(name: &str, fams: &Families, needed: usize, order: usize) -> Option<CheckReport> {
    if fams.n_max < needed {
        let mut r = CheckReport::new(name, format!("orders 0..={order}"));
        r.mismatch(
            "inputs",
            format!("families through n={needed}"),
            format!("n={}", fams.n_max),
        );
        Some(r)
    } else {
        None
    }
}

/// `(C - S) dV/dz = x S V` for `V = V(q,x,0,z)`, `b = q - 1`.
pub fn verify_closed_form_v(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-closed-form-V";
    if let Some(r) = check_available(name, fams, order + 1, order) {
        return r;
    }
    let v = EgfSeries::from_sequence(&fams.vder, 0, order + 1);
    let (c, s) = trig_pair(&lit("q-1"), order);
    let dv = v.dz().expect("order >= 1");
    let v = v.truncate(order);
    let lhs = (&c - &s).mul(&dv);
    let rhs = s.mul(&v).scale(&MPoly::x());
    residual_report(name, &(&lhs - &rhs), "V(q,x,0,z)")
}

/// `(q - A^2) dP/dz = x [(q-1)(C - S) - (q - A^2)] P` for `P = P(q,x,0,z)`,
/// `A = C + (q-1) S`, `b = q - 1`.
pub fn verify_closed_form_p(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-closed-form-P";
    if let Some(r) = check_available(name, fams, order + 1, order) {
        return r;
    }
    let m = order;
    let p = EgfSeries::from_sequence(&fams.pder, 0, order + 1);
    let b = lit("q-1");
    let (c, s) = trig_pair(&b, m);
    let a = &c + &s.scale(&b);
    let q_minus_a2 = &EgfSeries::constant(MPoly::q(), m) - &a.mul(&a);
    let dp = p.dz().expect("order >= 1");
    let p = p.truncate(m);
    let lhs = q_minus_a2.mul(&dp);
    let bracket = &(&c - &s).scale(&b) - &q_minus_a2;
    let rhs = bracket.mul(&p).scale(&MPoly::x());
    residual_report(name, &(&lhs - &rhs), "P(q,x,0,z)")
}

/// `(q+1)(q - C2 - (q^2-1) S2) R = (q-1)(q + C2 + (q^2-1) S2)` where
/// `R = sum R_{n+1}(q) z^n/n!` is the alternating-runs series.
pub fn verify_carlitz(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-runs-closed-form";
    if let Some(r) = check_available(name, fams, order + 1, order) {
        return r;
    }
    let r = EgfSeries::from_sequence(&fams.runs, 1, order);
    let b = lit("q^2-1");
    let (c2, s2) = trig_pair(&b, order);
    let a2 = &c2 + &s2.scale(&b);
    let q = EgfSeries::constant(MPoly::q(), order);
    let lhs = (&q - &a2).mul(&r).scale(&lit("q+1"));
    let rhs = (&q + &a2).scale(&lit("q-1"));
    residual_report(name, &(&lhs - &rhs), "R(q,z) from the runs recurrence")
}

/// `q Wbar dV/dz = x(qy - 1) Wbar V + x (dWbar/dz) V` with `V = V(q,x,y,z)`
/// and `Wbar = 1 + sum Wbar_n z^n/n!`.
pub fn verify_v_from_left_peaks(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-V-from-left-peaks";
    if let Some(r) = check_available(name, fams, order + 1, order) {
        return r;
    }
    let m = order;
    let v = EgfSeries::from_sequence(&fams.v, 0, order + 1);
    let mut wbar_coeffs = vec![MPoly::one()];
    wbar_coeffs.extend((1..=order + 1).map(|n| fams.wbar.at(n).clone()));
    let wbar = EgfSeries::new(wbar_coeffs);
    let dv = v.dz().expect("order >= 1");
    let dwbar = wbar.dz().expect("order >= 1");
    let v = v.truncate(m);
    let wbar = wbar.truncate(m);
    let lhs = wbar.mul(&dv).scale(&MPoly::q());
    let rhs = &wbar.mul(&v).scale(&lit("qxy-x")) + &dwbar.mul(&v).scale(&MPoly::x());
    residual_report(name, &(&lhs - &rhs), "V(q,x,y,z), Wbar(q,z)")
}

/// `2q R dP^/dz = x [2q(y-1) R + dR/dz] P^` with `P^` the series of
/// `P_n(q^2,x,y)` and `R` the alternating-runs series.
pub fn verify_p_from_runs(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-P-from-runs";
    if let Some(r) = check_available(name, fams, order + 2, order) {
        return r;
    }
    let m = order;
    let p_hat = EgfSeries::new((0..=order + 1).map(|n| fams.p.at(n).square_var(Var::Q)).collect());
    let r = EgfSeries::from_sequence(&fams.runs, 1, order + 1);
    let dp = p_hat.dz().expect("order >= 1");
    let dr = r.dz().expect("order >= 1");
    let p_hat = p_hat.truncate(m);
    let r = r.truncate(m);
    let lhs = r.mul(&dp).scale(&lit("2q"));
    let bracket = &r.scale(&lit("2qy-2q")) + &dr;
    let rhs = bracket.mul(&p_hat).scale(&MPoly::x());
    residual_report(name, &(&lhs - &rhs), "P(q^2,x,y,z), R(q,z)")
}

/// `P(q,x,y,z) = e^{xyz} P(q,x,0,z)` and the same for `V`.
pub fn verify_fix_factorization(fams: &Families, order: usize) -> CheckReport {
    let name = "egf-fixed-points";
    if let Some(r) = check_available(name, fams, order, order) {
        return r;
    }
    let exy = EgfSeries::exp_linear(&lit("xy"), order);
    let mut report = CheckReport::new(name, format!("orders 0..={order}"));
    for (label, full, der) in [("P", &fams.p, &fams.pder), ("V", &fams.v, &fams.vder)] {
        let lhs = EgfSeries::from_sequence(full, 0, order);
        let rhs = exy.mul(&EgfSeries::from_sequence(der, 0, order));
        for n in 0..=order {
            let diff = lhs.coeff(n) - rhs.coeff(n);
            if !diff.is_zero() {
                report.mismatch(format!("{label} order {n} (z^{n}/{n}!)"), "0", diff);
            }
        }
    }
    if report.passed() {
        report.detail(format!(
            "P and V factor through their derangement parts through order {order}"
        ));
    }
    report
}

/// The six series checks.
pub fn verify_all(fams: &Families, order: usize) -> Vec<CheckReport> {
    vec![
        verify_closed_form_v(fams, order),
        verify_closed_form_p(fams, order),
        verify_carlitz(fams, order),
        verify_v_from_left_peaks(fams, order),
        verify_p_from_runs(fams, order),
        verify_fix_factorization(fams, order),
    ]
}
