//! Sparse polynomials in `q`, `x`, `y` with arbitrary-precision integer
//! coefficients.
//!
//! The text form groups terms by the power of `x`, which is how the
//! cycle-statistic polynomials read most naturally:
//!
//! ```text
//! (1+5q)x + (3+4y+4qy)x^2 + 6x^3y^2 + x^4y^4
//! ```
//!
//! The parser accepts that form and, more generally, any sum of products of
//! integers, variables, powers and parenthesized sub-expressions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the three indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::X, Var::Y];

    pub fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::X => 'x',
            Var::Y => 'y',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent triple `q^q x^x y^y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub q: u32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, x: 0, y: 0 };

    pub const fn new(q: u32, x: u32, y: u32) -> Self {
        Monomial { q, x, y }
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::Q => self.q,
            Var::X => self.x,
            Var::Y => self.y,
        }
    }

    fn exp_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::Q => &mut self.q,
            Var::X => &mut self.x,
            Var::Y => &mut self.y,
        }
    }

    pub fn with_exp(mut self, v: Var, e: u32) -> Self {
        *self.exp_mut(v) = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.q + self.x + self.y
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let add = |a: u32, b: u32| a.checked_add(b).expect("monomial exponent overflow");
        Monomial {
            q: add(self.q, other.q),
            x: add(self.x, other.x),
            y: add(self.y, other.y),
        }
    }
}

/// How a variable is rewritten by [`MPoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `v -> v^2`
    Square(Var),
    /// `v -> c`
    Constant(Var, BigInt),
}

/// Polynomial in `q, x, y` over the integers. Zero coefficients are never
/// stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(1, Monomial::ONE.with_exp(v, 1))
    }

    pub fn q() -> Self {
        MPoly::var(Var::Q)
    }

    pub fn x() -> Self {
        MPoly::var(Var::X)
    }

    pub fn y() -> Self {
        MPoly::var(Var::Y)
    }

    /// Single term `c * m`.
    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// Univariate polynomial `sum coeffs[i] * v^i`.
    pub fn from_coeffs<I, C>(v: Var, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(Monomial::ONE.with_exp(v, i as u32), c.into());
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(q, x, y)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> MPoly {
        self.scale(&BigInt::from(c))
    }

    /// Multiply by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.times(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * BigInt::from(e));
            }
        }
        out
    }

    /// Ring homomorphism fixing the other two variables.
    pub fn substitute(&self, rule: &Substitution) -> MPoly {
        match rule {
            Substitution::Square(v) => {
                let mut out = MPoly::zero();
                for (m, c) in &self.terms {
                    let e = m.exp(*v).checked_mul(2).expect("monomial exponent overflow");
                    out.add_term(m.with_exp(*v, e), c.clone());
                }
                out
            }
            Substitution::Constant(v, value) => {
                let mut out = MPoly::zero();
                let mut powers: Vec<BigInt> = vec![BigInt::one()];
                for (m, c) in &self.terms {
                    let e = m.exp(*v) as usize;
                    while powers.len() <= e {
                        let next = powers.last().unwrap() * value;
                        powers.push(next);
                    }
                    out.add_term(m.with_exp(*v, 0), c * &powers[e]);
                }
                out
            }
        }
    }

    /// Shorthand for a constant substitution.
    pub fn eval_var(&self, v: Var, value: impl Into<BigInt>) -> MPoly {
        self.substitute(&Substitution::Constant(v, value.into()))
    }

    pub fn square_var(&self, v: Var) -> MPoly {
        self.substitute(&Substitution::Square(v))
    }

    /// Value at a point of `Z^3`.
    pub fn evaluate(&self, q: i64, x: i64, y: i64) -> BigInt {
        self.eval_var(Var::Q, q)
            .eval_var(Var::X, x)
            .eval_var(Var::Y, y)
            .constant_term()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    /// Coefficient of `v^e`, as a polynomial in the other two variables.
    pub fn coefficient_of(&self, v: Var, e: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                out.add_term(m.with_exp(v, 0), c.clone());
            }
        }
        out
    }

    /// Largest exponent of `v`; `None` stands for the degree of the zero
    /// polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Does the polynomial mention only `v`?
    pub fn is_univariate_in(&self, v: Var) -> bool {
        self.terms
            .keys()
            .all(|m| Var::ALL.iter().all(|&w| w == v || m.exp(w) == 0))
    }

    /// Dense coefficient list of a polynomial in `v` alone. The zero
    /// polynomial yields an empty list.
    ///
    /// Panics if another variable occurs.
    pub fn univariate_coeffs(&self, v: Var) -> Vec<BigInt> {
        assert!(self.is_univariate_in(v), "polynomial {self} is not univariate in {v}");
        let len = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); len];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize] = c.clone();
        }
        out
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl SubAssign for MPoly {
    fn sub_assign(&mut self, rhs: MPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl<'b> Add<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'b MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl<'b> Sub<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'b MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= rhs;
        self
    }
}

impl<'b> Mul<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'b MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

// ---- printing ----

fn push_var(out: &mut String, v: Var, e: u32) {
    match e {
        0 => {}
        1 => out.push(v.symbol()),
        _ => {
            out.push(v.symbol());
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// `|c|` followed by the monomial, with unit coefficients elided.
fn unsigned_term(c: &BigInt, m: &Monomial) -> String {
    let mut s = String::new();
    let mag = c.abs();
    if *m == Monomial::ONE || !mag.is_one() {
        s.push_str(&mag.to_string());
    }
    push_var(&mut s, Var::Q, m.q);
    push_var(&mut s, Var::X, m.x);
    push_var(&mut s, Var::Y, m.y);
    s
}

/// Within an `x`-group: ascending total degree, ties with more `q` first.
fn group_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.q.cmp(&a.q))
        .then_with(|| a.y.cmp(&b.y))
}

fn join_signed(items: &[(&Monomial, &BigInt)]) -> String {
    let mut s = String::new();
    for (i, (m, c)) in items.iter().enumerate() {
        if c.is_negative() {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        s.push_str(&unsigned_term(c, m));
    }
    s
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut groups: BTreeMap<u32, Vec<(&Monomial, &BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.x).or_default().push((m, c));
        }
        let mut out = String::new();
        for (idx, (xe, mut items)) in groups.into_iter().enumerate() {
            items.sort_by(|a, b| group_order(a.0, b.0));
            let single = items.len() == 1;
            let negative_single = single && items[0].1.is_negative();
            if idx > 0 {
                out.push_str(if negative_single { " - " } else { " + " });
            } else if negative_single {
                out.push('-');
            }
            if single {
                out.push_str(&unsigned_term(items[0].1, items[0].0));
            } else if xe == 0 {
                out.push_str(&join_signed(&items));
            } else {
                let inner: Vec<(Monomial, &BigInt)> = items.iter().map(|(m, c)| (m.with_exp(Var::X, 0), *c)).collect();
                let refs: Vec<(&Monomial, &BigInt)> = inner.iter().map(|(m, c)| (m, *c)).collect();
                out.push('(');
                out.push_str(&join_signed(&refs));
                out.push(')');
                push_var(&mut out, Var::X, xe);
            }
        }
        f.write_str(&out)
    }
}

// ---- parsing ----

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            if negate {
                acc -= t;
            } else {
                acc += t;
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_digit() || c == b'(' || matches!(c, b'q' | b'x' | b'y')
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if Self::starts_factor(c) => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(MPoly::constant(self.integer()?)),
            Some(b'q') => {
                self.pos += 1;
                Ok(MPoly::q())
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(MPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(MPoly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}
