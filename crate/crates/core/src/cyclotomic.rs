//! Exact arithmetic in `Q(ζ_d)[X^±1, Y^±1]`.
//!
//! `ζ_d` is handled as the class of `x` in `Q[x]/Φ_d(x)`, with `Φ_d`
//! computed by dividing `x^d - 1` by `Φ_e` for every proper divisor `e`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::qlaurent::{rational, Rational};

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing
/// zeros.
pub type QPoly = Vec<Rational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by the nonzero `b`.
fn qpoly_divmod(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("nonzero").clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonzero") / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: u32) -> QPoly {
    assert!(d >= 1);
    let mut p = vec![Rational::zero(); d as usize + 1];
    p[0] = rational(-1);
    p[d as usize] = rational(1);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let (q, r) = qpoly_divmod(&p, &cyclotomic_polynomial(e));
        debug_assert!(r.is_empty());
        p = q;
    }
    p
}

/// An element of `Q(ζ_d)`, stored reduced modulo `Φ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    d: u32,
    coeffs: QPoly,
}

impl CycloElem {
    pub fn zero(d: u32) -> Self {
        CycloElem { d, coeffs: Vec::new() }
    }

    pub fn from_rational(d: u32, c: Rational) -> Self {
        Self::reduced(d, vec![c])
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        let e = k.rem_euclid(d as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::reduced(d, v)
    }

    fn reduced(d: u32, mut coeffs: QPoly) -> Self {
        trim(&mut coeffs);
        let (_, r) = qpoly_divmod(&coeffs, &cyclotomic_polynomial(d));
        CycloElem { d, coeffs: r }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// The element as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.d, rhs.d, "mixing cyclotomic fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in rhs.coeffs.iter().enumerate() {
            out[i] += x;
        }
        trim(&mut out);
        CycloElem { d: self.d, coeffs: out }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            d: self.d,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.d, rhs.d, "mixing cyclotomic fields");
        CycloElem::reduced(self.d, qpoly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        f.write_str("(")?;
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{e}")?,
            }
        }
        f.write_str(")")
    }
}

/// A Laurent polynomial in `X`, `Y` with coefficients in `Q(ζ_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    d: u32,
    terms: BTreeMap<(i32, i32), CycloElem>,
}

impl BivariatePoly {
    pub fn zero(d: u32) -> Self {
        BivariatePoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    /// `c · X^a · Y^b`.
    pub fn monomial(c: CycloElem, a: i32, b: i32) -> Self {
        let mut p = BivariatePoly::zero(c.d());
        p.add_term((a, b), c);
        p
    }

    pub fn rational_monomial(d: u32, c: Rational, a: i32, b: i32) -> Self {
        Self::monomial(CycloElem::from_rational(d, c), a, b)
    }

    pub fn constant(d: u32, c: Rational) -> Self {
        Self::rational_monomial(d, c, 0, 0)
    }

    pub fn x(d: u32) -> Self {
        Self::rational_monomial(d, Rational::one(), 1, 0)
    }

    pub fn y(d: u32) -> Self {
        Self::rational_monomial(d, Rational::one(), 0, 1)
    }

    fn add_term(&mut self, key: (i32, i32), c: CycloElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn coeff(&self, a: i32, b: i32) -> CycloElem {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| CycloElem::zero(self.d))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &CycloElem)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        let mut out = BivariatePoly::zero(self.d);
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        assert_eq!(self.d, rhs.d, "mixing cyclotomic fields");
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            d: self.d,
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        assert_eq!(self.d, rhs.d, "mixing cyclotomic fields");
        let mut out = BivariatePoly::zero(self.d);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if a != 0 {
                write!(f, "*X^{a}")?;
            }
            if b != 0 {
                write!(f, "*Y^{b}")?;
            }
        }
        Ok(())
    }
}
