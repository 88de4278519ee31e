//! Exact multivariate polynomials over the Gaussian rationals `Q(i)`.
//!
//! Variables are written `d1..dn` in the text format; variable `k` stands for
//! the covector coordinate dual to `∂/∂x_k`. Monomials use dense exponent
//! vectors since the ambient dimension is small.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
}

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        GaussRational::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRational::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRational::one(),
            1 => GaussRational::i(),
            2 => GaussRational::from_int(-1),
            _ => -GaussRational::i(),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl<'a> Div<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    /// Panics on division by zero.
    fn div(self, rhs: &GaussRational) -> GaussRational {
        self * &rhs.inv().expect("division by zero in Q(i)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                write_imag(f, &self.im, true)
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational, with_sign: bool) -> fmt::Result {
    let sign = if im.is_negative() {
        "-"
    } else if with_sign {
        "+"
    } else {
        ""
    };
    let a = im.abs();
    if a.is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{a}*i")
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Exponent vector of a monomial in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k)
    }
}

/// Total degree with `-∞` for the zero polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    /// `self ≤ bound`, vacuous for `-∞`.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(d) => i64::from(d) <= bound,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `nvars` variables with `Q(i)` coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussRational>,
}

impl GaussPoly {
    pub fn zero(nvars: usize) -> Self {
        GaussPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        GaussPoly::constant(nvars, GaussRational::one())
    }

    pub fn constant(nvars: usize, c: GaussRational) -> Self {
        GaussPoly::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: GaussRational) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GaussPoly { nvars, terms }
    }

    /// The coordinate function `ξ_k` (0-based).
    pub fn var(nvars: usize, k: usize) -> Self {
        GaussPoly::monomial(nvars, Monomial::var(nvars, k), GaussRational::one())
    }

    /// `ξ₁² + ... + ξₙ²`.
    pub fn sum_of_squares(nvars: usize) -> Self {
        let mut p = GaussPoly::zero(nvars);
        for k in 0..nvars {
            let mut e = vec![0; nvars];
            e[k] = 2;
            p.add_term(Monomial(e), GaussRational::one());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, GaussRational)>) -> Self {
        let mut p = GaussPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussRational) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Degree {
        self.terms.keys().map(|m| Degree::Finite(m.degree())).max().unwrap_or(Degree::NegInfinity)
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> GaussPoly {
        GaussPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// `Some(d)` if every term has degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn constant_term(&self) -> GaussRational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn eval(&self, point: &[GaussRational]) -> Result<GaussRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength { expected: self.nvars, got: point.len() });
        }
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Evaluation at a real rational point. Accumulates over a common
    /// denominator so only one reduction happens at the end.
    pub fn eval_real(&self, point: &[Rational]) -> Result<GaussRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength { expected: self.nvars, got: point.len() });
        }
        if self.terms.is_empty() {
            return Ok(GaussRational::zero());
        }
        let den = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums: Vec<BigInt> = point.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let coeff_den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()).lcm(c.im.denom()));
        let maxdeg = self.terms.keys().map(Monomial::degree).max().unwrap_or(0) as usize;
        let mut den_pows = vec![BigInt::one()];
        for k in 1..=maxdeg {
            den_pows.push(&den_pows[k - 1] * &den);
        }
        let mut powers: Vec<Vec<BigInt>> = nums.iter().map(|a| vec![BigInt::one(), a.clone()]).collect();
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (m, c) in &self.terms {
            let mut t = den_pows[maxdeg - m.degree() as usize].clone();
            for (k, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[k].len() <= e {
                    let next = powers[k].last().unwrap() * &nums[k];
                    powers[k].push(next);
                }
                if e > 0 {
                    t *= &powers[k][e];
                }
            }
            if !c.re.is_zero() {
                re += c.re.numer() * (&coeff_den / c.re.denom()) * &t;
            }
            if !c.im.is_zero() {
                im += c.im.numer() * (&coeff_den / c.im.denom()) * &t;
            }
        }
        let total = coeff_den * &den_pows[maxdeg];
        Ok(GaussRational::new(Rational::new(re, total.clone()), Rational::new(im, total)))
    }

    /// Coefficient-wise complex conjugate, so `conj(p)(ξ) = conj(p(ξ))` at real `ξ`.
    pub fn conj(&self) -> GaussPoly {
        GaussPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn scale(&self, c: &GaussRational) -> GaussPoly {
        if c.is_zero() {
            return GaussPoly::zero(self.nvars);
        }
        GaussPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &GaussRational) -> GaussPoly {
        if c.is_zero() {
            return GaussPoly::zero(self.nvars);
        }
        GaussPoly { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    fn check(&self, other: &GaussPoly) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::DimensionMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &GaussPoly) -> Result<GaussPoly, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GaussPoly) -> Result<GaussPoly, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &GaussPoly) -> Result<GaussPoly, PolyError> {
        self.check(other)?;
        let mut out = GaussPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> GaussPoly {
        let mut acc = GaussPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Terms sorted by descending total degree, then descending exponents.
    fn display_terms(&self) -> Vec<(&Monomial, &GaussRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

impl<'a> Add<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    /// Panics if the variable counts differ; see [`GaussPoly::checked_add`].
    fn add(self, rhs: &GaussPoly) -> GaussPoly {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl<'a> Sub<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    fn sub(self, rhs: &GaussPoly) -> GaussPoly {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl<'a> Mul<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    fn mul(self, rhs: &GaussPoly) -> GaussPoly {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &GaussPoly {
    type Output = GaussPoly;
    fn neg(self) -> GaussPoly {
        self.scale(&GaussRational::from_int(-1))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (k, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "d{}", k + 1)?;
        } else {
            write!(f, "d{}^{}", k + 1, e)?;
        }
    }
    Ok(())
}

/// Renders in the input grammar, e.g. `d1^2 - 3/2*i*d1*d2 + (1+i)`.
impl fmt::Display for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.display_terms().into_iter().enumerate() {
            // pull a leading minus out of real or purely imaginary coefficients
            let (neg, mag) = if (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = !m.is_one();
            if mag.is_one() {
                if mono {
                    write_monomial(f, m)?;
                } else {
                    write!(f, "1")?;
                }
                continue;
            }
            if !mag.re.is_zero() && !mag.im.is_zero() {
                write!(f, "({mag})")?;
            } else {
                write!(f, "{mag}")?;
            }
            if mono {
                write!(f, "*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl Serialize for GaussPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, k: usize) -> GaussPoly {
        GaussPoly::var(n, k)
    }

    fn ci() -> GaussPoly {
        GaussPoly::constant(4, GaussRational::i())
    }

    #[test]
    fn difference_of_squares_over_gaussian_rationals() {
        let a = &x(4, 0) + &(&ci() * &x(4, 1));
        let b = &x(4, 0) - &(&ci() * &x(4, 1));
        let expected = &x(4, 0).pow(2) + &x(4, 1).pow(2);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn additive_identity_and_binomial() {
        let p = &x(3, 0) + &x(3, 2).pow(3);
        assert_eq!(&p + &GaussPoly::zero(3), p);
        let s = (&x(2, 0) + &x(2, 1)).pow(2);
        let mut expected = GaussPoly::zero(2);
        expected.add_term(Monomial(vec![2, 0]), GaussRational::one());
        expected.add_term(Monomial(vec![1, 1]), GaussRational::from_int(2));
        expected.add_term(Monomial(vec![0, 2]), GaussRational::one());
        assert_eq!(s, expected);
    }

    #[test]
    fn mismatched_arity_is_an_error() {
        let err = x(2, 0).checked_mul(&x(3, 0)).unwrap_err();
        assert_eq!(err, PolyError::DimensionMismatch { left: 2, right: 3 });
        assert!(x(2, 0).checked_add(&x(3, 0)).is_err());
    }

    #[test]
    fn degrees() {
        let p = &(&x(3, 0).pow(2) * &x(3, 1)) + &x(3, 2);
        assert_eq!(p.total_degree(), Degree::Finite(3));
        assert_eq!(GaussPoly::zero(3).total_degree(), Degree::NegInfinity);
        assert_eq!(GaussPoly::constant(3, GaussRational::from_int(5)).total_degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Degree::NegInfinity.at_most(-7));
    }

    #[test]
    fn homogeneous_components() {
        let p = &x(1, 0).pow(2) + &x(1, 0);
        assert_eq!(p.homogeneous_component(2), x(1, 0).pow(2));
        assert!(p.homogeneous_component(3).is_zero());
        let q = &(&x(2, 0) * &x(2, 1)) + &x(2, 1).pow(2);
        assert_eq!(q.homogeneous_component(2), q);
        assert_eq!(q.homogeneous_degree(), Some(2));
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn evaluation() {
        let p = &x(4, 0) + &(&ci() * &x(4, 1));
        let pt = [1, 1, 0, 0].map(GaussRational::from_int);
        assert_eq!(p.eval(&pt).unwrap(), GaussRational::new(rat(1, 1), rat(1, 1)));

        let lap = GaussPoly::sum_of_squares(2);
        let pt = [GaussRational::one(), GaussRational::i()];
        assert!(lap.eval(&pt).unwrap().is_zero());

        let c = &lap + &GaussPoly::constant(2, GaussRational::new(rat(3, 2), rat(-1, 1)));
        let origin = [GaussRational::zero(), GaussRational::zero()];
        assert_eq!(c.eval(&origin).unwrap(), c.constant_term());

        assert_eq!(lap.eval(&[GaussRational::one()]).unwrap_err(), PolyError::PointLength { expected: 2, got: 1 });
    }

    #[test]
    fn display_uses_input_grammar() {
        let p = &(&x(2, 0).pow(2) - &(&GaussPoly::constant(2, GaussRational::new(rat(0, 1), rat(3, 2))) * &x(2, 1)))
            + &GaussPoly::constant(2, GaussRational::new(rat(1, 1), rat(1, 1)));
        assert_eq!(p.to_string(), "d1^2 - 3/2*i*d2 + (1+i)");
        assert_eq!(GaussPoly::zero(2).to_string(), "0");
        assert_eq!((-&x(2, 1)).to_string(), "-d2");
    }

    #[test]
    fn gaussian_rational_field_ops() {
        let z = GaussRational::new(rat(3, 4), rat(-2, 5));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussRational::one());
        assert_eq!(z.conj().conj(), z);
        assert_eq!((&z * &z.conj()).im, rat(0, 1));
        assert_eq!(GaussRational::i_pow(-1), -GaussRational::i());
        assert_eq!(GaussRational::i_pow(6), GaussRational::from_int(-1));
        assert!(GaussRational::zero().inv().is_none());
    }
}
