//! Exact coefficient rings.
//!
//! Everything downstream is generic over [`Coeff`]. Two rings implement it:
//! [`Rational`] (arbitrary precision, always in lowest terms) and
//! [`ParamPoly`], univariate polynomials over the rationals in a formal
//! parameter that stands for the exponent `phi` or the weight `beta`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, normalized after every operation.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient with integer top; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// Parse the textual form `-?digits(/digits)?`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let valid = {
        let body = t.strip_prefix('-').unwrap_or(t);
        let mut parts = body.splitn(2, '/');
        let num_ok = parts
            .next()
            .is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
        let den_ok = parts
            .next()
            .is_none_or(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
        num_ok && den_ok
    };
    if !valid {
        return Err(Error::Precondition(format!("malformed rational {text:?}")));
    }
    let r = Rational::from_str(t).map_err(|_| Error::DivisionByZero)?;
    Ok(r)
}

/// A commutative ring containing the rationals.
///
/// Division is partial: [`Coeff::inverse`] answers `None` for elements that
/// have no inverse in the ring.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self;

    fn inverse(&self) -> Option<Self>;

    /// The constant (parameter-free) part, when it is a rational.
    fn as_rational(&self) -> Option<Rational>;

    fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = other
            .inverse()
            .ok_or_else(|| Error::NotInvertible(other.to_string()))?;
        Ok(self.clone() * &inv)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Coeff for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Univariate polynomial over the rationals in one formal parameter.
///
/// Coefficient `i` multiplies `t^i`. Trailing zeros are never stored, so the
/// zero polynomial is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    coeffs: Vec<Rational>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The parameter itself, `t`.
    pub fn var() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t + c`.
    pub fn var_plus(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Substitute `t -> t + shift`.
    pub fn shift(&self, shift: &Rational) -> Self {
        let lin = Self::var_plus(shift.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc * &lin + &Self::constant(c.clone())
        })
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Render with a chosen variable name, e.g. `phi^3 - 3*phi^2 + 2*phi`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

/// Falling factorial `t (t-1) ... (t-q+1)`; the empty product for `q = 0`.
pub fn falling_factorial(t: &ParamPoly, q: usize) -> ParamPoly {
    (0..q).fold(ParamPoly::one(), |acc, i| {
        acc * &t.clone().add_const(&-int(i as i64))
    })
}

/// Falling factorial of a rational.
pub fn falling_factorial_rat(t: &Rational, q: usize) -> Rational {
    (0..q).fold(Rational::one(), |acc, i| acc * (t - int(i as i64)))
}

impl ParamPoly {
    fn add_const(mut self, c: &Rational) -> Self {
        if self.coeffs.is_empty() {
            self.coeffs.push(Rational::zero());
        }
        self.coeffs[0] += c;
        Self::new(self.coeffs)
    }

    pub fn eval_param(&self, v: &Rational) -> Rational {
        self.eval(v)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("phi"))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({})", self.render("t"))
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl<'a> Add<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;

    fn add(mut self, rhs: &'a ParamPoly) -> ParamPoly {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Self::new(self.coeffs)
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;

    fn add(self, rhs: ParamPoly) -> ParamPoly {
        self + &rhs
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        *self = std::mem::take(self) + rhs;
    }
}

impl<'a> Sub<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;

    fn sub(mut self, rhs: &'a ParamPoly) -> ParamPoly {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Self::new(self.coeffs)
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;

    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self - &rhs
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        *self = std::mem::take(self) - rhs;
    }
}

impl<'a> Mul<&'a ParamPoly> for ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: &'a ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        self * &rhs
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Coeff for ParamPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Self::constant(c.recip())),
            _ => None,
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}
