//! Truncated formal power series.
//!
//! A [`Series`] carries coefficients for exponents `0..order` and nothing
//! more; binary operations keep the smaller of the two orders. Operations
//! that provably know more (multiplication by `x^k`, integration) raise the
//! order, and those that know less (division by `x^k`, differentiation)
//! lower it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{int, Coeff, ParamPoly, Rational};

#[derive(Clone)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Pads with zeros or truncates so that exactly `order` coefficients
    /// are carried.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order, C::zero());
        Self { coeffs }
    }

    pub fn try_new(coeffs: Vec<C>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self::new(coeffs, order))
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    /// `1 / (1 - c x)`.
    pub fn geometric(c: C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut p = C::one();
        for _ in 0..order {
            coeffs.push(p.clone());
            p = p * &c;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `[x^n]`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn checked_coeff(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::InsufficientOrder {
            needed: n + 1,
            available: self.order(),
        })
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// Multiply by `x^k`; the result is known to `order + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `x^k`; the leading `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.order() <= k {
            return Err(Error::InsufficientOrder {
                needed: k + 1,
                available: self.order(),
            });
        }
        if !self.coeffs[..k].iter().all(Zero::is_zero) {
            return Err(Error::Precondition(format!(
                "series is not divisible by x^{k}"
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `a(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// `a(x^k)`, known to order `k * order`.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k > 0, "stretch factor must be positive");
        let mut coeffs = vec![C::zero(); k * self.order()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    /// `a(c x)`.
    pub fn dilate(&self, c: &C) -> Self {
        let mut p = C::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            coeffs.push(a.clone() * &p);
            p = p * c;
        }
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.order() <= 1 {
            return Self::zero(1);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&int(i as i64)))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(C::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&int(i as i64 + 1).recip()));
        }
        Self { coeffs }
    }

    fn constant_inverse(&self) -> Result<C> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        c0.inverse()
            .ok_or_else(|| Error::NotInvertible(c0.to_string()))
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Exact formal quotient `self / rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let order = self.order().min(rhs.order());
        let inv0 = rhs.constant_inverse()?;
        let mut q: Vec<C> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc - &(rhs.coeffs[k].clone() * &q[n - k]);
            }
            q.push(acc * &inv0);
        }
        Ok(Self { coeffs: q })
    }

    /// `self(inner(x))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: inner.coeffs[0].to_string(),
            });
        }
        // a_i inner^i starts at degree v*i, so terms of `self` beyond its
        // order only matter from degree v*order on.
        let v = inner.valuation().unwrap_or(inner.order()).max(1);
        let order = inner.order().min(self.order().saturating_mul(v));
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c;
        }
        Ok(acc)
    }

    /// Compositional inverse: `g` with `self(g(x)) = x`.
    ///
    /// Solved one coefficient at a time. `[x^n] g^k` for `k >= 2` only
    /// involves `g_1 .. g_{n-1}`, so every power is extended column by column
    /// and `g_n` is isolated from the linear term.
    pub fn revert(&self) -> Result<Self> {
        let order = self.order();
        if order < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotRevertible);
        }
        let inv1 = self.coeffs[1].inverse().ok_or(Error::NotRevertible)?;
        // powers[k][n] = [x^n] g^k, for k = 1..order-1
        let mut powers: Vec<Vec<C>> = vec![vec![C::zero(); order]; order];
        let mut g = vec![C::zero(); order];
        for n in 1..order {
            let mut rhs = if n == 1 { C::one() } else { C::zero() };
            for k in 2..=n {
                let mut acc = C::zero();
                for j in 1..=(n + 1 - k) {
                    if g[j].is_zero() {
                        continue;
                    }
                    acc = acc + &(g[j].clone() * &powers[k - 1][n - j]);
                }
                powers[k][n] = acc;
                rhs = rhs - &(self.coeffs[k].clone() * &powers[k][n]);
            }
            g[n] = rhs * &inv1;
            powers[1][n] = g[n].clone();
        }
        Ok(Self { coeffs: g })
    }

    fn require_unit_constant(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        Ok(())
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let order = self.order();
        let half = int(2).recip();
        let mut s: Vec<C> = Vec::with_capacity(order);
        s.push(C::one());
        for n in 1..order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = acc - &(s[i].clone() * &s[n - i]);
            }
            s.push(acc.scale(&half));
        }
        Ok(Self { coeffs: s })
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let quotient = self
            .derivative()
            .div(&self.truncate(self.order().max(2) - 1))?;
        Ok(quotient.integral().truncate(self.order()))
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut e: Vec<C> = Vec::with_capacity(order);
        e.push(C::one());
        for n in 1..order {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + &(self.coeffs[k].scale(&int(k as i64)) * &e[n - k]);
            }
            e.push(acc.scale(&int(n as i64).recip()));
        }
        Ok(Self { coeffs: e })
    }

    /// `exp(e * log self)` for a rational exponent.
    pub fn pow_rat(&self, e: &Rational) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow_int(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl Series<Rational> {
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    /// `self^t` with `t` a formal parameter: coefficient `n` is a polynomial
    /// in `t` of degree at most `n`.
    pub fn pow_param(&self) -> Result<Series<ParamPoly>> {
        let log = self.log()?;
        let t = ParamPoly::var();
        log.map(|c| t.scale(c)).exp()
    }

    /// Coerce into the parametric ring.
    pub fn to_param(&self) -> Series<ParamPoly> {
        self.map(|c| ParamPoly::constant(c.clone()))
    }
}

impl Series<ParamPoly> {
    /// Specialize the parameter to a rational value.
    pub fn eval_param(&self, v: &Rational) -> Series<Rational> {
        self.map(|p| p.eval(v))
    }
}

impl<C: Coeff> PartialEq for Series<C> {
    /// Coefficientwise equality up to the common order.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order())
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;

    fn add(self, rhs: &Series<C>) -> Series<C> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;

    fn sub(self, rhs: &Series<C>) -> Series<C> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;

    fn neg(self) -> Series<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;

    /// Truncated Cauchy product.
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order];
        for (i, a) in self.coeffs[..order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Series { coeffs: out }
    }
}

/// The Catalan series `C = 1 + x C^2`, solved coefficientwise.
pub fn catalan_series(order: usize) -> Series<Rational> {
    let mut c: Vec<Rational> = Vec::with_capacity(order);
    for n in 0..order {
        if n == 0 {
            c.push(int(1));
            continue;
        }
        let v = (0..n).fold(Rational::zero(), |acc, i| acc + &c[i] * &c[n - 1 - i]);
        c.push(v);
    }
    Series::new(c, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use num_traits::One;
    use proptest::prelude::*;

    fn ints(s: &Series<Rational>) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "{c} is not an integer");
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn products_and_quotients() {
        let a = Series::from_ints(&[1, 1], 5);
        assert_eq!(ints(&(&a * &a)), [1, 2, 1, 0, 0]);
        let one_minus_x = Series::from_ints(&[1, -1], 6);
        assert_eq!(ints(&Series::one(6).div(&one_minus_x).unwrap()), [1; 6]);
        assert_eq!(
            Series::from_ints(&[0, 1], 4).recip(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn catalan_square() {
        // C^2 = (C - 1)/x, so [x^n]C^2 = C_{n+1}
        let c = catalan_series(12);
        let sq = &c * &c;
        let shifted = (&c - &Series::one(12)).shift_down(1).unwrap();
        assert_eq!(sq.truncate(11), shifted);
        assert_eq!(ints(&sq)[..5], [1, 2, 5, 14, 42]);
    }

    #[test]
    fn composition() {
        let n = 12;
        let geom = Series::geometric(int(1), n);
        // x / (1 + x)
        let inner = Series::x(n).div(&Series::from_ints(&[1, 1], n)).unwrap();
        assert_eq!(ints(&geom.compose(&inner).unwrap()), {
            let mut v = vec![0; n];
            v[0] = 1;
            v[1] = 1;
            v
        });
        // g = A(xg) with A = 1/(1-x) and g = C
        let c = catalan_series(16);
        let xc = c.shift_up(1).truncate(16);
        assert_eq!(Series::geometric(int(1), 16).compose(&xc).unwrap(), c);
        // composing with the zero series leaves the constant term
        let a = Series::from_ints(&[3, 1, 4, 1, 5], 5);
        assert_eq!(ints(&a.compose(&Series::zero(5)).unwrap()), [3, 0, 0, 0, 0]);
        assert!(matches!(
            a.compose(&Series::one(5)),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn reversion() {
        let n = 16;
        let x = Series::x(n);
        // x/(1-x) reverts to x/(1+x)
        let f = x.div(&Series::from_ints(&[1, -1], n)).unwrap();
        let g = f.revert().unwrap();
        assert_eq!(g, x.div(&Series::from_ints(&[1, 1], n)).unwrap());
        assert_eq!(f.compose(&g).unwrap(), x);
        // x C(x) reverts to x - x^2
        let xc = catalan_series(n).shift_up(1).truncate(n);
        assert_eq!(ints(&xc.revert().unwrap())[..3], [0, 1, -1]);
        assert!(xc.revert().unwrap().coeffs()[3..].iter().all(Zero::is_zero));
        assert_eq!(x.revert().unwrap(), x);
        assert_eq!(
            Series::from_ints(&[1, 1], 4).revert(),
            Err(Error::NotRevertible)
        );
        assert_eq!(
            Series::from_ints(&[0, 0, 1], 4).revert(),
            Err(Error::NotRevertible)
        );
    }

    #[test]
    fn sqrt_log_exp() {
        let a = Series::from_ints(&[1, 0, -4], 12);
        let s = a.sqrt().unwrap();
        assert_eq!(&s * &s, a);
        assert_eq!(ints(&s)[..8], [1, 0, -2, 0, -2, 0, -4, 0]);

        let l = Series::geometric(int(1), 8).log().unwrap();
        let expected: Vec<Rational> = (0..8)
            .map(|i| if i == 0 { int(0) } else { rat(1, i) })
            .collect();
        assert_eq!(l, Series::new(expected, 8));
        assert_eq!(l.exp().unwrap(), Series::geometric(int(1), 8));
        assert_eq!(Series::<Rational>::zero(6).exp().unwrap(), Series::one(6));

        assert!(Series::from_ints(&[4, 1], 5).sqrt().is_err());
        assert!(Series::from_ints(&[2, 1], 5).log().is_err());
        assert!(Series::from_ints(&[1, 1], 5).exp().is_err());
    }

    #[test]
    fn rational_and_param_powers() {
        let a = Series::from_ints(&[1, -4], 10);
        let r = a.pow_rat(&rat(1, 2)).unwrap();
        assert_eq!(&r * &r, a);
        assert_eq!(ints(&r)[..4], [1, -2, -2, -4]);

        // (1/(1-x))^t has [x^n] = t(t+1)...(t+n-1)/n!
        let p = Series::geometric(int(1), 8).pow_param().unwrap();
        for n in 0..8 {
            let mut rising = ParamPoly::one();
            for i in 0..n {
                rising = rising * &ParamPoly::var_plus(int(i as i64));
            }
            let expected = rising.scale(&Rational::from_integer(crate::ring::factorial(n)).recip());
            assert_eq!(p.coeff(n), expected);
        }
        for k in 1..4 {
            let direct = Series::geometric(int(1), 8).pow_int(k);
            assert_eq!(p.eval_param(&int(k as i64)), direct);
        }
    }

    #[test]
    fn order_bookkeeping() {
        let a = Series::from_ints(&[1, 2, 3], 3);
        let b = Series::from_ints(&[1, 1], 5);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.shift_up(2).order(), 5);
        assert_eq!(a.shift_up(2).shift_down(2).unwrap(), a);
        assert_eq!(a.derivative().order(), 2);
        assert_eq!(a.integral().order(), 4);
        assert_eq!(a.stretch(2).order(), 6);
        assert!(Series::<Rational>::try_new(vec![], 0).is_err());
    }

    fn unit_series(len: usize) -> impl Strategy<Value = Series<Rational>> {
        prop::collection::vec(-4i64..5, len - 1).prop_map(move |mut v| {
            v.insert(0, 1);
            Series::from_ints(&v, len)
        })
    }

    fn any_series(len: usize) -> impl Strategy<Value = Series<Rational>> {
        prop::collection::vec(-4i64..5, len).prop_map(move |v| Series::from_ints(&v, len))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in any_series(12), b in any_series(12), c in any_series(12)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn revert_round_trip(tail in prop::collection::vec(-3i64..4, 14), lead in prop::sample::select(vec![-2i64, -1, 1, 3])) {
            let mut v = vec![0, lead];
            v.extend(tail);
            let f = Series::from_ints(&v, 16);
            let g = f.revert().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), Series::x(16));
            prop_assert_eq!(g.compose(&f).unwrap(), Series::x(16));
        }

        #[test]
        fn sqrt_squares_back(a in unit_series(10)) {
            let s = a.sqrt().unwrap();
            prop_assert_eq!(&s * &s, a);
        }

        #[test]
        fn log_derivative(a in unit_series(10)) {
            let l = a.log().unwrap();
            let lhs = l.derivative();
            let rhs = a.derivative().div(&a.truncate(9)).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(l.exp().unwrap(), a);
        }

        #[test]
        fn param_power_specializes(a in unit_series(8)) {
            let p = a.pow_param().unwrap();
            for k in 0..4usize {
                prop_assert_eq!(p.eval_param(&int(k as i64)), a.pow_int(k));
            }
        }
    }
}
