//! Riordan matrices `(f(x), x g(x))` and their group structure.
//!
//! The matrix is stored by its two series; the triangle is only built on
//! request. Column `m` of an ordinary matrix has generating function
//! `f (x g)^m`. The exponential kind is the same pair conjugated by the
//! diagonal factorial matrix, so entry `(n, m)` is scaled by `n!/m!`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{factorial, int, Coeff, Rational};
use crate::series::Series;
use crate::triangle::Triangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ordinary,
    Exponential,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Exponential => "exponential",
        }
    }
}

/// `n! / m!` as a rational.
pub fn factorial_ratio(n: usize, m: usize) -> Rational {
    Rational::new(factorial(n), factorial(m))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RiordanMatrix<C: Coeff> {
    f: Series<C>,
    g: Series<C>,
    kind: Kind,
}

/// Solve `g = rhs(g)` one coefficient at a time, where `[x^n] rhs(g)` only
/// depends on `g_0 .. g_{n-1}`.
pub(crate) fn solve_coefficientwise<C: Coeff>(
    order: usize,
    rhs: impl Fn(&Series<C>) -> Result<Series<C>>,
) -> Result<Series<C>> {
    let mut g = Series::zero(order);
    for n in 0..order {
        // g_n is still zero in the truncation; rhs must not depend on it
        let r = rhs(&g.truncate(n + 1))?;
        let c = r.checked_coeff(n)?.clone();
        g.set_coeff(n, c);
    }
    Ok(g)
}

impl<C: Coeff> RiordanMatrix<C> {
    /// `(f, x g)` truncated to the smaller of the two orders.
    pub fn new(f: Series<C>, g: Series<C>, kind: Kind) -> Result<Self> {
        let order = f.order().min(g.order());
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if f.coeff(0).is_zero() {
            return Err(Error::Precondition("f(0) must be nonzero".into()));
        }
        if g.coeff(0).is_zero() {
            return Err(Error::Precondition("g(0) must be nonzero".into()));
        }
        Ok(Self {
            f: f.truncate(order),
            g: g.truncate(order),
            kind,
        })
    }

    pub fn ordinary(f: Series<C>, g: Series<C>) -> Result<Self> {
        Self::new(f, g, Kind::Ordinary)
    }

    /// Lagrange subgroup element `(1, x g)`.
    pub fn lagrange(g: Series<C>) -> Result<Self> {
        let order = g.order();
        Self::ordinary(Series::one(order), g)
    }

    /// Bell subgroup element `(g, x g)`.
    pub fn bell(g: Series<C>) -> Result<Self> {
        Self::ordinary(g.clone(), g)
    }

    pub fn identity(order: usize) -> Self {
        Self {
            f: Series::one(order),
            g: Series::one(order),
            kind: Kind::Ordinary,
        }
    }

    pub fn f(&self) -> &Series<C> {
        &self.f
    }

    pub fn g(&self) -> &Series<C> {
        &self.g
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `x g(x)`, known one order further than `g`.
    pub fn xg(&self) -> Series<C> {
        self.g.shift_up(1)
    }

    /// The same pair read as an exponential matrix.
    pub fn to_exponential(&self) -> Self {
        Self {
            kind: Kind::Exponential,
            ..self.clone()
        }
    }

    pub fn materialize(&self) -> Triangle<C> {
        let order = self.order();
        let xg = self.xg().truncate(order);
        let mut rows: Vec<Vec<C>> = (0..order).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut col = self.f.clone();
        for m in 0..order {
            for (n, row) in rows.iter_mut().enumerate().skip(m) {
                let mut e = col.coeff(n);
                if self.kind == Kind::Exponential {
                    e = e.scale(&factorial_ratio(n, m));
                }
                row.push(e);
            }
            col = &col * &xg;
        }
        Triangle::from_rows(rows).expect("rows built with matching lengths")
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(self.kind.name(), other.kind.name()));
        }
        Ok(())
    }

    /// `(f, xg)(b, xa) = (f b(xg), xg a(xg))`.
    ///
    /// Conjugation by the factorial diagonal commutes with the product, so the
    /// rule is the same for exponential matrices.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let xg = self.xg();
        let f = &self.f * &other.f.compose(&xg)?;
        let g = &self.g * &other.g.compose(&xg)?;
        Self::new(f, g, self.kind)
    }

    pub fn inverse(&self) -> Result<Self> {
        let xg_bar = self.xg().revert()?;
        let g = xg_bar.shift_down(1)?;
        let f = self.f.compose(&xg_bar)?.recip()?;
        Self::new(f, g, self.kind)
    }

    /// Multiply the materialized matrix by the coefficient column of `s`.
    pub fn apply(&self, s: &Series<C>) -> Series<C> {
        self.materialize().apply(s)
    }

    /// `A` with `g = A(x g)`, i.e. `A = g(revert(x g))`.
    pub fn a_sequence(&self) -> Result<Series<C>> {
        self.g.compose(&self.xg().revert()?)
    }

    /// The Lagrange matrix `(1, x g)` whose A-sequence is `a`.
    pub fn from_a_sequence(a: &Series<C>, order: usize) -> Result<Self> {
        if a.coeff(0).is_zero() {
            return Err(Error::Precondition("A(0) must be nonzero".into()));
        }
        let g = solve_coefficientwise(order, |g| a.compose(&g.shift_up(1)))?;
        Self::lagrange(g)
    }

    /// True when `M^-1 = (f(-x), x g(-x))` holds to the matrix's order.
    pub fn is_pseudo_involution(&self) -> Result<bool> {
        let g0 = self.g.coeff(0);
        if !(g0.is_one() || (-g0).is_one()) {
            return Err(Error::Precondition("g(0) must be 1 or -1".into()));
        }
        let inv = self.inverse()?;
        Ok(inv.f == self.f.reflect() && inv.g == self.g.reflect())
    }

    /// Extract the B-sequence of `g` from the column-0 recurrence
    /// `d(n+1, 0) = sum_i b_i d(n-i, i)` of the Bell matrix `(g, x g)`, one
    /// new term per even `n`, then verify the full recurrence
    /// `d(n+1, m) = d(n, m-1) + sum_i b_i d(n-i, m+i)` everywhere inside the
    /// truncation. Only `g` matters, so `(1, x g)` has the same B-sequence.
    pub fn b_sequence(&self) -> Result<BSequence<C>> {
        if !self.g.coeff(0).is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: self.g.coeff(0).to_string(),
            });
        }
        let d = Self::bell(self.g.clone())?.materialize();
        let size = d.size();
        let mut b: Vec<C> = Vec::new();
        let mut j = 0;
        while 2 * j + 1 < size {
            let mut acc = d.entry(2 * j + 1, 0);
            for (i, bi) in b.iter().enumerate() {
                acc = acc - &(bi.clone() * &d.entry(2 * j - i, i));
            }
            b.push(acc.checked_div(&d.entry(j, j))?);
            j += 1;
        }
        for n in 0..size.saturating_sub(1) {
            for m in 0..=n + 1 {
                let mut rhs = if m > 0 { d.entry(n, m - 1) } else { C::zero() };
                for (i, bi) in b.iter().enumerate().take_while(|(i, _)| m + 2 * i <= n) {
                    rhs = rhs + &(bi.clone() * &d.entry(n - i, m + i));
                }
                if d.entry(n + 1, m) != rhs {
                    return Err(Error::NoConsistentBSequence { row: n + 1, col: m });
                }
            }
        }
        Ok(BSequence { terms: b })
    }

    /// Solve `g = 1 + x g B(x^2 g)` and return `(1, x g)`, or `(g, x g)`
    /// when `bell` is set.
    pub fn from_b_sequence(b: &Series<C>, order: usize, bell: bool) -> Result<Self> {
        let g = solve_b_function(b, order)?;
        if bell {
            Self::bell(g)
        } else {
            Self::lagrange(g)
        }
    }
}

/// The series `g` with `g = 1 + x g B(x^2 g)`.
pub fn solve_b_function<C: Coeff>(b: &Series<C>, order: usize) -> Result<Series<C>> {
    solve_coefficientwise(order, |g| {
        let inner = b.compose(&g.shift_up(2))?;
        let mut rhs = (g * &inner).shift_up(1);
        rhs.set_coeff(0, rhs.coeff(0) + &C::one());
        Ok(rhs)
    })
}

impl RiordanMatrix<Rational> {
    /// `P^phi = (1/(1 - phi x), x/(1 - phi x))`.
    pub fn pascal(phi: &Rational, order: usize) -> Self {
        let g = Series::geometric(phi.clone(), order);
        Self::bell(g).expect("geometric series has unit constant term")
    }

    /// Factor a Lagrange pseudo-involution `(1, x g)` as
    /// `(1, x sqrt(g)) (1, x h)` with `h` the A-sequence of `(1, x sqrt(g))`,
    /// and return `h` together with `s = (h - 1/h)/2`.
    ///
    /// `s` must be odd, `h = s + sqrt(s^2 + 1)`, `h(-x) h(x) = 1`, and
    /// `x B(x^2) = 2 s(x)` for the B-function of the input.
    pub fn sqrt_factorization(&self) -> Result<SqrtFactorization> {
        if !self.f.is_one_series() {
            return Err(Error::Precondition(
                "expected a Lagrange matrix (1, x g)".into(),
            ));
        }
        let order = self.order();
        let root = self.g.sqrt()?;
        let left = RiordanMatrix::lagrange(root.clone())?;
        let h = left.a_sequence()?;
        let right = RiordanMatrix::lagrange(h.clone())?;
        let product = left.multiply(&right)?;
        if product.g != self.g {
            return Err(Error::FactorizationInconsistency(
                "(1, x sqrt g)(1, x h) does not reproduce (1, x g)".into(),
            ));
        }
        let h_inv = h.recip()?;
        if h.reflect() != h_inv {
            return Err(Error::FactorizationInconsistency("h(-x) h(x) != 1".into()));
        }
        let s = (&h - &h_inv).scale(&int(2).recip());
        if s.coeffs().iter().step_by(2).any(|c| !c.is_zero()) {
            return Err(Error::FactorizationInconsistency(
                "s has a nonzero even coefficient".into(),
            ));
        }
        let rebuilt = &s + &(&(&s * &s) + &Series::one(order)).sqrt()?;
        if rebuilt != h {
            return Err(Error::FactorizationInconsistency(
                "h != s + sqrt(s^2 + 1)".into(),
            ));
        }
        let b = self
            .b_sequence()
            .map_err(|e| Error::FactorizationInconsistency(e.to_string()))?;
        let two_s = s.scale(&int(2));
        let x_b_x2 = b.series().stretch(2).shift_up(1);
        if x_b_x2 != two_s {
            return Err(Error::FactorizationInconsistency(
                "x B(x^2) != 2 s(x)".into(),
            ));
        }
        Ok(SqrtFactorization { root, h, s, b })
    }
}

impl<C: Coeff> Series<C> {
    fn is_one_series(&self) -> bool {
        self.coeff(0).is_one() && self.coeffs().iter().skip(1).all(Zero::is_zero)
    }
}

/// Terms `b_0, b_1, ...` of a B-sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct BSequence<C> {
    pub terms: Vec<C>,
}

impl<C: Coeff> BSequence<C> {
    /// Generating function `B(x)`.
    pub fn series(&self) -> Series<C> {
        Series::new(self.terms.clone(), self.terms.len().max(1))
    }
}

#[derive(Clone, Debug)]
pub struct SqrtFactorization {
    /// `sqrt(g)`
    pub root: Series<Rational>,
    pub h: Series<Rational>,
    pub s: Series<Rational>,
    pub b: BSequence<Rational>,
}

impl<C: Coeff> fmt::Display for RiordanMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, x*{}) [{}]", self.f, self.g, self.kind.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::series::catalan_series;

    #[test]
    fn identity_materializes() {
        let id = RiordanMatrix::<Rational>::identity(5).materialize();
        assert_eq!(id, Triangle::identity(5));
    }

    #[test]
    fn exponential_lah_entries() {
        // (1, x/(1-x))_E has entry n!/m! C(n-1, m-1)
        let m = RiordanMatrix::lagrange(Series::geometric(int(1), 8))
            .unwrap()
            .to_exponential();
        let t = m.materialize();
        for n in 1..8 {
            for k in 1..=n {
                let expected = factorial_ratio(n, k)
                    * Rational::from_integer(crate::ring::binomial(n as i64 - 1, k as i64 - 1));
                assert_eq!(t.entry(n, k), expected);
            }
        }
        assert_eq!(
            t.descending_diagonal(1).truncate(5),
            Series::from_ints(&[0, 2, 6, 12, 20], 5)
        );
    }

    #[test]
    fn pascal_is_exponential_shift() {
        let n = 8;
        let pascal = RiordanMatrix::pascal(&int(1), n).materialize();
        let e = Series::new(
            (0..n)
                .map(|k| Rational::new(1.into(), factorial(k)))
                .collect(),
            n,
        );
        let exp_form = RiordanMatrix::ordinary(e, Series::one(n))
            .unwrap()
            .to_exponential()
            .materialize();
        assert_eq!(pascal, exp_form);
        assert_eq!(
            RiordanMatrix::<Rational>::identity(6)
                .to_exponential()
                .materialize(),
            Triangle::identity(6)
        );
    }

    #[test]
    fn pascal_powers_multiply() {
        let p1 = RiordanMatrix::pascal(&int(1), 10);
        let p2 = RiordanMatrix::pascal(&int(2), 10);
        assert_eq!(
            p1.multiply(&p2).unwrap(),
            RiordanMatrix::pascal(&int(3), 10)
        );
        let e1 = p1.to_exponential();
        assert!(matches!(e1.multiply(&p2), Err(Error::KindMismatch(..))));
    }

    #[test]
    fn inverse_of_catalan_lagrange() {
        let m = RiordanMatrix::lagrange(catalan_series(12)).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv.g(), &Series::from_ints(&[1, -1], 12));
        assert_eq!(m.multiply(&inv).unwrap(), RiordanMatrix::identity(12));
    }

    #[test]
    fn apply_gives_row_sums() {
        let p = RiordanMatrix::pascal(&int(1), 8);
        let sums = p.apply(&Series::geometric(int(1), 8));
        assert_eq!(sums, Series::from_ints(&[1, 2, 4, 8, 16, 32, 64, 128], 8));
        // ordinary apply agrees with f * s(xg)
        let s = Series::from_ints(&[2, -1, 3, 0, 1, 5, -2, 1], 8);
        let direct = p.f() * &s.compose(&p.xg()).unwrap();
        assert_eq!(p.apply(&s), direct);
    }

    #[test]
    fn a_sequences() {
        let m = RiordanMatrix::lagrange(catalan_series(16)).unwrap();
        assert_eq!(m.a_sequence().unwrap(), Series::geometric(int(1), 16));
        let p = RiordanMatrix::pascal(&int(1), 16);
        assert_eq!(p.a_sequence().unwrap(), Series::from_ints(&[1, 1], 16));
        let back = RiordanMatrix::from_a_sequence(&Series::geometric(int(1), 16), 16).unwrap();
        assert_eq!(back.g(), &catalan_series(16));
    }

    #[test]
    fn quadratic_a_sequence() {
        // A = 1 + a1 x + a2 x^2 gives g = (1 - a1 x - sqrt((1 - a1 x)^2 - 4 a2 x^2)) / (2 a2 x^2)
        let n = 12;
        for (a1, a2) in [(1, 1), (2, 3), (-1, 2)] {
            let a = Series::from_ints(&[1, a1, a2], n);
            let g = RiordanMatrix::from_a_sequence(&a, n).unwrap().g().clone();
            let lin = Series::from_ints(&[1, -a1], n + 2);
            let disc = &(&lin * &lin) - &Series::from_ints(&[0, 0, 4 * a2], n + 2);
            let closed = (&lin - &disc.sqrt().unwrap())
                .shift_down(2)
                .unwrap()
                .scale(&rat(1, 2 * a2));
            assert_eq!(g, closed);
        }
    }

    #[test]
    fn pseudo_involutions() {
        assert!(RiordanMatrix::pascal(&int(1), 12)
            .is_pseudo_involution()
            .unwrap());
        let neg = RiordanMatrix::lagrange(Series::constant(int(-1), 12)).unwrap();
        assert!(neg.is_pseudo_involution().unwrap());
        let cat = RiordanMatrix::lagrange(catalan_series(12)).unwrap();
        assert!(!cat.is_pseudo_involution().unwrap());
        let bad = RiordanMatrix::lagrange(Series::from_ints(&[2, 1], 6)).unwrap();
        assert!(bad.is_pseudo_involution().is_err());
    }

    #[test]
    fn b_sequence_of_pascal() {
        let b = RiordanMatrix::pascal(&int(1), 14).b_sequence().unwrap();
        assert_eq!(b.terms[0], int(1));
        assert!(b.terms[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn b_sequence_rejects_non_pseudo_involution() {
        let cat = RiordanMatrix::lagrange(catalan_series(10)).unwrap();
        assert!(matches!(
            cat.b_sequence(),
            Err(Error::NoConsistentBSequence { .. })
        ));
    }

    #[test]
    fn linear_b_function_closed_form() {
        // B = b0 + b1 x: g = (1 - b0 x - sqrt((1 - b0 x)^2 - 4 b1 x^3)) / (2 b1 x^3)
        let n = 14;
        for (b0, b1) in [(1, 1), (2, -1), (3, 2)] {
            let b = Series::from_ints(&[b0, b1], n);
            let m = RiordanMatrix::from_b_sequence(&b, n, false).unwrap();
            let lin = Series::from_ints(&[1, -b0], n + 3);
            let disc = &(&lin * &lin) - &Series::from_ints(&[0, 0, 0, 4 * b1], n + 3);
            let closed = (&lin - &disc.sqrt().unwrap())
                .shift_down(3)
                .unwrap()
                .scale(&rat(1, 2 * b1));
            assert_eq!(m.g(), &closed);
            let back = m.b_sequence().unwrap();
            assert_eq!(back.series(), b.truncate(back.terms.len()));
        }
    }

    #[test]
    fn example_two_one_factorization() {
        // (1, x/(1-2x)) = (1, x/sqrt(1-2x)) (1, x(x + sqrt(x^2+1)))
        let m = RiordanMatrix::lagrange(Series::geometric(int(2), 14)).unwrap();
        let fac = m.sqrt_factorization().unwrap();
        let mut s = Series::zero(14);
        s.set_coeff(1, int(1));
        assert_eq!(fac.s, s);
        let expected_h = &Series::x(14) + &Series::from_ints(&[1, 0, 1], 14).sqrt().unwrap();
        assert_eq!(fac.h, expected_h);
    }

    #[test]
    fn factorization_rejects_non_pseudo_involution() {
        let cat = RiordanMatrix::lagrange(catalan_series(10)).unwrap();
        assert!(matches!(
            cat.sqrt_factorization(),
            Err(Error::FactorizationInconsistency(_))
        ));
        let bell = RiordanMatrix::pascal(&int(1), 10);
        assert!(bell.sqrt_factorization().is_err());
    }
}
