//! Logarithms and powers of Bell matrices `(g, x g)` with `g(0) = 1`.
//!
//! On `N` rows `M - I` is strictly lower triangular, hence nilpotent, so the
//! logarithm series terminates and everything here is exact.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{factorial, int, ParamPoly, Rational};
use crate::riordan::RiordanMatrix;
use crate::series::Series;
use crate::triangle::Triangle;

fn require_unit(g: &Series<Rational>) -> Result<()> {
    if !g.coeff(0).is_one() {
        return Err(Error::ConstantTerm {
            expected: "1",
            found: g.coeff(0).to_string(),
        });
    }
    Ok(())
}

/// `log (g, x g) = sum_k (-1)^(k-1)/k (M - I)^k` on `order` rows.
pub fn bell_log(g: &Series<Rational>, order: usize) -> Result<Triangle<Rational>> {
    require_unit(g)?;
    if g.order() < order {
        return Err(Error::InsufficientOrder {
            needed: order,
            available: g.order(),
        });
    }
    let m = RiordanMatrix::bell(g.truncate(order))?.materialize();
    let nil = &m - &Triangle::identity(order);
    let mut power = nil.clone();
    let mut log = Triangle::zeros(order);
    for k in 1..order {
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        log = &log + &power.scale(&(sign / int(k as i64)));
        power = &power * &nil;
    }
    Ok(log)
}

/// `sum_k L^k / k!` for a strictly lower triangular `L`.
pub fn exp_nilpotent(l: &Triangle<Rational>) -> Result<Triangle<Rational>> {
    if !l.is_strictly_lower() {
        return Err(Error::Precondition(
            "matrix is not strictly lower triangular".into(),
        ));
    }
    let size = l.size();
    let mut term = Triangle::identity(size);
    let mut sum = term.clone();
    for k in 1..size {
        term = (&term * l).scale(&int(k as i64).recip());
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Composition polynomials: `L(g) x^n = (1/n!) (log (g, x g))^n x^0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LMatrix {
    pub triangle: Triangle<Rational>,
    pub source: Series<Rational>,
}

impl LMatrix {
    /// Row `n` as the polynomial `c_n`.
    pub fn poly(&self, n: usize) -> ParamPoly {
        self.triangle.row_poly(n)
    }

    /// `sum_n c_n(t) x^n`.
    pub fn power_series(&self) -> Series<ParamPoly> {
        let size = self.triangle.size();
        Series::new((0..size).map(|n| self.poly(n)).collect(), size)
    }
}

pub fn l_matrix(g: &Series<Rational>, order: usize) -> Result<LMatrix> {
    let log = bell_log(g, order)?;
    let mut columns: Vec<Series<Rational>> = Vec::with_capacity(order);
    let mut v = Series::one(order);
    for n in 0..order {
        if n > 0 {
            v = log.apply(&v).scale(&int(n as i64).recip());
        }
        columns.push(v.clone());
    }
    Ok(LMatrix {
        triangle: Triangle::from_fn(order, |n, m| columns[m].coeff(n)),
        source: g.truncate(order),
    })
}

/// `x^k -> (k+1) x^(k+1)`.
fn d_transpose(v: &Series<Rational>) -> Series<Rational> {
    v.shift_up(1).derivative().shift_up(1)
}

/// Builds `L(g)` from `L x^n = (1/n) b(x) D^T L x^(n-1)`.
pub fn l_matrix_by_recurrence(g: &Series<Rational>, order: usize) -> Result<LMatrix> {
    let b = extract_b_series(g, order)?;
    // D^T v is divisible by x, so b is only needed one order short
    let xb = b.shift_up(1);
    let mut columns: Vec<Series<Rational>> = Vec::with_capacity(order);
    let mut v = Series::one(order);
    for n in 0..order {
        if n > 0 {
            let w = d_transpose(&v).shift_down(1)?;
            v = (&xb * &w).truncate(order).scale(&int(n as i64).recip());
        }
        columns.push(v.clone());
    }
    Ok(LMatrix {
        triangle: Triangle::from_fn(order, |n, m| columns[m].coeff(n)),
        source: g.truncate(order),
    })
}

/// `g^(t)` with `t` a formal parameter; coefficient `n` is `c_n(t)`.
pub fn bell_power_param(g: &Series<Rational>, order: usize) -> Result<Series<ParamPoly>> {
    Ok(l_matrix(g, order)?.power_series())
}

/// `g^(phi)`: column 0 of `exp(phi log (g, x g))`.
pub fn bell_power(g: &Series<Rational>, phi: &Rational, order: usize) -> Result<Series<Rational>> {
    let log = bell_log(g, order)?;
    let mut term = Series::one(order);
    let mut sum = term.clone();
    for k in 1..order {
        term = log.apply(&term).scale(&(phi / int(k as i64)));
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `b(x)` with `log (g, x g) = (b(x), x) D^T`, known to `order - 1`.
///
/// Checks `b_0 = g_1` and `g^2 b(x g) = b (x g)'`.
pub fn extract_b_series(g: &Series<Rational>, order: usize) -> Result<Series<Rational>> {
    let log = bell_log(g, order)?;
    let b = log.column(0).shift_down(1)?;
    if order > 1 && b.coeff(0) != g.coeff(1) {
        return Err(Error::Consistency(format!(
            "b_0 = {} but g_1 = {}",
            b.coeff(0),
            g.coeff(1)
        )));
    }
    let g = g.truncate(order);
    let xg = g.shift_up(1);
    let lhs = &(&g * &g) * &b.compose(&xg)?;
    let rhs = &b * &xg.derivative();
    if lhs != rhs {
        return Err(Error::Consistency("g^2 b(xg) != b (xg)'".into()));
    }
    Ok(b)
}

/// `F[s][j]`: sum over compositions of `s` into `j` parts of
/// `prod b_(i_k - 1) * prod_k (beta + i_1 + ... + i_(k-1))`.
fn composition_weights(
    b: &Series<Rational>,
    n: usize,
    beta: &Rational,
) -> Result<Vec<Vec<Rational>>> {
    if n > 0 && b.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: b.order(),
        });
    }
    let mut w = vec![vec![Rational::zero(); n + 1]; n + 1];
    w[0][0] = Rational::one();
    for s in 0..n {
        let weight = beta + int(s as i64);
        for j in 0..=s {
            if w[s][j].is_zero() {
                continue;
            }
            let base = &w[s][j] * &weight;
            for part in 1..=(n - s) {
                let bp = b.coeff(part - 1);
                if bp.is_zero() {
                    continue;
                }
                w[s + part][j + 1] += &base * bp;
            }
        }
    }
    Ok(w)
}

/// `[x^n] (g^(phi))^beta` as a polynomial in `phi`, summed over compositions
/// of `n`.
pub fn c_beta(b: &Series<Rational>, n: usize, beta: &Rational) -> Result<ParamPoly> {
    let w = composition_weights(b, n, beta)?;
    Ok(ParamPoly::new(
        (0..=n)
            .map(|m| &w[n][m] / Rational::from_integer(factorial(m)))
            .collect(),
    ))
}

/// `c_n(phi)` from the coefficients of `b`.
pub fn c_closed(b: &Series<Rational>, n: usize) -> Result<ParamPoly> {
    c_beta(b, n, &Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn geom() -> Series<Rational> {
        Series::geometric(int(1), 16)
    }

    #[test]
    fn log_of_geometric_bell_is_shift() {
        let l = bell_log(&geom(), 10).unwrap();
        for n in 0..10 {
            for m in 0..=n {
                let expected = if n == m + 1 { int(n as i64) } else { int(0) };
                assert_eq!(l.entry(n, m), expected, "entry ({n},{m})");
            }
        }
        assert_eq!(bell_log(&Series::one(8), 8).unwrap(), Triangle::zeros(8));
        assert!(bell_log(&Series::from_ints(&[2, 1], 8), 8).is_err());
    }

    #[test]
    fn l_matrix_of_geometric_is_identity() {
        let l = l_matrix(&geom(), 10).unwrap();
        assert_eq!(l.triangle, Triangle::identity(10));
        let p = bell_power_param(&geom(), 10).unwrap();
        for n in 0..10 {
            assert_eq!(p.coeff(n), ParamPoly::monomial(int(1), n));
        }
    }

    #[test]
    fn b_of_geometric_is_one() {
        let b = extract_b_series(&geom(), 12).unwrap();
        assert_eq!(b, Series::one(11));
        assert_eq!(c_closed(&b, 7).unwrap(), ParamPoly::monomial(int(1), 7));
    }

    #[test]
    fn c_beta_squares_geometric() {
        // b = 1: g^(phi) = 1/(1 - phi x), squared has [x^n] = (n+1) phi^n
        let b = Series::one(12);
        for n in 0..10 {
            assert_eq!(
                c_beta(&b, n, &int(2)).unwrap(),
                ParamPoly::monomial(int(n as i64 + 1), n)
            );
        }
        assert!(matches!(
            c_closed(&Series::one(3), 5),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn rational_power_matches_param_power() {
        let g = Series::from_ints(&[1, 1, 3, -2, 5, 1, 0, 2], 8);
        let param = bell_power_param(&g, 8).unwrap();
        for phi in [rat(1, 2), int(-1), int(3)] {
            assert_eq!(bell_power(&g, &phi, 8).unwrap(), param.eval_param(&phi));
        }
        assert_eq!(bell_power(&g, &int(1), 8).unwrap(), g);
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        assert!(exp_nilpotent(&Triangle::identity(3)).is_err());
    }
}
