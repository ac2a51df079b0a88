use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::ring::{Coeff, ParamPoly, Rational};
use crate::series::Series;

/// A finite lower-triangular array; row `n` holds entries `0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> Triangle<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Precondition(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    /// Build from a function of `(row, column)`.
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> C) -> Self {
        Self {
            rows: (0..size)
                .map(|n| (0..=n).map(|m| entry(n, m)).collect())
                .collect(),
        }
    }

    pub fn zeros(size: usize) -> Self {
        Self::from_fn(size, |_, _| C::zero())
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |n, m| if n == m { C::one() } else { C::zero() })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Entry `(n, m)`; zero above the diagonal.
    pub fn entry(&self, n: usize, m: usize) -> C {
        if m > n {
            C::zero()
        } else {
            self.rows[n][m].clone()
        }
    }

    pub fn set(&mut self, n: usize, m: usize, c: C) {
        self.rows[n][m] = c;
    }

    pub fn row(&self, n: usize) -> &[C] {
        &self.rows[n]
    }

    /// Generating function of column `m`, known to the triangle's size.
    pub fn column(&self, m: usize) -> Series<C> {
        Series::new(
            (0..self.size()).map(|n| self.entry(n, m)).collect(),
            self.size(),
        )
    }

    /// `sum_m entry(n+m, m) x^m`.
    pub fn descending_diagonal(&self, n: usize) -> Series<C> {
        let len = self.size().saturating_sub(n).max(1);
        Series::new(
            (0..len)
                .map(|m| {
                    if n + m < self.size() {
                        self.entry(n + m, m)
                    } else {
                        C::zero()
                    }
                })
                .collect(),
            len,
        )
    }

    /// `sum_k entry(n-k, k) x^k`; terms with `k > n - k` vanish.
    pub fn ascending_diagonal(&self, n: usize) -> Vec<C> {
        (0..=n / 2).map(|k| self.entry(n - k, k)).collect()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Triangle<D> {
        Triangle {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn truncate(&self, size: usize) -> Self {
        Self {
            rows: self.rows[..size.min(self.size())].to_vec(),
        }
    }

    /// Matrix times column vector, with the vector given by its generating function.
    pub fn apply(&self, v: &Series<C>) -> Series<C> {
        let size = self.size().min(v.order());
        Series::new(
            (0..size)
                .map(|n| {
                    (0..=n).fold(C::zero(), |acc, m| {
                        acc + &(self.rows[n][m].clone() * &v.coeff(m))
                    })
                })
                .collect(),
            size,
        )
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, r)| r[n].is_zero())
    }
}

impl Triangle<Rational> {
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::ring::int(v)).collect())
                .collect(),
        )
    }

    /// Row `n` read as a polynomial in the column index.
    pub fn row_poly(&self, n: usize) -> ParamPoly {
        ParamPoly::new(self.rows[n].clone())
    }

    /// Row `n` with each entry scaled by `n!/m!`.
    pub fn to_exponential(&self) -> Self {
        let mut out = self.clone();
        for (n, row) in out.rows.iter_mut().enumerate() {
            for (m, e) in row.iter_mut().enumerate() {
                *e = &*e * crate::riordan::factorial_ratio(n, m);
            }
        }
        out
    }
}

impl<C: Coeff> Add for &Triangle<C> {
    type Output = Triangle<C>;

    fn add(self, rhs: &Triangle<C>) -> Triangle<C> {
        let size = self.size().min(rhs.size());
        Triangle::from_fn(size, |n, m| self.rows[n][m].clone() + &rhs.rows[n][m])
    }
}

impl<C: Coeff> Sub for &Triangle<C> {
    type Output = Triangle<C>;

    fn sub(self, rhs: &Triangle<C>) -> Triangle<C> {
        let size = self.size().min(rhs.size());
        Triangle::from_fn(size, |n, m| self.rows[n][m].clone() - &rhs.rows[n][m])
    }
}

impl<C: Coeff> Mul for &Triangle<C> {
    type Output = Triangle<C>;

    fn mul(self, rhs: &Triangle<C>) -> Triangle<C> {
        let size = self.size().min(rhs.size());
        Triangle::from_fn(size, |n, m| {
            (m..=n).fold(C::zero(), |acc, k| {
                let a = &self.rows[n][k];
                if a.is_zero() {
                    acc
                } else {
                    acc + &(a.clone() * &rhs.rows[k][m])
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn pascal(size: usize) -> Triangle<Rational> {
        Triangle::from_fn(size, |n, m| {
            Rational::from_integer(crate::ring::binomial(n as i64, m as i64))
        })
    }

    #[test]
    fn extractors() {
        let p = pascal(6);
        assert_eq!(p.row_poly(3), ParamPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.column(1), Series::from_ints(&[0, 1, 2, 3, 4, 5], 6));
        assert_eq!(
            p.descending_diagonal(1),
            Series::from_ints(&[1, 2, 3, 4, 5], 5)
        );
        assert_eq!(p.ascending_diagonal(4), vec![int(1), int(3), int(1)]);
        assert_eq!(p.entry(2, 4), int(0));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(Triangle::<Rational>::from_ints(&[&[1], &[1, 2, 3]]).is_err());
    }

    #[test]
    fn multiply_and_apply() {
        let p = pascal(6);
        let id = Triangle::identity(6);
        assert_eq!(&p * &id, p);
        // row sums of Pascal's triangle
        let sums = p.apply(&Series::geometric(int(1), 6));
        assert_eq!(sums, Series::from_ints(&[1, 2, 4, 8, 16, 32], 6));
        assert!((&p - &id).is_strictly_lower());
    }
}
