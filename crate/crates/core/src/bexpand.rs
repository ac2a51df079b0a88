//! Expansions of `g^phi` in terms of the A- and B-sequences, B-composition
//! matrices `<B>`, their closed forms and the convolution polynomials behind
//! them.
//!
//! Throughout, `g` solves `g = 1 + x g B(x^2 g)` and `g^[phi]` is the series
//! whose B-function is `phi B`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{
    binomial, catalan, factorial, falling_factorial, falling_factorial_rat, int, Coeff, ParamPoly,
    Rational,
};
use crate::riordan::solve_b_function;
use crate::series::Series;
use crate::triangle::Triangle;

/// Largest `n` accepted by [`odd_partitions`]. There are 142301 odd-part
/// partitions of all `n < 64` together, enough for 64-row matrices.
pub const MAX_ODD_PARTITION_N: usize = 64;

/// Largest `n` accepted by [`partitions`] (37338 partitions of 40).
pub const MAX_PARTITION_N: usize = 40;

/// A partition of `n` into odd parts; `multiplicities[i]` counts parts `2i+1`.
/// Trailing zero multiplicities are dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPartition {
    pub multiplicities: Vec<usize>,
}

impl OddPartition {
    pub fn n(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, m)| m * (2 * i + 1))
            .sum()
    }

    /// Number of parts, `q`.
    pub fn parts(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// `k = sum m_i (i + 1)`, which is `(n + q) / 2`.
    pub fn k(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, m)| m * (i + 1))
            .sum()
    }

    /// Parts in decreasing order.
    pub fn part_list(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts());
        for (i, &m) in self.multiplicities.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(2 * i + 1, m));
        }
        out
    }

    /// `m_0! m_1! ...`
    pub fn multiplicity_factorials(&self) -> Rational {
        self.multiplicities.iter().fold(Rational::one(), |acc, &m| {
            acc * Rational::from_integer(factorial(m))
        })
    }

    /// `prod b_i^(m_i) / m_i!`
    pub fn weight(&self, b: &Series<Rational>) -> Rational {
        let mut w = Rational::one();
        for (i, &m) in self.multiplicities.iter().enumerate() {
            if m > 0 {
                w *= num_traits::pow(b.coeff(i), m);
            }
        }
        w / self.multiplicity_factorials()
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.part_list().iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Multiplicity vectors over parts `size(0) < size(1) < ...`, lexicographic.
fn multiplicity_vectors(n: usize, size: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    fn rec(
        rem: usize,
        i: usize,
        size: &dyn Fn(usize) -> usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem == 0 {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        let s = size(i);
        if s > rem {
            return;
        }
        for m in 0..=rem / s {
            cur.push(m);
            rec(rem - m * s, i + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &size, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` into odd parts, lexicographic in the multiplicities.
pub fn odd_partitions(n: usize) -> Result<Vec<OddPartition>> {
    if n > MAX_ODD_PARTITION_N {
        return Err(Error::PartitionLimit {
            n,
            max: MAX_ODD_PARTITION_N,
        });
    }
    Ok(multiplicity_vectors(n, |i| 2 * i + 1)
        .into_iter()
        .map(|multiplicities| OddPartition { multiplicities })
        .collect())
}

/// All partitions of `n`; entry `i` of each vector counts parts of size `i+1`.
pub fn partitions(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > MAX_PARTITION_N {
        return Err(Error::PartitionLimit {
            n,
            max: MAX_PARTITION_N,
        });
    }
    Ok(multiplicity_vectors(n, |i| i + 1))
}

/// `b_i` is needed for `2i + 1 <= n`.
fn b_terms_needed(n: usize) -> usize {
    n.div_ceil(2)
}

fn require_order(s: &Series<Rational>, needed: usize) -> Result<()> {
    if s.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            available: s.order(),
        });
    }
    Ok(())
}

fn require_unit_constant(s: &Series<Rational>) -> Result<()> {
    if !s.coeff(0).is_one() {
        return Err(Error::ConstantTerm {
            expected: "1",
            found: s.coeff(0).to_string(),
        });
    }
    Ok(())
}

/// `phi (phi + k - 1)_(q-1) / (m_0! m_1! ...)`
fn b_expand_coefficient(p: &OddPartition) -> ParamPoly {
    let q = p.parts();
    if q == 0 {
        return ParamPoly::one();
    }
    let t = ParamPoly::var_plus(int(p.k() as i64 - 1));
    (ParamPoly::var() * &falling_factorial(&t, q - 1)).scale(&p.multiplicity_factorials().recip())
}

/// `[x^n] g^phi` as a polynomial in `phi`, summed over odd partitions of `n`.
pub fn b_expand(b: &Series<Rational>, n: usize) -> Result<ParamPoly> {
    require_order(b, b_terms_needed(n))?;
    let mut acc = ParamPoly::zero();
    for p in odd_partitions(n)? {
        let w = p.weight(b) * p.multiplicity_factorials();
        if w.is_zero() {
            continue;
        }
        acc += &b_expand_coefficient(&p).scale(&w);
    }
    Ok(acc)
}

/// The same sum with symbolic `b_i`: one polynomial in `phi` per monomial.
pub fn b_expand_terms(n: usize) -> Result<Vec<(OddPartition, ParamPoly)>> {
    Ok(odd_partitions(n)?
        .into_iter()
        .map(|p| {
            let c = b_expand_coefficient(&p);
            (p, c)
        })
        .collect())
}

/// [`b_expand_terms`] specialized at a rational `phi`.
pub fn b_expand_symbolic(n: usize, phi: &Rational) -> Result<SymbolicB> {
    let mut terms = BTreeMap::new();
    for (p, c) in b_expand_terms(n)? {
        let v = c.eval(phi);
        if !v.is_zero() {
            terms.insert(p.multiplicities, v);
        }
    }
    Ok(SymbolicB { terms })
}

/// A polynomial in the symbols `b_0, b_1, ...`; keys are exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicB {
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl SymbolicB {
    /// Parse text such as `b0^3+b1` or `36b0^7b1 - 1/2*b2^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Precondition(format!("cannot parse {text:?}: {msg}"));
        let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        let mut i = 0;
        if s.is_empty() {
            return Err(bad("empty"));
        }
        while i < s.len() {
            let mut sign = Rational::one();
            if s[i] == '+' || s[i] == '-' {
                if s[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected + or -"));
            }
            let num_start = i;
            while i < s.len() && (s[i].is_ascii_digit() || s[i] == '/') {
                i += 1;
            }
            let coeff = if i > num_start {
                let lit: String = s[num_start..i].iter().collect();
                crate::ring::parse_rational(&lit)?
            } else {
                Rational::one()
            };
            let mut exps: Vec<usize> = Vec::new();
            let mut saw_factor = i > num_start;
            loop {
                if i < s.len() && s[i] == '*' {
                    i += 1;
                }
                if i >= s.len() || s[i] != 'b' {
                    break;
                }
                i += 1;
                let idx_start = i;
                while i < s.len() && s[i].is_ascii_digit() {
                    i += 1;
                }
                if idx_start == i {
                    return Err(bad("expected index after b"));
                }
                let idx: usize = s[idx_start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad("index"))?;
                let mut pow = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let p_start = i;
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    pow = s[p_start..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad("exponent"))?;
                }
                if exps.len() <= idx {
                    exps.resize(idx + 1, 0);
                }
                exps[idx] += pow;
                saw_factor = true;
            }
            if !saw_factor {
                return Err(bad("empty term"));
            }
            while exps.last() == Some(&0) {
                exps.pop();
            }
            let e = terms.entry(exps).or_insert_with(Rational::zero);
            *e += sign * coeff;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Self { terms })
    }
}

impl fmt::Display for SymbolicB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest power of b0 first, as usually written
        let mut keys: Vec<&Vec<usize>> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.cmp(a));
        for (j, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if j > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let factors: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("b{i}")
                    } else {
                        format!("b{i}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `[x^n] g^phi` for `g = A(x g)`, summed over all partitions of `n`.
pub fn a_expand(a: &Series<Rational>, n: usize) -> Result<ParamPoly> {
    require_unit_constant(a)?;
    require_order(a, n + 1)?;
    if n == 0 {
        return Ok(ParamPoly::one());
    }
    let t = ParamPoly::var_plus(int(n as i64 - 1));
    let mut acc = ParamPoly::zero();
    for mult in partitions(n)? {
        let mut w = Rational::one();
        let mut denom = Rational::one();
        for (i, &m) in mult.iter().enumerate() {
            if m > 0 {
                w *= num_traits::pow(a.coeff(i + 1), m);
                denom *= Rational::from_integer(factorial(m));
            }
        }
        if w.is_zero() {
            continue;
        }
        let q: usize = mult.iter().sum();
        acc += &(ParamPoly::var() * &falling_factorial(&t, q - 1)).scale(&(w / denom));
    }
    Ok(acc)
}

/// `B_r(x)^phi`: coefficient `n` is `phi (phi + r n - 1)_(n-1) / n!`.
pub fn generalized_binomial(r: usize, order: usize) -> Result<Series<ParamPoly>> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let coeffs = (0..order)
        .map(|n| {
            if n == 0 {
                return ParamPoly::one();
            }
            let t = ParamPoly::var_plus(int((r * n) as i64 - 1));
            (ParamPoly::var() * &falling_factorial(&t, n - 1))
                .scale(&Rational::from_integer(factorial(n)).recip())
        })
        .collect();
    Ok(Series::new(coeffs, order))
}

/// The B-composition matrix `<B>`: row `n` holds `u_n`, with
/// `sum u_n(phi) x^n = g^[phi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BCompMatrix {
    pub triangle: Triangle<Rational>,
    pub source: Series<Rational>,
}

impl BCompMatrix {
    pub fn poly(&self, n: usize) -> ParamPoly {
        self.triangle.row_poly(n)
    }

    /// `g^[phi]` for a rational `phi`.
    pub fn series_at(&self, phi: &Rational) -> Series<Rational> {
        let size = self.triangle.size();
        Series::new((0..size).map(|n| self.poly(n).eval(phi)).collect(), size)
    }
}

/// `<B>` on `order` rows, entry by entry from the odd-partition sum
/// `((n+m)/2)_(m-1) sum prod b_i^(m_i) / m_i!` over partitions with `m` parts.
pub fn bcomp_matrix(b: &Series<Rational>, order: usize) -> Result<BCompMatrix> {
    require_order(b, b_terms_needed(order.saturating_sub(1)))?;
    // powers[i][m] = b_i^m / m!, shared by every partition
    let top = order.saturating_sub(1);
    let powers: Vec<Vec<Rational>> = (0..b_terms_needed(top))
        .map(|i| {
            let mut v = vec![Rational::one()];
            for m in 1..=top / (2 * i + 1) {
                let next = &v[m - 1] * b.coeff(i) / Rational::from_integer(m.into());
                v.push(next);
            }
            v
        })
        .collect();
    let mut t = Triangle::zeros(order);
    for n in 0..order {
        let mut row = vec![Rational::zero(); n + 1];
        for p in odd_partitions(n)? {
            let w = p
                .multiplicities
                .iter()
                .enumerate()
                .fold(Rational::one(), |acc, (i, &m)| {
                    if m == 0 {
                        acc
                    } else {
                        acc * &powers[i][m]
                    }
                });
            if !w.is_zero() {
                row[p.parts()] += w;
            }
        }
        for (m, e) in row.into_iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let e = if m == 0 {
                e
            } else {
                e * falling_factorial_rat(&int(((n + m) / 2) as i64), m - 1)
            };
            t.set(n, m, e);
        }
    }
    Ok(BCompMatrix {
        triangle: t,
        source: b.clone(),
    })
}

/// Rows of `<B>` straight from the functional equation with B-function
/// `phi B`, solved over polynomials in `phi`.
pub fn bcomp_by_solver(b: &Series<Rational>, order: usize) -> Result<Triangle<Rational>> {
    let phi_b = b.to_param().mul_coeff(&ParamPoly::var());
    let g = solve_b_function(&phi_b, order)?;
    Ok(Triangle::from_fn(order, |n, m| g.coeff(n).coeff(m)))
}

/// `N_n(x) = (1/n) sum binom(n, m-1) binom(n, m) x^m`, `N_0 = 1`.
pub fn narayana(n: usize) -> ParamPoly {
    if n == 0 {
        return ParamPoly::one();
    }
    let n = n as i64;
    ParamPoly::new(
        (0..=n)
            .map(|m| Rational::new(binomial(n, m - 1) * binomial(n, m), n.into()))
            .collect(),
    )
}

/// Rows `N_0 .. N_(rows-1)` as a triangle.
pub fn narayana_triangle(rows: usize) -> Triangle<Rational> {
    Triangle::from_fn(rows, |n, m| narayana(n).coeff(m))
}

/// `N_(n,m)`
fn narayana_number(n: usize, m: usize) -> Rational {
    narayana(n).coeff(m)
}

/// Row `n` of the composition-polynomial matrix of the RNA series, from the
/// Narayana closed form.
pub fn rna_row_closed(n: usize) -> ParamPoly {
    let half = n / 2;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for m in 0..=half {
        if n.is_multiple_of(2) {
            coeffs[2 * m] = narayana_number(half + m, 2 * m);
        } else {
            coeffs[2 * m + 1] = narayana_number(half + m + 1, 2 * m + 1);
        }
    }
    ParamPoly::new(coeffs)
}

/// `T_n(x) = 1/(n+1) sum binom(n+1, m+1) binom(n+m+2, m) x^m`.
pub fn t_poly(n: usize) -> ParamPoly {
    let n = n as i64;
    ParamPoly::new(
        (0..=n)
            .map(|m| {
                Rational::new(
                    binomial(n + 1, m + 1) * binomial(n + m + 2, m),
                    (n + 1).into(),
                )
            })
            .collect(),
    )
}

fn half_if_even(d: usize) -> Option<usize> {
    d.is_multiple_of(2).then_some(d / 2)
}

/// Entry `(n, m)` of `<1 + x>`: `C_((n-m)/2) binom((n+m)/2, (3m-n)/2)`.
pub fn case_1px_entry(n: usize, m: usize) -> Rational {
    if m > n {
        return Rational::zero();
    }
    match half_if_even(n - m) {
        Some(h) => {
            let top = ((n + m) / 2) as i64;
            let bottom = (3 * m as i64 - n as i64) / 2;
            Rational::from_integer(catalan(h) * binomial(top, bottom))
        }
        None => Rational::zero(),
    }
}

/// Entry `(n, m)` of `<C>`: `C_((n-m)/2) binom(n-1, m-1)`, and 1 at the origin.
pub fn case_catalan_entry(n: usize, m: usize) -> Rational {
    if m > n {
        return Rational::zero();
    }
    if n == 0 {
        return Rational::one();
    }
    match half_if_even(n - m) {
        Some(h) => Rational::from_integer(catalan(h) * binomial(n as i64 - 1, m as i64 - 1)),
        None => Rational::zero(),
    }
}

/// The triangle whose column `n+1` is `x^(n+1) T_n(x) (1+x)`; column 0 is `1`.
pub fn case_catalan_pair_triangle(rows: usize) -> Triangle<Rational> {
    let mut t = Triangle::zeros(rows);
    if rows > 0 {
        t.set(0, 0, Rational::one());
    }
    for col in 1..rows {
        let c = t_poly(col - 1) * &ParamPoly::from_ints(&[1, 1]);
        for (k, v) in c.coeffs().iter().enumerate() {
            let row = col + k;
            if row < rows {
                t.set(row, col, v.clone());
            }
        }
    }
    t
}

/// `s_n(m) = [x^n] B^m` as polynomials in `m`; row `n` holds the
/// coefficients of `s_n`.
pub fn convolution_rows(b: &Series<Rational>, order: usize) -> Result<Triangle<Rational>> {
    require_unit_constant(b)?;
    require_order(b, order)?;
    let s = b.truncate(order).pow_param()?;
    Ok(Triangle::from_fn(order, |n, k| s.coeff(n).coeff(k)))
}

/// `[x^k] B^m` for all `k <= max_k` and `m <= max_m`.
fn power_table(b: &Series<Rational>, max_k: usize, max_m: usize) -> Result<Vec<Series<Rational>>> {
    require_order(b, max_k + 1)?;
    let b = b.truncate(max_k + 1);
    let mut out = Vec::with_capacity(max_m + 1);
    let mut p = Series::one(max_k + 1);
    for _ in 0..=max_m {
        out.push(p.clone());
        p = &p * &b;
    }
    Ok(out)
}

/// Terms `(m, s_((n-m)/2)(m) / m!)` with `n - m` even and `m >= 1`.
fn convolution_terms(b: &Series<Rational>, n: usize) -> Result<Vec<(usize, Rational)>> {
    let powers = power_table(b, n / 2, n)?;
    Ok((1..=n)
        .filter(|m| (n - m).is_multiple_of(2))
        .map(|m| {
            let s = powers[m].coeff((n - m) / 2);
            (m, s / Rational::from_integer(factorial(m)))
        })
        .collect())
}

/// Row `n` of `<B>` rebuilt from convolution values:
/// `sum ((n+m)/2)_(m-1) s_((n-m)/2)(m) / m! x^m`.
pub fn u_poly(b: &Series<Rational>, n: usize) -> Result<ParamPoly> {
    if n == 0 {
        return Ok(ParamPoly::one());
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (m, v) in convolution_terms(b, n)? {
        coeffs[m] = v * falling_factorial_rat(&int(((n + m) / 2) as i64), m - 1);
    }
    Ok(ParamPoly::new(coeffs))
}

/// `[x^n] (g^[phi])^beta` as a polynomial in `phi`:
/// `sum beta (beta + (n+m)/2 - 1)_(m-1) s_((n-m)/2)(m) / m! phi^m`.
pub fn u_beta(b: &Series<Rational>, n: usize, beta: &Rational) -> Result<ParamPoly> {
    if n == 0 {
        return Ok(ParamPoly::one());
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (m, v) in convolution_terms(b, n)? {
        let shift = beta + int(((n + m) / 2) as i64 - 1);
        coeffs[m] = v * beta * falling_factorial_rat(&shift, m - 1);
    }
    Ok(ParamPoly::new(coeffs))
}

/// The same coefficient as a polynomial in `beta` at a rational `phi`.
pub fn u_beta_param(b: &Series<Rational>, n: usize, phi: &Rational) -> Result<ParamPoly> {
    if n == 0 {
        return Ok(ParamPoly::one());
    }
    let mut acc = ParamPoly::zero();
    for (m, v) in convolution_terms(b, n)? {
        let t = ParamPoly::var_plus(int(((n + m) / 2) as i64 - 1));
        let c = v * num_traits::pow(phi.clone(), m);
        acc += &(ParamPoly::var() * &falling_factorial(&t, m - 1)).scale(&c);
    }
    Ok(acc)
}

/// Descending diagonal `n` of `(1, x B)_E`: coefficient `m` is
/// `(n+m)!/m! [x^n] B^m`.
pub fn exp_lagrange_diagonal(
    b: &Series<Rational>,
    n: usize,
    order: usize,
) -> Result<Series<Rational>> {
    let powers = power_table(b, n, order.saturating_sub(1))?;
    Ok(Series::new(
        (0..order)
            .map(|m| powers[m].coeff(n) * crate::riordan::factorial_ratio(n + m, m))
            .collect(),
        order,
    ))
}

/// Whether `<B>` is of Appell type on `order` rows: shifting one row and
/// one column down gives `(sum b_n x^(2n)/(2n)!, x)_E`.
pub fn appell_type_check(b: &Series<Rational>, order: usize) -> Result<bool> {
    require_unit_constant(b)?;
    let t = bcomp_matrix(b, order)?.triangle;
    for n in 0..order.saturating_sub(1) {
        for m in 0..=n {
            let expected = match half_if_even(n - m) {
                Some(h) => {
                    b.coeff(h) * crate::riordan::factorial_ratio(n, m)
                        / Rational::from_integer(factorial(n - m))
                }
                None => Rational::zero(),
            };
            if t.entry(n + 1, m + 1) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `b_n = C_n b_1^n` for every known coefficient.
pub fn is_catalan_scaled(b: &Series<Rational>) -> bool {
    let b1 = b.coeff(1);
    (0..b.order())
        .all(|n| b.coeff(n) == Rational::from_integer(catalan(n)) * num_traits::pow(b1.clone(), n))
}

/// `R^(phi)(beta, x)`, the series with B-function `phi / (1 - beta x)`.
pub fn rna_series(beta: &Rational, phi: &Rational, order: usize) -> Result<Series<Rational>> {
    if beta.is_zero() {
        return rna_series_by_solver(beta, phi, order);
    }
    let wide = order + 2;
    let q = Series::new(vec![Rational::one(), -phi.clone(), beta.clone()], wide);
    let disc = &(&q * &q)
        - &Series::new(
            vec![Rational::zero(), Rational::zero(), int(4) * beta],
            wide,
        );
    let num = &q - &disc.sqrt()?;
    Ok(num
        .shift_down(2)?
        .scale(&(int(2) * beta).recip())
        .truncate(order))
}

/// The same series from the functional equation.
pub fn rna_series_by_solver(
    beta: &Rational,
    phi: &Rational,
    order: usize,
) -> Result<Series<Rational>> {
    let b = Series::geometric(beta.clone(), order).scale(phi);
    solve_b_function(&b, order)
}
