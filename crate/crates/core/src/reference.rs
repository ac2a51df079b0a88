//! Published tables used as fixtures. Rows start at row 0.

use crate::ring::Rational;
use crate::triangle::Triangle;

/// Composition polynomials of the RNA series, `(1, x R) = <1/(1-x)>`.
pub const RNA_COMPOSITION: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[0, 1, 0, 1],
    &[0, 0, 3, 0, 1],
    &[0, 1, 0, 6, 0, 1],
    &[0, 0, 6, 0, 10, 0, 1],
    &[0, 1, 0, 20, 0, 15, 0, 1],
    &[0, 0, 10, 0, 50, 0, 21, 0, 1],
    &[0, 1, 0, 50, 0, 105, 0, 28, 0, 1],
    &[0, 0, 15, 0, 175, 0, 196, 0, 36, 0, 1],
];

/// The RNA matrix `(R, x R)`.
pub const RNA_TRIANGLE: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[2, 3, 3, 1],
    &[4, 6, 6, 4, 1],
    &[8, 13, 13, 10, 5, 1],
    &[17, 28, 30, 24, 15, 6, 1],
];

pub const NARAYANA: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 3, 1],
    &[0, 1, 6, 6, 1],
    &[0, 1, 10, 20, 10, 1],
    &[0, 1, 15, 50, 50, 15, 1],
];

/// `((1+x)/(1-x)^2, x/(1-x)^2)`
pub const ODD_PASCAL_PAIR: &[&[i64]] = &[&[1], &[3, 1], &[5, 5, 1], &[7, 14, 7, 1]];

/// `<1 + x>`
pub const BCOMP_ONE_PLUS_X: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[0, 1, 0, 1],
    &[0, 0, 3, 0, 1],
    &[0, 0, 0, 6, 0, 1],
    &[0, 0, 2, 0, 10, 0, 1],
    &[0, 0, 0, 10, 0, 15, 0, 1],
    &[0, 0, 0, 0, 30, 0, 21, 0, 1],
    &[0, 0, 0, 5, 0, 70, 0, 28, 0, 1],
    &[0, 0, 0, 0, 35, 0, 140, 0, 36, 0, 1],
];

/// `<C>` for the Catalan series `C`.
pub const BCOMP_CATALAN: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[0, 1, 0, 1],
    &[0, 0, 3, 0, 1],
    &[0, 2, 0, 6, 0, 1],
    &[0, 0, 10, 0, 10, 0, 1],
    &[0, 5, 0, 30, 0, 15, 0, 1],
    &[0, 0, 35, 0, 70, 0, 21, 0, 1],
    &[0, 14, 0, 140, 0, 140, 0, 28, 0, 1],
    &[0, 0, 126, 0, 420, 0, 252, 0, 36, 0, 1],
];

/// Column `n+1` is `x^(n+1) T_n(x) (1+x)`.
pub const CATALAN_PAIR: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 0, 3, 1],
    &[0, 0, 2, 6, 1],
    &[0, 0, 0, 10, 10, 1],
    &[0, 0, 0, 5, 30, 15, 1],
    &[0, 0, 0, 0, 35, 70, 21, 1],
];

/// `g_0 .. g_10` of the B-expansion at `phi = 1` in the symbols `b_i`.
///
/// The printed `g_6` has `b0^5` as its leading term, which has the wrong
/// degree; the entry below uses `b0^6`.
pub const B1_EXPANSION: &[&str] = &[
    "1",
    "b0",
    "b0^2",
    "b0^3+b1",
    "b0^4+3b0b1",
    "b0^5+6b0^2b1+b2",
    "b0^6+10b0^3b1+4b0b2+2b1^2",
    "b0^7+15b0^4b1+10b0^2b2+10b0b1^2+b3",
    "b0^8+21b0^5b1+20b0^3b2+30b0^2b1^2+5b0b3+5b1b2",
    "b0^9+28b0^6b1+35b0^4b2+70b0^3b1^2+15b0^2b3+30b0b1b2+5b1^3+b4",
    "b0^10+36b0^7b1+56b0^5b2+140b0^4b1^2+35b0^3b3+35b0b1^3+105b0^2b1b2+6b0b4+6b1b3+3b2^2",
];

/// A fixture table as a triangle.
pub fn triangle(rows: &[&[i64]]) -> Triangle<Rational> {
    Triangle::from_ints(rows).expect("fixture rows are triangular")
}
