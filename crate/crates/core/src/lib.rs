//! Exact computations with Riordan matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: exact coefficient rings, [`Rational`] and [`ParamPoly`].
//! * [`series`]: truncated formal power series with composition, reversion,
//!   square roots, logarithms, exponentials and parametric powers.
//! * [`triangle`]: explicit lower-triangular arrays and their row, column and
//!   diagonal extractors.
//! * [`riordan`]: Riordan matrices, the group law, A- and B-sequences,
//!   pseudo-involutions and the square-root factorization.
//! * [`matrix_log`]: logarithms and parametric powers of Bell matrices and
//!   composition polynomials.
//! * [`bexpand`]: the B-expansion of powers, B-composition matrices, their
//!   closed forms for `B = 1/(1-x)`, `1+x` and the Catalan series, and the
//!   convolution machinery built on them.
//! * [`suites`]: named identity checks that tie all of the above together.
//!
//! All arithmetic is exact; every comparison is equality.

pub mod bexpand;
pub mod error;
pub mod matrix_log;
pub mod reference;
pub mod ring;
pub mod riordan;
pub mod series;
pub mod suites;
pub mod triangle;

pub use error::{Error, Result};
pub use ring::{falling_factorial, int, rat, Coeff, ParamPoly, Rational};
pub use riordan::{BSequence, Kind, RiordanMatrix, SqrtFactorization};
pub use series::Series;
pub use triangle::Triangle;
