//! Inputs shared by the benchmarks in `benches/`.

use riordan::suites::{geometric, rna};
use riordan::{Rational, Series};

/// `1/(1-x)`, the B-function of the RNA series.
pub fn rna_b_function(order: usize) -> Series<Rational> {
    geometric(order)
}

/// The RNA series `R`.
pub fn rna_series(order: usize) -> Series<Rational> {
    rna(order).expect("RNA series is well defined")
}

/// `x R(x)`, a series with a compositional inverse.
pub fn x_rna(order: usize) -> Series<Rational> {
    rna_series(order).shift_up(1).truncate(order)
}
