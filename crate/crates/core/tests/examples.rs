use riordan::bexpand::{
    exp_lagrange_diagonal, generalized_binomial, rna_row_closed, rna_series, rna_series_by_solver,
};
use riordan::matrix_log::{bell_power, c_closed, extract_b_series, l_matrix};
use riordan::riordan::solve_b_function;
use riordan::suites::{geometric, rna};
use riordan::{int, rat, ParamPoly, Rational, RiordanMatrix, Series};

#[test]
fn rna_power_two_has_doubled_b_function() {
    let r = rna(14).unwrap();
    let doubled = RiordanMatrix::from_b_sequence(&geometric(14).scale(&int(2)), 14, true).unwrap();
    assert_eq!(&bell_power(&r, &int(2), 14).unwrap(), doubled.g());
}

#[test]
fn rna_b_sequence_is_all_ones() {
    let m = RiordanMatrix::bell(rna(14).unwrap()).unwrap();
    let b = m.b_sequence().unwrap();
    assert_eq!(b.series(), geometric(b.terms.len()));
}

#[test]
fn rna_composition_polynomial_three() {
    let b = extract_b_series(&rna(12).unwrap(), 12).unwrap();
    assert_eq!(
        c_closed(&b, 3).unwrap(),
        ParamPoly::from_ints(&[0, 1, 0, 1])
    );
    let l = l_matrix(&rna(12).unwrap(), 12).unwrap();
    assert_eq!(l.poly(7), ParamPoly::from_ints(&[0, 1, 0, 20, 0, 15, 0, 1]));
}

#[test]
fn generalized_rna_at_beta_two() {
    let order = 12;
    let closed = rna_series(&int(2), &int(1), order).unwrap();
    assert_eq!(
        closed,
        rna_series_by_solver(&int(2), &int(1), order).unwrap()
    );
    // scaling: coefficient n is sum_m 2^((n-m)/2) [x^m] r_n
    for n in 0..order {
        let r = rna_row_closed(n);
        let weighted = (0..=n)
            .filter(|m| (n - m) % 2 == 0)
            .fold(Rational::from_integer(0.into()), |acc, m| {
                acc + r.coeff(m) * num_traits::pow(int(2), (n - m) / 2)
            });
        assert_eq!(closed.coeff(n), weighted, "n = {n}");
    }
    assert_eq!(
        rna_series(&int(1), &int(-1), 16).unwrap(),
        rna(16).unwrap().reflect()
    );
}

#[test]
fn quadratic_a_sequence_factors_through_catalan_power() {
    // g = A(x g) with A = 1 + a1 x + a2 x^2:
    // g^phi = (1 - a1 x)^(-phi) C(a2 x^2 / (1 - a1 x)^2)^phi
    let order = 12;
    let (a1, a2) = (int(2), int(3));
    let a = Series::new(vec![int(1), a1.clone(), a2.clone()], order);
    let g = RiordanMatrix::from_a_sequence(&a, order)
        .unwrap()
        .g()
        .clone();
    let lin = Series::new(vec![int(1), -a1], order);
    let h = lin
        .pow_int(2)
        .recip()
        .unwrap()
        .shift_up(2)
        .truncate(order)
        .scale(&a2);
    for phi in [int(1), rat(5, 2), int(-1)] {
        let f = lin.pow_rat(&-phi.clone()).unwrap();
        let cat = generalized_binomial(2, order).unwrap().eval_param(&phi);
        let rhs = &f * &cat.compose(&h).unwrap();
        assert_eq!(g.pow_rat(&phi).unwrap(), rhs, "phi = {phi}");
    }
}

#[test]
fn exponential_lagrange_diagonals() {
    let one_px = Series::from_ints(&[1, 1], 6);
    let d = exp_lagrange_diagonal(&one_px, 2, 8).unwrap();
    let expected = Series::from_ints(&[1, -1], 8)
        .pow_int(5)
        .recip()
        .unwrap()
        .shift_up(2)
        .truncate(8)
        .scale(&int(12));
    assert_eq!(d, expected);
}

#[test]
fn catalan_b_function_gives_appell_rows() {
    // [x^n] g^[phi] = phi (n-1)! [x^(n-1)] C~(x) e^(phi x) for B = C
    let order = 10;
    let cat = riordan::series::catalan_series(order);
    let phi = int(3);
    let g = solve_b_function(&cat.scale(&phi), order).unwrap();
    let c_tilde = Series::new(
        (0..order)
            .map(|k| {
                if k % 2 == 0 {
                    cat.coeff(k / 2) / Rational::from_integer(riordan::ring::factorial(k))
                } else {
                    int(0)
                }
            })
            .collect(),
        order,
    );
    let e = Series::from_ints(&[0, 1], order).scale(&phi).exp().unwrap();
    let prod = &c_tilde * &e;
    for n in 1..order {
        let expected =
            &phi * Rational::from_integer(riordan::ring::factorial(n - 1)) * prod.coeff(n - 1);
        assert_eq!(g.coeff(n), expected, "n = {n}");
    }
}
