use proptest::prelude::*;

use riordan::bexpand::{
    a_expand, b_expand, bcomp_by_solver, bcomp_matrix, exp_lagrange_diagonal, odd_partitions,
    u_beta, u_poly,
};
use riordan::matrix_log::{
    bell_log, bell_power, c_closed, exp_nilpotent, extract_b_series, l_matrix,
    l_matrix_by_recurrence,
};
use riordan::ring::factorial;
use riordan::riordan::solve_b_function;
use riordan::{int, rat, Rational, RiordanMatrix, Series};

fn small_series(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

fn unit_series(order: usize) -> impl Strategy<Value = Series<Rational>> {
    small_series(order - 1).prop_map(move |tail| {
        let mut c = vec![1];
        c.extend(tail);
        Series::from_ints(&c, order)
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn partition_sum_matches_power_of_solution(b in small_series(6)) {
        let b = Series::from_ints(&b, 6);
        let order = 11;
        let g = solve_b_function(&b, order).unwrap();
        let oracle = g.pow_param().unwrap();
        for n in 0..order {
            prop_assert_eq!(b_expand(&b, n).unwrap(), oracle.coeff(n));
        }
    }

    #[test]
    fn bcomp_matches_solver_and_vanishes_off_parity(b in small_series(6)) {
        let b = Series::from_ints(&b, 6);
        let m = bcomp_matrix(&b, 11).unwrap().triangle;
        prop_assert_eq!(&m, &bcomp_by_solver(&b, 11).unwrap());
        for n in 0..11 {
            for k in 0..=n {
                if (n - k) % 2 == 1 {
                    prop_assert!(m.entry(n, k) == int(0));
                }
            }
            prop_assert_eq!(u_poly(&b, n).unwrap(), m.row_poly(n));
        }
    }

    #[test]
    fn descending_diagonals_match_exponential_lagrange(b in small_series(5)) {
        let b = Series::from_ints(&b, 8);
        let m = bcomp_matrix(&b, 16).unwrap().triangle;
        for n in 0..=4 {
            let d = m.descending_diagonal(2 * n);
            let e = exp_lagrange_diagonal(&b, n, d.order()).unwrap()
                .scale(&Rational::from_integer(factorial(n + 1)).recip());
            prop_assert_eq!(d, e);
        }
    }

    #[test]
    fn u_beta_is_power_of_solution(b in small_series(4), beta in small_rational(), phi in small_rational()) {
        let b = Series::from_ints(&b, 6);
        let order = 9;
        let g = solve_b_function(&b.scale(&phi), order).unwrap();
        let gb = g.pow_rat(&beta).unwrap();
        for n in 0..order {
            prop_assert_eq!(u_beta(&b, n, &beta).unwrap().eval(&phi), gb.coeff(n));
        }
    }

    #[test]
    fn log_exp_round_trip(g in unit_series(9)) {
        let log = bell_log(&g, 9).unwrap();
        prop_assert_eq!(exp_nilpotent(&log).unwrap(), RiordanMatrix::bell(g.clone()).unwrap().materialize());
    }

    #[test]
    fn l_matrix_paths_agree(g in unit_series(9)) {
        let l = l_matrix(&g, 9).unwrap();
        prop_assert_eq!(&l.triangle, &l_matrix_by_recurrence(&g, 9).unwrap().triangle);
        let b = extract_b_series(&g, 9).unwrap();
        for n in 0..9 {
            prop_assert_eq!(c_closed(&b, n).unwrap(), l.poly(n));
        }
    }

    #[test]
    fn bell_powers_form_a_group(g in unit_series(8), a in small_rational(), c in small_rational()) {
        let ga = RiordanMatrix::bell(bell_power(&g, &a, 8).unwrap()).unwrap();
        let gc = RiordanMatrix::bell(bell_power(&g, &c, 8).unwrap()).unwrap();
        let sum = bell_power(&g, &(&a + &c), 8).unwrap();
        let product = ga.multiply(&gc).unwrap();
        prop_assert_eq!(product.g(), &sum);
    }

    #[test]
    fn a_expansion_matches_power_of_solution(a in small_series(5)) {
        let mut coeffs = vec![1];
        coeffs.extend(a);
        let a = Series::from_ints(&coeffs, 7);
        let g = RiordanMatrix::from_a_sequence(&a, 7).unwrap().g().clone();
        let oracle = g.pow_param().unwrap();
        for n in 0..7 {
            prop_assert_eq!(a_expand(&a, n).unwrap(), oracle.coeff(n));
        }
    }
}

/// Partitions into odd parts are equinumerous with partitions into distinct
/// parts; count the latter with a direct product expansion.
#[test]
fn odd_partition_counts() {
    let max = 40;
    let mut distinct = vec![0u64; max + 1];
    distinct[0] = 1;
    for part in 1..=max {
        for n in (part..=max).rev() {
            distinct[n] += distinct[n - part];
        }
    }
    for (n, &expected) in distinct.iter().enumerate() {
        let parts = odd_partitions(n).unwrap();
        assert_eq!(parts.len() as u64, expected, "n = {n}");
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, parts, "order and uniqueness at n = {n}");
    }
}
