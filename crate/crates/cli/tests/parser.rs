use num_bigint::BigInt;
use proptest::prelude::*;
use riordan::{rat, Rational};
use riordan_cli::expr::{Func, Named};
use riordan_cli::{parse_expr, Expr};

const CORPUS: &[&str] = &[
    "x",
    "1",
    "1/2",
    "-3",
    "1/(1-x)",
    "1 - x - x^2",
    "(1 - x)^-2",
    "(1+x)/(1-x)^2",
    "x/(1-x)^2",
    "sqrt(1-4*x^2)",
    "sqrt(1 - 4*x)",
    "(1 - sqrt(1-4*x))/(2*x)",
    "catalan",
    "rna",
    "geom",
    "binom_series(2)",
    "binom_series(3)^2",
    "coeffs([1,0,1])",
    "coeffs([1, -1/2, 3/4])",
    "coeffs([])",
    "exp(x)",
    "log(1+x)",
    "exp(log(geom))",
    "-x^2",
    "(-x)^2",
    "--x",
    "x - -x",
    "1-2-3",
    "12/2/3",
    "2/3^2",
    "(2/3)^2",
    "x^2^3",
    "x*(1/2)",
    "1/2*x",
    "x/(1/2)",
    "2*x*3",
    "x - (1 - x)",
    "x - (1 + x)",
    "(x + 1)*(x - 1)",
    "-(x*x)",
    "-(1/2)",
    "catalan^2 - catalan",
    "1 + x*catalan^2",
    "rna*(1 - x) - 1",
    "sqrt(catalan)",
    "(1 - x - sqrt(1 - 2*x - 3*x^2))/(2*x^2)",
    "1/(1 - x*geom)",
    "exp(x - x^2/2)",
    "log(geom)/x",
    "binom_series(1) - geom",
];

#[test]
fn corpus_has_fifty_expressions() {
    assert_eq!(CORPUS.len(), 50);
}

#[test]
fn corpus_round_trips() {
    for text in CORPUS {
        let e = parse_expr(text).unwrap_or_else(|err| panic!("{text}: {err}"));
        let rendered = e.to_string();
        let again = parse_expr(&rendered).unwrap_or_else(|err| panic!("{rendered}: {err}"));
        assert_eq!(again, e, "{text} rendered as {rendered}");
        assert_eq!(again.to_string(), rendered);
    }
}

#[test]
fn corpus_evaluates_consistently() {
    for text in CORPUS {
        let e = parse_expr(text).unwrap();
        let Ok(value) = e.eval(8) else { continue };
        assert_eq!(
            parse_expr(&e.to_string()).unwrap().eval(8).unwrap(),
            value,
            "{text}"
        );
    }
}

#[test]
fn known_values() {
    let eval = |s: &str, n| parse_expr(s).unwrap().eval(n).unwrap();
    assert_eq!(
        eval("(1 - x - sqrt(1 - 2*x - 3*x^2))/(2*x^2)", 6),
        eval("coeffs([1,1,2,4,9,21])", 6)
    );
    assert_eq!(eval("binom_series(2)", 8), eval("catalan", 8));
    assert_eq!(eval("exp(log(geom))", 8), eval("geom", 8));
    assert_eq!(eval("log(geom)/x", 4).coeff(3), rat(1, 4));
    assert_eq!(eval("binom_series(1) - geom", 6), eval("0", 6));
    assert_eq!(
        eval("rna", 10).coeffs()[9],
        Rational::from_integer(BigInt::from(185))
    );
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20).prop_map(|n| Expr::Lit(rat(n, 1))),
        (0i64..20, 2i64..9).prop_map(|(n, d)| Expr::Lit(rat(n, d))),
        Just(Expr::X),
        Just(Expr::Named(Named::Catalan)),
        Just(Expr::Named(Named::Rna)),
        Just(Expr::Named(Named::Geom)),
        (1usize..5).prop_map(Expr::BinomSeries),
        prop::collection::vec((-5i64..5, 1i64..4).prop_map(|(n, d)| rat(n, d)), 0..4)
            .prop_map(Expr::Coeffs),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |e| Expr::Neg(b(e))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Add(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Sub(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Mul(b(l), b(r))),
            // a quotient of two literals is folded by the parser
            (inner.clone(), inner.clone())
                .prop_filter("literal quotient", |(l, r)| !matches!(
                    (l, r),
                    (Expr::Lit(_), Expr::Lit(_))
                ))
                .prop_map(move |(l, r)| Expr::Div(b(l), b(r))),
            (inner.clone(), -3i64..5).prop_map(move |(e, k)| Expr::Pow(b(e), k)),
            (
                inner,
                prop_oneof![Just(Func::Sqrt), Just(Func::Exp), Just(Func::Log)]
            )
                .prop_map(move |(e, f)| Expr::Call(f, b(e))),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), e, "{}", text);
    }
}
