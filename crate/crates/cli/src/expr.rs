//! Generating-function expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)*
//! atom   := integer | 'x' | name | name '(' args ')' | '(' expr ')'
//! ```
//!
//! Names: `catalan`, `rna`, `geom`, `sqrt(e)`, `exp(e)`, `log(e)`,
//! `binom_series(r)`, `coeffs([a0, a1, ...])`. A quotient of two literals is
//! folded into a single rational literal.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use riordan::bexpand::{generalized_binomial, rna_series};
use riordan::ring::parse_rational;
use riordan::series::catalan_series;
use riordan::{Rational, Series};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Lit(Rational),
    X,
    Named(Named),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
    BinomSeries(usize),
    Coeffs(Vec<Rational>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Catalan,
    Rna,
    Geom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Exp,
    Log,
}

impl Named {
    fn name(self) -> &'static str {
        match self {
            Named::Catalan => "catalan",
            Named::Rna => "rna",
            Named::Geom => "geom",
        }
    }
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Log => "log",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: BTreeSet<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected: Vec<&str> = self.expected.iter().copied().collect();
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.offset,
            expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("{0}")]
    Math(#[from] riordan::Error),
    #[error("division by a series that vanishes to order {0}")]
    ZeroDivisor(usize),
    #[error("cannot divide: numerator vanishes to a lower order than the denominator")]
    Pole,
    #[error("lost precision: could only determine {got} of {wanted} coefficients")]
    Precision { got: usize, wanted: usize },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Sym(c) => format!("{c:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if b"+-*/^()[],".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(ParseError {
                offset: i,
                expected: ["expression"].into_iter().collect(),
                found: format!("{ch:?}"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            expected: expected.iter().copied().collect(),
            found: self.peek().describe(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, label: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[label])
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                let rhs = self.unary()?;
                lhs = match (lhs, rhs) {
                    (Expr::Lit(a), Expr::Lit(b)) if !b.is_zero() => Expr::Lit(a / b),
                    (a, b) => Expr::Div(Box::new(a), Box::new(b)),
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.eat('^') {
            let paren = self.eat('(');
            let neg = self.eat('-');
            let e = match self.peek().clone() {
                Tok::Int(n) => {
                    self.bump();
                    i64::try_from(n).or_else(|_| self.fail(&["exponent that fits in 64 bits"]))?
                }
                _ => return self.fail(&["integer exponent"]),
            };
            if paren {
                self.expect(')', "')'")?;
            }
            base = Expr::Pow(Box::new(base), if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        const ATOM: &[&str] = &["number", "'x'", "'('", "series name", "function name"];
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Lit(Rational::from_integer(n)))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let start = self.offset();
                self.bump();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "catalan" => Ok(Expr::Named(Named::Catalan)),
                    "rna" => Ok(Expr::Named(Named::Rna)),
                    "geom" => Ok(Expr::Named(Named::Geom)),
                    "sqrt" | "exp" | "log" => {
                        let f = match name.as_str() {
                            "sqrt" => Func::Sqrt,
                            "exp" => Func::Exp,
                            _ => Func::Log,
                        };
                        self.expect('(', "'('")?;
                        let e = self.expr()?;
                        self.expect(')', "')'")?;
                        Ok(Expr::Call(f, Box::new(e)))
                    }
                    "binom_series" => {
                        self.expect('(', "'('")?;
                        let r = match self.peek().clone() {
                            Tok::Int(n) if n.is_positive() => {
                                self.bump();
                                usize::try_from(n)
                                    .or_else(|_| self.fail(&["small positive integer"]))?
                            }
                            _ => return self.fail(&["positive integer"]),
                        };
                        self.expect(')', "')'")?;
                        Ok(Expr::BinomSeries(r))
                    }
                    "coeffs" => {
                        self.expect('(', "'('")?;
                        self.expect('[', "'['")?;
                        let mut v = Vec::new();
                        if !self.eat(']') {
                            loop {
                                v.push(self.signed_rational()?);
                                if self.eat(']') {
                                    break;
                                }
                                self.expect(',', "',' or ']'")?;
                            }
                        }
                        self.expect(')', "')'")?;
                        Ok(Expr::Coeffs(v))
                    }
                    _ => Err(ParseError {
                        offset: start,
                        expected: ATOM.iter().copied().collect(),
                        found: format!("unknown name {name:?}"),
                    }),
                }
            }
            _ => self.fail(ATOM),
        }
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat('-');
        let num = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            _ => return self.fail(&["number"]),
        };
        let mut r = Rational::from_integer(num);
        if self.eat('/') {
            match self.peek().clone() {
                Tok::Int(d) if !d.is_zero() => {
                    self.bump();
                    r /= Rational::from_integer(d);
                }
                _ => return self.fail(&["nonzero denominator"]),
            }
        }
        Ok(if neg { -r } else { r })
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

/// Binding strength used for parenthesization when rendering.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Lit(r) if !r.is_integer() || r.is_negative() => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if level(e) >= min {
        e.to_string()
    } else {
        format!("({e})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(r) if r.is_negative() => write!(f, "-{}", wrap(&Expr::Lit(-r.clone()), 3)),
            Expr::Lit(r) => write!(f, "{r}"),
            Expr::X => write!(f, "x"),
            Expr::Named(n) => write!(f, "{}", n.name()),
            Expr::Neg(e) => write!(f, "-{}", wrap(e, 3)),
            Expr::Add(a, b) => write!(f, "{} + {}", wrap(a, 1), wrap(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", wrap(a, 1), wrap(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", wrap(a, 2), wrap(b, 3)),
            Expr::Div(a, b) => write!(f, "{}/{}", wrap(a, 2), wrap(b, 3)),
            Expr::Pow(a, k) => write!(f, "{}^{}", wrap(a, 4), k),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
            Expr::BinomSeries(r) => write!(f, "binom_series({r})"),
            Expr::Coeffs(v) => {
                let items: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "coeffs([{}])", items.join(", "))
            }
        }
    }
}

/// Extra working precision tried in turn; a division by `x^k` costs `k`.
const SLACK: &[usize] = &[4, 16, 64];

impl Expr {
    /// The series known to exactly `order` coefficients.
    pub fn eval(&self, order: usize) -> Result<Series<Rational>, EvalError> {
        let mut last = EvalError::Precision {
            got: 0,
            wanted: order,
        };
        for &slack in SLACK {
            let s = self.eval_at(order + slack)?;
            if s.order() >= order {
                return Ok(s.truncate(order));
            }
            last = EvalError::Precision {
                got: s.order(),
                wanted: order,
            };
        }
        Err(last)
    }

    fn eval_at(&self, order: usize) -> Result<Series<Rational>, EvalError> {
        Ok(match self {
            Expr::Lit(r) => Series::constant(r.clone(), order),
            Expr::X => Series::x(order),
            Expr::Named(Named::Catalan) => catalan_series(order),
            Expr::Named(Named::Geom) => Series::geometric(Rational::one(), order),
            Expr::Named(Named::Rna) => rna_series(&Rational::one(), &Rational::one(), order)?,
            Expr::Neg(e) => -&e.eval_at(order)?,
            Expr::Add(a, b) => &a.eval_at(order)? + &b.eval_at(order)?,
            Expr::Sub(a, b) => &a.eval_at(order)? - &b.eval_at(order)?,
            Expr::Mul(a, b) => &a.eval_at(order)? * &b.eval_at(order)?,
            Expr::Div(a, b) => divide(&a.eval_at(order)?, &b.eval_at(order)?)?,
            Expr::Pow(a, k) => {
                let base = a.eval_at(order)?;
                let p = base.pow_int(k.unsigned_abs() as usize);
                if *k < 0 {
                    divide(&Series::one(p.order()), &p)?
                } else {
                    p
                }
            }
            Expr::Call(Func::Sqrt, e) => e.eval_at(order)?.sqrt()?,
            Expr::Call(Func::Exp, e) => e.eval_at(order)?.exp()?,
            Expr::Call(Func::Log, e) => e.eval_at(order)?.log()?,
            Expr::BinomSeries(r) => generalized_binomial(*r, order)?.eval_param(&Rational::one()),
            Expr::Coeffs(v) => Series::new(v.iter().take(order).cloned().collect(), order),
        })
    }
}

/// `a / b`, cancelling a common power of `x` first.
fn divide(a: &Series<Rational>, b: &Series<Rational>) -> Result<Series<Rational>, EvalError> {
    let v = b.valuation().ok_or(EvalError::ZeroDivisor(b.order()))?;
    if v == 0 {
        return Ok(a.div(b)?);
    }
    if a.valuation().is_some_and(|va| va < v) {
        return Err(EvalError::Pole);
    }
    let num = a.shift_down(v)?;
    let den = b.shift_down(v)?;
    Ok(num.div(&den)?)
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str, order: usize) -> Result<Series<Rational>, crate::CliError> {
    Ok(parse_expr(text)?.eval(order)?)
}

/// Parse a plain rational such as `-3/4`.
pub fn parse_value(text: &str) -> Result<Rational, crate::CliError> {
    parse_rational(text).map_err(|e| crate::CliError::Usage(format!("bad rational {text:?}: {e}")))
}
