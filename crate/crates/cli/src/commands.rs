//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use riordan::bexpand::{
    b_expand, b_expand_symbolic, bcomp_matrix, case_catalan_pair_triangle, narayana_triangle,
    t_poly, u_beta,
};
use riordan::matrix_log::{bell_power, bell_power_param, l_matrix, l_matrix_by_recurrence};
use riordan::suites::{self, DEFAULT_ORDER, SUITE_NAMES};
use riordan::{Kind, Rational, RiordanMatrix, Triangle};
use serde_json::json;

use crate::bfile::{oeis_compare, BFile};
use crate::expr::{eval_str, parse_value};
use crate::output::{self, Format, Style};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Exact Riordan matrix computations")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Emit a header line in CSV output.
    #[arg(long, global = true)]
    pub header: bool,
    /// Write to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Size {
    /// Number of rows (equivalently, the truncation order).
    #[arg(long, visible_alias = "order", default_value_t = 8)]
    pub rows: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The triangle of (f, x g).
    Matrix {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        exponential: bool,
        #[command(flatten)]
        size: Size,
    },
    /// Coefficients of g^(phi), the g of (g, x g)^phi; without --phi, the
    /// composition polynomials c_n(phi).
    Power {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[command(flatten)]
        size: Size,
    },
    /// The composition-polynomial matrix L(g).
    CompPoly {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Build L(g) column by column from its B-function recurrence.
        #[arg(long)]
        recurrence: bool,
        #[command(flatten)]
        size: Size,
    },
    /// The B-composition matrix <B>; with --phi the series g^[phi]; with
    /// --beta the polynomials u_n(beta, phi).
    Bcomp {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, conflicts_with = "beta", allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[command(flatten)]
        size: Size,
    },
    /// [x^n] g^phi as a polynomial in phi, from the odd-partition sum.
    Bexpand {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "symbolic")]
        b: Option<String>,
        #[arg(long)]
        n: usize,
        /// Evaluate at this phi.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        /// Keep b_0, b_1, ... symbolic (phi defaults to 1).
        #[arg(long)]
        symbolic: bool,
    },
    /// The A-sequence of (f, x g).
    Aseq {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        size: Size,
    },
    /// The B-sequence of (1, x g).
    Bseq {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        size: Size,
    },
    /// Factor the pseudo-involution (1, x g) through (1, x sqrt g).
    SqrtFactor {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        size: Size,
    },
    /// A descending (or ascending) diagonal of a triangle.
    Diag {
        #[arg(long, value_enum)]
        of: DiagSource,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        ascending: bool,
        #[command(flatten)]
        size: Size,
    },
    /// Run named identity suites.
    Check {
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Compare a sequence with an OEIS b-file.
    OeisCompare {
        #[arg(long)]
        bfile: PathBuf,
        /// Comma-separated integers.
        #[arg(long, group = "source", allow_hyphen_values = true)]
        values: Option<String>,
        /// Coefficients of an expression.
        #[arg(long, group = "source", allow_hyphen_values = true)]
        expr: Option<String>,
        /// A built-in triangle, read by rows.
        #[arg(long, value_enum, group = "source")]
        triangle: Option<NamedTriangle>,
        /// Use this column of the triangle instead of reading by rows.
        #[arg(long, requires = "triangle")]
        column: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_match: usize,
        #[command(flatten)]
        size: Size,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagSource {
    /// (f, x g)
    Matrix,
    /// L(g)
    Lmatrix,
    /// <B>
    Bcomp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamedTriangle {
    /// (R, x R) for the RNA series R.
    Rna,
    /// L(R) = <1/(1-x)>.
    RnaComposition,
    Narayana,
    /// Coefficients of T_0, T_1, ...
    TPoly,
    /// Column n+1 is x^(n+1) T_n(x) (1+x).
    CatalanPair,
    /// <C> for the Catalan series.
    BcompCatalan,
}

impl NamedTriangle {
    pub fn build(self, rows: usize) -> Result<Triangle<Rational>, CliError> {
        Ok(match self {
            NamedTriangle::Rna => RiordanMatrix::bell(suites::rna(rows.max(1))?)?.materialize(),
            NamedTriangle::RnaComposition => {
                bcomp_matrix(&suites::geometric(rows.max(2)), rows)?.triangle
            }
            NamedTriangle::Narayana => narayana_triangle(rows),
            NamedTriangle::TPoly => {
                Triangle::from_rows((0..rows).map(|n| t_poly(n).coeffs().to_vec()).collect())?
            }
            NamedTriangle::CatalanPair => case_catalan_pair_triangle(rows),
            NamedTriangle::BcompCatalan => {
                bcomp_matrix(&riordan::series::catalan_series(rows.max(2)), rows)?.triangle
            }
        })
    }
}

/// The outcome of a command: text to emit and whether every check held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn positive(rows: usize) -> Result<usize, CliError> {
    if rows == 0 {
        Err(CliError::Usage("--rows must be positive".into()))
    } else {
        Ok(rows)
    }
}

fn integers(values: &[Rational]) -> Result<Vec<BigInt>, CliError> {
    values
        .iter()
        .map(|v| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(CliError::Usage(format!("{v} is not an integer")))
            }
        })
        .collect()
}

fn pad(v: &[Rational], len: usize) -> Vec<Rational> {
    let mut v = v.to_vec();
    v.resize(len, Rational::from_integer(0.into()));
    v
}

/// Execute a parsed command without touching the filesystem for output.
pub fn execute(command: &Command, style: Style) -> Result<Outcome, CliError> {
    match command {
        Command::Matrix {
            f,
            g,
            exponential,
            size,
        } => {
            let n = positive(size.rows)?;
            let kind = if *exponential {
                Kind::Exponential
            } else {
                Kind::Ordinary
            };
            let m = RiordanMatrix::new(eval_str(f, n)?, eval_str(g, n)?, kind)?;
            Ok(Outcome::ok(output::triangle(&m.materialize(), style)))
        }
        Command::Power { g, phi, size } => {
            let n = positive(size.rows)?;
            let g = eval_str(g, n)?;
            match phi {
                Some(phi) => Ok(Outcome::ok(output::series(
                    &bell_power(&g, &parse_value(phi)?, n)?,
                    style,
                ))),
                None => {
                    let p = bell_power_param(&g, n)?;
                    Ok(Outcome::ok(output::polys(p.coeffs(), "phi", style)))
                }
            }
        }
        Command::CompPoly {
            g,
            recurrence,
            size,
        } => {
            let n = positive(size.rows)?;
            let g = eval_str(g, n)?;
            let l = if *recurrence {
                l_matrix_by_recurrence(&g, n)?
            } else {
                l_matrix(&g, n)?
            };
            Ok(Outcome::ok(output::triangle(&l.triangle, style)))
        }
        Command::Bcomp { b, phi, beta, size } => {
            let n = positive(size.rows)?;
            let b = eval_str(b, n.max(2))?;
            if let Some(beta) = beta {
                let beta = parse_value(beta)?;
                let ps = (0..n)
                    .map(|k| u_beta(&b, k, &beta))
                    .collect::<Result<Vec<_>, _>>()?;
                return Ok(Outcome::ok(output::polys(&ps, "phi", style)));
            }
            let m = bcomp_matrix(&b, n)?;
            match phi {
                Some(phi) => Ok(Outcome::ok(output::series(
                    &m.series_at(&parse_value(phi)?),
                    style,
                ))),
                None => Ok(Outcome::ok(output::triangle(&m.triangle, style))),
            }
        }
        Command::Bexpand {
            b,
            n,
            phi,
            symbolic,
        } => {
            if *symbolic {
                let phi = match phi {
                    Some(p) => parse_value(p)?,
                    None => Rational::from_integer(1.into()),
                };
                let s = b_expand_symbolic(*n, &phi)?;
                return Ok(Outcome::ok(match style.format {
                    Format::Json => format!(
                        "{}\n",
                        json!({ "kind": "symbolic", "n": n, "value": s.to_string() })
                    ),
                    _ => format!("{s}\n"),
                }));
            }
            let b = eval_str(b.as_deref().unwrap_or_default(), n + 2)?;
            let p = b_expand(&b, *n)?;
            match phi {
                Some(phi) => Ok(Outcome::ok(output::values(
                    &[p.eval(&parse_value(phi)?)],
                    1,
                    style,
                ))),
                None => Ok(Outcome::ok(output::poly(&p, "phi", style))),
            }
        }
        Command::Aseq { g, size } => {
            let n = positive(size.rows)?;
            let m = RiordanMatrix::lagrange(eval_str(g, n)?)?;
            Ok(Outcome::ok(output::series(&m.a_sequence()?, style)))
        }
        Command::Bseq { g, size } => {
            let n = positive(size.rows)?;
            let m = RiordanMatrix::lagrange(eval_str(g, n)?)?;
            let b = m.b_sequence()?;
            Ok(Outcome::ok(output::values(&b.terms, b.terms.len(), style)))
        }
        Command::SqrtFactor { g, size } => {
            let n = positive(size.rows)?;
            let f = RiordanMatrix::lagrange(eval_str(g, n)?)?.sqrt_factorization()?;
            let b = f.b.series();
            let items = [("sqrt_g", &f.root), ("h", &f.h), ("s", &f.s), ("B", &b)];
            Ok(Outcome::ok(output::named_series(&items, style)))
        }
        Command::Diag {
            of,
            f,
            g,
            b,
            index,
            ascending,
            size,
        } => {
            let n = positive(size.rows)?;
            let need = |name: &str, v: &Option<String>| {
                v.clone().ok_or_else(|| {
                    CliError::Usage(format!(
                        "--of {name} needs --{}",
                        if name == "bcomp" { "b" } else { "g" }
                    ))
                })
            };
            let t = match of {
                DiagSource::Matrix => {
                    RiordanMatrix::ordinary(eval_str(f, n)?, eval_str(&need("matrix", g)?, n)?)?
                        .materialize()
                }
                DiagSource::Lmatrix => l_matrix(&eval_str(&need("lmatrix", g)?, n)?, n)?.triangle,
                DiagSource::Bcomp => {
                    bcomp_matrix(&eval_str(&need("bcomp", b)?, n.max(2))?, n)?.triangle
                }
            };
            if *index >= n {
                return Err(CliError::Usage(format!(
                    "--index {index} is outside {n} rows"
                )));
            }
            if *ascending {
                let d = t.ascending_diagonal(*index);
                Ok(Outcome::ok(output::values(&d, d.len(), style)))
            } else {
                Ok(Outcome::ok(output::series(
                    &t.descending_diagonal(*index),
                    style,
                )))
            }
        }
        Command::Check { suite, all, order } => {
            let reports = match (suite, all) {
                (Some(name), false) => vec![suites::run(name, *order)?],
                (None, true) => {
                    if *order < 2 {
                        return Err(CliError::Usage("--order must be at least 2".into()));
                    }
                    suites::run_all(*order)
                }
                _ => {
                    return Err(CliError::Usage(format!(
                        "give --suite NAME or --all; suites: {}",
                        SUITE_NAMES.join(", ")
                    )))
                }
            };
            let ok = reports.iter().all(|r| r.passed());
            let text = match style.format {
                Format::Json => {
                    let items: Vec<_> = reports
                        .iter()
                        .map(|r| {
                            let checks: Vec<_> = r
                                .checks
                                .iter()
                                .map(|c| json!({ "label": c.label, "passed": c.passed, "detail": c.detail }))
                                .collect();
                            json!({ "name": r.name, "order": r.order, "passed": r.passed(), "checks": checks })
                        })
                        .collect();
                    format!(
                        "{}\n",
                        json!({ "kind": "check", "passed": ok, "suites": items })
                    )
                }
                Format::Csv => {
                    let mut s = String::new();
                    if style.header {
                        s.push_str("suite,label,passed\n");
                    }
                    for r in &reports {
                        for c in &r.checks {
                            s.push_str(&format!(
                                "{},\"{}\",{}\n",
                                r.name,
                                c.label.replace('"', "\"\""),
                                c.passed
                            ));
                        }
                    }
                    s
                }
                Format::Text => reports.iter().map(|r| r.to_string()).collect(),
            };
            Ok(Outcome { text, ok })
        }
        Command::OeisCompare {
            bfile,
            values,
            expr,
            triangle,
            column,
            min_match,
            size,
        } => {
            let seq: Vec<BigInt> = if let Some(v) = values {
                v.split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        s.trim()
                            .parse()
                            .map_err(|_| CliError::Usage(format!("bad integer {s:?}")))
                    })
                    .collect::<Result<_, _>>()?
            } else if let Some(e) = expr {
                let n = positive(size.rows)?;
                integers(&pad(eval_str(e, n)?.coeffs(), n))?
            } else if let Some(t) = triangle {
                let t = t.build(positive(size.rows)?)?;
                match column {
                    Some(c) => integers(&pad(t.column(*c).coeffs(), t.size().saturating_sub(*c)))?,
                    None => integers(&t.rows().concat())?,
                }
            } else {
                return Err(CliError::Usage(
                    "give --values, --expr or --triangle".into(),
                ));
            };
            let report = oeis_compare(&seq, &BFile::read(bfile)?, *min_match);
            let text = match style.format {
                Format::Json => {
                    let mismatch = report.mismatch.as_ref().map(|m| {
                        json!({
                            "position": m.position,
                            "index": m.index,
                            "expected": m.expected.to_string(),
                            "found": m.found.to_string(),
                        })
                    });
                    format!(
                        "{}\n",
                        json!({ "kind": "oeis_compare", "passed": report.passed(), "matched": report.matched, "min_match": report.min_match, "mismatch": mismatch })
                    )
                }
                _ => format!("{report}\n"),
            };
            Ok(Outcome {
                text,
                ok: report.passed(),
            })
        }
    }
}

/// Run the tool on `args` (including the program name) and return the exit
/// code: 0 on success, 1 when a check fails, 2 on usage or parse errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let style = Style {
        format: cli.output.format,
        header: cli.output.header,
    };
    let outcome = match execute(&cli.command, style) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.output.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 2;
    }
    if outcome.ok {
        0
    } else {
        1
    }
}
