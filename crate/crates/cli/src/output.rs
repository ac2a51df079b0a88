//! Text, JSON and CSV serialization of triangles, series and polynomials.
//!
//! Rationals are written as `p/q`, integers without a denominator. JSON keeps
//! every number as a string so values survive a round trip bit-exactly.

use std::collections::BTreeMap;

use clap::ValueEnum;
use riordan::ring::parse_rational;
use riordan::{ParamPoly, Rational, Series, Triangle};
use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub format: Format,
    /// CSV only.
    pub header: bool,
}

impl Style {
    pub fn new(format: Format) -> Self {
        Style {
            format,
            header: false,
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn finish(mut lines: Vec<String>) -> String {
    lines.push(String::new());
    lines.join("\n")
}

/// Lower triangle only; text columns are padded on the right to a common width.
pub fn triangle(t: &Triangle<Rational>, style: Style) -> String {
    let rows: Vec<Vec<String>> = t.rows().iter().map(|r| strings(r)).collect();
    match style.format {
        Format::Text => {
            let mut width = vec![0; t.size()];
            for row in &rows {
                for (m, cell) in row.iter().enumerate() {
                    width[m] = width[m].max(cell.chars().count());
                }
            }
            let lines = rows
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row
                        .iter()
                        .enumerate()
                        .map(|(m, c)| format!("{c:<w$}", w = width[m]))
                        .collect();
                    cells.join("  ").trim_end().to_string()
                })
                .collect();
            finish(lines)
        }
        Format::Json => {
            let v = json!({ "kind": "triangle", "rows": rows });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut lines = Vec::new();
            if style.header {
                lines.push(
                    (0..t.size())
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                );
            }
            lines.extend(rows.iter().map(|r| r.join(",")));
            finish(lines)
        }
    }
}

pub fn series(s: &Series<Rational>, style: Style) -> String {
    values(s.coeffs(), s.order(), style)
}

/// A plain coefficient list, padded with zeros to `len`.
pub fn values(v: &[Rational], len: usize, style: Style) -> String {
    let mut cells = strings(v);
    cells.resize(len.max(cells.len()), "0".into());
    match style.format {
        Format::Text => format!("{}\n", cells.join(", ")),
        Format::Json => format!("{}\n", json!({ "kind": "series", "coeffs": cells })),
        Format::Csv => {
            let mut lines = Vec::new();
            if style.header {
                lines.push("n,value".to_string());
            }
            lines.extend(cells.iter().enumerate().map(|(n, c)| format!("{n},{c}")));
            finish(lines)
        }
    }
}

fn poly_value(p: &ParamPoly) -> Value {
    let map: Map<String, Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(d, c)| (d.to_string(), Value::String(c.to_string())))
        .collect();
    json!({ "poly": map })
}

/// One polynomial in the variable `var`.
pub fn poly(p: &ParamPoly, var: &str, style: Style) -> String {
    match style.format {
        Format::Text => format!("{}\n", p.render(var)),
        Format::Json => format!("{}\n", poly_value(p)),
        Format::Csv => {
            let mut lines = Vec::new();
            if style.header {
                lines.push("degree,coeff".to_string());
            }
            lines.extend(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(d, c)| format!("{d},{c}")),
            );
            finish(lines)
        }
    }
}

/// An indexed family `p_0, p_1, ...` of polynomials.
pub fn polys(ps: &[ParamPoly], var: &str, style: Style) -> String {
    match style.format {
        Format::Text => finish(
            ps.iter()
                .enumerate()
                .map(|(n, p)| format!("{n}: {}", p.render(var)))
                .collect(),
        ),
        Format::Json => {
            let items: Vec<Value> = ps.iter().map(poly_value).collect();
            format!("{}\n", json!({ "kind": "polys", "polys": items }))
        }
        Format::Csv => {
            let mut lines = Vec::new();
            if style.header {
                lines.push("n,degree,coeff".to_string());
            }
            for (n, p) in ps.iter().enumerate() {
                for (d, c) in p.coeffs().iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        lines.push(format!("{n},{d},{c}"));
                    }
                }
            }
            finish(lines)
        }
    }
}

/// Several named series, e.g. the pieces of a square-root factorization.
pub fn named_series(items: &[(&str, &Series<Rational>)], style: Style) -> String {
    match style.format {
        Format::Text => finish(
            items
                .iter()
                .map(|(name, s)| format!("{name}: {}", strings(s.coeffs()).join(", ")))
                .collect(),
        ),
        Format::Json => {
            let map: BTreeMap<&str, Vec<String>> =
                items.iter().map(|(name, s)| (*name, padded(s))).collect();
            format!("{}\n", json!({ "kind": "named_series", "series": map }))
        }
        Format::Csv => {
            let mut lines = Vec::new();
            if style.header {
                lines.push("name,n,value".to_string());
            }
            for (name, s) in items {
                lines.extend(
                    padded(s)
                        .iter()
                        .enumerate()
                        .map(|(n, c)| format!("{name},{n},{c}")),
                );
            }
            finish(lines)
        }
    }
}

fn padded(s: &Series<Rational>) -> Vec<String> {
    let mut v = strings(s.coeffs());
    v.resize(s.order(), "0".into());
    v
}

fn json_rational(v: &Value) -> Result<Rational, CliError> {
    let text = v
        .as_str()
        .ok_or_else(|| CliError::Json(format!("expected a string rational, found {v}")))?;
    parse_rational(text).map_err(|e| CliError::Json(format!("{text:?}: {e}")))
}

/// Read back the output of [`triangle`] in JSON form.
pub fn parse_triangle_json(text: &str) -> Result<Triangle<Rational>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    if v.get("kind").and_then(Value::as_str) != Some("triangle") {
        return Err(CliError::Json("kind is not \"triangle\"".into()));
    }
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Json("missing rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| CliError::Json("row is not an array".into()))?
                .iter()
                .map(json_rational)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Triangle::from_rows(rows)?)
}

/// Read back a `{"poly": {...}}` object.
pub fn parse_poly_json(text: &str) -> Result<ParamPoly, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    poly_from_value(&v)
}

fn poly_from_value(v: &Value) -> Result<ParamPoly, CliError> {
    let map = v
        .get("poly")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::Json("missing poly object".into()))?;
    let mut coeffs = Vec::new();
    for (k, c) in map {
        let d: usize = k
            .parse()
            .map_err(|_| CliError::Json(format!("bad degree {k:?}")))?;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, Rational::from_integer(0.into()));
        }
        coeffs[d] = json_rational(c)?;
    }
    Ok(ParamPoly::new(coeffs))
}
