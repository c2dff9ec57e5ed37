//! The `.code` file format.
//!
//! ```text
//! # comments and blank lines are allowed anywhere
//! field: p=<int> m=<int>
//! poly: c0 c1 ... cm        (ascending degree; required iff m > 1 and no
//!                            built-in default exists)
//! rows: k=<int> n=<int>
//! <k rows of n whitespace-separated integers in [0, q)>
//! ```

use std::fs;
use std::path::Path;

use qss_core::{Field, LinearCode};

use crate::error::CliError;

pub fn parse_code_file(path: &Path) -> Result<LinearCode, CliError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: display.clone(),
        source,
    })?;
    parse_code_str(&text, &display)
}

pub fn parse_code_str(text: &str, path: &str) -> Result<LinearCode, CliError> {
    let perr = |line: usize, message: String| CliError::Parse {
        path: path.to_string(),
        line,
        message,
    };

    let mut char_m: Option<(u64, u32)> = None;
    let mut field_line = 0usize;
    let mut poly: Option<Vec<u64>> = None;
    let mut poly_line = 0usize;
    let mut dims: Option<(usize, usize)> = None;
    let mut field: Option<Field> = None;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field:") {
            if char_m.is_some() {
                return Err(perr(lineno, "duplicate field line".into()));
            }
            char_m = Some(parse_field_line(rest).map_err(|m| perr(lineno, m))?);
            field_line = lineno;
        } else if let Some(rest) = line.strip_prefix("poly:") {
            if char_m.is_none() {
                return Err(perr(lineno, "poly line before field line".into()));
            }
            if dims.is_some() {
                return Err(perr(lineno, "poly line after rows line".into()));
            }
            let coeffs = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| format!("bad polynomial coefficient {t:?}"))
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|m| perr(lineno, m))?;
            poly = Some(coeffs);
            poly_line = lineno;
        } else if let Some(rest) = line.strip_prefix("rows:") {
            if dims.is_some() {
                return Err(perr(lineno, "duplicate rows line".into()));
            }
            let Some((p, m)) = char_m else {
                return Err(perr(lineno, "rows line before field line".into()));
            };
            let f = Field::new(p, m, poly.clone()).map_err(|e| {
                perr(
                    if poly.is_some() {
                        poly_line
                    } else {
                        field_line
                    },
                    e.to_string(),
                )
            })?;
            dims = Some(parse_rows_line(rest).map_err(|m| perr(lineno, m))?);
            field = Some(f);
        } else {
            let Some((k, n)) = dims else {
                return Err(perr(lineno, "matrix row before rows line".into()));
            };
            if rows.len() == k {
                return Err(perr(
                    lineno,
                    format!("expected {k} matrix rows, found more"),
                ));
            }
            let f = field.as_ref().expect("field is set with dims");
            let entries = line
                .split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| format!("bad entry {t:?}")))
                .collect::<Result<Vec<u64>, _>>()
                .map_err(|m| perr(lineno, m))?;
            if entries.len() != n {
                return Err(perr(
                    lineno,
                    format!("expected {n} entries, got {}", entries.len()),
                ));
            }
            for &v in &entries {
                f.check(v).map_err(|e| perr(lineno, e.to_string()))?;
            }
            rows.push(entries);
        }
    }

    let Some((k, _)) = dims else {
        return Err(perr(last_line.max(1), "missing rows line".into()));
    };
    if rows.len() != k {
        return Err(perr(
            last_line.max(1),
            format!("expected {k} matrix rows, got {}", rows.len()),
        ));
    }
    LinearCode::from_generator(field.as_ref().expect("field is set"), &rows).map_err(Into::into)
}

fn parse_field_line(rest: &str) -> Result<(u64, u32), String> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    match tokens.as_slice() {
        [p, m] => {
            let p = p
                .strip_prefix("p=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected p=<int>, got {p:?}"))?;
            let m = m
                .strip_prefix("m=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected m=<int>, got {m:?}"))?;
            Ok((p, m))
        }
        _ => Err("expected `field: p=<int> m=<int>`".into()),
    }
}

fn parse_rows_line(rest: &str) -> Result<(usize, usize), String> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    match tokens.as_slice() {
        [k, n] => {
            let k = k
                .strip_prefix("k=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected k=<int>, got {k:?}"))?;
            let n = n
                .strip_prefix("n=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected n=<int>, got {n:?}"))?;
            Ok((k, n))
        }
        _ => Err("expected `rows: k=<int> n=<int>`".into()),
    }
}

/// Render a code back into the file format (generator rows).
pub fn write_code_string(code: &LinearCode) -> String {
    let f = code.field();
    let mut out = String::new();
    out.push_str(&format!("field: p={} m={}\n", f.p(), f.m()));
    if let Some(poly) = f.modulus() {
        let coeffs: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("poly: {}\n", coeffs.join(" ")));
    }
    out.push_str(&format!(
        "rows: k={} n={}\n",
        code.dimension(),
        code.length()
    ));
    for row in code.generator().rows_iter() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
