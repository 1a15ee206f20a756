//! Plain-text formats for incidence minors, geometric instances and
//! certificates.
//!
//! Incidence files start with a header `d m n`, followed by `m` rows of `n`
//! characters from `{0,1}`. Geometry files start with `d p h`, followed by `p`
//! lines of `d` rationals (points) and `h` lines of `d + 1` rationals (normal,
//! then offset, for `a·x ≤ b`). Rationals are written `num/den` or as
//! integers. Certificates are a single line, `EMPTY` or `RIDGE v1 … v(d-1)`.
//! Lines starting with `#` are comments in all three formats. Writers use LF
//! line endings and never emit trailing spaces.

use std::fmt::Write as _;
use std::str::FromStr;

use polycomplete::geometry::{GeometricInstance, Halfspace, Rational, RationalPoint};
use polycomplete::{IncidenceMinor, PullingCertificate, Simplex};
use thiserror::Error;

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("malformed header: expected {0}")]
    BadHeader(&'static str),
    #[error("unexpected character {0:?}")]
    BadChar(char),
    #[error("row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("found {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("expected {expected} values, found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("malformed certificate: {0}")]
    BadCertificate(String),
}

impl ParseError {
    fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// Non-comment lines with their 1-based line numbers, `\r` stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#'))
}

/// Splits on whitespace, keeping the 1-based column of each token.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &'static str,
) -> Result<(usize, [usize; 3]), ParseError> {
    let (line, text) = lines
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(ParseError::new(1, 1, ParseErrorKind::MissingHeader))?;
    let toks = tokens(text);
    if toks.len() != 3 {
        let column = toks.get(3).map_or(text.len() + 1, |t| t.0);
        return Err(ParseError::new(
            line,
            column,
            ParseErrorKind::BadHeader(what),
        ));
    }
    let mut values = [0usize; 3];
    for (slot, (column, tok)) in values.iter_mut().zip(&toks) {
        *slot = tok
            .parse()
            .map_err(|_| ParseError::new(line, *column, ParseErrorKind::BadHeader(what)))?;
    }
    Ok((line, values))
}

pub fn parse_incidence(text: &str) -> Result<IncidenceMinor, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, [d, m, n]) = parse_header(&mut lines, "three integers \"d m n\"")?;
    let mut j = IncidenceMinor::zeros(d, m, n);
    let mut row = 0;
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        // with n = 0 every row is an empty line
        if n > 0 && body.trim().is_empty() {
            continue;
        }
        if row == m {
            return Err(ParseError::new(
                line,
                1,
                ParseErrorKind::RowCount {
                    expected: m,
                    found: m + 1,
                },
            ));
        }
        let mut count = 0;
        for (i, ch) in body.chars().enumerate() {
            match ch {
                '0' | '1' => {
                    if i < n {
                        j.set(row, i, ch == '1');
                    }
                    count += 1;
                }
                _ => return Err(ParseError::new(line, i + 1, ParseErrorKind::BadChar(ch))),
            }
        }
        if count != n {
            return Err(ParseError::new(
                line,
                count.min(n) + 1,
                ParseErrorKind::RowLength {
                    expected: n,
                    found: count,
                },
            ));
        }
        row += 1;
    }
    if row != m {
        return Err(ParseError::new(
            last_line + 1,
            1,
            ParseErrorKind::RowCount {
                expected: m,
                found: row,
            },
        ));
    }
    Ok(j)
}

pub fn write_incidence(j: &IncidenceMinor) -> String {
    let mut out = format!("{} {} {}\n", j.dim(), j.num_rows(), j.num_cols());
    for row in j.rows() {
        out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

fn parse_values(line: usize, text: &str, expected: usize) -> Result<Vec<Rational>, ParseError> {
    let toks = tokens(text);
    if toks.len() != expected {
        return Err(ParseError::new(
            line,
            1,
            ParseErrorKind::ValueCount {
                expected,
                found: toks.len(),
            },
        ));
    }
    toks.into_iter()
        .map(|(column, tok)| {
            Rational::from_str(tok)
                .map_err(|_| ParseError::new(line, column, ParseErrorKind::BadRational(tok.into())))
        })
        .collect()
}

pub fn parse_geometry(text: &str) -> Result<GeometricInstance, ParseError> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.trim().is_empty());
    let (header_line, [d, p, h]) = parse_header(&mut lines, "three integers \"d p h\"")?;
    let mut points = Vec::with_capacity(p);
    let mut halfspaces = Vec::with_capacity(h);
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if points.len() < p {
            points.push(RationalPoint(parse_values(line, body, d)?));
        } else if halfspaces.len() < h {
            let mut values = parse_values(line, body, d + 1)?;
            let offset = values.pop().expect("d + 1 values");
            let hs = Halfspace::new(values, offset)
                .map_err(|_| ParseError::new(line, 1, ParseErrorKind::ZeroNormal))?;
            halfspaces.push(hs);
        } else {
            return Err(ParseError::new(
                line,
                1,
                ParseErrorKind::RowCount {
                    expected: p + h,
                    found: p + h + 1,
                },
            ));
        }
    }
    if points.len() + halfspaces.len() != p + h {
        return Err(ParseError::new(
            last_line + 1,
            1,
            ParseErrorKind::RowCount {
                expected: p + h,
                found: points.len() + halfspaces.len(),
            },
        ));
    }
    Ok(GeometricInstance {
        dim: d,
        points,
        halfspaces,
    })
}

fn write_values<'a>(out: &mut String, values: impl IntoIterator<Item = &'a Rational>) {
    for (i, v) in values.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").expect("writing to a String");
    }
    out.push('\n');
}

pub fn write_geometry(inst: &GeometricInstance) -> String {
    let mut out = format!(
        "{} {} {}\n",
        inst.dim,
        inst.points.len(),
        inst.halfspaces.len()
    );
    for p in &inst.points {
        write_values(&mut out, &p.0);
    }
    for h in &inst.halfspaces {
        write_values(&mut out, h.normal().iter().chain([h.offset()]));
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<PullingCertificate, ParseError> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.trim().is_empty());
    let (line, body) = lines.next().ok_or(ParseError::new(
        1,
        1,
        ParseErrorKind::BadCertificate("empty input".into()),
    ))?;
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::new(
            extra,
            1,
            ParseErrorKind::BadCertificate("more than one line".into()),
        ));
    }
    let toks = tokens(body);
    match toks.first().map(|t| t.1) {
        Some("EMPTY") if toks.len() == 1 => Ok(PullingCertificate::EmptyPullingComplex),
        Some("RIDGE") => {
            let mut labels = Vec::with_capacity(toks.len() - 1);
            for &(column, tok) in &toks[1..] {
                let label: u32 = tok.parse().map_err(|_| {
                    ParseError::new(
                        line,
                        column,
                        ParseErrorKind::BadCertificate(format!("{tok:?} is not a vertex label")),
                    )
                })?;
                labels.push(label);
            }
            let ridge = Simplex::new(labels).map_err(|e| {
                ParseError::new(line, 1, ParseErrorKind::BadCertificate(e.to_string()))
            })?;
            Ok(PullingCertificate::BoundaryRidge(ridge))
        }
        _ => Err(ParseError::new(
            line,
            toks.first().map_or(1, |t| t.0),
            ParseErrorKind::BadCertificate("expected EMPTY or RIDGE".into()),
        )),
    }
}

pub fn write_certificate(cert: &PullingCertificate) -> String {
    format!("{cert}\n")
}
