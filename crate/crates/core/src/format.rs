//! Text formats: the line-oriented `cwx 1` format and plain facet lists.
//!
//! ```text
//! cwx 1
//! dim 1
//! cells 0 3
//! cells 1 2
//! regular true          # optional, defaults to false
//! inc 1 0 0 -1          # [e_0^1 : e_0^0] = -1
//! inc 1 1 0 1
//! label 0 0 v0          # optional
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::complex::{CWComplex, ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::simplicial::from_simplicial;

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, what: &str, line: usize) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

/// Whether the text starts (after comments and blank lines) with the `cwx 1` header.
pub fn is_cwx(text: &str) -> bool {
    text.lines().map(strip_comment).find(|l| !l.is_empty()).is_some_and(|l| l.split_whitespace().next() == Some("cwx"))
}

/// Parses the cwx format. Index errors surface as [`Error::Invalid`], syntax as [`Error::Parse`].
pub fn parse_cwx(text: &str) -> Result<CWComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !strip_comment(l).is_empty());

    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = strip_comment(header).split_whitespace();
    if toks.next() != Some("cwx") {
        return Err(parse_err(ln, "expected header 'cwx 1'"));
    }
    let version: u32 = number(toks.next(), "version", ln)?;
    if version != 1 {
        return Err(parse_err(ln, format!("unsupported cwx version {version}")));
    }

    let mut dim: Option<usize> = None;
    let mut counts: Vec<Option<usize>> = Vec::new();
    let mut regular = false;
    let mut incs: Vec<(usize, usize, usize, usize, i64)> = Vec::new();
    let mut labels: Vec<(usize, usize, usize, String)> = Vec::new();
    let mut seen_inc = HashSet::new();

    for (ln, raw) in lines {
        let line = strip_comment(raw);
        let mut toks = line.split_whitespace();
        let keyword = toks.next().expect("line is non-empty");
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(ln, "duplicate 'dim'"));
                }
                let d: usize = number(toks.next(), "dimension", ln)?;
                dim = Some(d);
                counts = vec![None; d + 1];
            }
            "cells" => {
                let d = dim.ok_or_else(|| parse_err(ln, "'cells' before 'dim'"))?;
                let n: usize = number(toks.next(), "dimension", ln)?;
                let c: usize = number(toks.next(), "cell count", ln)?;
                if n > d {
                    return Err(parse_err(ln, format!("cells for dimension {n} above dim {d}")));
                }
                if counts[n].replace(c).is_some() {
                    return Err(parse_err(ln, format!("duplicate 'cells {n}'")));
                }
            }
            "regular" => {
                regular = match toks.next() {
                    Some("true" | "1" | "yes") => true,
                    Some("false" | "0" | "no") => false,
                    other => return Err(parse_err(ln, format!("invalid regular flag {other:?}"))),
                };
            }
            "inc" => {
                let d = dim.ok_or_else(|| parse_err(ln, "'inc' before 'dim'"))?;
                let n: usize = number(toks.next(), "dimension", ln)?;
                let mu: usize = number(toks.next(), "row index", ln)?;
                let lambda: usize = number(toks.next(), "column index", ln)?;
                let coeff: i64 = number(toks.next(), "coefficient", ln)?;
                if n == 0 || n > d {
                    return Err(parse_err(ln, format!("incidence dimension {n} outside 1..={d}")));
                }
                if !seen_inc.insert((n, mu, lambda)) {
                    return Err(parse_err(ln, format!("duplicate incidence entry ({n}, {mu}, {lambda})")));
                }
                incs.push((ln, n, mu, lambda, coeff));
            }
            "label" => {
                let n: usize = number(toks.next(), "dimension", ln)?;
                let idx: usize = number(toks.next(), "cell index", ln)?;
                let text: Vec<&str> = toks.by_ref().collect();
                if text.is_empty() {
                    return Err(parse_err(ln, "missing label text"));
                }
                labels.push((ln, n, idx, text.join(" ")));
                continue;
            }
            other => return Err(parse_err(ln, format!("unknown directive '{other}'"))),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(ln, format!("unexpected token '{extra}'")));
        }
    }

    let d = dim.ok_or_else(|| parse_err(1, "missing 'dim'"))?;
    let counts: Vec<usize> = counts
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.ok_or_else(|| parse_err(1, format!("missing 'cells {n}'"))))
        .collect::<Result<_>>()?;

    let mut out_of_range = Vec::new();
    let mut per_dim: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); d];
    for &(_, n, mu, lambda, coeff) in &incs {
        if mu >= counts[n - 1] || lambda >= counts[n] {
            out_of_range.push(Violation::IndexOutOfRange { n, row: mu, col: lambda });
        } else {
            per_dim[n - 1].push((mu, lambda, coeff));
        }
    }
    if !out_of_range.is_empty() {
        return Err(Error::Invalid(ValidationReport { violations: out_of_range }));
    }
    let incidence = per_dim
        .into_iter()
        .enumerate()
        .map(|(i, e)| IncidenceMatrix::from_entries(counts[i], counts[i + 1], e).expect("indices checked"))
        .collect();
    let mut complex = CWComplex::new(counts, incidence)?.with_regular(regular);
    for (ln, n, idx, text) in labels {
        complex
            .set_label(n, idx, text)
            .map_err(|e| parse_err(ln, format!("label: {e}")))?;
    }
    Ok(complex)
}

/// Serializes in the cwx format; [`parse_cwx`] inverts it exactly.
pub fn write_cwx(complex: &CWComplex) -> String {
    let mut s = String::from("cwx 1\n");
    let d = complex.dim();
    writeln!(s, "dim {d}").unwrap();
    for n in 0..=d {
        writeln!(s, "cells {n} {}", complex.count(n)).unwrap();
    }
    if complex.regular_asserted() {
        s.push_str("regular true\n");
    }
    for n in 1..=d {
        for (mu, lambda, coeff) in complex.incidence(n).expect("n in range").entries() {
            writeln!(s, "inc {n} {mu} {lambda} {coeff}").unwrap();
        }
    }
    for n in 0..=d {
        for i in 0..complex.count(n) {
            if let Some(l) = complex.label(n, i) {
                writeln!(s, "label {n} {i} {l}").unwrap();
            }
        }
    }
    s
}

/// One facet per line, vertex ids separated by whitespace; `#` starts a comment.
pub fn parse_facets(text: &str) -> Result<Vec<Vec<u64>>> {
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| parse_err(i + 1, format!("invalid vertex id '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(parse_err(1, "no facets found"));
    }
    Ok(facets)
}

/// Parses either format, sniffing the `cwx` header.
pub fn parse_input(text: &str) -> Result<CWComplex> {
    if is_cwx(text) {
        parse_cwx(text)
    } else {
        from_simplicial(&parse_facets(text)?)
    }
}
