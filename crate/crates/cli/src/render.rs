//! Number formatting shared by the text and machine renderers.

use std::fmt::Write as _;

use cwx_core::linalg::F2Vector;
use cwx_core::{CWComplex, IncidenceMatrix, Ratio};

/// Twelve significant digits in fixed notation; magnitudes below 1e-12 print as zero.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x.abs() < 1e-12 {
        return "0.00000000000".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.99... -> 10.0...)
    let digits = s.chars().filter(char::is_ascii_digit).collect::<String>();
    if digits.trim_start_matches('0').len() > 12 && decimals > 0 {
        let d = decimals - 1;
        return format!("{x:.d$}");
    }
    s
}

/// Short human form: twelve significant digits with trailing zeros dropped.
pub fn short(x: f64) -> String {
    let s = sig12(x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn ratio(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `p/q` in lowest terms, or just `p` when `q = 1`.
pub fn ratio_short(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        ratio(r)
    }
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "-".to_string()
    } else {
        v.join(" ")
    }
}

pub fn floats(xs: &[f64]) -> String {
    join(xs.iter().map(|&x| sig12(x)))
}

pub fn bits(v: &F2Vector) -> String {
    join(v.to_bools().iter().map(|&b| u8::from(b)))
}

pub fn cell_names(c: &CWComplex, n: usize, cells: &[usize]) -> String {
    join(cells.iter().map(|&i| c.cell_name(n, i)))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Line-oriented `key value` output.
#[derive(Default)]
pub struct Machine(String);

impl Machine {
    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        writeln!(self.0, "{key} {value}").unwrap();
        self
    }

    pub fn finish(self) -> String {
        self.0
    }
}

/// Dense integer matrix as aligned text rows.
pub fn dense_text(rows: &[Vec<i64>], indent: &str) -> String {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(s, "{indent}[{}]", cells.join(" ")).unwrap();
    }
    s
}

pub const TEXT_MATRIX_LIMIT: usize = 12;

pub fn small_enough(m: &IncidenceMatrix) -> bool {
    m.rows() <= TEXT_MATRIX_LIMIT && m.cols() <= TEXT_MATRIX_LIMIT
}
