//! Named fixture complexes.

use crate::complex::CWComplex;
use crate::error::{Error, Result};
use crate::format::parse_facets;
use crate::simplicial::from_simplicial;

const TORUS_7: &str = include_str!("../data/torus_7.facets");
const RP2_6: &str = include_str!("../data/rp2_6.facets");
const KLEIN_8: &str = include_str!("../data/klein_8.facets");

/// Every name accepted by [`zoo`], with the number of integer parameters it takes.
pub const ZOO_NAMES: &[(&str, usize)] = &[
    ("path", 1),
    ("cycle", 1),
    ("star", 1),
    ("simplex_boundary", 1),
    ("filled_simplex", 1),
    ("tetra_minus_face", 0),
    ("torus_7", 0),
    ("rp2_6", 0),
    ("klein_8", 0),
    ("book", 1),
];

/// Builds a named complex.
///
/// * `path k`: k edges in a row.
/// * `cycle k`: k-gon, `k ≥ 3`.
/// * `star k`: k edges sharing vertex 0.
/// * `simplex_boundary n`: boundary of the n-simplex (dimension n−1).
/// * `filled_simplex n`: the n-simplex.
/// * `tetra_minus_face`: three faces of a tetrahedron.
/// * `torus_7`, `rp2_6`, `klein_8`: vertex-minimal surface triangulations.
/// * `book k`: k triangles on a common edge.
pub fn zoo(name: &str, params: &[i64]) -> Result<CWComplex> {
    let Some(&(_, arity)) = ZOO_NAMES.iter().find(|(n, _)| *n == name) else {
        return Err(Error::arg(format!("unknown zoo complex '{name}'")));
    };
    if params.len() != arity {
        return Err(Error::arg(format!("'{name}' takes {arity} parameter(s), got {}", params.len())));
    }
    let k = params.first().copied().unwrap_or(0);
    if arity == 1 && k < 1 {
        return Err(Error::arg(format!("'{name}' needs a parameter of at least 1, got {k}")));
    }
    let k = k as u64;
    let facets: Vec<Vec<u64>> = match name {
        "path" => (0..k).map(|i| vec![i, i + 1]).collect(),
        "cycle" => {
            if k < 3 {
                return Err(Error::arg(format!("'cycle' needs at least 3 vertices, got {k}")));
            }
            (0..k).map(|i| vec![i, (i + 1) % k]).collect()
        }
        "star" => (1..=k).map(|i| vec![0, i]).collect(),
        "simplex_boundary" => {
            let all: Vec<u64> = (0..=k).collect();
            (0..=k).map(|skip| all.iter().copied().filter(|&v| v != skip).collect()).collect()
        }
        "filled_simplex" => vec![(0..=k).collect()],
        "tetra_minus_face" => vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]],
        "torus_7" => parse_facets(TORUS_7)?,
        "rp2_6" => parse_facets(RP2_6)?,
        "klein_8" => parse_facets(KLEIN_8)?,
        "book" => (0..k).map(|i| vec![0, 1, i + 2]).collect(),
        _ => unreachable!("name checked against ZOO_NAMES"),
    };
    let complex = from_simplicial(&facets)?;
    debug_assert!(complex.validate().ok());
    Ok(complex)
}

/// A representative instance list covering every zoo family, labelled `name k`.
pub fn fixtures() -> Vec<(String, CWComplex)> {
    let mut out = Vec::new();
    let mut add = |name: &str, params: &[i64]| {
        let label = if params.is_empty() {
            name.to_string()
        } else {
            format!("{name} {}", params.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        };
        out.push((label, zoo(name, params).expect("fixture parameters are valid")));
    };
    for k in 1..=4 {
        add("path", &[k]);
        add("star", &[k]);
    }
    for k in 3..=6 {
        add("cycle", &[k]);
    }
    for n in 2..=4 {
        add("simplex_boundary", &[n]);
    }
    for n in 1..=3 {
        add("filled_simplex", &[n]);
    }
    add("tetra_minus_face", &[]);
    add("torus_7", &[]);
    add("rp2_6", &[]);
    add("klein_8", &[]);
    for k in 1..=4 {
        add("book", &[k]);
    }
    out
}
