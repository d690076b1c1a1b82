//! Inputs shared by the criterion benches.

use cwx_core::{zoo, CWComplex};

/// Complexes of moderate size whose top-dimensional search stays within the default budget.
pub fn workloads() -> Vec<(&'static str, CWComplex)> {
    let pick = |name: &'static str, label: &'static str, params: &[i64]| {
        (label, zoo(name, params).expect("valid bench parameters"))
    };
    vec![
        pick("cycle", "cycle_24", &[24]),
        pick("simplex_boundary", "simplex_boundary_4", &[4]),
        pick("tetra_minus_face", "tetra_minus_face", &[]),
        pick("rp2_6", "rp2_6", &[]),
        pick("torus_7", "torus_7", &[]),
        pick("book", "book_4", &[4]),
    ]
}
