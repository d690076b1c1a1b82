//! Homology, combinatorial Laplacian spectra and exact boundary expansion of
//! finite CW complexes given by integer incidence data.
//!
//! A complex is a list of cell counts and sparse incidence matrices
//! `I_n[μ, λ] = [e_λ^n : e_μ^{n−1}]`. On top of that model the crate computes
//! Betti numbers over F2 and Q, the smallest nontrivial eigenvalues of the
//! upper and lower Laplacians, the expansion constants `h_n`, and a report on
//! the two-sided bound `λ_d ≤ h_d ≤ √(2 m λ_d)` with its hypotheses.

pub mod augment;
pub mod cochain;
pub mod complex;
pub mod error;
pub mod expansion;
pub mod format;
pub mod incidence;
pub mod linalg;
pub mod orientation;
pub mod simplicial;
pub mod spectral;
pub mod zoo;

pub use augment::{augment_boundary, AugmentedComplex};
pub use cochain::{Cochain, Coefficients};
pub use complex::{CWComplex, Field, FieldMatrix, ValidationReport, Violation};
pub use error::{Error, Result};
pub use expansion::{
    boundary_expansion, cheeger_check, coboundary_expansion, expansion, sweep, tree_expansion_oracle,
    BoundVerdict, CheegerReport, ExpansionCertificate, SweepProfile, Variant,
};
pub use format::{parse_cwx, parse_facets, parse_input, write_cwx};
pub use incidence::IncidenceMatrix;
pub use linalg::{SearchBudget, DEFAULT_TOL};
pub use orientation::{check_orientability, reorient, NonOrientableWitness, Orientability, Orientation};
pub use simplicial::from_simplicial;
pub use spectral::{
    betti, hodge_decompose, laplacian, smallest_nontrivial_eigenvalue, spectrum, Direction, HodgeSplit,
    LaplacianKind, SpectralReport,
};
pub use zoo::{fixtures, zoo, ZOO_NAMES};

pub use num_rational::Ratio;
