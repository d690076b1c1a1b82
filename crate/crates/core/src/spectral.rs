//! Combinatorial Laplacians, their smallest nontrivial eigenvalues, the
//! Hodge decomposition of real cochains, and Betti numbers.
//!
//! With `B = I_n` (rows (n−1)-cells, columns n-cells) the lower Laplacian is
//! `Δ_n^− = Bᵀ B` and the upper Laplacian one dimension down is `Δ_{n−1}^+ = B Bᵀ`.

use std::fmt;

use crate::cochain::Cochain;
use crate::complex::{CWComplex, Field};
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::linalg::dense::{dot, norm, orthonormalize, project};
use crate::linalg::rational::to_f64;
use crate::linalg::{sym_eigen, DenseMatrix, EigenResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaplacianKind {
    Upper,
    Lower,
    Full,
}

impl fmt::Display for LaplacianKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LaplacianKind::Upper => "upper",
            LaplacianKind::Lower => "lower",
            LaplacianKind::Full => "full",
        })
    }
}

/// Which one-sided Laplacian a nontrivial eigenvalue refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `λ_n`: `Δ_n^−` restricted to `B_n^⊥`.
    Lower,
    /// `λ^n`: `Δ_n^+` restricted to `(B^n)^⊥`.
    Upper,
}

impl From<Direction> for LaplacianKind {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Lower => LaplacianKind::Lower,
            Direction::Upper => LaplacianKind::Upper,
        }
    }
}

fn gram(b: &DenseMatrix) -> DenseMatrix {
    b.transpose().matmul(b)
}

fn lower_part(complex: &CWComplex, n: usize, reduced: bool) -> Option<DenseMatrix> {
    complex.boundary_if_any(n, reduced).map(|b| gram(&b.to_real()))
}

fn upper_part(complex: &CWComplex, n: usize) -> DenseMatrix {
    match complex.incidence(n + 1) {
        Some(b) => {
            let b = b.to_real();
            b.matmul(&b.transpose())
        }
        None => DenseMatrix::zeros(complex.count(n), complex.count(n)),
    }
}

/// The Laplacian on n-cochains as a dense symmetric matrix.
pub fn laplacian(complex: &CWComplex, n: usize, kind: LaplacianKind, reduced: bool) -> Result<DenseMatrix> {
    complex.check_dim(n)?;
    let c = complex.count(n);
    match kind {
        LaplacianKind::Upper => Ok(upper_part(complex, n)),
        LaplacianKind::Lower => lower_part(complex, n, reduced)
            .ok_or_else(|| Error::inapplicable("the lower Laplacian at n = 0 needs reduced chains")),
        LaplacianKind::Full => {
            let lower = lower_part(complex, n, reduced).unwrap_or_else(|| DenseMatrix::zeros(c, c));
            Ok(upper_part(complex, n).add(&lower))
        }
    }
}

/// Full spectrum of a Laplacian.
pub fn spectrum(complex: &CWComplex, n: usize, kind: LaplacianKind, reduced: bool, tol: f64) -> Result<EigenResult> {
    sym_eigen(&laplacian(complex, n, kind, reduced)?, tol)
}

/// Smallest eigenvalue of a one-sided Laplacian on the orthocomplement of its trivial kernel.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub dim: usize,
    pub direction: Direction,
    pub lambda: f64,
    /// Unit eigenvector attaining `lambda`, lifted back to all n-cells.
    pub eigenvector: Cochain,
    /// Dimension of the trivial subspace projected out.
    pub trivial_dim: usize,
    /// Eigenvalues below this count as zero.
    pub zero_threshold: f64,
    /// Spectrum of the restricted operator, ascending.
    pub restricted_spectrum: Vec<f64>,
    pub residual: f64,
}

impl SpectralReport {
    pub fn is_zero(&self) -> bool {
        self.lambda < self.zero_threshold
    }

    pub fn vector(&self) -> &[f64] {
        self.eigenvector.as_real().expect("spectral eigenvectors are real")
    }
}

fn rational_kernel_f64(m: &IncidenceMatrix) -> Vec<Vec<f64>> {
    m.to_rational()
        .kernel_basis()
        .iter()
        .map(|v| v.iter().map(to_f64).collect())
        .collect()
}

fn rational_column_space_f64(m: &IncidenceMatrix) -> Vec<Vec<f64>> {
    m.to_rational()
        .column_space_basis()
        .iter()
        .map(|v| v.iter().map(to_f64).collect())
        .collect()
}

/// Orthonormal basis of `B_n^⊥ = ker I_{n+1}ᵀ` (lower) or `(B^n)^⊥ = ker ∂_n` (upper).
/// The kernel is computed exactly over Q before orthonormalizing.
pub fn nontrivial_subspace(complex: &CWComplex, n: usize, direction: Direction, reduced: bool) -> Result<Vec<Vec<f64>>> {
    complex.check_dim(n)?;
    let c = complex.count(n);
    let constraint = match direction {
        Direction::Lower => complex.incidence(n + 1).map(IncidenceMatrix::transpose),
        Direction::Upper => complex.boundary_if_any(n, reduced),
    };
    let kernel = match constraint {
        Some(m) => rational_kernel_f64(&m),
        None => (0..c).map(|i| (0..c).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect(),
    };
    Ok(orthonormalize(&kernel))
}

fn canonical_sign(v: &mut [f64]) {
    let s: f64 = v.iter().sum();
    let flip = if s.abs() > 1e-9 {
        s < 0.0
    } else {
        v.iter().find(|x| x.abs() > 1e-9).is_some_and(|&x| x < 0.0)
    };
    if flip {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// `λ_n` (lower) or `λ^n` (upper): the minimum of the Laplacian's spectrum on the
/// orthocomplement of its trivial kernel `B_n` resp. `B^n`. The value may be
/// zero when harmonic cochains exist.
pub fn smallest_nontrivial_eigenvalue(
    complex: &CWComplex,
    n: usize,
    direction: Direction,
    reduced: bool,
    tol: f64,
) -> Result<SpectralReport> {
    let lap = laplacian(complex, n, direction.into(), reduced)?;
    let basis = nontrivial_subspace(complex, n, direction, reduced)?;
    if basis.is_empty() {
        return Err(Error::inapplicable(format!(
            "the {} restriction at n = {n} is empty: the trivial subspace is everything",
            LaplacianKind::from(direction)
        )));
    }
    let c = complex.count(n);
    let q = DenseMatrix::from_columns(c, &basis);
    let restricted = q.transpose().matmul(&lap).matmul(&q);
    // symmetrize away rounding from the triple product
    let r = restricted.rows();
    let mut sym = restricted.clone();
    for i in 0..r {
        for j in 0..r {
            sym[(i, j)] = 0.5 * (restricted[(i, j)] + restricted[(j, i)]);
        }
    }
    let eig = sym_eigen(&sym, tol)?;
    let lambda = eig.values[0];
    let mut v = q.mul_vec(&eig.vector(0));
    let nv = norm(&v);
    v.iter_mut().for_each(|x| *x /= nv);
    canonical_sign(&mut v);
    let av = lap.mul_vec(&v);
    let residual = norm(&av.iter().zip(&v).map(|(a, x)| a - lambda * x).collect::<Vec<_>>());
    Ok(SpectralReport {
        dim: n,
        direction,
        lambda,
        eigenvector: Cochain::real(n, v),
        trivial_dim: c - basis.len(),
        zero_threshold: crate::linalg::zero_threshold(&lap),
        restricted_spectrum: eig.values,
        residual,
    })
}

/// Orthogonal splitting `f = exact + harmonic + coexact` with exact ∈ `B^n`,
/// harmonic ∈ `ker Δ_n`, coexact ∈ `B_n`.
#[derive(Clone, Debug)]
pub struct HodgeSplit {
    pub exact: Vec<f64>,
    pub harmonic: Vec<f64>,
    pub coexact: Vec<f64>,
    pub exact_dim: usize,
    pub harmonic_dim: usize,
    pub coexact_dim: usize,
}

pub fn hodge_decompose(complex: &CWComplex, n: usize, f: &Cochain, reduced: bool) -> Result<HodgeSplit> {
    f.check(complex)?;
    if f.dim != n {
        return Err(Error::arg(format!("cochain has dimension {} but n = {n}", f.dim)));
    }
    let values: Vec<f64> = match &f.coeffs {
        crate::cochain::Coefficients::R(v) => v.clone(),
        crate::cochain::Coefficients::Q(v) => v.iter().map(to_f64).collect(),
        crate::cochain::Coefficients::F2(v) => v.to_bools().iter().map(|&b| b as u8 as f64).collect(),
    };
    // B^n = im δ_{n−1}: column space of ∂_nᵀ
    let exact_basis = complex
        .boundary_if_any(n, reduced)
        .map(|b| orthonormalize(&rational_column_space_f64(&b.transpose())))
        .unwrap_or_default();
    // B_n = im ∂_{n+1}
    let coexact_basis = complex
        .incidence(n + 1)
        .map(|b| orthonormalize(&rational_column_space_f64(b)))
        .unwrap_or_default();
    let exact = project(&exact_basis, &values);
    let coexact = project(&coexact_basis, &values);
    let harmonic: Vec<f64> = values.iter().zip(&exact).zip(&coexact).map(|((x, e), c)| x - e - c).collect();
    let c = complex.count(n);
    Ok(HodgeSplit {
        exact,
        harmonic,
        coexact,
        exact_dim: exact_basis.len(),
        harmonic_dim: c - exact_basis.len() - coexact_basis.len(),
        coexact_dim: coexact_basis.len(),
    })
}

impl HodgeSplit {
    /// Largest pairwise inner product between the three parts.
    pub fn max_cross_inner(&self) -> f64 {
        dot(&self.exact, &self.harmonic)
            .abs()
            .max(dot(&self.exact, &self.coexact).abs())
            .max(dot(&self.harmonic, &self.coexact).abs())
    }
}

fn rank_over(m: &IncidenceMatrix, field: Field) -> usize {
    match field {
        Field::F2 => m.to_f2().rank(),
        Field::Q | Field::R => m.to_rational().rank(),
    }
}

/// `b_n = c_n − rank ∂_n − rank ∂_{n+1}` over F2 or Q (R is treated as Q).
pub fn betti(complex: &CWComplex, n: usize, field: Field, reduced: bool) -> Result<usize> {
    complex.check_dim(n)?;
    let down = complex.boundary_if_any(n, reduced).map_or(0, |m| rank_over(&m, field));
    let up = complex.incidence(n + 1).map_or(0, |m| rank_over(m, field));
    Ok(complex.count(n) - down - up)
}
