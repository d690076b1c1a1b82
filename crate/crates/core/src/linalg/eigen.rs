//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use super::dense::{norm, DenseMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `A = V Λ Vᵀ` with ascending eigenvalues.
#[derive(Clone, Debug)]
pub struct EigenResult {
    pub values: Vec<f64>,
    /// Column `i` is the unit eigenvector for `values[i]`.
    pub vectors: DenseMatrix,
    /// Largest `‖A v_i − λ_i v_i‖₂` over all pairs, measured after convergence.
    pub residual: f64,
    /// Number of full sweeps performed.
    pub sweeps: usize,
}

impl EigenResult {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i)
    }
}

/// Eigenvalue magnitude below which a Laplacian eigenvalue counts as zero.
pub fn zero_threshold(a: &DenseMatrix) -> f64 {
    1e-9 * a.frobenius_norm().max(1.0)
}

fn off_diagonal_max(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut m: f64 = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            m = m.max(a[(p, q)].abs());
        }
    }
    m
}

/// Eigenvalues and eigenvectors of the symmetric matrix `a`.
///
/// Rotations sweep the strict upper triangle row by row until the largest
/// off-diagonal magnitude is at most `tol · ‖A‖_F`.
pub fn sym_eigen(a: &DenseMatrix, tol: f64) -> Result<EigenResult> {
    if !a.is_square() {
        return Err(Error::Eigen(format!("matrix is {}x{}, not square", a.rows(), a.cols())));
    }
    if !a.is_finite() {
        return Err(Error::Eigen("matrix has non-finite entries".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Eigen(format!("tolerance must be positive, got {tol}")));
    }
    let n = a.rows();
    let fro = a.frobenius_norm();
    for p in 0..n {
        for q in (p + 1)..n {
            if (a[(p, q)] - a[(q, p)]).abs() > 1e-12 * fro.max(f64::MIN_POSITIVE) {
                return Err(Error::Eigen(format!("matrix is not symmetric at ({p}, {q})")));
            }
        }
    }

    let mut m = a.clone();
    let mut v = DenseMatrix::identity(n);
    let threshold = tol * fro;
    let mut sweeps = 0;
    while off_diagonal_max(&m) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Eigen(format!("no convergence after {MAX_SWEEPS} sweeps")));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| m[(i, i)]).collect();
    let columns: Vec<Vec<f64>> = order.iter().map(|&i| v.column(i)).collect();
    let vectors = DenseMatrix::from_columns(n, &columns);

    let residual = columns
        .iter()
        .zip(&values)
        .map(|(col, &lambda)| {
            let av = a.mul_vec(col);
            norm(&av.iter().zip(col).map(|(x, y)| x - lambda * y).collect::<Vec<_>>())
        })
        .fold(0.0, f64::max);

    Ok(EigenResult { values, vectors, residual, sweeps })
}

/// One Jacobi rotation annihilating `m[p][q]`, accumulated into `v`.
fn rotate(m: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    if apq == 0.0 {
        return;
    }
    let app = m[(p, p)];
    let aqq = m[(q, q)];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    // theta == 0 has signum 1, giving t = 1 (a 45° rotation)
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.rows();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = c * mkp - s * mkq;
        m[(k, q)] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = c * mpk - s * mqk;
        m[(q, k)] = s * mpk + c * mqk;
    }
    m[(p, q)] = 0.0;
    m[(q, p)] = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn two_by_two_path_laplacian() {
        let a = DenseMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]);
        let r = sym_eigen(&a, DEFAULT_TOL).unwrap();
        assert!(close(&r.values, &[1.0, 3.0], 1e-12), "{:?}", r.values);
        assert!(r.residual < 1e-12);
    }

    #[test]
    fn identity_is_already_diagonal() {
        let r = sym_eigen(&DenseMatrix::identity(5), DEFAULT_TOL).unwrap();
        assert_eq!(r.values, vec![1.0; 5]);
        assert_eq!(r.sweeps, 0);
    }

    #[test]
    fn four_i_minus_j() {
        let a = DenseMatrix::from_rows(&[
            vec![3.0, -1.0, -1.0],
            vec![-1.0, 3.0, -1.0],
            vec![-1.0, -1.0, 3.0],
        ]);
        let r = sym_eigen(&a, DEFAULT_TOL).unwrap();
        assert!(close(&r.values, &[1.0, 4.0, 4.0], 1e-12), "{:?}", r.values);
        let v0 = r.vector(0);
        let s = 1.0 / 3f64.sqrt();
        assert!(close(&v0, &[s, s, s], 1e-12) || close(&v0, &[-s, -s, -s], 1e-12));
    }

    #[test]
    fn rejects_asymmetric_and_non_finite() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]);
        assert!(matches!(sym_eigen(&a, DEFAULT_TOL), Err(Error::Eigen(_))));
        let b = DenseMatrix::from_rows(&[vec![f64::NAN]]);
        assert!(matches!(sym_eigen(&b, DEFAULT_TOL), Err(Error::Eigen(_))));
        assert!(sym_eigen(&DenseMatrix::identity(2), 0.0).is_err());
    }

    #[test]
    fn empty_matrix() {
        let r = sym_eigen(&DenseMatrix::zeros(0, 0), DEFAULT_TOL).unwrap();
        assert!(r.values.is_empty());
    }
}
