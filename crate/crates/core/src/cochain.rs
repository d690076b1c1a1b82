use num_rational::BigRational;

use crate::complex::{CWComplex, Field};
use crate::error::{Error, Result};
use crate::linalg::F2Vector;

/// Coefficient vector of a cochain, one entry per n-cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    F2(F2Vector),
    Q(Vec<BigRational>),
    R(Vec<f64>),
}

/// An n-cochain over F2, Q or R.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    pub dim: usize,
    pub coeffs: Coefficients,
}

impl Cochain {
    pub fn f2(dim: usize, v: F2Vector) -> Self {
        Cochain { dim, coeffs: Coefficients::F2(v) }
    }

    pub fn real(dim: usize, v: Vec<f64>) -> Self {
        Cochain { dim, coeffs: Coefficients::R(v) }
    }

    pub fn rational(dim: usize, v: Vec<BigRational>) -> Self {
        Cochain { dim, coeffs: Coefficients::Q(v) }
    }

    pub fn field(&self) -> Field {
        match self.coeffs {
            Coefficients::F2(_) => Field::F2,
            Coefficients::Q(_) => Field::Q,
            Coefficients::R(_) => Field::R,
        }
    }

    pub fn len(&self) -> usize {
        match &self.coeffs {
            Coefficients::F2(v) => v.len(),
            Coefficients::Q(v) => v.len(),
            Coefficients::R(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks the length against the complex.
    pub fn check(&self, complex: &CWComplex) -> Result<()> {
        complex.check_dim(self.dim)?;
        if self.len() != complex.count(self.dim) {
            return Err(Error::arg(format!(
                "cochain has {} coefficients but dimension {} has {} cells",
                self.len(),
                self.dim,
                complex.count(self.dim)
            )));
        }
        Ok(())
    }

    pub fn as_real(&self) -> Option<&[f64]> {
        match &self.coeffs {
            Coefficients::R(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_f2(&self) -> Option<&F2Vector> {
        match &self.coeffs {
            Coefficients::F2(v) => Some(v),
            _ => None,
        }
    }
}
