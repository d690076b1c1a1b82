//! The combinatorial CW complex: cell counts per dimension and the integer
//! incidence numbers `[e_λ^n : e_μ^{n−1}]` between consecutive dimensions.

use std::fmt;

use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::linalg::{DenseMatrix, F2Matrix, RationalMatrix};

/// Coefficient field for chains and cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    F2,
    Q,
    R,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::F2 => "F2",
            Field::Q => "Q",
            Field::R => "R",
        })
    }
}

/// A boundary matrix with entries mapped into a field.
#[derive(Clone, Debug)]
pub enum FieldMatrix {
    F2(F2Matrix),
    Q(RationalMatrix),
    R(DenseMatrix),
}

/// Finite CW complex described purely by incidence data.
///
/// `incidence[n - 1]` is `I_n`, with `c_{n−1}` rows and `c_n` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CWComplex {
    cell_counts: Vec<usize>,
    incidence: Vec<IncidenceMatrix>,
    labels: Vec<Vec<Option<String>>>,
    regular_asserted: bool,
}

impl CWComplex {
    /// Assembles a complex. Matrix shapes must agree with `cell_counts`; the
    /// algebraic conditions are left to [`CWComplex::validate`].
    pub fn new(cell_counts: Vec<usize>, incidence: Vec<IncidenceMatrix>) -> Result<Self> {
        if cell_counts.is_empty() {
            return Err(Error::Invalid(ValidationReport::single(Violation::Shape {
                message: "a complex needs at least dimension 0".into(),
            })));
        }
        let dim = cell_counts.len() - 1;
        if incidence.len() != dim {
            return Err(Error::Invalid(ValidationReport::single(Violation::Shape {
                message: format!("dimension {dim} needs {dim} incidence matrices, got {}", incidence.len()),
            })));
        }
        for (i, m) in incidence.iter().enumerate() {
            let n = i + 1;
            if m.rows() != cell_counts[n - 1] || m.cols() != cell_counts[n] {
                return Err(Error::Invalid(ValidationReport::single(Violation::Shape {
                    message: format!(
                        "I_{n} is {}x{} but cell counts require {}x{}",
                        m.rows(),
                        m.cols(),
                        cell_counts[n - 1],
                        cell_counts[n]
                    ),
                })));
            }
        }
        let labels = cell_counts.iter().map(|&c| vec![None; c]).collect();
        Ok(CWComplex { cell_counts, incidence, labels, regular_asserted: false })
    }

    pub fn with_regular(mut self, regular: bool) -> Self {
        self.regular_asserted = regular;
        self
    }

    pub fn set_label(&mut self, n: usize, index: usize, label: impl Into<String>) -> Result<()> {
        self.check_cell(n, index)?;
        self.labels[n][index] = Some(label.into());
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.cell_counts.len() - 1
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    /// Number of n-cells; zero above the top dimension.
    pub fn count(&self, n: usize) -> usize {
        self.cell_counts.get(n).copied().unwrap_or(0)
    }

    pub fn regular_asserted(&self) -> bool {
        self.regular_asserted
    }

    pub fn label(&self, n: usize, index: usize) -> Option<&str> {
        self.labels.get(n)?.get(index)?.as_deref()
    }

    /// Display name for a cell: its label, or `e^n_i`.
    pub fn cell_name(&self, n: usize, index: usize) -> String {
        self.label(n, index).map_or_else(|| format!("e^{n}_{index}"), str::to_owned)
    }

    /// `I_n` for `1 ≤ n ≤ d`.
    pub fn incidence(&self, n: usize) -> Option<&IncidenceMatrix> {
        if n == 0 {
            None
        } else {
            self.incidence.get(n - 1)
        }
    }

    pub(crate) fn incidence_mut(&mut self, n: usize) -> &mut IncidenceMatrix {
        &mut self.incidence[n - 1]
    }

    pub(crate) fn push_cell(&mut self, n: usize, label: Option<String>) -> usize {
        self.cell_counts[n] += 1;
        self.labels[n].push(label);
        self.cell_counts[n] - 1
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if n > self.dim() {
            return Err(Error::arg(format!("dimension {n} exceeds top dimension {}", self.dim())));
        }
        Ok(())
    }

    pub(crate) fn check_cell(&self, n: usize, index: usize) -> Result<()> {
        self.check_dim(n)?;
        if index >= self.cell_counts[n] {
            return Err(Error::arg(format!(
                "cell index {index} out of range: dimension {n} has {} cells",
                self.cell_counts[n]
            )));
        }
        Ok(())
    }

    /// `∂_n` as an integer matrix. With `reduced`, `n = 0` yields the `1 × c_0`
    /// augmentation row to the (−1)-cell.
    pub fn boundary_incidence(&self, n: usize, reduced: bool) -> Result<IncidenceMatrix> {
        if n == 0 {
            if !reduced {
                return Err(Error::arg("∂_0 exists only for reduced chains"));
            }
            let c0 = self.cell_counts[0];
            return Ok(IncidenceMatrix::from_entries(1, c0, (0..c0).map(|i| (0, i, 1)))
                .expect("augmentation entries in range"));
        }
        self.check_dim(n)?;
        Ok(self.incidence[n - 1].clone())
    }

    /// `∂_n` with entries mapped into `field`. The coboundary `δ_{n−1}` is its transpose.
    pub fn boundary_matrix(&self, n: usize, field: Field, reduced: bool) -> Result<FieldMatrix> {
        let m = self.boundary_incidence(n, reduced)?;
        Ok(match field {
            Field::F2 => FieldMatrix::F2(m.to_f2()),
            Field::Q => FieldMatrix::Q(m.to_rational()),
            Field::R => FieldMatrix::R(m.to_real()),
        })
    }

    /// `∂_n` if it exists (n in 1..=d, or n = 0 when reduced), as an integer matrix.
    pub(crate) fn boundary_if_any(&self, n: usize, reduced: bool) -> Option<IncidenceMatrix> {
        if n > self.dim() {
            None
        } else if n == 0 && !reduced {
            None
        } else {
            self.boundary_incidence(n, reduced).ok()
        }
    }

    /// Degree of an n-cell: `Σ_η |[e_η^{n+1} : e_cell^n]|`.
    pub fn degree(&self, n: usize, cell: usize) -> Result<u64> {
        self.check_cell(n, cell)?;
        Ok(self.degrees(n)[cell])
    }

    /// Degrees of every n-cell.
    pub fn degrees(&self, n: usize) -> Vec<u64> {
        let mut deg = vec![0u64; self.count(n)];
        if let Some(up) = self.incidence(n + 1) {
            for (r, _, v) in up.entries() {
                deg[r] += v.unsigned_abs();
            }
        }
        deg
    }

    /// The (d−1)-cells of degree exactly one.
    pub fn boundary_set(&self) -> Result<Vec<usize>> {
        let d = self.dim();
        if d == 0 {
            return Err(Error::inapplicable("boundary set needs dimension at least 1"));
        }
        Ok(self
            .degrees(d - 1)
            .into_iter()
            .enumerate()
            .filter(|&(_, deg)| deg == 1)
            .map(|(i, _)| i)
            .collect())
    }

    /// Largest degree among (d−1)-cells.
    pub fn max_ridge_degree(&self) -> Option<u64> {
        let d = self.dim();
        (d >= 1).then(|| self.degrees(d - 1).into_iter().max().unwrap_or(0))
    }

    /// `m = max over d-cells of Σ_μ |[e_λ^d : e_μ^{d−1}]|`.
    pub fn max_top_boundary_size(&self) -> Option<u64> {
        let top = self.incidence(self.dim())?;
        Some(
            (0..top.cols())
                .map(|c| top.column(c).iter().map(|&(_, v)| v.unsigned_abs()).sum())
                .max()
                .unwrap_or(0),
        )
    }

    /// Whether every incidence number lies in {−1, 0, +1}.
    pub fn incidence_is_pm1(&self) -> bool {
        self.incidence.iter().all(|m| m.max_abs() <= 1)
    }

    pub fn top_incidence_is_pm1(&self) -> bool {
        self.incidence(self.dim()).map_or(true, |m| m.max_abs() <= 1)
    }

    /// Checks `I_n · I_{n+1} = 0` over the integers and, when regularity is
    /// asserted, that every incidence number is in {−1, 0, +1}.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, m) in self.incidence.iter().enumerate() {
            let n = i + 1;
            if m.rows() != self.cell_counts[n - 1] || m.cols() != self.cell_counts[n] {
                violations.push(Violation::Shape { message: format!("I_{n} has the wrong shape") });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        for n in 1..self.dim() {
            let product = self.incidence[n - 1].mul(&self.incidence[n]);
            for (row, col, value) in product.entries() {
                violations.push(Violation::BoundaryOfBoundary { n, row, col, value });
            }
        }
        if self.regular_asserted {
            for (i, m) in self.incidence.iter().enumerate() {
                for (row, col, value) in m.entries() {
                    if value.abs() > 1 {
                        violations.push(Violation::NonRegularEntry { n: i + 1, row, col, value });
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

/// One failed invariant of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape { message: String },
    /// Entry `(row, col)` of `I_n · I_{n+1}` is nonzero: row is an (n−1)-cell,
    /// column an (n+1)-cell.
    BoundaryOfBoundary { n: usize, row: usize, col: usize, value: i64 },
    /// Regularity asserted but `I_n[row, col]` is outside {−1, 0, +1}.
    NonRegularEntry { n: usize, row: usize, col: usize, value: i64 },
    /// Incidence entry addressing a cell that does not exist.
    IndexOutOfRange { n: usize, row: usize, col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { message } => write!(f, "shape: {message}"),
            Violation::BoundaryOfBoundary { n, row, col, value } => write!(
                f,
                "boundary of boundary: (I_{n}·I_{}) at n={n}, row={row}, col={col} is {value}, expected 0",
                n + 1
            ),
            Violation::NonRegularEntry { n, row, col, value } => write!(
                f,
                "regularity: incidence I_{n} at n={n}, row={row}, col={col} is {value}, outside {{-1,0,1}}"
            ),
            Violation::IndexOutOfRange { n, row, col } => {
                write!(f, "index: incidence I_{n} entry at n={n}, row={row}, col={col} is out of range")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn single(v: Violation) -> Self {
        ValidationReport { violations: vec![v] }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}
