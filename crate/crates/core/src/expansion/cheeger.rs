use crate::complex::CWComplex;
use crate::error::{Error, Result};
use crate::linalg::{SearchBudget, DEFAULT_TOL};
use crate::orientation::{check_orientability, Orientability};
use crate::spectral::{smallest_nontrivial_eigenvalue, Direction, SpectralReport};

use super::{boundary_expansion, ExpansionCertificate};

/// Numerical slack allowed when deciding whether a bound holds.
pub const CHEEGER_TOL: f64 = 1e-8;

/// One side of `λ_d ≤ h_d ≤ √(2 m λ_d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundVerdict {
    /// `None` when every hypothesis holds, otherwise the first one that fails.
    pub failed_hypothesis: Option<&'static str>,
    /// Whether the inequality holds numerically, whatever the hypotheses.
    pub holds: bool,
    /// Right side minus left side.
    pub slack: f64,
}

impl BoundVerdict {
    fn new(failed_hypothesis: Option<&'static str>, slack: f64) -> Self {
        BoundVerdict { failed_hypothesis, holds: slack >= -CHEEGER_TOL, slack }
    }

    pub fn applicable(&self) -> bool {
        self.failed_hypothesis.is_none()
    }

    /// Applicable and violated: a counterexample to the theorem.
    pub fn violated(&self) -> bool {
        self.applicable() && !self.holds
    }
}

#[derive(Clone, Debug)]
pub struct CheegerReport {
    pub d: usize,
    pub regular_asserted: bool,
    pub incidence_pm1: bool,
    /// `None` when orientability cannot be decided (entries outside {−1,0,1}).
    pub orientable: Option<bool>,
    pub max_ridge_degree: u64,
    pub lambda: SpectralReport,
    pub h: ExpansionCertificate,
    pub m: u64,
    pub lower: BoundVerdict,
    pub upper: BoundVerdict,
}

impl CheegerReport {
    pub fn lambda_d(&self) -> f64 {
        self.lambda.lambda
    }

    pub fn h_d(&self) -> f64 {
        self.h.numerator as f64 / self.h.denominator as f64
    }

    /// `√(2 m λ_d)`, with a tiny negative `λ_d` read as zero.
    pub fn upper_value(&self) -> f64 {
        (2.0 * self.m as f64 * self.lambda_d().max(0.0)).sqrt()
    }

    fn lower_hypothesis(&self) -> Option<&'static str> {
        if !self.regular_asserted {
            Some("regular")
        } else if !self.incidence_pm1 {
            Some("incidence in {-1,0,1}")
        } else if self.orientable != Some(true) {
            Some("orientable")
        } else {
            None
        }
    }

    fn upper_hypothesis(&self) -> Option<&'static str> {
        if !self.regular_asserted {
            Some("regular")
        } else if !self.incidence_pm1 {
            Some("incidence in {-1,0,1}")
        } else if self.max_ridge_degree > 2 {
            Some("(d-1)-cell degree at most 2")
        } else {
            None
        }
    }

    /// Both verdicts rebuilt from the stored numbers and flags.
    pub fn recompute(&self) -> (BoundVerdict, BoundVerdict) {
        let h = self.h_d();
        (
            BoundVerdict::new(self.lower_hypothesis(), h - self.lambda_d()),
            BoundVerdict::new(self.upper_hypothesis(), self.upper_value() - h),
        )
    }
}

/// Computes `λ_d`, the exact `h_d` and `m`, checks the hypotheses of both
/// bounds and evaluates them.
pub fn cheeger_check(complex: &CWComplex, reduced: bool, budget: SearchBudget) -> Result<CheegerReport> {
    let d = complex.dim();
    if d == 0 {
        return Err(Error::inapplicable("the Cheeger report needs dimension at least 1"));
    }
    let lambda = smallest_nontrivial_eigenvalue(complex, d, Direction::Lower, reduced, DEFAULT_TOL)?;
    let h = boundary_expansion(complex, d, reduced, budget)?;
    let orientable = if complex.top_incidence_is_pm1() {
        Some(matches!(check_orientability(complex)?, Orientability::Orientable(_)))
    } else {
        None
    };
    let mut report = CheegerReport {
        d,
        regular_asserted: complex.regular_asserted(),
        incidence_pm1: complex.incidence_is_pm1(),
        orientable,
        max_ridge_degree: complex.max_ridge_degree().expect("d ≥ 1"),
        lambda,
        h,
        m: complex.max_top_boundary_size().expect("d ≥ 1"),
        lower: BoundVerdict::new(None, 0.0),
        upper: BoundVerdict::new(None, 0.0),
    };
    let (lower, upper) = report.recompute();
    report.lower = lower;
    report.upper = upper;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::zoo;

    fn report(name: &str, params: &[i64]) -> CheegerReport {
        cheeger_check(&zoo(name, params).unwrap(), false, SearchBudget::default()).unwrap()
    }

    #[test]
    fn path_two() {
        let r = report("path", &[2]);
        assert!((r.lambda_d() - 1.0).abs() < 1e-9);
        assert_eq!((r.h.numerator, r.h.denominator), (2, 2));
        assert_eq!(r.m, 2);
        assert!(r.lower.applicable() && r.lower.holds);
        assert!(r.upper.applicable() && r.upper.holds);
        assert!((r.upper.slack - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tetra_minus_face() {
        let r = report("tetra_minus_face", &[]);
        assert!((r.lambda_d() - 1.0).abs() < 1e-9);
        assert_eq!(r.h_d(), 1.0);
        assert_eq!(r.m, 3);
        assert!((r.upper_value() - 6f64.sqrt()).abs() < 1e-9);
        assert!(r.lower.holds && r.upper.holds);
    }

    #[test]
    fn projective_plane_needs_orientability() {
        let r = report("rp2_6", &[]);
        assert_eq!(r.orientable, Some(false));
        assert_eq!(r.lower.failed_hypothesis, Some("orientable"));
        assert_eq!(r.h.numerator, 0);
        assert!(r.lambda_d() > r.lambda.zero_threshold);
        assert!(!r.lower.holds);
        assert!(r.upper.applicable() && r.upper.holds);
    }

    #[test]
    fn branching_blocks_upper_bound() {
        let r = report("book", &[3]);
        assert_eq!(r.upper.failed_hypothesis, Some("(d-1)-cell degree at most 2"));
        assert_eq!(r.lower.failed_hypothesis, Some("orientable"));
    }

    #[test]
    fn recompute_is_stable() {
        let r = report("torus_7", &[]);
        assert_eq!(r.recompute(), (r.lower.clone(), r.upper.clone()));
    }
}
