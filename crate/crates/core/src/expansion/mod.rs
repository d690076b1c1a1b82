//! Exact boundary and coboundary expansion over F2, the sweep cut, the
//! Cheeger-type report and the tree formula.

mod cheeger;
mod sweep;
mod tree;

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::cochain::Cochain;
use crate::complex::CWComplex;
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::linalg::{CosetSearcher, F2Vector, SearchBudget};

pub use cheeger::{cheeger_check, BoundVerdict, CheegerReport, CHEEGER_TOL};
pub use sweep::{sweep, SweepProfile};
pub use tree::tree_expansion_oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Boundary,
    Coboundary,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Boundary => "boundary",
            Variant::Coboundary => "coboundary",
        })
    }
}

/// Exact `h_n` with an attaining cochain.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionCertificate {
    pub n: usize,
    pub variant: Variant,
    /// `numerator / denominator` in lowest terms.
    pub h: Ratio<u64>,
    /// Weight of the image of the witness, `‖∂α‖` or `‖δα‖`.
    pub numerator: u64,
    /// Minimum weight of the witness coset, `‖α + B_n‖` or `‖α + B^n‖`.
    pub denominator: u64,
    /// The attaining cochain; it is the minimum-weight member of its coset.
    pub witness: Cochain,
    /// Cells in the support of the image of the witness.
    pub image_support: Vec<usize>,
}

impl ExpansionCertificate {
    pub fn witness_vector(&self) -> &F2Vector {
        self.witness.as_f2().expect("expansion witnesses are F2 cochains")
    }

    /// Re-evaluates the witness from scratch and compares both integers.
    pub fn recheck(&self, complex: &CWComplex, reduced: bool, budget: SearchBudget) -> Result<bool> {
        let problem = Problem::new(complex, self.n, self.variant, reduced)?;
        let alpha = self.witness_vector();
        let image = problem.apply(alpha);
        let leader = crate::linalg::f2_coset_min_weight(&problem.generators, alpha, budget)?;
        Ok(image.weight() as u64 == self.numerator
            && leader.weight as u64 == self.denominator
            && image.support() == self.image_support)
    }
}

/// The F2 operator and trivial subspace for one expansion constant.
struct Problem {
    len: usize,
    /// Images of the unit cochains.
    op_columns: Vec<F2Vector>,
    target_len: usize,
    /// Spanning set of the trivial subspace.
    generators: Vec<F2Vector>,
}

fn f2_columns(m: &IncidenceMatrix) -> Vec<F2Vector> {
    (0..m.cols())
        .map(|c| {
            let odd: Vec<usize> = m.column(c).iter().filter(|&&(_, v)| v % 2 != 0).map(|&(r, _)| r).collect();
            F2Vector::from_support(m.rows(), &odd)
        })
        .collect()
}

impl Problem {
    fn new(complex: &CWComplex, n: usize, variant: Variant, reduced: bool) -> Result<Self> {
        complex.check_dim(n)?;
        let len = complex.count(n);
        if len == 0 {
            return Err(Error::inapplicable(format!("dimension {n} has no cells")));
        }
        let (op, generators) = match variant {
            Variant::Boundary => {
                let op = complex.boundary_if_any(n, reduced).ok_or_else(|| {
                    Error::arg("boundary expansion at n = 0 needs reduced chains")
                })?;
                let gens = complex.incidence(n + 1).map(f2_columns).unwrap_or_default();
                (op, gens)
            }
            Variant::Coboundary => {
                let op = complex
                    .incidence(n + 1)
                    .map(IncidenceMatrix::transpose)
                    .unwrap_or_else(|| IncidenceMatrix::new(0, len));
                let gens = complex
                    .boundary_if_any(n, reduced)
                    .map(|b| f2_columns(&b.transpose()))
                    .unwrap_or_default();
                (op, gens)
            }
        };
        Ok(Problem { len, target_len: op.rows(), op_columns: f2_columns(&op), generators })
    }

    fn apply(&self, alpha: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.target_len);
        for j in alpha.iter_ones() {
            out.xor_assign(&self.op_columns[j]);
        }
        out
    }
}

struct Best {
    num: u64,
    den: u64,
    witness: F2Vector,
}

impl Best {
    /// Smaller ratio, then smaller denominator, then lexicographically smaller support.
    fn improves(&self, num: u64, den: u64, witness: &F2Vector) -> bool {
        let ord = (num as u128 * self.den as u128).cmp(&(self.num as u128 * den as u128));
        match ord {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match den.cmp(&self.den) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => witness.cmp_support(&self.witness).is_lt(),
            },
        }
    }
}

fn offer(best: &mut Option<Best>, num: u64, den: u64, witness: &F2Vector) {
    if best.as_ref().map_or(true, |b| b.improves(num, den, witness)) {
        *best = Some(Best { num, den, witness: witness.clone() });
    }
}

fn solve(complex: &CWComplex, n: usize, variant: Variant, reduced: bool, budget: SearchBudget) -> Result<ExpansionCertificate> {
    let problem = Problem::new(complex, n, variant, reduced)?;
    let searcher = CosetSearcher::with_table(problem.len, &problem.generators, budget)?;
    let quotient_dim = problem.len - searcher.span_dim();
    if quotient_dim == 0 {
        return Err(Error::inapplicable(format!(
            "every {variant} {n}-cochain lies in the trivial subspace; h_{n} is a minimum over the empty set"
        )));
    }
    let mut best: Option<Best> = None;
    match searcher.table() {
        // B = 0: every nonzero cochain is its own class; walk them in Gray code order
        None => {
            let mut alpha = F2Vector::zeros(problem.len);
            let mut image = F2Vector::zeros(problem.target_len);
            for step in 1u64..(1u64 << problem.len) {
                let j = step.trailing_zeros() as usize;
                alpha.flip(j);
                image.xor_assign(&problem.op_columns[j]);
                offer(&mut best, image.weight() as u64, alpha.weight() as u64, &alpha);
            }
        }
        // the image is constant on classes, so the coset leader stands for its class
        Some(table) => {
            for (_, leader) in table.nonzero_cosets() {
                let image = problem.apply(&leader);
                offer(&mut best, image.weight() as u64, leader.weight() as u64, &leader);
            }
        }
    }
    let best = best.expect("quotient is nonzero");
    let image_support = problem.apply(&best.witness).support();
    Ok(ExpansionCertificate {
        n,
        variant,
        h: Ratio::new(best.num, best.den),
        numerator: best.num,
        denominator: best.den,
        witness: Cochain::f2(n, best.witness),
        image_support,
    })
}

/// `h_n = min ‖∂α‖ / ‖α + B_n‖` over `α ∈ C^n(X; F2) \ B_n`, where `B_n` is spanned
/// by the columns of `I_{n+1}` mod 2.
///
/// The numerator is constant on cosets of `B_n`, so one leader per nonzero
/// class of `C^n / B_n` is examined.
pub fn boundary_expansion(complex: &CWComplex, n: usize, reduced: bool, budget: SearchBudget) -> Result<ExpansionCertificate> {
    solve(complex, n, Variant::Boundary, reduced, budget)
}

/// The dual constant with `δ_n = I_{n+1}ᵀ` and `B^n` spanned by the rows of `I_n`
/// (the all-ones vector for reduced chains at `n = 0`).
pub fn coboundary_expansion(complex: &CWComplex, n: usize, reduced: bool, budget: SearchBudget) -> Result<ExpansionCertificate> {
    solve(complex, n, Variant::Coboundary, reduced, budget)
}

pub fn expansion(complex: &CWComplex, n: usize, variant: Variant, reduced: bool, budget: SearchBudget) -> Result<ExpansionCertificate> {
    solve(complex, n, variant, reduced, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::from_simplicial;
    use crate::zoo::zoo;

    fn run(name: &str, params: &[i64], n: usize) -> ExpansionCertificate {
        boundary_expansion(&zoo(name, params).unwrap(), n, false, SearchBudget::default()).unwrap()
    }

    #[test]
    fn path_two() {
        let c = run("path", &[2], 1);
        assert_eq!((c.numerator, c.denominator), (2, 2));
        assert_eq!(c.h, Ratio::from_integer(1));
        assert_eq!(c.witness_vector().support(), vec![0, 1]);
        assert_eq!(c.image_support, vec![0, 2]);
    }

    #[test]
    fn cycle_three_has_zero_expansion() {
        let c = run("cycle", &[3], 1);
        assert_eq!((c.numerator, c.denominator), (0, 3));
        assert_eq!(c.witness_vector().support(), vec![0, 1, 2]);
    }

    #[test]
    fn tetra_minus_face_and_filled_triangle() {
        let c = run("tetra_minus_face", &[], 2);
        assert_eq!((c.numerator, c.denominator), (3, 3));
        assert_eq!(c.witness_vector().weight(), 3);
        let c = run("filled_simplex", &[2], 2);
        assert_eq!((c.numerator, c.denominator), (3, 1));
    }

    #[test]
    fn lower_dimension_uses_cosets() {
        // filled triangle at n = 1: B_1 = {0, (1,1,1)}
        let tri = zoo("filled_simplex", &[2]).unwrap();
        let c = boundary_expansion(&tri, 1, false, SearchBudget::default()).unwrap();
        assert_eq!(c.h, Ratio::from_integer(2));
        assert_eq!(c.denominator, 1);
        assert!(c.recheck(&tri, false, SearchBudget::default()).unwrap());
    }

    #[test]
    fn coboundary_graph_cheeger() {
        let b = SearchBudget::default();
        let c4 = zoo("cycle", &[4]).unwrap();
        assert_eq!(coboundary_expansion(&c4, 0, true, b).unwrap().h, Ratio::from_integer(1));
        let k4 = from_simplicial(&[vec![0u32, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let cert = coboundary_expansion(&k4, 0, true, b).unwrap();
        assert_eq!(cert.h, Ratio::from_integer(2));
        assert_eq!((cert.numerator, cert.denominator), (4, 2));
        let p3 = zoo("path", &[2]).unwrap();
        let cert = coboundary_expansion(&p3, 0, true, b).unwrap();
        assert_eq!((cert.numerator, cert.denominator), (1, 1));
        assert_eq!(cert.witness_vector().support(), vec![0]);
        // unreduced: constants are cocycles outside B^0 = 0
        assert_eq!(coboundary_expansion(&p3, 0, false, b).unwrap().numerator, 0);
    }

    #[test]
    fn errors() {
        let b = SearchBudget::default();
        let p3 = zoo("path", &[2]).unwrap();
        assert!(matches!(boundary_expansion(&p3, 0, false, b), Err(Error::Argument(_))));
        assert!(matches!(boundary_expansion(&p3, 2, false, b), Err(Error::Argument(_))));
        // filled triangle at the top for coboundary: B^2 = C^2
        let tri = zoo("filled_simplex", &[2]).unwrap();
        assert!(matches!(coboundary_expansion(&tri, 2, false, b), Err(Error::Inapplicable(_))));
        let torus = zoo("torus_7", &[]).unwrap();
        assert!(matches!(
            boundary_expansion(&torus, 2, false, SearchBudget::uniform(8)),
            Err(Error::Budget(_))
        ));
    }
}
