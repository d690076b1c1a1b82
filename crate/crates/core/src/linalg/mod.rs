//! Field kernels: bit-packed F2 elimination, coset leaders, exact rational
//! rank and kernels, and a dense symmetric eigensolver.

pub mod coset;
pub mod dense;
pub mod eigen;
pub mod f2;
pub mod rational;

pub use coset::{f2_coset_min_weight, CosetLeader, CosetSearcher, SearchBudget, SyndromeTable};
pub use dense::DenseMatrix;
pub use eigen::{sym_eigen, zero_threshold, EigenResult, DEFAULT_TOL};
pub use f2::{F2Matrix, F2Vector};
pub use rational::{rational_rank, RationalMatrix};

/// `(rank, nullspace basis)` of an F2 matrix, pivoting on the lowest column.
pub fn f2_rank_nullspace(m: &F2Matrix) -> (usize, Vec<F2Vector>) {
    m.rank_nullspace()
}
