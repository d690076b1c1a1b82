mod common;

use cwx_core::linalg::{
    f2_coset_min_weight, f2_rank_nullspace, rational_rank, sym_eigen, CosetSearcher, DenseMatrix, F2Matrix,
    F2Vector, RationalMatrix, SearchBudget,
};
use proptest::prelude::*;

fn masks_to_matrix(rows: usize, cols: usize, masks: &[u64]) -> F2Matrix {
    F2Matrix::from_rows(cols, masks.iter().take(rows).map(|&m| F2Vector::from_mask(cols, m)).collect())
}

fn brute_coset(basis: &[F2Vector], v: &F2Vector) -> (usize, F2Vector) {
    let mut best = v.clone();
    for mask in 0u64..(1u64 << basis.len()) {
        let mut x = v.clone();
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x.xor_assign(b);
            }
        }
        if x.weight() < best.weight() || (x.weight() == best.weight() && x.cmp_support(&best).is_lt()) {
            best = x;
        }
    }
    (best.weight(), best)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn f2_rank_matches_row_space(rows in 1usize..=16, cols in 1usize..=16, seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let masks: Vec<u64> = (0..rows).map(|_| rand::Rng::gen::<u64>(&mut r) & ((1u64 << cols) - 1)).collect();
        let m = masks_to_matrix(rows, cols, &masks);
        let (rank, null) = f2_rank_nullspace(&m);
        prop_assert_eq!(1usize << rank, common::row_space_size(&masks));
        prop_assert_eq!(rank + null.len(), cols);
        for v in &null {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        let null_masks: Vec<u64> = null.iter().map(|v| v.support().iter().fold(0u64, |a, &i| a | 1 << i)).collect();
        prop_assert_eq!(common::row_space_size(&null_masks), 1usize << null.len());
    }

    #[test]
    fn coset_search_matches_enumeration(len in 1usize..=12, k in 0usize..=6, seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let basis: Vec<F2Vector> = (0..k)
            .map(|_| F2Vector::from_mask(len, rand::Rng::gen::<u64>(&mut r) & ((1u64 << len) - 1)))
            .collect();
        let v = F2Vector::from_mask(len, rand::Rng::gen::<u64>(&mut r) & ((1u64 << len) - 1));
        let (w, best) = brute_coset(&basis, &v);
        let got = f2_coset_min_weight(&basis, &v, SearchBudget::default()).unwrap();
        prop_assert_eq!(got.weight, w);
        prop_assert_eq!(&got.minimizer, &best);
        // force the syndrome table path
        let forced = CosetSearcher::with_table(len, &basis, SearchBudget::default()).unwrap().leader(&v).unwrap();
        prop_assert_eq!(forced.weight, w);
        prop_assert_eq!(&forced.minimizer, &best);
    }

    #[test]
    fn rational_rank_matches_mod_p(rows in 1usize..=12, cols in 1usize..=12, seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let low_rank = rand::Rng::gen_bool(&mut r, 0.5);
        let entries: Vec<Vec<i64>> = if low_rank {
            // product of two thin factors so ranks below full occur often
            let inner = rand::Rng::gen_range(&mut r, 1..=rows.min(cols));
            let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..inner).map(|_| rand::Rng::gen_range(&mut r, -3..=3)).collect()).collect();
            let b: Vec<Vec<i64>> = (0..inner).map(|_| (0..cols).map(|_| rand::Rng::gen_range(&mut r, -3..=3)).collect()).collect();
            (0..rows).map(|i| (0..cols).map(|j| (0..inner).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
        } else {
            (0..rows).map(|_| (0..cols).map(|_| rand::Rng::gen_range(&mut r, -9..=9)).collect()).collect()
        };
        let flat: Vec<i64> = entries.iter().flatten().copied().collect();
        let m = RationalMatrix::from_integers(rows, cols, &flat);
        let p = common::random_31_bit_prime(seed);
        prop_assert_eq!(rational_rank(&m), common::rank_mod_p(&entries, p));
    }

    #[test]
    fn jacobi_reconstructs(n in 1usize..=40, seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let mut a = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x: f64 = rand::Rng::gen_range(&mut r, -5.0..5.0);
                a[(i, j)] = x;
                a[(j, i)] = x;
            }
        }
        let e = sym_eigen(&a, 1e-10).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let v = &e.vectors;
        let mut lam = DenseMatrix::zeros(n, n);
        for i in 0..n {
            lam[(i, i)] = e.values[i];
        }
        let back = v.matmul(&lam).matmul(&v.transpose());
        let norm = a.frobenius_norm();
        prop_assert!(a.sub(&back).frobenius_norm() <= 1e-8 * norm);
        let sum: f64 = e.values.iter().sum();
        prop_assert!((sum - a.trace()).abs() <= 1e-9 * norm.max(1.0));
        let gram = v.transpose().matmul(v);
        let off = gram.sub(&DenseMatrix::identity(n));
        prop_assert!(off.data().iter().all(|x| x.abs() <= 1e-10));
        for i in 0..n {
            let x = e.vector(i);
            let ax = a.mul_vec(&x);
            let res: f64 = ax.iter().zip(&x).map(|(p, q)| (p - e.values[i] * q).powi(2)).sum::<f64>().sqrt();
            prop_assert!(res <= e.residual + 1e-12);
        }
    }
}

#[test]
fn documented_examples() {
    let z = F2Matrix::zeros(2, 3);
    assert_eq!(f2_rank_nullspace(&z).0, 0);
    assert_eq!(f2_rank_nullspace(&z).1.len(), 3);
    let r = f2_coset_min_weight(&[F2Vector::from_bools(&[true, true, true])], &F2Vector::from_bools(&[true, true, false]), SearchBudget::default()).unwrap();
    assert_eq!((r.weight, r.minimizer.support()), (1, vec![2]));
    let r = f2_coset_min_weight(
        &[F2Vector::from_bools(&[true, false]), F2Vector::from_bools(&[false, true])],
        &F2Vector::from_bools(&[true, true]),
        SearchBudget::default(),
    )
    .unwrap();
    assert_eq!(r.weight, 0);
    let e = sym_eigen(&DenseMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]), 1e-10).unwrap();
    assert!((e.values[0] - 1.0).abs() < 1e-12 && (e.values[1] - 3.0).abs() < 1e-12);
}
