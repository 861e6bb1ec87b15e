#![allow(clippy::needless_range_loop)]

use artin_core::linalg::{rank_of_vectors, smith_normal_form, SparseVec};
use artin_core::{Coefficients, ExactMatrix, Field};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

/// Fraction-free elimination; returns the rank and, for square input, the
/// determinant.
fn bareiss(data: &[Vec<i64>]) -> (usize, i128) {
    let mut a: Vec<Vec<i128>> = data.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (rows, cols) = (a.len(), a[0].len());
    let mut prev = 1i128;
    let mut rank = 0;
    let mut sign = 1;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                a[r][cc] = (a[r][cc] * a[rank][c] - a[r][c] * a[rank][cc]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let det = if rows == cols && rank == rows { sign * a[rows - 1][cols - 1] } else { 0 };
    (rank, det)
}

fn rank_mod_p(data: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = data.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let (rows, cols) = (a.len(), a[0].len());
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(pr, rank);
        let iv = inv(a[rank][c]);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * iv % p;
                for cc in 0..cols {
                    a[r][cc] = (a[r][cc] - f * a[rank][cc]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn columns(data: &[Vec<i64>]) -> Vec<SparseVec> {
    let cols = data[0].len();
    (0..cols)
        .map(|c| data.iter().enumerate().filter(|(_, r)| r[c] != 0).map(|(i, r)| (i, r[c])).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_dense_oracles(a in matrix(7)) {
        let cols = columns(&a);
        prop_assert_eq!(rank_of_vectors(Field::Rational, &cols), bareiss(&a).0);
        for p in [2u64, 3, 5] {
            prop_assert_eq!(rank_of_vectors(Field::Prime(p), &cols), rank_mod_p(&a, p as i64));
        }
    }

    #[test]
    fn rank_plus_nullity(a in matrix(7), field in prop::sample::select(vec![Field::Rational, Field::Prime(2), Field::Prime(7)])) {
        let m = ExactMatrix::from_dense(&a, field.into());
        let rank = m.rank().unwrap();
        prop_assert_eq!(rank + m.kernel_basis().unwrap().len(), m.cols());
        prop_assert_eq!(m.transpose().rank().unwrap(), rank);
    }

    #[test]
    fn prime_rank_never_exceeds_rational_rank(a in matrix(7)) {
        let q = ExactMatrix::from_dense(&a, Coefficients::Rational).rank().unwrap();
        for p in [2u64, 3] {
            prop_assert!(ExactMatrix::from_dense(&a, Coefficients::Prime(p)).rank().unwrap() <= q);
        }
    }

    #[test]
    fn smith_form_invariants(a in matrix(6), seed in any::<u64>()) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.rank(), bareiss(&a).0);
        for w in snf.factors.windows(2) {
            prop_assert!(&w[1] % &w[0] == BigInt::from(0), "{:?}", snf.factors);
        }
        // invariant under permuting rows and columns
        let mut rows: Vec<usize> = (0..a.len()).collect();
        let mut cols: Vec<usize> = (0..a[0].len()).collect();
        let shift = seed as usize % rows.len();
        rows.rotate_left(shift);
        cols.reverse();
        let permuted: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| a[r][c]).collect()).collect();
        prop_assert_eq!(smith_normal_form(&permuted), snf.clone());
        // the rank over F_p drops by the factors divisible by p
        for p in [2i64, 3] {
            let divisible = snf.factors.iter().filter(|d| *d % p == BigInt::from(0)).count();
            prop_assert_eq!(rank_mod_p(&a, p), snf.rank() - divisible);
        }
    }

    #[test]
    fn smith_product_is_determinant(n in 1usize..=5, entries in prop::collection::vec(-3i64..=3, 25)) {
        let a: Vec<Vec<i64>> = (0..n).map(|r| entries[r * n..r * n + n].to_vec()).collect();
        let (_, det) = bareiss(&a);
        let snf = smith_normal_form(&a);
        let product: BigInt = if snf.rank() == n { snf.factors.iter().product() } else { BigInt::from(0) };
        prop_assert_eq!(product, BigInt::from(det.abs()));
    }

    #[test]
    fn products_agree_with_dense_multiplication(a in matrix(5), seed in prop::collection::vec(-3i64..=3, 25)) {
        let inner = a[0].len();
        let b: Vec<Vec<i64>> = (0..inner).map(|r| (0..3).map(|c| seed[(r * 3 + c) % 25]).collect()).collect();
        let m = ExactMatrix::from_dense(&a, Coefficients::Integer).mul(&ExactMatrix::from_dense(&b, Coefficients::Integer)).unwrap();
        for (r, row) in a.iter().enumerate() {
            for c in 0..3 {
                let expect: i64 = (0..inner).map(|k| row[k] * b[k][c]).sum();
                prop_assert_eq!(m.get(r, c), expect);
            }
        }
    }
}
