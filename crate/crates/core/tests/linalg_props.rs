mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use zcolor::intlinalg::to_big;
use zcolor::{determinant, integer_kernel, mat_vec, smith_normal_form, IntMatrix};

use common::{det_cofactor, invariant_factors_by_minors, kernel_points, to_rows};

fn matrix(max_dim: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-entry..=entry, r * c)
            .prop_map(move |xs| IntMatrix::new(r, c, to_big(&xs)).unwrap())
    })
}

fn square(max_dim: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-entry..=entry, n * n)
            .prop_map(move |xs| IntMatrix::new(n, n, to_big(&xs)).unwrap())
    })
}

#[test]
fn diag_two_three_against_minors() {
    let rows = vec![vec![2, 0], vec![0, 3]];
    assert_eq!(invariant_factors_by_minors(&rows, 2), vec![1, 6]);
    let s = smith_normal_form(&IntMatrix::from_rows(&rows).unwrap());
    assert_eq!(s.invariant_factors(), to_big(&[1, 6]));
}

#[test]
fn trefoil_kernel_against_enumeration() {
    let rows = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
    let k = integer_kernel(&IntMatrix::from_rows(&rows).unwrap());
    assert_eq!(k.dim, 1);
    assert_eq!(k.vectors, vec![to_big(&[1, 1, 1])]);
    // every kernel point in the box is constant
    let pts = kernel_points(&rows, 3, 3);
    assert_eq!(pts.len(), 7);
    assert!(pts.iter().all(|v| v[0] == v[1] && v[1] == v[2]));
}

#[test]
fn trefoil_minor_determinant() {
    let m = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap();
    assert_eq!(determinant(&m.minor(2, 2)).unwrap().abs(), BigInt::from(3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_invariants(m in matrix(6, 5)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(determinant(&s.u).unwrap().abs().is_one());
        prop_assert!(determinant(&s.v).unwrap().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|x| x.is_positive()));
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in s.rank..s.d.rows().min(s.d.cols()) {
            prop_assert!(s.d[(i, i)].is_zero());
        }
    }

    #[test]
    fn smith_matches_determinantal_divisors(m in matrix(4, 5)) {
        let expected = invariant_factors_by_minors(&to_rows(&m), m.cols());
        let got: Vec<i128> = smith_normal_form(&m)
            .invariant_factors()
            .iter()
            .map(|x| i128::try_from(x).unwrap())
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn kernel_annihilates(m in matrix(6, 5), coeffs in prop::collection::vec(-7i64..=7, 6)) {
        let k = integer_kernel(&m);
        prop_assert_eq!(k.dim, m.cols() - smith_normal_form(&m).rank);
        for v in &k.vectors {
            prop_assert!(common::is_zero_vec(&mat_vec(&m, v).unwrap()));
        }
        let c = to_big(&coeffs[..k.dim.min(coeffs.len())]);
        if !k.vectors.is_empty() {
            let w = k.combine(&c);
            prop_assert!(common::is_zero_vec(&mat_vec(&m, &w).unwrap()));
        }
    }

    #[test]
    fn kernel_contains_every_box_point(m in matrix(3, 4)) {
        let k = integer_kernel(&m);
        for p in kernel_points(&to_rows(&m), m.cols(), 4) {
            prop_assert!(k.coordinates(&to_big(&p)).is_some(), "{:?} not in lattice", p);
        }
    }

    #[test]
    fn kernel_basis_is_hermite(m in matrix(5, 3)) {
        let k = integer_kernel(&m);
        let mut last = None;
        for v in &k.vectors {
            let p = v.iter().position(|x| !x.is_zero()).unwrap();
            prop_assert!(v[p].is_positive());
            prop_assert!(last.is_none_or(|l| p > l));
            last = Some(p);
        }
        prop_assert_eq!(integer_kernel(&m), k);
    }

    #[test]
    fn determinant_matches_cofactor(m in square(5, 5)) {
        let d = determinant(&m).unwrap();
        prop_assert_eq!(d, BigInt::from(det_cofactor(&to_rows(&m))));
    }

    #[test]
    fn determinant_matches_smith(m in square(6, 5)) {
        let d = determinant(&m).unwrap();
        let s = smith_normal_form(&m);
        if s.rank < m.rows() {
            prop_assert!(d.is_zero());
        } else {
            let prod: BigInt = s.invariant_factors().iter().product();
            prop_assert_eq!(d.abs(), prod);
        }
    }

    #[test]
    fn mat_vec_matches_product(m in matrix(5, 5), x in prop::collection::vec(-9i64..=9, 5)) {
        let x = to_big(&x[..m.cols()]);
        let col = IntMatrix::new(m.cols(), 1, x.clone()).unwrap();
        prop_assert_eq!(mat_vec(&m, &x).unwrap(), m.mul(&col).unwrap().column(0));
    }
}
