use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use pretri_core::abgrp::{group_from_presentation, smith_normal_form, IntMatrix};
use proptest::prelude::*;

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k × k minors.
fn minor_gcd(m: &[Vec<i64>], k: usize) -> BigInt {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut g = BigInt::zero();
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let sub: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn snf_identities(m in matrix()) {
        let a = IntMatrix::from_rows(&m);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(det(&rows_of(&s.u)).abs().is_one());
        prop_assert!(det(&rows_of(&s.v)).abs().is_one());
        prop_assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(s.v.rows()));
        prop_assert!(s.d.is_diagonal());
        let inv = s.invariant_factors();
        prop_assert!(inv.iter().all(|d| d.is_positive()));
        prop_assert!(inv.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        // d_1 ⋯ d_k is the gcd of the k × k minors
        let mut prod = BigInt::one();
        for k in 1..=m.len().min(m[0].len()) {
            if k <= inv.len() {
                prod *= &inv[k - 1];
            } else {
                prod = BigInt::zero();
            }
            prop_assert_eq!(minor_gcd(&m, k), prod.clone());
        }
    }

    #[test]
    fn presentation_invariance(m in matrix(), ops in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..12)) {
        let a = IntMatrix::from_rows(&m);
        let g = group_from_presentation(&a).group;
        let mut b = a.clone();
        for (i, j, k) in ops {
            let (i, j) = (i % b.rows(), j % b.rows());
            if i != j {
                b.add_row_multiple(i, j, &BigInt::from(k));
            }
        }
        prop_assert_eq!(&group_from_presentation(&b).group, &g);
        let extra = b.vstack(&IntMatrix::zeros(1, b.cols()));
        prop_assert_eq!(&group_from_presentation(&extra).group, &g);
        if m.len() == m[0].len() {
            let d = det(&rows_of(&a));
            prop_assert_eq!(g.order(), if d.is_zero() { None } else { Some(d.abs()) });
        }
    }
}
