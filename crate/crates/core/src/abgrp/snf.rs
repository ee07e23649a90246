//! Smith normal form over the integers with tracked transforms.
//!
//! Pivoting is deterministic: the smallest nonzero absolute value wins,
//! ties broken by row-major position. Downstream reports rely on this.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v == d`, with `v_inv` the inverse of `v`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    // col[dst] += k col[src]; the inverse row operation is row[src] -= k row[dst]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.a[(t, t)].abs();
        let mut consider = |pos: (usize, usize), x: &BigInt| {
            if !x.is_zero() && (best_abs.is_zero() || x.abs() < best_abs) {
                best = pos;
                best_abs = x.abs();
            }
        };
        for j in t + 1..self.a.cols() {
            consider((t, j), &self.a[(t, j)]);
        }
        for i in t + 1..self.a.rows() {
            consider((i, t), &self.a[(i, t)]);
        }
        best
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_in_block(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[(i, t)].is_zero() {
                    let q = w.a[(i, t)].div_floor(&w.a[(t, t)]);
                    w.add_row(i, t, &-q);
                    clean &= w.a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[(t, j)].is_zero() {
                    let q = w.a[(t, j)].div_floor(&w.a[(t, t)]);
                    w.add_col(j, t, &-q);
                    clean &= w.a[(t, j)].is_zero();
                }
            }
            if !clean {
                let (i, j) = w.min_in_cross(t);
                w.swap_rows(t, i);
                w.swap_cols(t, j);
                continue;
            }
            let pivot = w.a[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.a.negate_row(t);
            w.u.negate_row(t);
        }
        t += 1;
    }
    Snf { u: w.u, d: w.a, v: w.v, v_inv: w.v_inv, rank: t }
}

/// Basis (as columns) of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let cols: Vec<Vec<BigInt>> = (snf.rank..m.cols()).map(|j| snf.v.column(j)).collect();
    IntMatrix::from_columns(m.cols(), &cols)
}

/// Some integer solution of `m x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len());
    let snf = smith_normal_form(m);
    let ub = snf.u.mul_vec(b);
    let mut w = alloc::vec![BigInt::zero(); m.cols()];
    for (i, y) in ub.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = y.div_rem(&snf.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            w[i] = q;
        } else if !y.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        s
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(s.rank, 0);
        assert_eq!(s.d, IntMatrix::from_rows(&[[0]]));
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let s = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.invariant_factors(), [BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn divisibility_forced_by_row_addition() {
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.invariant_factors(), [BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        let b = [BigInt::from(3), BigInt::from(6)];
        let x = solve_integer(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(solve_integer(&m, &[BigInt::from(1), BigInt::from(1)]).is_none());
    }
}
