use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::catops::Raw;

/// A matrix over `Z/4`, `rows × cols`, entries in `0..4`, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Z4Mat {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Z4Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Z4Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")?;
        if self.rows == 0 || self.cols == 0 {
            write!(f, "_{}x{}", self.rows, self.cols)?;
        }
        Ok(())
    }
}

impl Z4Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Z4Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn scalar(n: usize, k: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, k);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rows of equal length; `cols` is needed only when there are no rows.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let c = rows.first().map_or(cols, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged matrix");
        Self::from_fn(rows.len(), c, |i, j| rows[i][j])
    }

    pub fn from_flat(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| data[i * cols + j])
    }

    pub fn from_raw(rows: usize, cols: usize, raw: &[BigInt]) -> Self {
        assert_eq!(raw.len(), rows * cols);
        let four = BigInt::from(4);
        Self::from_fn(rows, cols, |i, j| raw[i * cols + j].mod_floor(&four).to_i64().unwrap_or(0))
    }

    pub fn to_raw(&self) -> Raw {
        self.data.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v.rem_euclid(4) as u8;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Z4Mat) -> Z4Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Z4Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) & 3;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Z4Mat) -> Z4Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + b) & 3).collect();
        Z4Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Z4Mat {
        self.scale(3)
    }

    pub fn sub(&self, other: &Z4Mat) -> Z4Mat {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Z4Mat {
        let k = k.rem_euclid(4) as u8;
        let data = self.data.iter().map(|a| (a * k) & 3).collect();
        Z4Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Z4Mat {
        Z4Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i) as i64)
    }

    /// Block diagonal `self ⊕ other`.
    pub fn block_diag(&self, other: &Z4Mat) -> Z4Mat {
        let mut out = Z4Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j) as i64);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j) as i64);
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Z4Mat) -> Z4Mat {
        assert_eq!(self.rows, other.rows);
        Z4Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            (if j < self.cols { self.get(i, j) } else { other.get(i, j - self.cols) }) as i64
        })
    }

    /// `[self ; other]`.
    pub fn vcat(&self, other: &Z4Mat) -> Z4Mat {
        assert_eq!(self.cols, other.cols);
        Z4Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            (if i < self.rows { self.get(i, j) } else { other.get(i - self.rows, j) }) as i64
        })
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Z4Mat) -> Z4Mat {
        Z4Mat::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            (self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)) as i64
        })
    }

    /// `m ↦ self · m` on `cols × k` matrices, as a matrix on row-major vectors.
    pub fn post_operator(&self, k: usize) -> Z4Mat {
        self.kron(&Z4Mat::identity(k))
    }

    /// `m ↦ m · self` on `k × rows` matrices, as a matrix on row-major vectors.
    pub fn pre_operator(&self, k: usize) -> Z4Mat {
        Z4Mat::identity(k).kron(&self.transpose())
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0u8, |acc, j| (acc + self.get(i, j) * v[j]) & 3))
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<u8>]) -> Z4Mat {
        Z4Mat::from_fn(rows, cols.len(), |i, j| cols[j][i] as i64)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: u8) {
        for j in 0..self.cols {
            let v = self.get(src, j);
            let idx = dst * self.cols + j;
            self.data[idx] = (self.data[idx] + k * v) & 3;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: u8) {
        for i in 0..self.rows {
            let v = self.get(i, src);
            let idx = i * self.cols + dst;
            self.data[idx] = (self.data[idx] + k * v) & 3;
        }
    }

    fn scale_row(&mut self, r: usize, k: u8) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = (self.data[idx] * k) & 3;
        }
    }

    /// The invariants: the diagonal of the diagonal form, ones then twos.
    pub fn invariants(&self) -> (usize, usize) {
        let (_, d, _) = self.diagonal_form();
        let k = d.rows.min(d.cols);
        let ones = (0..k).filter(|&i| d.get(i, i) == 1).count();
        let twos = (0..k).filter(|&i| d.get(i, i) == 2).count();
        (ones, twos)
    }

    /// Number of elements of the image.
    pub fn image_order_log2(&self) -> usize {
        let (ones, twos) = self.invariants();
        2 * ones + twos
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.invariants().0 == self.rows
    }

    /// `(P, D, Q)` with `P · self · Q = D`, `P`, `Q` invertible and `D`
    /// diagonal with ones first, then twos, then zeros.
    pub fn diagonal_form(&self) -> (Z4Mat, Z4Mat, Z4Mat) {
        let mut d = self.clone();
        let mut p = Z4Mat::identity(self.rows);
        let mut q = Z4Mat::identity(self.cols);
        let mut t = 0;
        for target in [1u8, 2u8] {
            loop {
                if t >= d.rows.min(d.cols) {
                    break;
                }
                let pos = (t..d.rows).flat_map(|i| (t..d.cols).map(move |j| (i, j))).find(|&(i, j)| {
                    let v = d.get(i, j);
                    if target == 1 { v & 1 == 1 } else { v == 2 }
                });
                let Some((i, j)) = pos else { break };
                d.swap_rows(t, i);
                p.swap_rows(t, i);
                d.swap_cols(t, j);
                q.swap_cols(t, j);
                if d.get(t, t) == 3 {
                    d.scale_row(t, 3);
                    p.scale_row(t, 3);
                }
                // pivot is 1 or 2; every other entry in the block is divisible by it
                let piv = d.get(t, t);
                for r in 0..d.rows {
                    if r != t {
                        let k = (4 - d.get(r, t) / piv) & 3;
                        d.add_row(r, t, k);
                        p.add_row(r, t, k);
                    }
                }
                for c in 0..d.cols {
                    if c != t {
                        let k = (4 - d.get(t, c) / piv) & 3;
                        d.add_col(c, t, k);
                        q.add_col(c, t, k);
                    }
                }
                t += 1;
            }
        }
        (p, d, q)
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<Z4Mat> {
        if !self.is_invertible() {
            return None;
        }
        let (p, _, q) = self.diagonal_form();
        Some(q.mul(&p))
    }

    /// Generators of `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let (_, d, q) = self.diagonal_form();
        let mut gens = Vec::new();
        for j in 0..self.cols {
            let dj = if j < d.rows { d.get(j, j) } else { 0 };
            let k = match dj {
                1 => continue,
                2 => 2,
                _ => 1,
            };
            gens.push(q.column(j).iter().map(|x| (x * k) & 3).collect());
        }
        gens
    }

    /// A solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        let (p, d, q) = self.diagonal_form();
        let pb = p.apply(b);
        let mut y = vec![0u8; self.cols];
        for (i, &v) in pb.iter().enumerate() {
            let di = if i < self.cols { d.get(i, i) } else { 0 };
            match di {
                1 => y[i] = v,
                2 if v % 2 == 0 => y[i] = v / 2,
                _ if v == 0 => {}
                _ => return None,
            }
        }
        Some(q.apply(&y))
    }
}

/// All `Z/4`-combinations of `gens`, in lexicographic order of coefficients.
pub fn span_elements(dim: usize, gens: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut seen = alloc::collections::BTreeSet::new();
    seen.insert(vec![0u8; dim]);
    for g in gens {
        let cur: Vec<Vec<u8>> = seen.iter().cloned().collect();
        for v in cur {
            for k in 1..4u8 {
                seen.insert(v.iter().zip(g).map(|(a, b)| (a + k * b) & 3).collect());
            }
        }
    }
    seen.into_iter().collect()
}

/// Lexicographically smallest element of `x0 + span(gens)`.
pub fn lex_min(x0: &[u8], gens: &[Vec<u8>]) -> Vec<u8> {
    let mut x = x0.to_vec();
    let mut gens: Vec<Vec<u8>> = gens.to_vec();
    for i in 0..x.len() {
        if gens.is_empty() {
            break;
        }
        let row = Z4Mat::from_fn(1, gens.len(), |_, j| gens[j][i] as i64);
        // the achievable values of coordinate i form x_i + (2 or 1)·Z/4, or just x_i
        if let Some(j) = (0..gens.len()).find(|&j| gens[j][i] & 1 == 1) {
            let k = (4 - (x[i] * inv(gens[j][i])) % 4) & 3;
            add_scaled(&mut x, &gens[j], k);
        } else if let Some(j) = (0..gens.len()).find(|&j| gens[j][i] == 2) {
            if x[i] >= 2 {
                add_scaled(&mut x, &gens[j], 1);
            }
        }
        let ker = row.kernel();
        let cols = Z4Mat::from_columns(x.len(), &gens);
        gens = ker.iter().map(|y| cols.apply(y)).filter(|g| g.iter().any(|&v| v != 0)).collect();
    }
    x
}

fn inv(u: u8) -> u8 {
    if u == 3 { 3 } else { 1 }
}

fn add_scaled(x: &mut [u8], g: &[u8], k: u8) {
    for (a, b) in x.iter_mut().zip(g) {
        *a = (*a + k * b) & 3;
    }
}

/// Order of the subgroup spanned by `gens` in `(Z/4)^dim`, as a power of two.
pub fn span_order_log2(dim: usize, gens: &[Vec<u8>]) -> usize {
    Z4Mat::from_columns(dim, gens).image_order_log2()
}

/// Whether `v` lies in the span of `gens`.
pub fn in_span(dim: usize, gens: &[Vec<u8>], v: &[u8]) -> bool {
    Z4Mat::from_columns(dim, gens).solve(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_forms() {
        for (m, ones, twos) in [
            (Z4Mat::from_flat(1, 1, &[2]), 0, 1),
            (Z4Mat::from_flat(2, 2, &[1, 2, 2, 2]), 1, 1),
            (Z4Mat::from_flat(2, 2, &[2, 2, 2, 2]), 0, 1),
        ] {
            let (p, d, q) = m.diagonal_form();
            assert_eq!(p.mul(&m).mul(&q), d);
            assert_eq!(m.invariants(), (ones, twos));
        }
    }

    #[test]
    fn lex_min_picks_smallest() {
        assert_eq!(lex_min(&[3], &[vec![2]]), vec![1]);
        assert_eq!(lex_min(&[2, 3], &[vec![1, 1]]), vec![0, 1]);
        assert_eq!(lex_min(&[2, 3], &[vec![2, 2]]), vec![0, 1]);
    }

    #[test]
    fn solve_and_kernel() {
        let m = Z4Mat::from_flat(1, 1, &[2]);
        assert_eq!(m.solve(&[2]), Some(vec![1]));
        assert_eq!(m.solve(&[1]), None);
        assert_eq!(m.kernel(), vec![vec![2]]);
        assert_eq!(span_elements(1, &m.kernel()).len(), 2);
    }
}
