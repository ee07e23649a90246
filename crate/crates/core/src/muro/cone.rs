use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::z4::Z4Mat;

/// A chosen triangle `A --f--> B --u--> C --v--> A` in `F(Z/4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleData {
    pub f: Z4Mat,
    pub u: Z4Mat,
    pub v: Z4Mat,
}

impl TriangleData {
    pub fn source_rank(&self) -> usize {
        self.f.cols()
    }

    pub fn target_rank(&self) -> usize {
        self.f.rows()
    }

    pub fn cone_rank(&self) -> usize {
        self.u.rows()
    }

    /// `B --u--> C --v--> A --(-f)--> B`.
    pub fn rotate(&self) -> TriangleData {
        TriangleData { f: self.u.clone(), u: self.v.clone(), v: self.f.neg() }
    }

    pub fn composites_vanish(&self) -> bool {
        self.u.mul(&self.f).is_zero() && self.v.mul(&self.u).is_zero() && self.f.mul(&self.v).is_zero()
    }

    /// `hom(X, −)` and `hom(−, X)` exactness of the periodic sequence for all
    /// `X` of rank `1..=rank_bound`.
    pub fn is_acyclic(&self, rank_bound: usize) -> bool {
        if !self.composites_vanish() {
            return false;
        }
        let seq = [&self.f, &self.u, &self.v];
        (1..=rank_bound).all(|x| {
            (0..3).all(|i| {
                let (g, h) = (seq[i], seq[(i + 1) % 3]);
                exact_pair(&g.post_operator(x), &h.post_operator(x))
                    && exact_pair(&h.pre_operator(x), &g.pre_operator(x))
            })
        })
    }
}

/// Exactness of `· --g--> · --h--> ·` at the middle.
pub fn exact_pair(g: &Z4Mat, h: &Z4Mat) -> bool {
    h.mul(g).is_zero() && g.image_order_log2() + h.image_order_log2() == 2 * h.cols()
}

/// The chosen triangle on `f: Z4^a → Z4^b`.
pub fn cone(f: &Z4Mat) -> TriangleData {
    let (a, b) = (f.cols(), f.rows());
    let (p, d, q) = f.diagonal_form();
    let r = a.min(b);
    // cone coordinates: (row in B or None, coefficient) for u, (column in A, coefficient) for v
    let mut u_parts: Vec<(usize, usize, i64)> = Vec::new();
    let mut v_parts: Vec<(usize, usize, i64)> = Vec::new();
    let mut k = 0;
    for i in 0..r {
        match d.get(i, i) {
            1 => {}
            2 => {
                u_parts.push((k, i, 2));
                v_parts.push((i, k, 2));
                k += 1;
            }
            _ => {
                u_parts.push((k, i, 1));
                v_parts.push((i, k + 1, -1));
                k += 2;
            }
        }
    }
    for i in r..b {
        u_parts.push((k, i, 1));
        k += 1;
    }
    for j in r..a {
        v_parts.push((j, k, -1));
        k += 1;
    }
    let mut u_d = Z4Mat::zeros(k, b);
    for (row, col, c) in u_parts {
        u_d.set(row, col, c);
    }
    let mut v_d = Z4Mat::zeros(a, k);
    for (row, col, c) in v_parts {
        v_d.set(row, col, c);
    }
    TriangleData { f: f.clone(), u: u_d.mul(&p), v: q.mul(&v_d) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_triangle() {
        let t = cone(&Z4Mat::from_flat(1, 1, &[2]));
        assert_eq!(t.u, Z4Mat::from_flat(1, 1, &[2]));
        assert_eq!(t.v, Z4Mat::from_flat(1, 1, &[2]));
        assert!(t.is_acyclic(2));
        assert_eq!(cone(&Z4Mat::identity(2)).cone_rank(), 0);
        let z = cone(&Z4Mat::zeros(2, 1));
        assert_eq!(z.cone_rank(), 3);
        assert!(z.is_acyclic(2));
    }
}
