use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::cone::TriangleData;
use super::triangles::{arrow, base_arrows, constraint_matrix, mat, post_mor, theta_gens_of, Arrow, Tri0Mor, Triangles0};
use super::z4::{span_order_log2, Z4Mat};
use crate::abgrp::is_exact_at;
use crate::catops::{Bifunctor, CompCategory, Preadditive, TodaBifunctor};

/// Outcome of the exhaustive square-zero check of `Ker(π)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareZeroReport {
    pub arrows: usize,
    /// Number of `(f, f', f'')` triples covered.
    pub triples: u64,
    /// `(f, f', f'')` window indices with a nonzero composite.
    pub violations: Vec<(usize, usize, usize)>,
}

/// For every `f'` the images of all `c ∈ Θ(f, f')` span a submodule of
/// `C_{f'}`; the composites vanish iff every `c' ∈ Θ(f', f'')` kills it.
pub fn square_zero_violations(rank_bound: usize) -> SquareZeroReport {
    let win = Triangles0.window(rank_bound);
    let tris: Vec<TriangleData> = win.iter().map(|f| Triangles0.triangle(f)).collect();
    let n = win.len();
    let mut violations = Vec::new();
    for (j, tj) in tris.iter().enumerate() {
        let cj = tj.cone_rank();
        let mut image: Vec<Vec<u8>> = Vec::new();
        for ti in &tris {
            let ci = ti.cone_rank();
            for g in theta_gens_of(ti, tj) {
                for col in 0..ci {
                    let v: Vec<u8> = (0..cj).map(|r| g[r * ci + col]).collect();
                    if v.iter().any(|&x| x != 0) {
                        image.push(v);
                    }
                }
            }
        }
        if image.is_empty() {
            continue;
        }
        let span = Z4Mat::from_columns(cj, &image);
        for (k, tk) in tris.iter().enumerate() {
            let ck = tk.cone_rank();
            let bad = theta_gens_of(tj, tk).iter().any(|g| {
                let c = Z4Mat::from_fn(ck, cj, |r, s| g[r * cj + s] as i64);
                !c.mul(&span).is_zero()
            });
            if bad {
                // locate a concrete first factor
                let i = (0..n)
                    .find(|&i| {
                        theta_gens_of(&tris[i], tj).iter().any(|g1| {
                            let ci = tris[i].cone_rank();
                            let c1 = Z4Mat::from_fn(cj, ci, |r, s| g1[r * ci + s] as i64);
                            theta_gens_of(tj, tk).iter().any(|g2| {
                                !Z4Mat::from_fn(ck, cj, |r, s| g2[r * cj + s] as i64).mul(&c1).is_zero()
                            })
                        })
                    })
                    .unwrap_or(0);
                violations.push((i, j, k));
            }
        }
    }
    SquareZeroReport { arrows: n, triples: (n as u64).pow(3), violations }
}

/// `hom([f], !_X) ≅ hom(C_f, X)` via `c ↦ (0, c u_f, c)`, and
/// `hom(^X!, [f]) ≅ hom(X, C_f)` via `c ↦ (−v_f c, 0, c)`.
pub fn conrep_bijection_holds(f: &Arrow, x: usize) -> bool {
    let t = Triangles0;
    let arrows = base_arrows();
    let tf = t.triangle(f);
    let cf = tf.cone_rank();
    let (bx, cx) = (arrows.bang(&x), arrows.cobang(&x));
    let (tb, tc) = (t.triangle(&bx), t.triangle(&cx));
    let log_order = |s: &Arrow, d: &Arrow| {
        let m = constraint_matrix(&t.triangle(s), &t.triangle(d));
        2 * m.cols() - m.image_order_log2()
    };
    let units = |r: usize, c: usize| {
        (0..r * c).map(move |k| Z4Mat::from_fn(r, c, |i, j| (i * c + j == k) as i64))
    };
    let left = units(x, cf).all(|c| {
        let m = Tri0Mor { a: Z4Mat::zeros(0, f.src), b: c.mul(&tf.u), c };
        m.is_valid(&tf, &tb)
    }) && log_order(f, &bx) == 2 * x * cf;
    let right = units(cf, x).all(|c| {
        let m = Tri0Mor { a: tf.v.mul(&c).neg(), b: Z4Mat::zeros(f.dst, 0), c };
        m.is_valid(&tc, &tf)
    }) && log_order(&cx, f) == 2 * x * cf;
    left && right
}

/// Exactness and excision for `E = hom(^X!, −)` on one pretriangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyCheck {
    pub f: String,
    pub x_rank: usize,
    pub exact_at_bang_b: bool,
    pub exact_at_f: bool,
    pub exact_at_bang_a: bool,
    pub excision: bool,
}

impl HomologyCheck {
    pub fn passed(&self) -> bool {
        self.exact_at_bang_b && self.exact_at_f && self.exact_at_bang_a && self.excision
    }
}

/// Applies `hom(^X!, −)` to `!_A → !_B → [f] → !_{A[1]} → !_{B[1]}` and to the
/// excising morphism `(0, u_f, 1): [f] → !_{C_f}`.
pub fn homology_check(x_rank: usize, f: &Arrow) -> HomologyCheck {
    let t = Triangles0;
    let arrows = base_arrows();
    let src = arrows.cobang(&x_rank);
    let pt = t.pretriangle(f).expect("pretriangle lifts exist");
    let e = |p: &Arrow, q: &Arrow, m: &Tri0Mor| post_mor(&t, &src, p, q, &m.to_raw());
    let e1 = e(&pt.bang_a, &pt.bang_b, &pt.bang_f);
    let e2 = e(&pt.bang_b, f, &pt.i_f);
    let e3 = e(f, &pt.bang_a, &pt.j_f);
    let e4 = e(&pt.bang_a, &pt.bang_b, &pt.bang_f);
    let tf = t.triangle(f);
    let target = arrows.bang(&tf.cone_rank());
    let exc = Tri0Mor { a: Z4Mat::zeros(0, f.src), b: tf.u.clone(), c: Z4Mat::identity(tf.cone_rank()) };
    let excision = t.is_excising(&exc) && e(f, &target, &exc).is_isomorphism();
    HomologyCheck {
        f: alloc::format!("{}", mat(f)),
        x_rank,
        exact_at_bang_b: is_exact_at(&e1, &e2).unwrap_or(false),
        exact_at_f: is_exact_at(&e2, &e3).unwrap_or(false),
        exact_at_bang_a: is_exact_at(&e3, &e4).unwrap_or(false),
        excision,
    }
}

/// Well-definedness and naturality of `θ: ϒ → Θ` over all basis morphisms
/// between the given objects.
pub fn is_theta_natural(objs: &[Arrow]) -> bool {
    let t = Triangles0;
    let arrows = base_arrows();
    let toda = TodaBifunctor::new(&arrows);
    let theta = |f: &Arrow, g: &Arrow, x: &[num_bigint::BigInt]| t.theta_map(f, g, &Z4Mat::from_raw(g.dst, f.src, x));
    for f in objs {
        for g in objs {
            // denominators die
            if !toda.denominator(f, g).iter().all(|d| theta(f, g, d).is_zero()) {
                return false;
            }
            let ups = toda.value(f, g);
            for h in objs {
                // post: g → h
                for m in arrows.hom(g, h).basis() {
                    let (a, b) = arrows.split_pair(g, h, m);
                    let Ok(lift) = t.lift_tr5(g, h, &Z4Mat::from_raw(h.src, g.src, &a), &Z4Mat::from_raw(h.dst, g.dst, &b))
                    else {
                        return false;
                    };
                    for x in ups.basis() {
                        let lhs = theta(f, h, &toda.post(f, g, h, m, x));
                        if lhs != lift.c.mul(&theta(f, g, x)) {
                            return false;
                        }
                    }
                }
                // pre: h → f
                for m in arrows.hom(h, f).basis() {
                    let (a, b) = arrows.split_pair(h, f, m);
                    let Ok(lift) = t.lift_tr5(h, f, &Z4Mat::from_raw(f.src, h.src, &a), &Z4Mat::from_raw(f.dst, h.dst, &b))
                    else {
                        return false;
                    };
                    for x in ups.basis() {
                        let lhs = theta(h, g, &toda.pre(h, f, g, m, x));
                        if lhs != theta(f, g, x).mul(&lift.c) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Whether `θ(s, f)` and `θ(f, s)` are isomorphisms for the split arrows
/// `s ∈ {id_X, !_X, ^X!}`, `X` of rank `1..=rank_bound`.
pub fn split_theta_iso(f: &Arrow, rank_bound: usize) -> bool {
    let t = Triangles0;
    let arrows = base_arrows();
    (1..=rank_bound).all(|x| {
        [arrow(&Z4Mat::identity(x)), arrows.bang(&x), arrows.cobang(&x)]
            .iter()
            .all(|s| t.theta_mor(s, f).is_isomorphism() && t.theta_mor(f, s).is_isomorphism())
    })
}

/// Order of `Θ(f, f')` as a power of two, from the `Z/4` solve.
pub fn theta_log_order(f: &Arrow, g: &Arrow) -> usize {
    let t = Triangles0;
    let (tf, tg) = (t.triangle(f), t.triangle(g));
    span_order_log2(tf.cone_rank() * tg.cone_rank(), &theta_gens_of(&tf, &tg))
}
