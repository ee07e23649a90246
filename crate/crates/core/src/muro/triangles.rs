use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::cone::{cone, TriangleData};
use super::z4::{lex_min, Z4Mat};
use super::MuroError;
use crate::abgrp::{FinAbGroup, GroupMor};
use crate::catops::{ArrowCategory, ArrowObj, Biproduct, CompCategory, FreeModules, HomSpace, Preadditive, Raw};

pub type Arrow = ArrowObj<usize>;

/// The matrix of an arrow of `F(Z/4)`.
pub fn mat(f: &Arrow) -> Z4Mat {
    Z4Mat::from_raw(f.dst, f.src, &f.map)
}

pub fn arrow(m: &Z4Mat) -> Arrow {
    ArrowObj { src: m.cols(), dst: m.rows(), map: m.to_raw() }
}

/// The arrow category `F(Z/4)^[1]`.
pub fn base_arrows() -> ArrowCategory<FreeModules> {
    ArrowCategory::new(FreeModules::new(4))
}

/// A morphism `[f] → [f']` of `Triangles₀`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tri0Mor {
    pub a: Z4Mat,
    pub b: Z4Mat,
    pub c: Z4Mat,
}

impl Tri0Mor {
    pub fn to_raw(&self) -> Raw {
        let mut v = self.a.to_raw();
        v.extend(self.b.to_raw());
        v.extend(self.c.to_raw());
        v
    }

    pub fn from_raw(f: &Arrow, g: &Arrow, raw: &[BigInt]) -> Self {
        let (cf, cg) = (cone(&mat(f)).cone_rank(), cone(&mat(g)).cone_rank());
        let na = g.src * f.src;
        let nb = g.dst * f.dst;
        Tri0Mor {
            a: Z4Mat::from_raw(g.src, f.src, &raw[..na]),
            b: Z4Mat::from_raw(g.dst, f.dst, &raw[na..na + nb]),
            c: Z4Mat::from_raw(cg, cf, &raw[na + nb..]),
        }
    }

    pub fn then(&self, next: &Tri0Mor) -> Tri0Mor {
        Tri0Mor { a: next.a.mul(&self.a), b: next.b.mul(&self.b), c: next.c.mul(&self.c) }
    }

    /// Whether the three squares commute.
    pub fn is_valid(&self, f: &TriangleData, g: &TriangleData) -> bool {
        g.f.mul(&self.a) == self.b.mul(&f.f)
            && g.u.mul(&self.b) == self.c.mul(&f.u)
            && g.v.mul(&self.c) == self.a.mul(&f.v)
    }
}

/// The linear conditions on `a ++ b ++ c` for a morphism of triangles.
pub fn constraint_matrix(f: &TriangleData, g: &TriangleData) -> Z4Mat {
    let (a, b, c) = (f.source_rank(), f.target_rank(), f.cone_rank());
    let (a2, b2, c2) = (g.source_rank(), g.target_rank(), g.cone_rank());
    let z = Z4Mat::zeros;
    let e1 = g.f.post_operator(a).hcat(&f.f.pre_operator(b2).neg()).hcat(&z(b2 * a, c2 * c));
    let e2 = z(c2 * b, a2 * a).hcat(&g.u.post_operator(b)).hcat(&f.u.pre_operator(c2).neg());
    let e3 = f.v.pre_operator(a2).neg().hcat(&z(a2 * c, b2 * b)).hcat(&g.v.post_operator(c));
    e1.vcat(&e2).vcat(&e3)
}

/// Solutions `c` of `u' b = c u`, `v' c = a v`, as a particular solution and kernel generators.
pub fn third_component(
    f: &TriangleData,
    g: &TriangleData,
    a: &Z4Mat,
    b: &Z4Mat,
) -> Option<(Vec<u8>, Vec<Vec<u8>>)> {
    let (c, c2) = (f.cone_rank(), g.cone_rank());
    let m = f.u.pre_operator(c2).vcat(&g.v.post_operator(c));
    let mut rhs: Vec<u8> = g.u.mul(b).data().to_vec();
    rhs.extend_from_slice(a.mul(&f.v).data());
    let x0 = m.solve(&rhs)?;
    Some((x0, m.kernel()))
}

fn smallest_third(f: &TriangleData, g: &TriangleData, a: &Z4Mat, b: &Z4Mat) -> Option<Z4Mat> {
    let (x0, ker) = third_component(f, g, a, b)?;
    let c = lex_min(&x0, &ker);
    Some(Z4Mat::from_fn(g.cone_rank(), f.cone_rank(), |i, j| c[i * f.cone_rank() + j] as i64))
}

/// `Triangles₀(F(Z/4))` over the deterministic chosen triangles.
#[derive(Clone, Copy, Debug, Default)]
pub struct Triangles0;

impl Triangles0 {
    pub fn triangle(&self, f: &Arrow) -> TriangleData {
        cone(&mat(f))
    }

    /// Generators of `hom([f], [f'])` as flat `Z/4` vectors.
    pub fn hom_gens(&self, f: &Arrow, g: &Arrow) -> Vec<Vec<u8>> {
        constraint_matrix(&self.triangle(f), &self.triangle(g)).kernel()
    }

    pub fn split(&self, f: &Arrow, g: &Arrow, raw: &[BigInt]) -> Tri0Mor {
        Tri0Mor::from_raw(f, g, raw)
    }

    /// `π(a, b, c) = (a, b)`.
    pub fn pi(&self, f: &Arrow, g: &Arrow, raw: &[BigInt]) -> Raw {
        raw[..g.src * f.src + g.dst * f.dst].to_vec()
    }

    /// `(0, 0, c)` in raw coordinates.
    pub fn kernel_element(&self, f: &Arrow, g: &Arrow, c: &Z4Mat) -> Raw {
        Tri0Mor { a: Z4Mat::zeros(g.src, f.src), b: Z4Mat::zeros(g.dst, f.dst), c: c.clone() }.to_raw()
    }

    /// `Θ(f, f') = {c : c u_f = 0, v_{f'} c = 0}`, generators as flat vectors.
    pub fn theta_gens(&self, f: &Arrow, g: &Arrow) -> Vec<Vec<u8>> {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        theta_gens_of(&tf, &tg)
    }

    /// `Θ(f, f')` inside `hom(C_f, C_{f'})`, in `c` coordinates.
    pub fn theta_space(&self, f: &Arrow, g: &Arrow) -> HomSpace {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        let gens = theta_gens_of(&tf, &tg).iter().map(|v| to_raw(v)).collect();
        HomSpace::cyclic_subspace(4, tf.cone_rank() * tg.cone_rank(), gens)
    }

    pub fn theta_group(&self, f: &Arrow, g: &Arrow) -> FinAbGroup {
        self.theta_space(f, g).group().clone()
    }

    /// `θ(x) = u_{f'} x v_f` for `x: A[1] → B'`.
    pub fn theta_map(&self, f: &Arrow, g: &Arrow, x: &Z4Mat) -> Z4Mat {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        tg.u.mul(x).mul(&tf.v)
    }

    /// `θ(f, f')` as a homomorphism `ϒ(f, f') → Θ(f, f')`.
    pub fn theta_mor(&self, f: &Arrow, g: &Arrow) -> GroupMor {
        let arrows = base_arrows();
        let ups = crate::catops::Bifunctor::value(&crate::catops::TodaBifunctor::new(&arrows), f, g);
        let th = self.theta_space(f, g);
        let cols: Vec<Vec<BigInt>> = ups
            .basis()
            .iter()
            .map(|x| th.coords(&self.theta_map(f, g, &Z4Mat::from_raw(g.dst, f.src, x)).to_raw()).0)
            .collect();
        GroupMor::from_columns(ups.group().clone(), th.group().clone(), &cols)
    }

    /// TR5 fill-in: the smallest `c` making `(a, b, c)` a morphism.
    pub fn lift_tr5(&self, f: &Arrow, g: &Arrow, a: &Z4Mat, b: &Z4Mat) -> Result<Tri0Mor, MuroError> {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        if tg.f.mul(a) != b.mul(&tf.f) {
            return Err(MuroError::NonCommutingSquare);
        }
        let c = smallest_third(&tf, &tg, a, b).ok_or(MuroError::NoFillIn)?;
        Ok(Tri0Mor { a: a.clone(), b: b.clone(), c })
    }

    /// Fast criterion: the cone component is invertible.
    pub fn is_excising(&self, x: &Tri0Mor) -> bool {
        x.c.is_invertible()
    }

    /// The defining condition: `hom(^X!, x)` is bijective for all `X` up to `rank_bound`.
    pub fn is_excising_paranoid(&self, f: &Arrow, g: &Arrow, x: &Tri0Mor, rank_bound: usize) -> bool {
        let arrows = base_arrows();
        (1..=rank_bound).all(|r| {
            let src = arrows.cobang(&r);
            post_mor(self, &src, f, g, &x.to_raw()).is_isomorphism()
        })
    }

    /// `(!_f, i_f, j_f)` for `!_A → !_B → [f] → !_{A[1]}`.
    pub fn pretriangle(&self, f: &Arrow) -> Result<Pretriangle, MuroError> {
        let arrows = base_arrows();
        let tf = self.triangle(f);
        let (bang_a, bang_b) = (arrows.bang(&f.src), arrows.bang(&f.dst));
        let fm = mat(f);
        let bang_f = self.unique_lift(&bang_a, &bang_b, &Z4Mat::zeros(0, 0), &fm)?;
        let i_f = self.unique_lift(&bang_b, f, &Z4Mat::zeros(f.src, 0), &Z4Mat::identity(f.dst))?;
        let j_f = Tri0Mor { a: Z4Mat::zeros(0, f.src), b: Z4Mat::zeros(f.src, f.dst), c: tf.v.clone() };
        if !j_f.is_valid(&tf, &self.triangle(&bang_a)) {
            return Err(MuroError::NoFillIn);
        }
        Ok(Pretriangle { f: f.clone(), bang_a, bang_b, bang_f, i_f, j_f })
    }

    fn unique_lift(&self, f: &Arrow, g: &Arrow, a: &Z4Mat, b: &Z4Mat) -> Result<Tri0Mor, MuroError> {
        if !self.theta_gens(f, g).is_empty() {
            return Err(MuroError::AmbiguousLift);
        }
        self.lift_tr5(f, g, a, b)
    }

    /// `α: (−f, u_f, −v_f) → chosen triangle of −f`.
    fn sign_iso(&self, f: &Arrow) -> Z4Mat {
        let tf = self.triangle(f);
        let neg = TriangleData { f: tf.f.neg(), u: tf.u.clone(), v: tf.v.neg() };
        let target = cone(&neg.f);
        let id_a = Z4Mat::identity(tf.source_rank());
        let id_b = Z4Mat::identity(tf.target_rank());
        smallest_third(&neg, &target, &id_a, &id_b).expect("distinguished triangles on the same map")
    }
}

fn to_raw(v: &[u8]) -> Raw {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn theta_gens_of(tf: &TriangleData, tg: &TriangleData) -> Vec<Vec<u8>> {
    let (c, c2) = (tf.cone_rank(), tg.cone_rank());
    tf.u.pre_operator(c2).vcat(&tg.v.post_operator(c)).kernel()
}

/// `hom(x, p) → hom(x, q)`, `m ↦ g m`, in normal-form coordinates.
pub fn post_mor<C: Preadditive>(cat: &C, x: &C::Obj, p: &C::Obj, q: &C::Obj, g: &[BigInt]) -> GroupMor {
    let (hp, hq) = (cat.hom(x, p), cat.hom(x, q));
    let cols: Vec<Vec<BigInt>> = hp.basis().iter().map(|m| hq.coords(&cat.compose(x, p, q, g, m)).0).collect();
    GroupMor::from_columns(hp.group().clone(), hq.group().clone(), &cols)
}

/// The pretriangle `!_A → !_B → [f] → !_{A[1]}` with its canonical lifts.
#[derive(Clone, Debug)]
pub struct Pretriangle {
    pub f: Arrow,
    pub bang_a: Arrow,
    pub bang_b: Arrow,
    pub bang_f: Tri0Mor,
    pub i_f: Tri0Mor,
    pub j_f: Tri0Mor,
}

impl Preadditive for Triangles0 {
    type Obj = Arrow;

    fn hom(&self, f: &Arrow, g: &Arrow) -> HomSpace {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        let dim = g.src * f.src + g.dst * f.dst + tg.cone_rank() * tf.cone_rank();
        let gens = constraint_matrix(&tf, &tg).kernel().iter().map(|v| to_raw(v)).collect();
        HomSpace::cyclic_subspace(4, dim, gens)
    }

    fn compose(&self, f: &Arrow, g: &Arrow, h: &Arrow, y: &[BigInt], x: &[BigInt]) -> Raw {
        let (x, y) = (Tri0Mor::from_raw(f, g, x), Tri0Mor::from_raw(g, h, y));
        x.then(&y).to_raw()
    }

    fn identity(&self, f: &Arrow) -> Raw {
        let c = self.triangle(f).cone_rank();
        Tri0Mor { a: Z4Mat::identity(f.src), b: Z4Mat::identity(f.dst), c: Z4Mat::identity(c) }.to_raw()
    }

    fn describe_obj(&self, f: &Arrow) -> String {
        format!("[{}]", mat(f))
    }
}

impl CompCategory for Triangles0 {
    fn zero_object(&self) -> Arrow {
        arrow(&Z4Mat::zeros(0, 0))
    }

    fn direct_sum(&self, f: &Arrow, g: &Arrow) -> Biproduct<Arrow> {
        let (tf, tg) = (self.triangle(f), self.triangle(g));
        let fg = tf.f.block_diag(&tg.f);
        let split = TriangleData { f: fg.clone(), u: tf.u.block_diag(&tg.u), v: tf.v.block_diag(&tg.v) };
        let chosen = cone(&fg);
        let ida = Z4Mat::identity(fg.cols());
        let idb = Z4Mat::identity(fg.rows());
        let phi = smallest_third(&split, &chosen, &ida, &idb).expect("sum triangle is distinguished");
        let phi_inv = phi.inverse().expect("fill-in of identities is invertible");
        let (ca, cb) = (tf.cone_rank(), tg.cone_rank());
        let inc = |n: usize, off: usize, total: usize| Z4Mat::from_fn(total, n, |i, j| (i == j + off) as i64);
        let (sa, sb) = (f.src + g.src, f.dst + g.dst);
        let i1 = Tri0Mor { a: inc(f.src, 0, sa), b: inc(f.dst, 0, sb), c: phi.mul(&inc(ca, 0, ca + cb)) };
        let i2 = Tri0Mor { a: inc(g.src, f.src, sa), b: inc(g.dst, f.dst, sb), c: phi.mul(&inc(cb, ca, ca + cb)) };
        let r1 = Tri0Mor {
            a: inc(f.src, 0, sa).transpose(),
            b: inc(f.dst, 0, sb).transpose(),
            c: inc(ca, 0, ca + cb).transpose().mul(&phi_inv),
        };
        let r2 = Tri0Mor {
            a: inc(g.src, f.src, sa).transpose(),
            b: inc(g.dst, f.dst, sb).transpose(),
            c: inc(cb, ca, ca + cb).transpose().mul(&phi_inv),
        };
        Biproduct { sum: arrow(&fg), i1: i1.to_raw(), i2: i2.to_raw(), r1: r1.to_raw(), r2: r2.to_raw() }
    }

    fn window(&self, rank_bound: usize) -> Vec<Arrow> {
        base_arrows().window(rank_bound)
    }

    /// Koszul translation `[f] ↦ [−f]`.
    fn translate_obj(&self, f: &Arrow) -> Option<Arrow> {
        Some(arrow(&mat(f).neg()))
    }

    fn translate_mor(&self, f: &Arrow, g: &Arrow, x: &[BigInt]) -> Option<Raw> {
        let x = Tri0Mor::from_raw(f, g, x);
        let (af, ag) = (self.sign_iso(f), self.sign_iso(g));
        let c = ag.mul(&x.c).mul(&af.inverse()?);
        Some(Tri0Mor { a: x.a, b: x.b, c }.to_raw())
    }
}

