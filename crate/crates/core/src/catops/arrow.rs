use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::category::{raw_neg, raw_sub, Biproduct, CompCategory, HomSpace, Preadditive, Raw};
use crate::abgrp::GroupMor;

/// An object of the arrow category: a morphism `map: src → dst`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowObj<O> {
    pub src: O,
    pub dst: O,
    pub map: Raw,
}

/// Category of arrows; morphisms `f → f'` are pairs `(a, b)` with `f'a = bf`,
/// raw coordinates concatenated `a ++ b`.
#[derive(Clone, Debug)]
pub struct ArrowCategory<C> {
    pub base: C,
}

impl<C: CompCategory> ArrowCategory<C> {
    pub fn new(base: C) -> Self {
        ArrowCategory { base }
    }

    /// Canonicalises the stored map so equal arrows compare equal.
    pub fn object(&self, src: C::Obj, dst: C::Obj, map: &[BigInt]) -> ArrowObj<C::Obj> {
        let map = self.base.hom(&src, &dst).canonical(map);
        ArrowObj { src, dst, map }
    }

    pub fn split_pair(&self, f: &ArrowObj<C::Obj>, g: &ArrowObj<C::Obj>, m: &[BigInt]) -> (Raw, Raw) {
        let da = self.base.hom(&f.src, &g.src).dim();
        (m[..da].to_vec(), m[da..].to_vec())
    }

    pub fn pair(&self, a: &[BigInt], b: &[BigInt]) -> Raw {
        let mut v = a.to_vec();
        v.extend_from_slice(b);
        v
    }

    /// `(g, h) ↦ f'g − hf` on `hom(A, A') ⊕ hom(B, B') → hom(A, B')`.
    fn defect(&self, f: &ArrowObj<C::Obj>, g: &ArrowObj<C::Obj>, a: &[BigInt], b: &[BigInt]) -> Raw {
        let c = &self.base;
        let l = c.compose(&f.src, &g.src, &g.dst, &g.map, a);
        let r = c.compose(&f.src, &f.dst, &g.dst, b, &f.map);
        raw_sub(&l, &r)
    }

    /// `!_X = (0 → X)`.
    pub fn bang(&self, x: &C::Obj) -> ArrowObj<C::Obj> {
        let z = self.base.zero_object();
        let m = self.base.zero_mor(&z, x);
        ArrowObj { src: z, dst: x.clone(), map: m }
    }

    /// `^X! = (X → 0)`.
    pub fn cobang(&self, x: &C::Obj) -> ArrowObj<C::Obj> {
        let z = self.base.zero_object();
        let m = self.base.zero_mor(x, &z);
        ArrowObj { src: x.clone(), dst: z, map: m }
    }

    pub fn id_arrow(&self, x: &C::Obj) -> ArrowObj<C::Obj> {
        ArrowObj { src: x.clone(), dst: x.clone(), map: self.base.identity(x) }
    }
}

impl<C: CompCategory> Preadditive for ArrowCategory<C> {
    type Obj = ArrowObj<C::Obj>;

    fn hom(&self, f: &Self::Obj, g: &Self::Obj) -> HomSpace {
        let ha = self.base.hom(&f.src, &g.src);
        let hb = self.base.hom(&f.dst, &g.dst);
        let target = self.base.hom(&f.src, &g.dst);
        let sum = HomSpace::direct_sum(&[&ha, &hb]);
        let cols: Vec<Vec<BigInt>> = sum
            .basis()
            .iter()
            .map(|m| {
                let (a, b) = m.split_at(ha.dim());
                target.coords(&self.defect(f, g, a, b)).0
            })
            .collect();
        let phi = GroupMor::from_columns(sum.group().clone(), target.group().clone(), &cols);
        let ker = phi.kernel();
        let gens: Vec<Raw> = (0..ker.group.ngens())
            .map(|i| sum.element(&ker.map.apply(&ker.group.generator(i))))
            .collect();
        HomSpace::new(sum.dim(), sum.lattice().to_vec(), gens)
    }

    fn compose(&self, f: &Self::Obj, g: &Self::Obj, h: &Self::Obj, y: &[BigInt], x: &[BigInt]) -> Raw {
        let (xa, xb) = self.split_pair(f, g, x);
        let (ya, yb) = self.split_pair(g, h, y);
        let a = self.base.compose(&f.src, &g.src, &h.src, &ya, &xa);
        let b = self.base.compose(&f.dst, &g.dst, &h.dst, &yb, &xb);
        self.pair(&a, &b)
    }

    fn identity(&self, f: &Self::Obj) -> Raw {
        self.pair(&self.base.identity(&f.src), &self.base.identity(&f.dst))
    }

    fn describe_obj(&self, f: &Self::Obj) -> String {
        format!(
            "({} -> {}: {:?})",
            self.base.describe_obj(&f.src),
            self.base.describe_obj(&f.dst),
            f.map
        )
    }
}

impl<C: CompCategory> CompCategory for ArrowCategory<C> {
    fn zero_object(&self) -> Self::Obj {
        let z = self.base.zero_object();
        let m = self.base.identity(&z);
        self.object(z.clone(), z, &m)
    }

    fn direct_sum(&self, f: &Self::Obj, g: &Self::Obj) -> Biproduct<Self::Obj> {
        let c = &self.base;
        let sa = c.direct_sum(&f.src, &g.src);
        let sb = c.direct_sum(&f.dst, &g.dst);
        let m1 = c.compose(&sa.sum, &f.src, &sb.sum, &c.compose(&f.src, &f.dst, &sb.sum, &sb.i1, &f.map), &sa.r1);
        let m2 = c.compose(&sa.sum, &g.src, &sb.sum, &c.compose(&g.src, &g.dst, &sb.sum, &sb.i2, &g.map), &sa.r2);
        let map = super::category::raw_add(&m1, &m2);
        let sum = self.object(sa.sum.clone(), sb.sum.clone(), &map);
        Biproduct {
            sum,
            i1: self.pair(&sa.i1, &sb.i1),
            i2: self.pair(&sa.i2, &sb.i2),
            r1: self.pair(&sa.r1, &sb.r1),
            r2: self.pair(&sa.r2, &sb.r2),
        }
    }

    /// All arrows between base window objects.
    fn window(&self, rank_bound: usize) -> Vec<Self::Obj> {
        let objs = self.base.window(rank_bound);
        let mut out = Vec::new();
        for a in &objs {
            for b in &objs {
                if let Ok(els) = self.base.hom(a, b).elements() {
                    out.extend(els.into_iter().map(|m| self.object(a.clone(), b.clone(), &m)));
                }
            }
        }
        out
    }

    /// Koszul translation `f ↦ −f[1]`.
    fn translate_obj(&self, f: &Self::Obj) -> Option<Self::Obj> {
        let a1 = self.base.translate_obj(&f.src)?;
        let b1 = self.base.translate_obj(&f.dst)?;
        let m = self.base.translate_mor(&f.src, &f.dst, &f.map)?;
        Some(self.object(a1, b1, &raw_neg(&m)))
    }

    fn translate_mor(&self, f: &Self::Obj, g: &Self::Obj, x: &[BigInt]) -> Option<Raw> {
        let (a, b) = self.split_pair(f, g, x);
        let a1 = self.base.translate_mor(&f.src, &g.src, &a)?;
        let b1 = self.base.translate_mor(&f.dst, &g.dst, &b)?;
        Some(self.pair(&a1, &b1))
    }
}
