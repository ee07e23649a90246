use alloc::vec::Vec;

use num_bigint::BigInt;

use super::arrow::{ArrowCategory, ArrowObj};
use super::bifunctor::Bifunctor;
use super::category::{CompCategory, HomSpace, Raw};

/// `ϒ(f, f') = hom(A[1], B') / (f'_* hom(A[1], A') + f[1]^* hom(B[1], B'))`.
#[derive(Clone, Debug)]
pub struct TodaBifunctor<'a, C> {
    pub arrows: &'a ArrowCategory<C>,
}

impl<'a, C: CompCategory> TodaBifunctor<'a, C> {
    pub fn new(arrows: &'a ArrowCategory<C>) -> Self {
        TodaBifunctor { arrows }
    }

    fn shift(&self, x: &C::Obj) -> C::Obj {
        self.arrows.base.translate_obj(x).expect("Toda bifunctor needs a translation")
    }

    /// `φ_{f,f'}(g, h) = f' g − h f[1]`, as generators of the denominator.
    pub fn denominator(&self, f: &ArrowObj<C::Obj>, g: &ArrowObj<C::Obj>) -> Vec<Raw> {
        let c = &self.arrows.base;
        let a1 = self.shift(&f.src);
        let b1 = self.shift(&f.dst);
        let f1 = c.translate_mor(&f.src, &f.dst, &f.map).expect("translation");
        let mut gens: Vec<Raw> = c
            .hom(&a1, &g.src)
            .basis()
            .iter()
            .map(|x| c.compose(&a1, &g.src, &g.dst, &g.map, x))
            .collect();
        gens.extend(c.hom(&b1, &g.dst).basis().iter().map(|h| c.compose(&a1, &b1, &g.dst, h, &f1)));
        gens
    }
}

impl<C: CompCategory> Bifunctor for TodaBifunctor<'_, C> {
    type Obj = ArrowObj<C::Obj>;

    fn value(&self, f: &Self::Obj, g: &Self::Obj) -> HomSpace {
        let a1 = self.shift(&f.src);
        let h = self.arrows.base.hom(&a1, &g.dst);
        let mut lattice = h.lattice().to_vec();
        lattice.extend(self.denominator(f, g));
        HomSpace::new(h.dim(), lattice, h.spanning_set().to_vec())
    }

    fn post(&self, f: &Self::Obj, g: &Self::Obj, g2: &Self::Obj, m: &[BigInt], x: &[BigInt]) -> Raw {
        let (_, b) = self.arrows.split_pair(g, g2, m);
        let a1 = self.shift(&f.src);
        self.arrows.base.compose(&a1, &g.dst, &g2.dst, &b, x)
    }

    fn pre(&self, f2: &Self::Obj, f: &Self::Obj, g: &Self::Obj, m: &[BigInt], x: &[BigInt]) -> Raw {
        let c = &self.arrows.base;
        let (a, _) = self.arrows.split_pair(f2, f, m);
        let a_shift = c.translate_mor(&f2.src, &f.src, &a).expect("translation");
        let (s2, s) = (self.shift(&f2.src), self.shift(&f.src));
        c.compose(&s2, &s, &g.dst, x, &a_shift)
    }
}
