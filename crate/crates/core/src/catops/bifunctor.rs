use alloc::vec::Vec;

use num_bigint::BigInt;

use super::category::{raw_add, Biproduct, CompCategory, HomSpace, Preadditive, Raw};

/// `D: C^op × C → Ab`, values realised as hom-style spaces.
pub trait Bifunctor {
    type Obj: Clone + Eq + Ord + core::fmt::Debug;

    fn value(&self, a: &Self::Obj, b: &Self::Obj) -> HomSpace;

    /// `g_*(x)` for `x ∈ D(a, b)`, `g: b → b2`.
    fn post(&self, a: &Self::Obj, b: &Self::Obj, b2: &Self::Obj, g: &[BigInt], x: &[BigInt]) -> Raw;

    /// `f^*(x)` for `x ∈ D(a, b)`, `f: a2 → a`.
    fn pre(&self, a2: &Self::Obj, a: &Self::Obj, b: &Self::Obj, f: &[BigInt], x: &[BigInt]) -> Raw;
}

impl<T: Bifunctor + ?Sized> Bifunctor for &T {
    type Obj = T::Obj;

    fn value(&self, a: &Self::Obj, b: &Self::Obj) -> HomSpace {
        (**self).value(a, b)
    }

    fn post(&self, a: &Self::Obj, b: &Self::Obj, b2: &Self::Obj, g: &[BigInt], x: &[BigInt]) -> Raw {
        (**self).post(a, b, b2, g, x)
    }

    fn pre(&self, a2: &Self::Obj, a: &Self::Obj, b: &Self::Obj, f: &[BigInt], x: &[BigInt]) -> Raw {
        (**self).pre(a2, a, b, f, x)
    }
}

/// The hom bifunctor of a category.
#[derive(Clone, Debug)]
pub struct HomBifunctor<C>(pub C);

impl<C: Preadditive> Bifunctor for HomBifunctor<C> {
    type Obj = C::Obj;

    fn value(&self, a: &C::Obj, b: &C::Obj) -> HomSpace {
        self.0.hom(a, b)
    }

    fn post(&self, a: &C::Obj, b: &C::Obj, b2: &C::Obj, g: &[BigInt], x: &[BigInt]) -> Raw {
        self.0.compose(a, b, b2, g, x)
    }

    fn pre(&self, a2: &C::Obj, a: &C::Obj, b: &C::Obj, f: &[BigInt], x: &[BigInt]) -> Raw {
        self.0.compose(a2, a, b, x, f)
    }
}

/// Functoriality of both actions, checked on basis elements over the window.
pub fn check_bifunctor<C: Preadditive, D: Bifunctor<Obj = C::Obj>>(cat: &C, d: &D, window: &[C::Obj]) -> bool {
    for a in window {
        let ida = cat.identity(a);
        for b in window {
            let v = d.value(a, b);
            let idb = cat.identity(b);
            for x in v.basis() {
                if !v.equal(&d.post(a, b, b, &idb, x), x) || !v.equal(&d.pre(a, a, b, &ida, x), x) {
                    return false;
                }
            }
            for c in window {
                for e in window {
                    // post: b → c → e
                    let vae = d.value(a, e);
                    for g in cat.hom(b, c).basis() {
                        for h in cat.hom(c, e).basis() {
                            let hg = cat.compose(b, c, e, h, g);
                            for x in v.basis() {
                                let two = d.post(a, c, e, h, &d.post(a, b, c, g, x));
                                if !vae.equal(&d.post(a, b, e, &hg, x), &two) {
                                    return false;
                                }
                            }
                        }
                    }
                    // pre: e → c → a
                    let veb = d.value(e, b);
                    for f in cat.hom(c, a).basis() {
                        for f0 in cat.hom(e, c).basis() {
                            let ff = cat.compose(e, c, a, f, f0);
                            for x in v.basis() {
                                let two = d.pre(e, c, b, f0, &d.pre(c, a, b, f, x));
                                if !veb.equal(&d.pre(e, a, b, &ff, x), &two) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// `B ⋉ D`: morphisms `(f, x)`, composition `(f, a)(g, b) = (fg, f_*(b) + g^*(a))`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct<C, D> {
    pub base: C,
    pub bifunctor: D,
}

impl<C: Preadditive, D: Bifunctor<Obj = C::Obj>> SemidirectProduct<C, D> {
    pub fn new(base: C, bifunctor: D) -> Self {
        SemidirectProduct { base, bifunctor }
    }

    pub fn split(&self, a: &C::Obj, b: &C::Obj, m: &[BigInt]) -> (Raw, Raw) {
        let d = self.base.hom(a, b).dim();
        (m[..d].to_vec(), m[d..].to_vec())
    }

    pub fn join(&self, f: &[BigInt], x: &[BigInt]) -> Raw {
        let mut v = f.to_vec();
        v.extend_from_slice(x);
        v
    }

    /// `(f, x) ↦ f`.
    pub fn project(&self, a: &C::Obj, b: &C::Obj, m: &[BigInt]) -> Raw {
        self.split(a, b, m).0
    }

    /// `f ↦ (f, 0)`.
    pub fn section(&self, a: &C::Obj, b: &C::Obj, f: &[BigInt]) -> Raw {
        self.join(f, &self.bifunctor.value(a, b).zero())
    }

    /// `x ↦ (0, x)`.
    pub fn kernel_inclusion(&self, a: &C::Obj, b: &C::Obj, x: &[BigInt]) -> Raw {
        self.join(&self.base.hom(a, b).zero(), x)
    }
}

impl<C: Preadditive, D: Bifunctor<Obj = C::Obj>> Preadditive for SemidirectProduct<C, D> {
    type Obj = C::Obj;

    fn hom(&self, a: &C::Obj, b: &C::Obj) -> HomSpace {
        HomSpace::direct_sum(&[&self.base.hom(a, b), &self.bifunctor.value(a, b)])
    }

    fn compose(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        let (g0, gx) = self.split(b, c, g);
        let (f0, fx) = self.split(a, b, f);
        let m = self.base.compose(a, b, c, &g0, &f0);
        let x = raw_add(&self.bifunctor.post(a, b, c, &g0, &fx), &self.bifunctor.pre(a, b, c, &f0, &gx));
        self.join(&m, &x)
    }

    fn identity(&self, a: &C::Obj) -> Raw {
        self.section(a, a, &self.base.identity(a))
    }

    fn describe_obj(&self, a: &C::Obj) -> alloc::string::String {
        self.base.describe_obj(a)
    }
}

impl<C: CompCategory, D: Bifunctor<Obj = C::Obj>> CompCategory for SemidirectProduct<C, D> {
    fn zero_object(&self) -> C::Obj {
        self.base.zero_object()
    }

    fn direct_sum(&self, a: &C::Obj, b: &C::Obj) -> Biproduct<C::Obj> {
        let bp = self.base.direct_sum(a, b);
        let s = bp.sum.clone();
        Biproduct {
            i1: self.section(a, &s, &bp.i1),
            i2: self.section(b, &s, &bp.i2),
            r1: self.section(&s, a, &bp.r1),
            r2: self.section(&s, b, &bp.r2),
            sum: s,
        }
    }

    fn window(&self, rank_bound: usize) -> Vec<C::Obj> {
        self.base.window(rank_bound)
    }
}
