use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::category::{inverse, raw_scale, Biproduct, CompCategory, HomSpace, Preadditive, Raw};
use crate::abgrp::{in_span, GroupMor};

/// A two-sided ideal, given per ordered pair by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealData<O: Ord> {
    Zero,
    Full,
    /// `k · hom(A, B)`.
    Multiple(BigInt),
    /// Explicit generators; missing pairs are zero.
    Table(BTreeMap<(O, O), Vec<Raw>>),
}

impl<O: Ord + Clone> IdealData<O> {
    pub fn generators<C: Preadditive<Obj = O>>(&self, cat: &C, a: &O, b: &O) -> Vec<Raw> {
        match self {
            IdealData::Zero => Vec::new(),
            IdealData::Full => cat.hom(a, b).basis().to_vec(),
            IdealData::Multiple(k) => cat.hom(a, b).basis().iter().map(|f| raw_scale(k, f)).collect(),
            IdealData::Table(t) => t.get(&(a.clone(), b.clone())).cloned().unwrap_or_default(),
        }
    }

    /// The ideal's value as a subgroup of `hom(a, b)` (same raw coordinates).
    pub fn subgroup<C: Preadditive<Obj = O>>(&self, cat: &C, a: &O, b: &O) -> HomSpace {
        let h = cat.hom(a, b);
        HomSpace::new(h.dim(), h.lattice().to_vec(), self.generators(cat, a, b))
    }

    pub fn contains<C: Preadditive<Obj = O>>(&self, cat: &C, a: &O, b: &O, f: &[BigInt]) -> bool {
        self.subgroup(cat, a, b).contains(f)
    }
}

/// Closure under pre- and post-composition, checked on generators over the window.
pub fn is_ideal<C: Preadditive>(cat: &C, ideal: &IdealData<C::Obj>, window: &[C::Obj]) -> bool {
    for a in window {
        for b in window {
            for i in ideal.generators(cat, a, b) {
                for c in window {
                    let post = ideal.subgroup(cat, a, c);
                    if !cat.hom(b, c).basis().iter().all(|f| post.contains(&cat.compose(a, b, c, f, &i))) {
                        return false;
                    }
                    let pre = ideal.subgroup(cat, c, b);
                    if !cat.hom(c, a).basis().iter().all(|g| pre.contains(&cat.compose(c, a, b, &i, g))) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `IJ(A, C)` generated by `f ∘ g` with `g ∈ J(A, B)`, `f ∈ I(B, C)`, `B` in the window.
pub fn ideal_product<C: Preadditive>(
    cat: &C,
    i: &IdealData<C::Obj>,
    j: &IdealData<C::Obj>,
    window: &[C::Obj],
) -> IdealData<C::Obj> {
    let mut table = BTreeMap::new();
    for a in window {
        for c in window {
            let mut gens = Vec::new();
            for b in window {
                let js = j.generators(cat, a, b);
                let is = i.generators(cat, b, c);
                for f in &is {
                    for g in &js {
                        gens.push(cat.compose(a, b, c, f, g));
                    }
                }
            }
            let h = cat.hom(a, c);
            gens.retain(|g| !h.is_zero(g));
            if !gens.is_empty() {
                table.insert((a.clone(), c.clone()), gens);
            }
        }
    }
    IdealData::Table(table)
}

/// Whether every generator of the ideal vanishes in `hom`, pairwise over the window.
pub fn is_zero_ideal<C: Preadditive>(cat: &C, ideal: &IdealData<C::Obj>, window: &[C::Obj]) -> bool {
    window.iter().all(|a| {
        window.iter().all(|b| {
            let h = cat.hom(a, b);
            ideal.generators(cat, a, b).iter().all(|g| h.is_zero(g))
        })
    })
}

/// `hom_{C/I}(A, B) = hom_C(A, B) / I(A, B)`, same objects and raw coordinates.
#[derive(Clone, Debug)]
pub struct QuotientCategory<C: Preadditive> {
    pub base: C,
    pub ideal: IdealData<C::Obj>,
}

impl<C: Preadditive> QuotientCategory<C> {
    pub fn new(base: C, ideal: IdealData<C::Obj>) -> Self {
        QuotientCategory { base, ideal }
    }

    /// The quotient functor on one hom group, in normal-form coordinates.
    pub fn functor_on_hom(&self, a: &C::Obj, b: &C::Obj) -> GroupMor {
        let hb = self.base.hom(a, b);
        let hq = self.hom(a, b);
        let cols: Vec<Vec<BigInt>> = hb.basis().iter().map(|f| hq.coords(f).0).collect();
        GroupMor::from_columns(hb.group().clone(), hq.group().clone(), &cols)
    }

    /// `Ker(Q)(a, b)` equals `I(a, b)` as subgroups of `hom(a, b)`.
    pub fn kernel_recovers_ideal(&self, a: &C::Obj, b: &C::Obj) -> bool {
        let hb = self.base.hom(a, b);
        let ker = self.functor_on_hom(a, b).kernel();
        let kg: Vec<_> = (0..ker.group.ngens()).map(|i| ker.map.apply(&ker.group.generator(i))).collect();
        let ig: Vec<_> = self.ideal.generators(&self.base, a, b).iter().map(|g| hb.coords(g)).collect();
        kg.iter().all(|x| in_span(hb.group(), &ig, x)) && ig.iter().all(|x| in_span(hb.group(), &kg, x))
    }
}

impl<C: Preadditive> Preadditive for QuotientCategory<C> {
    type Obj = C::Obj;

    fn hom(&self, a: &C::Obj, b: &C::Obj) -> HomSpace {
        let h = self.base.hom(a, b);
        let mut lattice = h.lattice().to_vec();
        lattice.extend(self.ideal.generators(&self.base, a, b));
        HomSpace::new(h.dim(), lattice, h.spanning_set().to_vec())
    }

    fn compose(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        self.base.compose(a, b, c, g, f)
    }

    fn identity(&self, a: &C::Obj) -> Raw {
        self.base.identity(a)
    }

    fn describe_obj(&self, a: &C::Obj) -> alloc::string::String {
        self.base.describe_obj(a)
    }
}

impl<C: CompCategory> CompCategory for QuotientCategory<C> {
    fn zero_object(&self) -> C::Obj {
        self.base.zero_object()
    }

    fn direct_sum(&self, a: &C::Obj, b: &C::Obj) -> Biproduct<C::Obj> {
        self.base.direct_sum(a, b)
    }

    fn window(&self, rank_bound: usize) -> Vec<C::Obj> {
        self.base.window(rank_bound)
    }
}

/// Counterexample to "Q reflects isomorphisms" on the window, if any:
/// a morphism invertible in the quotient but not upstairs.
pub fn reflects_isomorphisms<C: Preadditive>(
    q: &QuotientCategory<C>,
    window: &[C::Obj],
) -> Result<(), (C::Obj, C::Obj, Raw)> {
    for a in window {
        for b in window {
            let Ok(els) = q.base.hom(a, b).elements() else { continue };
            for f in els {
                if inverse(q, a, b, &f).is_some() && inverse(&q.base, a, b, &f).is_none() {
                    return Err((a.clone(), b.clone(), f));
                }
            }
        }
    }
    Ok(())
}
