use alloc::vec::Vec;

use num_bigint::BigInt;

use super::arrow::{ArrowCategory, ArrowObj};
use super::category::{raw_add, raw_scale, raw_sub, Biproduct, CompCategory, HomSpace, Preadditive, Raw};
use super::ideal::QuotientCategory;
use super::CatError;

/// Object `(A, e)` of the Karoubi envelope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KaroubiObj<O> {
    pub obj: O,
    pub e: Raw,
}

/// `hom((A, e), (A', e')) = {f : fe = e'f = f}`; identity of `(A, e)` is `e`.
#[derive(Clone, Debug)]
pub struct KaroubiEnvelope<C> {
    pub base: C,
}

pub fn is_idempotent<C: Preadditive>(cat: &C, a: &C::Obj, e: &[BigInt]) -> bool {
    cat.hom(a, a).equal(&cat.compose(a, a, a, e, e), e)
}

impl<C: CompCategory> KaroubiEnvelope<C> {
    pub fn new(base: C) -> Self {
        KaroubiEnvelope { base }
    }

    pub fn object(&self, obj: C::Obj, e: &[BigInt]) -> Result<KaroubiObj<C::Obj>, CatError> {
        if !is_idempotent(&self.base, &obj, e) {
            return Err(CatError::NotIdempotent);
        }
        let e = self.base.hom(&obj, &obj).canonical(e);
        Ok(KaroubiObj { obj, e })
    }

    /// The embedding `A ↦ (A, id)`.
    pub fn embed(&self, a: &C::Obj) -> KaroubiObj<C::Obj> {
        let id = self.base.identity(a);
        KaroubiObj { obj: a.clone(), e: self.base.hom(a, a).canonical(&id) }
    }

    /// Idempotents of `hom(a, a)`, in enumeration order.
    pub fn idempotents(&self, a: &C::Obj) -> Vec<Raw> {
        let h = self.base.hom(a, a);
        h.elements()
            .map(|els| els.into_iter().filter(|e| is_idempotent(&self.base, a, e)).collect())
            .unwrap_or_default()
    }

    /// Splitting of an idempotent `p` of `(A, e)` through `(A, p)`:
    /// returns `(r, s)` with `r s = id_{(A,p)}` and `s r = p`.
    pub fn split(&self, x: &KaroubiObj<C::Obj>, p: &[BigInt]) -> Result<(KaroubiObj<C::Obj>, Raw, Raw), CatError> {
        if !self.hom(x, x).contains(p) || !is_idempotent(&self.base, &x.obj, p) {
            return Err(CatError::NotIdempotent);
        }
        let y = self.object(x.obj.clone(), p)?;
        Ok((y, p.to_vec(), p.to_vec()))
    }
}

impl<C: CompCategory> Preadditive for KaroubiEnvelope<C> {
    type Obj = KaroubiObj<C::Obj>;

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> HomSpace {
        let h = self.base.hom(&x.obj, &y.obj);
        let gens = h
            .basis()
            .iter()
            .map(|g| {
                let ge = self.base.compose(&x.obj, &x.obj, &y.obj, g, &x.e);
                self.base.compose(&x.obj, &y.obj, &y.obj, &y.e, &ge)
            })
            .collect();
        HomSpace::new(h.dim(), h.lattice().to_vec(), gens)
    }

    fn compose(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        self.base.compose(&x.obj, &y.obj, &z.obj, g, f)
    }

    fn identity(&self, x: &Self::Obj) -> Raw {
        x.e.clone()
    }

    fn describe_obj(&self, x: &Self::Obj) -> alloc::string::String {
        alloc::format!("({}, {:?})", self.base.describe_obj(&x.obj), x.e)
    }
}

impl<C: CompCategory> CompCategory for KaroubiEnvelope<C> {
    fn zero_object(&self) -> Self::Obj {
        self.embed(&self.base.zero_object())
    }

    fn direct_sum(&self, x: &Self::Obj, y: &Self::Obj) -> Biproduct<Self::Obj> {
        let c = &self.base;
        let bp = c.direct_sum(&x.obj, &y.obj);
        let s = &bp.sum;
        let e1 = c.compose(s, &x.obj, s, &c.compose(&x.obj, &x.obj, s, &bp.i1, &x.e), &bp.r1);
        let e2 = c.compose(s, &y.obj, s, &c.compose(&y.obj, &y.obj, s, &bp.i2, &y.e), &bp.r2);
        let e = c.hom(s, s).canonical(&raw_add(&e1, &e2));
        let sum = KaroubiObj { obj: s.clone(), e };
        Biproduct {
            i1: c.compose(&x.obj, &x.obj, s, &bp.i1, &x.e),
            i2: c.compose(&y.obj, &y.obj, s, &bp.i2, &y.e),
            r1: c.compose(s, &x.obj, &x.obj, &x.e, &bp.r1),
            r2: c.compose(s, &y.obj, &y.obj, &y.e, &bp.r2),
            sum,
        }
    }

    fn window(&self, rank_bound: usize) -> Vec<Self::Obj> {
        let mut out = Vec::new();
        for a in self.base.window(rank_bound) {
            for e in self.idempotents(&a) {
                out.push(KaroubiObj { obj: a.clone(), e });
            }
        }
        out
    }

    fn translate_obj(&self, x: &Self::Obj) -> Option<Self::Obj> {
        let a1 = self.base.translate_obj(&x.obj)?;
        let e1 = self.base.translate_mor(&x.obj, &x.obj, &x.e)?;
        Some(KaroubiObj { obj: a1, e: e1 })
    }

    fn translate_mor(&self, x: &Self::Obj, y: &Self::Obj, f: &[BigInt]) -> Option<Raw> {
        self.base.translate_mor(&x.obj, &y.obj, f)
    }
}

/// Lifts an idempotent along a quotient by an ideal with `I^n = 0`
/// via `e ↦ 3e² − 2e³`, iterated `⌈log₂ n⌉ + 1` times.
pub fn lift_idempotent<C: Preadditive>(
    q: &QuotientCategory<C>,
    a: &C::Obj,
    f: &[BigInt],
    nilpotency: u32,
) -> Result<Raw, CatError> {
    if !is_idempotent(q, a, f) {
        return Err(CatError::NotIdempotent);
    }
    let c = &q.base;
    let h = c.hom(a, a);
    let rounds = (u32::BITS - nilpotency.max(1).saturating_sub(1).leading_zeros()) + 1;
    let mut e = h.canonical(f);
    for _ in 0..rounds {
        let e2 = c.compose(a, a, a, &e, &e);
        let e3 = c.compose(a, a, a, &e, &e2);
        e = h.canonical(&raw_sub(&raw_scale(&BigInt::from(3), &e2), &raw_scale(&BigInt::from(2), &e3)));
    }
    if !is_idempotent(c, a, &e) || !q.hom(a, a).equal(&e, f) {
        return Err(CatError::LiftFailed);
    }
    Ok(e)
}

/// Splitting data for an idempotent `(a, b)` on an arrow `f: A → B`.
#[derive(Clone, Debug)]
pub struct ArrowSplitting<O> {
    /// `g = s f d: A₀ → B₀`.
    pub g: ArrowObj<O>,
    /// `(c, s): f → g`.
    pub retraction: Raw,
    /// `(d, t): g → f`.
    pub section: Raw,
}

/// Given `a = dc`, `cd = id` and `b = ts`, `st = id`, splits `(a, b)`
/// through `g = s f d`.
#[allow(clippy::too_many_arguments)]
pub fn split_arrow_idempotent<C: CompCategory>(
    arrows: &ArrowCategory<C>,
    f: &ArrowObj<C::Obj>,
    a0: &C::Obj,
    b0: &C::Obj,
    (c, d): (&[BigInt], &[BigInt]),
    (s, t): (&[BigInt], &[BigInt]),
    ab: &[BigInt],
) -> Result<ArrowSplitting<C::Obj>, CatError> {
    let base = &arrows.base;
    let (a, b) = arrows.split_pair(f, f, ab);
    let ok = arrows.hom(f, f).contains(ab)
        && base.hom(&f.src, &f.src).equal(&base.compose(&f.src, a0, &f.src, d, c), &a)
        && base.hom(a0, a0).equal(&base.compose(a0, &f.src, a0, c, d), &base.identity(a0))
        && base.hom(&f.dst, &f.dst).equal(&base.compose(&f.dst, b0, &f.dst, t, s), &b)
        && base.hom(b0, b0).equal(&base.compose(b0, &f.dst, b0, s, t), &base.identity(b0));
    if !ok {
        return Err(CatError::InvalidSplitting);
    }
    let fd = base.compose(a0, &f.src, &f.dst, &f.map, d);
    let gm = base.compose(a0, &f.dst, b0, s, &fd);
    let g = arrows.object(a0.clone(), b0.clone(), &gm);
    let retraction = arrows.pair(c, s);
    let section = arrows.pair(d, t);
    let valid = arrows.hom(f, &g).contains(&retraction)
        && arrows.hom(&g, f).contains(&section)
        && arrows.hom(&g, &g).equal(&arrows.compose(&g, f, &g, &retraction, &section), &arrows.identity(&g))
        && arrows.hom(f, f).equal(&arrows.compose(f, &g, f, &section, &retraction), ab);
    if !valid {
        return Err(CatError::InvalidSplitting);
    }
    Ok(ArrowSplitting { g, retraction, section })
}

/// `ρ(A, e, A', e', f) = [A, f, A', e, e']`.
pub fn rho_embed<C: CompCategory>(
    arrows: &ArrowCategory<C>,
    a: &KaroubiObj<C::Obj>,
    b: &KaroubiObj<C::Obj>,
    f: &[BigInt],
) -> Result<KaroubiObj<ArrowObj<C::Obj>>, CatError> {
    let base = &arrows.base;
    let h = base.hom(&a.obj, &b.obj);
    let fe = base.compose(&a.obj, &a.obj, &b.obj, f, &a.e);
    let ef = base.compose(&a.obj, &b.obj, &b.obj, &b.e, f);
    if !h.equal(&fe, f) || !h.equal(&ef, f) {
        return Err(CatError::MalformedQuintuple);
    }
    let obj = arrows.object(a.obj.clone(), b.obj.clone(), f);
    let e = arrows.pair(&a.e, &b.e);
    Ok(KaroubiObj { obj, e })
}

/// Compares `hom` in `(C^Ka)^[1]` with `hom` in `(C^[1])^Ka` between
/// `ρ`-images: both are pairs `(h, h')` in the same raw coordinates.
pub fn rho_hom_agrees<C: CompCategory + Clone>(
    base: &C,
    (a, b, f): (&KaroubiObj<C::Obj>, &KaroubiObj<C::Obj>, &[BigInt]),
    (a2, b2, f2): (&KaroubiObj<C::Obj>, &KaroubiObj<C::Obj>, &[BigInt]),
) -> Result<bool, CatError> {
    let ka = KaroubiEnvelope::new(base.clone());
    let ka_arrows = ArrowCategory::new(ka);
    let x = ka_arrows.object(a.clone(), b.clone(), f);
    let y = ka_arrows.object(a2.clone(), b2.clone(), f2);
    let left = ka_arrows.hom(&x, &y);
    let arrows = ArrowCategory::new(base.clone());
    let env = KaroubiEnvelope::new(arrows.clone());
    let rx = rho_embed(&arrows, a, b, f)?;
    let ry = rho_embed(&arrows, a2, b2, f2)?;
    let right = env.hom(&rx, &ry);
    let same = left.group() == right.group()
        && left.basis().iter().all(|m| right.contains(m))
        && right.basis().iter().all(|m| left.contains(m));
    Ok(same)
}
