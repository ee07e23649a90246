use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;

use super::ObstructError;
use crate::abgrp::GroupMor;
use crate::catops::{
    Bifunctor, CompCategory, FreeModules, HomSpace, KaroubiEnvelope, KaroubiObj, Preadditive, Raw, SemidirectProduct,
};
use crate::muro::{base_arrows, Arrow, Triangles0};

/// A full, identity-on-objects functor `p: total → base`.
pub trait Extension {
    type Obj: Clone + Ord + Debug;
    type Total: Preadditive<Obj = Self::Obj>;
    type Base: Preadditive<Obj = Self::Obj>;

    fn total(&self) -> &Self::Total;
    fn base(&self) -> &Self::Base;
    fn project(&self, a: &Self::Obj, b: &Self::Obj, m: &[BigInt]) -> Raw;

    /// `p` on `hom(a, b)` in normal-form coordinates.
    fn projection_mor(&self, a: &Self::Obj, b: &Self::Obj) -> GroupMor {
        let (ht, hb) = (self.total().hom(a, b), self.base().hom(a, b));
        let cols: Vec<Vec<BigInt>> = ht.basis().iter().map(|m| hb.coords(&self.project(a, b, m)).0).collect();
        GroupMor::from_columns(ht.group().clone(), hb.group().clone(), &cols)
    }

    /// Some preimage of a base morphism.
    fn lift(&self, a: &Self::Obj, b: &Self::Obj, m: &[BigInt]) -> Option<Raw> {
        let pm = self.projection_mor(a, b);
        let x = pm.preimage(&self.base().hom(a, b).coords(m))?;
        Some(self.total().hom(a, b).element(&x))
    }

    /// Generators of `Ker(p)(a, b)` in total raw coordinates.
    fn kernel_gens(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Raw> {
        let ker = self.projection_mor(a, b).kernel();
        let ht = self.total().hom(a, b);
        (0..ker.group.ngens()).map(|i| ht.element(&ker.map.apply(&ker.group.generator(i)))).collect()
    }
}

/// An extension given by a total category, a base and a projection function.
#[derive(Clone, Debug)]
pub struct FnExtension<T: Preadditive, B> {
    pub total: T,
    pub base: B,
    pub proj: fn(&T, &T::Obj, &T::Obj, &[BigInt]) -> Raw,
}

impl<T: Preadditive, B: Preadditive<Obj = T::Obj>> Extension for FnExtension<T, B>
where
    T::Obj: Ord + Debug,
{
    type Obj = T::Obj;
    type Total = T;
    type Base = B;

    fn total(&self) -> &T {
        &self.total
    }

    fn base(&self) -> &B {
        &self.base
    }

    fn project(&self, a: &T::Obj, b: &T::Obj, m: &[BigInt]) -> Raw {
        (self.proj)(&self.total, a, b, m)
    }
}

impl<E: Extension> Extension for &E {
    type Obj = E::Obj;
    type Total = E::Total;
    type Base = E::Base;

    fn total(&self) -> &E::Total {
        (**self).total()
    }

    fn base(&self) -> &E::Base {
        (**self).base()
    }

    fn project(&self, a: &E::Obj, b: &E::Obj, m: &[BigInt]) -> Raw {
        (**self).project(a, b, m)
    }
}

pub type TrianglesExtension = FnExtension<Triangles0, crate::catops::ArrowCategory<FreeModules>>;

/// `0 → Θ → Triangles₀ → F(Z/4)^[1] → 0`.
pub fn triangles_extension() -> TrianglesExtension {
    FnExtension { total: Triangles0, base: base_arrows(), proj: |t, a, b, m| t.pi(a, b, m) }
}

/// The split extension `B ⋉ D → B`.
pub fn semidirect_extension<C, D>(base: C, d: D) -> FnExtension<SemidirectProduct<C, D>, C>
where
    C: Preadditive + Clone,
    D: Bifunctor<Obj = C::Obj>,
    C::Obj: Ord + Debug,
{
    FnExtension { total: SemidirectProduct::new(base.clone(), d), base, proj: |s, a, b, m| s.project(a, b, m) }
}

/// Reduction `F(Z/n) → F(Z/m)` for `m | n`.
pub fn reduction_extension(n: u64, m: u64) -> FnExtension<FreeModules, FreeModules> {
    FnExtension { total: FreeModules::new(n), base: FreeModules::new(m), proj: |_, _, _, x| x.to_vec() }
}

/// A validated extension over a window of objects.
#[derive(Clone, Debug)]
pub struct ExtensionData<E: Extension> {
    pub ext: E,
    pub window: Vec<E::Obj>,
    /// `Ker(p)(a, b)` for window indices, as subspaces of the total homs.
    pub kernels: BTreeMap<(usize, usize), HomSpace>,
    /// `p` commutes with the translations, when both sides have one.
    pub tau_compatible: Option<bool>,
}

impl<E: Extension> ExtensionData<E> {
    pub fn kernel(&self, i: usize, j: usize) -> &HomSpace {
        &self.kernels[&(i, j)]
    }

    pub fn kernel_order(&self, i: usize, j: usize) -> Option<u64> {
        self.kernel(i, j).group().order_u64()
    }
}

/// Checks surjectivity and that `Ker(p)` is square zero over the window.
pub fn make_extension<E: Extension>(ext: E, window: Vec<E::Obj>) -> Result<ExtensionData<E>, ObstructError> {
    let n = window.len();
    let mut kernels = BTreeMap::new();
    let mut gens = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&window[i], &window[j]);
            if !ext.projection_mor(a, b).is_surjective() {
                return Err(ObstructError::ProjectionNotSurjective);
            }
            let ht = ext.total().hom(a, b);
            let k = ext.kernel_gens(a, b);
            kernels.insert((i, j), HomSpace::new(ht.dim(), ht.lattice().to_vec(), k.clone()));
            gens.insert((i, j), k);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let hom = ext.total().hom(&window[i], &window[l]);
                for g in &gens[&(j, l)] {
                    for f in &gens[&(i, j)] {
                        let gf = ext.total().compose(&window[i], &window[j], &window[l], g, f);
                        if !hom.is_zero(&gf) {
                            return Err(ObstructError::KernelNotSquareZero);
                        }
                    }
                }
            }
        }
    }
    Ok(ExtensionData { ext, window, kernels, tau_compatible: None })
}

/// `p ∘ τ = τ ∘ p` on all basis morphisms of the window.
pub fn check_tau<E>(data: &mut ExtensionData<E>) -> bool
where
    E: Extension,
    E::Total: CompCategory,
    E::Base: CompCategory,
{
    let (t, b) = (data.ext.total(), data.ext.base());
    let mut ok = true;
    'outer: for x in &data.window {
        for y in &data.window {
            let (Some(tx), Some(ty)) = (t.translate_obj(x), t.translate_obj(y)) else {
                ok = false;
                break 'outer;
            };
            if b.translate_obj(x).as_ref() != Some(&tx) {
                ok = false;
                break 'outer;
            }
            for m in t.hom(x, y).basis() {
                let (Some(tm), Some(pm)) = (t.translate_mor(x, y, m), b.translate_mor(x, y, &data.ext.project(x, y, m)))
                else {
                    ok = false;
                    break 'outer;
                };
                if !b.hom(&tx, &ty).equal(&data.ext.project(&tx, &ty, &tm), &pm) {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    data.tau_compatible = Some(ok);
    ok
}

/// `Ker(p)` for the Muro extension equals `Θ` pairwise, through `(0, 0, c) ↔ c`.
pub fn kernel_is_theta(objs: &[Arrow]) -> bool {
    let ext = triangles_extension();
    objs.iter().all(|f| {
        objs.iter().all(|g| {
            let ker: Vec<Raw> = ext.kernel_gens(f, g);
            let th = Triangles0.theta_space(f, g);
            let n = ker.first().map_or(0, |k| k.len() - th.dim());
            let from_ker = HomSpace::cyclic_subspace(4, th.dim(), ker.iter().map(|k| k[n..].to_vec()).collect());
            ker.iter().all(|k| k[..n].iter().all(|x| x % 4 == BigInt::from(0)))
                && from_ker.group() == th.group()
                && th.basis().iter().all(|c| from_ker.contains(c))
        })
    })
}

/// The base of the Karoubi-completed extension: `(A, e)` carries the
/// projected idempotent `p(e)`.
#[derive(Clone, Debug)]
pub struct ProjectedKaroubi<E> {
    pub ext: E,
}

impl<E: Extension> ProjectedKaroubi<E> {
    fn idem(&self, x: &KaroubiObj<E::Obj>) -> Raw {
        self.ext.project(&x.obj, &x.obj, &x.e)
    }
}

impl<E: Extension> Preadditive for ProjectedKaroubi<E> {
    type Obj = KaroubiObj<E::Obj>;

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> HomSpace {
        let b = self.ext.base();
        let (ex, ey) = (self.idem(x), self.idem(y));
        let h = b.hom(&x.obj, &y.obj);
        let gens = h
            .basis()
            .iter()
            .map(|g| b.compose(&x.obj, &y.obj, &y.obj, &ey, &b.compose(&x.obj, &x.obj, &y.obj, g, &ex)))
            .collect();
        HomSpace::new(h.dim(), h.lattice().to_vec(), gens)
    }

    fn compose(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        self.ext.base().compose(&x.obj, &y.obj, &z.obj, g, f)
    }

    fn identity(&self, x: &Self::Obj) -> Raw {
        self.idem(x)
    }

    fn describe_obj(&self, x: &Self::Obj) -> alloc::string::String {
        alloc::format!("({}, {:?})", self.ext.base().describe_obj(&x.obj), self.idem(x))
    }
}

/// `p^Ka: T^Ka → B^Ka` for an extension `p: T → B`.
pub struct KaroubiExtension<E: Extension> {
    pub total: KaroubiEnvelope<E::Total>,
    pub base: ProjectedKaroubi<E>,
}

impl<E: Extension> KaroubiExtension<E>
where
    E::Total: CompCategory + Clone,
{
    pub fn new(ext: E) -> Self {
        KaroubiExtension { total: KaroubiEnvelope::new(ext.total().clone()), base: ProjectedKaroubi { ext } }
    }

    /// `(A, e)` for every idempotent `e` of every `A` in `objs`.
    pub fn window(&self, objs: &[E::Obj]) -> Vec<KaroubiObj<E::Obj>> {
        objs.iter()
            .flat_map(|a| self.total.idempotents(a).into_iter().map(move |e| KaroubiObj { obj: a.clone(), e }))
            .collect()
    }
}

impl<E: Extension> Extension for KaroubiExtension<E>
where
    E::Total: CompCategory,
{
    type Obj = KaroubiObj<E::Obj>;
    type Total = KaroubiEnvelope<E::Total>;
    type Base = ProjectedKaroubi<E>;

    fn total(&self) -> &Self::Total {
        &self.total
    }

    fn base(&self) -> &Self::Base {
        &self.base
    }

    fn project(&self, a: &Self::Obj, b: &Self::Obj, m: &[BigInt]) -> Raw {
        self.base.ext.project(&a.obj, &b.obj, m)
    }
}
