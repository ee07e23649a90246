use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::extension::Extension;
use super::ObstructError;
use crate::catops::{raw_add, raw_neg, Bifunctor, HomSpace, Preadditive, Raw, TodaBifunctor};
use crate::muro::{base_arrows, generating_objects, mat, Arrow, Triangles0, Z4Mat};
use crate::prescat::{FunctorData, QuiverPresentation, SectionOutcome, SectionProblem};

fn pad(v: &[BigInt], before: usize, after: usize) -> Raw {
    let mut out = vec![BigInt::zero(); before];
    out.extend_from_slice(v);
    out.extend(core::iter::repeat_n(BigInt::zero(), after));
    out
}

/// `Ptr₁`: `hom₁(a, b)` is the pushout of `D₁(a, b) ← Ker(p)(a, b) → hom(a, b)`
/// along `xi`; raw coordinates are `d ++ m`.
pub struct PushforwardCategory<E, D1, X> {
    pub ext: E,
    pub d1: D1,
    pub xi: X,
}

impl<E, D1, X> PushforwardCategory<E, D1, X>
where
    E: Extension,
    D1: Bifunctor<Obj = E::Obj>,
    X: Fn(&E::Obj, &E::Obj, &[BigInt]) -> Raw,
{
    pub fn new(ext: E, d1: D1, xi: X) -> Self {
        PushforwardCategory { ext, d1, xi }
    }

    pub fn split(&self, a: &E::Obj, b: &E::Obj, m: &[BigInt]) -> (Raw, Raw) {
        let n = self.d1.value(a, b).dim();
        (m[..n].to_vec(), m[n..].to_vec())
    }

    /// The comparison `j: Ptr → Ptr₁`, `m ↦ (0, m)`.
    pub fn comparison(&self, a: &E::Obj, b: &E::Obj, m: &[BigInt]) -> Raw {
        pad(m, self.d1.value(a, b).dim(), 0)
    }

    /// The kernel inclusion `D₁ → Ptr₁`, `d ↦ (d, 0)`.
    pub fn include(&self, a: &E::Obj, b: &E::Obj, d: &[BigInt]) -> Raw {
        pad(d, 0, self.ext.total().hom(a, b).dim())
    }

    /// Naturality of `xi` on kernel generators against basis morphisms of `objs`.
    pub fn xi_is_natural(&self, objs: &[E::Obj]) -> bool {
        let (t, p) = (self.ext.total(), &self.ext);
        for a in objs {
            for b in objs {
                let ks = p.kernel_gens(a, b);
                for c in objs {
                    let hac = self.d1.value(a, c);
                    for g in t.hom(b, c).basis() {
                        let pg = p.project(b, c, g);
                        for k in &ks {
                            let lhs = (self.xi)(a, c, &t.compose(a, b, c, g, k));
                            let rhs = self.d1.post(a, b, c, &pg, &(self.xi)(a, b, k));
                            if !hac.equal(&lhs, &rhs) {
                                return false;
                            }
                        }
                    }
                    let hcb = self.d1.value(c, b);
                    for f in t.hom(c, a).basis() {
                        let pf = p.project(c, a, f);
                        for k in &ks {
                            let lhs = (self.xi)(c, b, &t.compose(c, a, b, k, f));
                            let rhs = self.d1.pre(c, a, b, &pf, &(self.xi)(a, b, k));
                            if !hcb.equal(&lhs, &rhs) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether `xi` is an isomorphism on the given pairs (a domination needs
    /// this whenever one argument is split).
    pub fn xi_is_iso_on(&self, pairs: &[(E::Obj, E::Obj)]) -> bool {
        pairs.iter().all(|(a, b)| {
            let ks = self.ext.kernel_gens(a, b);
            let ht = self.ext.total().hom(a, b);
            let ker = HomSpace::new(ht.dim(), ht.lattice().to_vec(), ks.clone());
            let d = self.d1.value(a, b);
            let cols: Vec<Vec<BigInt>> = ker.basis().iter().map(|k| d.coords(&(self.xi)(a, b, k)).0).collect();
            crate::abgrp::GroupMor::from_columns(ker.group().clone(), d.group().clone(), &cols).is_isomorphism()
        })
    }
}

impl<E, D1, X> Preadditive for PushforwardCategory<E, D1, X>
where
    E: Extension,
    D1: Bifunctor<Obj = E::Obj>,
    X: Fn(&E::Obj, &E::Obj, &[BigInt]) -> Raw,
{
    type Obj = E::Obj;

    fn hom(&self, a: &E::Obj, b: &E::Obj) -> HomSpace {
        let hd = self.d1.value(a, b);
        let ht = self.ext.total().hom(a, b);
        let (nd, nt) = (hd.dim(), ht.dim());
        let mut lattice: Vec<Raw> = hd.lattice().iter().map(|v| pad(v, 0, nt)).collect();
        lattice.extend(ht.lattice().iter().map(|v| pad(v, nd, 0)));
        for k in self.ext.kernel_gens(a, b) {
            let mut v = (self.xi)(a, b, &k);
            v.extend(raw_neg(&k));
            lattice.push(v);
        }
        let mut gens: Vec<Raw> = hd.spanning_set().iter().map(|v| pad(v, 0, nt)).collect();
        gens.extend(ht.spanning_set().iter().map(|v| pad(v, nd, 0)));
        HomSpace::new(nd + nt, lattice, gens)
    }

    fn compose(&self, a: &E::Obj, b: &E::Obj, c: &E::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        let (x, m) = self.split(a, b, f);
        let (y, n) = self.split(b, c, g);
        let (pm, pn) = (self.ext.project(a, b, &m), self.ext.project(b, c, &n));
        let d = raw_add(&self.d1.post(a, b, c, &pn, &x), &self.d1.pre(a, b, c, &pm, &y));
        let mut out = d;
        out.extend(self.ext.total().compose(a, b, c, &n, &m));
        out
    }

    fn identity(&self, a: &E::Obj) -> Raw {
        self.comparison(a, a, &self.ext.total().identity(a))
    }

    fn describe_obj(&self, a: &E::Obj) -> String {
        self.ext.total().describe_obj(a)
    }
}

impl<E, D1, X> Extension for PushforwardCategory<E, D1, X>
where
    E: Extension,
    D1: Bifunctor<Obj = E::Obj>,
    X: Fn(&E::Obj, &E::Obj, &[BigInt]) -> Raw,
{
    type Obj = E::Obj;
    type Total = Self;
    type Base = E::Base;

    fn total(&self) -> &Self {
        self
    }

    fn base(&self) -> &E::Base {
        self.ext.base()
    }

    fn project(&self, a: &E::Obj, b: &E::Obj, m: &[BigInt]) -> Raw {
        let (_, t) = self.split(a, b, m);
        self.ext.project(a, b, &t)
    }
}

/// `pushforward(E, xi)`.
pub fn pushforward<E, D1, X>(ext: E, d1: D1, xi: X) -> PushforwardCategory<E, D1, X>
where
    E: Extension,
    D1: Bifunctor<Obj = E::Obj>,
    X: Fn(&E::Obj, &E::Obj, &[BigInt]) -> Raw,
{
    PushforwardCategory::new(ext, d1, xi)
}

/// A natural transformation into `Ker(p)`, by its image generators
/// (total raw coordinates).
pub trait KernelTransformation<O> {
    fn image_gens(&self, a: &O, b: &O) -> Vec<Raw>;
}

/// `θ: ϒ → Θ` for the Muro extension.
#[derive(Clone, Copy, Debug, Default)]
pub struct MuroTheta;

impl KernelTransformation<Arrow> for MuroTheta {
    fn image_gens(&self, f: &Arrow, g: &Arrow) -> Vec<Raw> {
        let arrows = base_arrows();
        let toda = TodaBifunctor::new(&arrows);
        let t = Triangles0;
        toda.value(f, g)
            .spanning_set()
            .iter()
            .map(|x| t.kernel_element(f, g, &t.theta_map(f, g, &Z4Mat::from_raw(g.dst, f.src, x))))
            .collect()
    }
}

/// The identity-like control: all of `Ker(p)`.
pub struct FullKernel<'a, E>(pub &'a E);

impl<E: Extension> KernelTransformation<E::Obj> for FullKernel<'_, E> {
    fn image_gens(&self, a: &E::Obj, b: &E::Obj) -> Vec<Raw> {
        self.0.kernel_gens(a, b)
    }
}

/// `Coker(θ)` as a bifunctor, values in total raw coordinates; the
/// quotient map from `Ker(p)` is the identity on coordinates.
pub struct CokernelBifunctor<'a, E, T> {
    pub ext: &'a E,
    pub theta: &'a T,
}

impl<E: Extension, T: KernelTransformation<E::Obj>> Bifunctor for CokernelBifunctor<'_, E, T> {
    type Obj = E::Obj;

    fn value(&self, a: &E::Obj, b: &E::Obj) -> HomSpace {
        let ht = self.ext.total().hom(a, b);
        let mut lattice = ht.lattice().to_vec();
        lattice.extend(self.theta.image_gens(a, b));
        HomSpace::new(ht.dim(), lattice, self.ext.kernel_gens(a, b))
    }

    fn post(&self, a: &E::Obj, b: &E::Obj, b2: &E::Obj, g: &[BigInt], x: &[BigInt]) -> Raw {
        let lg = self.ext.lift(b, b2, g).expect("projection is full");
        self.ext.total().compose(a, b, b2, &lg, x)
    }

    fn pre(&self, a2: &E::Obj, a: &E::Obj, b: &E::Obj, f: &[BigInt], x: &[BigInt]) -> Raw {
        let lf = self.ext.lift(a2, a, f).expect("projection is full");
        self.ext.total().compose(a2, a, b, x, &lf)
    }
}

/// The literal `Θ₁`: zero except `Θ₁(t, t) = Z/2`, where `(a, b)` acts by
/// multiplication with `a`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Theta1Literal;

fn is_t(f: &Arrow) -> bool {
    f.src == 1 && f.dst == 1 && mat(f) == Z4Mat::scalar(1, 2)
}

impl Bifunctor for Theta1Literal {
    type Obj = Arrow;

    fn value(&self, f: &Arrow, g: &Arrow) -> HomSpace {
        if is_t(f) && is_t(g) {
            HomSpace::cyclic_subspace(2, 1, vec![vec![BigInt::from(1)]])
        } else {
            HomSpace::cyclic_power(2, 0)
        }
    }

    fn post(&self, f: &Arrow, g: &Arrow, g2: &Arrow, m: &[BigInt], x: &[BigInt]) -> Raw {
        if !(is_t(f) && is_t(g) && is_t(g2)) {
            return self.value(f, g2).zero();
        }
        vec![&m[0] * &x[0]]
    }

    fn pre(&self, f2: &Arrow, f: &Arrow, g: &Arrow, m: &[BigInt], x: &[BigInt]) -> Raw {
        if !(is_t(f2) && is_t(f) && is_t(g)) {
            return self.value(f2, g).zero();
        }
        vec![&m[0] * &x[0]]
    }
}

/// `Θ → Θ₁`: `(0, 0, c) ↦ c / 2` on `(t, t)`, zero elsewhere.
pub fn theta1_quotient(f: &Arrow, g: &Arrow, k: &[BigInt]) -> Raw {
    if is_t(f) && is_t(g) {
        let c = crate::catops::raw_mod(4, &k[k.len() - 1..]);
        vec![&c[0] / BigInt::from(2)]
    } else {
        Theta1Literal.value(f, g).zero()
    }
}

/// Outcome of the one-sided pushforward test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// `q_*(E)` has no section, so `E` is not a pushforward along `θ`.
    NotPushforward { certificate: SectionOutcome },
    /// `q_*(E)` splits; the test is necessary only.
    InconclusiveNecessaryConditionPassed { section: SectionOutcome },
}

impl Verdict {
    pub fn is_not_pushforward(&self) -> bool {
        matches!(self, Verdict::NotPushforward { .. })
    }

    pub fn outcome(&self) -> &SectionOutcome {
        match self {
            Verdict::NotPushforward { certificate } => certificate,
            Verdict::InconclusiveNecessaryConditionPassed { section } => section,
        }
    }
}

/// Forms `q_*(E)` for `q: Ker(p) → Coker(θ)` and searches for a section of
/// its projection over the base generated by `functor` from `presentation`.
pub fn is_pushforward_along<E, T>(
    ext: &E,
    theta: &T,
    presentation: &QuiverPresentation,
    functor: &FunctorData<E::Obj>,
    cap: u64,
) -> Result<Verdict, ObstructError>
where
    E: Extension,
    T: KernelTransformation<E::Obj>,
{
    let d1 = CokernelBifunctor { ext, theta };
    let pushed = pushforward(ext, d1, |_: &E::Obj, _: &E::Obj, k: &[BigInt]| k.to_vec());
    let proj = |a: &E::Obj, b: &E::Obj, m: &[BigInt]| pushed.project(a, b, m);
    let problem = SectionProblem {
        presentation,
        base: ext.base(),
        base_objects: functor.object_map.clone(),
        base_arrows: functor.arrow_map.clone(),
        total: &pushed,
        total_objects: functor.object_map.clone(),
        proj: &proj,
    };
    let outcome = problem.solve(cap)?;
    Ok(if outcome.has_section() {
        Verdict::InconclusiveNecessaryConditionPassed { section: outcome }
    } else {
        Verdict::NotPushforward { certificate: outcome }
    })
}

/// Hom-group orders of a category on the generating objects `d, c, i, t`.
pub fn hom_orders<C: Preadditive<Obj = Arrow>>(cat: &C) -> Vec<Vec<Option<u64>>> {
    let objs = generating_objects();
    objs.iter().map(|a| objs.iter().map(|b| cat.hom(a, b).group().order_u64()).collect()).collect()
}
