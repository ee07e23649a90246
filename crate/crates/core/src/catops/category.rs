use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::abgrp::{
    group_from_presentation, integer_kernel, smith_normal_form, AlgebraError, FinAbGroup,
    GroupElement, IntMatrix, Presented, Snf,
};

/// Raw coordinates of a morphism inside its ambient lattice.
pub type Raw = Vec<BigInt>;

pub fn raw_add(a: &[BigInt], b: &[BigInt]) -> Raw {
    assert_eq!(a.len(), b.len(), "raw length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn raw_sub(a: &[BigInt], b: &[BigInt]) -> Raw {
    assert_eq!(a.len(), b.len(), "raw length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn raw_neg(a: &[BigInt]) -> Raw {
    a.iter().map(|x| -x).collect()
}

pub fn raw_scale(k: &BigInt, a: &[BigInt]) -> Raw {
    a.iter().map(|x| k * x).collect()
}

pub fn raw_from_i64(v: &[i64]) -> Raw {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A hom group realised as the subgroup generated by `gens` inside
/// `Z^dim / lattice`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    dim: usize,
    lattice: Vec<Raw>,
    gens: Vec<Raw>,
    presented: Presented,
    solver: Snf,
    basis: Vec<Raw>,
}

impl HomSpace {
    pub fn new(dim: usize, lattice: Vec<Raw>, gens: Vec<Raw>) -> Self {
        assert!(lattice.iter().chain(&gens).all(|v| v.len() == dim), "raw length mismatch");
        let k = gens.len();
        let mut cols = gens.clone();
        cols.extend(lattice.iter().cloned());
        let stacked = IntMatrix::from_columns(dim, &cols);
        let ker = integer_kernel(&stacked);
        let rel_rows: Vec<Raw> = (0..ker.cols()).map(|j| ker.column(j)[..k].to_vec()).collect();
        let rel = IntMatrix::from_columns(k, &rel_rows).transpose();
        let presented = group_from_presentation(&rel);
        let solver = smith_normal_form(&stacked);
        let mut hs = HomSpace { dim, lattice, gens, presented, solver, basis: Vec::new() };
        hs.basis = (0..hs.group().ngens())
            .map(|i| hs.combine(&hs.presented.from_group.column(i)))
            .collect();
        hs
    }

    /// Raw coordinates are the coordinates of the group itself.
    pub fn standard(group: &FinAbGroup) -> Self {
        let n = group.ngens();
        let lattice = (0..group.torsion().len())
            .map(|i| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = group.modulus(i);
                v
            })
            .collect();
        let gens = (0..n).map(|i| group.generator(i).0).collect();
        HomSpace::new(n, lattice, gens)
    }

    /// `(Z/n)^dim` with the unit vectors as generators.
    pub fn cyclic_power(n: u64, dim: usize) -> Self {
        let lattice = (0..dim).map(|i| unit(dim, i, BigInt::from(n))).collect();
        let gens = (0..dim).map(|i| unit(dim, i, BigInt::from(1))).collect();
        HomSpace::new(dim, lattice, gens)
    }

    /// Subgroup of `(Z/n)^dim` spanned by `gens`.
    pub fn cyclic_subspace(n: u64, dim: usize, gens: Vec<Raw>) -> Self {
        let lattice = (0..dim).map(|i| unit(dim, i, BigInt::from(n))).collect();
        HomSpace::new(dim, lattice, gens)
    }

    /// Direct sum; raw coordinates are concatenated.
    pub fn direct_sum(parts: &[&HomSpace]) -> Self {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let mut lattice = Vec::new();
        let mut gens = Vec::new();
        let mut offset = 0;
        for p in parts {
            let embed = |v: &Raw| {
                let mut w = vec![BigInt::zero(); dim];
                w[offset..offset + p.dim].clone_from_slice(v);
                w
            };
            lattice.extend(p.lattice.iter().map(embed));
            gens.extend(p.gens.iter().map(embed));
            offset += p.dim;
        }
        HomSpace::new(dim, lattice, gens)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.presented.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> &[Raw] {
        &self.lattice
    }

    pub fn spanning_set(&self) -> &[Raw] {
        &self.gens
    }

    /// Raw representatives of the normal-form generators.
    pub fn basis(&self) -> &[Raw] {
        &self.basis
    }

    pub fn zero(&self) -> Raw {
        vec![BigInt::zero(); self.dim]
    }

    fn combine(&self, coeffs: &[BigInt]) -> Raw {
        let mut out = self.zero();
        for (c, g) in coeffs.iter().zip(&self.gens) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(g) {
                *o += c * x;
            }
        }
        out
    }

    fn solve(&self, m: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(m.len(), self.dim, "raw length mismatch");
        let s = &self.solver;
        let ub = s.u.mul_vec(m);
        let mut w = vec![BigInt::zero(); s.v.rows()];
        for (i, y) in ub.iter().enumerate() {
            if i < s.rank {
                let d = &s.d[(i, i)];
                if !(y % d).is_zero() {
                    return None;
                }
                w[i] = y / d;
            } else if !y.is_zero() {
                return None;
            }
        }
        Some(s.v.mul_vec(&w))
    }

    /// Coefficients over the spanning set expressing `m`, if any.
    pub fn combination(&self, m: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut x = self.solve(m)?;
        x.truncate(self.gens.len());
        Some(x)
    }

    /// Coordinates of a raw vector, `None` if it is outside the subgroup.
    pub fn try_coords(&self, m: &[BigInt]) -> Option<GroupElement> {
        let x = self.solve(m)?;
        Some(self.presented.element_of_raw(&x[..self.gens.len()]))
    }

    pub fn coords(&self, m: &[BigInt]) -> GroupElement {
        self.try_coords(m).expect("raw vector lies outside the hom group")
    }

    pub fn contains(&self, m: &[BigInt]) -> bool {
        self.solve(m).is_some()
    }

    pub fn element(&self, x: &GroupElement) -> Raw {
        self.combine(&self.presented.raw_of_element(x))
    }

    /// Canonical raw representative: image of the reduced coordinates.
    pub fn canonical(&self, m: &[BigInt]) -> Raw {
        self.element(&self.coords(m))
    }

    pub fn is_zero(&self, m: &[BigInt]) -> bool {
        self.coords(m).is_zero()
    }

    pub fn equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.is_zero(&raw_sub(a, b))
    }

    pub fn elements(&self) -> Result<Vec<Raw>, AlgebraError> {
        Ok(self.group().enumerate_elements()?.iter().map(|x| self.element(x)).collect())
    }

    pub fn elements_capped(&self, cap: u64) -> Result<Vec<Raw>, AlgebraError> {
        let els = self.group().enumerate_elements_capped(cap)?;
        Ok(els.iter().map(|x| self.element(x)).collect())
    }
}

fn unit(dim: usize, i: usize, x: BigInt) -> Raw {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = x;
    v
}

/// Reduce entries into `[0, n)`.
pub fn raw_mod(n: u64, v: &[BigInt]) -> Raw {
    let m = BigInt::from(n);
    v.iter()
        .map(|x| {
            let r = x % &m;
            if r.is_negative() {
                r + &m
            } else {
                r
            }
        })
        .collect()
}

/// Category whose hom groups are computable abelian groups.
pub trait Preadditive {
    type Obj: Clone + Eq + Ord + Debug;

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> HomSpace;

    /// `g ∘ f` for `f: a → b`, `g: b → c`.
    fn compose(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj, g: &[BigInt], f: &[BigInt]) -> Raw;

    fn identity(&self, a: &Self::Obj) -> Raw;

    fn describe_obj(&self, a: &Self::Obj) -> String {
        format!("{a:?}")
    }

    fn zero_mor(&self, a: &Self::Obj, b: &Self::Obj) -> Raw {
        self.hom(a, b).zero()
    }
}

impl<T: Preadditive + ?Sized> Preadditive for &T {
    type Obj = T::Obj;

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> HomSpace {
        (**self).hom(a, b)
    }

    fn compose(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        (**self).compose(a, b, c, g, f)
    }

    fn identity(&self, a: &Self::Obj) -> Raw {
        (**self).identity(a)
    }

    fn describe_obj(&self, a: &Self::Obj) -> String {
        (**self).describe_obj(a)
    }
}

impl<T: CompCategory + ?Sized> CompCategory for &T {
    fn zero_object(&self) -> Self::Obj {
        (**self).zero_object()
    }

    fn direct_sum(&self, a: &Self::Obj, b: &Self::Obj) -> Biproduct<Self::Obj> {
        (**self).direct_sum(a, b)
    }

    fn window(&self, rank_bound: usize) -> Vec<Self::Obj> {
        (**self).window(rank_bound)
    }

    fn translate_obj(&self, a: &Self::Obj) -> Option<Self::Obj> {
        (**self).translate_obj(a)
    }

    fn translate_mor(&self, a: &Self::Obj, b: &Self::Obj, f: &[BigInt]) -> Option<Raw> {
        (**self).translate_mor(a, b, f)
    }
}

/// Two-sided inverse data for a direct sum.
#[derive(Clone, Debug)]
pub struct Biproduct<O> {
    pub sum: O,
    pub i1: Raw,
    pub i2: Raw,
    pub r1: Raw,
    pub r2: Raw,
}

/// Additive category with an enumerable object window and optional translation.
pub trait CompCategory: Preadditive {
    fn zero_object(&self) -> Self::Obj;

    fn direct_sum(&self, a: &Self::Obj, b: &Self::Obj) -> Biproduct<Self::Obj>;

    /// Objects up to the given size, in a fixed order.
    fn window(&self, rank_bound: usize) -> Vec<Self::Obj>;

    fn translate_obj(&self, _a: &Self::Obj) -> Option<Self::Obj> {
        None
    }

    fn translate_mor(&self, _a: &Self::Obj, _b: &Self::Obj, _f: &[BigInt]) -> Option<Raw> {
        None
    }
}

/// Checks `r1 i1 = id`, `r2 i2 = id`, `r1 i2 = 0`, `r2 i1 = 0`, `i1 r1 + i2 r2 = id`.
pub fn check_biproduct<C: CompCategory>(cat: &C, a: &C::Obj, b: &C::Obj) -> bool {
    let bp = cat.direct_sum(a, b);
    let s = &bp.sum;
    let ok_a = cat.hom(a, a).equal(&cat.compose(a, s, a, &bp.r1, &bp.i1), &cat.identity(a));
    let ok_b = cat.hom(b, b).equal(&cat.compose(b, s, b, &bp.r2, &bp.i2), &cat.identity(b));
    let z12 = cat.hom(b, a).is_zero(&cat.compose(b, s, a, &bp.r1, &bp.i2));
    let z21 = cat.hom(a, b).is_zero(&cat.compose(a, s, b, &bp.r2, &bp.i1));
    let sum = raw_add(&cat.compose(s, a, s, &bp.i1, &bp.r1), &cat.compose(s, b, s, &bp.i2, &bp.r2));
    let ok_s = cat.hom(s, s).equal(&sum, &cat.identity(s));
    ok_a && ok_b && z12 && z21 && ok_s
}

/// Bilinearity and associativity on generator triples `a → b → c → d`.
pub fn check_composition_laws<C: Preadditive>(cat: &C, objs: &[C::Obj]) -> bool {
    for a in objs {
        for b in objs {
            let hab = cat.hom(a, b);
            let id_ok = hab.basis().iter().all(|f| {
                hab.equal(&cat.compose(a, b, b, &cat.identity(b), f), f)
                    && hab.equal(&cat.compose(a, a, b, f, &cat.identity(a)), f)
            });
            if !id_ok {
                return false;
            }
            for c in objs {
                let hbc = cat.hom(b, c);
                let hac = cat.hom(a, c);
                for g in hbc.basis() {
                    for f1 in hab.basis() {
                        for f2 in hab.basis() {
                            let lhs = cat.compose(a, b, c, g, &raw_add(f1, f2));
                            let rhs = raw_add(&cat.compose(a, b, c, g, f1), &cat.compose(a, b, c, g, f2));
                            if !hac.equal(&lhs, &rhs) {
                                return false;
                            }
                        }
                    }
                }
                for d in objs {
                    let hcd = cat.hom(c, d);
                    let had = cat.hom(a, d);
                    for h in hcd.basis() {
                        for g in hbc.basis() {
                            let hg = cat.compose(b, c, d, h, g);
                            for f in hab.basis() {
                                let l = cat.compose(a, b, d, &hg, f);
                                let r = cat.compose(a, c, d, h, &cat.compose(a, b, c, g, f));
                                if !had.equal(&l, &r) {
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

/// Whether `f: a → b` has a two-sided inverse; returns it if so.
pub fn inverse<C: Preadditive>(cat: &C, a: &C::Obj, b: &C::Obj, f: &[BigInt]) -> Option<Raw> {
    let hba = cat.hom(b, a);
    let (haa, hbb) = (cat.hom(a, a), cat.hom(b, b));
    let ida = cat.identity(a);
    let idb = cat.identity(b);
    hba.elements().ok()?.into_iter().find(|g| {
        haa.equal(&cat.compose(a, b, a, g, f), &ida) && hbb.equal(&cat.compose(b, a, b, f, g), &idb)
    })
}

pub fn is_isomorphic<C: Preadditive>(cat: &C, a: &C::Obj, b: &C::Obj) -> bool {
    let hab = cat.hom(a, b);
    match hab.elements() {
        Ok(els) => els.iter().any(|f| inverse(cat, a, b, f).is_some()),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_subspace_coords() {
        let h = HomSpace::cyclic_subspace(4, 2, vec![raw_from_i64(&[2, 2])]);
        assert_eq!(h.group(), &FinAbGroup::cyclic(2));
        assert!(h.contains(&raw_from_i64(&[6, 2])));
        assert!(!h.contains(&raw_from_i64(&[1, 1])));
        assert!(h.is_zero(&raw_from_i64(&[4, 0])));
    }

    #[test]
    fn standard_roundtrip() {
        let g = FinAbGroup::new(vec![BigInt::from(2), BigInt::from(4)], 1).unwrap();
        let h = HomSpace::standard(&g);
        let x = GroupElement::from_i64(&[1, 3, -5]);
        assert_eq!(h.coords(&h.element(&x)), x);
    }

    #[test]
    fn direct_sum_orders() {
        let a = HomSpace::cyclic_power(4, 1);
        let b = HomSpace::cyclic_power(2, 2);
        let s = HomSpace::direct_sum(&[&a, &b]);
        assert_eq!(s.group().order_u64(), Some(16));
    }
}
