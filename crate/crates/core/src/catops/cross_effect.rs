use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::category::{CompCategory, HomSpace, Preadditive, Raw};
use crate::abgrp::{FinAbGroup, GroupMor};

/// A functor `C → Ab` evaluated on objects and morphisms.
pub trait GroupFunctor<C: Preadditive> {
    fn value(&self, cat: &C, x: &C::Obj) -> HomSpace;

    /// `F(f)(v)` for `f: x → y`.
    fn map(&self, cat: &C, x: &C::Obj, y: &C::Obj, f: &[BigInt], v: &[BigInt]) -> Raw;

    fn map_mor(&self, cat: &C, x: &C::Obj, y: &C::Obj, f: &[BigInt]) -> GroupMor {
        let (hx, hy) = (self.value(cat, x), self.value(cat, y));
        let cols: Vec<Vec<BigInt>> = hx.basis().iter().map(|v| hy.coords(&self.map(cat, x, y, f, v)).0).collect();
        GroupMor::from_columns(hx.group().clone(), hy.group().clone(), &cols)
    }
}

/// `hom(A, −)`.
#[derive(Clone, Debug)]
pub struct HomFunctor<O>(pub O);

impl<C: Preadditive> GroupFunctor<C> for HomFunctor<C::Obj> {
    fn value(&self, cat: &C, x: &C::Obj) -> HomSpace {
        cat.hom(&self.0, x)
    }

    fn map(&self, cat: &C, x: &C::Obj, y: &C::Obj, f: &[BigInt], v: &[BigInt]) -> Raw {
        cat.compose(&self.0, x, y, f, v)
    }
}

/// `X ↦ F(X) ⊗ F(X)` for a functor `F`, in normal-form coordinates.
#[derive(Clone, Debug)]
pub struct TensorSquare<F>(pub F);

fn tensor_space(g: &FinAbGroup) -> HomSpace {
    let n = g.ngens();
    let dim = n * n;
    let mut lattice = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let d = g.modulus(i).gcd(&g.modulus(j));
            if !d.is_zero() {
                let mut v = vec![BigInt::zero(); dim];
                v[i * n + j] = d;
                lattice.push(v);
            }
        }
    }
    let gens = (0..dim)
        .map(|k| {
            let mut v = vec![BigInt::zero(); dim];
            v[k] = BigInt::from(1);
            v
        })
        .collect();
    HomSpace::new(dim, lattice, gens)
}

impl<C: Preadditive, F: GroupFunctor<C>> GroupFunctor<C> for TensorSquare<F> {
    fn value(&self, cat: &C, x: &C::Obj) -> HomSpace {
        tensor_space(self.0.value(cat, x).group())
    }

    fn map(&self, cat: &C, x: &C::Obj, y: &C::Obj, f: &[BigInt], v: &[BigInt]) -> Raw {
        let m = self.0.map_mor(cat, x, y, f);
        let (nx, ny) = (m.source().ngens(), m.target().ngens());
        let mut out = vec![BigInt::zero(); ny * ny];
        for i in 0..nx {
            for j in 0..nx {
                let c = &v[i * nx + j];
                if c.is_zero() {
                    continue;
                }
                for k in 0..ny {
                    for l in 0..ny {
                        out[k * ny + l] += c * &m.matrix()[(k, i)] * &m.matrix()[(l, j)];
                    }
                }
            }
        }
        out
    }
}

/// `cr₂(F)(X₁, X₂) = Ker(F(X₁ ⊕ X₂) → F(X₁) ⊕ F(X₂))`.
pub fn cross_effect2<C: CompCategory, F: GroupFunctor<C>>(cat: &C, func: &F, x1: &C::Obj, x2: &C::Obj) -> FinAbGroup {
    let bp = cat.direct_sum(x1, x2);
    let fs = func.value(cat, &bp.sum);
    let (f1, f2) = (func.value(cat, x1), func.value(cat, x2));
    let target = HomSpace::direct_sum(&[&f1, &f2]);
    let cols: Vec<Vec<BigInt>> = fs
        .basis()
        .iter()
        .map(|v| {
            let mut w = func.map(cat, &bp.sum, x1, &bp.r1, v);
            w.extend(func.map(cat, &bp.sum, x2, &bp.r2, v));
            target.coords(&w).0
        })
        .collect();
    let m = GroupMor::from_columns(fs.group().clone(), target.group().clone(), &cols);
    m.kernel().group
}
