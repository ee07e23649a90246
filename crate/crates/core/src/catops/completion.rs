use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::category::{raw_add, Biproduct, CompCategory, HomSpace, Preadditive, Raw};

/// Additive completion: objects are finite tuples of base objects,
/// morphisms are matrices of base morphisms.
#[derive(Clone, Debug)]
pub struct AdditiveCompletion<C: Preadditive> {
    pub base: C,
    /// Base objects used when enumerating windows.
    pub objects: Vec<C::Obj>,
}

impl<C: Preadditive> AdditiveCompletion<C> {
    pub fn new(base: C, objects: Vec<C::Obj>) -> Self {
        AdditiveCompletion { base, objects }
    }

    /// Offsets of each entry `(i, j)` (row `i` over the target) in the raw vector.
    fn layout(&self, a: &[C::Obj], b: &[C::Obj]) -> Vec<(usize, HomSpace)> {
        let mut off = 0;
        let mut out = Vec::with_capacity(a.len() * b.len());
        for bi in b {
            for aj in a {
                let h = self.base.hom(aj, bi);
                let d = h.dim();
                out.push((off, h));
                off += d;
            }
        }
        out
    }

    /// Entry `(i, j)` of a morphism `a → b`.
    pub fn entry(&self, a: &[C::Obj], b: &[C::Obj], f: &[BigInt], i: usize, j: usize) -> Raw {
        let lay = self.layout(a, b);
        let (off, h) = &lay[i * a.len() + j];
        f[*off..off + h.dim()].to_vec()
    }

    /// Morphism from its entries, row-major over `(target, source)`.
    pub fn from_entries(&self, entries: &[Raw]) -> Raw {
        entries.iter().flatten().cloned().collect()
    }
}

impl<C: Preadditive> Preadditive for AdditiveCompletion<C> {
    type Obj = Vec<C::Obj>;

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> HomSpace {
        let lay = self.layout(a, b);
        let parts: Vec<&HomSpace> = lay.iter().map(|(_, h)| h).collect();
        HomSpace::direct_sum(&parts)
    }

    fn compose(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj, g: &[BigInt], f: &[BigInt]) -> Raw {
        let lf = self.layout(a, b);
        let lg = self.layout(b, c);
        let mut out = Vec::new();
        for (i, ci) in c.iter().enumerate() {
            for (k, ak) in a.iter().enumerate() {
                let mut acc = self.base.zero_mor(ak, ci);
                for (j, bj) in b.iter().enumerate() {
                    let (og, hg) = &lg[i * b.len() + j];
                    let (of, hf) = &lf[j * a.len() + k];
                    let gij = &g[*og..og + hg.dim()];
                    let fjk = &f[*of..of + hf.dim()];
                    acc = raw_add(&acc, &self.base.compose(ak, bj, ci, gij, fjk));
                }
                out.extend(acc);
            }
        }
        out
    }

    fn identity(&self, a: &Self::Obj) -> Raw {
        let mut out = Vec::new();
        for (i, ai) in a.iter().enumerate() {
            for (j, aj) in a.iter().enumerate() {
                if i == j {
                    out.extend(self.base.identity(ai));
                } else {
                    out.extend(self.base.zero_mor(aj, ai));
                }
            }
        }
        out
    }

    fn describe_obj(&self, a: &Self::Obj) -> String {
        let parts: Vec<String> = a.iter().map(|x| self.base.describe_obj(x)).collect();
        format!("({})", parts.join(","))
    }
}

impl<C: Preadditive> CompCategory for AdditiveCompletion<C> {
    fn zero_object(&self) -> Self::Obj {
        Vec::new()
    }

    fn direct_sum(&self, a: &Self::Obj, b: &Self::Obj) -> Biproduct<Self::Obj> {
        let mut sum = a.clone();
        sum.extend(b.iter().cloned());
        let block = |rows: &[C::Obj], cols: &[C::Obj], row_off: usize, col_off: usize| -> Raw {
            let mut out = Vec::new();
            for (i, ri) in rows.iter().enumerate() {
                for (j, cj) in cols.iter().enumerate() {
                    let h = self.base.hom(cj, ri);
                    if row_off + i == col_off + j {
                        out.extend(self.base.identity(ri));
                    } else {
                        out.extend(h.zero());
                    }
                }
            }
            out
        };
        let i1 = block(&sum, a, 0, 0);
        let i2 = block(&sum, b, 0, a.len());
        let r1 = block(a, &sum, 0, 0);
        let r2 = block(b, &sum, a.len(), 0);
        Biproduct { sum, i1, i2, r1, r2 }
    }

    fn window(&self, rank_bound: usize) -> Vec<Self::Obj> {
        let mut out: Vec<Vec<C::Obj>> = Vec::new();
        let mut layer: Vec<Vec<C::Obj>> = alloc::vec![Vec::new()];
        for _ in 0..=rank_bound {
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for t in &layer {
                for o in &self.objects {
                    let mut u = t.clone();
                    u.push(o.clone());
                    next.push(u);
                }
            }
            layer = next;
        }
        out
    }
}

/// Scalar multiple of the identity.
pub fn scalar_identity<C: Preadditive>(cat: &C, a: &C::Obj, k: i64) -> Raw {
    let id = cat.identity(a);
    super::category::raw_scale(&BigInt::from(k), &id)
}
