use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::compute::PresentedCategory;
use super::presentation::{Path, QuiverPresentation};
use super::PresError;
use crate::abgrp::{GroupElement, GroupMor};
use crate::catops::{raw_add, raw_scale, Preadditive, Raw};

/// A functor out of a presentation: where objects go, and where each
/// generating arrow goes (raw coordinates in the target hom group).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData<O> {
    pub object_map: Vec<O>,
    pub arrow_map: Vec<Raw>,
}

impl FunctorData<usize> {
    /// Identity-on-objects quotient functor between two computed
    /// presentations sharing their arrows.
    pub fn quotient_map(src: &PresentedCategory, dst: &PresentedCategory) -> Self {
        let object_map = (0..src.object_count()).collect();
        let arrow_map = (0..src.presentation.arrows.len()).map(|a| dst.arrow_element(a).0.clone()).collect();
        FunctorData { object_map, arrow_map }
    }
}

/// Image of a path under the assignment.
pub fn eval_path<D: Preadditive>(p: &QuiverPresentation, f: &FunctorData<D::Obj>, dst: &D, path: &Path) -> Raw {
    let start = &f.object_map[path.src];
    let mut acc = dst.identity(start);
    let mut cur = path.src;
    for &a in path.arrows.iter().rev() {
        let arrow = &p.arrows[a];
        acc = dst.compose(start, &f.object_map[cur], &f.object_map[arrow.dst], &f.arrow_map[a], &acc);
        cur = arrow.dst;
    }
    acc
}

fn eval_combo<D: Preadditive>(
    p: &QuiverPresentation,
    f: &FunctorData<D::Obj>,
    dst: &D,
    terms: &[(BigInt, Path)],
) -> Raw {
    let (x, y) = (&f.object_map[terms[0].1.src], &f.object_map[terms[0].1.dst]);
    let mut acc = dst.zero_mor(x, y);
    for (c, path) in terms {
        acc = raw_add(&acc, &raw_scale(c, &eval_path(p, f, dst, path)));
    }
    acc
}

/// Arrows land in the right hom groups, every relation and the torsion
/// bound evaluate to zero.
pub fn check_functor<D: Preadditive>(p: &QuiverPresentation, f: &FunctorData<D::Obj>, dst: &D) -> bool {
    if f.object_map.len() != p.objects.len() || f.arrow_map.len() != p.arrows.len() {
        return false;
    }
    for (a, arrow) in p.arrows.iter().enumerate() {
        let h = dst.hom(&f.object_map[arrow.src], &f.object_map[arrow.dst]);
        if f.arrow_map[a].len() != h.dim() || !h.contains(&f.arrow_map[a]) {
            return false;
        }
        if let Some(n) = p.torsion {
            if !h.is_zero(&raw_scale(&BigInt::from(n), &f.arrow_map[a])) {
                return false;
            }
        }
    }
    if let Some(n) = p.torsion {
        for x in &f.object_map {
            if !dst.hom(x, x).is_zero(&raw_scale(&BigInt::from(n), &dst.identity(x))) {
                return false;
            }
        }
    }
    p.relations.iter().all(|r| {
        let (s, t) = r.endpoints().expect("validated");
        let v = eval_combo(p, f, dst, &r.terms);
        dst.hom(&f.object_map[s], &f.object_map[t]).is_zero(&v)
    })
}

/// Relations that fail, by index; empty iff the relation part of
/// `check_functor` passes.
pub fn failing_relations<D: Preadditive>(p: &QuiverPresentation, f: &FunctorData<D::Obj>, dst: &D) -> Vec<usize> {
    (0..p.relations.len())
        .filter(|&i| {
            let r = &p.relations[i];
            let (s, t) = r.endpoints().expect("validated");
            let v = eval_combo(p, f, dst, &r.terms);
            !dst.hom(&f.object_map[s], &f.object_map[t]).is_zero(&v)
        })
        .collect()
}

/// The induced map `hom_src(x, y) → hom_dst(F x, F y)` on normal-form coordinates.
pub fn functor_hom_map<D: Preadditive>(
    src: &PresentedCategory,
    f: &FunctorData<D::Obj>,
    dst: &D,
    x: usize,
    y: usize,
) -> GroupMor {
    let h = dst.hom(&f.object_map[x], &f.object_map[y]);
    let entry = src.entry(x, y);
    let cols: Vec<Vec<BigInt>> = entry
        .generators
        .iter()
        .map(|combo| {
            let v = if combo.is_empty() {
                h.zero()
            } else {
                eval_combo(&src.presentation, f, dst, combo)
            };
            h.coords(&v).0
        })
        .collect();
    GroupMor::from_columns(entry.group.clone(), h.group().clone(), &cols)
}

/// Result of an exhaustive section search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectionOutcome {
    Section { arrow_map: Vec<Raw>, space_size: u64, visited: u64 },
    NoSection { space_size: u64, visited: u64, candidates_per_arrow: Vec<u64> },
}

impl SectionOutcome {
    pub fn has_section(&self) -> bool {
        matches!(self, SectionOutcome::Section { .. })
    }

    pub fn space_size(&self) -> u64 {
        match self {
            SectionOutcome::Section { space_size, .. } | SectionOutcome::NoSection { space_size, .. } => *space_size,
        }
    }
}

pub const DEFAULT_SEARCH_CAP: u64 = 100_000_000;

/// Searches for `s: base → total` with `proj ∘ s = id`, where the base is
/// given by a presentation whose arrows are realised as `base_arrows` in
/// `base`, and `proj(x, y, m)` maps a total morphism to the base.
pub struct SectionProblem<'a, B: Preadditive, T: Preadditive> {
    pub presentation: &'a QuiverPresentation,
    pub base: &'a B,
    pub base_objects: Vec<B::Obj>,
    pub base_arrows: Vec<Raw>,
    pub total: &'a T,
    pub total_objects: Vec<T::Obj>,
    pub proj: &'a dyn Fn(&T::Obj, &T::Obj, &[BigInt]) -> Raw,
}

impl<B: Preadditive, T: Preadditive> SectionProblem<'_, B, T> {
    /// Preimage coset of each generating arrow, in lexicographic order.
    fn candidates(&self) -> Result<Vec<Vec<Raw>>, PresError> {
        let p = self.presentation;
        let mut out = Vec::with_capacity(p.arrows.len());
        for (a, arrow) in p.arrows.iter().enumerate() {
            let (tx, ty) = (&self.total_objects[arrow.src], &self.total_objects[arrow.dst]);
            let (bx, by) = (&self.base_objects[arrow.src], &self.base_objects[arrow.dst]);
            let ht = self.total.hom(tx, ty);
            let hb = self.base.hom(bx, by);
            let cols: Vec<Vec<BigInt>> =
                ht.basis().iter().map(|m| hb.coords(&(self.proj)(tx, ty, m)).0).collect();
            let pm = GroupMor::from_columns(ht.group().clone(), hb.group().clone(), &cols);
            let target = hb.coords(&self.base_arrows[a]);
            let Some(x0) = pm.preimage(&target) else {
                out.push(Vec::new());
                continue;
            };
            let ker = pm.kernel();
            let ks = ker.group.enumerate_elements().map_err(PresError::Algebra)?;
            let mut cands: Vec<GroupElement> =
                ks.iter().map(|k| ht.group().add(&x0, &ker.map.apply(k))).collect();
            cands.sort();
            cands.dedup();
            out.push(cands.iter().map(|c| ht.element(c)).collect());
        }
        Ok(out)
    }

    pub fn solve(&self, cap: u64) -> Result<SectionOutcome, PresError> {
        let cands = self.candidates()?;
        let sizes: Vec<u64> = cands.iter().map(|c| c.len() as u64).collect();
        let space = sizes.iter().try_fold(1u64, |acc, &s| acc.checked_mul(s));
        let space_size = match space {
            Some(s) if s <= cap => s,
            _ => return Err(PresError::SearchBudgetExceeded { cap }),
        };
        let p = self.presentation;
        // a relation becomes checkable once its largest arrow is assigned
        let mut ready: Vec<Vec<usize>> = vec![Vec::new(); p.arrows.len() + 1];
        for (ri, r) in p.relations.iter().enumerate() {
            let last = r.terms.iter().flat_map(|(_, q)| q.arrows.iter()).max().map_or(0, |&a| a + 1);
            ready[last].push(ri);
        }
        let mut f = FunctorData { object_map: self.total_objects.clone(), arrow_map: vec![Vec::new(); p.arrows.len()] };
        let mut visited = 0u64;
        let ok_here = |f: &FunctorData<T::Obj>, k: usize| {
            ready[k].iter().all(|&ri| {
                let r = &p.relations[ri];
                let (s, t) = r.endpoints().expect("validated");
                let v = eval_combo(p, f, self.total, &r.terms);
                self.total.hom(&f.object_map[s], &f.object_map[t]).is_zero(&v)
            })
        };
        if !ok_here(&f, 0) || sizes.contains(&0) {
            return Ok(SectionOutcome::NoSection { space_size, visited, candidates_per_arrow: sizes });
        }
        let n = p.arrows.len();
        let mut idx = vec![0usize; n];
        let mut depth = 0usize;
        loop {
            if depth == n {
                if check_functor(p, &f, self.total) {
                    return Ok(SectionOutcome::Section { arrow_map: f.arrow_map, space_size, visited });
                }
                depth -= 1;
                idx[depth] += 1;
                continue;
            }
            if idx[depth] >= cands[depth].len() {
                if depth == 0 {
                    break;
                }
                idx[depth] = 0;
                depth -= 1;
                idx[depth] += 1;
                continue;
            }
            f.arrow_map[depth] = cands[depth][idx[depth]].clone();
            visited += 1;
            if ok_here(&f, depth + 1) {
                depth += 1;
                if depth < n {
                    idx[depth] = 0;
                }
            } else {
                idx[depth] += 1;
            }
        }
        Ok(SectionOutcome::NoSection { space_size, visited, candidates_per_arrow: sizes })
    }
}

/// Section search for an identity-on-objects functor between computed
/// presentations (e.g. the quotient maps `R₁ → R₂`, `R → R₂`).
pub fn section_search(
    f: &FunctorData<usize>,
    src: &PresentedCategory,
    dst: &PresentedCategory,
    cap: u64,
) -> Result<SectionOutcome, PresError> {
    let proj = |x: &usize, y: &usize, m: &[BigInt]| -> Raw {
        let hm = functor_hom_map(src, f, dst, *x, *y);
        hm.apply(&src.hom_group(*x, *y).reduce(m)).0
    };
    let problem = SectionProblem {
        presentation: &dst.presentation,
        base: dst,
        base_objects: (0..dst.object_count()).collect(),
        base_arrows: (0..dst.presentation.arrows.len()).map(|a| dst.arrow_element(a).0.clone()).collect(),
        total: src,
        total_objects: f.object_map.clone(),
        proj: &proj,
    };
    problem.solve(cap)
}
