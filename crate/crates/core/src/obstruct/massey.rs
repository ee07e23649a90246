use alloc::vec::Vec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::extension::{triangles_extension, Extension};
use super::ObstructError;
use crate::abgrp::{FinAbGroup, GroupElement};
use crate::catops::{HomSpace, Preadditive, Raw};
use crate::muro::{base_arrows, cone, Z4Mat};

/// Lift pairs beyond this are checked through the square-zero identity
/// `(w₀ + k')(x₀ + k) = w₀x₀ + w₀k + k'x₀` instead of one by one.
pub const EXHAUSTIVE_LIFT_CAP: u64 = 1 << 16;

/// `{h, g, f}` as a coset in the kernel group `D(P, R)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MasseyResult {
    /// The group the products live in.
    pub ambient: FinAbGroup,
    pub representative: GroupElement,
    /// Indeterminacy `w₀ · D(P, Q) + D(Q, R) · x₀`, as a subgroup of `ambient`.
    pub denominator: FinAbGroup,
    /// Coset members, raw total coordinates, sorted.
    pub coset: Vec<Raw>,
    pub lifts_checked: u64,
    pub exhaustive: bool,
    pub consistent: bool,
}

/// All lifts of `m` to `hom_T(a, b)`.
fn lifts<E: Extension>(ext: &E, a: &E::Obj, b: &E::Obj, m: &[BigInt]) -> Result<(Raw, Vec<Raw>, Vec<Raw>), ObstructError> {
    let x0 = ext.lift(a, b, m).ok_or(ObstructError::NoLift)?;
    let ks = ext.kernel_gens(a, b);
    let ht = ext.total().hom(a, b);
    let ker = HomSpace::new(ht.dim(), ht.lattice().to_vec(), ks.clone());
    let all = ker
        .elements_capped(EXHAUSTIVE_LIFT_CAP)
        .map(|els| els.iter().map(|k| ht.canonical(&crate::catops::raw_add(&x0, k))).collect())
        .unwrap_or_default();
    Ok((x0, ks, all))
}

/// The Massey product of `P --m1--> Q --m2--> R` in the base, via lifts
/// `x` of `m1` and `w` of `m2` with `p(wx) = 0`.
pub fn massey<E: Extension>(
    ext: &E,
    (p, q, r): (&E::Obj, &E::Obj, &E::Obj),
    m1: &[BigInt],
    m2: &[BigInt],
) -> Result<MasseyResult, ObstructError> {
    let base = ext.base();
    if !base.hom(p, r).is_zero(&base.compose(p, q, r, m2, m1)) {
        return Err(ObstructError::CompositeNotZero);
    }
    let t = ext.total();
    let (x0, k1, xs) = lifts(ext, p, q, m1)?;
    let (w0, k2, ws) = lifts(ext, q, r, m2)?;
    let hpr = t.hom(p, r);
    let mut denom: Vec<Raw> = k1.iter().map(|k| t.compose(p, q, r, &w0, k)).collect();
    denom.extend(k2.iter().map(|k| t.compose(p, q, r, k, &x0)));
    let kernel = HomSpace::new(hpr.dim(), hpr.lattice().to_vec(), ext.kernel_gens(p, r));
    let mut lattice = hpr.lattice().to_vec();
    lattice.extend(denom.iter().cloned());
    let quotient = HomSpace::new(hpr.dim(), lattice, ext.kernel_gens(p, r));
    let wx0 = t.compose(p, q, r, &w0, &x0);
    if !kernel.contains(&wx0) {
        return Err(ObstructError::CompositeNotZero);
    }
    let class = quotient.coords(&wx0);
    let pairs = (xs.len() as u64) * (ws.len() as u64);
    let exhaustive = !xs.is_empty() && !ws.is_empty() && pairs <= EXHAUSTIVE_LIFT_CAP;
    let mut consistent = true;
    let mut checked = 0u64;
    if exhaustive {
        for x in &xs {
            for w in &ws {
                checked += 1;
                let wx = t.compose(p, q, r, w, x);
                if !kernel.contains(&wx) || quotient.coords(&wx) != class {
                    consistent = false;
                }
            }
        }
    } else {
        // generator-level argument: k' k = 0 for kernel elements
        for a in &k2 {
            for b in &k1 {
                checked += 1;
                if !hpr.is_zero(&t.compose(p, q, r, a, b)) {
                    consistent = false;
                }
            }
        }
    }
    let dspace = HomSpace::new(hpr.dim(), hpr.lattice().to_vec(), denom);
    let mut coset: Vec<Raw> = dspace
        .elements()
        .map_err(ObstructError::Algebra)?
        .iter()
        .map(|d| hpr.canonical(&crate::catops::raw_add(&wx0, d)))
        .collect();
    coset.sort();
    coset.dedup();
    Ok(MasseyResult {
        ambient: kernel.group().clone(),
        representative: kernel.coords(&wx0),
        denominator: dspace.group().clone(),
        coset,
        lifts_checked: checked,
        exhaustive,
        consistent,
    })
}

/// `{h, g, f}` in Muro's `F(Z/4)` through `Triangles₀`, as a coset of maps `X → W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuroMassey {
    pub f: Z4Mat,
    pub g: Z4Mat,
    pub h: Z4Mat,
    pub coset: Vec<Z4Mat>,
    pub contains_identity: bool,
    pub result: MasseyResult,
}

pub fn massey_muro(f: &Z4Mat, g: &Z4Mat, h: &Z4Mat) -> Result<MuroMassey, ObstructError> {
    if f.rows() != g.cols() || g.rows() != h.cols() {
        return Err(ObstructError::ShapeMismatch);
    }
    if !g.mul(f).is_zero() || !h.mul(g).is_zero() {
        return Err(ObstructError::CompositeNotZero);
    }
    let arrows = base_arrows();
    let (x, w) = (f.cols(), h.rows());
    let p = arrows.cobang(&x);
    let q = crate::muro::arrow(g);
    let r = arrows.bang(&w);
    let ext = triangles_extension();
    let result = massey(&ext, (&p, &q, &r), &f.to_raw(), &h.to_raw())?;
    // (0, 0, c) with c: X → W
    let coset: Vec<Z4Mat> = result.coset.iter().map(|m| Z4Mat::from_raw(w, x, &m[m.len() - w * x..])).collect();
    let contains_identity = x == w && coset.contains(&Z4Mat::identity(x));
    Ok(MuroMassey { f: f.clone(), g: g.clone(), h: h.clone(), coset, contains_identity, result })
}

/// `id_{A[1]} ∈ {v_f, u_f, f}`.
pub fn massey_condition(f: &Z4Mat) -> Result<bool, ObstructError> {
    let t = cone(f);
    Ok(massey_muro(f, &t.u, &t.v)?.contains_identity)
}

/// `{h, g, f}` computed again in the pushforward `Ptr₁` of `Triangles₀` along `Θ → Θ₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushforwardMassey {
    pub original: MuroMassey,
    pub pushed: MasseyResult,
    /// The comparison `Triangles₀ → Ptr₁` carries the original coset into the new one.
    pub compatible: bool,
    /// The two cosets correspond bijectively, as they must under a domination.
    pub equal: bool,
}

pub fn massey_muro_r1(f: &Z4Mat, g: &Z4Mat, h: &Z4Mat) -> Result<PushforwardMassey, ObstructError> {
    let original = massey_muro(f, g, h)?;
    let ext = triangles_extension();
    let e1 = super::pushforward::pushforward(&ext, super::pushforward::Theta1Literal, super::pushforward::theta1_quotient);
    let arrows = base_arrows();
    let (p, q, r) = (arrows.cobang(&f.cols()), crate::muro::arrow(g), arrows.bang(&h.rows()));
    let pushed = massey(&e1, (&p, &q, &r), &f.to_raw(), &h.to_raw())?;
    let hom = e1.hom(&p, &r);
    let compatible =
        original.result.coset.iter().all(|m| pushed.coset.contains(&hom.canonical(&e1.comparison(&p, &r, m))));
    let equal = compatible && pushed.coset.len() == original.coset.len();
    Ok(PushforwardMassey { original, pushed, compatible, equal })
}
