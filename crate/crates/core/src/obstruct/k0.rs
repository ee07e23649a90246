use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::ObstructError;
use crate::abgrp::{group_from_presentation, FinAbGroup, IntMatrix};
use crate::muro::{arrow, cone, span_elements, span_order_log2, Triangles0, Z4Mat};

/// One relation among the rank classes `[0], ..., [bound]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum K0Relation {
    /// `[0] = 0`.
    Zero,
    /// `[X] = [Y]` for isomorphic `X, Y`.
    Iso { x: usize, y: usize },
    /// `[X] + [Y'] = [X'] + [Y]` from an excising morphism between the
    /// triangles of `f: X → Y` and `f': X' → Y'`.
    Excision { f: Z4Mat, f2: Z4Mat, c: Z4Mat },
}

impl K0Relation {
    pub fn row(&self, bound: usize) -> Vec<i64> {
        let mut r = vec![0i64; bound + 1];
        match self {
            K0Relation::Zero => r[0] = 1,
            K0Relation::Iso { x, y } => {
                r[*x] += 1;
                r[*y] -= 1;
            }
            K0Relation::Excision { f, f2, .. } => {
                r[f.cols()] += 1;
                r[f2.rows()] += 1;
                r[f2.cols()] -= 1;
                r[f.rows()] -= 1;
            }
        }
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K0Presentation {
    pub rank_bound: usize,
    pub search_bound: u64,
    /// Generator `i` is the class of `(Z/4)^i`.
    pub generators: Vec<usize>,
    pub relations: Vec<K0Relation>,
    /// Pairs of triangles whose cone-component span exceeded `search_bound`.
    pub skipped_pairs: u64,
    pub group: FinAbGroup,
}

/// `diag(1, .., 1, 2, .., 2, 0, ..)` of shape `rows × cols`.
fn diagonal_rep(rows: usize, cols: usize, ones: usize, twos: usize) -> Z4Mat {
    Z4Mat::from_fn(rows, cols, |i, j| match i == j {
        true if i < ones => 1,
        true if i < ones + twos => 2,
        _ => 0,
    })
}

/// Normal forms of all morphisms between objects of rank at most `bound`.
pub fn representatives(bound: usize) -> Vec<Z4Mat> {
    let mut out = Vec::new();
    for rows in 0..=bound {
        for cols in 0..=bound {
            let m = rows.min(cols);
            for ones in 0..=m {
                for twos in 0..=m - ones {
                    out.push(diagonal_rep(rows, cols, ones, twos));
                }
            }
        }
    }
    out
}

/// An excising morphism `[f] → [f']` in `Triangles₀`, if its cone
/// component span is within `search_bound`; `Err(())` when skipped.
fn find_excising(f: &Z4Mat, f2: &Z4Mat, search_bound: u64) -> Result<Option<Z4Mat>, ()> {
    let t = Triangles0;
    let (af, ag) = (arrow(f), arrow(f2));
    let (cf, cg) = (t.triangle(&af).cone_rank(), t.triangle(&ag).cone_rank());
    if cf != cg {
        return Ok(None);
    }
    let n = cf * cg;
    let gens: Vec<Vec<u8>> = t.hom_gens(&af, &ag).iter().map(|g| g[g.len() - n..].to_vec()).collect();
    let log = span_order_log2(n, &gens);
    if log >= 64 || (1u64 << log) > search_bound {
        return Err(());
    }
    Ok(span_elements(n, &gens)
        .into_iter()
        .map(|c| Z4Mat::from_fn(cg, cf, |i, j| c[i * cf + j] as i64))
        .find(Z4Mat::is_invertible))
}

/// `K₀` of Muro's `F(Z/4)` on ranks `0..=rank_bound`.
pub fn k0_muro(rank_bound: usize, search_bound: u64) -> Result<K0Presentation, ObstructError> {
    let mut relations = vec![K0Relation::Zero];
    // distinct ranks are never isomorphic; the reflexive instances are trivial
    relations.extend((0..=rank_bound).map(|x| K0Relation::Iso { x, y: x }));
    let reps = representatives(rank_bound);
    for f in &reps {
        let t = cone(f);
        let r = t.cone_rank();
        if r <= rank_bound {
            // (0, u_f, 1): [f] → !_{C_f}
            relations.push(K0Relation::Excision { f: f.clone(), f2: Z4Mat::zeros(r, 0), c: Z4Mat::identity(r) });
        }
    }
    let mut skipped = 0u64;
    for f in &reps {
        for f2 in &reps {
            if f == f2 {
                continue;
            }
            match find_excising(f, f2, search_bound) {
                Ok(Some(c)) => relations.push(K0Relation::Excision { f: f.clone(), f2: f2.clone(), c }),
                Ok(None) => {}
                Err(()) => skipped += 1,
            }
        }
    }
    relations.sort();
    relations.dedup();
    let rows: Vec<Vec<i64>> = relations.iter().map(|r| r.row(rank_bound)).collect();
    let group = group_from_presentation(&IntMatrix::from_rows(&rows)).group;
    Ok(K0Presentation {
        rank_bound,
        search_bound,
        generators: (0..=rank_bound).collect(),
        relations,
        skipped_pairs: skipped,
        group,
    })
}
